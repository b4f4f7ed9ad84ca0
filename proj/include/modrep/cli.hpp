#pragma once

#include "modrep/module.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace modrep {

/// Parsed text such as "Z2^3 + Z9".
struct ModuleSpec {
  std::string source;
  /// Cyclic orders as written, powers expanded: [2, 2, 2, 9].
  std::vector<Int> factors;
  /// Normalized to invariant factors: [2, 2, 18].
  FinModule module;
};

/// spec := term ("+" term)*, term := "Z" INT ("^" INT)?. Whitespace is
/// ignored. Throws ParseError (with the offending position) on bad syntax or a
/// modulus below 2, ValidationError when the order is too large.
ModuleSpec parseSpec(const std::string& text);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceCap = 3;
}  // namespace exit_code

/// Runs one command line (args excludes the program name). Returns the exit
/// code; output goes to `out`, diagnostics to `err`.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modrep
