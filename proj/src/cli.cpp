#include "modrep/cli.hpp"

#include "modrep/errors.hpp"
#include "modrep/second.hpp"
#include "modrep/serialize.hpp"
#include "modrep/structure.hpp"
#include "modrep/theorem_lab.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

namespace modrep {

using nlohmann::json;

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  std::vector<Int> parse() {
    std::vector<Int> factors;
    skipSpace();
    if (pos_ == text_.size()) throw ParseError("empty module spec", pos_);
    while (true) {
      term(factors);
      skipSpace();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
    }
    return factors;
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Int integer() {
    skipSpace();
    const std::size_t start = pos_;
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected an integer", pos_);
    }
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<Int>::max() - digit) / 10) throw ParseError("integer too large", start);
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void term(std::vector<Int>& factors) {
    skipSpace();
    if (pos_ == text_.size() || text_[pos_] != 'Z') throw ParseError("expected 'Z'", pos_);
    ++pos_;
    skipSpace();
    const std::size_t modulus_pos = pos_;
    const Int modulus = integer();
    if (modulus < 2) throw ParseError("modulus must be at least 2", modulus_pos);
    Int power = 1;
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skipSpace();
      const std::size_t power_pos = pos_;
      power = integer();
      if (power < 1) throw ParseError("exponent must be at least 1", power_pos);
      if (power > 64) throw ValidationError("module order exceeds the supported range");
    }
    for (Int i = 0; i < power; ++i) factors.push_back(modulus);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

struct Common {
  bool json = false;
  std::uint64_t max_submodules = LatticeOptions{}.max_submodules;
  std::string spec;

  LatticeOptions lattice() const { return LatticeOptions{max_submodules}; }
};

void addCommon(CLI::App* cmd, Common& c, bool with_spec) {
  cmd->add_flag("--json", c.json, "Machine-readable output");
  cmd->add_option("--max-submodules", c.max_submodules, "Refuse lattices larger than this")
      ->check(CLI::PositiveNumber);
  if (with_spec) cmd->add_option("spec", c.spec, "Module, e.g. \"Z2^2 + Z9\"")->required();
}

std::string primesText(const std::vector<PrimeIdeal>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + std::to_string(ps[i].p());
  return s + "}";
}

void printJson(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmdLattice(const Common& c, std::ostream& out) {
  const auto spec = parseSpec(c.spec);
  const auto subs = enumerateSubmodules(spec.module, c.lattice());
  if (c.json) {
    json list = json::array();
    for (const auto& s : subs) list.push_back(toJson(s));
    printJson(out, {{"module", toJson(spec.module)}, {"count", subs.size()}, {"submodules", list}});
    return exit_code::kOk;
  }
  out << spec.module.toString() << ": " << subs.size() << " submodules\n";
  for (const auto& s : subs) {
    out << "  " << toString(s) << "  order " << s.order() << "  annihilator " << annihilatorOf(s).generator << "\n";
  }
  return exit_code::kOk;
}

int cmdSpecS(const Common& c, std::ostream& out) {
  const auto spec = parseSpec(c.spec);
  const auto seconds = specSecond(spec.module, c.lattice());
  if (c.json) {
    json list = json::array();
    for (const auto& s : seconds) {
      auto j = toJson(s);
      j["prime"] = isSecond(s)->p();
      list.push_back(std::move(j));
    }
    printJson(out, {{"module", toJson(spec.module)}, {"second_submodules", list}});
    return exit_code::kOk;
  }
  out << "second submodules of " << spec.module.toString() << ": " << seconds.size() << "\n";
  for (const auto& s : seconds) out << "  " << toString(s) << "  prime " << isSecond(s)->p() << "\n";
  return exit_code::kOk;
}

int cmdAtt(const Common& c, std::ostream& out) {
  const auto spec = parseSpec(c.spec);
  const auto r = attAll(spec.module, c.lattice());
  if (c.json) {
    printJson(out, {{"module", toJson(spec.module)}, {"att", toJson(r)}});
    return exit_code::kOk;
  }
  out << "module:   " << spec.module.toString() << "\n"
      << "Att^s:    " << primesText(r.att_all) << "\n"
      << "att^s:    " << primesText(r.att_main) << (r.att_main.empty() ? "  (not second representable)" : "") << "\n"
      << "Min Att:  " << primesText(r.min_all) << "  Max Att: " << primesText(r.max_all) << "\n"
      << "Min att:  " << primesText(r.min_main) << "  Max att: " << primesText(r.max_main) << "\n";
  return exit_code::kOk;
}

void printRepresentation(std::ostream& out, const Representation& r) {
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    out << "  " << toString(r.summands[i]) << "  prime " << r.attached[i].p() << "  order " << r.summands[i].order()
        << "\n";
  }
  out << "  attached " << primesText(r.attached) << (r.is_minimal ? "  minimal" : "")
      << (r.is_direct ? "  direct" : "") << "\n";
}

int cmdRep(const Common& c, const std::string& kind_name, bool all_minimal, std::size_t cap, std::ostream& out) {
  const auto spec = parseSpec(c.spec);
  const RepKind kind = kind_name == "second" ? RepKind::Second : RepKind::Secondary;
  if (all_minimal) {
    const auto reps = allMinimalRepresentations(spec.module, kind, SecondOptions{c.lattice(), cap});
    if (c.json) {
      json list = json::array();
      for (const auto& r : reps) list.push_back(toJson(r));
      printJson(out, {{"module", toJson(spec.module)}, {"kind", kind_name}, {"representations", list}});
      return exit_code::kOk;
    }
    out << reps.size() << " minimal " << kind_name << " representation(s) of " << spec.module.toString() << "\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out << "#" << (i + 1) << "\n";
      printRepresentation(out, reps[i]);
    }
    return exit_code::kOk;
  }
  const auto rep = findRepresentation(spec.module, kind, c.lattice());
  if (c.json) {
    printJson(out, {{"module", toJson(spec.module)}, {"kind", kind_name}, {"representation", rep ? toJson(*rep) : json(nullptr)}});
    return exit_code::kOk;
  }
  if (!rep) {
    out << spec.module.toString() << " has no " << kind_name << " representation\n";
    return exit_code::kOk;
  }
  out << kind_name << " representation of " << spec.module.toString() << ":\n";
  printRepresentation(out, *rep);
  return exit_code::kOk;
}

int cmdClassify(const Common& c, std::ostream& out) {
  const auto spec = parseSpec(c.spec);
  const auto p = classifyModule(spec.module, c.lattice());
  const auto j = toJson(p);
  if (c.json) {
    printJson(out, {{"module", toJson(spec.module)}, {"profile", j}});
    return exit_code::kOk;
  }
  out << "module: " << spec.module.toString() << "\n";
  for (const auto& [key, value] : j.items()) out << "  " << key << ": " << value.dump() << "\n";
  return exit_code::kOk;
}

int cmdVerify(const Common& c, Int max_order, const std::string& theorem, unsigned jobs, std::size_t cap,
              std::ostream& out) {
  std::vector<std::string> ids;
  if (theorem == "all") {
    ids = theoremIds();
  } else {
    if (!isTheoremId(theorem)) throw UnknownTheoremError("unknown theorem id '" + theorem + "'");
    ids = {theorem};
  }
  SuiteOptions options;
  options.second = SecondOptions{c.lattice(), cap};
  options.jobs = jobs;
  const auto report = runSuite(max_order, ids, options);
  if (c.json) {
    printJson(out, toJson(report));
  } else {
    out << toText(report);
  }
  return report.totalFailures() == 0 ? exit_code::kOk : exit_code::kCounterexample;
}

}  // namespace

ModuleSpec parseSpec(const std::string& text) {
  ModuleSpec spec;
  spec.source = text;
  spec.factors = SpecParser(text).parse();
  spec.module = makeModule(std::span<const Int>(spec.factors));
  return spec;
}

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second representations and submodule structure of finite abelian groups", "modrep"};
  app.require_subcommand(1);

  Common c;
  auto* lattice = app.add_subcommand("lattice", "List every submodule");
  addCommon(lattice, c, true);
  auto* spec_s = app.add_subcommand("spec-s", "List the second submodules");
  addCommon(spec_s, c, true);
  auto* att = app.add_subcommand("att", "Attached primes");
  addCommon(att, c, true);

  auto* rep = app.add_subcommand("rep", "Find a minimal second or secondary representation");
  addCommon(rep, c, true);
  std::string kind = "second";
  bool all_minimal = false;
  std::size_t candidate_cap = SecondOptions{}.max_candidates_per_prime;
  rep->add_option("--kind", kind, "second or secondary")->check(CLI::IsMember({"second", "secondary"}));
  rep->add_flag("--all-minimal", all_minimal, "List every minimal representation");

  auto* classify = app.add_subcommand("classify", "Structure profile");
  addCommon(classify, c, true);

  auto* verify = app.add_subcommand("verify", "Verify theorems over all modules up to an order");
  addCommon(verify, c, false);
  Int max_order = 0;
  std::string theorem = "all";
  unsigned jobs = 1;
  verify->add_option("--max-order", max_order, "Largest module order")->required();
  verify->add_option("--theorem", theorem, "Theorem id or 'all'");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"modrep"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*lattice) return cmdLattice(c, out);
    if (*spec_s) return cmdSpecS(c, out);
    if (*att) return cmdAtt(c, out);
    if (*rep) return cmdRep(c, kind, all_minimal, candidate_cap, out);
    if (*classify) return cmdClassify(c, out);
    if (*verify) return cmdVerify(c, max_order, theorem, jobs, candidate_cap, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const ResourceCapError& e) {
    err << "resource cap exceeded: " << e.what() << "\n";
    return exit_code::kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace modrep
