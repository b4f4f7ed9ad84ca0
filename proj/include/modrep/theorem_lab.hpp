#pragma once

#include "modrep/lattice.hpp"
#include "modrep/module.hpp"
#include "modrep/second.hpp"
#include "modrep/structure.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modrep {

struct Corpus {
  Int max_order = 0;
  /// One module per isomorphism class, by ascending order then invariant
  /// factors.
  std::vector<FinModule> modules;
};

/// Throws ValidationError when max_order < 2.
Corpus generateCorpus(Int max_order);

/// Registry ids in report order.
const std::vector<std::string>& theoremIds();
bool isTheoremId(const std::string& id);

struct Verdict {
  std::string theorem_id;
  FinModule module;
  bool holds = true;
  /// Hypotheses not met; neither witness nor counterexample is set.
  bool vacuous = false;
  std::optional<nlohmann::json> witness;
  std::optional<nlohmann::json> counterexample;
};

/// Lazily computed facts about one module, shared across theorem checks.
/// Not thread safe; use one per worker.
class ModuleAnalysis {
 public:
  explicit ModuleAnalysis(FinModule m, const SecondOptions& options = {});

  const FinModule& module() const noexcept { return module_; }
  const SecondOptions& options() const noexcept { return options_; }
  const SubmoduleLattice& lattice();

  const std::optional<PrimeIdeal>& attached(LatticeIndex i, RepKind kind);
  const std::vector<LatticeIndex>& seconds();
  const std::optional<Representation>& representation(RepKind kind);
  const std::vector<Representation>& minimalRepresentations(RepKind kind);
  const AttReport& att();
  bool semisecond();
  bool semisimple();
  bool supplemented();
  bool amplySupplemented();
  bool lifting();
  bool sLifting();
  bool multiplication();
  bool atomic();
  bool coatomic();
  const std::vector<LatticeIndex>& maximalHollow();

 private:
  FinModule module_;
  SecondOptions options_;
  std::optional<SubmoduleLattice> lattice_;
  std::vector<std::optional<PrimeIdeal>> attached_[2];
  std::vector<char> attached_done_[2];
  std::optional<std::vector<LatticeIndex>> seconds_;
  std::optional<std::optional<Representation>> rep_[2];
  std::optional<std::vector<Representation>> minimal_[2];
  std::optional<AttReport> att_;
  std::map<std::string, bool> flags_;
  std::optional<std::vector<LatticeIndex>> max_hollow_;
};

/// Throws UnknownTheoremError for ids outside the registry and
/// ResourceCapError when a lattice or search exceeds its cap.
Verdict verifyTheorem(const std::string& id, const FinModule& m, const SecondOptions& options = {});
Verdict verifyTheorem(const std::string& id, ModuleAnalysis& analysis);

struct TheoremTally {
  std::size_t pass = 0;     // hypotheses met, conclusion verified
  std::size_t vacuous = 0;  // hypotheses not met
  std::size_t fail = 0;
  std::size_t skipped = 0;  // resource cap hit
};

struct SkippedEntry {
  std::string theorem_id;
  FinModule module;
  std::string reason;
};

struct Report {
  Int max_order = 0;
  std::size_t module_count = 0;
  std::vector<std::string> theorem_ids;
  std::map<std::string, TheoremTally> tallies;
  std::vector<Verdict> counterexamples;
  std::vector<SkippedEntry> skipped;
  /// Ids with no module meeting their hypotheses (thm-4.26 is exempt).
  std::vector<std::string> always_vacuous;
  double elapsed_seconds = 0.0;

  std::size_t totalFailures() const;
};

struct SuiteOptions {
  SecondOptions second;
  unsigned jobs = 1;
};

/// Verifies each id on each corpus module. Aggregation is in corpus and
/// registry order regardless of the number of worker threads.
Report runSuite(Int max_order, const std::vector<std::string>& ids, const SuiteOptions& options = {});

nlohmann::json toJson(const Verdict& v);
/// Deterministic: elapsed time is not included.
nlohmann::json toJson(const Report& r);
std::string toText(const Report& r);

}  // namespace modrep
