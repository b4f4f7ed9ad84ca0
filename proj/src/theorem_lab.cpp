#include "modrep/theorem_lab.hpp"

#include "modrep/errors.hpp"
#include "modrep/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace modrep {

using nlohmann::json;

// ---------------------------------------------------------------- corpus

namespace {

void partitionsInto(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitionsInto(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitionsInto(n, n, cur, out);
  return out;
}

}  // namespace

Corpus generateCorpus(Int max_order) {
  if (max_order < 2) throw ValidationError("corpus bound must be at least 2");
  Corpus corpus{max_order, {}};
  for (Int n = 2; n <= max_order; ++n) {
    const auto f = factorize(n);
    std::vector<std::vector<std::vector<int>>> choices;
    for (const auto& [p, e] : f) choices.push_back(partitions(e));
    std::vector<std::vector<Int>> chains;
    std::vector<std::size_t> pick(f.size(), 0);
    while (true) {
      std::size_t rank = 0;
      for (std::size_t i = 0; i < f.size(); ++i) rank = std::max(rank, choices[i][pick[i]].size());
      // Largest parts of each prime combine into the top invariant factor.
      std::vector<Int> factors(rank, 1);
      for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& lambda = choices[i][pick[i]];
        for (std::size_t j = 0; j < lambda.size(); ++j) factors[rank - 1 - j] *= ipow(f[i].first, lambda[j]);
      }
      chains.push_back(std::move(factors));
      std::size_t pos = 0;
      while (pos < f.size() && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
      if (pos == f.size()) break;
    }
    std::sort(chains.begin(), chains.end());
    for (auto& c : chains) corpus.modules.push_back(FinModule::fromInvariantFactors(std::move(c)));
  }
  return corpus;
}

// ---------------------------------------------------------------- analysis

ModuleAnalysis::ModuleAnalysis(FinModule m, const SecondOptions& options)
    : module_(std::move(m)), options_(options) {}

const SubmoduleLattice& ModuleAnalysis::lattice() {
  if (!lattice_) lattice_.emplace(module_, options_.lattice);
  return *lattice_;
}

const std::optional<PrimeIdeal>& ModuleAnalysis::attached(LatticeIndex i, RepKind kind) {
  const int k = static_cast<int>(kind);
  if (attached_[k].empty()) {
    attached_[k].resize(lattice().size());
    attached_done_[k].assign(lattice().size(), 0);
  }
  if (!attached_done_[k][i]) {
    attached_[k][i] = attachedPrime(lattice().at(i), kind);
    attached_done_[k][i] = 1;
  }
  return attached_[k][i];
}

const std::vector<LatticeIndex>& ModuleAnalysis::seconds() {
  if (!seconds_) {
    seconds_.emplace();
    for (LatticeIndex i = 0; i < lattice().size(); ++i) {
      if (attached(i, RepKind::Second)) seconds_->push_back(i);
    }
  }
  return *seconds_;
}

const std::optional<Representation>& ModuleAnalysis::representation(RepKind kind) {
  auto& slot = rep_[static_cast<int>(kind)];
  if (!slot) slot.emplace(findRepresentation(lattice(), kind));
  return *slot;
}

const std::vector<Representation>& ModuleAnalysis::minimalRepresentations(RepKind kind) {
  auto& slot = minimal_[static_cast<int>(kind)];
  if (!slot) slot.emplace(allMinimalRepresentations(lattice(), kind, options_.max_candidates_per_prime));
  return *slot;
}

const AttReport& ModuleAnalysis::att() {
  if (!att_) att_.emplace(attAll(lattice()));
  return *att_;
}

#define MODREP_LAZY_FLAG(name, expr)            \
  bool ModuleAnalysis::name() {                 \
    auto it = flags_.find(#name);               \
    if (it != flags_.end()) return it->second;  \
    const bool value = (expr);                  \
    flags_.emplace(#name, value);               \
    return value;                               \
  }

MODREP_LAZY_FLAG(semisecond, isSemisecond(lattice()))
MODREP_LAZY_FLAG(semisimple, isSemisimple(lattice()))
MODREP_LAZY_FLAG(supplemented, isSupplemented(lattice()))
MODREP_LAZY_FLAG(amplySupplemented, isAmplySupplemented(lattice()))
MODREP_LAZY_FLAG(lifting, isLifting(lattice()))
MODREP_LAZY_FLAG(multiplication, isMultiplication(lattice()))
MODREP_LAZY_FLAG(atomic, isAtomic(lattice()))
MODREP_LAZY_FLAG(coatomic, isCoatomic(lattice()))
MODREP_LAZY_FLAG(sLifting, lifting() && std::all_of(maximalHollow().begin(), maximalHollow().end(),
                                                   [this](LatticeIndex h) {
                                                     return attached(h, RepKind::Second).has_value();
                                                   }))

#undef MODREP_LAZY_FLAG

const std::vector<LatticeIndex>& ModuleAnalysis::maximalHollow() {
  if (!max_hollow_) max_hollow_.emplace(maximalHollowSubmodules(lattice()));
  return *max_hollow_;
}

// ---------------------------------------------------------------- theorems

namespace {

using Check = std::function<void(ModuleAnalysis&, Verdict&)>;

void pass(Verdict& v, json witness) {
  v.holds = true;
  v.vacuous = false;
  v.witness = std::move(witness);
}

void fail(Verdict& v, json counterexample) {
  v.holds = false;
  v.vacuous = false;
  v.counterexample = std::move(counterexample);
}

void vacuous(Verdict& v) {
  v.holds = true;
  v.vacuous = true;
}

std::vector<PrimeIdeal> sortedPrimes(std::vector<PrimeIdeal> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

bool subsetOf(const std::vector<PrimeIdeal>& a, const std::vector<PrimeIdeal>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Main attached primes of a module given by isomorphism type, or nothing when
// it has no second representation. Memoized per call site.
class TypeCache {
 public:
  TypeCache(const SecondOptions& options, RepKind kind) : options_(options), kind_(kind) {}

  const std::optional<std::vector<PrimeIdeal>>& att(const FinModule& m) {
    auto it = cache_.find(m.invariantFactors());
    if (it != cache_.end()) return it->second;
    std::optional<std::vector<PrimeIdeal>> value;
    if (!m.isZero()) {
      if (auto r = findRepresentation(SubmoduleLattice(m, options_.lattice), kind_)) {
        value = sortedPrimes(r->attached);
      }
    }
    return cache_.emplace(m.invariantFactors(), std::move(value)).first->second;
  }

 private:
  SecondOptions options_;
  RepKind kind_;
  std::map<std::vector<Int>, std::optional<std::vector<PrimeIdeal>>> cache_;
};

json subJson(ModuleAnalysis& a, LatticeIndex i) { return toJson(a.lattice().at(i)); }

void firstUniqueness(ModuleAnalysis& a, Verdict& v, RepKind kind) {
  const auto& reps = a.minimalRepresentations(kind);
  if (reps.empty()) return vacuous(v);
  const auto base = sortedPrimes(reps.front().attached);
  for (const auto& r : reps) {
    if (sortedPrimes(r.attached) != base) {
      return fail(v, {{"representation_a", toJson(reps.front())}, {"representation_b", toJson(r)}});
    }
  }
  pass(v, {{"minimal_representations", reps.size()}, {"attached", toJson(base)}});
}

void secondUniqueness(ModuleAnalysis& a, Verdict& v) {
  json witness = json::object();
  for (RepKind kind : {RepKind::Second, RepKind::Secondary}) {
    const auto& reps = a.minimalRepresentations(kind);
    if (reps.empty()) continue;
    const auto& base = reps.front();
    for (const auto& p : minimalPrimes(base.attached)) {
      const auto pos = static_cast<std::size_t>(
          std::find(base.attached.begin(), base.attached.end(), p) - base.attached.begin());
      for (const auto& r : reps) {
        const auto it = std::find(r.attached.begin(), r.attached.end(), p);
        if (it == r.attached.end() ||
            !(r.summands[static_cast<std::size_t>(it - r.attached.begin())] == base.summands[pos])) {
          return fail(v, {{"kind", toString(kind)},
                          {"prime", p.p()},
                          {"representation_a", toJson(base)},
                          {"representation_b", toJson(r)}});
        }
      }
    }
    witness[toString(kind)] = {{"minimal_representations", reps.size()}, {"attached", toJson(base.attached)}};
  }
  if (witness.empty()) return vacuous(v);
  pass(v, witness);
}

constexpr std::size_t kLemmaFamilyCap = 100'000;

void lemma42(ModuleAnalysis& a, Verdict& v) {
  const auto& lat = a.lattice();
  const auto& secs = a.seconds();
  std::size_t checked = 0;
  bool truncated = false;
  // Returns false and records a counterexample on violation.
  auto check = [&](const std::vector<LatticeIndex>& family, LatticeIndex sum) {
    ++checked;
    // Shared prime of all members (0 if they disagree) and prime of the sum
    // (0 if the sum is not second). Members are second, so primes are > 0.
    auto primeOf = [&](LatticeIndex i) -> Int {
      const auto& q = a.attached(i, RepKind::Second);
      return q ? q->p() : 0;
    };
    Int common = primeOf(family.front());
    for (auto i : family) {
      if (primeOf(i) != common) common = 0;
    }
    const Int total = primeOf(sum);
    const bool forward_ok = common == 0 || total == common;
    const bool backward_ok = total == 0 || common == total;
    if (forward_ok && backward_ok) return true;
    json members = json::array();
    for (auto i : family) members.push_back(subJson(a, i));
    fail(v, {{"family", members},
             {"sum", subJson(a, sum)},
             {"direction", forward_ok ? "sum p-second but a member is not" : "members p-second but sum is not"}});
    return false;
  };
  for (std::size_t x = 0; x < secs.size() && !truncated; ++x) {
    for (std::size_t y = x + 1; y < secs.size(); ++y) {
      const auto i = secs[x], j = secs[y];
      if (lat.contains(i, j) || lat.contains(j, i)) continue;
      if (checked >= kLemmaFamilyCap) {
        truncated = true;
        break;
      }
      if (!check({i, j}, lat.join(i, j))) return;
    }
  }
  for (std::size_t x = 0; x < secs.size() && !truncated; ++x) {
    for (std::size_t y = x + 1; y < secs.size() && !truncated; ++y) {
      const auto i = secs[x], j = secs[y];
      if (lat.contains(i, j) || lat.contains(j, i)) continue;
      const auto ij = lat.join(i, j);
      for (std::size_t z = y + 1; z < secs.size(); ++z) {
        const auto l = secs[z];
        if (lat.contains(ij, l) || lat.contains(lat.join(i, l), j) || lat.contains(lat.join(j, l), i)) continue;
        if (checked >= kLemmaFamilyCap) {
          truncated = true;
          break;
        }
        if (!check({i, j, l}, lat.join(ij, l))) return;
      }
    }
  }
  if (checked == 0) return vacuous(v);
  pass(v, {{"families_checked", checked}, {"truncated", truncated}});
}

void existenceMinimal(ModuleAnalysis& a, Verdict& v) {
  const auto& rep = a.representation(RepKind::Second);
  if (!rep) return vacuous(v);
  const bool ok = rep->is_minimal && isMinimalRepresentation(*rep) &&
                  sumOf(rep->summands, a.module()).isWhole() &&
                  !a.minimalRepresentations(RepKind::Second).empty();
  if (ok) return pass(v, toJson(*rep));
  fail(v, {{"representation", toJson(*rep)}});
}

void remarkQuotient(ModuleAnalysis& a, Verdict& v) {
  const auto& rep = a.representation(RepKind::Second);
  if (!rep) return vacuous(v);
  const auto att_m = sortedPrimes(rep->attached);
  const auto& lat = a.lattice();
  TypeCache cache(a.options(), RepKind::Second);
  std::size_t classes = 0;
  std::map<std::vector<Int>, bool> seen;
  for (LatticeIndex n = 0; n < lat.size(); ++n) {
    if (n == lat.whole()) continue;
    const auto q = quotientOf(a.module(), lat.at(n)).quotient();
    if (!seen.emplace(q.invariantFactors(), true).second) continue;
    ++classes;
    const auto& att_q = cache.att(q);
    if (!att_q || !subsetOf(*att_q, att_m)) {
      json ce = {{"kernel", subJson(a, n)}, {"quotient", toJson(q)}, {"att_m", toJson(att_m)}};
      ce["att_q"] = att_q ? toJson(*att_q) : json(nullptr);
      return fail(v, ce);
    }
  }
  pass(v, {{"quotient_classes", classes}, {"att", toJson(att_m)}});
}

void remarkDirectSum(ModuleAnalysis& a, Verdict& v) {
  const auto& lat = a.lattice();
  const Int order = a.module().order();
  std::vector<std::optional<FinModule>> types(lat.size());
  auto typeOf = [&](LatticeIndex i) -> const FinModule& {
    if (!types[i]) types[i] = moduleOfSubmodule(lat.at(i));
    return *types[i];
  };
  TypeCache cache(a.options(), RepKind::Second);
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> seen;
  std::size_t checked = 0;
  for (LatticeIndex x = 0; x < lat.size(); ++x) {
    if (x == lat.zero() || x == lat.whole()) continue;
    for (LatticeIndex y = x + 1; y < lat.size(); ++y) {
      if (y == lat.whole() || lat.order(x) * lat.order(y) != order || !lat.meetIsZero(x, y)) continue;
      const auto& tx = typeOf(x);
      const auto& ty = typeOf(y);
      auto key = std::minmax(tx.invariantFactors(), ty.invariantFactors());
      if (!seen.emplace(key.first, key.second).second) continue;
      const auto& ax = cache.att(tx);
      const auto& ay = cache.att(ty);
      if (!ax || !ay) continue;
      ++checked;
      std::vector<PrimeIdeal> expected = *ax;
      expected.insert(expected.end(), ay->begin(), ay->end());
      expected = sortedPrimes(std::move(expected));
      const auto& rep = a.representation(RepKind::Second);
      if (!rep || sortedPrimes(rep->attached) != expected) {
        json ce = {{"summand_a", subJson(a, x)}, {"summand_b", subJson(a, y)}, {"expected", toJson(expected)}};
        ce["att_m"] = rep ? toJson(sortedPrimes(rep->attached)) : json(nullptr);
        return fail(v, ce);
      }
    }
  }
  if (checked == 0) return vacuous(v);
  pass(v, {{"decomposition_types", checked}});
}

void remarkLocalize(ModuleAnalysis& a, Verdict& v) {
  const auto& rep = a.representation(RepKind::Second);
  if (!rep) return vacuous(v);
  const auto att_m = sortedPrimes(rep->attached);
  TypeCache cache(a.options(), RepKind::Second);
  json witness = json::array();
  for (Int p : a.module().primes()) {
    // Localizing at (p) keeps exactly the p-primary component, and the only
    // attached prime surviving as a proper ideal is (p) itself.
    const auto local = moduleOfSubmodule(primaryComponent(a.module(), PrimeIdeal(p)));
    std::vector<PrimeIdeal> expected;
    if (std::find(att_m.begin(), att_m.end(), PrimeIdeal(p)) != att_m.end()) expected.emplace_back(p);
    const auto& got = cache.att(local);
    const std::vector<PrimeIdeal> actual = got ? *got : std::vector<PrimeIdeal>{};
    if (!got || actual != expected) {
      json ce = {{"prime", p}, {"localization", toJson(local)}, {"expected", toJson(expected)}};
      ce["att_local"] = got ? toJson(*got) : json(nullptr);
      return fail(v, ce);
    }
    witness.push_back({{"prime", p}, {"att_local", toJson(actual)}});
  }
  pass(v, witness);
}

void prop410(ModuleAnalysis& a, Verdict& v) {
  if (!a.semisecond()) return vacuous(v);
  const auto& rep = a.representation(RepKind::Second);
  if (rep) return pass(v, toJson(*rep));
  fail(v, {{"reason", "semisecond module without a second representation"}});
}

void isSecondLemma(ModuleAnalysis& a, Verdict& v) {
  const auto& lat = a.lattice();
  std::size_t checked = 0;
  for (LatticeIndex h = 0; h < lat.size(); ++h) {
    if (!isHollowSubmodule(lat, h) || !satisfiesIS(lat, h)) continue;
    ++checked;
    if (!a.attached(h, RepKind::Second)) return fail(v, {{"submodule", subJson(a, h)}});
  }
  if (checked == 0) return vacuous(v);
  pass(v, {{"hollow_is_submodules", checked}});
}

bool maximalHollowAllSecond(ModuleAnalysis& a) {
  const auto& mh = a.maximalHollow();
  return std::all_of(mh.begin(), mh.end(), [&](LatticeIndex h) { return a.attached(h, RepKind::Second).has_value(); });
}

void concludeRepresentable(ModuleAnalysis& a, Verdict& v) {
  const auto& rep = a.representation(RepKind::Second);
  if (rep) return pass(v, toJson(*rep));
  json mh = json::array();
  for (auto h : a.maximalHollow()) mh.push_back(subJson(a, h));
  fail(v, {{"reason", "hypotheses hold but no second representation"}, {"maximal_hollow", mh}});
}

void prop49(ModuleAnalysis& a, Verdict& v) {
  const auto& lat = a.lattice();
  Submodule hollow_sum = zeroSubmodule(a.module());
  for (LatticeIndex h = 0; h < lat.size(); ++h) {
    if (isHollowSubmodule(lat, h)) hollow_sum = sumOf(hollow_sum, lat.at(h));
  }
  if (!hollow_sum.isWhole() || !maximalHollowAllSecond(a)) return vacuous(v);
  concludeRepresentable(a, v);
}

void thm418a(ModuleAnalysis& a, Verdict& v) {
  if (!a.supplemented() || !maximalHollowAllSecond(a)) return vacuous(v);
  concludeRepresentable(a, v);
}

void thm418b(ModuleAnalysis& a, Verdict& v) {
  const auto& lat = a.lattice();
  const auto& coatoms = lat.lowerCovers(lat.whole());
  const bool max_supplemented = std::all_of(coatoms.begin(), coatoms.end(),
                                            [&](LatticeIndex c) { return !supplementsOf(lat, c).empty(); });
  // Att^s is a set of primes dividing the order, hence finite.
  if (!a.coatomic() || !max_supplemented || !maximalHollowAllSecond(a)) return vacuous(v);
  concludeRepresentable(a, v);
}

void thm415(ModuleAnalysis& a, Verdict& v) {
  // Every finite module has finite hollow dimension.
  if (!a.sLifting()) return vacuous(v);
  for (const auto& r : a.minimalRepresentations(RepKind::Second)) {
    if (r.is_direct) return pass(v, toJson(r));
  }
  fail(v, {{"reason", "s-lifting module without a direct second representation"}});
}

void prop421a(ModuleAnalysis& a, Verdict& v) {
  if (!a.representation(RepKind::Second)) return vacuous(v);
  const auto& att = a.att();
  const auto min_all = att.min_all;
  for (const auto& q : att.att_all) {
    const bool above_min = std::any_of(min_all.begin(), min_all.end(),
                                       [&](const PrimeIdeal& p) { return q.ideal().contains(p.ideal()); });
    if (!above_min) return fail(v, {{"reason", "Att not atomic"}, {"prime", q.p()}});
  }
  if (att.min_main != att.min_all) {
    return fail(v, {{"min_main", toJson(att.min_main)}, {"min_all", toJson(att.min_all)}});
  }
  pass(v, {{"min", toJson(att.min_all)}});
}

void prop421b(ModuleAnalysis& a, Verdict& v) {
  if (!a.representation(RepKind::Second)) return vacuous(v);
  const auto& lat = a.lattice();
  for (auto s : a.seconds()) {
    if (isSmall(lat, s)) return vacuous(v);
  }
  const auto& att = a.att();
  for (const auto& q : att.att_all) {
    const bool below_max = std::any_of(att.max_all.begin(), att.max_all.end(),
                                       [&](const PrimeIdeal& p) { return p.ideal().contains(q.ideal()); });
    if (!below_max) return fail(v, {{"reason", "Att not coatomic"}, {"prime", q.p()}});
  }
  if (att.max_main != att.max_all) {
    return fail(v, {{"max_main", toJson(att.max_main)}, {"max_all", toJson(att.max_all)}});
  }
  pass(v, {{"max", toJson(att.max_all)}});
}

void thm423a(ModuleAnalysis& a, Verdict& v) {
  const auto& lat = a.lattice();
  json witness = json::array();
  for (Int p : a.module().primes()) {
    for (RepKind kind : {RepKind::Secondary, RepKind::Second}) {
      const auto& whole = a.attached(lat.whole(), kind);
      const bool lhs = whole && whole->p() == p;
      bool rhs = true;
      for (LatticeIndex i = 0; i < lat.size() && rhs; ++i) {
        if (i == lat.zero()) continue;
        const auto& q = a.attached(i, kind);
        rhs = q && q->p() == p;
      }
      if (lhs != rhs) {
        return fail(v, {{"prime", p}, {"kind", toString(kind)}, {"module_is_primary", lhs}, {"all_submodules", rhs}});
      }
      witness.push_back({{"prime", p}, {"kind", toString(kind)}, {"holds", lhs}});
    }
  }
  pass(v, witness);
}

void thm423b(ModuleAnalysis& a, Verdict& v) {
  const auto& reps = a.minimalRepresentations(RepKind::Secondary);
  if (reps.empty()) return vacuous(v);
  for (const auto& r : reps) {
    if (!isDirectRepresentation(r)) return fail(v, {{"representation", toJson(r)}});
  }
  pass(v, {{"minimal_representations", reps.size()}, {"example", toJson(reps.front())}});
}

void thm23loc(ModuleAnalysis& a, Verdict& v) {
  const auto& primes = a.module().primes();
  const bool primary = primes.size() == 1;
  json witness = json::object();
  for (RepKind kind : {RepKind::Second, RepKind::Secondary}) {
    const bool whole = a.representation(kind).has_value();
    if (!whole && !primary) continue;
    TypeCache cache(a.options(), kind);
    bool components = true;
    for (Int p : primes) {
      components = components &&
                   cache.att(moduleOfSubmodule(primaryComponent(a.module(), PrimeIdeal(p)))).has_value();
    }
    // Converse direction on every module; the equivalence where the
    // localization maps are injective (primary modules).
    if ((whole && !components) || (primary && components && !whole)) {
      return fail(v, {{"kind", toString(kind)}, {"module_representable", whole}, {"components_representable", components}});
    }
    witness[toString(kind)] = {{"module_representable", whole}, {"components_representable", components},
                               {"equivalence_checked", primary}};
  }
  if (witness.empty()) return vacuous(v);
  pass(v, witness);
}

void thm425c(ModuleAnalysis& a, Verdict& v) {
  const auto& rep = a.representation(RepKind::Second);
  if (!rep) return vacuous(v);
  const auto& lat = a.lattice();
  const auto& att = a.att();
  const bool primes_ok = att.att_all == att.att_main && att.att_main == minimalPrimes(att.att_main);
  std::set<LatticeIndex> subset_sums;
  const std::size_t n = rep->summands.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Submodule s = zeroSubmodule(a.module());
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s = sumOf(s, rep->summands[i]);
    }
    subset_sums.insert(lat.indexOf(s));
  }
  bool every_sub = true;
  for (LatticeIndex i = 0; i < lat.size() && every_sub; ++i) {
    if (i != lat.zero() && !subset_sums.count(i)) every_sub = false;
  }
  const bool lhs = a.multiplication();
  const bool rhs = primes_ok && every_sub;
  if (lhs != rhs) return fail(v, {{"multiplication", lhs}, {"prime_and_subsum_condition", rhs}});
  pass(v, {{"multiplication", lhs}});
}

void thm425d(ModuleAnalysis& a, Verdict& v) {
  const auto& rep = a.representation(RepKind::Second);
  if (!a.semisimple() || !rep) return vacuous(v);
  const auto att = sortedPrimes(rep->attached);
  bool incomparable = true;
  for (const auto& p : att) {
    for (const auto& q : att) {
      if (!(p == q) && p.ideal().contains(q.ideal())) incomparable = false;
    }
  }
  bool seconds_simple = true;
  for (auto s : a.seconds()) seconds_simple = seconds_simple && isPrime(a.lattice().order(s));
  const bool lhs = a.multiplication();
  const bool rhs = incomparable && seconds_simple;
  if (lhs != rhs) return fail(v, {{"multiplication", lhs}, {"incomparable_and_simple", rhs}});
  pass(v, {{"multiplication", lhs}});
}

void thm425e(ModuleAnalysis& a, Verdict& v) {
  if (!a.atomic()) return vacuous(v);
  const auto& lat = a.lattice();
  // Sum of all K whose nonzero submodules are all second for K's prime.
  Submodule total = zeroSubmodule(a.module());
  for (LatticeIndex k = 0; k < lat.size(); ++k) {
    const auto& p = a.attached(k, RepKind::Second);
    if (!p) continue;
    bool uniform_prime = true;
    for (LatticeIndex j = 0; j < lat.size() && uniform_prime; ++j) {
      if (j == lat.zero() || !lat.contains(k, j)) continue;
      uniform_prime = a.attached(j, RepKind::Second) == p;
    }
    if (uniform_prime) total = sumOf(total, lat.at(k));
  }
  const bool lhs = a.semisimple();
  const bool rhs = total.isWhole();
  if (lhs != rhs) return fail(v, {{"semisimple", lhs}, {"sum_of_homogeneous_second", rhs}});
  pass(v, {{"semisimple", lhs}});
}

void semisecondSemisimple(ModuleAnalysis& a, Verdict& v) {
  // Finite modules are Noetherian.
  if (!a.semisecond() || !a.atomic()) return vacuous(v);
  if (a.semisimple()) return pass(v, {{"semisimple", true}});
  fail(v, {{"reason", "semisecond atomic module that is not semisimple"}});
}

void thm426(ModuleAnalysis& a, Verdict& v) {
  const auto& m = a.module();
  // Z_n with n squarefree: the ring Z_n is self-injective (indeed semisimple),
  // its primes (p_i) are incomparable and intersect in 0, and every Z_n-module
  // is injective. Each nonzero submodule E of Z_n is checked as such a module.
  if (m.rank() != 1 || !isSquarefree(m.order())) return vacuous(v);
  const Int n = m.order();
  std::vector<PrimeIdeal> ring_primes;
  for (Int p : m.primes()) ring_primes.emplace_back(p);
  const auto& lat = a.lattice();
  TypeCache cache(a.options(), RepKind::Second);
  std::size_t checked = 0;
  for (LatticeIndex e = 0; e < lat.size(); ++e) {
    if (e == lat.zero()) continue;
    ++checked;
    const auto emod = moduleOfSubmodule(lat.at(e));
    Submodule sum = zeroSubmodule(emod);
    for (const auto& p : ring_primes) {
      const auto part = colonModule(zeroSubmodule(emod), p.ideal());
      if (!part.isZero()) {
        const auto q = isSecond(part);
        if (!q || !(*q == p)) {
          return fail(v, {{"E", toJson(emod)}, {"prime", p.p()}, {"reason", "E[p] neither zero nor p-second"}});
        }
      }
      sum = sumOf(sum, part);
    }
    const auto& att = cache.att(emod);
    if (!sum.isWhole() || !att || !subsetOf(*att, ring_primes)) {
      return fail(v, {{"E", toJson(emod)}, {"reason", "part (1) fails"}});
    }
    const bool ann_zero = emod.exponent() % n == 0;
    const bool att_full = *att == ring_primes;
    if (ann_zero != att_full) {
      return fail(v, {{"E", toJson(emod)}, {"ann_zero", ann_zero}, {"att", toJson(*att)}});
    }
  }
  pass(v, {{"ring", n}, {"modules_checked", checked}, {"primes", toJson(ring_primes)}});
}

void figure1(ModuleAnalysis& a, Verdict& v) {
  const auto& lat = a.lattice();
  Submodule secondary_sum = zeroSubmodule(a.module());
  for (LatticeIndex i = 0; i < lat.size(); ++i) {
    if (a.attached(i, RepKind::Secondary)) secondary_sum = sumOf(secondary_sum, lat.at(i));
  }
  const std::map<std::string, bool> flags = {
      {"artinian", true},  // finite
      {"semisimple", a.semisimple()},
      {"s_lifting", a.sLifting()},
      {"lifting", a.lifting()},
      {"amply_supplemented", a.amplySupplemented()},
      {"supplemented", a.supplemented()},
      {"semisecond", a.semisecond()},
      {"semisecondary", secondary_sum.isWhole()},
  };
  static const std::vector<std::pair<std::string, std::string>> arrows = {
      {"semisimple", "semisecond"}, {"semisimple", "s_lifting"},          {"s_lifting", "lifting"},
      {"lifting", "amply_supplemented"}, {"artinian", "amply_supplemented"}, {"amply_supplemented", "supplemented"},
      {"semisecond", "semisecondary"},
  };
  for (const auto& [from, to] : arrows) {
    if (flags.at(from) && !flags.at(to)) return fail(v, {{"arrow", from + " -> " + to}, {"flags", flags}});
  }
  pass(v, {{"flags", flags}});
}

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> r = {
      {"first-uniqueness-second", [](ModuleAnalysis& a, Verdict& v) { firstUniqueness(a, v, RepKind::Second); }},
      {"first-uniqueness-secondary", [](ModuleAnalysis& a, Verdict& v) { firstUniqueness(a, v, RepKind::Secondary); }},
      {"second-uniqueness", secondUniqueness},
      {"lemma-4.2", lemma42},
      {"existence-minimal", existenceMinimal},
      {"remark-4.6-quotient", remarkQuotient},
      {"remark-4.6-dsum", remarkDirectSum},
      {"remark-4.6-localize", remarkLocalize},
      {"prop-4.10", prop410},
      {"is-second-lemma", isSecondLemma},
      {"prop-4.9", prop49},
      {"thm-4.18-1", thm418a},
      {"thm-4.18-2", thm418b},
      {"thm-4.15", thm415},
      {"prop-4.21-1", prop421a},
      {"prop-4.21-2", prop421b},
      {"thm-4.23-1", thm423a},
      {"thm-4.23-2", thm423b},
      {"thm-23-loc", thm23loc},
      {"thm-4.25-3", thm425c},
      {"thm-4.25-4", thm425d},
      {"thm-4.25-5", thm425e},
      {"semisecond-semisimple", semisecondSemisimple},
      {"thm-4.26", thm426},
      {"figure-1", figure1},
  };
  return r;
}

const Check& lookup(const std::string& id) {
  for (const auto& [name, check] : registry()) {
    if (name == id) return check;
  }
  throw UnknownTheoremError("unknown theorem id '" + id + "'");
}

}  // namespace

const std::vector<std::string>& theoremIds() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

bool isTheoremId(const std::string& id) {
  const auto& ids = theoremIds();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Verdict verifyTheorem(const std::string& id, ModuleAnalysis& analysis) {
  const auto& check = lookup(id);
  if (analysis.module().isZero()) throw ValidationError("theorems are verified on nonzero modules only");
  Verdict v;
  v.theorem_id = id;
  v.module = analysis.module();
  check(analysis, v);
  return v;
}

Verdict verifyTheorem(const std::string& id, const FinModule& m, const SecondOptions& options) {
  ModuleAnalysis analysis(m, options);
  return verifyTheorem(id, analysis);
}

// ---------------------------------------------------------------- suite

std::size_t Report::totalFailures() const {
  std::size_t total = 0;
  for (const auto& [id, t] : tallies) total += t.fail;
  return total;
}

namespace {

struct ModuleOutcome {
  std::vector<int> status;  // 0 pass, 1 vacuous, 2 fail, 3 skipped
  std::vector<Verdict> failures;
  std::vector<SkippedEntry> skipped;
};

ModuleOutcome evaluateModule(const FinModule& m, const std::vector<std::string>& ids, const SecondOptions& options) {
  ModuleOutcome out;
  ModuleAnalysis analysis(m, options);
  for (const auto& id : ids) {
    try {
      auto v = verifyTheorem(id, analysis);
      if (!v.holds) {
        out.status.push_back(2);
        out.failures.push_back(std::move(v));
      } else {
        out.status.push_back(v.vacuous ? 1 : 0);
      }
    } catch (const ResourceCapError& e) {
      out.status.push_back(3);
      out.skipped.push_back({id, m, e.what()});
    }
  }
  return out;
}

}  // namespace

Report runSuite(Int max_order, const std::vector<std::string>& ids, const SuiteOptions& options) {
  for (const auto& id : ids) lookup(id);
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = generateCorpus(max_order);
  std::vector<ModuleOutcome> outcomes(corpus.modules.size());

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(corpus.modules.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.modules.size(); i = next++) {
      try {
        outcomes[i] = evaluateModule(corpus.modules[i], ids, options.second);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  Report r;
  r.max_order = max_order;
  r.module_count = corpus.modules.size();
  r.theorem_ids = ids;
  for (const auto& id : ids) r.tallies[id];
  for (auto& o : outcomes) {
    for (std::size_t k = 0; k < ids.size(); ++k) {
      auto& t = r.tallies[ids[k]];
      switch (o.status[k]) {
        case 0: ++t.pass; break;
        case 1: ++t.vacuous; break;
        case 2: ++t.fail; break;
        default: ++t.skipped; break;
      }
    }
    for (auto& f : o.failures) r.counterexamples.push_back(std::move(f));
    for (auto& s : o.skipped) r.skipped.push_back(std::move(s));
  }
  for (const auto& id : ids) {
    const auto& t = r.tallies[id];
    if (id != "thm-4.26" && t.pass + t.fail == 0) r.always_vacuous.push_back(id);
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json toJson(const Verdict& v) {
  json j = {{"theorem_id", v.theorem_id}, {"module", toJson(v.module)}, {"holds", v.holds}, {"vacuous", v.vacuous}};
  j["witness"] = v.witness ? *v.witness : json(nullptr);
  j["counterexample"] = v.counterexample ? *v.counterexample : json(nullptr);
  return j;
}

json toJson(const Report& r) {
  json theorems = json::array();
  for (const auto& id : r.theorem_ids) {
    const auto& t = r.tallies.at(id);
    theorems.push_back({{"id", id}, {"pass", t.pass}, {"vacuous", t.vacuous}, {"fail", t.fail}, {"skipped", t.skipped}});
  }
  json counterexamples = json::array();
  for (const auto& v : r.counterexamples) counterexamples.push_back(toJson(v));
  json skipped = json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back({{"theorem_id", s.theorem_id}, {"module", toJson(s.module)}, {"reason", s.reason}});
  }
  return {{"corpus", {{"max_order", r.max_order}, {"modules", r.module_count}}},
          {"theorems", theorems},
          {"total_failures", r.totalFailures()},
          {"counterexamples", counterexamples},
          {"skipped", skipped},
          {"always_vacuous", r.always_vacuous}};
}

std::string toText(const Report& r) {
  std::ostringstream os;
  os << "corpus: " << r.module_count << " modules of order <= " << r.max_order << "\n";
  std::size_t width = 2;
  for (const auto& id : r.theorem_ids) width = std::max(width, id.size());
  os << std::left;
  for (const auto& id : r.theorem_ids) {
    const auto& t = r.tallies.at(id);
    os << "  " << id << std::string(width - id.size(), ' ') << "  pass " << t.pass << "  vacuous " << t.vacuous
       << "  fail " << t.fail << "  skipped " << t.skipped << "\n";
  }
  for (const auto& v : r.counterexamples) {
    os << "COUNTEREXAMPLE " << v.theorem_id << " on " << v.module.toString() << ": "
       << (v.counterexample ? v.counterexample->dump() : "") << "\n";
  }
  for (const auto& s : r.skipped) os << "skipped " << s.theorem_id << " on " << s.module.toString() << ": " << s.reason << "\n";
  for (const auto& id : r.always_vacuous) os << "note: " << id << " was vacuous on every module\n";
  os << "failures: " << r.totalFailures() << "\n";
  os << "elapsed: " << r.elapsed_seconds << " s\n";
  return os.str();
}

}  // namespace modrep
