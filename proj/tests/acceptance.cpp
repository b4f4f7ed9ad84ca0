// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "modrep/cli.hpp"
#include "modrep/lattice.hpp"
#include "modrep/normal_forms.hpp"
#include "modrep/number.hpp"
#include "modrep/second.hpp"
#include "modrep/structure.hpp"
#include "modrep/theorem_lab.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace modrep;

namespace {

// Pinned constants.
constexpr double kExampleSeconds = 1.0;       // per worked example
constexpr double kUniquenessSeconds = 600.0;  // full uniqueness sweep
constexpr Int kUniquenessOrder = 200;
constexpr Int kPropertyOrder = 100;
constexpr Int kOracleOrder = 100;
constexpr Int kSquarefreeBound = 210;
constexpr Int kNonSquarefreeBound = 100;
constexpr int kRandomMatrices = 1000;
constexpr int kMaxDim = 6;
constexpr int kEntryBound = 50;
constexpr std::uint64_t kSeed = 20240611;
constexpr Int kDeterminismOrder = 100;
constexpr std::size_t kStatedCorpusCount = 540;
constexpr std::size_t kStatedSquarefreeCount = 45;

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 20) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool report(int number) const {
    std::printf("[%s] %d %s (%zu checks, %zu failed)\n", failed_ == 0 ? "PASS" : "FAIL", number,
                title_.c_str(), checks_, failed_);
    for (const auto& n : notes_) std::printf("       note: %s\n", n.c_str());
    for (const auto& f : failures_) std::printf("       failed: %s\n", f.c_str());
    std::fflush(stdout);
    return failed_ == 0;
  }

 private:
  std::string title_;
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Submodule cyclicSub(const FinModule& m, Int g) { return submoduleFromGenerators(m, {{g}}); }

std::vector<Int> primesOf(const std::vector<PrimeIdeal>& ps) {
  std::vector<Int> out;
  for (const auto& p : ps) out.push_back(p.p());
  return out;
}

void timed(Criterion& c, const std::string& label, const std::function<void()>& body) {
  const auto t0 = Clock::now();
  body();
  const double s = secondsSince(t0);
  c.expect(s < kExampleSeconds, label + " took " + std::to_string(s) + " s");
}

// ---------------------------------------------------------------------------

bool criterionExamples() {
  Criterion c("worked examples: Z18, Z8, Z12, cyclic Z_n");

  timed(c, "Z18", [&] {
    const auto m = makeModule({18});
    const auto lat = SubmoduleLattice(m);
    const auto sec = findRepresentation(lat, RepKind::Secondary);
    c.expect(sec.has_value(), "Z18 has a secondary representation");
    if (sec) {
      c.expect(sec->is_minimal && isMinimalRepresentation(*sec), "Z18 secondary representation minimal");
      const std::vector<Submodule> want{cyclicSub(m, 9), cyclicSub(m, 2)};
      c.expect(sec->summands == want, "Z18 secondary summands are (9), (2)");
      c.expect(primesOf(sec->attached) == std::vector<Int>{2, 3}, "Z18 secondary attached primes {2,3}");
      c.expect(isSecondary(cyclicSub(m, 2)) == PrimeIdeal(3), "(2) is 3-secondary");
      c.expect(isSecondary(cyclicSub(m, 9)) == PrimeIdeal(2), "(9) is 2-secondary");
    }
    c.expect(!findRepresentation(lat, RepKind::Second).has_value(), "Z18 has no second representation");
    auto spec = specSecond(lat);
    const std::vector<Submodule> want{cyclicSub(m, 9), cyclicSub(m, 6)};
    std::sort(spec.begin(), spec.end(), [](const Submodule& a, const Submodule& b) { return a.order() < b.order(); });
    c.expect(spec == want, "Spec^s(Z18) = {(6),(9)}");
  });

  timed(c, "Z8", [&] {
    const auto m = makeModule({8});
    const auto lat = SubmoduleLattice(m);
    c.expect(specSecond(lat) == std::vector<Submodule>{cyclicSub(m, 4)}, "Z8 unique second submodule (4)");
    c.expect(isLifting(lat), "Z8 lifting");
    c.expect(!isSLifting(lat), "Z8 not s-lifting");
  });

  timed(c, "Z12", [&] {
    const auto m = makeModule({12});
    const auto lat = SubmoduleLattice(m);
    c.expect(hollowDimension(lat) == 2, "h.dim(Z12) = 2");
    bool found = false;
    for (auto i : maximalHollowSubmodules(lat)) found = found || lat.at(i) == cyclicSub(m, 3);
    c.expect(found, "(3) is a maximal hollow submodule of Z12");
    c.expect(!isSecond(cyclicSub(m, 3)).has_value(), "(3) in Z12 is not second");
    c.expect(!findRepresentation(lat, RepKind::Second).has_value(), "Z12 not second representable");
    c.expect(!isSLifting(lat), "Z12 not s-lifting");
  });

  std::size_t squarefree = 0;
  timed(c, "squarefree cyclic sweep", [&] {
    for (Int n = 2; n <= kSquarefreeBound; ++n) {
      const auto m = makeModule({n});
      const auto lat = SubmoduleLattice(m);
      const auto rep = findRepresentation(lat, RepKind::Second);
      const std::string tag = "Z" + std::to_string(n);
      if (!isSquarefree(n)) {
        if (n <= kNonSquarefreeBound) c.expect(!rep.has_value(), tag + " not second representable");
        continue;
      }
      ++squarefree;
      c.expect(rep.has_value(), tag + " second representable");
      if (rep) c.expect(primesOf(rep->attached) == primeDivisors(n), tag + " att^s = primes of n");
      c.expect(primesOf(attAll(lat).att_main) == primeDivisors(n), tag + " att report");

      const auto v = verifyTheorem("thm-4.26", m);
      c.expect(v.holds && !v.vacuous, tag + " thm-4.26 verdict holds");
      // Ann(E) = 0 over Z_n  <=>  att^s(E) contains every prime of n.
      for (const auto& e : lat.submodules()) {
        if (e.isZero()) continue;
        const bool faithful = e.exponent() % n == 0;
        const auto att = primesOf(attAll(moduleOfSubmodule(e)).att_main);
        c.expect(faithful == (att == primeDivisors(n)), tag + " faithful <=> full att on " + toString(e));
      }
    }
  });
  c.note(std::to_string(squarefree) + " squarefree n in [2," + std::to_string(kSquarefreeBound) +
         "] checked; the stated count of " + std::to_string(kStatedSquarefreeCount) + " does not match");
  return c.report(1);
}

// ---------------------------------------------------------------------------

// Abelian groups of order n: product of partition numbers of the exponents.
std::size_t partitionOracle(Int max_order) {
  std::vector<std::size_t> p(64, 0);
  p[0] = 1;
  for (std::size_t part = 1; part < p.size(); ++part)
    for (std::size_t k = part; k < p.size(); ++k) p[k] += p[k - part];
  std::size_t total = 0;
  for (Int n = 2; n <= max_order; ++n) {
    std::size_t classes = 1;
    Int r = n;
    for (Int q = 2; q * q <= r; ++q) {
      int e = 0;
      while (r % q == 0) r /= q, ++e;
      classes *= p[e];
    }
    total += classes;  // a leftover prime contributes p(1) = 1
  }
  return total;
}

bool criterionUniqueness() {
  Criterion c("uniqueness suites over the corpus of order <= 200");
  const auto corpus = generateCorpus(kUniquenessOrder);
  const auto oracle = partitionOracle(kUniquenessOrder);
  c.expect(corpus.modules.size() == oracle,
           "corpus size " + std::to_string(corpus.modules.size()) + " vs oracle " + std::to_string(oracle));
  c.note("corpus holds " + std::to_string(corpus.modules.size()) +
         " isomorphism classes; the stated figure of " + std::to_string(kStatedCorpusCount) +
         " is not reproducible and is not used");

  const std::vector<std::string> ids{"first-uniqueness-second", "first-uniqueness-secondary", "second-uniqueness",
                                     "thm-4.23-2"};
  const auto t0 = Clock::now();
  const auto report = runSuite(kUniquenessOrder, ids);
  const double s = secondsSince(t0);
  c.expect(s < kUniquenessSeconds, "runtime " + std::to_string(s) + " s");
  for (const auto& id : ids) {
    const auto& t = report.tallies.at(id);
    c.expect(t.fail == 0, id + " failures: " + std::to_string(t.fail));
    c.expect(t.skipped == 0, id + " skipped: " + std::to_string(t.skipped));
    c.expect(t.pass > 0, id + " exercised");
    c.note(id + ": pass " + std::to_string(t.pass) + ", vacuous " + std::to_string(t.vacuous));
  }
  return c.report(2);
}

// ---------------------------------------------------------------------------

bool criterionProperties() {
  Criterion c("property suites over the corpus of order <= 100");
  const std::vector<std::string> ids{"lemma-4.2",   "is-second-lemma",     "prop-4.9",           "thm-4.18-1",
                                     "prop-4.21-1", "thm-4.25-3",          "thm-4.25-4",         "thm-4.25-5",
                                     "remark-4.6-quotient", "remark-4.6-dsum", "remark-4.6-localize", "figure-1"};
  const auto report = runSuite(kPropertyOrder, ids);
  for (const auto& id : ids) {
    const auto& t = report.tallies.at(id);
    c.expect(t.fail == 0, id + " counterexamples: " + std::to_string(t.fail));
    c.expect(t.skipped == 0, id + " skipped: " + std::to_string(t.skipped));
    c.expect(t.pass > 0, id + " never exercised");
  }
  for (const auto& v : report.counterexamples) c.note(toJson(v).dump());
  return c.report(3);
}

// ---------------------------------------------------------------------------

bool criterionOracles() {
  Criterion c("fast paths agree with definitional checks, order <= 100");
  std::map<std::string, std::size_t> compared;
  for (const auto& m : generateCorpus(kOracleOrder).modules) {
    const SubmoduleLattice lat(m);
    const std::string tag = m.toString();
    for (LatticeIndex i = 0; i < lat.size(); ++i) {
      const auto& n = lat.at(i);
      const std::string where = tag + " " + toString(n);
      c.expect(isSmall(lat, i) == isSmallFast(n), "isSmall " + where);
      c.expect(isLarge(lat, i) == isLargeFast(n), "isLarge " + where);
      c.expect(isSecond(n) == isSecondFast(n), "isSecond " + where);
      c.expect(isSecondary(n) == isSecondaryFast(n), "isSecondary " + where);
      compared["submodule"]++;
    }
    c.expect(hollowDimension(lat) == hollowDimensionFast(m), "hollow dimension " + tag);
    c.expect(isSemisecond(lat) == isSemisecondFast(m), "semisecond " + tag);
    compared["module"]++;
  }
  c.note(std::to_string(compared["module"]) + " modules, " + std::to_string(compared["submodule"]) +
         " submodules compared");
  return c.report(4);
}

// ---------------------------------------------------------------------------

bool unimodular(const IntMatrix& u) {
  const auto d = u.determinant();
  return d == 1 || d == -1;
}

// Shape check written out independently of isHermiteNormalForm.
bool hermiteShape(const IntMatrix& h) {
  std::size_t prev = 0;
  bool first = true, zeros = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      zeros = true;
      continue;
    }
    if (zeros || h(r, c) <= 0 || (!first && c <= prev)) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    prev = c;
    first = false;
  }
  return true;
}

bool criterionLinalg() {
  Criterion c("exact HNF/SNF invariants on random integer matrices");
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> dim(1, kMaxDim), entry(-kEntryBound, kEntryBound);
  for (int t = 0; t < kRandomMatrices; ++t) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) = entry(rng);
    const std::string tag = "matrix #" + std::to_string(t);

    const auto hr = hermiteNormalForm(a);
    c.expect(hr.u * a == hr.h, tag + " H = U A");
    c.expect(unimodular(hr.u), tag + " U unimodular (HNF)");
    c.expect(hermiteShape(hr.h) && isHermiteNormalForm(hr.h), tag + " HNF shape");

    const auto sr = smithNormalForm(a);
    c.expect(sr.u * a * sr.v == sr.s, tag + " S = U A V");
    c.expect(unimodular(sr.u) && unimodular(sr.v), tag + " U, V unimodular (SNF)");
    bool diagonal = true;
    for (std::size_t r = 0; r < sr.s.rows(); ++r)
      for (std::size_t k = 0; k < sr.s.cols(); ++k)
        if (r != k && sr.s(r, k) != 0) diagonal = false;
    c.expect(diagonal, tag + " S diagonal");
    const auto d = smithDiagonal(sr.s);
    bool chain = true;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) chain = false;
      if (d[i] != 0) ++nonzero;
      if (i + 1 < d.size()) chain = chain && (d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0);
    }
    c.expect(chain, tag + " divisibility chain");
    std::size_t hrank = 0;
    for (std::size_t r = 0; r < hr.h.rows(); ++r) hrank += hr.h.isRowZero(r) ? 0 : 1;
    c.expect(hrank == nonzero, tag + " HNF and SNF ranks agree");
    if (a.rows() == a.cols()) {
      BigInt prod = 1;
      for (const auto& x : d) prod *= x;
      c.expect(abs(a.determinant()) == prod, tag + " |det A| = product of invariant factors");
    }
  }
  return c.report(5);
}

// ---------------------------------------------------------------------------

bool criterionDeterminism() {
  Criterion c("verify --json output is byte-identical across runs and job counts");
  auto run = [&](const std::string& jobs, int& code) {
    std::ostringstream out, err;
    code = runCommand({"verify", "--max-order", std::to_string(kDeterminismOrder), "--theorem", "all", "--json",
                       "--jobs", jobs},
                      out, err);
    return out.str();
  };
  int c1 = -1, c2 = -1, c3 = -1;
  const auto a = run("1", c1);
  const auto b = run("1", c2);
  const auto p = run("4", c3);
  c.expect(c1 == exit_code::kOk && c2 == exit_code::kOk && c3 == exit_code::kOk, "verify exit codes 0");
  c.expect(!a.empty() && a == b, "repeated runs identical");
  c.expect(a == p, "--jobs 1 and --jobs 4 identical");
  try {
    const auto j = nlohmann::json::parse(a);
    c.expect(j["total_failures"] == 0, "report has no failures");
    c.expect(j["always_vacuous"].empty(), "no registry id is vacuous on every module");
    c.expect(j["theorems"].size() == theoremIds().size(), "every registry id reported");
  } catch (const std::exception& e) {
    c.expect(false, std::string("report parses: ") + e.what());
  }
  c.note(std::to_string(a.size()) + " bytes per report");
  return c.report(6);
}

}  // namespace

int main() {
  bool ok = true;
  for (auto* f : {criterionExamples, criterionUniqueness, criterionProperties, criterionOracles, criterionLinalg,
                  criterionDeterminism}) {
    try {
      ok = f() && ok;
    } catch (const std::exception& e) {
      std::printf("[FAIL] uncaught exception: %s\n", e.what());
      ok = false;
    }
  }
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
