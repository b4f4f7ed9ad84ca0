#include "modrep/module.hpp"

#include "modrep/detail/lattice_hnf.hpp"
#include "modrep/errors.hpp"
#include "modrep/normal_forms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace modrep {
namespace {

constexpr Int kMaxOrder = Int{1} << 62;

void requireSameParent(const Submodule& a, const Submodule& b, const char* op) {
  if (!(a.parent() == b.parent())) {
    throw ParentMismatchError(std::string(op) + ": submodules of different modules (" +
                              a.parent().toString() + " vs " + b.parent().toString() + ")");
  }
}

Submodule canonicalize(const FinModule& m, std::span<const Int> rows) {
  return Submodule::fromCanonicalHnf(m, detail::modularHnf(rows, m.invariantFactors()));
}

Int elementOrder(const FinModule& m, std::span<const Int> x) {
  Int e = 1;
  const auto& d = m.invariantFactors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Int xi = x[i] % d[i];
    if (xi < 0) xi += d[i];
    e = lcm(e, d[i] / gcd(d[i], xi));
  }
  return e;
}

}  // namespace

FinModule::FinModule() : data_(std::make_shared<const Data>()) {}

FinModule FinModule::fromInvariantFactors(std::vector<Int> factors) {
  Data data;
  data.factors = std::move(factors);
  data.exponent = data.factors.empty() ? 1 : data.factors.back();
  for (Int d : data.factors) data.order *= d;
  data.primes = primeDivisors(data.exponent);
  return FinModule(std::make_shared<const Data>(std::move(data)));
}

std::string FinModule::toString() const {
  if (isZero()) return "0";
  std::string out;
  for (Int d : data_->factors) {
    if (!out.empty()) out += " + ";
    out += "Z" + std::to_string(d);
  }
  return out;
}

FinModule makeModule(std::span<const Int> factors) {
  __int128 order = 1;
  for (Int f : factors) {
    if (f < 2) {
      throw ValidationError("cyclic factor must be >= 2, got " + std::to_string(f));
    }
    order *= f;
    if (order > kMaxOrder) throw ValidationError("module order exceeds 2^62");
  }
  std::vector<BigInt> diag(factors.begin(), factors.end());
  const auto snf = smithNormalForm(IntMatrix::diagonal(diag));
  std::vector<Int> chain;
  for (const auto& d : smithDiagonal(snf.s)) {
    if (d > 1) chain.push_back(static_cast<Int>(d));
  }
  return FinModule::fromInvariantFactors(std::move(chain));
}

PrimeIdeal::PrimeIdeal(Int p) : p_(p) {
  if (!isPrime(p)) throw ValidationError(std::to_string(p) + " is not prime");
}

Submodule::Submodule(FinModule parent, std::vector<Int> hnf)
    : parent_(std::move(parent)), hnf_(std::move(hnf)) {
  const auto& d = parent_.invariantFactors();
  const std::size_t k = d.size();
  order_ = 1;
  for (std::size_t i = 0; i < k; ++i) order_ *= d[i] / hnf_[i * k + i];
}

Submodule Submodule::fromCanonicalHnf(FinModule parent, std::vector<Int> hnf) {
  return Submodule(std::move(parent), std::move(hnf));
}

IntMatrix Submodule::basis() const {
  const std::size_t k = parent_.rank();
  IntMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) b(i, j) = hnf_[i * k + j];
  }
  return b;
}

std::vector<std::vector<Int>> Submodule::generators() const {
  const auto& d = parent_.invariantFactors();
  const std::size_t k = d.size();
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (hnf_[i * k + i] == d[i]) continue;
    out.emplace_back(hnf_.begin() + static_cast<std::ptrdiff_t>(i * k),
                     hnf_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
  }
  return out;
}

Int Submodule::exponent() const {
  Int e = 1;
  for (const auto& g : generators()) e = lcm(e, elementOrder(parent_, g));
  return e;
}

std::size_t Submodule::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Int v : hnf_) h = (h ^ std::hash<Int>{}(v)) * 0x100000001b3ULL;
  return h;
}

Submodule zeroSubmodule(const FinModule& m) { return canonicalize(m, {}); }

Submodule wholeModule(const FinModule& m) {
  const std::size_t k = m.rank();
  std::vector<Int> id(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) id[i * k + i] = 1;
  return Submodule::fromCanonicalHnf(m, std::move(id));
}

Submodule submoduleFromGenerators(const FinModule& m, const std::vector<std::vector<Int>>& gens) {
  const std::size_t k = m.rank();
  std::vector<Int> rows;
  rows.reserve(gens.size() * k);
  for (const auto& g : gens) {
    if (g.size() != k) {
      throw DimensionError("generator has length " + std::to_string(g.size()) + ", module rank is " +
                           std::to_string(k));
    }
    rows.insert(rows.end(), g.begin(), g.end());
  }
  return canonicalize(m, rows);
}

Submodule sumOf(const Submodule& a, const Submodule& b) {
  requireSameParent(a, b, "sumOf");
  if (a.isZero() || b.isWhole()) return b;
  if (b.isZero() || a.isWhole()) return a;
  std::vector<Int> basis(a.hnf().begin(), a.hnf().end());
  const auto& d = a.parent().invariantFactors();
  const std::size_t k = d.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (b.hnf()[i * k + i] == d[i]) continue;
    detail::insertRow(basis, std::vector<Int>(b.hnf().begin() + static_cast<std::ptrdiff_t>(i * k),
                                              b.hnf().begin() + static_cast<std::ptrdiff_t>((i + 1) * k)),
                      d);
  }
  detail::reduceAbovePivots(basis, d);
  return Submodule::fromCanonicalHnf(a.parent(), std::move(basis));
}

Submodule sumOf(std::span<const Submodule> parts, const FinModule& m) {
  Submodule acc = zeroSubmodule(m);
  for (const auto& p : parts) acc = sumOf(acc, p);
  return acc;
}

Submodule intersectOf(const Submodule& a, const Submodule& b) {
  requireSameParent(a, b, "intersectOf");
  if (a.isWhole() || b.isZero()) return b;
  if (b.isWhole() || a.isZero()) return a;
  // Kernel construction: rows (x, x) for x in A and (y, 0) for y in B; the
  // rows of the HNF with a zero first half span (A ∩ B) in the second half.
  const auto& d = a.parent().invariantFactors();
  const std::size_t k = d.size();
  std::vector<Int> moduli(d.begin(), d.end());
  moduli.insert(moduli.end(), d.begin(), d.end());
  std::vector<Int> rows;
  rows.reserve(4 * k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows.push_back(a.hnf()[i * k + j]);
    for (std::size_t j = 0; j < k; ++j) rows.push_back(a.hnf()[i * k + j]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows.push_back(b.hnf()[i * k + j]);
    for (std::size_t j = 0; j < k; ++j) rows.push_back(0);
  }
  const auto big = detail::modularHnf(rows, moduli);
  std::vector<Int> out(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out[i * k + j] = big[(k + i) * 2 * k + k + j];
  }
  return Submodule::fromCanonicalHnf(a.parent(), std::move(out));
}

bool isContained(const Submodule& small, const Submodule& big) {
  requireSameParent(small, big, "isContained");
  if (big.order() % small.order() != 0) return false;
  const auto& d = big.parent().invariantFactors();
  for (const auto& g : small.generators()) {
    if (!detail::latticeContains(big.hnf(), g, d)) return false;
  }
  return true;
}

QuotientResult::QuotientResult(FinModule parent, Submodule kernel, FinModule quotient,
                               IntMatrix transform, std::vector<std::size_t> kept)
    : parent_(std::move(parent)),
      kernel_(std::move(kernel)),
      quotient_(std::move(quotient)),
      transform_(std::move(transform)),
      kept_(std::move(kept)) {}

std::vector<Int> QuotientResult::projectVector(std::span<const Int> x) const {
  const auto& q = quotient_.invariantFactors();
  std::vector<Int> y;
  y.reserve(kept_.size());
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    const std::size_t col = kept_[t];
    BigInt acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += BigInt(x[i]) * transform_(i, col);
    BigInt r = acc % q[t];
    if (r < 0) r += q[t];
    y.push_back(static_cast<Int>(r));
  }
  return y;
}

Submodule QuotientResult::project(const Submodule& k) const {
  if (!(k.parent() == parent_)) throw ParentMismatchError("project: submodule of a different module");
  std::vector<std::vector<Int>> gens;
  for (const auto& g : k.generators()) gens.push_back(projectVector(g));
  return submoduleFromGenerators(quotient_, gens);
}

QuotientResult quotientOf(const FinModule& m, const Submodule& n) {
  if (!(n.parent() == m)) throw ParentMismatchError("quotientOf: submodule of a different module");
  // Z^k / L_N with U H V = S gives M/N ≅ ⊕ Z/s_i via x ↦ xV.
  const auto snf = smithNormalForm(n.basis());
  std::vector<Int> factors;
  std::vector<std::size_t> kept;
  const auto diag = smithDiagonal(snf.s);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] > 1) {
      factors.push_back(static_cast<Int>(diag[i]));
      kept.push_back(i);
    }
  }
  return QuotientResult(m, n, FinModule::fromInvariantFactors(std::move(factors)), snf.v,
                        std::move(kept));
}

Submodule idealAction(const Ideal& i, const Submodule& n) {
  const FinModule& m = n.parent();
  if (i.generator == 0 || n.isZero()) return zeroSubmodule(m);
  if (i.generator == 1) return n;
  std::vector<Int> rows;
  for (const auto& g : n.generators()) {
    for (Int v : g) rows.push_back(static_cast<Int>((static_cast<__int128>(v) * i.generator) %
                                                    m.exponent()));
  }
  return canonicalize(m, rows);
}

Ideal annihilatorOf(const Submodule& n) { return {n.exponent()}; }

Ideal colonRing(const Submodule& k, const Submodule& n) {
  requireSameParent(k, n, "colonRing");
  for (Int r : divisors(k.parent().exponent())) {
    if (isContained(idealAction({r}, n), k)) return {r};
  }
  return {k.parent().exponent()};
}

Submodule colonModule(const Submodule& n, const Ideal& i) {
  const FinModule& m = n.parent();
  if (i.generator == 0) return wholeModule(m);
  if (i.generator == 1) return n;
  // Rows (a e_j, e_j) and (h, 0) for h in N: a zero first half means a·x ∈ N.
  const auto& d = m.invariantFactors();
  const std::size_t k = d.size();
  std::vector<Int> moduli(d.begin(), d.end());
  moduli.insert(moduli.end(), d.begin(), d.end());
  std::vector<Int> rows;
  rows.reserve(4 * k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) rows.push_back(j == r ? i.generator % d[j] : 0);
    for (std::size_t j = 0; j < k; ++j) rows.push_back(j == r ? 1 : 0);
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) rows.push_back(n.hnf()[r * k + j]);
    for (std::size_t j = 0; j < k; ++j) rows.push_back(0);
  }
  const auto big = detail::modularHnf(rows, moduli);
  std::vector<Int> out(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) out[r * k + j] = big[(k + r) * 2 * k + k + j];
  }
  return Submodule::fromCanonicalHnf(m, std::move(out));
}

Submodule socleOf(const FinModule& m) {
  return colonModule(zeroSubmodule(m), {squarefreeKernel(m.exponent())});
}

Submodule radicalOf(const FinModule& m) {
  // Rad(M) = ∩_p pM = (p_1 ... p_r) M for a finite abelian group.
  return idealAction({squarefreeKernel(m.exponent())}, wholeModule(m));
}

Submodule primaryComponent(const FinModule& m, const PrimeIdeal& p) {
  const Int e = m.exponent();
  if (e % p.p() != 0) return zeroSubmodule(m);
  return idealAction({e / ipow(p.p(), valuation(e, p.p()))}, wholeModule(m));
}

FinModule moduleOfSubmodule(const Submodule& n) {
  if (n.isZero()) return FinModule();
  // Relations of N on the HNF basis H: solve X H = diag(d).
  const auto& d = n.parent().invariantFactors();
  const std::size_t k = d.size();
  IntMatrix rel(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<BigInt> x(k);
    for (std::size_t j = 0; j < k; ++j) {
      BigInt target = (j == r) ? BigInt(d[r]) : BigInt(0);
      for (std::size_t l = 0; l < j; ++l) target -= x[l] * n.hnf()[l * k + j];
      x[j] = target / n.hnf()[j * k + j];
    }
    for (std::size_t j = 0; j < k; ++j) rel(r, j) = x[j];
  }
  std::vector<Int> factors;
  for (const auto& v : smithDiagonal(smithNormalForm(rel).s)) {
    if (v > 1) factors.push_back(static_cast<Int>(v));
  }
  return FinModule::fromInvariantFactors(std::move(factors));
}

std::vector<Int> canonicalKey(const Submodule& n) {
  const FinModule& m = n.parent();
  std::vector<Int> key;
  const Int e = m.exponent();
  for (Int p : m.primes()) {
    const auto part = idealAction({e / ipow(p, valuation(e, p))}, n);
    key.insert(key.end(), part.hnf().begin(), part.hnf().end());
  }
  return key;
}

bool canonicalLess(const Submodule& a, const Submodule& b) {
  requireSameParent(a, b, "canonicalLess");
  return canonicalKey(a) < canonicalKey(b);
}

std::string toString(const Submodule& n) {
  if (n.isZero()) return "0";
  std::ostringstream os;
  const bool cyclic = n.parent().rank() == 1;
  os << "<";
  bool first = true;
  for (const auto& g : n.generators()) {
    os << (first ? "" : ", ") << "(";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << ")";
    first = false;
  }
  os << ">";
  if (cyclic) return "(" + std::to_string(n.generators().front()[0]) + ")";
  return os.str();
}

}  // namespace modrep
