#pragma once

#include "modrep/int_matrix.hpp"
#include "modrep/number.hpp"

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace modrep {

/// A finite Z-module presented by its invariant factors d_1 | d_2 | ... | d_k,
/// each >= 2. The empty chain is the zero module. Cheap to copy.
class FinModule {
 public:
  FinModule();

  /// Trusts that `factors` is already a divisibility chain of values >= 2.
  static FinModule fromInvariantFactors(std::vector<Int> factors);

  const std::vector<Int>& invariantFactors() const noexcept { return data_->factors; }
  std::size_t rank() const noexcept { return data_->factors.size(); }
  Int exponent() const noexcept { return data_->exponent; }
  Int order() const noexcept { return data_->order; }
  /// Distinct primes dividing the exponent, ascending.
  const std::vector<Int>& primes() const noexcept { return data_->primes; }
  bool isZero() const noexcept { return data_->factors.empty(); }

  /// "Z2 + Z4", "Z18", or "0".
  std::string toString() const;

  friend bool operator==(const FinModule& a, const FinModule& b) {
    return a.data_ == b.data_ || a.data_->factors == b.data_->factors;
  }

 private:
  struct Data {
    std::vector<Int> factors;
    Int exponent = 1;
    Int order = 1;
    std::vector<Int> primes;
  };
  explicit FinModule(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Normalizes an arbitrary list of cyclic orders (each >= 2) into invariant
/// factors via Smith normal form. Throws ValidationError on factors < 2 or when
/// the order does not fit in 62 bits.
FinModule makeModule(std::span<const Int> factors);
inline FinModule makeModule(std::initializer_list<Int> factors) {
  return makeModule(std::span<const Int>(factors.begin(), factors.size()));
}

/// The ideal aZ, a >= 0. Inclusion is reverse divisibility.
struct Ideal {
  Int generator = 0;

  static Ideal zero() { return {0}; }
  static Ideal unit() { return {1}; }

  /// other ⊆ this
  bool contains(const Ideal& other) const {
    if (generator == 0) return other.generator == 0;
    return other.generator % generator == 0;
  }

  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

class PrimeIdeal {
 public:
  /// Throws ValidationError unless p is prime.
  explicit PrimeIdeal(Int p);

  Int p() const noexcept { return p_; }
  Ideal ideal() const noexcept { return {p_}; }

  friend auto operator<=>(const PrimeIdeal&, const PrimeIdeal&) = default;

 private:
  Int p_;
};

/// A subgroup of a FinModule, held as the canonical HNF of its preimage
/// lattice in Z^k (which contains diag(d_1, ..., d_k)). Two submodules are
/// equal iff their canonical bases are identical.
class Submodule {
 public:
  const FinModule& parent() const noexcept { return parent_; }

  /// k x k canonical HNF, row-major. Pivot i divides d_i.
  std::span<const Int> hnf() const noexcept { return hnf_; }
  IntMatrix basis() const;

  /// HNF rows that are nonzero in the module (pivot below d_i), reduced.
  std::vector<std::vector<Int>> generators() const;

  Int order() const noexcept { return order_; }
  /// Least e > 0 with eN = 0.
  Int exponent() const;
  bool isZero() const noexcept { return order_ == 1; }
  bool isWhole() const noexcept { return order_ == parent_.order(); }

  std::size_t hash() const noexcept;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.order_ == b.order_ && a.hnf_ == b.hnf_ && a.parent_ == b.parent_;
  }

  /// Wraps an already-canonical HNF. Internal use.
  static Submodule fromCanonicalHnf(FinModule parent, std::vector<Int> hnf);

 private:
  Submodule(FinModule parent, std::vector<Int> hnf);

  FinModule parent_;
  std::vector<Int> hnf_;
  Int order_ = 1;
};

struct SubmoduleHash {
  std::size_t operator()(const Submodule& s) const noexcept { return s.hash(); }
};

Submodule zeroSubmodule(const FinModule& m);
Submodule wholeModule(const FinModule& m);

/// Throws DimensionError if a vector's length differs from the rank.
Submodule submoduleFromGenerators(const FinModule& m, const std::vector<std::vector<Int>>& gens);

Submodule sumOf(const Submodule& a, const Submodule& b);
Submodule sumOf(std::span<const Submodule> parts, const FinModule& m);
Submodule intersectOf(const Submodule& a, const Submodule& b);
/// small ⊆ big
bool isContained(const Submodule& small, const Submodule& big);

/// Quotient M/N together with the induced map on submodules containing N.
class QuotientResult {
 public:
  QuotientResult(FinModule parent, Submodule kernel, FinModule quotient, IntMatrix transform,
                 std::vector<std::size_t> kept);

  const FinModule& quotient() const noexcept { return quotient_; }
  const Submodule& kernel() const noexcept { return kernel_; }

  /// Image (K + N)/N of any submodule K of the parent.
  Submodule project(const Submodule& k) const;
  std::vector<Int> projectVector(std::span<const Int> x) const;

 private:
  FinModule parent_;
  Submodule kernel_;
  FinModule quotient_;
  IntMatrix transform_;
  std::vector<std::size_t> kept_;
};

QuotientResult quotientOf(const FinModule& m, const Submodule& n);

/// IN = {a x : x in N}.
Submodule idealAction(const Ideal& i, const Submodule& n);
Ideal annihilatorOf(const Submodule& n);
/// (K :_R N) = {r : rN ⊆ K}
Ideal colonRing(const Submodule& k, const Submodule& n);
/// (N :_M I) = {x : Ix ⊆ N}
Submodule colonModule(const Submodule& n, const Ideal& i);

Submodule socleOf(const FinModule& m);
Submodule radicalOf(const FinModule& m);
Submodule primaryComponent(const FinModule& m, const PrimeIdeal& p);

/// Isomorphism type of a submodule viewed as a module in its own right.
FinModule moduleOfSubmodule(const Submodule& n);

/// Sort key realizing the canonical order: p-parts by ascending prime, each
/// compared lexicographically by canonical basis.
std::vector<Int> canonicalKey(const Submodule& n);
bool canonicalLess(const Submodule& a, const Submodule& b);

std::string toString(const Submodule& n);

}  // namespace modrep
