#pragma once

#include "modrep/module.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace modrep {

struct LatticeOptions {
  /// Enumeration is refused when the submodule count exceeds this.
  std::uint64_t max_submodules = 1'000'000;
};

/// Exact number of submodules, from the closed-form count of subgroups of
/// each abelian p-group (product over primes).
BigInt countSubmodules(const FinModule& m);

/// Every submodule exactly once, in canonical order (p-parts by ascending
/// prime, each lexicographic by canonical basis). Throws ResourceCapError.
std::vector<Submodule> enumerateSubmodules(const FinModule& m, const LatticeOptions& options = {});

/// Maximal proper submodules (prime index), canonical order.
std::vector<Submodule> maximalSubmodules(const FinModule& m, const LatticeOptions& options = {});

/// The submodule lattice of a module, indexed in canonical order, with element
/// bitsets for fast containment and intersection-order queries.
class SubmoduleLattice {
 public:
  using Index = std::uint32_t;

  explicit SubmoduleLattice(const FinModule& m, const LatticeOptions& options = {});

  const FinModule& module() const noexcept { return module_; }
  std::size_t size() const noexcept { return subs_.size(); }
  const Submodule& at(Index i) const { return subs_[i]; }
  const std::vector<Submodule>& submodules() const noexcept { return subs_; }
  Index indexOf(const Submodule& s) const;

  Index zero() const noexcept { return zero_; }
  Index whole() const noexcept { return whole_; }
  Int order(Index i) const { return subs_[i].order(); }

  /// small ⊆ big
  bool contains(Index big, Index small) const;
  Int meetOrder(Index a, Index b) const;
  /// a + b = M, decided from |a|·|b| = |M|·|a ∩ b|.
  bool sumIsWhole(Index a, Index b) const;
  bool meetIsZero(Index a, Index b) const { return meetOrder(a, b) == 1; }
  Index join(Index a, Index b) const;
  Index meet(Index a, Index b) const;

  /// Maximal submodules of submodule i (prime-index subgroups of it).
  const std::vector<Index>& lowerCovers(Index i) const;
  /// All j with j ⊆ i.
  std::vector<Index> below(Index i) const;

 private:
  void ensureElements() const;
  void ensureCovers() const;
  std::span<const std::uint64_t> bits(Index i) const;

  FinModule module_;
  std::vector<Submodule> subs_;
  std::unordered_map<Submodule, Index, SubmoduleHash> index_;
  Index zero_ = 0;
  Index whole_ = 0;

  mutable std::once_flag elements_once_;
  mutable std::size_t words_ = 0;
  mutable std::vector<std::uint64_t> elements_;
  mutable std::once_flag covers_once_;
  mutable std::vector<std::vector<Index>> covers_;
};

}  // namespace modrep
