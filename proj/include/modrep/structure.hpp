#pragma once

#include "modrep/lattice.hpp"
#include "modrep/module.hpp"

#include <vector>

namespace modrep {

struct StructureProfile {
  bool is_semisimple = false;
  bool is_hollow = false;
  bool is_uniform = false;
  bool is_supplemented = false;
  bool is_amply_supplemented = false;
  bool is_lifting = false;
  bool is_s_lifting = false;
  bool is_multiplication = false;
  bool is_atomic = false;
  bool is_coatomic = false;
  int hollow_dim = 0;
  int uniform_dim = 0;

  friend bool operator==(const StructureProfile&, const StructureProfile&) = default;
};

using LatticeIndex = SubmoduleLattice::Index;

// Lattice-level predicates. Each is the definition evaluated over the full
// submodule lattice; the *Fast variants are closed-form shortcuts.

/// N + K ≠ M for every proper K.
bool isSmall(const SubmoduleLattice& lat, LatticeIndex n);
bool isSmall(const Submodule& n, const LatticeOptions& options = {});
/// N ⊆ Rad(M).
bool isSmallFast(const Submodule& n);

/// N ∩ K ≠ 0 for every nonzero K.
bool isLarge(const SubmoduleLattice& lat, LatticeIndex n);
bool isLarge(const Submodule& n, const LatticeOptions& options = {});
/// Soc(M) ⊆ N.
bool isLargeFast(const Submodule& n);

/// Submodules K minimal with N + K = M, canonical order.
std::vector<LatticeIndex> supplementsOf(const SubmoduleLattice& lat, LatticeIndex n);
std::vector<Submodule> supplementsOf(const Submodule& n, const LatticeOptions& options = {});

/// For every ideal I with IK ≠ 0, IK has a supplement other than M.
bool satisfiesIS(const SubmoduleLattice& lat, LatticeIndex k);
bool satisfiesIS(const Submodule& k, const LatticeOptions& options = {});

/// Nonzero and no two proper submodules of it sum to it.
bool isHollowSubmodule(const SubmoduleLattice& lat, LatticeIndex h);
/// Nonzero and every nonzero submodule of it meets every other nonzero one.
bool isUniformSubmodule(const SubmoduleLattice& lat, LatticeIndex u);
/// N has a complement: N ∩ K = 0 and N + K = M.
bool isDirectSummand(const SubmoduleLattice& lat, LatticeIndex n);

std::vector<LatticeIndex> maximalHollowSubmodules(const SubmoduleLattice& lat);
std::vector<Submodule> maximalHollowSubmodules(const FinModule& m, const LatticeOptions& options = {});

bool isSemisimple(const SubmoduleLattice& lat);
bool isHollow(const SubmoduleLattice& lat);
bool isUniform(const SubmoduleLattice& lat);
bool isSupplemented(const SubmoduleLattice& lat);
bool isAmplySupplemented(const SubmoduleLattice& lat);
bool isLifting(const SubmoduleLattice& lat);
/// Lifting, and every maximal hollow submodule is second.
bool isSLifting(const SubmoduleLattice& lat);
/// Every submodule is dM for a divisor d of the exponent.
bool isMultiplication(const SubmoduleLattice& lat);
bool isAtomic(const SubmoduleLattice& lat);
bool isCoatomic(const SubmoduleLattice& lat);

/// Max over small K of the number of prime-power cyclic factors of M/K.
int hollowDimension(const SubmoduleLattice& lat);
/// Number of prime-power cyclic factors of M.
int hollowDimensionFast(const FinModule& m);
/// Size of a maximal independent family of uniform submodules whose sum is
/// large (every such family has the same size).
int uniformDimension(const SubmoduleLattice& lat);

StructureProfile classifyModule(const SubmoduleLattice& lat);
StructureProfile classifyModule(const FinModule& m, const LatticeOptions& options = {});

}  // namespace modrep
