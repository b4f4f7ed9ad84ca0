#include "modrep/structure.hpp"

#include "modrep/second.hpp"

#include <algorithm>
#include <unordered_set>

namespace modrep {
namespace {

using Index = LatticeIndex;

// Number of cyclic prime-power factors in the primary decomposition.
int primePowerFactorCount(const FinModule& m) {
  int count = 0;
  for (Int d : m.invariantFactors()) count += static_cast<int>(primeDivisors(d).size());
  return count;
}

// Walks down from u through lower covers while N + K = M still holds. The
// set {K : N + K = M} is upward closed, so the endpoint is a supplement of N
// inside u (u must itself satisfy N + u = M).
Index descendToSupplement(const SubmoduleLattice& lat, Index n, Index u) {
  Index cur = u;
  for (bool moved = true; moved;) {
    moved = false;
    for (Index c : lat.lowerCovers(cur)) {
      if (lat.sumIsWhole(n, c)) {
        cur = c;
        moved = true;
        break;
      }
    }
  }
  return cur;
}

bool isSupplementOf(const SubmoduleLattice& lat, Index n, Index k) {
  if (!lat.sumIsWhole(n, k)) return false;
  // Any smaller K' with N + K' = M would lie under some lower cover of K.
  return std::none_of(lat.lowerCovers(k).begin(), lat.lowerCovers(k).end(),
                      [&](Index c) { return lat.sumIsWhole(n, c); });
}

std::vector<Index> atomsOf(const SubmoduleLattice& lat) {
  std::vector<Index> atoms;
  for (Index i = 0; i < lat.size(); ++i) {
    const auto& covers = lat.lowerCovers(i);
    if (covers.size() == 1 && covers.front() == lat.zero()) atoms.push_back(i);
  }
  return atoms;
}

}  // namespace

bool isSmall(const SubmoduleLattice& lat, Index n) {
  for (Index k = 0; k < lat.size(); ++k) {
    if (k != lat.whole() && lat.sumIsWhole(n, k)) return false;
  }
  return true;
}

bool isSmall(const Submodule& n, const LatticeOptions& options) {
  const SubmoduleLattice lat(n.parent(), options);
  return isSmall(lat, lat.indexOf(n));
}

bool isSmallFast(const Submodule& n) { return isContained(n, radicalOf(n.parent())); }

bool isLarge(const SubmoduleLattice& lat, Index n) {
  for (Index k = 0; k < lat.size(); ++k) {
    if (k != lat.zero() && lat.meetIsZero(n, k)) return false;
  }
  return true;
}

bool isLarge(const Submodule& n, const LatticeOptions& options) {
  const SubmoduleLattice lat(n.parent(), options);
  return isLarge(lat, lat.indexOf(n));
}

bool isLargeFast(const Submodule& n) { return isContained(socleOf(n.parent()), n); }

std::vector<Index> supplementsOf(const SubmoduleLattice& lat, Index n) {
  std::vector<Index> out;
  for (Index k = 0; k < lat.size(); ++k) {
    if (isSupplementOf(lat, n, k)) out.push_back(k);
  }
  return out;
}

std::vector<Submodule> supplementsOf(const Submodule& n, const LatticeOptions& options) {
  const SubmoduleLattice lat(n.parent(), options);
  std::vector<Submodule> out;
  for (Index k : supplementsOf(lat, lat.indexOf(n))) out.push_back(lat.at(k));
  return out;
}

bool satisfiesIS(const SubmoduleLattice& lat, Index k) {
  const auto& sub = lat.at(k);
  for (Int a : divisors(lat.module().exponent())) {
    const auto ik = idealAction({a}, sub);
    if (ik.isZero()) continue;
    const auto sups = supplementsOf(lat, lat.indexOf(ik));
    if (std::none_of(sups.begin(), sups.end(), [&](Index s) { return s != lat.whole(); })) {
      return false;
    }
  }
  return true;
}

bool satisfiesIS(const Submodule& k, const LatticeOptions& options) {
  const SubmoduleLattice lat(k.parent(), options);
  return satisfiesIS(lat, lat.indexOf(k));
}

bool isHollowSubmodule(const SubmoduleLattice& lat, Index h) {
  // In a finite lattice two proper submodules summing to H exist exactly when
  // H has more than one maximal submodule.
  return h != lat.zero() && lat.lowerCovers(h).size() == 1;
}

bool isUniformSubmodule(const SubmoduleLattice& lat, Index u) {
  if (u == lat.zero()) return false;
  // Dually: every nonzero submodule of U contains an atom, so U is uniform
  // exactly when it lies over a single atom.
  int atoms = 0;
  for (Index a : atomsOf(lat)) atoms += lat.contains(u, a);
  return atoms == 1;
}

bool isDirectSummand(const SubmoduleLattice& lat, Index n) {
  const Int need = lat.module().order() / lat.order(n);
  for (Index k = 0; k < lat.size(); ++k) {
    if (lat.order(k) == need && lat.meetIsZero(n, k)) return true;
  }
  return false;
}

std::vector<Index> maximalHollowSubmodules(const SubmoduleLattice& lat) {
  std::vector<Index> hollow;
  for (Index i = 0; i < lat.size(); ++i) {
    if (isHollowSubmodule(lat, i)) hollow.push_back(i);
  }
  std::vector<Index> out;
  for (Index h : hollow) {
    const bool dominated = std::any_of(hollow.begin(), hollow.end(), [&](Index g) {
      return g != h && lat.contains(g, h);
    });
    if (!dominated) out.push_back(h);
  }
  return out;
}

std::vector<Submodule> maximalHollowSubmodules(const FinModule& m, const LatticeOptions& options) {
  const SubmoduleLattice lat(m, options);
  std::vector<Submodule> out;
  for (Index i : maximalHollowSubmodules(lat)) out.push_back(lat.at(i));
  return out;
}

bool isSemisimple(const SubmoduleLattice& lat) {
  for (Index n = 0; n < lat.size(); ++n) {
    if (!isDirectSummand(lat, n)) return false;
  }
  return true;
}

bool isHollow(const SubmoduleLattice& lat) {
  if (lat.module().isZero()) return false;
  for (Index n = 0; n < lat.size(); ++n) {
    if (n != lat.whole() && !isSmall(lat, n)) return false;
  }
  return true;
}

bool isUniform(const SubmoduleLattice& lat) {
  if (lat.module().isZero()) return false;
  for (Index n = 0; n < lat.size(); ++n) {
    if (n != lat.zero() && !isLarge(lat, n)) return false;
  }
  return true;
}

bool isSupplemented(const SubmoduleLattice& lat) {
  for (Index n = 0; n < lat.size(); ++n) {
    if (!isSupplementOf(lat, n, descendToSupplement(lat, n, lat.whole()))) return false;
  }
  return true;
}

bool isAmplySupplemented(const SubmoduleLattice& lat) {
  for (Index n = 0; n < lat.size(); ++n) {
    for (Index u = 0; u < lat.size(); ++u) {
      if (!lat.sumIsWhole(n, u)) continue;
      const Index s = descendToSupplement(lat, n, u);
      if (!lat.contains(u, s) || !isSupplementOf(lat, n, s)) return false;
    }
  }
  return true;
}

bool isLifting(const SubmoduleLattice& lat) {
  std::vector<char> summand(lat.size());
  for (Index i = 0; i < lat.size(); ++i) summand[i] = isDirectSummand(lat, i);
  const auto& coatoms = lat.lowerCovers(lat.whole());
  for (Index n = 0; n < lat.size(); ++n) {
    if (summand[n]) continue;  // X = N works
    // N/X is small in M/X iff no proper K ⊇ X has N + K = M; such a K, if
    // any, lies under a maximal submodule, so it suffices to check those.
    bool found = false;
    for (Index x = 0; x < lat.size() && !found; ++x) {
      if (!summand[x] || !lat.contains(n, x)) continue;
      found = std::none_of(coatoms.begin(), coatoms.end(), [&](Index c) {
        return lat.contains(c, x) && lat.sumIsWhole(n, c);
      });
    }
    if (!found) return false;
  }
  return true;
}

bool isSLifting(const SubmoduleLattice& lat) {
  if (!isLifting(lat)) return false;
  for (Index h : maximalHollowSubmodules(lat)) {
    if (!isSecond(lat.at(h))) return false;
  }
  return true;
}

bool isMultiplication(const SubmoduleLattice& lat) {
  std::unordered_set<Index> multiples;
  const auto whole = lat.at(lat.whole());
  for (Int d : divisors(lat.module().exponent())) multiples.insert(lat.indexOf(idealAction({d}, whole)));
  for (Index n = 0; n < lat.size(); ++n) {
    if (!multiples.count(n)) return false;
  }
  return true;
}

bool isAtomic(const SubmoduleLattice& lat) {
  const auto atoms = atomsOf(lat);
  for (Index n = 0; n < lat.size(); ++n) {
    if (n == lat.zero()) continue;
    if (std::none_of(atoms.begin(), atoms.end(), [&](Index a) { return lat.contains(n, a); })) {
      return false;
    }
  }
  return true;
}

bool isCoatomic(const SubmoduleLattice& lat) {
  const auto& coatoms = lat.lowerCovers(lat.whole());
  for (Index n = 0; n < lat.size(); ++n) {
    if (n == lat.whole()) continue;
    if (std::none_of(coatoms.begin(), coatoms.end(), [&](Index c) { return lat.contains(c, n); })) {
      return false;
    }
  }
  return true;
}

int hollowDimension(const SubmoduleLattice& lat) {
  int best = 0;
  for (Index k = 0; k < lat.size(); ++k) {
    if (!isSmall(lat, k)) continue;
    best = std::max(best, primePowerFactorCount(quotientOf(lat.module(), lat.at(k)).quotient()));
  }
  return best;
}

int hollowDimensionFast(const FinModule& m) { return primePowerFactorCount(m); }

int uniformDimension(const SubmoduleLattice& lat) {
  Index sum = lat.zero();
  int count = 0;
  for (Index a = 0; a < lat.size(); ++a) {
    if (!isUniformSubmodule(lat, a) || !lat.meetIsZero(sum, a)) continue;
    sum = lat.join(sum, a);
    ++count;
  }
  // The greedy family is maximal; its sum is large in a finite module.
  return isLarge(lat, sum) ? count : -1;
}

StructureProfile classifyModule(const SubmoduleLattice& lat) {
  StructureProfile p;
  p.is_semisimple = isSemisimple(lat);
  p.is_hollow = isHollow(lat);
  p.is_uniform = isUniform(lat);
  p.is_supplemented = isSupplemented(lat);
  p.is_amply_supplemented = isAmplySupplemented(lat);
  p.is_lifting = isLifting(lat);
  p.is_s_lifting = p.is_lifting && isSLifting(lat);
  p.is_multiplication = isMultiplication(lat);
  p.is_atomic = isAtomic(lat);
  p.is_coatomic = isCoatomic(lat);
  p.hollow_dim = hollowDimension(lat);
  p.uniform_dim = uniformDimension(lat);
  return p;
}

StructureProfile classifyModule(const FinModule& m, const LatticeOptions& options) {
  return classifyModule(SubmoduleLattice(m, options));
}

}  // namespace modrep
