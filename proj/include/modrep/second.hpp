#pragma once

#include "modrep/lattice.hpp"
#include "modrep/module.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace modrep {

enum class RepKind { Second, Secondary };

const char* toString(RepKind kind);

/// M = Σ summands, summand i attached to attached[i].
struct Representation {
  RepKind kind = RepKind::Second;
  std::vector<Submodule> summands;
  std::vector<PrimeIdeal> attached;
  bool is_minimal = false;
  bool is_direct = false;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Attached-prime sets, each sorted ascending by prime.
struct AttReport {
  std::vector<PrimeIdeal> att_all;
  std::vector<PrimeIdeal> att_main;
  std::vector<PrimeIdeal> min_all, max_all;
  std::vector<PrimeIdeal> min_main, max_main;
};

struct SecondOptions {
  LatticeOptions lattice;
  /// Candidates per prime in the exhaustive minimal-representation search.
  std::size_t max_candidates_per_prime = 4096;
};

/// Definitional: k ≠ 0 and aK ∈ {0, K} for every divisor a of the parent
/// exponent and for a = 0. Returns the prime Ann(k).
std::optional<PrimeIdeal> isSecond(const Submodule& k);
/// Prime-only test: pK ∈ {0, K} for each prime p, exactly one annihilating.
std::optional<PrimeIdeal> isSecondFast(const Submodule& k);

/// Definitional: every ring element acts on k surjectively or nilpotently.
/// Returns the prime radical of Ann(k).
std::optional<PrimeIdeal> isSecondary(const Submodule& k);
/// Order-based test: k is secondary iff its order is a prime power.
std::optional<PrimeIdeal> isSecondaryFast(const Submodule& k);

std::optional<PrimeIdeal> attachedPrime(const Submodule& k, RepKind kind);

/// All second submodules, canonical order.
std::vector<Submodule> specSecond(const SubmoduleLattice& lat);
std::vector<Submodule> specSecond(const FinModule& m, const LatticeOptions& options = {});

/// Minimal and maximal elements of a prime set under ideal inclusion.
std::vector<PrimeIdeal> minimalPrimes(const std::vector<PrimeIdeal>& primes);
std::vector<PrimeIdeal> maximalPrimes(const std::vector<PrimeIdeal>& primes);

AttReport attAll(const SubmoduleLattice& lat);
AttReport attAll(const FinModule& m, const LatticeOptions& options = {});

/// Sum of all second submodules equals M (false for the zero module).
bool isSemisecond(const SubmoduleLattice& lat);
bool isSemisecond(const FinModule& m, const LatticeOptions& options = {});
/// Socle criterion.
bool isSemisecondFast(const FinModule& m);

/// The sum of all p-second (kind = Second) or p-secondary submodules; zero
/// when there are none.
Submodule largestPrimarySummand(const SubmoduleLattice& lat, Int p, RepKind kind);

std::optional<Representation> findRepresentation(const SubmoduleLattice& lat, RepKind kind);
std::optional<Representation> findRepresentation(const FinModule& m, RepKind kind,
                                                 const LatticeOptions& options = {});

/// Both conditions: pairwise distinct primes, no summand inside the sum of
/// the others.
bool isMinimalRepresentation(const Representation& r);
bool isDirectRepresentation(const Representation& r);

/// Merges summands sharing a prime, then drops redundant summands in
/// canonical order. Summands come back sorted by attached prime.
Representation minimizeRepresentation(const Representation& r);

/// Every minimal representation of the given kind, canonical order.
std::vector<Representation> allMinimalRepresentations(const SubmoduleLattice& lat, RepKind kind,
                                                      std::size_t max_candidates_per_prime = 4096);
std::vector<Representation> allMinimalRepresentations(const FinModule& m, RepKind kind,
                                                      const SecondOptions& options = {});

/// a is downward closed inside att. Throws SubsetError unless a ⊆ att.
bool isIsolated(const std::vector<PrimeIdeal>& a, const std::vector<PrimeIdeal>& att);

}  // namespace modrep
