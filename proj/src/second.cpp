#include "modrep/second.hpp"

#include "modrep/errors.hpp"

#include <algorithm>
#include <map>

namespace modrep {
namespace {

std::optional<PrimeIdeal> primeIdealIf(Int g) {
  if (!isPrime(g)) return std::nullopt;
  return PrimeIdeal(g);
}

std::vector<PrimeIdeal> sortedUnique(std::vector<PrimeIdeal> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

Submodule sumExcept(const std::vector<Submodule>& parts, std::size_t skip, const FinModule& m) {
  Submodule s = zeroSubmodule(m);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != skip) s = sumOf(s, parts[i]);
  }
  return s;
}

bool irredundant(const std::vector<Submodule>& parts, const FinModule& m) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (isContained(parts[i], sumExcept(parts, i, m))) return false;
  }
  return true;
}

bool canonicalSequenceLess(const Representation& a, const Representation& b) {
  std::vector<std::vector<Int>> ka, kb;
  for (const auto& s : a.summands) ka.push_back(canonicalKey(s));
  for (const auto& s : b.summands) kb.push_back(canonicalKey(s));
  if (ka != kb) return ka < kb;
  return a.attached < b.attached;
}

}  // namespace

const char* toString(RepKind kind) { return kind == RepKind::Second ? "second" : "secondary"; }

std::optional<PrimeIdeal> isSecond(const Submodule& k) {
  if (k.isZero()) return std::nullopt;
  // a = 0 sends K to 0; every other ring element acts through its gcd with
  // the exponent, so the divisors cover all ideals.
  for (Int a : divisors(k.parent().exponent())) {
    const auto ak = idealAction({a}, k);
    if (!ak.isZero() && !(ak == k)) return std::nullopt;
  }
  return primeIdealIf(annihilatorOf(k).generator);
}

std::optional<PrimeIdeal> isSecondFast(const Submodule& k) {
  if (k.isZero()) return std::nullopt;
  std::optional<Int> killer;
  for (Int p : k.parent().primes()) {
    const auto pk = idealAction({p}, k);
    if (pk.isZero()) {
      if (killer) return std::nullopt;
      killer = p;
    } else if (!(pk == k)) {
      return std::nullopt;
    }
  }
  if (!killer) return std::nullopt;
  return PrimeIdeal(*killer);
}

std::optional<PrimeIdeal> isSecondary(const Submodule& k) {
  if (k.isZero()) return std::nullopt;
  for (Int a : divisors(k.parent().exponent())) {
    auto cur = idealAction({a}, k);
    if (cur == k) continue;
    // Powers of a give a descending chain; it stabilizes in finitely many steps.
    while (!cur.isZero()) {
      auto next = idealAction({a}, cur);
      if (next == cur) return std::nullopt;
      cur = std::move(next);
    }
  }
  return primeIdealIf(squarefreeKernel(annihilatorOf(k).generator));
}

std::optional<PrimeIdeal> isSecondaryFast(const Submodule& k) {
  if (k.isZero()) return std::nullopt;
  const auto f = factorize(k.order());
  if (f.size() != 1) return std::nullopt;
  return PrimeIdeal(f.front().first);
}

std::optional<PrimeIdeal> attachedPrime(const Submodule& k, RepKind kind) {
  return kind == RepKind::Second ? isSecond(k) : isSecondary(k);
}

std::vector<Submodule> specSecond(const SubmoduleLattice& lat) {
  std::vector<Submodule> out;
  for (const auto& s : lat.submodules()) {
    if (isSecond(s)) out.push_back(s);
  }
  return out;
}

std::vector<Submodule> specSecond(const FinModule& m, const LatticeOptions& options) {
  return specSecond(SubmoduleLattice(m, options));
}

std::vector<PrimeIdeal> minimalPrimes(const std::vector<PrimeIdeal>& primes) {
  std::vector<PrimeIdeal> out;
  for (const auto& p : primes) {
    const bool has_smaller = std::any_of(primes.begin(), primes.end(), [&](const PrimeIdeal& q) {
      return !(q == p) && p.ideal().contains(q.ideal());
    });
    if (!has_smaller) out.push_back(p);
  }
  return sortedUnique(std::move(out));
}

std::vector<PrimeIdeal> maximalPrimes(const std::vector<PrimeIdeal>& primes) {
  std::vector<PrimeIdeal> out;
  for (const auto& p : primes) {
    const bool has_larger = std::any_of(primes.begin(), primes.end(), [&](const PrimeIdeal& q) {
      return !(q == p) && q.ideal().contains(p.ideal());
    });
    if (!has_larger) out.push_back(p);
  }
  return sortedUnique(std::move(out));
}

AttReport attAll(const SubmoduleLattice& lat) {
  AttReport r;
  for (const auto& s : lat.submodules()) {
    if (auto p = isSecond(s)) r.att_all.push_back(*p);
  }
  r.att_all = sortedUnique(std::move(r.att_all));
  if (auto rep = findRepresentation(lat, RepKind::Second)) r.att_main = sortedUnique(rep->attached);
  r.min_all = minimalPrimes(r.att_all);
  r.max_all = maximalPrimes(r.att_all);
  r.min_main = minimalPrimes(r.att_main);
  r.max_main = maximalPrimes(r.att_main);
  return r;
}

AttReport attAll(const FinModule& m, const LatticeOptions& options) {
  return attAll(SubmoduleLattice(m, options));
}

bool isSemisecond(const SubmoduleLattice& lat) {
  if (lat.module().isZero()) return false;
  Submodule total = zeroSubmodule(lat.module());
  for (const auto& s : specSecond(lat)) total = sumOf(total, s);
  return total.isWhole();
}

bool isSemisecond(const FinModule& m, const LatticeOptions& options) {
  return isSemisecond(SubmoduleLattice(m, options));
}

bool isSemisecondFast(const FinModule& m) { return !m.isZero() && socleOf(m).isWhole(); }

Submodule largestPrimarySummand(const SubmoduleLattice& lat, Int p, RepKind kind) {
  Submodule total = zeroSubmodule(lat.module());
  for (const auto& s : lat.submodules()) {
    const auto q = attachedPrime(s, kind);
    if (q && q->p() == p) total = sumOf(total, s);
  }
  return total;
}

std::optional<Representation> findRepresentation(const SubmoduleLattice& lat, RepKind kind) {
  const auto& m = lat.module();
  if (m.isZero()) return std::nullopt;
  Representation r;
  r.kind = kind;
  for (Int p : m.primes()) {
    auto part = kind == RepKind::Second ? largestPrimarySummand(lat, p, kind)
                                        : primaryComponent(m, PrimeIdeal(p));
    if (part.isZero()) continue;
    r.summands.push_back(std::move(part));
    r.attached.emplace_back(p);
  }
  if (!sumOf(r.summands, m).isWhole()) return std::nullopt;
  return minimizeRepresentation(r);
}

std::optional<Representation> findRepresentation(const FinModule& m, RepKind kind,
                                                 const LatticeOptions& options) {
  return findRepresentation(SubmoduleLattice(m, options), kind);
}

bool isMinimalRepresentation(const Representation& r) {
  if (r.summands.empty()) return false;
  auto primes = r.attached;
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) return false;
  return irredundant(r.summands, r.summands.front().parent());
}

bool isDirectRepresentation(const Representation& r) {
  if (r.summands.empty()) return false;
  const auto& m = r.summands.front().parent();
  BigInt product = 1;
  for (const auto& s : r.summands) product *= s.order();
  return product == sumOf(r.summands, m).order();
}

Representation minimizeRepresentation(const Representation& r) {
  if (r.summands.empty()) return r;
  const auto& m = r.summands.front().parent();
  std::map<PrimeIdeal, Submodule> merged;
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    auto [it, fresh] = merged.try_emplace(r.attached[i], r.summands[i]);
    if (!fresh) it->second = sumOf(it->second, r.summands[i]);
  }
  std::vector<std::pair<PrimeIdeal, Submodule>> parts(merged.begin(), merged.end());
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return canonicalLess(a.second, b.second); });
  for (std::size_t i = 0; i < parts.size();) {
    Submodule others = zeroSubmodule(m);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i) others = sumOf(others, parts[j].second);
    }
    if (parts.size() > 1 && isContained(parts[i].second, others)) {
      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Representation out;
  out.kind = r.kind;
  for (auto& [p, s] : parts) {
    out.attached.push_back(p);
    out.summands.push_back(std::move(s));
  }
  out.is_minimal = isMinimalRepresentation(out);
  out.is_direct = isDirectRepresentation(out);
  return out;
}

std::vector<Representation> allMinimalRepresentations(const SubmoduleLattice& lat, RepKind kind,
                                                      std::size_t max_candidates_per_prime) {
  const auto& m = lat.module();
  std::vector<Representation> out;
  if (m.isZero()) return out;
  const auto& primes = m.primes();

  // Attached primes per submodule, computed once.
  std::vector<std::optional<PrimeIdeal>> att(lat.size());
  for (SubmoduleLattice::Index i = 0; i < lat.size(); ++i) att[i] = attachedPrime(lat.at(i), kind);

  std::vector<Submodule> largest(primes.size(), zeroSubmodule(m));
  for (SubmoduleLattice::Index i = 0; i < lat.size(); ++i) {
    if (!att[i]) continue;
    const auto it = std::find(primes.begin(), primes.end(), att[i]->p());
    auto& slot = largest[static_cast<std::size_t>(it - primes.begin())];
    slot = sumOf(slot, lat.at(i));
  }

  // A p-summand K can only occur if K together with everything the other
  // primes could contribute still reaches M.
  std::vector<std::vector<SubmoduleLattice::Index>> candidates(primes.size());
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    Submodule rest = zeroSubmodule(m);
    for (std::size_t qi = 0; qi < primes.size(); ++qi) {
      if (qi != pi) rest = sumOf(rest, largest[qi]);
    }
    const auto rest_index = lat.indexOf(rest);
    for (SubmoduleLattice::Index i = 0; i < lat.size(); ++i) {
      if (att[i] && att[i]->p() == primes[pi] && lat.sumIsWhole(i, rest_index)) {
        candidates[pi].push_back(i);
      }
    }
    if (candidates[pi].size() > max_candidates_per_prime) {
      throw ResourceCapError("minimal representation search: " +
                             std::to_string(candidates[pi].size()) + " candidates for prime " +
                             std::to_string(primes[pi]) + " exceed the cap of " +
                             std::to_string(max_candidates_per_prime));
    }
  }

  // Mixed-radix walk over one-or-no candidate per prime.
  std::vector<std::size_t> choice(primes.size(), 0);  // 0 = none, c = candidates[c-1]
  while (true) {
    std::vector<Submodule> summands;
    std::vector<PrimeIdeal> attached;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      if (choice[pi] == 0) continue;
      summands.push_back(lat.at(candidates[pi][choice[pi] - 1]));
      attached.emplace_back(primes[pi]);
    }
    if (!summands.empty() && sumOf(summands, m).isWhole() && irredundant(summands, m)) {
      Representation r{kind, std::move(summands), std::move(attached), true, false};
      r.is_direct = isDirectRepresentation(r);
      out.push_back(std::move(r));
    }
    std::size_t pos = 0;
    while (pos < primes.size() && ++choice[pos] > candidates[pos].size()) choice[pos++] = 0;
    if (pos == primes.size()) break;
  }
  std::sort(out.begin(), out.end(), canonicalSequenceLess);
  return out;
}

std::vector<Representation> allMinimalRepresentations(const FinModule& m, RepKind kind,
                                                      const SecondOptions& options) {
  return allMinimalRepresentations(SubmoduleLattice(m, options.lattice), kind,
                                   options.max_candidates_per_prime);
}

bool isIsolated(const std::vector<PrimeIdeal>& a, const std::vector<PrimeIdeal>& att) {
  for (const auto& q : a) {
    if (std::find(att.begin(), att.end(), q) == att.end()) {
      throw SubsetError("prime " + std::to_string(q.p()) + " is not in the attached set");
    }
  }
  for (const auto& p : att) {
    const bool below_some = std::any_of(a.begin(), a.end(),
                                        [&](const PrimeIdeal& q) { return q.ideal().contains(p.ideal()); });
    if (below_some && std::find(a.begin(), a.end(), p) == a.end()) return false;
  }
  return true;
}

}  // namespace modrep
