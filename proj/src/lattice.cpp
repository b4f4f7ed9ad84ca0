#include "modrep/lattice.hpp"

#include "modrep/detail/lattice_hnf.hpp"
#include "modrep/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace modrep {
namespace {

constexpr std::uint64_t kMaxElementWords = std::uint64_t{1} << 26;

BigInt bigPow(Int p, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

BigInt gaussianBinomial(int n, int k, Int p) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    num *= bigPow(p, n - j) - 1;
    den *= bigPow(p, j + 1) - 1;
  }
  return num / den;
}

std::vector<int> conjugate(const std::vector<int>& parts) {
  const int top = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  std::vector<int> conj(static_cast<std::size_t>(top) + 2, 0);
  for (int i = 1; i <= top; ++i) {
    conj[static_cast<std::size_t>(i)] =
        static_cast<int>(std::count_if(parts.begin(), parts.end(), [i](int v) { return v >= i; }));
  }
  return conj;  // 1-based, with a trailing zero
}

// Number of subgroups of the abelian p-group of type `lambda` (descending).
BigInt countPGroupSubgroups(Int p, const std::vector<int>& lambda) {
  const auto lam_c = conjugate(lambda);
  BigInt total = 0;
  std::vector<int> mu(lambda.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    if (i == lambda.size()) {
      auto mu_c = conjugate(mu);
      mu_c.resize(lam_c.size() + 1, 0);
      BigInt term = 1;
      for (std::size_t j = 1; j + 1 < lam_c.size(); ++j) {
        const int l = lam_c[j], m = mu_c[j], m_next = mu_c[j + 1];
        term *= bigPow(p, m_next * (l - m)) * gaussianBinomial(l - m_next, m - m_next, p);
      }
      total += term;
      return;
    }
    for (int v = 0; v <= std::min(cap, lambda[i]); ++v) {
      mu[i] = v;
      rec(i + 1, v);
    }
    mu[i] = 0;
  };
  rec(0, lambda.empty() ? 0 : lambda.front());
  return total;
}

// All subgroups of the p-part of m as submodules of m, sorted by canonical basis.
std::vector<Submodule> enumeratePrimaryPart(const FinModule& m, Int p) {
  const auto& d = m.invariantFactors();
  std::vector<std::size_t> coords;
  std::vector<Int> mods;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int a = valuation(d[i], p);
    if (a == 0) continue;
    coords.push_back(i);
    mods.push_back(ipow(p, a));
  }
  const std::size_t r = coords.size();
  const std::size_t k = d.size();
  std::vector<Int> h(r * r, 0);
  std::vector<Submodule> out;

  auto emit = [&] {
    std::vector<Int> rows(r * k, 0);
    for (std::size_t t = 0; t < r; ++t) {
      for (std::size_t c = t; c < r; ++c) {
        rows[t * k + coords[c]] = h[t * r + c] * (d[coords[c]] / mods[c]);
      }
    }
    out.push_back(Submodule::fromCanonicalHnf(m, detail::modularHnf(rows, d)));
  };

  // p^{a_i} e_i must lie in the lattice: (mods_i / h_ii) * (row i tail) has to
  // reduce to zero against the rows below.
  auto rowAdmissible = [&](std::size_t i) {
    const Int scale = mods[i] / h[i * r + i];
    std::vector<Int> w(r, 0);
    for (std::size_t c = i + 1; c < r; ++c) w[c] = (scale * h[i * r + c]) % mods[c];
    for (std::size_t j = i + 1; j < r; ++j) {
      const Int pivot = h[j * r + j];
      if (w[j] % pivot != 0) return false;
      const Int q = w[j] / pivot;
      for (std::size_t c = j + 1; c < r; ++c) {
        w[c] = ((w[c] - q * h[j * r + c]) % mods[c] + mods[c]) % mods[c];
      }
    }
    return true;
  };

  std::function<void(std::ptrdiff_t)> rec = [&](std::ptrdiff_t row) {
    if (row < 0) {
      emit();
      return;
    }
    const auto i = static_cast<std::size_t>(row);
    for (Int pivot = 1; pivot <= mods[i]; pivot *= p) {
      h[i * r + i] = pivot;
      for (std::size_t c = i + 1; c < r; ++c) h[i * r + c] = 0;
      for (;;) {
        if (rowAdmissible(i)) rec(row - 1);
        // odometer over the entries right of the pivot, each below its column pivot
        bool advanced = false;
        for (std::size_t c = r; c > i + 1 && !advanced;) {
          --c;
          if (++h[i * r + c] < h[c * r + c]) {
            advanced = true;
          } else {
            h[i * r + c] = 0;
          }
        }
        if (!advanced) break;
      }
    }
    for (std::size_t c = i; c < r; ++c) h[i * r + c] = 0;
  };
  rec(static_cast<std::ptrdiff_t>(r) - 1);

  std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
    return std::lexicographical_compare(a.hnf().begin(), a.hnf().end(), b.hnf().begin(), b.hnf().end());
  });
  return out;
}

}  // namespace

BigInt countSubmodules(const FinModule& m) {
  BigInt total = 1;
  for (Int p : m.primes()) {
    std::vector<int> lambda;
    for (Int d : m.invariantFactors()) {
      const int a = valuation(d, p);
      if (a > 0) lambda.push_back(a);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    total *= countPGroupSubgroups(p, lambda);
  }
  return total;
}

std::vector<Submodule> enumerateSubmodules(const FinModule& m, const LatticeOptions& options) {
  const BigInt count = countSubmodules(m);
  if (count > options.max_submodules) {
    throw ResourceCapError("submodule lattice of " + m.toString() + " has " + count.str() +
                           " elements, cap is " + std::to_string(options.max_submodules));
  }
  std::vector<Submodule> result{zeroSubmodule(m)};
  for (Int p : m.primes()) {
    const auto parts = enumeratePrimaryPart(m, p);
    std::vector<Submodule> next;
    next.reserve(result.size() * parts.size());
    for (const auto& base : result) {
      for (const auto& part : parts) next.push_back(sumOf(base, part));
    }
    result = std::move(next);
  }
  return result;
}

std::vector<Submodule> maximalSubmodules(const FinModule& m, const LatticeOptions& options) {
  std::vector<Submodule> out;
  for (auto& s : enumerateSubmodules(m, options)) {
    if (isPrime(m.order() / s.order()) && m.order() % s.order() == 0) out.push_back(std::move(s));
  }
  return out;
}

SubmoduleLattice::SubmoduleLattice(const FinModule& m, const LatticeOptions& options)
    : module_(m), subs_(enumerateSubmodules(m, options)) {
  index_.reserve(subs_.size());
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    index_.emplace(subs_[i], static_cast<Index>(i));
    if (subs_[i].isZero()) zero_ = static_cast<Index>(i);
    if (subs_[i].isWhole()) whole_ = static_cast<Index>(i);
  }
}

SubmoduleLattice::Index SubmoduleLattice::indexOf(const Submodule& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw ParentMismatchError("submodule does not belong to this lattice");
  return it->second;
}

void SubmoduleLattice::ensureElements() const {
  std::call_once(elements_once_, [this] {
    const auto& d = module_.invariantFactors();
    const std::size_t k = d.size();
    const auto order = static_cast<std::uint64_t>(module_.order());
    const std::uint64_t words = (order + 63) / 64;
    if (words * subs_.size() > kMaxElementWords) return;
    words_ = static_cast<std::size_t>(words);
    elements_.assign(words_ * subs_.size(), 0);

    std::vector<std::uint64_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * static_cast<std::uint64_t>(d[i]);

    std::vector<Int> x(k), counter(k);
    for (std::size_t s = 0; s < subs_.size(); ++s) {
      const auto h = subs_[s].hnf();
      std::uint64_t* out = elements_.data() + s * words_;
      // Coset representatives: sum_i c_i * row_i with 0 <= c_i < d_i / h_ii.
      std::fill(counter.begin(), counter.end(), 0);
      std::fill(x.begin(), x.end(), 0);
      for (bool done = false; !done;) {
        std::uint64_t idx = 0;
        for (std::size_t c = 0; c < k; ++c) idx += static_cast<std::uint64_t>(x[c]) * stride[c];
        out[idx / 64] |= std::uint64_t{1} << (idx % 64);
        done = true;
        for (std::size_t i = k; i-- > 0;) {
          const Int bound = d[i] / h[i * k + i];
          if (++counter[i] < bound) {
            for (std::size_t c = i; c < k; ++c) x[c] = (x[c] + h[i * k + c]) % d[c];
            done = false;
            break;
          }
          for (std::size_t c = i; c < k; ++c) {
            x[c] = static_cast<Int>((x[c] - static_cast<__int128>(bound - 1) * h[i * k + c]) % d[c]);
            if (x[c] < 0) x[c] += d[c];
          }
          counter[i] = 0;
        }
      }
    }
  });
  if (words_ == 0) {
    throw ResourceCapError("element tables for " + module_.toString() + " exceed the memory cap");
  }
}

std::span<const std::uint64_t> SubmoduleLattice::bits(Index i) const {
  return {elements_.data() + static_cast<std::size_t>(i) * words_, words_};
}

bool SubmoduleLattice::contains(Index big, Index small) const {
  if (order(big) % order(small) != 0) return false;
  ensureElements();
  const auto a = bits(big), b = bits(small);
  for (std::size_t w = 0; w < words_; ++w) {
    if ((b[w] & ~a[w]) != 0) return false;
  }
  return true;
}

Int SubmoduleLattice::meetOrder(Index a, Index b) const {
  ensureElements();
  const auto x = bits(a), y = bits(b);
  Int count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += std::popcount(x[w] & y[w]);
  return count;
}

bool SubmoduleLattice::sumIsWhole(Index a, Index b) const {
  return static_cast<__int128>(order(a)) * order(b) ==
         static_cast<__int128>(module_.order()) * meetOrder(a, b);
}

SubmoduleLattice::Index SubmoduleLattice::join(Index a, Index b) const {
  return indexOf(sumOf(subs_[a], subs_[b]));
}

SubmoduleLattice::Index SubmoduleLattice::meet(Index a, Index b) const {
  return indexOf(intersectOf(subs_[a], subs_[b]));
}

void SubmoduleLattice::ensureCovers() const {
  std::call_once(covers_once_, [this] {
    covers_.assign(subs_.size(), {});
    std::unordered_map<Int, std::vector<Index>> by_order;
    for (std::size_t j = 0; j < subs_.size(); ++j) by_order[order(static_cast<Index>(j))].push_back(static_cast<Index>(j));
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      const Int oi = order(static_cast<Index>(i));
      for (Int p : primeDivisors(oi)) {
        const auto it = by_order.find(oi / p);
        if (it == by_order.end()) continue;
        for (Index j : it->second) {
          if (contains(static_cast<Index>(i), j)) covers_[i].push_back(j);
        }
      }
      std::sort(covers_[i].begin(), covers_[i].end());
    }
  });
}

const std::vector<SubmoduleLattice::Index>& SubmoduleLattice::lowerCovers(Index i) const {
  ensureElements();
  ensureCovers();
  return covers_[i];
}

std::vector<SubmoduleLattice::Index> SubmoduleLattice::below(Index i) const {
  std::vector<Index> out;
  for (std::size_t j = 0; j < subs_.size(); ++j) {
    if (contains(i, static_cast<Index>(j))) out.push_back(static_cast<Index>(j));
  }
  return out;
}

}  // namespace modrep
