#include "modrep/detail/lattice_hnf.hpp"

namespace modrep::detail {
namespace {

using Wide = __int128;

Int modNonNeg(Wide v, Int m) {
  Wide r = v % m;
  if (r < 0) r += m;
  return static_cast<Int>(r);
}

}  // namespace

void insertRow(std::vector<Int>& basis, std::vector<Int> row, std::span<const Int> moduli) {
  const std::size_t n = moduli.size();
  for (std::size_t c = 0; c < n; ++c) row[c] = modNonNeg(row[c], moduli[c]);
  for (std::size_t j = 0; j < n; ++j) {
    if (row[j] == 0) continue;
    Int* pivot_row = basis.data() + j * n;
    const Int a = pivot_row[j];
    const Int b = row[j];
    if (b % a == 0) {
      const Int q = b / a;
      row[j] = 0;
      for (std::size_t c = j + 1; c < n; ++c) {
        row[c] = modNonNeg(static_cast<Wide>(row[c]) - static_cast<Wide>(q) * pivot_row[c], moduli[c]);
      }
      continue;
    }
    const auto [g, s, t] = extendedGcd(a, b);
    const Int a_g = a / g;
    const Int b_g = b / g;
    pivot_row[j] = g;
    row[j] = 0;
    for (std::size_t c = j + 1; c < n; ++c) {
      const Wide old_pivot = pivot_row[c];
      const Wide old_row = row[c];
      pivot_row[c] = modNonNeg(s * old_pivot + t * old_row, moduli[c]);
      row[c] = modNonNeg(b_g * old_pivot - a_g * old_row, moduli[c]);
    }
  }
}

void reduceAbovePivots(std::vector<Int>& basis, std::span<const Int> moduli) {
  const std::size_t n = moduli.size();
  for (std::size_t i = 0; i < n; ++i) {
    Int* row = basis.data() + i * n;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int* pivot_row = basis.data() + j * n;
      const Int q = row[j] / pivot_row[j];
      if (q == 0) continue;
      row[j] -= q * pivot_row[j];
      for (std::size_t c = j + 1; c < n; ++c) {
        row[c] = modNonNeg(static_cast<Wide>(row[c]) - static_cast<Wide>(q) * pivot_row[c], moduli[c]);
      }
    }
  }
}

std::vector<Int> modularHnf(std::span<const Int> rows, std::span<const Int> moduli) {
  const std::size_t n = moduli.size();
  std::vector<Int> basis(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) basis[i * n + i] = moduli[i];
  if (n == 0) return basis;
  for (std::size_t r = 0; r + n <= rows.size(); r += n) {
    insertRow(basis, std::vector<Int>(rows.begin() + static_cast<std::ptrdiff_t>(r),
                                      rows.begin() + static_cast<std::ptrdiff_t>(r + n)),
              moduli);
  }
  reduceAbovePivots(basis, moduli);
  return basis;
}

bool latticeContains(std::span<const Int> basis, std::vector<Int> row, std::span<const Int> moduli) {
  const std::size_t n = moduli.size();
  for (std::size_t c = 0; c < n; ++c) row[c] = modNonNeg(row[c], moduli[c]);
  for (std::size_t j = 0; j < n; ++j) {
    if (row[j] == 0) continue;
    const Int* pivot_row = basis.data() + j * n;
    if (row[j] % pivot_row[j] != 0) return false;
    const Int q = row[j] / pivot_row[j];
    row[j] = 0;
    for (std::size_t c = j + 1; c < n; ++c) {
      row[c] = modNonNeg(static_cast<Wide>(row[c]) - static_cast<Wide>(q) * pivot_row[c], moduli[c]);
    }
  }
  return true;
}

}  // namespace modrep::detail
