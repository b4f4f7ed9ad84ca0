#include "modrep/normal_forms.hpp"

#include <algorithm>
#include <optional>

namespace modrep {
namespace {

BigInt floorDiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Row of the smallest nonzero |m(i, col)| for i >= from.
std::optional<std::size_t> smallestInColumn(const IntMatrix& m, std::size_t col, std::size_t from) {
  std::optional<std::size_t> best;
  BigInt best_abs;
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, col) == 0) continue;
    BigInt v = abs(m(i, col));
    if (!best || v < best_abs) {
      best = i;
      best_abs = std::move(v);
    }
  }
  return best;
}

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallestInBlock(const IntMatrix& m, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs;
  for (std::size_t i = t; i < m.rows(); ++i) {
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      BigInt v = abs(m(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = std::move(v);
      }
    }
  }
  return best;
}

}  // namespace

HermiteResult hermiteNormalForm(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    bool has_pivot = false;
    while (auto best = smallestInColumn(h, col, pivot_row)) {
      has_pivot = true;
      h.swapRows(pivot_row, *best);
      u.swapRows(pivot_row, *best);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        const BigInt q = h(i, col) / h(pivot_row, col);
        h.addRowMultiple(i, pivot_row, -q);
        u.addRowMultiple(i, pivot_row, -q);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (h(pivot_row, col) < 0) {
      h.negateRow(pivot_row);
      u.negateRow(pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const BigInt q = floorDiv(h(i, col), h(pivot_row, col));
      h.addRowMultiple(i, pivot_row, -q);
      u.addRowMultiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SmithResult smithNormalForm(const IntMatrix& a) {
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      auto pos = smallestInBlock(s, t);
      if (!pos) return {std::move(s), std::move(u), std::move(v)};
      s.swapRows(t, pos->row);
      u.swapRows(t, pos->row);
      s.swapCols(t, pos->col);
      v.swapCols(t, pos->col);

      bool residue = false;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        const BigInt q = s(i, t) / s(t, t);
        s.addRowMultiple(i, t, -q);
        u.addRowMultiple(i, t, -q);
        residue = residue || s(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        const BigInt q = s(t, j) / s(t, t);
        s.addColMultiple(j, t, -q);
        v.addColMultiple(j, t, -q);
        residue = residue || s(t, j) != 0;
      }
      if (residue) continue;

      // Pivot must divide the remaining block; otherwise fold the offending row in.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < s.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (s(i, j) % s(t, t) != 0) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      s.addRowMultiple(t, *offending, 1);
      u.addRowMultiple(t, *offending, 1);
    }
    if (s(t, t) < 0) {
      s.negateRow(t);
      u.negateRow(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

bool isHermiteNormalForm(const IntMatrix& h) {
  std::optional<std::size_t> last_pivot_col;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::optional<std::size_t> pivot;
    for (std::size_t c = 0; c < h.cols(); ++c) {
      if (h(r, c) != 0) {
        pivot = c;
        break;
      }
    }
    if (!pivot) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (last_pivot_col && *pivot <= *last_pivot_col) return false;
    if (h(r, *pivot) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above) {
      if (h(above, *pivot) < 0 || h(above, *pivot) >= h(r, *pivot)) return false;
    }
    last_pivot_col = pivot;
  }
  return true;
}

std::vector<BigInt> smithDiagonal(const IntMatrix& s) {
  std::vector<BigInt> d;
  const std::size_t n = std::min(s.rows(), s.cols());
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(s(i, i));
  return d;
}

}  // namespace modrep
