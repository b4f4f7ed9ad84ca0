#pragma once

#include "modrep/int_matrix.hpp"

namespace modrep {

struct HermiteResult {
  IntMatrix h;
  IntMatrix u;  // unimodular, h = u * a
};

struct SmithResult {
  IntMatrix s;
  IntMatrix u;  // unimodular, s = u * a * v
  IntMatrix v;
};

/// Row-style Hermite normal form: positive pivots in strictly increasing
/// columns, entries above each pivot reduced into [0, pivot), zero rows last.
HermiteResult hermiteNormalForm(const IntMatrix& a);

/// Smith normal form with nonnegative diagonal d_1 | d_2 | ... (zeros last).
SmithResult smithNormalForm(const IntMatrix& a);

bool isHermiteNormalForm(const IntMatrix& h);

/// Diagonal of a Smith form, min(rows, cols) entries.
std::vector<BigInt> smithDiagonal(const IntMatrix& s);

}  // namespace modrep
