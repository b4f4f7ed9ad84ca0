#include "modrep/normal_forms.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace modrep;

namespace {

IntMatrix randomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

IntMatrix randomUnimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (int step = 0; step < 8; ++step) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    u.addRowMultiple(a, b, mult(rng));
    if (step % 3 == 0) u.swapRows(a, b);
  }
  return u;
}

// Independent 2x2 oracle: for a full-rank lattice the HNF is
// [[g, t], [0, |det| / g]] with g the column-0 gcd and t in [0, |det|/g) the
// unique value making (g, t) a lattice vector (checked by Cramer's rule).
IntMatrix hermiteOracle2x2(const IntMatrix& a) {
  const BigInt det = a.determinant();
  const BigInt g = gcd(a(0, 0), a(1, 0));
  const BigInt h11 = abs(det) / g;
  for (BigInt t = 0; t < h11; ++t) {
    // x * a = (g, t)  =>  x = (g, t) * adj(a) / det
    const BigInt x0 = g * a(1, 1) - t * a(1, 0);
    const BigInt x1 = -g * a(0, 1) + t * a(0, 0);
    if (x0 % det == 0 && x1 % det == 0) {
      IntMatrix h(2, 2);
      h(0, 0) = g;
      h(0, 1) = t;
      h(1, 1) = h11;
      return h;
    }
  }
  return {};
}

void expectHermiteContract(const IntMatrix& a) {
  const auto [h, u] = hermiteNormalForm(a);
  EXPECT_EQ(u * a, h);
  EXPECT_EQ(abs(u.determinant()), 1);
  EXPECT_TRUE(isHermiteNormalForm(h)) << h;
  EXPECT_EQ(hermiteNormalForm(h).h, h);
}

void expectSmithContract(const IntMatrix& a) {
  const auto [s, u, v] = smithNormalForm(a);
  EXPECT_EQ(u * a * v, s);
  EXPECT_EQ(abs(u.determinant()), 1);
  EXPECT_EQ(abs(v.determinant()), 1);
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) {
      if (r != c) EXPECT_EQ(s(r, c), 0);
    }
  }
  const auto d = smithDiagonal(s);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (i + 1 < d.size() && d[i + 1] != 0) EXPECT_EQ(d[i + 1] % d[i], 0) << s;
    if (d[i] == 0 && i + 1 < d.size()) EXPECT_EQ(d[i + 1], 0);
  }
}

}  // namespace

TEST(HermiteNormalForm, IdentityIsCanonical) {
  const auto [h, u] = hermiteNormalForm(IntMatrix::identity(2));
  EXPECT_EQ(h, IntMatrix::identity(2));
  EXPECT_EQ(u, IntMatrix::identity(2));
}

TEST(HermiteNormalForm, SwappedDiagonal) {
  const IntMatrix a{{0, 2}, {3, 0}};
  const IntMatrix expected{{3, 0}, {0, 2}};
  EXPECT_EQ(hermiteOracle2x2(a), expected);
  const auto [h, u] = hermiteNormalForm(a);
  EXPECT_EQ(h, expected);
  EXPECT_EQ(u * a, h);
  EXPECT_EQ(abs(u.determinant()), 1);
}

TEST(HermiteNormalForm, ColumnGcd) {
  const auto [h, u] = hermiteNormalForm(IntMatrix{{2}, {3}});
  EXPECT_EQ(h, (IntMatrix{{1}, {0}}));
  EXPECT_EQ((u * IntMatrix{{2}, {3}}), h);
}

TEST(HermiteNormalForm, MatchesTwoByTwoOracle) {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 200) {
    const auto a = randomMatrix(rng, 2, 2, 20);
    if (a.determinant() == 0) continue;
    EXPECT_EQ(hermiteNormalForm(a).h, hermiteOracle2x2(a)) << a;
    ++checked;
  }
}

TEST(HermiteNormalForm, ZeroRowsLast) {
  const IntMatrix a{{0, 0}, {4, 6}, {2, 3}};
  const auto [h, u] = hermiteNormalForm(a);
  EXPECT_EQ(h, (IntMatrix{{2, 3}, {0, 0}, {0, 0}}));
  EXPECT_EQ(u * a, h);
}

TEST(HermiteNormalForm, RandomContract) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 200; ++i) expectHermiteContract(randomMatrix(rng, dim(rng), dim(rng), 50));
}

TEST(SmithNormalForm, OneByOne) {
  EXPECT_EQ(smithNormalForm(IntMatrix{{6}}).s, (IntMatrix{{6}}));
  EXPECT_EQ(smithNormalForm(IntMatrix{{-6}}).s, (IntMatrix{{6}}));
}

TEST(SmithNormalForm, TwoByTwo) {
  const IntMatrix a{{2, 4}, {4, 4}};
  // d1 = gcd of entries, d1 * d2 = |det|
  const BigInt d1 = gcd(gcd(a(0, 0), a(0, 1)), gcd(a(1, 0), a(1, 1)));
  const BigInt d2 = abs(a.determinant()) / d1;
  ASSERT_EQ(d1, 2);
  ASSERT_EQ(d2, 4);
  EXPECT_EQ(smithNormalForm(a).s, (IntMatrix{{2, 0}, {0, 4}}));
  expectSmithContract(a);
}

TEST(SmithNormalForm, ZeroMatrix) {
  const IntMatrix z(2, 2);
  EXPECT_EQ(smithNormalForm(z).s, z);
}

TEST(SmithNormalForm, RandomContract) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 200; ++i) expectSmithContract(randomMatrix(rng, dim(rng), dim(rng), 50));
}

TEST(SmithNormalForm, InvariantUnderUnimodularEquivalence) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = dim(rng), c = dim(rng);
    const auto a = randomMatrix(rng, r, c, 10);
    const auto b = randomUnimodular(rng, r) * a * randomUnimodular(rng, c);
    EXPECT_EQ(smithDiagonal(smithNormalForm(a).s), smithDiagonal(smithNormalForm(b).s));
  }
}

TEST(IntMatrix, BareissDeterminant) {
  EXPECT_EQ((IntMatrix{{1, 2}, {3, 4}}).determinant(), -2);
  EXPECT_EQ((IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}).determinant(), -5);
  EXPECT_EQ(IntMatrix(0, 0).determinant(), 1);
}
