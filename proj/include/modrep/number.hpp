#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modrep {

using Int = std::int64_t;

bool isPrime(Int n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<Int, int>> factorize(Int n);

std::vector<Int> primeDivisors(Int n);

/// All positive divisors of n > 0, ascending.
std::vector<Int> divisors(Int n);

/// Product of the distinct primes dividing n (1 for n = 1).
Int squarefreeKernel(Int n);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Exponent of p in n (n > 0).
int valuation(Int n, Int p);

Int ipow(Int base, int exp);

/// Extended gcd: returns g = gcd(a, b) >= 0 and s, t with s*a + t*b = g.
struct ExtGcd {
  Int g;
  Int s;
  Int t;
};
ExtGcd extendedGcd(Int a, Int b);

bool isSquarefree(Int n);

}  // namespace modrep
