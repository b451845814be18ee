#pragma once

#include <cstdint>
#include <vector>

namespace pg::arith {

using i64 = std::int64_t;

// All arithmetic in this project is exact 64-bit. These helpers throw
// std::overflow_error instead of wrapping.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_pow(i64 base, int exp);

struct PrimePower {
  i64 prime = 0;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Prime factors in ascending order, exponents >= 1.
using Factorization = std::vector<PrimePower>;

// Trial division; fine for the orders this project works at (< ~10^7).
Factorization factorize(i64 n);

// Multiplies a factorization back together.
i64 value_of(const Factorization& f);

bool is_prime(i64 n);
bool is_prime_power(i64 n);  // p^a with a >= 1; excludes 1

// Largest e with p^e | n (n >= 1, p >= 2).
int valuation(i64 n, i64 p);

i64 euler_phi(i64 n);

// All divisors of n, ascending, including 1 and n.
std::vector<i64> divisors(i64 n);

// Primes <= limit, ascending.
std::vector<i64> primes_up_to(i64 limit);

// Sum of phi(n/d) over the divisors d of n/p^beta, where p | n and
// 1 <= beta <= valuation(n, p). The sum collapses to n - n/p^(alpha-beta+1);
// both sides are evaluated and must agree (invariant_violation otherwise).
i64 divisor_phi_sum(i64 n, i64 p, int beta);

}  // namespace pg::arith
