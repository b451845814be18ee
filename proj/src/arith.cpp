#include "pg/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pg/errors.hpp"

namespace pg::arith {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

i64 checked_pow(i64 base, int exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Factorization factorize(i64 n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization f;
  for (i64 d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.push_back({d, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

i64 value_of(const Factorization& f) {
  i64 r = 1;
  for (const auto& pp : f) r = checked_mul(r, checked_pow(pp.prime, pp.exponent));
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(i64 n) { return n >= 2 && factorize(n).size() == 1; }

int valuation(i64 n, i64 p) {
  if (n < 1) throw std::invalid_argument("valuation: n must be >= 1");
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 euler_phi(i64 n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be >= 1");
  i64 r = 1;
  for (const auto& pp : factorize(n)) {
    const i64 pk = checked_pow(pp.prime, pp.exponent);
    r = checked_mul(r, pk - pk / pp.prime);
  }
  return r;
}

std::vector<i64> divisors(i64 n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<i64> ds{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = ds.size();
    i64 pk = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pk = checked_mul(pk, pp.prime);
      for (std::size_t i = 0; i < base; ++i) ds.push_back(checked_mul(ds[i], pk));
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<i64> primes_up_to(i64 limit) {
  std::vector<i64> ps;
  for (i64 p = 2; p <= limit; ++p)
    if (is_prime(p)) ps.push_back(p);
  return ps;
}

i64 divisor_phi_sum(i64 n, i64 p, int beta) {
  if (n <= 0) throw std::invalid_argument("divisor_phi_sum: n must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("divisor_phi_sum: p must be prime");
  if (n % p != 0) throw std::invalid_argument("divisor_phi_sum: p must divide n");
  const int alpha = valuation(n, p);
  if (beta < 1 || beta > alpha)
    throw std::invalid_argument("divisor_phi_sum: beta must be in [1, valuation(n, p)]");

  i64 literal = 0;
  for (i64 d : divisors(n / checked_pow(p, beta))) literal = checked_add(literal, euler_phi(n / d));

  const i64 closed = n - n / checked_pow(p, alpha - beta + 1);
  if (literal != closed)
    throw invariant_violation("divisor_phi_sum: literal sum " + std::to_string(literal) +
                              " != closed form " + std::to_string(closed) + " at n=" +
                              std::to_string(n) + " p=" + std::to_string(p) +
                              " beta=" + std::to_string(beta));
  return literal;
}

}  // namespace pg::arith
