#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "pg/arith.hpp"
#include "pg/errors.hpp"

using namespace pg;
using arith::i64;

namespace {

i64 phi_brute(i64 n) {
  i64 count = 0;
  for (i64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("checked arithmetic traps overflow") {
  CHECK(arith::checked_add(2, 3) == 5);
  CHECK(arith::checked_mul(-4, 5) == -20);
  CHECK(arith::checked_pow(2, 62) == (i64{1} << 62));
  CHECK_THROWS_AS(arith::checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(arith::checked_mul(INT64_MAX / 2, 3), std::overflow_error);
  CHECK_THROWS_AS(arith::checked_pow(10, 30), std::overflow_error);
}

TEST_CASE("factorize reconstructs n with ascending primes") {
  CHECK(arith::factorize(1).empty());
  CHECK(arith::factorize(360) ==
        arith::Factorization{{2, 3}, {3, 2}, {5, 1}});
  CHECK_THROWS_AS(arith::factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(arith::factorize(-6), std::invalid_argument);
  for (i64 n = 1; n <= 20000; ++n) {
    const auto f = arith::factorize(n);
    CHECK(arith::value_of(f) == n);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(arith::is_prime(f[i].prime));
      CHECK(f[i].exponent >= 1);
      if (i > 0) CHECK(f[i - 1].prime < f[i].prime);
    }
  }
}

TEST_CASE("primality and prime powers") {
  CHECK_FALSE(arith::is_prime(1));
  CHECK(arith::is_prime(2));
  CHECK(arith::is_prime(97));
  CHECK_FALSE(arith::is_prime(91));
  CHECK_FALSE(arith::is_prime_power(1));
  CHECK(arith::is_prime_power(2));
  CHECK(arith::is_prime_power(8));
  CHECK(arith::is_prime_power(243));
  CHECK_FALSE(arith::is_prime_power(12));
  CHECK_FALSE(arith::is_prime_power(6));
}

TEST_CASE("valuation") {
  CHECK(arith::valuation(48, 2) == 4);
  CHECK(arith::valuation(48, 3) == 1);
  CHECK(arith::valuation(48, 5) == 0);
  CHECK(arith::valuation(1, 7) == 0);
}

TEST_CASE("euler_phi matches the coprime count") {
  CHECK(arith::euler_phi(1) == 1);
  CHECK(arith::euler_phi(2) == 1);
  CHECK(arith::euler_phi(12) == 4);
  CHECK(arith::euler_phi(210) == 48);
  CHECK(arith::euler_phi(4096) == 2048);
  for (i64 n = 1; n <= 2000; ++n) CHECK(arith::euler_phi(n) == phi_brute(n));
}

TEST_CASE("euler_phi is even past 2") {
  for (i64 n = 3; n <= 5000; ++n) CHECK(arith::euler_phi(n) % 2 == 0);
}

TEST_CASE("divisors") {
  CHECK(arith::divisors(1) == std::vector<i64>{1});
  CHECK(arith::divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
  CHECK(arith::divisors(97) == std::vector<i64>{1, 97});
  for (i64 n = 1; n <= 500; ++n) {
    const auto ds = arith::divisors(n);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      CHECK(n % ds[i] == 0);
      if (i > 0) CHECK(ds[i - 1] < ds[i]);
    }
    i64 count = 0;
    for (i64 d = 1; d <= n; ++d)
      if (n % d == 0) ++count;
    CHECK(count == static_cast<i64>(ds.size()));
  }
}

TEST_CASE("primes_up_to") {
  CHECK(arith::primes_up_to(1).empty());
  CHECK(arith::primes_up_to(30) ==
        std::vector<i64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("divisor_phi_sum examples") {
  // n = 12, p = 2, beta = 1: d runs over divisors of 6
  CHECK(arith::divisor_phi_sum(12, 2, 1) == 9);
  CHECK(arith::divisor_phi_sum(12, 2, 2) == 6);
  CHECK(arith::divisor_phi_sum(12, 3, 1) == 8);
  CHECK_THROWS_AS(arith::divisor_phi_sum(12, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(arith::divisor_phi_sum(12, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(arith::divisor_phi_sum(12, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(arith::divisor_phi_sum(12, 2, 0), std::invalid_argument);
}

TEST_CASE("divisor_phi_sum equals a from-scratch sum") {
  for (i64 n = 2; n <= 500; ++n) {
    for (const auto& pp : arith::factorize(n)) {
      for (int beta = 1; beta <= pp.exponent; ++beta) {
        i64 expect = 0;
        const i64 m = n / arith::checked_pow(pp.prime, beta);
        for (i64 d = 1; d <= m; ++d)
          if (m % d == 0) expect += phi_brute(n / d);
        CHECK(arith::divisor_phi_sum(n, pp.prime, beta) == expect);
      }
    }
  }
}
