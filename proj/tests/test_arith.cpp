#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "zetalab/arith.hpp"

using namespace zetalab;

namespace {

// Euler criterion: for an odd prime p and p not dividing a,
// (a/p) = a^((p-1)/2) mod p.
int legendre_oracle(int64 a, int64 p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  int64 r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("prime table agrees with trial division", "[arith]") {
  PrimeTable pt(2000);
  for (int64 n = 2; n <= 2000; ++n) {
    bool prime = true;
    for (int64 q = 2; q * q <= n; ++q)
      if (n % q == 0) {
        prime = false;
        break;
      }
    REQUIRE(pt.is_prime(n) == prime);
  }
  REQUIRE(pt.primes().front() == 2);
  REQUIRE(pt.primes().back() == 1999);
}

TEST_CASE("factorize round-trips and divisor sums match loops", "[arith]") {
  for (int64 n = 1; n <= 600; ++n) {
    REQUIRE(unfactorize(factorize(n)) == n);
    int64 count = 0, sum = 0;
    for (int64 q = 1; q <= n; ++q)
      if (n % q == 0) {
        ++count;
        sum += q;
      }
    bool sqf = true;
    for (int64 q = 2; q * q <= n; ++q)
      if (n % (q * q) == 0) sqf = false;
    REQUIRE(tau(n) == count);
    REQUIRE(sigma_divisors(n) == sum);
    REQUIRE(is_squarefree(n) == sqf);
    REQUIRE(mobius(n) == (sqf ? ((omega(n) % 2) ? -1 : 1) : 0));
  }
}

TEST_CASE("kronecker matches the Euler criterion at odd primes", "[arith]") {
  for (int64 p : {3, 5, 7, 11, 13, 61, 97, 101}) {
    for (int64 a = -2 * p; a <= 2 * p; ++a)
      REQUIRE(kronecker(a, p) ==
              (a % p == 0 ? 0 : legendre_oracle(a, p)));
  }
}

TEST_CASE("kronecker is completely multiplicative below", "[arith]") {
  for (int64 a = -30; a <= 30; ++a)
    for (int64 m = 1; m <= 20; ++m)
      for (int64 n = 1; n <= 20; ++n)
        REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
}

TEST_CASE("kronecker at 2 follows the mod-8 rule", "[arith]") {
  for (int64 a = -40; a <= 40; ++a) {
    const int64 m = ((a % 8) + 8) % 8;
    int expect = 0;
    if (m == 1 || m == 7) expect = 1;
    if (m == 3 || m == 5) expect = -1;
    REQUIRE(kronecker(a, 2) == expect);
  }
}

TEST_CASE("chi_d is periodic mod |d| for fundamental d", "[arith]") {
  for (int64 d : {5, 8, 12, 13, -3, -4, -7, -8, -24}) {
    REQUIRE(is_fundamental_discriminant(d));
    const int64 q = d > 0 ? d : -d;
    for (int64 n = 1; n <= 3 * q; ++n)
      REQUIRE(kronecker(d, n) == kronecker(d, n + q));
  }
}

TEST_CASE("fundamental discriminants are exactly the field ones", "[arith]") {
  // every fundamental discriminant arises as disc Q(sqrt m) for a unique
  // squarefree m != 1: m itself when m = 1 mod 4, else 4m. d = 1 is out:
  // there is no quadratic field under it.
  const int64 B = 400;
  std::set<int64> expected;
  for (int64 m = -B; m <= B; ++m) {
    if (m == 0 || m == 1 || !is_squarefree(m < 0 ? -m : m)) continue;
    const int64 r = ((m % 4) + 4) % 4;
    const int64 d = (r == 1) ? m : 4 * m;
    if (d >= -B && d <= B) expected.insert(d);
  }
  std::set<int64> got;
  for (int64 d : enumerate_fundamental(1, B, 1)) got.insert(d);
  for (int64 d : enumerate_fundamental(1, B, -1)) got.insert(d);
  REQUIRE(got == expected);
  for (int64 d = -B; d <= B; ++d)
    REQUIRE(is_fundamental_discriminant(d) == (expected.count(d) == 1));
}

TEST_CASE("enumerate_fundamental respects range and order", "[arith]") {
  const auto v = enumerate_fundamental(10, 60, -1);
  REQUIRE(!v.empty());
  for (std::size_t i = 0; i + 1 < v.size(); ++i) REQUIRE(-v[i] < -v[i + 1]);
  for (int64 d : v) {
    REQUIRE(d < 0);
    REQUIRE(-d >= 10);
    REQUIRE(-d <= 60);
  }
}

TEST_CASE("the 8d family of X = 160 is 11, 13, 15, 17, 19", "[arith]") {
  REQUIRE(enumerate_8d_family(160) == std::vector<int64>{11, 13, 15, 17, 19});
  for (int64 d : enumerate_8d_family(160))
    REQUIRE(is_fundamental_discriminant(8 * d));
}

TEST_CASE("the 8d family matches its defining window", "[arith]") {
  for (int64 X : {1, 15, 16, 100, 1000}) {
    const auto fam = enumerate_8d_family(X);
    std::set<int64> got(fam.begin(), fam.end());
    const int64 lo = (X + 15) / 16, hi = X / 8;
    for (int64 d = 1; d <= hi + 2; ++d) {
      const bool inside =
          d >= lo && d <= hi && d % 2 == 1 && is_squarefree(d);
      REQUIRE(got.count(d) == (inside ? 1u : 0u));
      if (d <= hi) REQUIRE(mu2d_squarefree(d) == (d % 2 == 1 && is_squarefree(d)));
    }
  }
}

TEST_CASE("h is multiplicative with the stated local factors", "[arith]") {
  REQUIRE_THAT(h_local(2), Catch::Matchers::WithinAbs(
                               1.0 + 0.5 + 0.25 - 4.0 / 6.0, 1e-15));
  REQUIRE_THAT(h_local(3), Catch::Matchers::WithinAbs(
                               1.0 + 1.0 / 3 + 1.0 / 9 - 1.0 / 3, 1e-15));
  REQUIRE_THAT(h_func(6),
               Catch::Matchers::WithinRel(h_local(2) * h_local(3), 1e-14));
  REQUIRE_THAT(h_func(45),
               Catch::Matchers::WithinRel(h_local(3) * h_local(5), 1e-14));
  REQUIRE(h_func(1) == 1.0);
}

TEST_CASE("epsilon_D counts distinct prime factors", "[arith]") {
  REQUIRE(epsilon_D(3.0, 1) == 1.0);
  REQUIRE(epsilon_D(3.0, 7) == 3.0);
  REQUIRE(epsilon_D(3.0, 12) == 9.0);
  REQUIRE(epsilon_D(2.5, 30) == 2.5 * 2.5 * 2.5);
}

TEST_CASE("crt solves hand-checked systems", "[arith]") {
  REQUIRE(crt({bigint(1), bigint(2)}, {bigint(2), bigint(3)}) == bigint(5));
  REQUIRE(crt({bigint(2), bigint(3), bigint(2)},
              {bigint(3), bigint(5), bigint(7)}) == bigint(23));
  bigint g;
  const bigint inv = detail::egcd_inverse(bigint(3), bigint(7), g);
  REQUIRE(((inv * 3 - 1) % 7) == 0);
  REQUIRE(g == 1);
}
