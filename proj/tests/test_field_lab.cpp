#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zetalab/field_lab.hpp"

using namespace zetalab;

namespace {

constexpr double pi = 3.14159265358979323846;

// all monic polynomials of the given degree mod p, counted irreducible
int count_irreducible(int deg, int64 p) {
  int64 total = 1;
  for (int i = 0; i < deg; ++i) total *= p;
  int count = 0;
  for (int64 code = 0; code < total; ++code) {
    Poly f(deg + 1);
    int64 c = code;
    for (int i = 0; i < deg; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[deg] = 1;
    if (poly_irreducible(f, p)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("polynomial arithmetic mod p on hand cases", "[fieldlab]") {
  // (x + 1)(x + 4) = x^2 + 4 mod 5
  REQUIRE(poly_mul({1, 1}, {4, 1}, 5) == Poly{4, 0, 1});
  // x^3 + 2x + 3 = x (x^2 + 1) + (x + 3) mod 5
  const auto [q, r] = poly_divrem({3, 2, 0, 1}, {1, 0, 1}, 5);
  REQUIRE(q == Poly{0, 1});
  REQUIRE(r == Poly{3, 1});
  // gcd(x^2 - 1, (x + 1)^2) = x + 1 mod 5
  REQUIRE(poly_gcd({4, 0, 1}, {1, 2, 1}, 5) == Poly{1, 1});
  // Horner
  REQUIRE(poly_eval({3, 2, 1}, 4, 7) == 6);
  // x^5 = x mod (x^2 + 1, 5)
  REQUIRE(poly_powmod({0, 1}, 5, {1, 0, 1}, 5) == Poly{0, 1});
  REQUIRE(poly_deg(Poly{}) == -1);
}

TEST_CASE("irreducible counts match the field formula", "[fieldlab]") {
  // (p^2 - p)/2 and (p^3 - p)/3
  REQUIRE(count_irreducible(2, 2) == 1);
  REQUIRE(count_irreducible(2, 3) == 3);
  REQUIRE(count_irreducible(3, 3) == 8);
  REQUIRE(count_irreducible(2, 5) == 10);
  REQUIRE(poly_irreducible({1, 1, 1}, 2));
  REQUIRE_FALSE(poly_irreducible({1, 0, 1}, 2));  // (x+1)^2
  REQUIRE(poly_irreducible({1, 0, 1}, 3));
}

TEST_CASE("distinct-degree factorization on x^4 + x mod 2", "[fieldlab]") {
  const auto dd = ddf_factor_degrees({0, 1, 0, 0, 1}, 2);
  REQUIRE(dd.size() == 2);
  REQUIRE(dd[0].first == 1);
  REQUIRE(dd[0].second == 2);
  REQUIRE(dd[1].first == 2);
  REQUIRE(dd[1].second == 1);
}

TEST_CASE("random irreducibles are deterministic per seed", "[fieldlab]") {
  const Poly a = irreducible_poly_mod_p(4, 7, 42);
  REQUIRE(poly_deg(a) == 4);
  REQUIRE(a.back() == 1);
  REQUIRE(poly_irreducible(a, 7));
  REQUIRE(irreducible_poly_mod_p(4, 7, 42) == a);
}

TEST_CASE("the CRT lift glues local residues", "[fieldlab]") {
  // x^2+x+1 mod 2 and x^2+1 mod 3 lift to x^2 + 3x + 1, of discriminant 5
  const auto spec =
      build_inert_from_residues(2, {2, 3}, {Poly{1, 1, 1}, Poly{1, 0, 1}});
  REQUIRE(spec.coefficients ==
          std::vector<bigint>{bigint(1), bigint(3), bigint(1)});
  REQUIRE(spec.inert_primes == std::vector<int64>{2, 3});

  const auto at2 = splitting_from_polynomial(spec, 2);
  REQUIRE(at2.f == 2);
  REQUIRE(at2.g == 1);
  REQUIRE_FALSE(at2.ramified);
  const auto at3 = splitting_from_polynomial(spec, 3);
  REQUIRE(at3.f == 2);
  REQUIRE(at3.g == 1);
  const auto at5 = splitting_from_polynomial(spec, 5);
  REQUIRE(at5.ramified);
  const auto at11 = splitting_from_polynomial(spec, 11);
  REQUIRE(at11.f == 1);
  REQUIRE(at11.g == 2);
  REQUIRE(at11.factor_degrees == std::vector<int>{1, 1});
}

TEST_CASE("residues must be monic irreducible of the right degree",
          "[fieldlab]") {
  REQUIRE_THROWS(build_inert_from_residues(2, {2}, {Poly{1, 0, 1}}));
  REQUIRE_THROWS(build_inert_from_residues(2, {3}, {Poly{1, 1}}));
}

TEST_CASE("the disc-5 lift reproduces the dedekind factorization",
          "[fieldlab]") {
  const auto spec =
      build_inert_from_residues(2, {2, 3}, {Poly{1, 1, 1}, Poly{1, 0, 1}});
  const auto res = zeta_field_sigma(spec, 2.0);
  const double truth = dedekind_quadratic(cplx(2.0, 0.0), 5).real();
  REQUIRE(std::abs(std::log(truth) - std::log(res.value)) <=
          res.log_halfwidth);
  REQUIRE(res.ramified_count == 1);  // p = 5
  REQUIRE_THAT(res.reference,
               Catch::Matchers::WithinRel(riemann_zeta_real(4.0), 1e-12));
  REQUIRE(std::abs(res.log_ratio) <= res.ratio_bound);
}

TEST_CASE("forced inert primes pull zeta_F toward zeta(d sigma)",
          "[fieldlab]") {
  double prev = std::numeric_limits<double>::infinity();
  for (int n : {5, 10, 20}) {
    const auto spec = build_inert_polynomial(3, n, 1);
    const auto res = zeta_field_sigma(spec, 2.0);
    REQUIRE(std::abs(res.log_ratio) <= res.ratio_bound);
    REQUIRE(res.ratio_bound < prev);
    prev = res.ratio_bound;
  }
}

TEST_CASE("split-prime search lands on the documented moduli", "[fieldlab]") {
  const auto one = find_split_primes(1, 1);
  REQUIRE(one.q_list == std::vector<int64>{17});
  const auto two = find_split_primes(2, 1);
  REQUIRE(two.q_list == std::vector<int64>{17, 41});
  const auto deep = find_split_primes(1, 2);
  REQUIRE(deep.q_list == std::vector<int64>{73});
  for (int64 q : two.q_list)
    for (int j = 0; j < two.n; ++j)
      REQUIRE(kronecker(q, detail::small_primes_25[j]) == 1);
}

TEST_CASE("multiquadratic splitting follows the characters", "[fieldlab]") {
  MultiquadraticSpec one;
  one.k = 1;
  one.n = 1;
  one.q_list = {17};
  const auto at2 = multiquadratic_splitting(one, 2);
  REQUIRE(at2.e == 1);
  REQUIRE(at2.f == 1);
  REQUIRE(at2.g == 2);

  const auto at17 = multiquadratic_splitting(one, 17);
  REQUIRE(at17.ramified);
  REQUIRE(at17.e == 2);

  MultiquadraticSpec two;
  two.k = 2;
  two.n = 1;
  two.q_list = {13, 17};
  const auto at3 = multiquadratic_splitting(two, 3);
  REQUIRE(at3.e == 1);
  REQUIRE(at3.f == 2);
  REQUIRE(at3.g == 2);
  REQUIRE(at3.factor_degrees == std::vector<int>{2, 2});
}

TEST_CASE("the quadratic compositum matches zeta times L", "[fieldlab]") {
  MultiquadraticSpec one;
  one.k = 1;
  one.n = 1;
  one.q_list = {17};
  const auto res = zeta_field_sigma(one, 2.0);
  const double truth = dedekind_quadratic(cplx(2.0, 0.0), 17).real();
  REQUIRE(std::abs(std::log(truth) - std::log(res.value)) <=
          res.log_halfwidth);
  REQUIRE_THAT(res.reference,
               Catch::Matchers::WithinRel(
                   std::pow(riemann_zeta_real(2.0), 2.0), 1e-12));
}

TEST_CASE("negative-line values come out the same along two routes",
          "[fieldlab]") {
  for (int64 d : {5, 8, -4, -7}) {
    for (double sr : {-0.5, -1.3}) {
      const cplx s(sr, 0.0);
      const auto rep = zeta_neg_line(s, d);
      const cplx other = riemann_zeta(s) * fe_factor_L(s, d) *
                         dirichlet_L_complex(1.0 - s, d, 1e-11).value;
      REQUIRE(std::abs(rep.zeta_value - other) <=
              1e-8 * (1.0 + std::abs(other)));
      REQUIRE(rep.zero_order == 0);
      REQUIRE_FALSE(rep.near_trivial_zero);
    }
  }
}

TEST_CASE("zeta' at -2 against the closed form", "[fieldlab]") {
  // zeta'(-2) = -zeta(3) / (4 pi^2), recovered by the same complex step
  // the trivial-zero path uses
  const double h = 1e-5;
  const double zp = detail::zeta_fe_side(cplx(-2.0, h)).imag() / h;
  const double closed = -1.2020569031595942854 / (4.0 * pi * pi);
  REQUIRE_THAT(zp, Catch::Matchers::WithinAbs(closed, 1e-9));
}

TEST_CASE("trivial zero orders add up across the factors", "[fieldlab]") {
  const auto both = zeta_neg_line(cplx(-2.0, 0.0), 5);
  REQUIRE(both.zero_order == 2);
  REQUIRE(both.near_trivial_zero);
  REQUIRE(std::abs(both.zeta_value) > 0.0);

  const auto lonly = zeta_neg_line(cplx(-1.0, 0.0), -4);
  REQUIRE(lonly.zero_order == 1);

  // neither factor vanishes at -1 for d = 5: exact rational product
  const auto none = zeta_neg_line(cplx(-1.0, 0.0), 5);
  REQUIRE(none.zero_order == 0);
  REQUIRE_THAT(none.zeta_value.real(),
               Catch::Matchers::WithinAbs(1.0 / 30.0, 1e-10));
}

TEST_CASE("the floor never exceeds the value", "[fieldlab]") {
  for (int64 d : {5, 8, 13, -4, -7, -11}) {
    for (double sr : {-0.25, -0.75, -1.5, -2.5}) {
      const auto rep = zeta_neg_line(cplx(sr, 0.0), d);
      REQUIRE(rep.northcott_lower <=
              std::abs(rep.zeta_value) * (1.0 + 1e-9));
    }
  }
  REQUIRE(northcott_lower_bound(cplx(-2.0, 0.0), 5) == 0.0);
  REQUIRE(northcott_lower_bound(cplx(-0.5, 0.0), 5) > 0.0);
}

TEST_CASE("the northcott sweep is finite and complete", "[fieldlab]") {
  const auto scan = northcott_enumerate(cplx(-0.5, 0.0), 0.25);
  REQUIRE(scan.cutoff > 3.0);
  REQUIRE(scan.cutoff < 1e4);
  REQUIRE(scan.checked > 0);
  for (const auto& [d, value] : scan.matches) {
    REQUIRE(value <= 0.25);
    REQUIRE(static_cast<double>(d < 0 ? -d : d) <= scan.cutoff);
    REQUIRE(is_fundamental_discriminant(d));
  }
  const auto tighter = northcott_enumerate(cplx(-0.5, 0.0), 0.1);
  REQUIRE(tighter.matches.size() <= scan.matches.size());
}
