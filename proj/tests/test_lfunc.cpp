#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zetalab/lfunc.hpp"

using namespace zetalab;

namespace {

constexpr double catalan = 0.91596559417721901505;

const W2Cache& shared_cache() {
  static const W2Cache cache;
  return cache;
}

}  // namespace

TEST_CASE("L values hit classical closed forms", "[lfunc]") {
  const double pi = 3.14159265358979323846;
  REQUIRE_THAT(dirichlet_L(2.0, -4).value,
               Catch::Matchers::WithinAbs(catalan, 1e-10));
  REQUIRE_THAT(dirichlet_L(1.0, -3).value,
               Catch::Matchers::WithinAbs(pi / (3.0 * std::sqrt(3.0)),
                                          1e-10));
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  REQUIRE_THAT(dirichlet_L(1.0, 5).value,
               Catch::Matchers::WithinAbs(2.0 * std::log(phi) / std::sqrt(5.0),
                                          1e-10));
  // L(1, chi_-4) = pi / 4
  REQUIRE_THAT(dirichlet_L(1.0, -4).value,
               Catch::Matchers::WithinAbs(pi / 4.0, 1e-10));
}

TEST_CASE("the complex evaluator agrees with the real one", "[lfunc]") {
  for (int64 d : {5, -4, 13}) {
    for (double s : {0.3, 0.8, 1.7}) {
      const auto a = dirichlet_L(s, d, 1e-11);
      const auto b = dirichlet_L_complex(cplx(s, 0.0), d, 1e-11);
      REQUIRE(std::abs(b.value.imag()) <= 1e-11);
      REQUIRE(std::abs(a.value - b.value.real()) <= 2e-11);
    }
  }
}

TEST_CASE("reported errors are honest against refined references", "[lfunc]") {
  const int64 ds[] = {5, 8, 12, 13, -3, -4, -7, -8, -11, -15};
  const double ss[] = {0.2, 0.51, 0.8, 1.3, 2.4};
  for (int64 d : ds)
    for (double s : ss) {
      const auto loose = dirichlet_L(s, d, 1e-7);
      const auto tight = dirichlet_L(s, d, 1e-11);
      REQUIRE(std::abs(loose.value - tight.value) <=
              loose.error_estimate + tight.error_estimate);
      REQUIRE(loose.error_estimate <= 1e-6);
    }
}

TEST_CASE("functional equation round trip", "[lfunc]") {
  for (int64 d : {5, 8, -4, -7}) {
    for (double s : {0.3, 0.45, 0.7}) {
      const double lhs = dirichlet_L(s, d, 1e-11).value;
      const double rhs = fe_factor_L(cplx(s, 0.0), d).real() *
                         dirichlet_L(1.0 - s, d, 1e-11).value;
      REQUIRE(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
    }
    const cplx s(0.4, 2.0);
    const cplx lhs = dirichlet_L_complex(s, d, 1e-11).value;
    const cplx rhs =
        fe_factor_L(s, d) * dirichlet_L_complex(1.0 - s, d, 1e-11).value;
    REQUIRE(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("dedekind zeta factors and satisfies its own equation", "[lfunc]") {
  const cplx s(0.3, 0.0);
  const cplx direct = dedekind_quadratic(s, 5);
  const cplx viaFE = fe_factor_dedekind(s, 5) * dedekind_quadratic(1.0 - s, 5);
  REQUIRE(std::abs(direct - viaFE) <= 1e-8 * (1.0 + std::abs(direct)));

  const cplx z2 = dedekind_quadratic(cplx(2.0, 0.0), 5);
  const double expect =
      riemann_zeta_real(2.0) * dirichlet_L(2.0, 5, 1e-11).value;
  REQUIRE(std::abs(z2.real() - expect) <= 1e-9);
}

TEST_CASE("exact rational special values", "[lfunc]") {
  REQUIRE(detail::bernoulli_number(0) == bigrat(1));
  REQUIRE(detail::bernoulli_number(1) == bigrat(-1, 2));
  REQUIRE(detail::bernoulli_number(2) == bigrat(1, 6));
  REQUIRE(detail::bernoulli_number(12) == bigrat(-691, 2730));

  REQUIRE(generalized_bernoulli(2, 5) == bigrat(4, 5));
  REQUIRE(L_special_value_rat(2, 5) == bigrat(-2, 5));
  REQUIRE(zeta_special_value_rat(2) == bigrat(-1, 12));
  REQUIRE(zeta_special_value_rat(4) == bigrat(1, 120));
  REQUIRE(zeta_special_value_rat(3) == bigrat(0));

  // zeta_Q(sqrt5)(-1) = zeta(-1) L(-1, chi_5) = 1/30
  REQUIRE(zeta_special_value_rat(2) * L_special_value_rat(2, 5) ==
          bigrat(1, 30));

  // odd k beyond 1 vanishes for even characters; even k for odd ones
  REQUIRE(L_special_value_rat(3, 5) == bigrat(0));
  REQUIRE(L_special_value_rat(2, -4) == bigrat(0));
  REQUIRE(L_special_value_rat(3, -4) != bigrat(0));
}

TEST_CASE("divisor table matches tau", "[lfunc]") {
  const auto table = divisor_count_table(1000);
  for (int64 n = 1; n <= 1000; ++n)
    REQUIRE(static_cast<int64>(table[n]) == tau(n));
}

TEST_CASE("smoothed central square matches the direct value", "[lfunc]") {
  for (int64 d : {11, 13, 15}) {
    const double sq = L_half_square(d, shared_cache());
    const double direct = dirichlet_L(0.5, 8 * d, 1e-10).value;
    REQUIRE(std::abs(std::sqrt(sq) - std::abs(direct)) <=
            1e-5 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("exponentially twisted sums stabilize toward L", "[lfunc]") {
  const double target = dirichlet_L(0.8, 88, 1e-11).value;
  const double coarse = L_twisted_exp(0.8, 11, 30.0).value;
  const double fine = L_twisted_exp(0.8, 11, 300.0).value;
  REQUIRE(std::abs(fine - target) < std::abs(coarse - target));
  REQUIRE(std::abs(fine - target) <= 1e-3 * (1.0 + std::abs(target)));
}

TEST_CASE("the twisted first moment at X = 2 matches hand assembly",
          "[lfunc]") {
  const double expect =
      kronecker(24, 7) * std::pow(dirichlet_L(0.7, 24, 1e-10).value, 2) *
          phi_bump(1.5) +
      kronecker(40, 7) * std::pow(dirichlet_L(0.7, 40, 1e-10).value, 2) *
          phi_bump(2.5);
  REQUIRE_THAT(sono_M(0.2, 0.2, 7, 2.0, 1e-10),
               Catch::Matchers::WithinAbs(expect, 1e-9));
}
