#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zetalab/random_euler.hpp"

using namespace zetalab;

TEST_CASE("an empty product is identically one", "[randeuler]") {
  RandomEulerSpec spec;
  spec.y = 1.5;
  PrimeTable pt(100);
  REQUIRE(sample_random_euler(spec, pt, 0) == 1.0);
  REQUIRE(sample_random_euler(spec, pt, 99) == 1.0);
  REQUIRE(predicted_mean(spec, pt) == 1.0);
}

TEST_CASE("per-factor moments multiply out over small supports",
          "[randeuler]") {
  RandomEulerSpec spec;
  spec.sigma = 0.8;
  spec.y = 10.0;
  PrimeTable pt(100);
  double mean = 1.0, second = 1.0;
  for (int64 p : {2, 3, 5, 7}) {
    const double a = std::pow(double(p), -0.8);
    mean /= 1.0 - a * a;
    second *= 0.5 * (1.0 / ((1 - a) * (1 - a)) + 1.0 / ((1 + a) * (1 + a)));
  }
  REQUIRE_THAT(predicted_mean(spec, pt),
               Catch::Matchers::WithinRel(mean, 1e-13));
  REQUIRE_THAT(predicted_second_moment(spec, pt),
               Catch::Matchers::WithinRel(second, 1e-13));
}

TEST_CASE("samples reproduce byte for byte", "[randeuler]") {
  RandomEulerSpec spec;
  spec.sigma = 0.75;
  spec.y = 500.0;
  spec.seed = 7;
  PrimeTable pt(500);
  for (int64 i : {0, 1, 17, 4096}) {
    const double a = sample_random_euler(spec, pt, i);
    const double b = sample_random_euler(spec, pt, i);
    REQUIRE(a == b);
  }
  spec.samples = 200;
  const auto m1 = random_euler_moments(spec);
  const auto m2 = random_euler_moments(spec);
  REQUIRE(m1.mean == m2.mean);
  REQUIRE(m1.second == m2.second);

  RandomEulerSpec other = spec;
  other.seed = 8;
  REQUIRE(random_euler_moments(other).mean != m1.mean);
}

TEST_CASE("monte carlo moments land within three standard errors",
          "[randeuler]") {
  RandomEulerSpec spec;
  spec.sigma = 0.75;
  spec.y = 1000.0;
  spec.samples = 10000;
  spec.seed = 1;
  PrimeTable pt(1000);
  const auto est = random_euler_moments(spec);
  REQUIRE(std::abs(est.mean - predicted_mean(spec, pt)) <=
          3.0 * est.mean_se);
  REQUIRE(std::abs(est.second - predicted_second_moment(spec, pt)) <=
          3.0 * est.second_se);
  REQUIRE(est.mean_se > 0.0);
  REQUIRE(est.samples == spec.samples);
}

TEST_CASE("extending the prime cutoff keeps the shared factors",
          "[randeuler]") {
  RandomEulerSpec small;
  small.sigma = 0.75;
  small.y = 1000.0;
  small.seed = 3;
  RandomEulerSpec big = small;
  big.y = 10000.0;
  PrimeTable pt(10000);
  const int64 index = 5;
  const double vs = sample_random_euler(small, pt, index);
  const double vb = sample_random_euler(big, pt, index);

  // factor j of sample i is keyed by the prime ordinal, so the tail ratio
  // is fully determined by the signs beyond the small cutoff
  KahanSum tail;
  int64 j = 0;
  for (int64 p : pt.primes()) {
    if (double(p) > big.y) break;
    if (double(p) > small.y) {
      const int sgn = keyed_sign(big.seed, index, j);
      tail.add(-std::log1p(-sgn * std::pow(double(p), -big.sigma)));
    }
    ++j;
  }
  REQUIRE_THAT(vb, Catch::Matchers::WithinRel(vs * std::exp(tail.value()),
                                              1e-12));
}

TEST_CASE("tail probabilities behave like probabilities", "[randeuler]") {
  RandomEulerSpec spec;
  spec.sigma = 0.75;
  spec.y = 200.0;
  spec.samples = 2000;
  spec.seed = 11;

  const auto all = mc_tail(spec, 1e6, TailSide::lower);
  REQUIRE(all.hits == spec.samples);
  REQUIRE(all.empirical == 1.0);
  REQUIRE_THAT(all.half_width,
               Catch::Matchers::WithinRel(
                   1.0 - std::pow(0.05, 1.0 / 2000.0), 1e-12));

  const auto none = mc_tail(spec, 1e-8, TailSide::lower);
  REQUIRE(none.hits == 0);
  REQUIRE(none.empirical == 0.0);
  REQUIRE(none.half_width == all.half_width);

  const auto lo = mc_tail(spec, 0.4, TailSide::lower);
  const auto hi = mc_tail(spec, 0.8, TailSide::lower);
  REQUIRE(lo.hits <= hi.hits);

  const auto upper = mc_tail(spec, 0.8, TailSide::upper);
  REQUIRE(hi.hits + upper.hits == spec.samples);
}

TEST_CASE("lamzouri prediction falls as the threshold tightens",
          "[randeuler]") {
  // At sigma = 3/4 the exponent passes -745 (the double underflow line)
  // near B = 0.006, so the sampled thresholds stop at 0.008.
  double prev = 1.0;
  for (double B : {0.05, 0.02, 0.01, 0.008}) {
    const double p = lamzouri_prediction(0.75, B);
    REQUIRE(p > 0.0);
    REQUIRE(p < prev);
    prev = p;
  }
  // Frozen against a 50-digit quadrature of the defining constant.
  REQUIRE_THAT(lamzouri_prediction(0.75, 0.01),
               Catch::Matchers::WithinRel(3.0933615279107475e-234, 1e-9));
  const double edge = std::abs(riemann_zeta_real(0.75)) / std::exp(std::exp(1.0));
  const double at_edge = lamzouri_prediction(0.75, edge);
  REQUIRE(at_edge > 0.0);
  REQUIRE(std::isfinite(at_edge));
  REQUIRE_THROWS(lamzouri_prediction(0.75, 10.0));
}

TEST_CASE("gs prediction matches its closed form and decays", "[randeuler]") {
  const double z2 = riemann_zeta_real(2.0);
  const double scale = z2 * std::exp(-stieltjes_reference[0]);
  const double B = scale / 2.0;  // u = 2
  REQUIRE_THAT(gs_prediction(B),
               Catch::Matchers::WithinRel(
                   std::exp(-const_c21() * std::exp(2.0) / 2.0), 1e-12));
  double prev = 1.0;
  for (double b : {0.5, 0.3, 0.2}) {
    const double p = gs_prediction(b);
    REQUIRE(p > 0.0);
    REQUIRE(p < prev);
    prev = p;
  }
  REQUIRE_THROWS(gs_prediction(2.0 * scale));
}

TEST_CASE("family densities are monotone in the threshold", "[randeuler]") {
  const auto tight = empirical_density(0.75, 600, 0.7, 1e-7);
  const auto loose = empirical_density(0.75, 600, 1.2, 1e-7);
  REQUIRE(tight.samples == loose.samples);
  REQUIRE(tight.samples > 100);
  REQUIRE(tight.hits <= loose.hits);
  REQUIRE(tight.empirical >= 0.0);
  REQUIRE(loose.empirical <= 1.0);

  // at sigma = 1 the pole leaves |L(1, chi_d)| as the measured value
  const auto at1 = empirical_density(1.0, 300, 0.6, 1e-7);
  REQUIRE(at1.samples > 0);
  REQUIRE(at1.empirical >= 0.0);
  REQUIRE(at1.empirical <= 1.0);
}
