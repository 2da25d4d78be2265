#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/constants.hpp"
#include "zetalab/lfunc.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// Random Euler product prod_{p <= y} (1 - X_p p^-sigma)^-1 with fair
// independent signs X_p, the standard model for the distribution of
// L(sigma, chi_d) over quadratic families.

struct RandomEulerSpec {
  double sigma = 0.75;
  double y = 1000.0;
  int64 samples = 1;
  std::uint64_t seed = 0;

  void validate() const {
    require(sigma > 0.5 && sigma <= 1.0,
            "RandomEulerSpec: sigma must be in (1/2, 1]");
    require(samples >= 1, "RandomEulerSpec: need at least one sample");
  }
};

// Sign of factor j in sample `index` depends only on (seed, index, j), so a
// stream sliced across workers reproduces byte-identically in any order.
inline double sample_random_euler(const RandomEulerSpec& spec,
                                  const PrimeTable& pt, int64 index) {
  spec.validate();
  KahanSum acc;
  int64 j = 0;
  for (const int64 p : pt.primes()) {
    if (static_cast<double>(p) > spec.y) break;
    const int sgn = keyed_sign(spec.seed, static_cast<std::uint64_t>(index),
                               static_cast<std::uint64_t>(j));
    acc.add(-std::log1p(-sgn * std::pow(double(p), -spec.sigma)));
    ++j;
  }
  return std::exp(acc.value());
}

// E (1 - X a)^-1 = (1 - a^2)^-1 per factor, a = p^-sigma.
inline double predicted_mean(const RandomEulerSpec& spec, const PrimeTable& pt) {
  KahanSum acc;
  for (const int64 p : pt.primes()) {
    if (static_cast<double>(p) > spec.y) break;
    acc.add(-std::log1p(-std::pow(double(p), -2.0 * spec.sigma)));
  }
  return std::exp(acc.value());
}

// E (1 - X a)^-2 = ((1-a)^-2 + (1+a)^-2) / 2 per factor.
inline double predicted_second_moment(const RandomEulerSpec& spec,
                                      const PrimeTable& pt) {
  KahanSum acc;
  for (const int64 p : pt.primes()) {
    if (static_cast<double>(p) > spec.y) break;
    const double a = std::pow(double(p), -spec.sigma);
    const double lo = 1.0 / ((1.0 - a) * (1.0 - a));
    const double hi = 1.0 / ((1.0 + a) * (1.0 + a));
    acc.add(std::log(0.5 * (lo + hi)));
  }
  return std::exp(acc.value());
}

struct MomentEstimate {
  double mean = 0.0;
  double mean_se = 0.0;
  double second = 0.0;
  double second_se = 0.0;
  int64 samples = 0;
};

inline MomentEstimate random_euler_moments(const RandomEulerSpec& spec) {
  spec.validate();
  const PrimeTable pt(std::max<int64>(2, static_cast<int64>(spec.y)));
  KahanSum s1, s2, s4;
  for (int64 i = 0; i < spec.samples; ++i) {
    const double v = sample_random_euler(spec, pt, i);
    s1.add(v);
    s2.add(v * v);
    s4.add(v * v * v * v);
  }
  MomentEstimate out;
  out.samples = spec.samples;
  const double n = static_cast<double>(spec.samples);
  out.mean = s1.value() / n;
  out.second = s2.value() / n;
  const double var1 = std::max(0.0, s2.value() / n - out.mean * out.mean);
  const double var2 = std::max(0.0, s4.value() / n - out.second * out.second);
  out.mean_se = std::sqrt(var1 / n);
  out.second_se = std::sqrt(var2 / n);
  return out;
}

// ------------------------------------------------------------- densities

enum class TailSide { lower, upper };

struct DensityReport {
  double B = 0.0;
  double empirical = 0.0;
  double half_width = 0.0;  // 95% binomial, or one-sided bound on empty tails
  double prediction = 0.0;  // filled by the caller when a formula applies
  TailSide side = TailSide::lower;
  int64 hits = 0;
  int64 samples = 0;
};

inline DensityReport mc_tail(const RandomEulerSpec& spec, double B,
                             TailSide side) {
  spec.validate();
  require(B > 0.0, "mc_tail: threshold must be positive");
  const PrimeTable pt(std::max<int64>(2, static_cast<int64>(spec.y)));
  DensityReport rep;
  rep.B = B;
  rep.side = side;
  rep.samples = spec.samples;
  for (int64 i = 0; i < spec.samples; ++i) {
    const double v = sample_random_euler(spec, pt, i);
    const bool hit = side == TailSide::lower ? v <= B : v >= B;
    if (hit) ++rep.hits;
  }
  const double n = static_cast<double>(spec.samples);
  const double phat = static_cast<double>(rep.hits) / n;
  rep.empirical = phat;
  if (rep.hits == 0 || rep.hits == spec.samples) {
    // Clopper-style one-sided 95% bound when the tail was never (or always)
    // observed: the true probability differs from phat by < 1 - 0.05^(1/n).
    rep.half_width = 1.0 - std::pow(0.05, 1.0 / n);
  } else {
    rep.half_width = 1.96 * std::sqrt(phat * (1.0 - phat) / n);
  }
  return rep;
}

// exp(-c20(sigma) log(|zeta(sigma)|/B)^{1/(1-sigma)}
//                 loglog(|zeta(sigma)|/B)^{sigma/(1-sigma)}).
// zeta(sigma) is negative on (1/2,1); the scale enters through its modulus.
inline double lamzouri_prediction(double sigma, double B) {
  require(sigma > 0.5 && sigma < 1.0,
          "lamzouri_prediction: sigma must be in (1/2,1)");
  require(B > 0.0, "lamzouri_prediction: threshold must be positive");
  const double scale = std::abs(riemann_zeta_real(sigma));
  const double lg = std::log(scale / B);
  require(lg > 1.0, "lamzouri_prediction: B too large for the asymptotic");
  const double c20 = const_c20(sigma);
  return std::exp(-c20 * std::pow(lg, 1.0 / (1.0 - sigma)) *
                  std::pow(std::log(lg), sigma / (1.0 - sigma)));
}

// exp(-c21 exp(u) / u) with u = zeta(2) / (B e^gamma0).
inline double gs_prediction(double B) {
  require(B > 0.0, "gs_prediction: threshold must be positive");
  static const double c21 = const_c21();
  const double z2 = riemann_zeta_real(2.0);
  const double u = z2 / (B * std::exp(stieltjes_reference[0]));
  require(u > 1.0, "gs_prediction: B out of the small-value regime");
  return std::exp(-c21 * std::exp(u) / u);
}

// Fraction of fundamental discriminants |d| <= X whose h_sigma value sits
// below B.  For sigma < 1 that value is |zeta(sigma) L(sigma, chi_d)|; at
// sigma = 1 the pole of zeta_K leaves |L(1, chi_d)| as the leading
// coefficient.
inline DensityReport empirical_density(double sigma, int64 X, double B,
                                       double tol = 1e-8) {
  require(sigma > 0.5 && sigma <= 1.0,
          "empirical_density: sigma must be in (1/2, 1]");
  require(X >= 100, "empirical_density: X must be >= 100");
  require(B > 0.0, "empirical_density: threshold must be positive");
  const double zs = sigma < 1.0 ? std::abs(riemann_zeta_real(sigma)) : 1.0;
  DensityReport rep;
  rep.B = B;
  rep.side = TailSide::lower;
  for (const int sign : {1, -1}) {
    for (const int64 d : enumerate_fundamental(1, X, sign)) {
      if (d == 1) continue;
      const double lv = std::abs(dirichlet_L(sigma, d, tol).value);
      ++rep.samples;
      if (zs * lv <= B) ++rep.hits;
    }
  }
  const double n = static_cast<double>(rep.samples);
  rep.empirical = static_cast<double>(rep.hits) / n;
  rep.half_width = rep.hits == 0 || rep.hits == rep.samples
                       ? 1.0 - std::pow(0.05, 1.0 / n)
                       : 1.96 * std::sqrt(rep.empirical *
                                          (1.0 - rep.empirical) / n);
  return rep;
}

}  // namespace zetalab
