#pragma once

#include <cmath>
#include <complex>

#include "zetalab/base.hpp"

namespace zetalab {

struct ZetaParams {
  int cutoff = 50;      // explicit terms before the Euler-Maclaurin tail
  int bernoulli = 10;   // correction terms; continuation valid Re s > 1-2k
};

// Riemann zeta by Euler-Maclaurin summation. Valid on the region
// Re(s) > 1 - 2*bernoulli, which covers everything used here; the defaults
// give ~1e-13 for |Im s| up to ~100.
inline cplx riemann_zeta(cplx s, ZetaParams prm = {}) {
  require(std::abs(s - cplx(1.0)) > 1e-12, "riemann_zeta: pole at s = 1");
  require(prm.cutoff >= 2 && prm.bernoulli >= 1 && prm.bernoulli <= 10,
          "riemann_zeta: bad parameters");
  require(s.real() > 1.0 - 2.0 * prm.bernoulli,
          "riemann_zeta: Re(s) too negative for the configured tail");
  static const double bern[10] = {
      1.0 / 6,      -1.0 / 30,    1.0 / 42,      -1.0 / 30,    5.0 / 66,
      -691.0 / 2730, 7.0 / 6,     -3617.0 / 510, 43867.0 / 798,
      -174611.0 / 330};
  const double N = prm.cutoff;
  KahanSumC sum;
  for (int n = 1; n < prm.cutoff; ++n)
    sum += std::exp(-s * std::log(static_cast<double>(n)));
  const cplx NmS = std::exp(-s * std::log(N));
  cplx val = sum.value() + N * NmS / (s - 1.0) + 0.5 * NmS;
  cplx poch = s;              // s(s+1)...(s+2k-2), updated per term
  cplx npow = NmS / N;        // N^{-s-2k+1}
  double fact = 2.0;          // (2k)!
  for (int k = 1; k <= prm.bernoulli; ++k) {
    val += bern[k - 1] / fact * poch * npow;
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    npow /= N * N;
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return val;
}

inline double riemann_zeta_real(double s, ZetaParams prm = {}) {
  return riemann_zeta(cplx(s), prm).real();
}

}  // namespace zetalab
