#pragma once

#include <mpfr.h>

#include <cmath>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

// Stieltjes constants gamma_0..gamma_3 (reference values, cross-checked in
// the test suite against the zeta Laurent-expansion oracle and against the
// series evaluation below).
inline const double stieltjes_reference[4] = {
    0.57721566490153286061,
    -0.07281584548367672486,
    -0.00969036319287231848,
    0.00205383442030334587,
};

// gamma_j = -1/(j+1) * sum_{n>=0} 1/(n+1) * sum_{k=0}^{n} (-1)^k C(n,k)
// log^{j+1}(k+1). The inner alternating sums cancel to ~2^-n of their
// largest term, so the evaluation runs in MPFR with precision tied to the
// term count. Convergence is slow (~1/(N log^2 N)); this is a fidelity
// check on the defining series, not the production source of gamma_j.
inline double stieltjes_gamma(int j, int terms = 600) {
  require(j >= 0 && j <= 3, "stieltjes_gamma: j must be in 0..3");
  require(terms >= 8 && terms <= 20000, "stieltjes_gamma: bad term count");
  const mpfr_prec_t prec = terms + 64;
  const int n_max = terms;

  std::vector<mpfr_t> logpow(n_max + 2), binom(n_max + 2);
  for (auto& x : logpow) mpfr_init2(x, prec);
  for (auto& x : binom) mpfr_init2(x, prec);
  mpfr_t inner, outer, tmp;
  mpfr_init2(inner, prec);
  mpfr_init2(outer, prec);
  mpfr_init2(tmp, prec);

  for (int k = 0; k <= n_max + 1; ++k) {
    mpfr_set_ui(logpow[k], static_cast<unsigned long>(k) + 1, MPFR_RNDN);
    mpfr_log(logpow[k], logpow[k], MPFR_RNDN);
    mpfr_pow_ui(logpow[k], logpow[k], static_cast<unsigned long>(j) + 1,
                MPFR_RNDN);
  }

  mpfr_set_ui(outer, 0, MPFR_RNDN);
  mpfr_set_ui(binom[0], 1, MPFR_RNDN);  // row n=0 of Pascal's triangle
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      mpfr_set_ui(binom[n], 1, MPFR_RNDN);
      for (int k = n - 1; k >= 1; --k)
        mpfr_add(binom[k], binom[k], binom[k - 1], MPFR_RNDN);
    }
    mpfr_set_ui(inner, 0, MPFR_RNDN);
    for (int k = 1; k <= n; ++k) {  // k = 0 contributes log(1) = 0
      mpfr_mul(tmp, binom[k], logpow[k], MPFR_RNDN);
      if (k % 2)
        mpfr_sub(inner, inner, tmp, MPFR_RNDN);
      else
        mpfr_add(inner, inner, tmp, MPFR_RNDN);
    }
    mpfr_div_ui(inner, inner, static_cast<unsigned long>(n) + 1, MPFR_RNDN);
    mpfr_add(outer, outer, inner, MPFR_RNDN);
  }
  mpfr_div_si(outer, outer, -(j + 1), MPFR_RNDN);
  const double out = mpfr_get_d(outer, MPFR_RNDN);

  for (auto& x : logpow) mpfr_clear(x);
  for (auto& x : binom) mpfr_clear(x);
  mpfr_clear(inner);
  mpfr_clear(outer);
  mpfr_clear(tmp);
  return out;
}

namespace detail {

// (1-1/p) h(p) = 1 - (4p^2-3p+1)/(p^3(p+1)); the deficit x(p) drives both
// the product and its prime-density tail estimate.
inline double c6_deficit(double p) {
  return (4.0 * p * p - 3.0 * p + 1.0) / (p * p * p * (p + 1.0));
}

}  // namespace detail

// c6 = (1/8) prod_{p odd} (1-1/p) h(p), truncated at P with a first-order
// prime-density tail correction applied multiplicatively.
inline ValueWithError const_c6(int64 P = 10000000) {
  require(P >= 100, "const_c6: prime cutoff too small");
  PrimeTable pt(P);
  KahanSum logsum;
  for (int64 p : pt.primes()) {
    if (p == 2) continue;
    logsum += std::log1p(-detail::c6_deficit(static_cast<double>(p)));
  }
  // sum_{p>P} log(1 - x(p)) ~ -int_P^inf x(t) dt/log t, via u = P/t
  const double Pd = static_cast<double>(P);
  const double tail = -integrate(
      [Pd](double u) {
        if (u <= 0.0) return 0.0;
        const double t = Pd / u;
        return detail::c6_deficit(t) * (Pd / (u * u)) / std::log(t);
      },
      0.0, 1.0, 1e-16);
  const double value = std::exp(logsum.value() + tail) / 8.0;
  const double err = std::abs(tail) * 0.01 + 2e3 * detail::c6_deficit(Pd);
  return {value, value * err + 1e-13};
}

// c5 = c6 / (96 pi^2) (equivalently c6 / (576 zeta(2))).
inline ValueWithError const_c5(int64 P = 10000000) {
  const double pi = 3.14159265358979323846;
  const ValueWithError c6 = const_c6(P);
  const double denom = 96.0 * pi * pi;
  return {c6.value / denom, c6.error / denom};
}

// c21 = exp( int_1^inf (1-tanh x)/x dx - int_0^1 tanh(x)/x dx ).
inline double const_c21() {
  const double upper = integrate_to_inf(
      [](double x) {
        const double e = std::exp(-2.0 * x);
        return 2.0 * e / ((1.0 + e) * x);
      },
      1.0, 1e-14);
  const double lower =
      integrate([](double x) { return x == 0.0 ? 1.0 : std::tanh(x) / x; },
                0.0, 1.0, 1e-14);
  return std::exp(upper - lower);
}

namespace detail {

// log(cosh x) without cancellation at either end.
inline double log_cosh(double x) {
  x = std::abs(x);
  if (x <= 1.0) {
    const double s = std::sinh(0.5 * x);
    return std::log1p(2.0 * s * s);
  }
  return x + std::log1p(std::exp(-2.0 * x)) - 0.69314718055994530942;
}

}  // namespace detail

// c20(sigma) = sigma^{2sigma/(1-sigma)} (1-sigma)^{(2sigma-1)/(sigma-1)}
//              * ( int_0^inf log(cosh x) x^{-1/sigma} dx/x )^{sigma/(sigma-1)}
inline double const_c20(double sigma) {
  require(sigma > 0.5 && sigma < 1.0, "const_c20: sigma must be in (1/2,1)");
  const double a = -1.0 / sigma - 1.0;  // x^{-1/sigma - 1}
  // (0,1]: integrable singularity at 0 -> tanh-sinh
  const double head = tanh_sinh_01(
      [a](double x, double) { return detail::log_cosh(x) * std::pow(x, a); },
      1e-13);
  // [1,inf): log cosh x = x - log 2 + log1p(e^{-2x}); first two pieces exact
  const double exact = sigma / (1.0 - sigma) - sigma * 0.69314718055994530942;
  const double rest = integrate_to_inf(
      [a](double x) { return std::log1p(std::exp(-2.0 * x)) * std::pow(x, a); },
      1.0, 1e-14);
  const double I = head + exact + rest;
  return std::pow(sigma, 2.0 * sigma / (1.0 - sigma)) *
         std::pow(1.0 - sigma, (2.0 * sigma - 1.0) / (sigma - 1.0)) *
         std::pow(I, sigma / (sigma - 1.0));
}

// c10(delta) = (e^{1/2} / 4 pi^2) int_R |Gamma(it - delta)| dt.
inline double const_c10(double delta) {
  require(delta > 0.0 && delta < 1.0, "const_c10: delta must be in (0,1)");
  const double pi = 3.14159265358979323846;
  const double integral = 2.0 * integrate_to_inf(
      [delta](double t) { return std::abs(gamma_complex(cplx(-delta, t))); },
      0.0, 1e-13);
  return std::exp(0.5) / (4.0 * pi * pi) * integral;
}

}  // namespace zetalab
