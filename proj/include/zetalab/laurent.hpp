#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/constants.hpp"
#include "zetalab/euler_products.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// Truncated Laurent expansion around w = 0: a[i] multiplies w^{lead + i}.
struct LaurentSeries {
  int lead = 0;
  std::vector<double> a;

  double coeff(int power) const {
    const int i = power - lead;
    return (i >= 0 && i < static_cast<int>(a.size())) ? a[i] : 0.0;
  }
  double residue() const { return coeff(-1); }
};

inline LaurentSeries laurent_multiply(const LaurentSeries& x,
                                      const LaurentSeries& y,
                                      int max_power = 4) {
  LaurentSeries out;
  out.lead = x.lead + y.lead;
  const int n = std::max(max_power - out.lead + 1, 1);
  out.a.assign(n, 0.0);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    for (std::size_t j = 0; j < y.a.size(); ++j) {
      const std::size_t k = i + j;
      if (k < out.a.size()) out.a[k] += x.a[i] * y.a[j];
    }
  return out;
}

inline LaurentSeries taylor_series(std::vector<double> coeffs) {
  return {0, std::move(coeffs)};
}

// zeta(1 + 2w) about w = 0 through w^3. Only the terms through w^2 can
// reach the residue below, but the cubic term costs nothing.
inline LaurentSeries zeta_laurent_2w() {
  const double* g = stieltjes_reference;
  return {-1, {0.5, g[0], -2.0 * g[1], 2.0 * g[2], -4.0 * g[3] / 3.0}};
}

// Taylor coefficients of (Gamma(w/2 + 1/4) / Gamma(1/4))^2 at w = 0 via
// Cauchy integrals on |w| = r. The nearest pole sits at w = -1/2, so any
// r < 1/2 works; the trapezoid rule on the circle converges spectrally.
inline std::vector<double> gamma_quarter_sq_taylor(int order = 3,
                                                   double r = 0.3,
                                                   int nodes = 128) {
  require(order >= 0 && order <= 8, "gamma_quarter_sq_taylor: bad order");
  require(r > 0.0 && r < 0.5, "gamma_quarter_sq_taylor: bad radius");
  const double pi = 3.14159265358979323846;
  const double g14 = gamma_real(0.25);
  std::vector<cplx> ring(nodes);
  for (int m = 0; m < nodes; ++m) {
    const double th = 2.0 * pi * m / nodes;
    const cplx w = std::polar(r, th);
    const cplx g = gamma_complex(0.5 * w + 0.25) / g14;
    ring[m] = g * g;
  }
  std::vector<double> out(order + 1);
  double rj = 1.0;
  for (int j = 0; j <= order; ++j) {
    KahanSumC s;
    for (int m = 0; m < nodes; ++m) {
      const double th = 2.0 * pi * m * j / nodes;
      s += ring[m] * cplx(std::cos(th), -std::sin(th));
    }
    out[j] = s.value().real() / (nodes * rj);
    rj *= r;
  }
  return out;
}

// exp(w log scale): coefficients log^j(scale) / j!.
inline std::vector<double> power_taylor(double log_scale, int order) {
  std::vector<double> out(order + 1);
  out[0] = 1.0;
  for (int j = 1; j <= order; ++j) out[j] = out[j - 1] * log_scale / j;
  return out;
}

// int_1^2 t^w dt = (2^{w+1} - 1)/(w+1), whose Taylor coefficients are
// I_j = (-1)^j (1 + 2 sum_{k=1}^j (-log 2)^k / k!).
inline std::vector<double> t_integral_taylor(int order = 3) {
  std::vector<double> out(order + 1);
  out[0] = 1.0;
  const double l2 = 0.69314718055994530942;
  double pw = 1.0, fact = 1.0, ssum = 0.0;
  for (int j = 1; j <= order; ++j) {
    pw *= -l2;
    fact *= j;
    ssum += pw / fact;
    out[j] = (j % 2 ? -1.0 : 1.0) * (1.0 + 2.0 * ssum);
  }
  return out;
}

struct EtaTaylor {
  double value = 0.0;  // eta(1; l)
  double ld[3] = {0.0, 0.0, 0.0};  // eta'/eta, eta''/eta, eta'''/eta at 1
};

// Value and normalized alpha-derivatives of eta(alpha; l) at alpha = 1.
// Per-prime log-derivative cumulants add across the product and are
// recombined at the end; the same cutoff as the caller's other eta
// evaluations keeps truncation errors aligned.
inline EtaTaylor eta_taylor_at_1(int64 l, const PrimeTable& pt) {
  KahanSum L1, L2, L3, logsum;
  double head = 1.0;
  auto absorb = [&](int64 p, EtaCase c) {
    const auto d = detail::eta_local_derivs(1.0, p, c);
    const double r1 = d.d[1] / d.d[0];
    const double r2 = d.d[2] / d.d[0];
    const double r3 = d.d[3] / d.d[0];
    L1 += r1;
    L2 += r2 - r1 * r1;
    L3 += r3 - 3.0 * r2 * r1 + 2.0 * r1 * r1 * r1;
    if (c == EtaCase::coprime)
      logsum += std::log(d.d[0]);
    else
      head *= d.d[0];
  };
  for (int64 p : pt.primes()) absorb(p, eta_case(p, l));
  for (const auto& pp : factorize(l))
    if (pp.p > pt.limit()) absorb(pp.p, eta_case(pp.p, l));

  EtaTaylor out;
  out.value = head * std::exp(logsum.value());
  const double a1 = L1.value(), a2 = L2.value(), a3 = L3.value();
  out.ld[0] = a1;
  out.ld[1] = a1 * a1 + a2;
  out.ld[2] = a1 * a1 * a1 + 3.0 * a1 * a2 + a3;
  return out;
}

enum class ResidueMode { series, leading };

// Residue at w = 0 of
//   (Gamma(w/2+1/4)/Gamma(1/4))^2 (X/2 pi rs)^w (int_1^2 t^w dt)
//     zeta(1+2w)^3 eta(1+2w; a^2 rs) / w.
// leading keeps only (c6/48) rs/(sigma(rs) h(ars)) log^3(X/rs); series
// assembles the full Laurent product. With eta_closed set, the exact
// closed form replaces the truncated eta value (the derivative ratios
// stay truncated at the table limit either way).
inline double residue_lemma(double X, int64 a, int64 r, int64 s,
                            ResidueMode mode, const PrimeTable& pt,
                            bool eta_closed = true) {
  require(X > 1.0, "residue_lemma: X must exceed 1");
  require(a >= 1 && r >= 1 && s >= 1, "residue_lemma: positive inputs");
  require(a % 2 == 1 && r % 2 == 1 && s % 2 == 1,
          "residue_lemma: a, r, s must be odd");
  require(is_squarefree(a) && is_squarefree(r) && is_squarefree(s),
          "residue_lemma: a, r, s must be squarefree");
  require(std::gcd(a, r) == 1 && std::gcd(a, s) == 1 && std::gcd(r, s) == 1,
          "residue_lemma: a, r, s must be pairwise coprime");
  const double rs = static_cast<double>(r) * static_cast<double>(s);

  if (mode == ResidueMode::leading) {
    const double lw = std::log(X / rs);
    return eta_closed_form_1(a, r, s) / 48.0 * lw * lw * lw;
  }

  const int64 l = a * a * r * s;
  const EtaTaylor et = eta_taylor_at_1(l, pt);
  const double e0 = eta_closed ? eta_closed_form_1(a, r, s) : et.value;

  const double pi = 3.14159265358979323846;
  const auto ga = gamma_quarter_sq_taylor(3);
  const auto pw = power_taylor(std::log(X / (2.0 * pi * rs)), 3);
  const auto ti = t_integral_taylor(3);
  const LaurentSeries eta_series = taylor_series(
      {e0, 2.0 * e0 * et.ld[0], 2.0 * e0 * et.ld[1],
       4.0 / 3.0 * e0 * et.ld[2]});

  LaurentSeries acc = laurent_multiply(taylor_series(ga), taylor_series(pw));
  acc = laurent_multiply(acc, taylor_series(ti));
  acc = laurent_multiply(acc, eta_series);
  const LaurentSeries z = zeta_laurent_2w();
  acc = laurent_multiply(acc, z);
  acc = laurent_multiply(acc, z);
  acc = laurent_multiply(acc, z);
  acc = laurent_multiply(acc, LaurentSeries{-1, {1.0}});  // the 1/w factor
  return acc.residue();
}

// Small-circle contour evaluation of the same residue; the integrand is
// built from first principles, so this is the independent check for the
// series route. Use the same table in both to cancel eta truncation.
inline double residue_contour_oracle(double X, int64 a, int64 r, int64 s,
                                     const PrimeTable& pt, int nodes = 400,
                                     double radius = 0.1) {
  require(nodes >= 16, "residue_contour_oracle: too few nodes");
  require(radius > 0.0 && radius < 0.25, "residue_contour_oracle: bad radius");
  const int64 l = a * a * r * s;
  const double rs = static_cast<double>(r) * static_cast<double>(s);
  const double pi = 3.14159265358979323846;
  const double g14 = gamma_real(0.25);
  KahanSumC acc;
  for (int m = 0; m < nodes; ++m) {
    const double th = 2.0 * pi * m / nodes;
    const cplx w = std::polar(radius, th);
    const cplx g = gamma_complex(0.5 * w + 0.25) / g14;
    const cplx zv = riemann_zeta(cplx(1.0, 0.0) + 2.0 * w);
    const cplx integrand = g * g * std::pow(cplx(X / (2.0 * pi * rs)), w) *
                           (std::pow(cplx(2.0), w + 1.0) - 1.0) / (w + 1.0) *
                           zv * zv * zv *
                           eta_product_complex(1.0 + 2.0 * w, l, pt) / w;
    acc += integrand * w;
  }
  return acc.value().real() / nodes;
}

}  // namespace zetalab
