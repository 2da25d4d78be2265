#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "zetalab/base.hpp"

namespace zetalab {

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1,1] (QUADPACK values).
inline const double gk_x[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline const double gk_wk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline const double gk_wg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

template <class F>
void gk15(const F& f, double a, double b, double& val, double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * gk_x[i];
    const double fv = (i == 7) ? f(c) : f(c - dx) + f(c + dx);
    resk += gk_wk[i] * fv;
    if (i % 2 == 1) resg += gk_wg[i / 2] * fv;
  }
  val = resk * h;
  err = std::abs((resk - resg) * h);
}

template <class F>
double adaptive_rec(const F& f, double a, double b, double tol, int depth) {
  double val, err;
  gk15(f, a, b, val, err);
  if (err <= tol || depth >= 48) return val;
  const double c = 0.5 * (a + b);
  return adaptive_rec(f, a, c, tol * 0.5, depth + 1) +
         adaptive_rec(f, c, b, tol * 0.5, depth + 1);
}

}  // namespace detail

// Adaptive Gauss-Kronrod on a finite interval; tol is absolute.
template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-12) {
  if (a == b) return 0.0;
  return detail::adaptive_rec(f, a, b, tol, 0);
}

// Integral over [a, inf) of a decaying integrand: fixed panels with doubling
// width until a panel falls below the cutoff.
template <class F>
double integrate_to_inf(const F& f, double a, double tol = 1e-12) {
  KahanSum total;
  double left = a, width = 1.0;
  double scale = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double piece = integrate(f, left, left + width, tol * 0.1);
    total += piece;
    scale = std::max(scale, std::abs(total.value()));
    if (std::abs(piece) < tol * 0.25 * (1.0 + scale) && k > 2) break;
    left += width;
    if (width < 1024.0) width *= 2.0;
  }
  return total.value();
}

// tanh-sinh rule on (0,1); integrable endpoint singularities allowed.
// f receives (x, 1-x) so the caller can resolve either endpoint accurately.
template <class F2>
double tanh_sinh_01(const F2& f, double tol = 1e-12) {
  const double pi = 3.14159265358979323846;
  double h = 0.5;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int level = 0; level < 10; ++level) {
    KahanSum sum;
    const int kmax = static_cast<int>(6.4 / h) + 1;
    for (int k = -kmax; k <= kmax; ++k) {
      const double t = k * h;
      const double sh = pi * std::sinh(t);
      if (std::abs(sh) > 700.0) continue;
      const double ex = std::exp(-sh);
      const double x = 1.0 / (1.0 + ex);      // node
      const double xc = ex / (1.0 + ex);      // 1 - node
      const double w = pi * std::cosh(t) * x * xc;
      if (w < 1e-320) continue;
      const double fv = f(x, xc);
      if (std::isfinite(fv)) sum += w * fv;
    }
    const double cur = sum.value() * h;
    if (level > 2 && std::abs(cur - prev) <= tol * (1.0 + std::abs(cur)))
      return cur;
    prev = cur;
    h *= 0.5;
  }
  return prev;
}

// tanh-sinh on a general finite interval (a,b).
template <class F>
double tanh_sinh(const F& f, double a, double b, double tol = 1e-12) {
  const double len = b - a;
  return len * tanh_sinh_01([&](double x, double) { return f(a + len * x); },
                            tol / std::max(1.0, std::abs(len)));
}

}  // namespace zetalab
