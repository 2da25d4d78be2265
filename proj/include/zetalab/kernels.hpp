#pragma once

#include <cmath>
#include <vector>

#include "zetalab/base.hpp"
#include "zetalab/gamma.hpp"

namespace zetalab {

// Gamma(1/4)
inline constexpr double gamma_quarter = 3.6256099082219083119;

// Smoothed sums over n truncate where the kernel argument exceeds this;
// w2_kernel(40) < 5e-36 sits far below every tolerance in use.
inline constexpr double w2_truncation_xi = 40.0;

struct ContourSpec {
  double c = 0.0;      // abscissa; <=0 tracks the saddle max(1, min(2 xi, 120))
  double step = 0.05;  // trapezoid step in t
  double t_cap = 200.0;
  double cutoff = 1e-22;  // stop once terms fall below cutoff * peak
};

namespace detail {

struct W2Pair {
  double value;  // W2(xi)
  double dlog;   // d W2 / d log xi
};

// W2(xi) = (1/2 pi i) int_(c) (Gamma(w/2+1/4)/Gamma(1/4))^2 xi^-w dw/w
// evaluated by trapezoid on the vertical line Re w = c. The integrand is
// analytic in a strip of half-width c around the line, so the trapezoid
// converges spectrally; truncation in t dominates. The derivative in
// log xi reuses the same Gamma evaluations (drop the 1/w).
inline W2Pair w2_contour(double xi, const ContourSpec& spec) {
  require(xi > 0.0, "w2_contour: xi must be positive");
  const double c =
      spec.c > 0.0 ? spec.c : std::max(1.0, std::min(2.0 * xi, 120.0));
  const double lx = std::log(xi);
  const double h = spec.step;

  KahanSum sv, sd;
  double peak = 0.0;
  for (int k = 0;; ++k) {
    const double t = h * k;
    if (t > spec.t_cap) break;
    const cplx w(c, t);
    const cplx g = gamma_complex(0.5 * w + 0.25) / gamma_quarter;
    const cplx core = g * g * std::exp(-w * lx);
    const double fd = -core.real();
    const double fv = (core / w).real();
    if (k == 0) {
      sv.add(0.5 * fv);
      sd.add(0.5 * fd);
    } else {
      sv.add(fv);
      sd.add(fd);
    }
    const double mag = std::abs(core);
    peak = std::max(peak, mag);
    if (t > 4.0 && mag < spec.cutoff * peak) break;
  }
  const double pi = 3.14159265358979323846;
  return {h * sv.value() / pi, h * sd.value() / pi};
}

}  // namespace detail

inline double w2_kernel(double xi, const ContourSpec& spec = {}) {
  return detail::w2_contour(xi, spec).value;
}

inline double w2_kernel_dlog(double xi, const ContourSpec& spec = {}) {
  return detail::w2_contour(xi, spec).dlog;
}

// Cubic-Hermite table of W2 over a log-spaced grid. Queries above xi_max
// return 0 (the kernel is ~1e-39 there); queries below xi_min fall back to
// direct quadrature.
class W2Cache {
 public:
  explicit W2Cache(double xi_min = 1e-6, double xi_max = 45.0,
                   double step = 0.005) {
    require(xi_min > 0.0 && xi_max > 2.0 * xi_min, "W2Cache: bad range");
    require(step > 1e-5 && step < 0.5, "W2Cache: bad step");
    u0_ = std::log(xi_min);
    h_ = step;
    xi_max_ = xi_max;
    const double u1 = std::log(xi_max);
    n_ = static_cast<int>(std::ceil((u1 - u0_) / h_)) + 1;
    val_.resize(n_ + 1);
    der_.resize(n_ + 1);
    ContourSpec spec;
    spec.c = 0.0;  // track the saddle so large-xi nodes stay above noise
    for (int i = 0; i <= n_; ++i) {
      const auto pair = detail::w2_contour(std::exp(u0_ + h_ * i), spec);
      val_[i] = pair.value;
      der_[i] = pair.dlog;
    }
  }

  double operator()(double xi) const {
    require(xi > 0.0, "W2Cache: xi must be positive");
    if (xi >= xi_max_) return 0.0;
    const double u = std::log(xi);
    if (u < u0_) return w2_kernel(xi);
    const double x = (u - u0_) / h_;
    int i = static_cast<int>(x);
    if (i >= n_) i = n_ - 1;
    const double s = x - i;
    const double s2 = s * s, s3 = s2 * s;
    return val_[i] * (2 * s3 - 3 * s2 + 1) + der_[i] * h_ * (s3 - 2 * s2 + s) +
           val_[i + 1] * (-2 * s3 + 3 * s2) + der_[i + 1] * h_ * (s3 - s2);
  }

 private:
  double u0_, h_, xi_max_;
  int n_;
  std::vector<double> val_, der_;
};

// Smooth compactly supported weight on (1/2, 3); phi(1) = e^{-1/2}.
inline double phi_bump(double x) {
  if (x <= 0.5 || x >= 3.0) return 0.0;
  return std::exp(1.0 / ((2.0 * x - 1.0) * (x - 3.0)));
}

}  // namespace zetalab
