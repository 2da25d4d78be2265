#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/kernels.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

using bigrat = boost::multiprecision::cpp_rational;

struct LValueResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int64 terms_used = 0;
};

struct LValueResultC {
  cplx value{};
  double error_estimate = 0.0;
  int64 terms_used = 0;
};

namespace detail {

// chi_d(n) through a period table mod |d|; valid for fundamental d.
struct ChiTable {
  int64 q;
  std::vector<int> v;

  explicit ChiTable(int64 d) : q(d < 0 ? -d : d), v(q) {
    for (int64 j = 0; j < q; ++j) v[j] = kronecker(d, j);
  }
  int operator()(int64 n) const { return v[n % q]; }
};

// Density of a sum of k independent uniforms on [0,1].
inline double irwin_hall(int k, double u) {
  if (u <= 0.0 || u >= static_cast<double>(k)) return 0.0;
  double acc = 0.0, binom = 1.0;
  const int jmax = static_cast<int>(u);
  for (int j = 0; j <= jmax; ++j) {
    acc += (j % 2 ? -1.0 : 1.0) * binom * std::pow(u - j, k - 1);
    binom *= static_cast<double>(k - j) / (j + 1);
  }
  double fact = 1.0;
  for (int i = 2; i < k; ++i) fact *= i;
  return acc / fact;
}

// k-fold forward difference g_k(n) = (g_{k-1}(n) - g_{k-1}(n+1)) of
// n^{-s}, written as (s)_k int IH_k(u) (n+u)^{-s-k} du so that no digits
// cancel no matter how small the differences get.
inline cplx abel_g(cplx s, int k, double n) {
  if (k == 0) return std::exp(-s * std::log(n));
  cplx poch(1.0, 0.0);
  for (int i = 0; i < k; ++i) poch *= s + static_cast<double>(i);
  const cplx ex = -s - static_cast<double>(k);
  KahanSumC acc;
  for (int j = 0; j < k; ++j) {
    // the density is polynomial on [j, j+1]; GK on the panel is exact
    const double re = integrate(
        [&](double u) {
          return irwin_hall(k, u) *
                 (std::exp(ex * std::log(n + u))).real();
        },
        j, j + 1, 1e-13);
    const double im = integrate(
        [&](double u) {
          return irwin_hall(k, u) *
                 (std::exp(ex * std::log(n + u))).imag();
        },
        j, j + 1, 1e-13);
    acc += cplx(re, im);
  }
  return poch * acc.value();
}

}  // namespace detail

// L(s, chi_d) by summing to a period multiple M and then repeatedly
// Abel-summing the tail: each pass splits off the mean of the running
// character sums as mu_k g_k(M+1) and leaves a mean-zero periodic weight
// against the next difference of n^{-s}. The reported error is the
// rigorous remainder bound max|c_K| |(s)_K| M^{1-Re s-K} / (Re s + K - 1),
// and M doubles until it clears tol.
inline LValueResultC dirichlet_L_complex(cplx s, int64 d, double tol = 1e-10,
                                         int K = 6,
                                         int64 max_M = int64{1} << 24) {
  require(is_fundamental_discriminant(d) && d != 1,
          "dirichlet_L_complex: d must be a fundamental discriminant != 1");
  require(s.real() > 0.05, "dirichlet_L_complex: need Re s > 0.05");
  require(K >= 2 && K <= 8, "dirichlet_L_complex: K must be in 2..8");
  const detail::ChiTable chi(d);
  const int64 q = chi.q;

  // The mean ladder depends only on residues mod q, not on M.
  std::vector<double> c(q), csum(q);
  for (int64 j = 0; j < q; ++j) c[j] = chi((1 + j) % q);
  std::vector<double> mu(K);
  for (int k = 0; k < K; ++k) {
    double running = 0.0;
    for (int64 j = 0; j < q; ++j) {
      running += c[j];
      csum[j] = running;
    }
    double m = 0.0;
    for (int64 j = 0; j < q; ++j) m += csum[j];
    m /= static_cast<double>(q);
    mu[k] = m;
    for (int64 j = 0; j < q; ++j) c[j] = csum[j] - m;
  }
  double cmax = 0.0;
  for (int64 j = 0; j < q; ++j) cmax = std::max(cmax, std::abs(c[j]));

  double poch_abs = 1.0;
  for (int i = 0; i < K; ++i) poch_abs *= std::abs(s + static_cast<double>(i));

  int64 periods = std::max<int64>(20, (64 + q - 1) / q);
  for (;;) {
    const int64 M = periods * q;
    KahanSumC head;
    for (int64 n = 1; n <= M; ++n) {
      const int ch = chi(n % q);
      if (ch == 0) continue;
      const cplx t = std::exp(-s * std::log(static_cast<double>(n)));
      head += (ch > 0) ? t : -t;
    }
    KahanSumC tail;
    for (int k = 0; k < K; ++k)
      tail += mu[k] * detail::abel_g(s, k, static_cast<double>(M) + 1.0);
    const double expo = s.real() + K - 1.0;
    const double bound =
        cmax * poch_abs * std::pow(static_cast<double>(M), -expo) / expo;
    const double err = bound + 1e-16 * std::sqrt(static_cast<double>(M));
    if (err < tol || 2 * M > max_M)
      return {head.value() + tail.value(), err, M};
    periods *= 2;
  }
}

inline LValueResult dirichlet_L(double s, int64 d, double tol = 1e-10,
                                int K = 6) {
  const auto r = dirichlet_L_complex(cplx(s, 0.0), d, tol, K);
  return {r.value.real(), r.error_estimate, r.terms_used};
}

// Gamma_R-quotient side of the functional equation:
// L(s) = |d|^{(1-2s)/2} gamma-ratio L(1-s), with the shift a = 0 for
// even characters (d > 0) and a = 1 for odd ones (d < 0).
inline cplx fe_factor_L(cplx s, int64 d) {
  require(d != 0 && d != 1, "fe_factor_L: bad discriminant");
  const double ad = static_cast<double>(d < 0 ? -d : d);
  const cplx scale = std::exp((0.5 - s) * std::log(ad));
  if (d > 0) return scale * gamma_R(1.0 - s) / gamma_R(s);
  return scale * gamma_R(2.0 - s) / gamma_R(1.0 + s);
}

// Dedekind counterpart with signature (r1, r2) = (2, 0) or (0, 1).
inline cplx fe_factor_dedekind(cplx s, int64 D) {
  require(is_fundamental_discriminant(D) && D != 1,
          "fe_factor_dedekind: D must be a fundamental discriminant != 1");
  const double ad = static_cast<double>(D < 0 ? -D : D);
  const cplx scale = std::exp((0.5 - s) * std::log(ad));
  if (D > 0) {
    const cplx g = gamma_R(1.0 - s) / gamma_R(s);
    return scale * g * g;
  }
  return scale * gamma_C(1.0 - s) / gamma_C(s);
}

// zeta_K for the quadratic field of discriminant D, away from s = 1.
inline cplx dedekind_quadratic(cplx s, int64 D, double tol = 1e-10) {
  require(std::abs(s - cplx(1.0, 0.0)) > 1e-10,
          "dedekind_quadratic: pole at s = 1");
  return riemann_zeta(s) * dirichlet_L_complex(s, D, tol).value;
}

// Divisor counts 1..nmax by the double loop.
inline std::vector<std::int32_t> divisor_count_table(int64 nmax) {
  require(nmax >= 1 && nmax <= (int64{1} << 28), "divisor_count_table: size");
  std::vector<std::int32_t> t(nmax + 1, 0);
  for (int64 a = 1; a <= nmax; ++a)
    for (int64 n = a; n <= nmax; n += a) ++t[n];
  return t;
}

// L(1/2, chi_{8d})^2 = 2 sum tau(n)/sqrt(n) chi_{8d}(n) W2(n pi / 8d),
// truncated where the kernel argument passes w2_truncation_xi. The sum is
// a square, so negative quadrature noise is clamped away.
inline double L_half_square(int64 d, const W2Cache& cache,
                            const std::vector<std::int32_t>& tau_table) {
  require(d >= 1, "L_half_square: d must be >= 1");
  const int64 q = 8 * d;
  const double pi = 3.14159265358979323846;
  const int64 nmax = static_cast<int64>(w2_truncation_xi * q / pi);
  require(nmax < static_cast<int64>(tau_table.size()),
          "L_half_square: divisor table too short");
  const detail::ChiTable chi(q);
  KahanSum acc;
  for (int64 n = 1; n <= nmax; ++n) {
    const int ch = chi(n % q);
    if (ch == 0) continue;
    const double term = tau_table[n] / std::sqrt(static_cast<double>(n)) *
                        cache(n * pi / q);
    acc.add(ch > 0 ? term : -term);
  }
  return std::max(2.0 * acc.value(), 0.0);
}

inline double L_half_square(int64 d, const W2Cache& cache) {
  const double pi = 3.14159265358979323846;
  const int64 nmax = static_cast<int64>(w2_truncation_xi * 8 * d / pi) + 1;
  return L_half_square(d, cache, divisor_count_table(nmax));
}

// sum_n chi_{8d}(n) n^{-sigma} exp(-n / X^2), cut when the damping factor
// drops below tol.
inline LValueResult L_twisted_exp(double sigma, int64 d, double X,
                                  double tol = 1e-12) {
  require(d >= 1, "L_twisted_exp: d must be >= 1");
  require(X > 0.0 && tol > 0.0 && tol < 1.0, "L_twisted_exp: bad arguments");
  const int64 q = 8 * d;
  const detail::ChiTable chi(q);
  const double x2 = X * X;
  const int64 nmax = static_cast<int64>(x2 * std::log(1.0 / tol)) + 1;
  KahanSum acc;
  for (int64 n = 1; n <= nmax; ++n) {
    const int ch = chi(n % q);
    if (ch == 0) continue;
    const double term =
        std::pow(static_cast<double>(n), -sigma) * std::exp(-n / x2);
    acc.add(ch > 0 ? term : -term);
  }
  // remaining terms are dominated by the geometric decay of exp(-n/X^2)
  const double rem = std::pow(static_cast<double>(nmax), -sigma) * tol * x2;
  return {acc.value(), rem, nmax};
}

// Shifted-moment sum over the compact bump: d runs over (X/2, 3X) with
// mu(2d)^2 selecting odd squarefree indices.
inline double sono_M(double alpha1, double alpha2, int64 l, double X,
                     double tol = 1e-9) {
  require(l >= 1, "sono_M: l must be >= 1");
  require(X > 0.0, "sono_M: X must be positive");
  const int64 lo = static_cast<int64>(std::floor(X / 2.0)) + 1;
  const int64 hi = static_cast<int64>(std::ceil(3.0 * X)) - 1;
  KahanSum acc;
  for (int64 d = std::max<int64>(1, lo); d <= hi; ++d) {
    if (!mu2d_squarefree(d)) continue;
    const double w = phi_bump(static_cast<double>(d) / X);
    if (w == 0.0) continue;
    const int chl = kronecker(8 * d, l);
    if (chl == 0) continue;
    const double l1 = dirichlet_L(0.5 + alpha1, 8 * d, tol).value;
    const double l2 = (alpha2 == alpha1)
                          ? l1
                          : dirichlet_L(0.5 + alpha2, 8 * d, tol).value;
    acc.add(chl * l1 * l2 * w);
  }
  return acc.value();
}

namespace detail {

// B_0 .. B_16 as exact fractions (odd indices beyond 1 vanish).
inline bigrat bernoulli_number(int j) {
  require(j >= 0 && j <= 16, "bernoulli_number: j must be in 0..16");
  static const std::pair<std::int64_t, std::int64_t> table[] = {
      {1, 1},    {-1, 2},   {1, 6},    {0, 1},  {-1, 30}, {0, 1},
      {1, 42},   {0, 1},    {-1, 30},  {0, 1},  {5, 66},  {0, 1},
      {-691, 2730}, {0, 1}, {7, 6},    {0, 1},  {-3617, 510},
  };
  return bigrat(table[j].first, table[j].second);
}

inline bigrat binomial_rat(int n, int k) {
  bigrat b = 1;
  for (int i = 0; i < k; ++i) b *= bigrat(n - i, i + 1);
  return b;
}

// B_k(x) at rational x, exactly.
inline bigrat bernoulli_poly(int k, const bigrat& x) {
  bigrat acc = 0, xp = 1;
  for (int j = k; j >= 0; --j) {
    acc += binomial_rat(k, j) * bernoulli_number(j) * xp;
    xp *= x;
  }
  return acc;
}

}  // namespace detail

// Generalized Bernoulli number B_{k, chi_d} = q^{k-1} sum chi(a) B_k(a/q),
// computed in exact rational arithmetic; the naive double sum loses nearly
// all digits to the q^{k-1} scale.
inline bigrat generalized_bernoulli(int k, int64 d) {
  require(k >= 1 && k <= 16, "generalized_bernoulli: k must be in 1..16");
  require(is_fundamental_discriminant(d) && d != 1,
          "generalized_bernoulli: d must be a fundamental discriminant != 1");
  const detail::ChiTable chi(d);
  const int64 q = chi.q;
  bigrat acc = 0;
  for (int64 a = 1; a <= q; ++a) {
    const int ch = chi(a % q);
    if (ch == 0) continue;
    const bigrat b = detail::bernoulli_poly(k, bigrat(a, q));
    acc += ch > 0 ? b : -b;
  }
  bigrat scale = 1;
  for (int i = 1; i < k; ++i) scale *= q;
  return scale * acc;
}

// L(1 - k, chi_d) = -B_{k, chi_d} / k, exact.
inline bigrat L_special_value_rat(int k, int64 d) {
  return -generalized_bernoulli(k, d) / k;
}

inline double L_special_value(int k, int64 d) {
  return static_cast<double>(L_special_value_rat(k, d));
}

// zeta(1 - k) = -B_k / k for k >= 1 (zeta(0) = -1/2 included via k = 1).
inline bigrat zeta_special_value_rat(int k) {
  require(k >= 1 && k <= 16, "zeta_special_value_rat: k must be in 1..16");
  if (k == 1) return bigrat(-1, 2);
  return -detail::bernoulli_number(k) / k;
}

}  // namespace zetalab
