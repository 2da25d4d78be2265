#pragma once

#include <cmath>
#include <numeric>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/constants.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

struct EtaIndex {
  int64 l;
  int64 l1;  // product of primes with odd exponent in l
  int64 l2;  // l = l1 * l2^2
};

// l1 is the squarefree kernel of odd-exponent primes, so 12 -> (3,2) and
// 8 -> (2,2). For l with a cube factor l1 and l2 share a prime; the local
// eta factors below depend only on odd/even exponent, so nothing else does.
inline EtaIndex decompose_l(int64 l) {
  require(l >= 1, "decompose_l: l must be >= 1");
  int64 l1 = 1, l2 = 1;
  for (const auto& pp : factorize(l)) {
    if (pp.e % 2) l1 *= pp.p;
    for (int i = 0; i < pp.e / 2; ++i) l2 *= pp.p;
  }
  return {l, l1, l2};
}

enum class EtaCase { two, coprime, odd_exp, even_exp };

inline EtaCase eta_case(int64 p, int64 l) {
  if (p == 2) return EtaCase::two;
  if (l % p != 0) return EtaCase::coprime;
  int v = 0;
  while (l % p == 0) {
    l /= p;
    ++v;
  }
  return (v % 2) ? EtaCase::odd_exp : EtaCase::even_exp;
}

namespace detail {

inline cplx eta_local_value(cplx alpha, int64 p, EtaCase c) {
  const double dp = static_cast<double>(p);
  const double lp = std::log(dp);
  switch (c) {
    case EtaCase::two: {
      const cplx u = std::exp(-alpha * 0.69314718055994530942);
      return (1.0 - u) * (1.0 - u) * (1.0 - u);
    }
    case EtaCase::coprime: {
      const cplx u = std::exp(-alpha * lp);
      return 1.0 -
             (3.0 * u + (dp - 3.0) * u * u + u * u * u) / (dp + 1.0);
    }
    case EtaCase::odd_exp:
      return dp / (dp + 1.0) * (1.0 - std::exp(-alpha * lp));
    case EtaCase::even_exp:
      return dp / (dp + 1.0) * (1.0 - std::exp(-2.0 * alpha * lp));
  }
  return 0.0;  // unreachable
}

// First three alpha-derivatives alongside the value, all in closed form.
struct EtaDerivs {
  double d[4];
};

inline EtaDerivs eta_local_derivs(double alpha, int64 p, EtaCase c) {
  EtaDerivs out{};
  const double dp = static_cast<double>(p);
  const double lp = std::log(dp);
  switch (c) {
    case EtaCase::two: {
      const double lam = 0.69314718055994530942;
      const double u = std::exp(-alpha * lam);
      out.d[0] = (1 - u) * (1 - u) * (1 - u);
      out.d[1] = 3 * lam * u * (1 - u) * (1 - u);
      out.d[2] = 3 * lam * lam * u * (1 - u) * (3 * u - 1);
      out.d[3] = 3 * lam * lam * lam * u * (9 * u * u - 8 * u + 1);
      break;
    }
    case EtaCase::coprime: {
      const double u = std::exp(-alpha * lp);
      const double cj[3] = {3.0 / (dp + 1.0), (dp - 3.0) / (dp + 1.0),
                            1.0 / (dp + 1.0)};
      const double uj[3] = {u, u * u, u * u * u};
      out.d[0] = 1.0 - (cj[0] * uj[0] + cj[1] * uj[1] + cj[2] * uj[2]);
      double sign = 1.0, lpow = lp;
      for (int i = 1; i <= 3; ++i) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j)
          s += cj[j] * std::pow(j + 1.0, i) * uj[j];
        out.d[i] = sign * lpow * s;
        sign = -sign;
        lpow *= lp;
      }
      break;
    }
    case EtaCase::odd_exp:
    case EtaCase::even_exp: {
      const double k = (c == EtaCase::odd_exp) ? 1.0 : 2.0;
      const double q = dp / (dp + 1.0);
      const double u = std::exp(-k * alpha * lp);
      out.d[0] = q * (1.0 - u);
      double sign = 1.0, klpow = k * lp;
      for (int i = 1; i <= 3; ++i) {
        out.d[i] = sign * klpow * q * u;
        sign = -sign;
        klpow *= k * lp;
      }
      break;
    }
  }
  return out;
}

// |log eta_p| deficit for the p-coprime factor, used by the tail estimate.
inline double eta_deficit(double t, double alpha) {
  const double u = std::pow(t, -alpha);
  return (3.0 * u + (t - 3.0) * u * u + u * u * u) / (t + 1.0);
}

}  // namespace detail

// Spec'd local factor (real alpha). The complex version backs the
// derivative and residue machinery.
inline double eta_p(double alpha, int64 l, int64 p) {
  require(alpha > 0.5, "eta_p: need alpha > 1/2");
  return detail::eta_local_value(cplx(alpha, 0.0), p, eta_case(p, l)).real();
}

inline cplx eta_p_complex(cplx alpha, int64 l, int64 p) {
  require(alpha.real() > 0.5, "eta_p_complex: need Re(alpha) > 1/2");
  return detail::eta_local_value(alpha, p, eta_case(p, l));
}

struct EulerProductSpec {
  int64 P = 1000000;         // prime cutoff
  bool tail_correct = true;  // fold the first-order tail estimate into value
};

// eta(alpha; l) = prod_p eta_p(alpha; l), truncated at spec.P. With
// tail_correct the missing p > P factors (all of coprime type once P
// exceeds l's prime divisors) are estimated by the prime-density integral
// -int_P^inf deficit(t) dt/log t and folded in; the returned error bounds
// what remains.
inline ValueWithError eta_product(double alpha, int64 l,
                                  const EulerProductSpec& spec = {},
                                  const PrimeTable* table = nullptr) {
  require(alpha > 0.5, "eta_product: need alpha > 1/2");
  require(spec.P >= 100, "eta_product: cutoff too small");
  PrimeTable local(table ? 2 : spec.P);
  const PrimeTable& pt = table ? *table : local;
  require(pt.limit() >= spec.P, "eta_product: prime table smaller than P");

  double head = 1.0;
  KahanSum logsum;
  for (int64 p : pt.primes()) {
    if (p > spec.P) break;
    const EtaCase c = eta_case(p, l);
    if (c == EtaCase::coprime)
      logsum += std::log1p(-detail::eta_deficit(static_cast<double>(p), alpha));
    else
      head *= detail::eta_local_value(cplx(alpha, 0.0), p, c).real();
  }
  for (const auto& pp : factorize(l))  // prime divisors of l beyond P
    if (pp.p > spec.P)
      head *=
          detail::eta_local_value(cplx(alpha, 0.0), pp.p, eta_case(pp.p, l))
              .real();

  const double Pd = static_cast<double>(spec.P);
  const double tail = -tanh_sinh(
      [Pd, alpha](double u) {
        if (u < 1e-280) return 0.0;
        const double t = Pd / u;
        return detail::eta_deficit(t, alpha) * (Pd / (u * u)) / std::log(t);
      },
      0.0, 1.0, 1e-14);

  double value = head * std::exp(logsum.value());
  double err_log = 0.02 * std::abs(tail) +
                   2e3 * detail::eta_deficit(Pd, alpha) / std::log(Pd);
  if (spec.tail_correct)
    value *= std::exp(tail);
  else
    err_log += std::abs(tail);
  return {value, std::abs(value) * err_log + 1e-14};
}

// Raw truncated product over p <= pt.limit() for complex alpha; no tail.
// The residue contour oracle uses this with the same cutoff as the series
// route, so truncation cancels in the comparison.
inline cplx eta_product_complex(cplx alpha, int64 l, const PrimeTable& pt) {
  require(alpha.real() > 0.5, "eta_product_complex: need Re(alpha) > 1/2");
  KahanSumC logsum;
  cplx headc(1.0, 0.0);
  for (int64 p : pt.primes()) {
    const EtaCase c = eta_case(p, l);
    const cplx v = detail::eta_local_value(alpha, p, c);
    if (c == EtaCase::coprime)
      logsum += std::log(v);
    else
      headc *= v;
  }
  return headc * std::exp(logsum.value());
}

// eta(1; a^2 r s) = c6 rs / (sigma(rs) h(ars)) for odd pairwise-coprime
// a, r, s with r, s squarefree. Fails for even arguments (the p=2 Euler
// factor never leaves the constant c6), hence the oddness requirement.
inline double eta_closed_form_1(int64 a, int64 r, int64 s, double c6) {
  require(a >= 1 && r >= 1 && s >= 1, "eta_closed_form_1: positive inputs");
  require(a % 2 == 1 && r % 2 == 1 && s % 2 == 1,
          "eta_closed_form_1: a, r, s must be odd");
  require(is_squarefree(r) && is_squarefree(s),
          "eta_closed_form_1: r, s must be squarefree");
  require(std::gcd(a, r) == 1 && std::gcd(a, s) == 1 && std::gcd(r, s) == 1,
          "eta_closed_form_1: a, r, s must be pairwise coprime");
  const double rs = static_cast<double>(r) * static_cast<double>(s);
  return c6 * rs / (static_cast<double>(sigma_divisors(r * s)) *
                    h_func(a * r * s));
}

inline double eta_closed_form_1(int64 a, int64 r, int64 s) {
  static const double c6 = const_c6(10000000).value;
  return eta_closed_form_1(a, r, s, c6);
}

// G_p(alpha; l) = eta_p(alpha; l)/eta_p(alpha; 1);
// returns G_p^{(i)}(1; l)/G_p(1; l) via Taylor division at alpha = 1.
inline double Gp_ratio(int i, int64 p, int64 l) {
  require(i >= 1 && i <= 3, "Gp_ratio: i must be in 1..3");
  const auto num = detail::eta_local_derivs(1.0, p, eta_case(p, l));
  const auto den = detail::eta_local_derivs(1.0, p, eta_case(p, 1));
  double n[4], q[4], g[4];
  double fact = 1.0;
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) fact *= k;
    n[k] = num.d[k] / fact;
    q[k] = den.d[k] / fact;
  }
  g[0] = n[0] / q[0];
  for (int k = 1; k <= 3; ++k) {
    double acc = n[k];
    for (int j = 0; j < k; ++j) acc -= g[j] * q[k - j];
    g[k] = acc / q[0];
  }
  double fi = 1.0;
  for (int k = 2; k <= i; ++k) fi *= k;
  return fi * g[i] / g[0];
}

// H_{1,1}(p): the 1 + O(1/p) profile multiplying c2(1) log(p)/p in the
// p | l1 asymptotics of G_p'(1;l)/G_p(1;l).
inline double h11_profile(int64 p) {
  return Gp_ratio(1, p, p) * static_cast<double>(p) /
         std::log(static_cast<double>(p));
}

// A_{a1,a2}(l) = sum_{m odd} (1/m) (sum_{n1 n2 = l1 m^2} n1^-a1 n2^-a2)
//               prod_{p | lm} p/(p+1), truncated at m <= trunc.
inline double A_func(double a1, double a2, int64 l, int64 trunc = 100000) {
  require(a1 + a2 > 0, "A_func: need a1 + a2 > 0");
  require(l >= 1 && trunc >= 1, "A_func: bad arguments");
  const EtaIndex idx = decompose_l(l);
  const Factorization fl = factorize(l);
  const Factorization fl1 = factorize(idx.l1);

  KahanSum total;
  for (int64 m = 1; m <= trunc; m += 2) {
    const Factorization fm = factorize(m);
    // exponents of l1 m^2, merged without forming the product
    double inner = 1.0;
    {
      size_t i = 0, j = 0;
      while (i < fl1.size() || j < fm.size()) {
        int64 p;
        int e = 0;
        if (i < fl1.size() && (j >= fm.size() || fl1[i].p <= fm[j].p))
          p = fl1[i].p;
        else
          p = fm[j].p;
        if (i < fl1.size() && fl1[i].p == p) e += fl1[i++].e;
        if (j < fm.size() && fm[j].p == p) e += 2 * fm[j++].e;
        const double lp = std::log(static_cast<double>(p));
        double s = 0.0;
        for (int k = 0; k <= e; ++k)
          s += std::exp(-(a1 * k + a2 * (e - k)) * lp);
        inner *= s;
      }
    }
    double csup = 1.0;  // prod over p | lm of p/(p+1)
    {
      size_t i = 0, j = 0;
      while (i < fl.size() || j < fm.size()) {
        int64 p;
        if (i < fl.size() && (j >= fm.size() || fl[i].p <= fm[j].p))
          p = fl[i].p;
        else
          p = fm[j].p;
        if (i < fl.size() && fl[i].p == p) ++i;
        if (j < fm.size() && fm[j].p == p) ++j;
        csup *= static_cast<double>(p) / (static_cast<double>(p) + 1.0);
      }
    }
    total += inner * csup / static_cast<double>(m);
  }
  return total.value();
}

}  // namespace zetalab
