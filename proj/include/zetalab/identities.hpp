#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/weights.hpp"

namespace zetalab {

struct IdentityPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

// Triple-sum identity behind the extended diagonal terms: over pairwise
// coprime squarefree (a, r, s) supported on the given primes,
//
//   sum mu(a)^2 f(a)^2/h(a) * prod_{p|rs} (-2 f(p) sqrt(p) / (sigma(p) h(p)))
//       * log^t(rs)
//   = ( sum over t-tuples of support primes of H(l_1 ... l_t) )
//       * prod_{p in support} F(p).
//
// The left side is enumerated as 4^|support| role assignments, the right
// side as |support|^t tuples with exponents merged inside H.
inline IdentityPair multiplicative_identity_check(
    const std::vector<int64>& support, int t, const ResonatorSpec& spec) {
  require(t >= 0 && t <= 3, "multiplicative_identity_check: t must be 0..3");
  require(support.size() <= 12,
          "multiplicative_identity_check: support too large");
  const int ns = static_cast<int>(support.size());

  std::vector<double> wa(ns), wr(ns), lp(ns);
  for (int i = 0; i < ns; ++i) {
    const int64 p = support[i];
    const double fp = resonator_f(p, spec);
    const double dp = static_cast<double>(p);
    const double hp = h_local(p);
    wa[i] = fp * fp / hp;
    wr[i] = -2.0 * fp * std::sqrt(dp) / ((dp + 1.0) * hp);
    lp[i] = std::log(dp);
  }

  KahanSum lhs;
  std::vector<int> role(ns, 0);
  for (;;) {
    double term = 1.0, lrs = 0.0;
    for (int i = 0; i < ns; ++i) {
      switch (role[i]) {
        case 0: break;
        case 1: term *= wa[i]; break;
        default:
          term *= wr[i];
          lrs += lp[i];
      }
    }
    lhs.add(term * std::pow(lrs, t));
    int i = 0;
    while (i < ns && role[i] == 3) role[i++] = 0;
    if (i == ns) break;
    ++role[i];
  }

  double pf = 1.0;
  for (int i = 0; i < ns; ++i) pf *= fgh_values(support[i], 1, spec).F;

  KahanSum tuples;
  if (t == 0) {
    tuples.add(1.0);
  } else if (ns > 0) {
    std::vector<int> idx(t, 0);
    std::vector<int64> primes(t);
    for (;;) {
      for (int j = 0; j < t; ++j) primes[j] = support[idx[j]];
      tuples.add(H_of_tuple(primes, spec));
      int j = 0;
      while (j < t && idx[j] == ns - 1) idx[j++] = 0;
      if (j == t) break;
      ++idx[j];
    }
  }
  return {lhs.value(), tuples.value() * pf};
}

// sum over t-tuples of prod_i |H(l_i)| factors exactly into a t-th power;
// the exponents are deliberately not merged here, so both sides agree to
// rounding. The merged form |H(l_1 ... l_t)| does not obey this bound
// prime by prime, which is why the tuple sum is kept as the primitive.
inline IdentityPair h_tuple_abs_sum(const std::vector<int64>& support, int t,
                                    const ResonatorSpec& spec) {
  require(t >= 0 && t <= 4, "h_tuple_abs_sum: t must be 0..4");
  const int ns = static_cast<int>(support.size());
  double single = 0.0;
  for (int i = 0; i < ns; ++i)
    single += std::abs(fgh_values(support[i], 1, spec).H);

  double direct = 0.0;
  if (t == 0) {
    direct = 1.0;
  } else if (ns > 0) {
    std::vector<int> idx(t, 0);
    for (;;) {
      double term = 1.0;
      for (int j = 0; j < t; ++j)
        term *= std::abs(fgh_values(support[idx[j]], 1, spec).H);
      direct += term;
      int j = 0;
      while (j < t && idx[j] == ns - 1) idx[j++] = 0;
      if (j == t) break;
      ++idx[j];
    }
  }
  return {direct, std::pow(single, t)};
}

enum class ProductKind { m1_center, m2_center, m1_right, m2_right, D_general };

namespace detail {

inline double product_kind_k(ProductKind kind, double D) {
  switch (kind) {
    case ProductKind::m1_center:
    case ProductKind::m1_right:
      return 2.0;
    case ProductKind::m2_center:
    case ProductKind::m2_right:
      return 4.0;
    default:
      return 2.0 * D;
  }
}

}  // namespace detail

// prod over the weight support of (1 + f(p)^2 - k f(p) p^{-sigma}) with
// k = 2, 4 or 2D. Primes beyond the sieve are folded in through the
// prime-density integral of the per-prime log, which also covers a right
// regime support with no upper cap.
inline ValueWithError predicted_product(ProductKind kind,
                                        const ResonatorSpec& spec,
                                        const PrimeTable& pt, double D = 1.0,
                                        bool tail_correct = true) {
  spec.validate();
  const double k = detail::product_kind_k(kind, D);
  const double sg = spec.sigma;
  KahanSum logsum;
  for (int64 p : pt.primes()) {
    const double fp = resonator_f(p, spec);
    if (fp == 0.0) continue;
    const double factor =
        1.0 + fp * fp - k * fp * std::pow(static_cast<double>(p), -sg);
    require(factor > 0.0, "predicted_product: nonpositive local factor");
    logsum.add(std::log(factor));
  }

  const double lv = spec.resolved_L();
  const double hi = spec.resolved_hi();
  const double cut = static_cast<double>(pt.limit());
  double tail = 0.0;
  if (lv > 0.0 && hi > cut) {
    // g(e^v) e^v / v with g(t) = f(t)^2 - k f(t) t^{-sigma}.
    const double v0 = std::log(cut);
    if (spec.regime == Regime::center) {
      const double v1 = std::log(hi);
      if (v1 > v0)
        tail = integrate(
            [&](double v) { return lv * lv / (v * v * v) - k * lv / (v * v); },
            v0, v1, 1e-14);
    } else {
      const double rate = 2.0 * sg - 1.0;
      const double lo = std::pow(lv, 1.0 / sg);
      const double va = std::max(v0, std::log(lo));
      const double amp = lv * lv - k * lv;
      auto g = [&](double v) { return amp * std::exp(-rate * v) / v; };
      if (std::isinf(hi))
        tail = integrate_to_inf(g, va, 1e-15);
      else if (std::log(hi) > va)
        tail = integrate(g, va, std::log(hi), 1e-15);
    }
  }

  double logv = logsum.value();
  double err_log = 1e-14;
  if (tail_correct)
    err_log += 0.05 * std::abs(tail);
  else
    err_log += std::abs(tail);
  if (tail_correct) logv += tail;
  const double value = std::exp(logv);
  return {value, std::abs(value) * err_log};
}

struct RankinTail {
  double empirical = 0.0;
  double bound = 0.0;
};

namespace detail {

struct SupportedValue {
  int64 n;
  std::uint64_t mask;
  double wa, wr;
};

inline void gen_supported(const std::vector<int64>& primes,
                          const std::vector<double>& wa,
                          const std::vector<double>& wr, std::size_t i,
                          int64 n, std::uint64_t mask, double pa, double pr,
                          int64 cap, std::vector<SupportedValue>& out) {
  if (i == primes.size()) {
    out.push_back({n, mask, pa, pr});
    return;
  }
  gen_supported(primes, wa, wr, i + 1, n, mask, pa, pr, cap, out);
  if (primes[i] <= cap / n)
    gen_supported(primes, wa, wr, i + 1, n * primes[i],
                  mask | (std::uint64_t{1} << i), pa * wa[i], pr * wr[i], cap,
                  out);
}

}  // namespace detail

// Tail of the pairwise coprime squarefree triple sum beyond ar > N or
// as > N, against its Rankin majorant. Center weights are f^2/h and
// 2 f sqrt(p) / (sigma(p) h(p)); the majorant is
// N^{-alpha} prod (1 + f^2 p^alpha + 4 f p^{alpha - 1/2}). On the right the
// weights are f^2 and D f p^{-sigma} and the majorant keeps the factored
// s-sum: 2 N^{-alpha} prod (1 + D f p^{-sigma})
// prod (1 + f^2 p^alpha + D f p^{alpha - sigma}), valid for
// alpha < 2 sigma - 1. The support is capped by the sieve handed in.
inline RankinTail rankin_tail(const ResonatorSpec& spec, int64 N, double alpha,
                              const PrimeTable& pt, double D = 1.0) {
  spec.validate();
  require(N >= 1, "rankin_tail: N must be >= 1");
  require(alpha > 0.0, "rankin_tail: alpha must be positive");
  const bool center = spec.regime == Regime::center;
  if (!center)
    require(alpha < 2.0 * spec.sigma - 1.0,
            "rankin_tail: alpha must be below 2 sigma - 1");

  const auto primes = support_primes(spec, pt);
  require(primes.size() <= 62, "rankin_tail: support too large to enumerate");
  const int ns = static_cast<int>(primes.size());

  std::vector<double> wa(ns), wr(ns);
  RankinTail out;
  double bound_log = -alpha * std::log(static_cast<double>(N));
  double bound_extra = center ? 0.0 : std::log(2.0);
  for (int i = 0; i < ns; ++i) {
    const int64 p = primes[i];
    const double dp = static_cast<double>(p);
    const double fp = resonator_f(p, spec);
    const double pa = std::pow(dp, alpha);
    if (center) {
      const double hp = h_local(p);
      wa[i] = fp * fp / hp;
      wr[i] = 2.0 * fp * std::sqrt(dp) / ((dp + 1.0) * hp);
      bound_log += std::log(1.0 + fp * fp * pa + 4.0 * fp * pa / std::sqrt(dp));
    } else {
      const double ps = std::pow(dp, -spec.sigma);
      wa[i] = fp * fp;
      wr[i] = D * fp * ps;
      bound_extra += std::log(1.0 + wr[i]);
      bound_log += std::log(1.0 + wa[i] * pa + wr[i] * pa);
    }
  }
  out.bound = std::exp(bound_log + bound_extra);

  double ptot = 1.0;
  for (int64 p : primes) ptot = std::min(ptot * p, 1e300);
  if (static_cast<double>(N) >= ptot) return out;  // no triple crosses N

  double total = 1.0;
  for (int i = 0; i < ns; ++i) total *= 1.0 + wa[i] + 2.0 * wr[i];

  std::vector<detail::SupportedValue> vals;
  detail::gen_supported(primes, wa, wr, 0, 1, 0, 1.0, 1.0, N, vals);
  std::sort(vals.begin(), vals.end(),
            [](const auto& x, const auto& y) { return x.n < y.n; });

  KahanSum kept;
  for (const auto& a : vals) {
    const int64 cap = N / a.n;
    for (const auto& r : vals) {
      if (r.n > cap) break;
      if (r.mask & a.mask) continue;
      const double war = a.wa * r.wr;
      for (const auto& s : vals) {
        if (s.n > cap) break;
        if (s.mask & (a.mask | r.mask)) continue;
        kept.add(war * s.wr);
      }
    }
  }
  out.empirical = std::max(total - kept.value(), 0.0);
  return out;
}

}  // namespace zetalab
