#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/euler_products.hpp"

namespace zetalab {

enum class Regime { center, right };

// Parameters of the resonator weight f. Zeros mean "use the default":
// L defaults to sqrt(log N loglog N) at the center and sqrt(log X) on the
// right; support_hi defaults to exp(log^2 L) at the center and to no cap
// on the right. The right regime needs sigma in (1/2, 1).
struct ResonatorSpec {
  Regime regime = Regime::center;
  double sigma = 0.5;
  int64 N = 0;  // resonator length at the center
  int64 X = 0;  // family scale; doubles as the length on the right
  double L = 0.0;
  double support_hi = 0.0;

  double resolved_L() const {
    if (L > 0.0) return L;
    if (regime == Regime::center) {
      if (N < 3) return 0.0;
      const double ln = std::log(static_cast<double>(N));
      if (ln <= 1.0) return 0.0;
      return std::sqrt(ln * std::log(ln));
    }
    if (X < 2) return 0.0;
    const double lx = std::log(static_cast<double>(X));
    return lx > 0.0 ? std::sqrt(lx) : 0.0;
  }

  double resolved_hi() const {
    if (support_hi > 0.0) return support_hi;
    if (regime == Regime::center) {
      const double lv = resolved_L();
      if (lv <= 0.0) return 0.0;
      const double ll = std::log(lv);
      return std::exp(ll * ll);
    }
    return std::numeric_limits<double>::infinity();
  }

  int64 length() const { return regime == Regime::center ? N : X; }

  void validate() const {
    if (regime == Regime::center) {
      require(sigma == 0.5, "ResonatorSpec: center regime needs sigma = 1/2");
    } else {
      require(sigma > 0.5 && sigma < 1.0,
              "ResonatorSpec: right regime needs sigma in (1/2, 1)");
    }
  }
};

// Weight at a prime. Center: L / (sqrt(p) log p) on L^2 <= p <= hi.
// Right: L p^{-sigma} on p >= L^{1/sigma}.
inline double resonator_f(int64 p, const ResonatorSpec& spec) {
  spec.validate();
  const double lv = spec.resolved_L();
  if (lv <= 0.0) return 0.0;
  const double dp = static_cast<double>(p);
  const double hi = spec.resolved_hi();
  if (spec.regime == Regime::center) {
    if (dp < lv * lv || dp > hi) return 0.0;
    return lv / (std::sqrt(dp) * std::log(dp));
  }
  if (dp < std::pow(lv, 1.0 / spec.sigma) || dp > hi) return 0.0;
  return lv * std::pow(dp, -spec.sigma);
}

// f extended completely multiplicatively; vanishes off the prime support.
inline double resonator_f_value(int64 n, const ResonatorSpec& spec) {
  require(n >= 1, "resonator_f_value: n must be >= 1");
  double v = 1.0;
  for (const auto& pp : factorize(n)) {
    const double fp = resonator_f(pp.p, spec);
    if (fp == 0.0) return 0.0;
    v *= std::pow(fp, pp.e);
  }
  return v;
}

// Primes in [lo, hi] carrying nonzero weight, in increasing order.
inline std::vector<int64> support_primes(const ResonatorSpec& spec,
                                         const PrimeTable& pt) {
  std::vector<int64> out;
  for (int64 p : pt.primes())
    if (resonator_f(p, spec) > 0.0) out.push_back(p);
  return out;
}

struct FGH {
  double F = 1.0;
  double G = 0.0;
  double H = 0.0;
};

// Local values at p^k. Only H sees the exponent, through log^k p; when
// f(p) = 0 the triple degenerates to (1, 0, 0).
inline FGH fgh_values(int64 p, int k, const ResonatorSpec& spec) {
  require(k >= 1, "fgh_values: k must be >= 1");
  const double fp = resonator_f(p, spec);
  if (fp == 0.0) return {};
  const double dp = static_cast<double>(p);
  const double hp = h_local(p);
  const double lp = std::log(dp);
  FGH out;
  out.F = 1.0 + fp * fp / hp - 4.0 * fp * std::sqrt(dp) / (hp * (dp + 1.0));
  out.G = (lp / (dp * dp)) * fp * fp / (hp * out.F);
  out.H = -4.0 * std::pow(lp, k) * fp * std::sqrt(dp) /
          (hp * (dp + 1.0) * out.F);
  return out;
}

// H at a product of primes given as a tuple with repetitions; exponents
// are merged first, then the local factors multiplied.
inline double H_of_tuple(std::vector<int64> primes,
                         const ResonatorSpec& spec) {
  if (primes.empty()) return 1.0;
  std::sort(primes.begin(), primes.end());
  double out = 1.0;
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    out *= fgh_values(primes[i], static_cast<int>(j - i), spec).H;
    i = j;
  }
  return out;
}

// M(n) = (1/omega(n)) (sum_{p|n} H_{1,1}(p)/p) H(n) on squarefree n > 1;
// the empty sum at n = 1 is taken as 0.
inline double M_func(int64 n, const ResonatorSpec& spec) {
  require(n >= 1, "M_func: n must be >= 1");
  if (n == 1) return 0.0;
  require(is_squarefree(n), "M_func: n must be squarefree");
  const auto fac = factorize(n);
  double inner = 0.0;
  double hn = 1.0;
  for (const auto& pp : fac) {
    inner += h11_profile(pp.p) / static_cast<double>(pp.p);
    hn *= fgh_values(pp.p, 1, spec).H;
  }
  return inner * hn / static_cast<double>(fac.size());
}

}  // namespace zetalab
