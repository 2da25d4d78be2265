#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/constants.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/lfunc.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/weights.hpp"

namespace zetalab {

// R(8d) = sum_{l <= length} mu(l) f(l) chi_{8d}(l), walked as products of
// distinct support primes; branches with chi(p) = 0 die outright.
inline double resonator_value(int64 d, const ResonatorSpec& spec,
                              const PrimeTable& pt) {
  spec.validate();
  require(d >= 1, "resonator_value: d must be >= 1");
  const int64 len = spec.length();
  require(len >= 1, "resonator_value: spec needs a positive length");
  const auto S = support_primes(spec, pt);
  const int64 q = 8 * d;

  KahanSum total;
  // stack of (next index, current l, mu f weight, chi value)
  struct Node {
    std::size_t i;
    int64 l;
    double w;
    int chi;
  };
  std::vector<Node> stack{{0, 1, 1.0, 1}};
  while (!stack.empty()) {
    const Node n = stack.back();
    stack.pop_back();
    total.add(n.w * n.chi);
    for (std::size_t i = n.i; i < S.size(); ++i) {
      const int64 p = S[i];
      if (p > len / n.l) break;
      const int cp = kronecker(q, p);
      if (cp == 0) continue;
      stack.push_back({i + 1, n.l * p, -n.w * resonator_f(p, spec),
                       n.chi * cp});
    }
  }
  return total.value();
}

struct EmpiricalMoments {
  double m1 = 0.0;
  double m2 = 0.0;
  double r2sum = 0.0;  // sum of mu(2d)^2 R(8d)^2 over the family
  int64 count = 0;
};

// Center family X/16 <= d <= X/8 at s = 1/2; right family
// X/8 <= d <= 5X/16 at s = sigma. Ascending d, compensated sums.
inline EmpiricalMoments empirical_moments(const ResonatorSpec& spec,
                                          const PrimeTable& pt,
                                          double tol = 1e-8) {
  spec.validate();
  require(spec.X >= 1, "empirical_moments: spec.X must be set");
  const bool center = spec.regime == Regime::center;
  const int64 lo = center ? (spec.X + 15) / 16 : (spec.X + 7) / 8;
  const int64 hi = center ? spec.X / 8 : (5 * spec.X) / 16;
  const double s = center ? 0.5 : spec.sigma;

  KahanSum m1, m2, r2;
  EmpiricalMoments out;
  for (int64 d = std::max<int64>(1, lo); d <= hi; ++d) {
    if (!mu2d_squarefree(d)) continue;
    const double R = resonator_value(d, spec, pt);
    const double L = dirichlet_L(s, 8 * d, tol).value;
    m1.add(R * R * L);
    m2.add(R * R * L * L);
    r2.add(R * R);
    ++out.count;
  }
  out.m1 = m1.value();
  out.m2 = m2.value();
  out.r2sum = r2.value();
  return out;
}

struct PredictedMoments {
  double m1 = 0.0;
  double m2 = 0.0;
  bool m1_up_to_constant = true;
  bool m2_up_to_constant = true;
};

// Center: M1 ~ c X log X prod(1 + f^2 - 2f/sqrt p) with c unnamed, and
// M2 ~ c5 X log^3 X prod(1 + f^2 - 4f/sqrt p) with its absolute constant.
// Right: X prod(1 + f^2 - k f p^{-sigma}), both up to a constant.
inline PredictedMoments predicted_moments(const ResonatorSpec& spec,
                                          const PrimeTable& pt) {
  spec.validate();
  require(spec.X >= 2, "predicted_moments: spec.X must be set");
  const double X = static_cast<double>(spec.X);
  PredictedMoments out;
  if (spec.regime == Regime::center) {
    const double lx = std::log(X);
    static const double c5 = const_c5().value;
    out.m1 = X * lx *
             predicted_product(ProductKind::m1_center, spec, pt).value;
    out.m2 = c5 * X * lx * lx * lx *
             predicted_product(ProductKind::m2_center, spec, pt).value;
    out.m1_up_to_constant = true;
    out.m2_up_to_constant = false;
  } else {
    out.m1 = X * predicted_product(ProductKind::m1_right, spec, pt).value;
    out.m2 = X * predicted_product(ProductKind::m2_right, spec, pt).value;
    out.m1_up_to_constant = true;
    out.m2_up_to_constant = true;
  }
  return out;
}

struct MomentReport {
  EmpiricalMoments empirical;
  PredictedMoments predicted;
};

inline MomentReport moment_report(const ResonatorSpec& spec,
                                  const PrimeTable& pt, double tol = 1e-8) {
  return {empirical_moments(spec, pt, tol), predicted_moments(spec, pt)};
}

struct TituGate {
  double lhs = 0.0;
  double rhs = 0.0;
};

// sum a_i^2 / b_i >= (sum a_i)^2 / sum b_i for positive b.
inline TituGate titu_gate(const std::vector<double>& a,
                          const std::vector<double>& b) {
  require(a.size() == b.size() && !a.empty(), "titu_gate: size mismatch");
  KahanSum lhs, sa, sb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    require(b[i] > 0.0, "titu_gate: b must be positive");
    lhs.add(a[i] * a[i] / b[i]);
    sa.add(a[i]);
    sb.add(b[i]);
  }
  return {lhs.value(), sa.value() * sa.value() / sb.value()};
}

// Smallness target for the minimum of |L(1/2)| over the family: at the
// central point exp(-(1/sqrt 5) sqrt(log X / loglog X)), and for
// sigma in (1/2, 1) the density shape exp(-4 sigma (log X)^{(1-sigma)/
// (2 sigma)} / loglog X).
inline double bogomolov_bound(double X, double sigma = 0.5) {
  require(X > 16.0, "bogomolov_bound: X too small");
  require(sigma >= 0.5 && sigma < 1.0, "bogomolov_bound: bad sigma");
  const double lx = std::log(X);
  const double llx = std::log(lx);
  require(llx > 0.0, "bogomolov_bound: X too small");
  if (sigma == 0.5)
    return std::exp(-std::sqrt(lx / llx) / std::sqrt(5.0));
  return std::exp(-4.0 * sigma * std::pow(lx, (1.0 - sigma) / (2.0 * sigma)) /
                  llx);
}

struct ScanEntry {
  int64 d = 0;
  double abs_L = 0.0;
  bool sign_certain = false;
};

struct ScanResult {
  std::vector<ScanEntry> entries;  // ascending d over the 8d family
  int64 argmin_d = 0;
  double min_abs = std::numeric_limits<double>::infinity();
  std::vector<int64> indeterminate;
};

// |L(1/2, chi_{8d})| across the 8d family of X. A value counts as
// sign-certain when it clears ten times its reported error; the rest are
// listed separately and never compete for the minimum.  Work is split into
// fixed 64-discriminant chunks merged in order, so any worker count produces
// identical output.
inline ScanResult scan_min_L(int64 X, double tol = 1e-9, int threads = 1) {
  const std::vector<int64> family = enumerate_8d_family(X);
  const auto chunks = parallel_map_chunks<std::vector<ScanEntry>>(
      static_cast<int64>(family.size()), 64, threads,
      [&](int64, int64 b, int64 e) {
        std::vector<ScanEntry> part;
        part.reserve(static_cast<size_t>(e - b));
        for (int64 i = b; i < e; ++i) {
          const auto r = dirichlet_L(0.5, 8 * family[static_cast<size_t>(i)], tol);
          ScanEntry entry;
          entry.d = family[static_cast<size_t>(i)];
          entry.abs_L = std::abs(r.value);
          entry.sign_certain = entry.abs_L > 10.0 * r.error_estimate;
          part.push_back(entry);
        }
        return part;
      });
  ScanResult out;
  for (const auto& part : chunks) {
    for (const ScanEntry& e : part) {
      if (e.sign_certain) {
        if (e.abs_L < out.min_abs) {
          out.min_abs = e.abs_L;
          out.argmin_d = e.d;
        }
      } else {
        out.indeterminate.push_back(e.d);
      }
      out.entries.push_back(e);
    }
  }
  return out;
}

}  // namespace zetalab
