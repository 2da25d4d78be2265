#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/lfunc.hpp"
#include "zetalab/poly_mod.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace detail {

inline constexpr int64 small_primes_25[25] = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

inline bool is_prime_i64(int64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int64 i = 3; i * i <= n; i += 2)
    if (n % i == 0) return false;
  return true;
}

}  // namespace detail

// ------------------------------------------------------------- field specs

// Monic integer polynomial of degree `degree` that is irreducible modulo each
// prime in inert_primes, so each of those primes stays inert in the root
// field.  Coefficients are ascending and reduced into [0, prod inert_primes).
struct InertFieldSpec {
  int degree = 0;
  int n = 0;
  std::vector<bigint> coefficients;
  std::vector<int64> inert_primes;
};

// Compositum Q(sqrt q_1, ..., sqrt q_k) with all q_j = 1 mod 4, so each
// quadratic character is the Kronecker symbol (q_j / .) and 2 is unramified.
struct MultiquadraticSpec {
  int k = 0;
  int n = 0;
  std::vector<int64> q_list;
};

// How a rational prime decomposes.  For Galois fields e * f * g equals the
// field degree.  The polynomial route reports factor_degrees instead when the
// factor degrees are mixed (then f = 0), and only raises ramified when
// p divides disc(psi); e, f, g are left at 0 in that case.
struct SplittingProfile {
  int64 p = 0;
  int e = 0;
  int f = 0;
  int g = 0;
  bool ramified = false;
  std::vector<int> factor_degrees;
};

// ------------------------------------------------- inert field construction

inline InertFieldSpec build_inert_from_residues(int d,
                                                const std::vector<int64>& primes,
                                                const std::vector<Poly>& betas) {
  require(d >= 1, "build_inert_from_residues: degree must be >= 1");
  require(!primes.empty() && primes.size() == betas.size(),
          "build_inert_from_residues: need one residue polynomial per prime");
  for (size_t j = 0; j < primes.size(); ++j) {
    require(poly_deg(betas[j]) == d && betas[j].back() == 1,
            "build_inert_from_residues: residues must be monic of degree d");
    require(poly_irreducible(betas[j], primes[j]),
            "build_inert_from_residues: residues must be irreducible");
  }
  InertFieldSpec spec;
  spec.degree = d;
  spec.n = static_cast<int>(primes.size());
  spec.inert_primes = primes;
  spec.coefficients.resize(static_cast<size_t>(d) + 1);
  std::vector<bigint> moduli(primes.begin(), primes.end());
  std::vector<bigint> residues(primes.size());
  for (int i = 0; i <= d; ++i) {
    for (size_t j = 0; j < primes.size(); ++j)
      residues[j] = (i < static_cast<int>(betas[j].size())) ? betas[j][i] : 0;
    spec.coefficients[i] = crt(residues, moduli);
  }
  // CRT of all-ones leading coefficients is 1, so the lift stays monic.
  require(spec.coefficients[d] == 1, "build_inert_from_residues: lost monicity");
  return spec;
}

inline InertFieldSpec build_inert_polynomial(int d, int n, std::uint64_t seed) {
  require(d >= 1 && d <= 30, "build_inert_polynomial: degree must be in 1..30");
  require(n >= 1 && n <= 25, "build_inert_polynomial: n must be in 1..25");
  std::vector<int64> primes(detail::small_primes_25, detail::small_primes_25 + n);
  std::vector<Poly> betas;
  betas.reserve(primes.size());
  for (int j = 0; j < n; ++j)
    betas.push_back(
        irreducible_poly_mod_p(d, primes[j], splitmix64(seed ^ (j + 1u))));
  return build_inert_from_residues(d, primes, betas);
}

inline SplittingProfile splitting_from_polynomial(const InertFieldSpec& spec,
                                                  int64 p) {
  require(p >= 2 && detail::is_prime_i64(p),
          "splitting_from_polynomial: p must be prime");
  SplittingProfile prof;
  prof.p = p;
  Poly psi(spec.coefficients.size());
  for (size_t i = 0; i < psi.size(); ++i) {
    bigint r = spec.coefficients[i] % p;
    if (r < 0) r += p;
    psi[i] = static_cast<int64>(r);
  }
  poly_trim(psi);
  require(poly_deg(psi) == spec.degree,
          "splitting_from_polynomial: reduction dropped the degree");
  // p | disc(psi) iff psi mod p has a repeated factor.
  if (!poly_is_one(poly_gcd(psi, poly_derivative(psi, p), p))) {
    prof.ramified = true;
    return prof;
  }
  const auto dd = ddf_factor_degrees(psi, p);
  prof.e = 1;
  int total = 0;
  for (const auto& [deg, cnt] : dd) {
    for (int c = 0; c < cnt; ++c) prof.factor_degrees.push_back(deg);
    total += deg * cnt;
  }
  require(total == spec.degree, "splitting_from_polynomial: degree mismatch");
  std::sort(prof.factor_degrees.begin(), prof.factor_degrees.end());
  prof.g = static_cast<int>(prof.factor_degrees.size());
  const bool uniform = prof.factor_degrees.front() == prof.factor_degrees.back();
  prof.f = uniform ? prof.factor_degrees.front() : 0;
  return prof;
}

// --------------------------------------------- multiquadratic construction

// Smallest k primes q = 1 mod 4 p_1 ... p_n.  The congruence forces
// (q / p_j) = (p_j / q) = 1, so the first n primes split in every Q(sqrt q_j).
inline MultiquadraticSpec find_split_primes(int k, int n) {
  require(k >= 1 && k <= 6, "find_split_primes: k must be in 1..6");
  require(n >= 0 && n <= 8, "find_split_primes: n must be in 0..8");
  int64 m = 4;
  for (int j = 0; j < n; ++j) m *= detail::small_primes_25[j];
  MultiquadraticSpec spec;
  spec.k = k;
  spec.n = n;
  for (int64 t = 1; static_cast<int>(spec.q_list.size()) < k; ++t) {
    require(t <= 200000, "find_split_primes: search budget exhausted");
    const int64 q = m * t + 1;
    if (detail::is_prime_i64(q)) spec.q_list.push_back(q);
  }
  return spec;
}

inline SplittingProfile multiquadratic_splitting(const MultiquadraticSpec& spec,
                                                 int64 p) {
  require(spec.k >= 1 && static_cast<int>(spec.q_list.size()) == spec.k,
          "multiquadratic_splitting: malformed spec");
  require(p >= 2 && detail::is_prime_i64(p),
          "multiquadratic_splitting: p must be prime");
  SplittingProfile prof;
  prof.p = p;
  prof.e = 1;
  // p can ramify only in the components it divides; q = 1 mod 4 keeps 2 out.
  int f = 1;
  for (const int64 q : spec.q_list) {
    if (q == p) {
      prof.e = 2;
      continue;
    }
    const int chi = kronecker(q, p);
    require(chi != 0, "multiquadratic_splitting: unexpected zero character");
    if (chi == -1) f = 2;
  }
  prof.ramified = prof.e == 2;
  prof.f = f;
  prof.g = (1 << spec.k) / (prof.e * prof.f);
  prof.factor_degrees.assign(static_cast<size_t>(prof.g), prof.f);
  return prof;
}

// ------------------------------------------------------ zeta along sigma > 1

struct FieldZetaResult {
  double value = 0.0;          // midpoint of the certified bracket
  double log_halfwidth = 0.0;  // half-width of the bracket for log zeta_F
  double reference = 0.0;      // zeta(d sigma), or zeta(sigma)^(2^k)
  double log_ratio = 0.0;      // log(value / reference)
  double ratio_bound = 0.0;    // guaranteed by the n forced primes
  int64 ramified_count = 0;
};

namespace detail {

// sum_{p > P} D / (p^sigma - 1) over-counted by integers.
inline double euler_tail_log(double D, double sigma, double P) {
  return D * std::pow(P, 1.0 - sigma) /
         ((sigma - 1.0) * (1.0 - std::pow(P, -sigma)));
}

inline double forced_prime_bound(double D_plus_1, double sigma, int n) {
  if (n <= 1) return std::numeric_limits<double>::infinity();
  return D_plus_1 / ((sigma - 1.0) * std::pow(double(n), sigma - 1.0) *
                     std::log(double(n)));
}

}  // namespace detail

inline FieldZetaResult zeta_field_sigma(const InertFieldSpec& spec,
                                        double sigma, int64 P = 100000) {
  require(sigma > 1.0, "zeta_field_sigma: need sigma > 1");
  require(P >= 100, "zeta_field_sigma: sieve limit too small");
  const int d = spec.degree;
  const PrimeTable pt(P);
  double lo = 0.0, hi = 0.0;
  FieldZetaResult out;
  for (const int64 p : pt.primes()) {
    const auto prof = splitting_from_polynomial(spec, p);
    if (prof.ramified) {
      // True local factor sits in [1, (1 - p^-sigma)^-d]; fold the spread
      // into the bracket.  Index primes land here too, which stays honest.
      hi += -double(d) * std::log1p(-std::pow(double(p), -sigma));
      ++out.ramified_count;
      continue;
    }
    double local = 0.0;
    for (const int deg : prof.factor_degrees)
      local += -std::log1p(-std::pow(double(p), -sigma * deg));
    lo += local;
    hi += local;
  }
  hi += detail::euler_tail_log(double(d), sigma, double(P));
  const double mid = 0.5 * (lo + hi);
  out.value = std::exp(mid);
  out.log_halfwidth = 0.5 * (hi - lo) + 1e-13;
  out.reference = riemann_zeta_real(double(d) * sigma);
  out.log_ratio = mid - std::log(out.reference);
  out.ratio_bound = detail::forced_prime_bound(double(d) + 1.0, sigma, spec.n);
  return out;
}

inline FieldZetaResult zeta_field_sigma(const MultiquadraticSpec& spec,
                                        double sigma, int64 P = 100000) {
  require(sigma > 1.0, "zeta_field_sigma: need sigma > 1");
  require(P >= 100, "zeta_field_sigma: sieve limit too small");
  const double deg = std::pow(2.0, spec.k);
  const PrimeTable pt(P);
  double base = 0.0;
  FieldZetaResult out;
  for (const int64 p : pt.primes()) {
    const auto prof = multiquadratic_splitting(spec, p);
    base += -double(prof.g) *
            std::log1p(-std::pow(double(p), -sigma * prof.f));
    if (prof.ramified) ++out.ramified_count;
  }
  const double tail = detail::euler_tail_log(deg, sigma, double(P));
  const double mid = base + 0.5 * tail;
  out.value = std::exp(mid);
  out.log_halfwidth = 0.5 * tail + 1e-13;
  out.reference = std::pow(riemann_zeta_real(sigma), deg);
  out.log_ratio = mid - std::log(out.reference);
  out.ratio_bound = detail::forced_prime_bound(deg + 1.0, sigma, spec.n);
  return out;
}

// ----------------------------------------------------- negative sigma line

struct NegLineReport {
  cplx s{};
  int64 d = 0;
  cplx zeta_value{};       // leading Taylor coefficient when zero_order > 0
  double northcott_lower = 0.0;
  int zero_order = 0;
  bool near_trivial_zero = false;
};

// (Gamma_m(s) / zeta(1 - sigma))^2 |Delta|^(1/2 - sigma), the unconditional
// floor for |zeta_K(s)| of a quadratic field at Re s < 0.
inline double northcott_lower_bound(cplx s, int64 abs_disc) {
  const double sigma = s.real();
  require(sigma < 0.0, "northcott_lower_bound: need Re s < 0");
  require(abs_disc >= 3, "northcott_lower_bound: |disc| of a quadratic field is >= 3");
  const double gm = gamma_m(s);
  if (gm == 0.0) return 0.0;
  const double z = riemann_zeta_real(1.0 - sigma);
  const double r = gm / z;
  return r * r * std::pow(double(abs_disc), 0.5 - sigma);
}

namespace detail {

inline cplx zeta_fe_side(cplx s) {
  return gamma_R(1.0 - s) / gamma_R(s) * riemann_zeta(1.0 - s);
}

inline cplx dedekind_l_fe_side(cplx s, int64 d, double tol) {
  return fe_factor_L(s, d) * dirichlet_L_complex(1.0 - s, d, tol).value;
}

// Order of the trivial zero of zeta resp. L(., chi_d) at s = -m.
inline int zeta_trivial_order(int m) { return (m % 2 == 0) ? 1 : 0; }
inline int chi_trivial_order(int m, int64 d) {
  return ((d > 0) == (m % 2 == 0)) ? 1 : 0;
}

}  // namespace detail

// zeta_K(s) = zeta(s) L(s, chi_d) on Re s < 0 through the functional
// equation.  At a negative integer the report carries the total order of the
// trivial zero and zeta_value holds the leading Taylor coefficient, i.e. the
// product of each factor's value or first derivative there.  Derivatives use
// a complex step, values the exact Bernoulli route when within reach.
inline NegLineReport zeta_neg_line(cplx s, int64 d, double tol = 1e-11) {
  require(is_fundamental_discriminant(d) && d != 1,
          "zeta_neg_line: d must be a fundamental discriminant != 1");
  require(s.real() < 0.0, "zeta_neg_line: need Re s < 0");
  NegLineReport rep;
  rep.s = s;
  rep.d = d;
  rep.northcott_lower = northcott_lower_bound(s, d < 0 ? -d : d);

  const int m = static_cast<int>(std::lround(-s.real()));
  const bool on_integer = m >= 1 && std::abs(s - cplx(-double(m), 0.0)) < 1e-9;

  if (on_integer) {
    const int zo = detail::zeta_trivial_order(m);
    const int co = detail::chi_trivial_order(m, d);
    const double h = 1e-5;
    const cplx sh(-double(m), h);
    double zstar, lstar;
    if (zo == 1)
      zstar = detail::zeta_fe_side(sh).imag() / h;
    else
      zstar = (m + 1 <= 16)
                  ? static_cast<double>(zeta_special_value_rat(m + 1))
                  : detail::zeta_fe_side(sh).real();
    if (co == 1)
      lstar = detail::dedekind_l_fe_side(sh, d, tol).imag() / h;
    else
      lstar = (m + 1 <= 16) ? L_special_value(m + 1, d)
                            : detail::dedekind_l_fe_side(sh, d, tol).real();
    rep.zeta_value = cplx(zstar * lstar, 0.0);
    rep.zero_order = zo + co;
    rep.near_trivial_zero = rep.zero_order > 0;
    return rep;
  }

  rep.zeta_value = fe_factor_dedekind(s, d) * riemann_zeta(1.0 - s) *
                   dirichlet_L_complex(1.0 - s, d, tol).value;
  if (m >= 1 && std::abs(s - cplx(-double(m), 0.0)) < 0.05)
    rep.near_trivial_zero =
        detail::zeta_trivial_order(m) + detail::chi_trivial_order(m, d) > 0;
  return rep;
}

// ------------------------------------------------------ Northcott sweep

struct NorthcottScan {
  double cutoff = 0.0;  // |Delta| beyond this cannot reach |zeta_K(s)| <= B
  int64 checked = 0;
  std::vector<std::pair<int64, double>> matches;  // (d, |zeta_K(s)|)
};

inline NorthcottScan northcott_enumerate(cplx s, double B,
                                         int degree_bound = 2) {
  require(degree_bound == 2,
          "northcott_enumerate: only quadratic fields are enumerated");
  require(B > 0.0, "northcott_enumerate: bound must be positive");
  require(s.real() < 0.0, "northcott_enumerate: need Re s < 0");
  const double gm = gamma_m(s);
  require(gm > 0.0, "northcott_enumerate: s sits on a trivial zero line");
  const double z = riemann_zeta_real(1.0 - s.real());
  NorthcottScan out;
  out.cutoff = std::pow(B * z * z / (gm * gm), 1.0 / (0.5 - s.real()));
  require(out.cutoff < 1e6, "northcott_enumerate: cutoff too large to sweep");
  const int64 dmax = static_cast<int64>(std::floor(out.cutoff));
  for (int64 a = 3; a <= dmax; ++a) {
    for (const int64 d : {a, -a}) {
      if (!is_fundamental_discriminant(d)) continue;
      ++out.checked;
      const auto rep = zeta_neg_line(s, d);
      const double av = std::abs(rep.zeta_value);
      if (av <= B) out.matches.emplace_back(d, av);
    }
  }
  return out;
}

}  // namespace zetalab
