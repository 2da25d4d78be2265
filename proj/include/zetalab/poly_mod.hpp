#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/rng.hpp"

namespace zetalab {

// Dense polynomials over F_p: ascending coefficients in [0, p), no trailing
// zeros.  The zero polynomial is the empty vector.
using Poly = std::vector<int64>;

namespace detail {

inline int64 mod_mul(int64 a, int64 b, int64 p) {
  return static_cast<int64>(static_cast<__int128>(a) * b % p);
}

inline int64 mod_inv(int64 a, int64 p) {
  bigint g;
  const bigint inv = egcd_inverse(bigint(a), bigint(p), g);
  require(g == 1, "mod_inv: argument not invertible");
  bigint r = inv % p;
  if (r < 0) r += p;
  return static_cast<int64>(r);
}

}  // namespace detail

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline bool poly_is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

inline Poly poly_sub(const Poly& a, const Poly& b, int64 p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    const int64 v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    out[i] = v < 0 ? v + p : v;
  }
  poly_trim(out);
  return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + detail::mod_mul(a[i], b[j], p)) % p;
  }
  poly_trim(out);
  return out;
}

inline std::pair<Poly, Poly> poly_divrem(Poly a, const Poly& m, int64 p) {
  require(!m.empty(), "poly_divrem: division by zero polynomial");
  const int dm = poly_deg(m);
  if (poly_deg(a) < dm) return {Poly{}, std::move(a)};
  Poly q(static_cast<size_t>(poly_deg(a) - dm) + 1, 0);
  const int64 lead_inv = detail::mod_inv(m.back(), p);
  while (poly_deg(a) >= dm) {
    const int64 c = detail::mod_mul(a.back(), lead_inv, p);
    const int shift = poly_deg(a) - dm;
    q[shift] = c;
    for (int i = 0; i <= dm; ++i) {
      const int64 v = a[shift + i] - detail::mod_mul(c, m[i], p);
      a[shift + i] = v < 0 ? v + p : v;
    }
    poly_trim(a);
  }
  poly_trim(q);
  return {std::move(q), std::move(a)};
}

inline Poly poly_rem(Poly a, const Poly& m, int64 p) {
  return poly_divrem(std::move(a), m, p).second;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int64 p) {
  return poly_rem(poly_mul(a, b, p), m, p);
}

inline Poly poly_powmod(Poly base, int64 e, const Poly& m, int64 p) {
  require(e >= 0, "poly_powmod: negative exponent");
  base = poly_rem(std::move(base), m, p);
  Poly out{1};
  out = poly_rem(std::move(out), m, p);
  while (e > 0) {
    if (e & 1) out = poly_mulmod(out, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return out;
}

inline Poly poly_monic(Poly a, int64 p) {
  if (a.empty() || a.back() == 1) return a;
  const int64 inv = detail::mod_inv(a.back(), p);
  for (auto& c : a) c = detail::mod_mul(c, inv, p);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, int64 p) {
  while (!b.empty()) {
    Poly r = poly_rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a), p);
}

inline Poly poly_derivative(const Poly& a, int64 p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    out[i - 1] = detail::mod_mul(a[i] % p, static_cast<int64>(i % p), p);
  poly_trim(out);
  return out;
}

inline int64 poly_eval(const Poly& a, int64 x, int64 p) {
  int64 acc = 0;
  for (size_t i = a.size(); i-- > 0;)
    acc = (detail::mod_mul(acc, x, p) + a[i]) % p;
  return acc;
}

// Monic psi of degree d >= 1 is irreducible over F_p iff it shares no factor
// with x^{p^i} - x for any i <= d/2, since that product collects every
// irreducible of degree dividing i.  A repeated factor of degree j <= d/2 is
// caught the same way, so no separate squarefree check is needed.
inline bool poly_irreducible(const Poly& psi, int64 p) {
  const int d = poly_deg(psi);
  require(d >= 1 && psi.back() == 1,
          "poly_irreducible: need monic of degree >= 1");
  if (d == 1) return true;
  const Poly x{0, 1};
  Poly t = x;
  for (int i = 1; 2 * i <= d; ++i) {
    t = poly_powmod(std::move(t), p, psi, p);
    if (!poly_is_one(poly_gcd(poly_sub(t, x, p), psi, p))) return false;
  }
  return true;
}

// Distinct-degree split of a monic squarefree psi: (degree, multiplicity)
// pairs with sum degree * multiplicity = deg psi.
inline std::vector<std::pair<int, int>> ddf_factor_degrees(Poly psi, int64 p) {
  require(poly_deg(psi) >= 1 && psi.back() == 1,
          "ddf_factor_degrees: need monic of degree >= 1");
  require(poly_is_one(poly_gcd(psi, poly_derivative(psi, p), p)),
          "ddf_factor_degrees: input must be squarefree");
  std::vector<std::pair<int, int>> out;
  const Poly x{0, 1};
  Poly t = poly_rem(x, psi, p);
  int i = 1;
  while (2 * i <= poly_deg(psi)) {
    t = poly_powmod(std::move(t), p, psi, p);
    const Poly g = poly_gcd(poly_sub(t, x, p), psi, p);
    if (poly_deg(g) > 0) {
      out.emplace_back(i, poly_deg(g) / i);
      psi = poly_divrem(std::move(psi), g, p).first;
      t = poly_rem(std::move(t), psi, p);
    }
    ++i;
  }
  if (poly_deg(psi) > 0) out.emplace_back(poly_deg(psi), 1);
  return out;
}

// Draws monic degree-d candidates keyed by (seed, attempt) until one passes
// the irreducibility test.  About 1/d of monic candidates qualify, so the
// 100 d budget fails with negligible probability.
inline Poly irreducible_poly_mod_p(int d, int64 p, std::uint64_t seed) {
  require(d >= 1, "irreducible_poly_mod_p: degree must be >= 1");
  require(p >= 2, "irreducible_poly_mod_p: modulus must be >= 2");
  const int budget = 100 * d;
  for (int attempt = 0; attempt < budget; ++attempt) {
    Poly c(static_cast<size_t>(d) + 1, 0);
    c[d] = 1;
    for (int i = 0; i < d; ++i)
      c[i] = static_cast<int64>(
          keyed_rand(seed, static_cast<std::uint64_t>(attempt), i) %
          static_cast<std::uint64_t>(p));
    if (poly_irreducible(c, p)) return c;
  }
  require(false, "irreducible_poly_mod_p: attempt budget exhausted");
  return {};
}

}  // namespace zetalab
