#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <utility>
#include <vector>

#include "zetalab/base.hpp"

namespace zetalab {

using bigint = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------- primes

class PrimeTable {
 public:
  explicit PrimeTable(int64 limit) : limit_(limit) {
    require(limit >= 2, "PrimeTable: limit must be >= 2");
    composite_.assign(static_cast<size_t>(limit) + 1, false);
    for (int64 p = 2; p * p <= limit; ++p) {
      if (composite_[p]) continue;
      for (int64 m = p * p; m <= limit; m += p) composite_[m] = true;
    }
    for (int64 n = 2; n <= limit; ++n)
      if (!composite_[n]) primes_.push_back(n);
  }

  int64 limit() const { return limit_; }
  const std::vector<int64>& primes() const { return primes_; }

  bool is_prime(int64 n) const {
    require(n >= 0 && n <= limit_, "PrimeTable::is_prime: out of range");
    return n >= 2 && !composite_[n];
  }

 private:
  int64 limit_;
  std::vector<bool> composite_;
  std::vector<int64> primes_;
};

// ---------------------------------------------------------- factorization

struct PrimePower {
  int64 p;
  int e;
};

using Factorization = std::vector<PrimePower>;

inline Factorization factorize(int64 n) {
  require(n >= 1, "factorize: n must be >= 1");
  Factorization f;
  for (int64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline int64 unfactorize(const Factorization& f) {
  int64 n = 1;
  for (const auto& pp : f)
    for (int i = 0; i < pp.e; ++i) n *= pp.p;
  return n;
}

inline bool is_squarefree(int64 n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (const auto& pp : factorize(n))
    if (pp.e > 1) return false;
  return true;
}

inline int mobius(int64 n) {
  require(n >= 1, "mobius: n must be >= 1");
  int m = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.e > 1) return 0;
    m = -m;
  }
  return m;
}

inline int64 tau(int64 n) {
  int64 t = 1;
  for (const auto& pp : factorize(n)) t *= pp.e + 1;
  return t;
}

inline int64 sigma_divisors(int64 n) {
  int64 s = 1;
  for (const auto& pp : factorize(n)) {
    int64 q = 1, acc = 1;
    for (int i = 0; i < pp.e; ++i) {
      q *= pp.p;
      acc += q;
    }
    s *= acc;
  }
  return s;
}

inline int omega(int64 n) {
  return static_cast<int>(factorize(n).size());
}

// h(p^k) = 1 + 1/p + 1/p^2 - 4/(p(p+1)), independent of the exponent k;
// extended multiplicatively over distinct primes.
inline double h_local(int64 p) {
  const double dp = static_cast<double>(p);
  return 1.0 + 1.0 / dp + 1.0 / (dp * dp) - 4.0 / (dp * (dp + 1.0));
}

inline double h_func(int64 n) {
  require(n >= 1, "h_func: n must be >= 1");
  double h = 1.0;
  for (const auto& pp : factorize(n)) h *= h_local(pp.p);
  return h;
}

// epsilon_D(n) = D^{omega(n)}; dominates tau on squarefree n when D >= 2.
inline double epsilon_D(double D, int64 n) {
  return std::pow(D, omega(n));
}

// ------------------------------------------------------- Kronecker symbol

inline int kronecker(int64 a, int64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  int k = 1;
  if (v % 2 == 1) {
    static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    k = tab2[((a % 8) + 8) % 8];
    if (k == 0) return 0;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // now n odd positive: Jacobi symbol by reciprocity
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const int64 r = n % 8;
      if (r == 3 || r == 5) k = -k;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    a %= n;
  }
  return n == 1 ? k : 0;
}

// --------------------------------------------- fundamental discriminants

inline bool is_fundamental_discriminant(int64 d) {
  if (d == 0 || d == 1) return false;
  const int64 r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  const int64 m = d / 4;
  const int64 rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

// Fundamental discriminants with sign 'sign' and |d| in [lo, hi],
// ascending in |d|.
inline std::vector<int64> enumerate_fundamental(int64 lo, int64 hi, int sign) {
  require(sign == 1 || sign == -1, "enumerate_fundamental: sign must be +-1");
  require(1 <= lo && lo <= hi, "enumerate_fundamental: need 1 <= lo <= hi");
  std::vector<int64> out;
  for (int64 a = lo; a <= hi; ++a) {
    const int64 d = sign * a;
    if (is_fundamental_discriminant(d)) out.push_back(d);
  }
  return out;
}

// Window of the 8d-family: odd squarefree d with X/16 <= d <= X/8,
// so that 8d is a fundamental discriminant in [X/2, X].
inline std::vector<int64> enumerate_8d_family(int64 X) {
  require(X >= 1, "enumerate_8d_family: X must be positive");
  const int64 lo = (X + 15) / 16;
  const int64 hi = X / 8;
  std::vector<int64> out;
  for (int64 d = lo; d <= hi; ++d)
    if (d % 2 == 1 && is_squarefree(d)) out.push_back(d);
  return out;
}

// mu(2d)^2 = 1 exactly when d is odd and squarefree.
inline bool mu2d_squarefree(int64 d) {
  return d >= 1 && d % 2 == 1 && is_squarefree(d);
}

// ------------------------------------------------------------------ CRT

namespace detail {

// returns g = gcd(a,b) and x with a*x == g (mod b), for a,b > 0
inline bigint egcd_inverse(const bigint& a, const bigint& b, bigint& g) {
  bigint r0 = a, r1 = b, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const bigint q = r0 / r1;
    bigint t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  g = r0;
  return s0;
}

}  // namespace detail

// Simultaneous congruences x == residues[i] (mod moduli[i]); the moduli must
// be pairwise coprime. Returns the unique solution in [0, prod moduli).
inline bigint crt(const std::vector<bigint>& residues,
                  const std::vector<bigint>& moduli) {
  require(residues.size() == moduli.size() && !residues.empty(),
          "crt: need matching nonempty residue/modulus lists");
  for (const auto& m : moduli) require(m >= 2, "crt: moduli must be >= 2");
  bigint x = residues[0] % moduli[0];
  if (x < 0) x += moduli[0];
  bigint M = moduli[0];
  for (size_t i = 1; i < moduli.size(); ++i) {
    bigint g;
    const bigint inv = detail::egcd_inverse(M % moduli[i], moduli[i], g);
    require(g == 1, "crt: moduli must be pairwise coprime");
    bigint r = residues[i] % moduli[i];
    if (r < 0) r += moduli[i];
    bigint t = ((r - x) * inv) % moduli[i];
    if (t < 0) t += moduli[i];
    x += M * t;
    M *= moduli[i];
  }
  return x;
}

}  // namespace zetalab
