#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "zetalab/base.hpp"

namespace zetalab {

namespace detail {

// 13-term rational Lanczos approximation with g = 6.024680040776729583740,
// relative error ~1e-15 on the half-plane Re(z) >= 1/2. Coefficients are in
// ascending order; the denominator is z(z+1)...(z+11).
inline const double lanczos_num[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};
inline const double lanczos_den[13] = {
    0.0,        39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};
inline constexpr double lanczos_g = 6.024680040776729583740234375;

inline cplx lanczos_sum(cplx z) {
  cplx num = 0.0, den = 0.0;
  for (int i = 12; i >= 0; --i) {
    num = num * z + lanczos_num[i];
    den = den * z + lanczos_den[i];
  }
  return num / den;
}

inline bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::round(z.real());
}

// 1/sin(pi z), stable for large |Im z| where sin itself overflows.
inline cplx inv_sin_pi(cplx z) {
  const double pi = 3.14159265358979323846;
  const cplx i(0.0, 1.0);
  if (std::abs(z.imag()) <= 20.0) return 1.0 / std::sin(pi * z);
  if (z.imag() > 0.0) {
    const cplx e = std::exp(i * pi * z);  // magnitude e^{-pi Im z}, small
    return 2.0 * i * e / (1.0 - e * e);
  }
  const cplx e = std::exp(-i * pi * z);
  return -2.0 * i * e / (1.0 - e * e);
}

}  // namespace detail

// Complex gamma function; poles at the nonpositive integers are rejected.
inline cplx gamma_complex(cplx z) {
  if (detail::is_nonpositive_integer(z))
    throw std::domain_error("gamma_complex: pole at nonpositive integer");
  if (z.real() < 0.5) {
    const double pi = 3.14159265358979323846;
    return pi * detail::inv_sin_pi(z) / gamma_complex(1.0 - z);
  }
  const cplx zgh = z + (detail::lanczos_g - 0.5);
  return detail::lanczos_sum(z) * std::exp((z - 0.5) * std::log(zgh) - zgh);
}

inline double gamma_real(double x) { return gamma_complex(cplx(x)).real(); }

// Completed-factor conventions: Gamma_R(s) = pi^{-s/2} Gamma(s/2) and
// Gamma_C(s) = 2 (2pi)^{-s} Gamma(s), so that Gamma_R(s) Gamma_R(s+1) =
// Gamma_C(s) exactly (Legendre duplication).
inline cplx gamma_R(cplx s) {
  const double pi = 3.14159265358979323846;
  return std::exp(-0.5 * s * std::log(cplx(pi))) * gamma_complex(0.5 * s);
}

inline cplx gamma_C(cplx s) {
  const double two_pi = 6.28318530717958647692;
  return 2.0 * std::exp(-s * std::log(cplx(two_pi))) * gamma_complex(s);
}

// |Gamma_R(1-s)/Gamma_R(s)| with poles resolved to 0 / infinity.
inline double gamma_R_ratio_abs(cplx s) {
  const bool num_pole = detail::is_nonpositive_integer(0.5 * (1.0 - s));
  const bool den_pole = detail::is_nonpositive_integer(0.5 * s);
  if (num_pole) return std::numeric_limits<double>::infinity();
  if (den_pole) return 0.0;
  return std::abs(gamma_R(1.0 - s) / gamma_R(s));
}

inline double gamma_C_ratio_abs(cplx s) {
  const bool num_pole = detail::is_nonpositive_integer(1.0 - s);
  const bool den_pole = detail::is_nonpositive_integer(s);
  if (num_pole) return std::numeric_limits<double>::infinity();
  if (den_pole) return 0.0;
  return std::abs(gamma_C(1.0 - s) / gamma_C(s));
}

// Gamma_m(s) = min(|Gamma_R(1-s)/Gamma_R(s)|, |Gamma_C(1-s)/Gamma_C(s)|^{1/2});
// vanishes at negative integers, where every quadratic zeta_K has a zero or
// the archimedean factor degenerates.
inline double gamma_m(cplx s) {
  return std::min(gamma_R_ratio_abs(s), std::sqrt(gamma_C_ratio_abs(s)));
}

}  // namespace zetalab
