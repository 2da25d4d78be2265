#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetalab {

using int64 = std::int64_t;
using cplx = std::complex<double>;

// Neumaier-compensated accumulator, used wherever long sums must be
// reproducible independent of chunking.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;

  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  KahanSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return s + c; }
};

struct KahanSumC {
  KahanSum re, im;

  void add(cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
  KahanSumC& operator+=(cplx z) {
    add(z);
    return *this;
  }
  cplx value() const { return {re.value(), im.value()}; }
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

struct ValueWithError {
  double value;
  double error;  // conservative absolute bound on value's error
};

}  // namespace zetalab
