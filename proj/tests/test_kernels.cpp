#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zetalab/kernels.hpp"

using namespace zetalab;

namespace {

const W2Cache& shared_cache() {
  static const W2Cache cache;
  return cache;
}

}  // namespace

TEST_CASE("w2 contour value is independent of the abscissa", "[kernels]") {
  for (double xi : {0.01, 0.3, 1.0, 4.0}) {
    ContourSpec a, b;
    a.c = 0.5;
    b.c = 2.0;
    const double va = w2_kernel(xi, a);
    const double vb = w2_kernel(xi, b);
    REQUIRE(std::abs(va - vb) <= 1e-10 * (1.0 + std::abs(va)));
  }
}

TEST_CASE("w2 trapezoid is converged in the step", "[kernels]") {
  for (double xi : {0.5, 5.0, 20.0}) {
    ContourSpec fine;
    fine.c = 0.0;
    fine.step = 0.025;
    const double coarse = w2_kernel(xi);
    const double refined = w2_kernel(xi, fine);
    REQUIRE(std::abs(coarse - refined) <= 1e-8 * (std::abs(refined) + 1e-30));
  }
}

TEST_CASE("w2 is positive and eventually decreasing", "[kernels]") {
  double prev = w2_kernel(1.0);
  REQUIRE(prev > 0.0);
  for (double xi = 2.0; xi <= 30.0; xi += 1.0) {
    const double cur = w2_kernel(xi);
    REQUIRE(cur > 0.0);
    REQUIRE(cur < prev);
    prev = cur;
  }
  REQUIRE(w2_kernel(1e-4) > 0.0);
}

TEST_CASE("w2 at 40 sits below every tolerance in use", "[kernels]") {
  REQUIRE(w2_kernel(40.0) < 5e-36);
  REQUIRE(w2_kernel(40.0) > 0.0);
}

TEST_CASE("cache interpolation tracks the direct contour", "[kernels]") {
  const W2Cache& cache = shared_cache();
  // relative where the kernel is alive, tiny absolute floor on the far
  // tail (interpolating e^{-2 xi} to 1e-9 relative is neither possible
  // on this grid nor needed by any consumer)
  for (double xi : {1e-5, 0.03, 0.7, 3.3, 17.0, 39.0}) {
    const double direct = w2_kernel(xi);
    REQUIRE(std::abs(cache(xi) - direct) <=
            1e-9 * std::abs(direct) + 1e-19);
  }
  REQUIRE(cache(46.0) == 0.0);
  REQUIRE(cache(1e-8) > 0.0);
}

TEST_CASE("dlog matches a central difference of log w2", "[kernels]") {
  for (double xi : {0.2, 1.0, 6.0}) {
    const double h = 1e-4;
    const double fd = (std::log(w2_kernel(xi * std::exp(h))) -
                       std::log(w2_kernel(xi * std::exp(-h)))) /
                      (2.0 * h);
    const double dl = w2_kernel_dlog(xi) / w2_kernel(xi);
    REQUIRE(std::abs(dl - fd) <= 1e-6 * (1.0 + std::abs(fd)));
  }
}

TEST_CASE("phi bump is supported on (1/2, 3) with phi(1) = e^-1/2", "[kernels]") {
  REQUIRE(phi_bump(0.4) == 0.0);
  REQUIRE(phi_bump(0.5) == 0.0);
  REQUIRE(phi_bump(3.0) == 0.0);
  REQUIRE(phi_bump(3.5) == 0.0);
  REQUIRE_THAT(phi_bump(1.0),
               Catch::Matchers::WithinRel(std::exp(-0.5), 1e-14));
  REQUIRE(phi_bump(0.52) > 0.0);
  REQUIRE(phi_bump(0.52) < 1e-4);
  REQUIRE(phi_bump(2.98) > 0.0);
  REQUIRE(phi_bump(2.98) < 1e-4);
}
