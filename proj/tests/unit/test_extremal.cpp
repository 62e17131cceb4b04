#include <cmath>

#include "diskwork/extremal.hpp"
#include "doctest.h"

using namespace dw;

TEST_SUITE("extremal") {
  TEST_CASE("closed form values") {
    CHECK(std::abs(mu0_projection(0.5) - (4.0 * std::log(2.0) - 2.0)) < 1e-15);
    CHECK(std::abs(mu0_projection(0.0) - 0.5) < 1e-15);
    CHECK(std::abs(mu0_projection(1e-9) - 0.5) < 1e-8);
    const double want = std::log(1.0 / 0.1) / 0.81 - 1.0 / 0.9;
    CHECK(std::abs(mu0_projection(0.9) - want) < 1e-14);
  }

  TEST_CASE("series and closed branches meet") {
    for (double r : {0.2499, 0.2501})
      for (int k = 0; k < 8; ++k) {
        const cplx z = std::polar(r, 0.7 * k);
        const cplx L = std::log(1.0 / (1.0 - z));
        CHECK(std::abs(mu0_projection(z) - (L / (z * z) - 1.0 / z)) < 1e-12);
      }
  }

  TEST_CASE("derivative against a central difference") {
    for (cplx z : {cplx(0.1, 0.05), cplx(-0.4, 0.6), cplx(0.9, 0.0)}) {
      const double h = 1e-5;
      const cplx fd = (mu0_projection(z + h) - mu0_projection(z - h)) / (2.0 * h);
      CHECK(std::abs(fd - mu0_projection_deriv(z)) < 1e-6);
    }
  }

  TEST_CASE("projection of the extremal symbol matches the closed form") {
    auto p = bergman_project(Symbol::mu0(), 255);
    for (cplx z : {cplx(0.3, 0.0), cplx(-0.2, 0.7), cplx(0.0, 0.5)})
      CHECK(std::abs(p.series(z) - mu0_projection(z)) < 1e-8);
  }

  TEST_CASE("lifted function exponentiates to e^-z/(1-z)") {
    const HoloFn lifted = mu0_lifted_fn();
    for (cplx z : {cplx(0.5, 0.2), cplx(-0.7, -0.1)}) {
      CHECK(std::abs(std::exp(lifted(z)) - std::exp(-z) / (1.0 - z)) < 1e-13);
      CHECK(std::abs(lifted(z) - z * z * mu0_projection(z)) < 1e-13);
    }
    CHECK(std::abs(log_kernel_fn()(0.5) - std::log(2.0)) < 1e-15);
    CHECK(std::abs(log_kernel_fn().deriv(0.5) - 2.0) < 1e-14);
  }

  TEST_CASE("lower bound from the sharpness direction") {
    const auto [lhs, rhs] = lower_bound_check(2.0, std::sqrt(0.99));
    CHECK(std::abs(rhs - std::exp(-2.0) * 10.0) < 1e-12);
    CHECK(lhs >= rhs);
    const auto [lhs2, rhs2] = lower_bound_check(2.0, std::sqrt(0.9999));
    CHECK(std::abs(rhs2 - std::exp(-2.0) * 100.0) < 1e-9);
    CHECK(lhs2 >= rhs2);
  }
}
