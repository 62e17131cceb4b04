#include <cmath>

#include "diskwork/dimension.hpp"
#include "diskwork/grids.hpp"
#include "doctest.h"

using namespace dw;

namespace {

// smaller root of the quadratic A t^2 - t + 1 by the textbook formula
double quadratic_root(double k) {
  const double A = 0.25 * k * k * (1.0 + 7.0 * k) * (1.0 + 7.0 * k);
  return (1.0 - std::sqrt(1.0 - 4.0 * A)) / (2.0 * A);
}

}  // namespace

TEST_SUITE("dimension") {
  TEST_CASE("quadratic values") {
    for (double k : {0.0, 0.1, 0.7}) CHECK(F_quadratic(k, 0.0) == 1.0);
    CHECK(std::abs(F_quadratic(0.1, 1.0) - 0.007225) < 1e-15);
    CHECK(k_validity_limit() == doctest::Approx(0.2051).epsilon(1e-3));
  }

  TEST_CASE("root of the quadratic") {
    // 1 + x/4 + x^2/8 with x = k^2 (1+7k)^2 gives 1.007329; the exact root sits 2.3e-6 above
    CHECK(std::abs(t_k(0.1) - 1.007329) < 1e-5);
    CHECK(std::abs(t_k(0.1) - 2.0 / (1.0 + std::sqrt(0.9711))) < 1e-15);
    CHECK(std::abs(t_k(0.1) - quadratic_root(0.1)) < 1e-14);
    CHECK(std::abs(t_k(1e-6) - 1.0) < 1e-11);
    const double k = 0.01;
    // leading gap coefficient 3.5, next order adds about 12 k
    CHECK(std::abs((t_k(k) - 1.0 - k * k / 4.0) / (k * k * k) - 3.5) < 0.2);
    for (double kk = 0.005; kk < k_validity_limit(); kk += 0.005) {
      const double t = t_k(kk);
      CHECK(std::abs(F_quadratic(kk, t)) < 1e-12);
      CHECK(F_dt(kk, t) < 0.0);
      CHECK(t > 1.0);
      CHECK(t < 2.0);
      double root = 0.0;
      CHECK(roots_in_unit_interval(kk, &root) == 1);
      CHECK(std::abs(root - t) < 1e-12);
    }
    CHECK_THROWS_WITH_AS(t_k(0.21), "k outside validity interval", NumericError);
    CHECK_THROWS_AS(t_k(0.0), NumericError);
  }

  TEST_CASE("symmetrization") {
    CHECK(symmetrize(0.0) == 0.0);
    CHECK(symmetrize(1.0) == 1.0);
    CHECK(std::abs(symmetrize(0.1) - 0.2 / 1.01) < 1e-16);
    CHECK(std::abs(symmetrize(0.1) - 0.198020) < 1e-6);
    CHECK(desymmetrize(0.0) == 0.0);
    CHECK(std::abs(desymmetrize(1.0) - 1.0) < 1e-16);
    for (int i = 0; i < 1000; ++i) {
      const double k = i / 1000.0;
      CHECK(std::abs(symmetrize(desymmetrize(k)) - k) < 1e-14);
    }
    // the other order loses digits near 1, where dk'/dk blows up
    for (int i = 0; i <= 500; ++i) {
      const double kp = i / 1000.0;
      CHECK(std::abs(desymmetrize(symmetrize(kp)) - kp) < 1e-14);
    }
    CHECK_THROWS_AS(symmetrize(1.5), NumericError);
  }

  TEST_CASE("dimension bound chain") {
    const auto r = dim_bound(0.05);
    CHECK(std::abs(r.k - 0.1 / 1.0025) < 1e-15);
    CHECK(std::abs(r.t_k - t_k(r.k)) < 1e-16);
    CHECK(std::abs(r.F_at_root) < 1e-12);
    CHECK(r.derivative_sign < 0.0);
    CHECK(std::abs(r.asymptotic_gap - (r.t_k - 1.0025)) < 1e-15);
    CHECK(dim_bound(0.1).t_k > 1.0);
    CHECK(std::abs(dim_bound(1e-5).t_k - 1.0) < 1e-9);
    CHECK_THROWS_AS(dim_bound(0.2), NumericError);
  }
}
