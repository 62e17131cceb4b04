#include <cmath>
#include <random>

#include "diskwork/bloch.hpp"
#include "doctest.h"

using namespace dw;

namespace {

PowerSeries atanh_series(std::size_t n) {
  std::vector<cplx> c(n + 1, 0.0);
  for (std::size_t j = 1; j <= n; j += 2) c[j] = 1.0 / static_cast<double>(j);
  return PowerSeries(c);
}

// radial reduction: the circle mean of |1 - z conj(w)|^-2 over |w| = t is 1/(1 - |z|^2 t^2)
double constant5_radial(cplx z) {
  auto W = [](double t) { return t < 0.5 ? 2.0 : (2.0 - t - t * t) / t; };
  const double s = std::norm(z);
  double total = 0.0;
  for (auto [a, b] : {std::pair{0.0, 0.5}, std::pair{0.5, 1.0}}) {
    const QuadRule q = gauss_legendre(40, a, b);
    for (std::size_t k = 0; k < q.nodes.size(); ++k) {
      const double t = q.nodes[k];
      total += q.weights[k] * 2.0 * t * W(t) / (1.0 - s * t * t);
    }
  }
  return total;
}

PowerSeries random_poly(std::mt19937& rng, int degree) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int j = 1; j <= degree; ++j) c[static_cast<std::size_t>(j)] = cplx(n(rng), n(rng)) / static_cast<double>(j);
  PowerSeries p(c);
  const double s = bloch_seminorm(HoloFn(p));
  return (1.0 / s) * p;
}

}  // namespace

TEST_SUITE("bloch") {
  TEST_CASE("seminorm examples") {
    CHECK(std::abs(bloch_seminorm(HoloFn(PowerSeries({0.0, 1.0}))) - 1.0) < 1e-15);
    CHECK(bloch_seminorm(HoloFn(PowerSeries({cplx(2.0, 1.0)}))) == 0.0);
    CHECK(std::abs(bloch_seminorm(HoloFn(atanh_series(4001))) - 1.0) < 1e-3);
    // z^n: n (1-r^2) r^{n-1} peaks at r^2 = (n-1)/(n+1)
    const int n = 5;
    std::vector<cplx> c(6, 0.0);
    c[5] = 1.0;
    const double r2 = (n - 1.0) / (n + 1.0);
    const double want = n * (1.0 - r2) * std::pow(r2, (n - 1) / 2.0);
    CHECK(std::abs(bloch_seminorm(HoloFn(PowerSeries(c))) - want) < 1e-10);
  }

  TEST_CASE("seminorm is nondecreasing under refinement") {
    std::mt19937 rng(7);
    const PowerSeries p = random_poly(rng, 12);
    double prev = 0.0;
    for (int level = 2; level <= 6; ++level) {
      const double v = bloch_seminorm(HoloFn(p), {level, false});
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }

  TEST_CASE("weight values") {
    CHECK(omega_weight(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(omega_weight(0.4999) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(omega_weight(0.5) == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
    CHECK(std::abs(omega_weight(1.0 - 1e-12) - 1.0) < 1e-11);
    CHECK_THROWS_AS(omega_weight(1.0), NumericError);
    CHECK_THROWS_AS(omega_weight(-0.1), NumericError);
  }

  TEST_CASE("decomposition of linear functions") {
    const auto d = bloch_decompose(PowerSeries({0.5, 1.0}));
    CHECK(d.nu_sup < 1e-15);
    CHECK(std::abs(d.G(0.3) - (0.5 + 0.3)) < 1e-14);
    CHECK(d.residual < 1e-12);
  }

  TEST_CASE("decomposition of z squared") {
    const auto d = bloch_decompose(PowerSeries({0.0, 0.0, 1.0}));
    CHECK(d.residual < 1e-8);
    // nu = 2 (1-|z|^2) omega(|z|) conj(z) z / |z|... modulus 2 (1-t^2) omega(t) t
    double want = 0.0;
    for (int k = 1; k < 100000; ++k) {
      const double t = k / 100000.0;
      want = std::max(want, 2.0 * (1.0 - t * t) * omega_weight(t));
    }
    CHECK(d.nu_sup <= want + 1e-12);
    CHECK(d.nu_sup <= bloch_seminorm(HoloFn(PowerSeries({0.0, 0.0, 1.0}))) + 1e-9);
  }

  TEST_CASE("decomposition bounds for the inverse hyperbolic tangent") {
    const auto d = bloch_decompose(atanh_series(255));
    CHECK(d.nu_sup <= 1.0 + 1e-6);
    CHECK(d.G_sup <= 6.0 + 1e-6);
    CHECK(d.residual < 1e-8);
  }

  TEST_CASE("decomposition bounds for random polynomials") {
    std::mt19937 rng(11);
    for (int i = 0; i < 5; ++i) {
      const PowerSeries p = random_poly(rng, 10);
      const auto d = bloch_decompose(p);
      CHECK(d.nu_sup <= 1.0 + 1e-6);
      CHECK(d.G_sup <= std::abs(p.coeffs[0]) + 6.0 + 1e-6);
      CHECK(d.G_prime_seminorm <= 12.0 + 1e-6);
      CHECK(d.residual < 1e-8);
    }
  }

  TEST_CASE("constant five integral against a radial oracle") {
    CHECK(std::abs(constant5_radial(0.0) - 7.0 / 6.0) < 1e-13);
    for (cplx z : {cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(0.0, 0.9), cplx(-0.6, 0.6)}) {
      const double v = constant5_integral(z);
      CHECK(std::abs(v - constant5_radial(z)) < 1e-9);
      CHECK(v <= 5.0);
    }
    CHECK(constant5_check({0.0, 0.9, cplx(0.0, 0.99)}) <= 5.0);
  }

  TEST_CASE("growth estimate") {
    std::mt19937 rng(3);
    for (int i = 0; i < 5; ++i) {
      const PowerSeries p = random_poly(rng, 8);
      const double b = bloch_seminorm(HoloFn(p));
      for (double r : {0.2, 0.7, 0.95})
        for (int k = 0; k < 32; ++k) {
          const cplx z = std::polar(r, 2.0 * kPi * k / 32.0);
          CHECK(std::abs(p(z)) <= b * 0.5 * std::log((1.0 + r) / (1.0 - r)) + 1e-12);
        }
    }
  }

  TEST_CASE("quotient bound") {
    std::mt19937 rng(5);
    for (int i = 0; i < 5; ++i) {
      const PowerSeries p = random_poly(rng, 10);
      const HoloFn f(p.diff());
      CHECK(quotient_weight_max(f) <= 1.0 + 1e-6);
    }
  }
}
