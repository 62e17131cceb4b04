#include <cmath>

#include "diskwork/beltrami.hpp"
#include "diskwork/extremal.hpp"
#include "doctest.h"

using namespace dw;

namespace {

const Symbol kUnit = Symbol::constant(1.0);

// interior S of w^a conj(w)^b on the disk
cplx monomial_beurling(int a, int b, cplx z) {
  cplx v = static_cast<double>(a) * std::pow(z, a - 1) * std::pow(std::conj(z), b + 1);
  if (a > b) v -= static_cast<double>(a - b - 1) * std::pow(z, a - b - 2);
  return v / (b + 1.0);
}

}  // namespace

TEST_SUITE("beltrami") {
  TEST_CASE("interior transform of polynomial fields") {
    const BeurlingEngine eng;
    const auto& g = eng.grid();
    const std::size_t n = eng.angular();
    for (auto [a, b] : {std::pair{3, 1}, std::pair{0, 2}, std::pair{2, 0}, std::pair{4, 1}, std::pair{1, 1}}) {
      std::vector<cplx> v(g.rings() * n);
      for (std::size_t i = 0; i < g.rings(); ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const cplx w = std::polar(g.radii[i], 2.0 * kPi * k / n);
          v[i * n + k] = std::pow(w, a) * std::pow(std::conj(w), b);
        }
      const auto out = eng.to_values(eng.interior(eng.to_modes(v)));
      double err = 0.0;
      for (std::size_t i = 0; i < g.rings(); ++i)
        for (std::size_t k = 0; k < n; ++k)
          err = std::max(err, std::abs(out[i * n + k] - monomial_beurling(a, b, std::polar(g.radii[i], 2.0 * kPi * k / n))));
      CHECK(err < 1e-12);
    }
  }

  TEST_CASE("exterior coefficients of the indicator") {
    const BeurlingEngine eng;
    const auto d = eng.exterior(eng.to_modes(eng.sample(kUnit)));
    CHECK(std::abs(d[2] + 1.0) < 1e-14);
    for (std::size_t k = 3; k < d.size(); ++k) CHECK(std::abs(d[k]) < 1e-14);
  }

  TEST_CASE("coefficients beyond the unit bound are rejected") {
    const BeurlingEngine eng;
    CHECK_THROWS_AS(eng.sample(Symbol::constant(1.5)), NumericError);
  }

  TEST_CASE("zero coefficient gives the identity") {
    const NeumannSeries s(Symbol::constant(0.0), 4);
    CHECK(std::abs(s.derivative(0.7, cplx(1.2, 0.3)) - 1.0) < 1e-15);
    const auto ms = motion_coefficients(s, 1.05, 4);
    for (const auto& h : ms.H)
      for (const auto& v : h.values) CHECK(std::abs(v) < 1e-15);
    const auto rep = plancherel_average_check(ms, 0.5);
    CHECK(rep.lhs == doctest::Approx(1.0));
    CHECK(rep.rhs == doctest::Approx(1.0));
  }

  TEST_CASE("indicator motion in closed form") {
    const NeumannSeries s(kUnit, 8);
    const auto mags = s.term_magnitudes(1.05);
    for (std::size_t n = 2; n <= mags.size(); ++n) CHECK(mags[n - 1] < 1e-13);
    for (double k : {0.1, 0.5, 0.9})
      for (cplx zeta : {cplx(1.05, 0.0), cplx(0.3, -1.4), cplx(-3.0, 2.0)}) {
        CHECK(std::abs(s.derivative(k, zeta) - (1.0 - k / (zeta * zeta))) < 1e-12);
        CHECK(std::abs(s.second_derivative(k, zeta) - 2.0 * k / (zeta * zeta * zeta)) < 1e-12);
        CHECK(std::abs(log_derivative_tracked(s, k, zeta) - std::log(1.0 - k / (zeta * zeta))) < 1e-12);
      }
    const auto nv = neumann_derivative(s, 0.3, cplx(1.1, 0.2));
    CHECK(nv.decaying);
    CHECK(nv.tail_estimate < 1e-12);
  }

  TEST_CASE("indicator motion coefficients") {
    const NeumannSeries s(kUnit, 8);
    const auto ms = motion_coefficients(s, 1.05, 6);
    REQUIRE(ms.H.size() == 7);
    double err = 0.0;
    for (std::size_t j = 1; j <= 7; ++j)
      for (std::size_t k = 0; k < ms.H[j - 1].size(); ++k) {
        const cplx zeta = std::polar(1.05, 2.0 * kPi * k / ms.H[j - 1].size());
        err = std::max(err, std::abs(ms.H[j - 1].values[k] + 1.0 / (static_cast<double>(j) * std::pow(zeta, static_cast<double>(2 * j)))));
      }
    CHECK(err < 1e-12);
    const auto rep = plancherel_average_check(ms, 0.5);
    CHECK(rep.lhs <= rep.rhs + rep.allowance);
  }

  TEST_CASE("indicator G in closed form") {
    const NeumannSeries s(kUnit, 8);
    for (cplx lam : {cplx(0.3, 0.0), cplx(0.0, 0.8), cplx(-0.5, 0.5)})
      for (cplx z : {cplx(0.2, 0.1), cplx(-0.7, 0.6), cplx(0.0, 0.95)}) {
        const cplx G = G_lambda(s, lam, z);
        CHECK(std::abs(G - std::log(1.0 - lam * z * z) / lam) < 1e-12);
        CHECK(std::abs(G) <= std::log(1.0 / (1.0 - std::norm(z))) + 1e-12);
        const cplx dG = G_lambda_dz(s, lam, z);
        CHECK(std::abs(dG + 2.0 * z / (1.0 - lam * z * z)) < 1e-12);
        CHECK((1.0 - std::norm(z)) * std::abs(dG) <= 6.0 * std::abs(z));
      }
    CHECK(G_lambda(s, 0.4, 0.0) == cplx(0.0));
  }

  TEST_CASE("conjugate coefficient") {
    const NeumannSeries s(Symbol::conjugate(), 6);
    for (cplx zeta : {cplx(1.05, 0.0), cplx(0.0, 2.0)}) {
      CHECK(std::abs(motion_first(s, zeta) + 1.0 / (zeta * zeta * zeta)) < 1e-13);
      // the interior transform of conj(w) vanishes, so the series stops after one term
      CHECK(std::abs(s.term(2, zeta)) < 1e-13);
    }
    const auto ms = motion_coefficients(s, 1.05, 4);
    double e1 = 0.0, e2 = 0.0;
    for (std::size_t k = 0; k < ms.H[0].size(); ++k) {
      const cplx zeta = std::polar(1.05, 2.0 * kPi * k / ms.H[0].size());
      e1 = std::max(e1, std::abs(ms.H[0].values[k] - motion_first(s, zeta)));
      e2 = std::max(e2, std::abs(ms.H[1].values[k] - motion_second(s, zeta)));
    }
    CHECK(e1 < 1e-8);
    CHECK(e2 < 1e-8);
  }

  TEST_CASE("first G coefficient matches the projection") {
    const NeumannSeries s(Symbol::mu0().reflected(), 2);
    for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.2), cplx(0.0, 0.9)})
      CHECK(std::abs(G_lambda(s, 0.0, z) + mu0_lifted_fn()(z)) < 1e-8);
  }

  TEST_CASE("growth and derivative bounds for G") {
    for (const Symbol& mu : {Symbol::mu0(), Symbol::phase_random(4), Symbol::monomial(2, 1)}) {
      const NeumannSeries s(mu, 24);
      for (double lam : {0.1, 0.5, 0.9})
        for (double r : {0.3, 0.7, 0.95})
          for (int k = 0; k < 12; ++k) {
            const cplx z = std::polar(r, 2.0 * kPi * k / 12.0 + 0.1);
            CHECK(std::abs(G_lambda(s, lam, z)) <= std::log(1.0 / (1.0 - r * r)) + 1e-6);
            CHECK((1.0 - r * r) * std::abs(G_lambda_dz(s, lam, z)) <= 6.0 * r + 1e-6);
          }
    }
  }

  TEST_CASE("Beurling form of the tail bound") {
    const NeumannSeries s(Symbol::mu0(), 1);
    for (double a : {0.3, 0.7})
      for (double R : {1.1, 1.01, 1.001}) CHECK(beurling_tail_integral(s, a, R) <= 10.0 * std::pow(1.0 - a, -1.5));
  }

  TEST_CASE("spectrum bound branches") {
    CHECK(bk_bound(0.1, 0.0).bound == 0.0);
    CHECK(std::abs(bk_bound(0.1, 1.0).bound - 0.007225) < 1e-15);
    for (double k : {0.05, 0.1, 0.2, 0.5}) {
      const double t = bk_splice(k);
      const auto b = bk_bound(k, t);
      const double s = 1.0 + 7.0 * k;
      CHECK(std::abs(b.quadratic - 1.0 / (s * s)) < 1e-12);
      CHECK(std::abs(b.linear - 1.0 / (s * s)) < 1e-12);
      CHECK(bk_bound(k, 2.0 * t).bound < bk_bound(k, 2.0 * t).quadratic);
    }
    CHECK_THROWS_AS(bk_bound(1.0, 1.0), NumericError);
  }

  TEST_CASE("motion maps satisfy the Goluzin inequality") {
    const NeumannSeries s(Symbol::phase_random(2), 24);
    const auto psi = motion_map(s, 0.6);
    for (double R : {1.01, 1.5, 4.0})
      for (int k = 0; k < 8; ++k) {
        const auto rep = goluzin_check(psi, std::polar(R, 0.8 * k));
        CHECK(rep.lhs <= rep.rhs + 1e-9);
        CHECK(rep.simple_lhs <= rep.simple_rhs + 1e-9);
      }
  }
}
