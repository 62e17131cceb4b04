#include <cmath>

#include "diskwork/extremal.hpp"
#include "diskwork/levelsets.hpp"
#include "diskwork/variance.hpp"
#include "doctest.h"

using namespace dw;

namespace {

HarmonicData one_plus_cos() { return HarmonicData::trig({0.5, 1.0, 0.5}); }

// int (1+cos t) log(1+cos t) dt / 2pi by composite Gauss-Legendre in t
double one_plus_cos_entropy() {
  double s = 0.0;
  const int panels = 64;
  for (int p = 0; p < panels; ++p) {
    const QuadRule q = gauss_legendre(20, 2.0 * kPi * p / panels, 2.0 * kPi * (p + 1) / panels);
    for (std::size_t k = 0; k < q.nodes.size(); ++k) {
      const double h = 1.0 + std::cos(q.nodes[k]);
      if (h > 0.0) s += q.weights[k] * h * std::log(h);
    }
  }
  return s / (2.0 * kPi);
}

}  // namespace

TEST_SUITE("levelsets") {
  TEST_CASE("trigonometric data") {
    const HarmonicData h = one_plus_cos();
    CHECK(h.mean() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h.boundary(0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(h.value(0.5) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(std::abs(h.dh(cplx(0.3, 0.2)) - 0.5) < 1e-15);
    CHECK(h.nonnegative());
    CHECK_THROWS_AS(HarmonicData::trig({cplx(0.0, 1.0), 0.0, cplx(0.0, 1.0)}), NumericError);
  }

  TEST_CASE("arc data") {
    const HarmonicData h = HarmonicData::arc(0.0, kPi, 1.0);
    CHECK(h.mean() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(h.value(cplx(0.0, -0.99)) < 0.01);
    CHECK(h.value(cplx(0.0, 0.99)) > 0.99);
    // finite difference of the extension against dh
    const cplx z(0.2, -0.3);
    const double e = 1e-6;
    const double hx = (h.value(z + e) - h.value(z - e)) / (2.0 * e);
    const double hy = (h.value(z + cplx(0.0, e)) - h.value(z - cplx(0.0, e))) / (2.0 * e);
    CHECK(std::abs(h.dh(z) - 0.5 * cplx(hx, -hy)) < 1e-8);
  }

  TEST_CASE("Green identity examples") {
    auto one = green_identity_check([](cplx) { return 1.0; }, [](cplx) { return 0.0; });
    CHECK(std::abs(one.first - 1.0) < 1e-13);
    CHECK(std::abs(one.second - 1.0) < 1e-13);
    auto sq = green_identity_check([](cplx z) { return std::norm(z); }, [](cplx) { return 1.0; });
    CHECK(std::abs(sq.first - 1.0) < 1e-13);
    CHECK(std::abs(sq.second - 1.0) < 1e-13);
    auto re = green_identity_check([](cplx z) { return z.real(); }, [](cplx) { return 0.0; });
    CHECK(std::abs(re.first) < 1e-13);
    CHECK(std::abs(re.second) < 1e-13);
    // |z|^4 has lap 4|z|^2: 1/3 + 4 (1/2 - 1/3) = 1
    auto q4 = green_identity_check([](cplx z) { return std::norm(z) * std::norm(z); },
                                   [](cplx z) { return 4.0 * std::norm(z); });
    CHECK(std::abs(q4.first - q4.second) < 1e-12);
  }

  TEST_CASE("energy inequality") {
    auto c = green_energy_inequality(HarmonicData::trig({1.0}), 1.5);
    CHECK(c.first == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.second == doctest::Approx(1.0).epsilon(1e-12));
    // q = 2 with 1 + Re z: rhs 1 + 1/2, lhs 1 + 1/4 + (1/4) int (1-|z|^2) dA = 1.375
    auto e2 = green_energy_inequality(HarmonicData::trig({0.5, 1.0, 0.5}), 2.0);
    CHECK(std::abs(e2.second - 1.5) < 1e-10);
    CHECK(std::abs(e2.first - 1.375) < 1e-10);
    auto a = green_energy_inequality(HarmonicData::arc(0.3, 2.0, 1.0), 1.5);
    CHECK(a.first <= a.second);
  }

  TEST_CASE("energy inequality across a zero line") {
    // h = Im z: with M_p = mean |sin|^p, lhs = 2 M_q/(q+2) + (q-1) M_{q-2} (1/q - 1/(q+2)) / 2
    auto M = [](double p) { return std::tgamma((p + 1.0) / 2.0) / (std::sqrt(kPi) * std::tgamma(p / 2.0 + 1.0)); };
    for (double q : {1.25, 1.5, 1.9}) {
      const auto e = green_energy_inequality(HarmonicData::trig({cplx(0.0, 0.5), 0.0, cplx(0.0, -0.5)}), q);
      const double lhs = 2.0 * M(q) / (q + 2.0) + (q - 1.0) * M(q - 2.0) * (1.0 / q - 1.0 / (q + 2.0)) / 2.0;
      CHECK(std::abs(e.first - lhs) < 1e-8);
      CHECK(std::abs(e.second - M(q)) < 1e-8);
      CHECK(e.first <= e.second);
    }
  }

  TEST_CASE("entropy oracles") {
    CHECK(std::abs(HarmonicData::arc_density(0.0, kPi).entropy() - std::log(2.0)) < 1e-14);
    CHECK(std::abs(HarmonicData::arc_density(1.0, 1.5).entropy() - std::log(2.0 * kPi / 0.5)) < 1e-13);
    CHECK(std::abs(one_plus_cos().entropy() - one_plus_cos_entropy()) < 1e-10);
    CHECK(std::abs(one_plus_cos_entropy() - (1.0 - std::log(2.0))) < 1e-10);
  }

  TEST_CASE("anentropy bound") {
    const auto c = anentropy_bound_check(HarmonicData::trig({1.0}), 0.9);
    CHECK(c.first == doctest::Approx(0.0));
    CHECK(c.second == doctest::Approx(0.0));
    for (double r : {0.5, 0.9, 0.99}) {
      const auto [l, rr] = anentropy_bound_check(one_plus_cos(), r);
      // |dh| = 1/2 everywhere
      CHECK(std::abs(l - 0.5) < 1e-12);
      CHECK(l <= rr);
      const auto [la, ra] = anentropy_bound_check(HarmonicData::arc_density(0.0, kPi), r);
      CHECK(la <= ra);
    }
  }

  TEST_CASE("level set bound examples") {
    int N = 0;
    const double b0 = level_set_bound(0.9, 0.0, 1.0, &N);
    CHECK(b0 == doctest::Approx(3.0));
    CHECK(N == 3);
    const auto rep = level_set_check(mu0_projection_fn(), 0.99, 0.0, 1.0);
    CHECK(rep.measured_length == doctest::Approx(1.0));
    const auto far = level_set_check(mu0_projection_fn(), 0.99, 1e6, 1.0);
    CHECK(far.measured_length == 0.0);
  }

  TEST_CASE("level sets of the extremal projection") {
    const HoloFn g = mu0_projection_fn();
    const double r = 0.99;
    double mx = 0.0;
    for (const auto& v : g.on_circle(r, 1 << 14).values) mx = std::max(mx, std::abs(v));
    const auto rep = level_set_check(g, r, 0.8 * mx, 1.0);
    CHECK(rep.measured_length > 0.0);
    CHECK(rep.measured_length <= rep.bound);
  }

  TEST_CASE("strong bound constants") {
    CHECK(strong_bound_N(0.5).first == 8);
    CHECK(strong_bound_N(0.99).first == 55);
    for (double a = 0.05; a < 0.96; a += 0.05) {
      const auto [N, b] = strong_bound_N(a);
      CHECK(N > 5);
      CHECK(b <= 10.0 * std::pow(1.0 - a, -1.5));
    }
    CHECK(strong_bound_N(0.5).second <= 28.285);
  }

  TEST_CASE("polygon predicate") {
    CHECK(polygon_containment(cplx(1.0, 0.0), 1.0, 3));
    CHECK(polygon_containment(std::polar(0.5, 1.0), 0.6, 5));  // below the level: vacuous
    for (int N : {3, 4, 7, 16})
      for (int k = 0; k < 200; ++k) CHECK(polygon_containment(std::polar(1.0, 0.0317 * k), 1.0, N));
  }

  TEST_CASE("integration by parts of the tail integral") {
    const HoloFn g = mu0_projection_fn();
    for (double r : {0.9, 0.99}) {
      const double direct = tail_integral(g, 0.7, r);
      CHECK(std::abs(tail_integral_by_levels(g, 0.7, r) - direct) < 1e-6 * direct);
    }
  }

  TEST_CASE("Carleman inequality") {
    auto one = carleman_check(PowerSeries({1.0}), 1.0);
    CHECK(one.first == doctest::Approx(1.0));
    CHECK(one.second == doctest::Approx(1.0));
    auto z = carleman_check(PowerSeries({0.0, 1.0}), 2.0);
    CHECK(std::abs(z.first - std::pow(1.0 / 3.0, 0.25)) < 1e-12);
    CHECK(std::abs(z.second - 1.0) < 1e-12);
    auto lin = carleman_check(PowerSeries({1.0, 1.0}), 1.0);
    // ||1+z||_{A^2}^2 = 1 + 1/2
    CHECK(std::abs(lin.first - std::sqrt(1.5)) < 1e-10);
    CHECK(lin.first <= lin.second);
  }
}
