#include "diskwork/registry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "diskwork/beltrami.hpp"
#include "diskwork/bloch.hpp"
#include "diskwork/conformal.hpp"
#include "diskwork/dimension.hpp"
#include "diskwork/extremal.hpp"
#include "diskwork/levelsets.hpp"
#include "diskwork/transforms.hpp"
#include "diskwork/variance.hpp"

namespace dw {

namespace {

CheckResult table(std::vector<std::string> cols) {
  CheckResult r;
  r.table.columns = std::move(cols);
  return r;
}

void row(CheckResult& r, std::vector<Cell> cells) { r.table.rows.push_back(std::move(cells)); }

void require(CheckResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.pass = false;
    if (r.note.empty()) r.note = what;
  }
}

std::vector<Symbol> bounded_corpus(unsigned seed) {
  std::vector<Symbol> c{Symbol::constant(1.0), Symbol::constant(cplx(0.0, -1.0)), Symbol::mu0(),
                        Symbol::conjugate(), Symbol::monomial(0, 2), Symbol::monomial(1, 2)};
  for (unsigned k = 0; k < 4; ++k) c.push_back(Symbol::phase_random(seed + k));
  return c;
}

// ---- projection ------------------------------------------------------------

CheckResult closed_form_projection(const CheckConfig&) {
  auto r = table({"x", "y", "abs_error"});
  const auto p = bergman_project(Symbol::mu0(), 2047);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const cplx z = std::polar(0.99 * (k + 1) / 20.0, 2.4 * k);
    const double e = std::abs(p.series(z) - mu0_projection(z));
    worst = std::max(worst, e);
    row(r, {z.real(), z.imag(), e});
  }
  require(r, worst < 1e-8, "projection differs from closed form");
  return r;
}

CheckResult pointwise_projection_bound(const CheckConfig& cfg) {
  auto r = table({"symbol", "max_ratio"});
  for (const auto& mu : bounded_corpus(cfg.seed)) {
    const HoloFn g = projected(mu, 127);
    double worst = 0.0;
    for (double rad : {0.2, 0.6, 0.9, 0.99})
      for (int k = 0; k < 32; ++k) {
        const cplx z = std::polar(rad, 2.0 * kPi * k / 32.0);
        worst = std::max(worst, std::abs(g(z)) / (std::log(1.0 / (1.0 - rad * rad)) / (rad * rad)));
      }
    row(r, {mu.name(), worst});
    require(r, worst <= 1.0 + 1e-8, "pointwise bound on P mu violated");
  }
  return r;
}

CheckResult projection_bloch_bound(const CheckConfig& cfg) {
  auto r = table({"symbol", "seminorm", "bound"});
  for (const auto& mu : bounded_corpus(cfg.seed)) {
    const double s = bloch_seminorm(projected(mu, 127), {5, true});
    row(r, {mu.name(), s, 8.0 / kPi});
    require(r, s <= 8.0 / kPi + 1e-8, "Bloch seminorm of P mu above 8/pi");
  }
  return r;
}

CheckResult dilate_identities(const CheckConfig& cfg) {
  auto r = table({"r", "dilate_gap", "pairing_gap"});
  const PowerSeries f = random_bloch_polynomial(cfg.seed + 1, 8);
  const PowerSeries g = random_bloch_polynomial(cfg.seed + 2, 8);
  const std::vector<cplx> hn{cplx(0.1, -0.3), cplx(0.4, 0.1), 1.0, cplx(0.4, -0.1), cplx(0.1, 0.3)};
  for (double rad : {0.3, 0.7, 0.95}) {
    const auto d = dilate_symmetry(f, g, rad);
    const auto c = circle_disk_pairing(g, hn, rad);
    row(r, {rad, std::abs(d.first - d.second), std::abs(c.first - c.second)});
    require(r, std::abs(d.first - d.second) < 1e-10 && std::abs(c.first - c.second) < 1e-10,
            "dilate or pairing identity off");
  }
  return r;
}

// ---- variance ------------------------------------------------------------

CheckResult tail_bound_check(const CheckConfig& cfg) {
  auto r = table({"a", "max_I", "bound"});
  const auto ladder = radii_ladder(4, 14);
  std::vector<double> as;
  for (int k = 1; k <= 9; ++k) as.push_back(0.1 * k);
  std::vector<double> worst(as.size(), 0.0);
  for (const auto& mu : bounded_corpus(cfg.seed)) {
    const HoloFn g = projected(mu, 127);
    for (double rad : ladder) {
      const auto v = tail_integrals(g, as, rad);
      for (std::size_t i = 0; i < as.size(); ++i) worst[i] = std::max(worst[i], v[i]);
    }
  }
  for (std::size_t i = 0; i < as.size(); ++i) {
    const double b = 10.0 * std::pow(1.0 - as[i], -1.5);
    row(r, {as[i], worst[i], b});
    require(r, worst[i] <= b, "tail integral above 10 (1-a)^-3/2");
  }
  return r;
}

CheckResult sharpness(const CheckConfig&) {
  auto r = table({"a", "r", "I", "lower"});
  const auto ladder = radii_ladder(4, 14);
  for (double a : {1.5, 2.0, 4.0}) {
    double prev = 0.0;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      const auto [lhs, rhs] = lower_bound_check(a, ladder[i]);
      row(r, {a, ladder[i], lhs, rhs});
      require(r, lhs >= rhs, "tail integral below the extremal lower bound");
      if (i + 6 >= ladder.size() && i > 0) require(r, lhs > prev, "tail integral not increasing");
      prev = lhs;
    }
  }
  return r;
}

CheckResult spectrum_examples(const CheckConfig&) {
  auto r = table({"function", "t", "beta_hat", "envelope"});
  const auto ladder = radii_ladder(4, 16);
  const double env = std::min(2.0 * 2.0 / 4.0, 2.0 - 1.0) + 0.05;  // min(|t|^2/4, |t|-1) at t = 2
  const auto a = exp_type_spectrum(log_kernel_fn(), 2.0, ladder);
  const auto b = exp_type_spectrum(mu0_lifted_fn(), 2.0, ladder);
  row(r, {std::string("log kernel"), 2.0, a.beta_hat, env});
  row(r, {std::string("lifted extremal"), 2.0, b.beta_hat, env});
  require(r, std::abs(a.beta_hat - 1.0) <= 0.02 && std::abs(b.beta_hat - 1.0) <= 0.05, "spectrum slope off");
  require(r, a.beta_hat <= env && b.beta_hat <= env, "slope above the spectrum envelope");
  return r;
}

CheckResult makarov(const CheckConfig& cfg) {
  auto r = table({"seed", "max_variance_ratio", "max_exp_ratio"});
  const auto ladder = radii_ladder(4, 12);
  for (unsigned k = 0; k < 10; ++k) {
    const HoloFn g(random_bloch_polynomial(cfg.seed + k, 10));
    double vr = 0.0, er = 0.0;
    for (double rad : ladder) {
      vr = std::max(vr, mean_square(g, rad) / log_normalizer(rad));
      for (double tau : {1.5, 2.0, 4.0}) er = std::max(er, exp_square_integral(g, tau, rad) / (tau / (tau - 1.0)));
    }
    row(r, {static_cast<long long>(cfg.seed + k), vr, er});
    require(r, vr <= 1.0 + 1e-6 && er <= 1.0 + 1e-6, "finite-radius variance inequality violated");
  }
  return r;
}

CheckResult marshall(const CheckConfig& cfg) {
  auto r = table({"samples", "violations", "max_ratio"});
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0;
  double worst = 0.0;
  const int n = 500;
  for (int i = 0; i < n; ++i) {
    const HoloFn g(random_bloch_polynomial(static_cast<unsigned>(rng() % 100000), 6));
    const double sigma = 0.5 + 1.5 * u(rng);
    const cplx t = std::polar(3.0 * u(rng), 2.0 * kPi * u(rng));
    const double rad = 1.0 - std::pow(10.0, -0.3 - 2.0 * u(rng));
    const auto [lhs, rhs] = marshall_bound_check(g, sigma, t, rad);
    if (std::isfinite(rhs)) worst = std::max(worst, lhs / rhs);
    if (lhs > rhs * (1.0 + 1e-10)) ++bad;
  }
  row(r, {static_cast<long long>(n), static_cast<long long>(bad), worst});
  require(r, bad == 0, "modulus-squared inequality violated");
  return r;
}

CheckResult moments(const CheckConfig&) {
  auto r = table({"q", "r", "lhs", "rhs"});
  const HoloFn g = mu0_projection_fn();
  for (double q : {1.0, 2.0, 4.0})
    for (double rad : {0.9, 0.99, 0.999}) {
      const auto [lhs, rhs] = moment_bound_check(g, q, rad, 1.0);
      row(r, {q, rad, lhs, rhs});
      require(r, lhs <= rhs, "moment bound violated");
    }
  return r;
}

// ---- bloch -------------------------------------------------------------

CheckResult decomposition(const CheckConfig& cfg) {
  auto r = table({"seed", "nu_sup", "G_sup", "G_prime_seminorm", "residual"});
  for (unsigned k = 0; k < 4; ++k) {
    const PowerSeries p = random_bloch_polynomial(cfg.seed + k, 10);
    const auto d = bloch_decompose(p);
    row(r, {static_cast<long long>(cfg.seed + k), d.nu_sup, d.G_sup, d.G_prime_seminorm, d.residual});
    require(r, d.nu_sup <= 1.0 + 1e-6 && d.G_sup <= 6.0 + 1e-6 && d.residual < 1e-8,
            "decomposition bounds violated");
    require(r, d.G_prime_seminorm <= 12.0 + 1e-6, "derivative of G above 12");
  }
  return r;
}

CheckResult constant_five(const CheckConfig&) {
  auto r = table({"x", "y", "integral"});
  for (cplx z : {cplx(0.0), cplx(0.5), cplx(0.9), cplx(0.0, 0.99), cplx(-0.7, 0.7)}) {
    const double v = constant5_integral(z);
    row(r, {z.real(), z.imag(), v});
    require(r, v <= 5.0, "weight integral above 5");
  }
  return r;
}

CheckResult growth_and_quotient(const CheckConfig& cfg) {
  auto r = table({"seed", "growth_ratio", "quotient_max"});
  for (unsigned k = 0; k < 4; ++k) {
    const PowerSeries p = random_bloch_polynomial(cfg.seed + 10 + k, 8);
    double gr = 0.0;
    for (double rad : {0.3, 0.8, 0.99})
      for (int m = 0; m < 64; ++m) {
        const cplx z = std::polar(rad, 2.0 * kPi * m / 64.0);
        gr = std::max(gr, std::abs(p(z)) / (0.5 * std::log((1.0 + rad) / (1.0 - rad))));
      }
    const double q = quotient_weight_max(HoloFn(p.diff()));
    row(r, {static_cast<long long>(cfg.seed + 10 + k), gr, q});
    require(r, gr <= 1.0 + 1e-9 && q <= 1.0 + 1e-6, "growth or quotient bound violated");
  }
  return r;
}

// ---- levelsets -------------------------------------------------------------

CheckResult green(const CheckConfig&) {
  auto r = table({"field", "gap"});
  const std::vector<std::pair<std::string, std::pair<std::function<cplx(cplx)>, std::function<cplx(cplx)>>>> fields{
      {"one", {[](cplx) { return cplx(1.0); }, [](cplx) { return cplx(0.0); }}},
      {"|z|^2", {[](cplx z) { return cplx(std::norm(z)); }, [](cplx) { return cplx(1.0); }}},
      {"|z|^4", {[](cplx z) { return cplx(std::norm(z) * std::norm(z)); }, [](cplx z) { return cplx(4.0 * std::norm(z)); }}},
      {"z^2 conj z", {[](cplx z) { return z * z * std::conj(z); }, [](cplx z) { return 2.0 * z; }}},
  };
  for (const auto& [name, f] : fields) {
    const auto [lhs, rhs] = green_identity_check(f.first, f.second);
    row(r, {name, std::abs(lhs - rhs)});
    require(r, std::abs(lhs - rhs) < 1e-8, "Green identity off");
  }
  for (double q : {1.25, 1.5, 2.0}) {
    const auto [lhs, rhs] = green_energy_inequality(HarmonicData::arc(0.5, 2.5, 1.0), q);
    row(r, {"energy arc q=" + std::to_string(q), rhs - lhs});
    require(r, lhs <= rhs, "energy inequality violated");
  }
  return r;
}

CheckResult anentropy(const CheckConfig&) {
  auto r = table({"density", "r", "lhs", "rhs"});
  for (double len : {0.5, 2.0, kPi}) {
    const auto h = HarmonicData::arc_density(0.0, len);
    for (double rad : {0.5, 0.9, 0.99}) {
      const auto [lhs, rhs] = anentropy_bound_check(h, rad);
      row(r, {"arc " + std::to_string(len), rad, lhs, rhs});
      require(r, lhs <= rhs, "anentropy bound violated");
    }
  }
  return r;
}

CheckResult level_sets(const CheckConfig&) {
  auto r = table({"r", "eta", "measured", "bound"});
  const HoloFn g = mu0_projection_fn();
  for (double rad : {0.9, 0.99}) {
    double mx = 0.0;
    for (const auto& v : g.on_circle(rad, 4096).values) mx = std::max(mx, std::abs(v));
    for (double f : {0.2, 0.5, 0.8}) {
      const auto rep = level_set_check(g, rad, f * mx, 1.0);
      row(r, {rad, rep.eta, rep.measured_length, rep.bound});
      require(r, rep.measured_length <= rep.bound, "level-set length above its bound");
    }
  }
  for (double a = 0.05; a < 0.96; a += 0.15) {
    const auto [N, b] = strong_bound_N(a);
    require(r, N > 5 && b <= 10.0 * std::pow(1.0 - a, -1.5), "assembled constant too large");
  }
  return r;
}

CheckResult levels_identity(const CheckConfig&) {
  auto r = table({"r", "direct", "by_levels"});
  const HoloFn g = mu0_projection_fn();
  for (double rad : {0.9, 0.99}) {
    const double d = tail_integral(g, 0.6, rad);
    const double l = tail_integral_by_levels(g, 0.6, rad);
    row(r, {rad, d, l});
    require(r, std::abs(d - l) <= 1e-6 * d, "integration by parts identity off");
  }
  return r;
}

// ---- conformal ---------------------------------------------------------------

CheckResult goluzin(const CheckConfig& cfg) {
  auto r = table({"map", "max_full_ratio", "max_simple_ratio"});
  std::vector<ExteriorMap> maps{ExteriorMap::joukowski()};
  const NeumannSeries s(Symbol::phase_random(cfg.seed), 24);
  maps.push_back(motion_map(s, 0.5, "motion"));
  for (const auto& m : maps) {
    double fr = 0.0, sr = 0.0;
    for (double R : {1.01, 1.1, 2.0, 10.0})
      for (int k = 0; k < 16; ++k) {
        const auto g = goluzin_check(m, std::polar(R, 2.0 * kPi * k / 16.0 + 0.05));
        if (g.rhs > 0.0) fr = std::max(fr, g.lhs / g.rhs);
        sr = std::max(sr, g.simple_lhs / g.simple_rhs);
      }
    row(r, {m.name(), fr, sr});
    require(r, fr <= 1.0 + 1e-9 && sr <= 1.0 + 1e-9, "Goluzin inequality violated");
  }
  for (int i = 1; i < 100; ++i) {
    const auto [E, K] = elliptic_EK(i / 100.0);
    require(r, E / K <= 1.0 && E / K >= 1.0 - i * i / 1e4, "E/K ratio bounds violated");
  }
  return r;
}

CheckResult distortion(const CheckConfig& cfg) {
  auto r = table({"map", "koebe_bieberbach_max", "nu_sup", "residual"});
  std::vector<SchlichtMap> maps{SchlichtMap::koebe(), SchlichtMap::koebe(1.0), SchlichtMap::random_becker(cfg.seed + 1)};
  for (const auto& m : maps) {
    const double kb = koebe_bieberbach_max(m);
    const auto nu = nu_phi(m, 128);
    row(r, {m.name(), kb, nu.sup, nu.residual});
    require(r, kb <= 4.0 + 1e-7 && nu.sup <= 6.0 && nu.residual < 1e-8, "distortion estimate violated");
  }
  return r;
}

// ---- beltrami -------------------------------------------------------------

CheckResult indicator_motion(const CheckConfig&) {
  auto r = table({"quantity", "max_error"});
  const NeumannSeries s(Symbol::constant(1.0), 8);
  double ed = 0.0, eh = 0.0, eg = 0.0;
  for (double k : {0.2, 0.7})
    for (int m = 0; m < 8; ++m) {
      const cplx zeta = std::polar(1.05, 0.8 * m);
      ed = std::max(ed, std::abs(s.derivative(k, zeta) - (1.0 - k / (zeta * zeta))));
      const cplx z = std::polar(0.9, 0.8 * m);
      eg = std::max(eg, std::abs(G_lambda(s, k, z) - std::log(1.0 - k * z * z) / k));
    }
  const auto ms = motion_coefficients(s, 1.05, 5);
  for (std::size_t j = 1; j <= 6; ++j)
    for (std::size_t k = 0; k < ms.H[j - 1].size(); ++k) {
      const cplx zeta = std::polar(1.05, 2.0 * kPi * k / ms.H[j - 1].size());
      eh = std::max(eh, std::abs(ms.H[j - 1].values[k] + 1.0 / (static_cast<double>(j) * std::pow(zeta, 2.0 * j))));
    }
  row(r, {std::string("derivative"), ed});
  row(r, {std::string("motion coefficients"), eh});
  row(r, {std::string("G"), eg});
  require(r, std::max({ed, eh, eg}) < 1e-12, "indicator motion differs from closed form");
  return r;
}

CheckResult motion_low_order(const CheckConfig& cfg) {
  auto r = table({"symbol", "H1_gap", "H2_gap"});
  for (const Symbol& mu : {Symbol::conjugate(), Symbol::mu0(), Symbol::phase_random(cfg.seed)}) {
    const NeumannSeries s(mu, 24);
    const auto ms = motion_coefficients(s, 1.05, 4);
    double e1 = 0.0, e2 = 0.0;
    for (std::size_t k = 0; k < ms.H[0].size(); ++k) {
      const cplx zeta = std::polar(1.05, 2.0 * kPi * k / ms.H[0].size());
      e1 = std::max(e1, std::abs(ms.H[0].values[k] - beurling_transform_exterior(mu, zeta, 255)));
      e2 = std::max(e2, std::abs(ms.H[1].values[k] - motion_second(s, zeta)));
    }
    row(r, {mu.name(), e1, e2});
    require(r, e1 < 1e-8 && e2 < 1e-8, "contour coefficients differ from the closed forms");
  }
  return r;
}

CheckResult G_bounds(const CheckConfig& cfg) {
  auto r = table({"symbol", "growth_ratio", "derivative_ratio"});
  for (const Symbol& mu : {Symbol::mu0(), Symbol::phase_random(cfg.seed + 3)}) {
    const NeumannSeries s(mu, 24);
    double gr = 0.0, dr = 0.0;
    for (double lam : {0.1, 0.5, 0.9})
      for (double rad : {0.3, 0.8, 0.98})
        for (int k = 0; k < 16; ++k) {
          const cplx z = std::polar(rad, 2.0 * kPi * k / 16.0 + 0.1);
          gr = std::max(gr, std::abs(G_lambda(s, lam, z)) / std::log(1.0 / (1.0 - rad * rad)));
          dr = std::max(dr, (1.0 - rad * rad) * std::abs(G_lambda_dz(s, lam, z)) / (6.0 * rad));
        }
    row(r, {mu.name(), gr, dr});
    require(r, gr <= 1.0 + 1e-6 && dr <= 1.0 + 1e-6, "growth or derivative bound for G violated");
  }
  return r;
}

CheckResult beurling_form(const CheckConfig& cfg) {
  auto r = table({"symbol", "a", "max_I", "bound"});
  for (const Symbol& mu : {Symbol::mu0(), Symbol::constant(1.0), Symbol::phase_random(cfg.seed)}) {
    const NeumannSeries s(mu, 1);
    for (double a : {0.3, 0.6, 0.9}) {
      double m = 0.0;
      for (double R : {1.1, 1.01, 1.001, 1.0001}) m = std::max(m, beurling_tail_integral(s, a, R));
      const double b = 10.0 * std::pow(1.0 - a, -1.5);
      row(r, {mu.name(), a, m, b});
      require(r, m <= b, "Beurling-form tail integral above its bound");
    }
  }
  return r;
}

CheckResult plancherel(const CheckConfig&) {
  auto r = table({"symbol", "lhs", "rhs", "allowance"});
  for (const Symbol& mu : {Symbol::constant(1.0), Symbol::mu0()}) {
    const NeumannSeries s(mu, 24);
    const auto ms = motion_coefficients(s, 1.05, 3);
    const auto rep = plancherel_average_check(ms, 0.5);
    row(r, {mu.name(), rep.lhs, rep.rhs, rep.allowance});
    require(r, rep.lhs <= rep.rhs + rep.allowance, "averaging inequality violated");
  }
  return r;
}

CheckResult spectrum_bound(const CheckConfig&) {
  auto r = table({"k", "splice_t", "quadratic", "linear"});
  for (double k : {0.05, 0.1, 0.2, 0.5}) {
    const auto b = bk_bound(k, bk_splice(k));
    row(r, {k, b.t_abs, b.quadratic, b.linear});
    require(r, std::abs(b.quadratic - b.linear) < 1e-12, "branches disagree at the splice");
  }
  return r;
}

// ---- dimension -----------------------------------------------------------

CheckResult dimension_root(const CheckConfig&) {
  auto r = table({"k", "t_k", "F", "dF_dt"});
  for (int i = 1; i <= 20; ++i) {
    const double k = 0.2 * i / 20.0;
    const double t = t_k(k);
    row(r, {k, t, F_quadratic(k, t), F_dt(k, t)});
    require(r, std::abs(F_quadratic(k, t)) < 1e-12 && F_dt(k, t) < 0.0, "root or derivative sign off");
  }
  for (int i = 0; i < 1000; ++i) {
    const double k = i / 1000.0;
    require(r, std::abs(symmetrize(desymmetrize(k)) - k) < 1e-14, "symmetrization not inverse");
  }
  return r;
}

CheckResult dimension_gap(const CheckConfig&) {
  auto r = table({"k_prime", "bound", "gap_over_cube"});
  for (double kp : {0.05, 0.02, 0.01, 0.005, 0.001}) {
    const auto d = dim_bound(kp);
    row(r, {kp, d.t_k, d.asymptotic_gap / (kp * kp * kp)});
  }
  // informational: the cubic coefficient is reported, not bounded here
  return r;
}

std::vector<Check> build() {
  return {
      {"projection", "closed-form", "P mu0 equals log(1/(1-z))/z^2 - 1/z", closed_form_projection},
      {"projection", "pointwise", "|P mu(z)| <= |mu| log(1/(1-|z|^2))/|z|^2", pointwise_projection_bound},
      {"projection", "bloch-image", "Bloch seminorm of P mu at most 8/pi", projection_bloch_bound},
      {"projection", "dilates", "dilate symmetry and circle-disk pairing", dilate_identities},
      {"tail", "tail-bound", "I_g(a,r) <= 10 (1-a)^-3/2 for a < 1", tail_bound_check},
      {"tail", "sharpness", "I(a,r) >= e^-2 (1-r^2)^-(a-1)/a for the extremal symbol", sharpness},
      {"tail", "moments", "moment bound for |g_r|^q", moments},
      {"spectrum", "examples", "exponential type spectrum slope at t = 2", spectrum_examples},
      {"variance", "makarov", "variance ratio <= 1 and exp integral <= tau/(tau-1)", makarov},
      {"variance", "marshall", "modulus-squared exponential inequality", marshall},
      {"bloch", "decomposition", "g = z^2 P nu + G with |nu| <= 1, |G| <= 6", decomposition},
      {"bloch", "constant-five", "weight integral at most 5", constant_five},
      {"bloch", "growth", "growth and quotient estimates", growth_and_quotient},
      {"levelsets", "green", "Green identity and energy inequality", green},
      {"levelsets", "anentropy", "gradient bounded by entropy", anentropy},
      {"levelsets", "level-sets", "s-length of level sets and assembled constant", level_sets},
      {"levelsets", "by-levels", "tail integral from the distribution function", levels_identity},
      {"conformal", "goluzin", "Goluzin inequality and E/K ratio bounds", goluzin},
      {"conformal", "distortion", "Koebe-Bieberbach estimate and distortion field", distortion},
      {"beltrami", "indicator", "closed-form motion for the indicator", indicator_motion},
      {"beltrami", "low-order", "H1 and H2 closed forms against the contour", motion_low_order},
      {"beltrami", "G-bounds", "growth and derivative bounds for G", G_bounds},
      {"beltrami", "beurling-form", "Beurling-form tail bound", beurling_form},
      {"beltrami", "averaging", "geometric-arithmetic averaging over lambda", plancherel},
      {"beltrami", "splice", "spectrum bound branches meet", spectrum_bound},
      {"dimension", "root", "F(k, t_k) = 0 with negative slope", dimension_root},
      {"dimension", "gap", "dimension bound minus 1 + k'^2 (report)", dimension_gap},
  };
}

}  // namespace

const std::vector<Check>& check_registry() {
  static const std::vector<Check> reg = build();
  return reg;
}

std::vector<std::string> check_suites() {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& c : check_registry())
    if (seen.insert(c.suite).second) out.push_back(c.suite);
  return out;
}

}  // namespace dw
