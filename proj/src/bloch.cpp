#include "diskwork/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "diskwork/transforms.hpp"

namespace dw {

namespace {

std::vector<double> seminorm_radii(int level) {
  std::vector<double> r;
  const std::size_t m = std::size_t{4} << level;
  for (std::size_t k = 0; k < m; ++k) r.push_back(static_cast<double>(k) / static_cast<double>(m));
  const int steps = 4 * 30;
  for (int k = 1; k <= steps; ++k) r.push_back(1.0 - std::exp2(-k / 4.0));
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::size_t seminorm_angles(int level) { return std::size_t{16} << level; }

double bloch_density(const HoloFn& g, cplx z) { return (1.0 - std::norm(z)) * std::abs(g.deriv(z)); }

}  // namespace

std::vector<cplx> seminorm_nodes(int level) {
  std::vector<cplx> out;
  const std::size_t n = seminorm_angles(level);
  for (double r : seminorm_radii(level)) {
    if (r == 0.0) {
      out.push_back(0.0);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k)
      out.push_back(std::polar(r, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n)));
  }
  return out;
}

SeminormResult bloch_seminorm_detail(const HoloFn& g, const SeminormOptions& opt) {
  const auto nodes = seminorm_nodes(opt.level);
  std::vector<std::pair<double, cplx>> best;
  SeminormResult res;
  for (const auto& z : nodes) {
    const double v = bloch_density(g, z);
    if (v > res.value) {
      res.value = v;
      res.argmax = z;
    }
    best.emplace_back(v, z);
  }
  if (!opt.refine) return res;
  const std::size_t keep = std::min<std::size_t>(8, best.size());
  std::partial_sort(best.begin(), best.begin() + keep, best.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
  const double dth0 = 2.0 * kPi / static_cast<double>(seminorm_angles(opt.level));
  for (std::size_t s = 0; s < keep; ++s) {
    double r = std::abs(best[s].second), th = std::arg(best[s].second), v = best[s].first;
    double dr = std::max(1e-3, (1.0 - r) * 0.25), dth = dth0;
    for (int it = 0; it < 200 && (dr > 1e-14 || dth > 1e-14); ++it) {
      bool moved = false;
      const double cand[4][2] = {{r + dr, th}, {r - dr, th}, {r, th + dth}, {r, th - dth}};
      for (const auto& c : cand) {
        if (c[0] < 0.0 || c[0] >= 1.0) continue;
        const double w = bloch_density(g, std::polar(c[0], c[1]));
        if (w > v) {
          v = w;
          r = c[0];
          th = c[1];
          moved = true;
        }
      }
      if (!moved) {
        dr *= 0.5;
        dth *= 0.5;
      }
    }
    if (v > res.value) {
      res.value = v;
      res.argmax = std::polar(r, th);
    }
  }
  return res;
}

double bloch_seminorm(const HoloFn& g, const SeminormOptions& opt) {
  return bloch_seminorm_detail(g, opt).value;
}

double omega_weight(double t) {
  if (!(t >= 0.0 && t < 1.0)) throw NumericError("weight argument outside [0,1)");
  if (t < 0.5) return 1.0 / 3.0;
  return t / (2.0 - t * t);
}

Decomposition bloch_decompose(const PowerSeries& g, std::size_t nodes_per_panel) {
  const std::size_t deg = g.degree();
  // q = (g' - g'(0)) / z
  std::vector<cplx> qc;
  for (std::size_t k = 2; k <= deg; ++k) qc.push_back(static_cast<double>(k) * g.coeffs[k]);
  if (qc.empty()) qc.push_back(0.0);
  const PowerSeries q(qc);
  const std::size_t n = nodes_per_panel ? nodes_per_panel : std::max<std::size_t>(32, deg + 24);
  const std::size_t N = std::max<std::size_t>(64, next_pow2(4 * (deg + 2)));
  const PolarGrid grid = polar_grid(n, N, {0.5});

  Decomposition d;
  DiskField diff;
  d.nu = sample_field(grid, [&](cplx z) {
    const double r = std::abs(z);
    return (1.0 - r * r) * omega_weight(r) * q(z);
  });
  diff = sample_field(grid, [&](cplx z) {
    const double r = std::abs(z);
    return (1.0 - r * r) * (1.0 - omega_weight(r)) * q(z);
  });
  for (const auto& v : d.nu.values) d.nu_sup = std::max(d.nu_sup, std::abs(v));

  const long J = static_cast<long>(N / 2 - 1);
  const PowerSeries pnu = bergman_project(Symbol::field(d.nu), J).series.shifted(2);
  const PowerSeries pdiff = bergman_project(Symbol::field(diff), J).series.shifted(2);
  std::vector<cplx> lin{g.coeffs.empty() ? cplx(0.0) : g.coeffs[0], deg >= 1 ? g.coeffs[1] : cplx(0.0)};
  d.G = PowerSeries(lin) + pdiff;

  for (std::size_t i = 0; i < grid.rings(); ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const cplx z = std::polar(grid.radii[i], 2.0 * kPi * static_cast<double>(k) / static_cast<double>(N));
      d.residual = std::max(d.residual, std::abs(g(z) - pnu(z) - d.G(z)));
    }
  const std::size_t nb = 4 * N;
  for (std::size_t k = 0; k < nb; ++k)
    d.G_sup = std::max(d.G_sup, std::abs(d.G(std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(nb)))));
  d.G_prime_seminorm = bloch_seminorm(HoloFn(d.G.diff()));
  return d;
}

double constant5_integral(cplx z) {
  const double a = std::abs(z);
  if (a >= 1.0) throw NumericError("point outside the disk");
  std::vector<double> breaks{0.5};
  for (int k = 2; k <= 40; ++k) breaks.push_back(1.0 - std::exp2(-k));
  PolarGrid grid = polar_grid(24, 256, breaks);
  double total = 0.0;
  for (std::size_t i = 0; i < grid.rings(); ++i) {
    const double r = grid.radii[i];
    const double om = omega_weight(r);
    const double w = (1.0 - om) / om;
    const std::size_t n = angular_count(a * r, 32.0, 256);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx wv = std::polar(r, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
      acc += 1.0 / std::norm(1.0 - z * std::conj(wv));
    }
    total += grid.weights[i] * w * acc / static_cast<double>(n);
  }
  return total;
}

double constant5_check(const std::vector<cplx>& zs) {
  double m = 0.0;
  for (const auto& z : zs) m = std::max(m, constant5_integral(z));
  return m;
}

double quotient_weight_max(const HoloFn& f, int level) {
  const cplx f0 = f(0.0);
  double m = 0.0;
  for (const auto& z : seminorm_nodes(level)) {
    const double r = std::abs(z);
    const cplx qz = r == 0.0 ? f.deriv(0.0) : (f(z) - f0) / z;
    m = std::max(m, (1.0 - r * r) * omega_weight(r) * std::abs(qz));
  }
  return m;
}

PowerSeries random_bloch_polynomial(unsigned seed, int degree) {
  if (degree < 1) throw NumericError("degree must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int j = 1; j <= degree; ++j) c[static_cast<std::size_t>(j)] = cplx(nd(rng), nd(rng)) / static_cast<double>(j);
  PowerSeries p(c);
  return (1.0 / bloch_seminorm(HoloFn(p))) * p;
}

}  // namespace dw
