#include "diskwork/levelsets.hpp"

#include <algorithm>
#include <cmath>

#include "diskwork/variance.hpp"

namespace dw {

namespace {

// Disk integral of a real integrand on rings graded toward the circle. The
// angular count on ring r follows factor / (1 - s r), s being the radius at
// which the integrand concentrates.
double graded_disk_integral(const std::function<double(cplx)>& f, double s, int levels = 24,
                            std::size_t nodes = 16, std::size_t max_angles = std::size_t{1} << 16) {
  std::vector<double> breaks;
  for (int k = 1; k <= levels; ++k) breaks.push_back(1.0 - std::exp2(-k));
  const PolarGrid grid = polar_grid(nodes, 256, breaks);
  double total = 0.0;
  for (std::size_t i = 0; i < grid.rings(); ++i) {
    const double r = grid.radii[i];
    const double want = 64.0 / (1.0 - s * r);
    const std::size_t n = want >= static_cast<double>(max_angles) ? max_angles : angular_count(s * r, 64.0, 256);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      acc += f(std::polar(r, 2.0 * kPi * (k + 0.5) / static_cast<double>(n)));
    total += grid.weights[i] * acc / static_cast<double>(n);
  }
  return total;
}

// Mean over the circle |z| = r of f, which may blow up like |h|^{q-2} at the
// zeros of h. The ring is split at those zeros and each piece is integrated
// with a tanh-sinh rule, which absorbs the endpoint singularities. f receives
// the angle and |h| there; very close to a root |h| comes from the linear model,
// since roundoff in the root location would otherwise dominate.
double split_ring_mean(const std::function<double(double)>& hv, const std::function<double(double, double)>& f) {
  const std::size_t scan = 1024;
  std::vector<double> roots;
  // offset keeps scan points off zeros at rational angles
  const double off = 0.3819660112501051;
  double prev = hv(2.0 * kPi * off / scan);
  for (std::size_t k = 1; k <= scan; ++k) {
    const double t = 2.0 * kPi * (k + off) / scan;
    const double cur = hv(t);
    if ((prev < 0.0) != (cur < 0.0)) {
      double lo = 2.0 * kPi * (k - 1 + off) / scan, hi = t;
      const bool neg_lo = prev < 0.0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((hv(mid) < 0.0) == neg_lo ? lo : hi) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  if (roots.empty()) {
    const std::size_t n = 512;
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double t = 2.0 * kPi * (k + 0.5) / n;
      acc += f(t, std::abs(hv(t)));
    }
    return acc / n;
  }
  const double step = 1.0 / 16.0;
  double total = 0.0;
  std::vector<double> slope;
  for (double t : roots) slope.push_back(std::abs(hv(t + 1e-6) - hv(t - 1e-6)) / 2e-6);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::size_t i1 = i + 1 < roots.size() ? i + 1 : 0;
    const double a = roots[i];
    const double b = i + 1 < roots.size() ? roots[i + 1] : roots[0] + 2.0 * kPi;
    const double half = 0.5 * (b - a);
    for (int j = -72; j <= 72; ++j) {
      const double u = 0.5 * kPi * std::sinh(j * step);
      const double w = half * 0.5 * kPi * std::cosh(j * step) / (std::cosh(u) * std::cosh(u));
      // distance to the nearer endpoint, without cancellation
      const double d = (b - a) / (1.0 + std::exp(2.0 * std::abs(u)));
      if (d <= 0.0) continue;
      const double t = u < 0.0 ? a + d : b - d;
      const double v = d < 1e-8 ? (u < 0.0 ? slope[i] : slope[i1]) * d : std::abs(hv(t));
      total += step * w * f(t, v);
    }
  }
  return total / (2.0 * kPi);
}

double wrap_positive(double a) {
  a = std::fmod(a, 2.0 * kPi);
  return a < 0.0 ? a + 2.0 * kPi : a;
}

}  // namespace

HarmonicData HarmonicData::trig(std::vector<cplx> coeffs) {
  if (coeffs.size() % 2 == 0) throw NumericError("coefficients must be indexed -K..K");
  HarmonicData h;
  h.c_ = std::move(coeffs);
  const std::size_t K = h.c_.size() / 2;
  for (std::size_t n = 1; n <= K; ++n)
    if (std::abs(h.c_[K + n] - std::conj(h.c_[K - n])) > 1e-14 * (1.0 + std::abs(h.c_[K + n])))
      throw NumericError("boundary data must be real");
  return h;
}

HarmonicData HarmonicData::arc(double alpha, double beta, double height) {
  if (!(beta > alpha) || beta - alpha >= 2.0 * kPi) throw NumericError("invalid arc");
  HarmonicData h;
  h.arc_ = true;
  h.alpha_ = alpha;
  h.beta_ = beta;
  h.height_ = height;
  return h;
}

HarmonicData HarmonicData::arc_density(double alpha, double beta) {
  return arc(alpha, beta, 2.0 * kPi / (beta - alpha));
}

double HarmonicData::boundary(double theta) const {
  if (arc_) {
    const double t = wrap_positive(theta - alpha_);
    return t < beta_ - alpha_ ? height_ : 0.0;
  }
  const long K = static_cast<long>(c_.size() / 2);
  cplx s = 0.0;
  for (long n = -K; n <= K; ++n) s += c_[static_cast<std::size_t>(n + K)] * std::polar(1.0, n * theta);
  return s.real();
}

double HarmonicData::value(cplx z) const {
  if (arc_) {
    const cplx ea = std::polar(1.0, alpha_), eb = std::polar(1.0, beta_);
    const double ang = wrap_positive(std::arg((eb - z) / (ea - z)));
    return height_ * (ang / kPi - (beta_ - alpha_) / (2.0 * kPi));
  }
  const std::size_t K = c_.size() / 2;
  cplx acc = 0.0;
  for (std::size_t n = K; n >= 1; --n) acc = (acc + c_[K + n]) * z;
  return c_[K].real() + 2.0 * acc.real();
}

cplx HarmonicData::dh(cplx z) const {
  if (arc_) {
    const cplx ea = std::polar(1.0, -alpha_), eb = std::polar(1.0, -beta_);
    const cplx i(0.0, 1.0);
    return height_ / (2.0 * kPi * i) * (ea / (1.0 - ea * z) - eb / (1.0 - eb * z));
  }
  const std::size_t K = c_.size() / 2;
  cplx acc = 0.0;
  for (std::size_t j = K; j-- > 0;) acc = acc * z + static_cast<double>(j + 1) * c_[K + j + 1];
  return acc;
}

bool HarmonicData::nonnegative() const {
  if (arc_) return height_ >= 0.0;
  const std::size_t n = 4096;
  for (std::size_t k = 0; k < n; ++k)
    if (boundary(2.0 * kPi * k / n) < -1e-12) return false;
  return true;
}

double HarmonicData::boundary_power_mean(double q) const {
  if (arc_) return std::pow(std::abs(height_), q) * (beta_ - alpha_) / (2.0 * kPi);
  const std::size_t n = 1 << 14;
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += std::pow(std::abs(boundary(2.0 * kPi * k / n)), q);
  return acc / n;
}

double HarmonicData::entropy() const {
  auto xlogx = [](double t) { return t > 0.0 ? t * std::log(t) : 0.0; };
  if (arc_) return xlogx(height_) * (beta_ - alpha_) / (2.0 * kPi);
  const std::size_t n = 1 << 14;
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += xlogx(boundary(2.0 * kPi * k / n));
  return acc / n;
}

std::pair<cplx, cplx> green_identity_check(const std::function<cplx(cplx)>& u,
                                           const std::function<cplx(cplx)>& lap_u) {
  const PolarGrid grid = polar_grid(48, 256);
  const DiskField fu = sample_field(grid, u);
  const DiskField fl = sample_field(grid, [&](cplx z) { return (1.0 - std::norm(z)) * lap_u(z); });
  CircleSamples cs;
  cs.radius = 1.0;
  cs.values.resize(256);
  for (std::size_t k = 0; k < 256; ++k) cs.values[k] = u(std::polar(1.0, 2.0 * kPi * k / 256.0));
  return {disk_integral(fu) + disk_integral(fl), circle_integral(cs)};
}

std::pair<double, double> green_energy_inequality(const HarmonicData& h, double q) {
  if (!(q > 1.0 && q <= 2.0)) throw NumericError("exponent must lie in (1,2]");
  auto energy_at = [&](cplx z, double v) {
    if (v == 0.0) return 0.0;
    return (1.0 - std::norm(z)) * std::norm(h.dh(z)) * std::pow(v, q - 2.0);
  };
  auto power = [&](cplx z) { return std::pow(std::abs(h.value(z)), q); };
  auto energy = [&](cplx z) { return energy_at(z, std::abs(h.value(z))); };
  if (h.discontinuous()) {
    // arc data is positive inside, so only the boundary concentration matters
    const double a = graded_disk_integral(power, 1.0);
    const double b = graded_disk_integral(energy, 1.0);
    return {a + (q - 1.0) * b, h.boundary_power_mean(q)};
  }
  // trig data may change sign; split each ring at the zero set
  // zero lines through the origin make the ring means behave like r^{q-2}; grade toward 0
  std::vector<double> breaks;
  for (int k = 30; k >= 4; --k) breaks.push_back(std::exp2(-k));
  for (double b : {0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875}) breaks.push_back(b);
  const PolarGrid grid = polar_grid(16, 1, breaks);
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < grid.rings(); ++i) {
    const double r = grid.radii[i];
    auto hv = [&](double t) { return h.value(std::polar(r, t)); };
    a += grid.weights[i] * split_ring_mean(hv, [&](double, double v) { return std::pow(v, q); });
    b += grid.weights[i] * split_ring_mean(hv, [&](double t, double v) { return energy_at(std::polar(r, t), v); });
  }
  return {a + (q - 1.0) * b, h.boundary_power_mean(q)};
}

std::pair<double, double> anentropy_bound_check(const HarmonicData& h, double r) {
  if (!(r > 0.0 && r < 1.0)) throw NumericError("radius outside (0,1)");
  const double lhs = graded_disk_integral([&](cplx z) { return std::abs(h.dh(r * z)); }, r);
  const double ent = std::max(0.0, h.entropy());
  const double rhs = std::sqrt(ent) * std::sqrt(log_normalizer(r)) / (r * r);
  return {lhs, rhs};
}

double level_set_bound(double r, double eta, double mu_sup, int* best_N) {
  const double L = log_normalizer(r);
  const double base = r * r * r * r * eta * eta / (mu_sup * mu_sup * L);
  double best = kInf;
  int arg = 3;
  for (int N = 3; N <= 4096; ++N) {
    const double c = std::cos(kPi / N);
    const double v = N * std::exp(-base * c * c);
    if (v < best) {
      best = v;
      arg = N;
    }
  }
  if (best_N) *best_N = arg;
  return best;
}

LevelSetReport level_set_check(const HoloFn& g, double r, double eta, double mu_sup) {
  LevelSetReport rep;
  rep.r = r;
  rep.eta = eta;
  const std::size_t n = dilate_samples(g, r);
  std::size_t count = 0;
  g.circle_blocks(r, n, [&](std::span<const cplx> b) {
    for (const auto& v : b)
      if (std::abs(v) >= eta) ++count;
  });
  rep.measured_length = static_cast<double>(count) / static_cast<double>(n);
  rep.bound = level_set_bound(r, eta, mu_sup, &rep.best_N);
  return rep;
}

double tail_integral_by_levels(const HoloFn& g, double a, double r, std::size_t panels) {
  const double L = log_normalizer(r);
  const double c = a * r * r * r * r / L;
  const std::size_t n = dilate_samples(g, r);
  std::vector<double> mod;
  mod.reserve(n);
  g.circle_blocks(r, n, [&](std::span<const cplx> b) {
    for (const auto& v : b) mod.push_back(std::abs(v));
  });
  std::sort(mod.begin(), mod.end());
  const double top = mod.back();
  if (top == 0.0) return 1.0;
  if (c * top * top > kExpCap) return kInf;
  auto nu = [&](double eta) {
    const auto it = std::upper_bound(mod.begin(), mod.end(), eta);
    return static_cast<double>(mod.end() - it) / static_cast<double>(n);
  };
  const QuadRule gl = gauss_legendre(4, 0.0, 1.0);
  const double h = top / static_cast<double>(panels);
  double acc = 0.0;
  for (std::size_t p = 0; p < panels; ++p)
    for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
      const double eta = (p + gl.nodes[k]) * h;
      acc += gl.weights[k] * h * std::exp(c * eta * eta) * 2.0 * c * eta * nu(eta);
    }
  return 1.0 + acc;
}

std::pair<int, double> strong_bound_N(double a) {
  if (!(a > 0.0 && a < 1.0)) throw NumericError("a outside (0,1)");
  const int N = static_cast<int>(std::ceil(kPi * std::sqrt(3.0) / std::sqrt(1.0 - a)));
  const double c = std::cos(kPi / N);
  return {N, 1.0 + a * N / (c * c - a)};
}

bool polygon_containment(cplx w, double eta, int N) {
  if (std::abs(w) < eta) return true;
  double best = -kInf;
  for (int k = 0; k < N; ++k) best = std::max(best, (std::polar(1.0, 2.0 * kPi * k / N) * w).real());
  return best >= eta * std::cos(kPi / N) * (1.0 - 1e-15);
}

std::pair<double, double> carleman_check(const PowerSeries& f, double p) {
  if (p <= 0.0) throw NumericError("p must be positive");
  const std::size_t deg = f.degree();
  const std::size_t N = std::max<std::size_t>(1024, next_pow2(8 * (deg + 1)));
  const PolarGrid grid = polar_grid(std::max<std::size_t>(64, 2 * deg + 16), N);
  const DiskField v = sample_field(grid, [&](cplx z) { return cplx(std::pow(std::abs(f(z)), 2.0 * p)); });
  CircleSamples cs = sample_circle(f, 1.0, 4 * N);
  for (auto& x : cs.values) x = std::pow(std::abs(x), p);
  return {std::pow(disk_integral(v).real(), 1.0 / (2.0 * p)), std::pow(circle_integral(cs).real(), 1.0 / p)};
}

}  // namespace dw
