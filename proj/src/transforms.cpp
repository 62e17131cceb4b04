#include "diskwork/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dw {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::function<cplx(cplx)> guarded(const Symbol& mu) {
  return [&mu](cplx w) {
    cplx v = mu(w);
    if (!finite(v)) throw NumericError("symbol not in L∞");
    return v;
  };
}

// Ring Fourier bins of mu on radius r with at least p bins.
std::vector<cplx> symbol_ring_bins(const Symbol& mu, double r, std::size_t p,
                                   const ProjectionOptions& opt) {
  std::size_t n = p;
  if (mu.boundary_singular()) {
    const double want = opt.angular_factor / (1.0 - r);
    if (want > static_cast<double>(n)) n = p * static_cast<std::size_t>(std::ceil(want / static_cast<double>(p)));
  }
  return ring_bins_streamed(guarded(mu), r, n, p);
}

struct RingData {
  std::vector<double> radii, weights;
  std::vector<std::vector<cplx>> bins;  // FFT ordering, length p
  std::size_t p = 0;
};

RingData rings_for(const Symbol& mu, std::size_t J, const ProjectionOptions& opt,
                   const std::vector<double>& breaks = {}) {
  RingData d;
  if (mu.is_field()) {
    const DiskField& f = mu.field_data();
    f.validate();
    d.p = f.grid.counts.front();
    for (std::size_t i = 0; i < f.grid.rings(); ++i) {
      d.radii.push_back(f.grid.radii[i]);
      d.weights.push_back(f.grid.weights[i]);
      d.bins.push_back(ring_fourier(f, i));
    }
    return d;
  }
  const std::size_t nr = opt.radial_nodes ? opt.radial_nodes : J + 8;
  d.p = std::max(opt.min_angular, next_pow2(2 * (J + 1)));
  PolarGrid g = polar_grid(nr, d.p, breaks);
  d.radii = g.radii;
  d.weights = g.weights;
  for (double r : g.radii) d.bins.push_back(symbol_ring_bins(mu, r, d.p, opt));
  return d;
}

std::size_t default_J(const Symbol& mu) {
  if (mu.is_field()) {
    const auto& g = mu.field_data().grid;
    if (!g.uniform()) throw NumericError("field symbols need a uniform angular count");
    return g.counts.front() / 2 - 1;
  }
  return 255;
}

void check_bounded(const Symbol& mu) {
  if (!std::isfinite(mu.sup_norm())) throw NumericError("symbol not in L∞");
}

}  // namespace

Symbol Symbol::constant(cplx c) {
  Symbol s;
  s.kind_ = Kind::constant;
  s.name_ = "const";
  s.eval_ = [c](cplx) { return c; };
  s.bound_ = std::abs(c);
  s.boundary_singular_ = false;
  return s;
}

Symbol Symbol::monomial(int a, int b, cplx c) {
  if (a < 0 || b < 0) throw NumericError("monomial exponents must be nonnegative");
  Symbol s;
  s.kind_ = Kind::monomial;
  s.name_ = "w^" + std::to_string(a) + "*conj(w)^" + std::to_string(b);
  s.eval_ = [a, b, c](cplx w) { return c * std::pow(w, a) * std::pow(std::conj(w), b); };
  s.bound_ = std::abs(c);
  s.boundary_singular_ = false;
  return s;
}

Symbol Symbol::mu0() {
  Symbol s;
  s.kind_ = Kind::mu0;
  s.name_ = "mu0";
  s.eval_ = [](cplx w) { return (1.0 - std::conj(w)) / (1.0 - w); };
  s.bound_ = 1.0;
  s.boundary_singular_ = true;
  return s;
}

Symbol Symbol::radial(double p) {
  Symbol s;
  s.kind_ = Kind::radial;
  s.name_ = "radial";
  s.eval_ = [p](cplx w) { return cplx(std::pow(std::abs(w), p)); };
  s.bound_ = p >= 0.0 ? 1.0 : kInf;
  s.unbounded_ = p < 0.0;
  s.boundary_singular_ = false;
  return s;
}

Symbol Symbol::phase(std::vector<double> a, std::vector<double> b) {
  Symbol s;
  s.kind_ = Kind::phase;
  s.name_ = "phase";
  s.eval_ = [a = std::move(a), b = std::move(b)](cplx w) {
    const double th = std::arg(w);
    double phi = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) phi += a[k] * std::cos((k + 1.0) * th);
    for (std::size_t k = 0; k < b.size(); ++k) phi += b[k] * std::sin((k + 1.0) * th);
    return std::polar(1.0, phi);
  };
  s.bound_ = 1.0;
  s.boundary_singular_ = false;
  return s;
}

Symbol Symbol::phase_random(unsigned seed, int degree, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  std::vector<double> a(degree), b(degree);
  for (int k = 0; k < degree; ++k) {
    a[k] = u(rng) / (k + 1.0);
    b[k] = u(rng) / (k + 1.0);
  }
  Symbol s = phase(a, b);
  s.name_ = "phase:" + std::to_string(seed);
  return s;
}

Symbol Symbol::callable(std::function<cplx(cplx)> f, std::string name, double bound) {
  Symbol s;
  s.kind_ = Kind::callable;
  s.name_ = std::move(name);
  s.eval_ = std::move(f);
  s.bound_ = bound;
  s.boundary_singular_ = true;
  return s;
}

Symbol Symbol::field(DiskField f) {
  f.validate();
  Symbol s;
  s.kind_ = Kind::field;
  s.name_ = "field";
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  s.bound_ = m;
  s.field_ = std::make_shared<const DiskField>(std::move(f));
  s.boundary_singular_ = false;
  return s;
}

cplx Symbol::operator()(cplx w) const {
  if (kind_ == Kind::field) throw NumericError("field symbols are known only at grid nodes");
  if (std::norm(w) >= 1.0) return 0.0;
  return eval_(w);
}

Symbol Symbol::reflected() const {
  Symbol s = *this;
  if (kind_ == Kind::field) {
    DiskField f = *field_;
    for (std::size_t i = 0; i < f.grid.rings(); ++i) {
      auto src = field_->ring(i);
      auto dst = f.ring(i);
      const std::size_t n = src.size();
      for (std::size_t k = 0; k < n; ++k) dst[k] = src[(n - k) % n];
    }
    s.field_ = std::make_shared<const DiskField>(std::move(f));
  } else {
    auto e = eval_;
    s.eval_ = [e](cplx w) { return e(std::conj(w)); };
  }
  s.name_ = name_ + "*";
  return s;
}

Symbol Symbol::scaled(cplx c) const {
  Symbol s = *this;
  if (kind_ == Kind::field) {
    DiskField f = *field_;
    for (auto& v : f.values) v *= c;
    s.field_ = std::make_shared<const DiskField>(std::move(f));
  } else {
    auto e = eval_;
    s.eval_ = [e, c](cplx w) { return c * e(w); };
  }
  s.bound_ = bound_ * std::abs(c);
  return s;
}

double Symbol::sup_norm() const {
  if (unbounded_) return kInf;
  if (std::isfinite(bound_)) return bound_;
  // sampled estimate
  double m = 0.0;
  PolarGrid g = polar_grid(32, 256);
  for (std::size_t i = 0; i < g.rings(); ++i)
    for (std::size_t k = 0; k < 256; ++k) {
      cplx v = eval_(std::polar(g.radii[i], 2.0 * kPi * k / 256.0));
      if (!finite(v)) return kInf;
      m = std::max(m, std::abs(v));
    }
  return m;
}

ProjectionResult bergman_project(const Symbol& mu, long J, const ProjectionOptions& opt) {
  check_bounded(mu);
  const std::size_t jj = J < 0 ? default_J(mu) : static_cast<std::size_t>(J);
  RingData d = rings_for(mu, jj, opt);
  if (jj >= d.p / 2) throw NumericError("truncation degree exceeds half the angular count");
  std::vector<cplx> c(jj + 1, 0.0);
  for (std::size_t i = 0; i < d.radii.size(); ++i) {
    double rj = 1.0;
    for (std::size_t j = 0; j <= jj; ++j) {
      c[j] += d.weights[i] * rj * d.bins[i][j];
      rj *= d.radii[i];
    }
  }
  for (std::size_t j = 0; j <= jj; ++j) c[j] *= static_cast<double>(j + 1);
  ProjectionResult out;
  out.residual = std::abs(c[jj]);
  if (jj > 0) out.residual = std::max(out.residual, std::abs(c[jj - 1]));
  out.series = PowerSeries(std::move(c));
  return out;
}

std::vector<cplx> holomorphic_moments(const Symbol& mu, long J, const ProjectionOptions& opt) {
  auto p = bergman_project(mu.reflected(), J, opt);
  std::vector<cplx> m = p.series.coeffs;
  for (std::size_t j = 0; j < m.size(); ++j) m[j] /= static_cast<double>(j + 1);
  return m;
}

cplx cauchy_transform(const Symbol& mu, cplx zeta, long J, const ProjectionOptions& opt) {
  check_bounded(mu);
  const double rho = std::abs(zeta);
  if (std::abs(rho - 1.0) < 1e-3) throw NumericError("evaluation too close to support boundary");
  if (rho > 1.0) {
    auto m = holomorphic_moments(mu, J, opt);
    cplx acc = 0.0;
    const cplx iz = 1.0 / zeta;
    for (std::size_t j = m.size(); j-- > 0;) acc = acc * iz + m[j];
    return acc * iz;
  }
  const std::size_t jj = J < 0 ? default_J(mu) : static_cast<std::size_t>(J);
  std::vector<double> breaks;
  ProjectionOptions o = opt;
  if (!mu.is_field() && rho > 1e-12) {
    breaks.push_back(rho);
    if (!o.radial_nodes) o.radial_nodes = jj / 2 + 16;
  }
  RingData d = rings_for(mu, jj, o, breaks);
  const std::size_t p = d.p;
  const long half = static_cast<long>(p / 2);
  cplx total = 0.0;
  for (std::size_t i = 0; i < d.radii.size(); ++i) {
    const double s = d.radii[i];
    cplx ring = 0.0;
    if (s < rho) {
      // sum_{n<=0} c_n s^{-n} zeta^{n-1}
      const cplx q = s / zeta;
      cplx pw = 1.0 / zeta;
      for (long j = 0; j < half; ++j) {
        const std::size_t idx = static_cast<std::size_t>(j == 0 ? 0 : static_cast<long>(p) - j);
        ring += d.bins[i][idx] * pw;
        pw *= q;
      }
    } else {
      // -sum_{n>=1} c_n zeta^{n-1} s^{-n}
      const cplx q = zeta / s;
      cplx pw = 1.0 / s;
      for (long n = 1; n < half; ++n) {
        ring -= d.bins[i][static_cast<std::size_t>(n)] * pw;
        pw *= q;
      }
    }
    total += d.weights[i] * ring;
  }
  return total;
}

std::vector<cplx> beurling_exterior_laurent(const Symbol& mu, long J, const ProjectionOptions& opt) {
  auto p = bergman_project(mu.reflected(), J, opt);
  std::vector<cplx> d(p.series.coeffs.size() + 2, 0.0);
  for (std::size_t j = 0; j < p.series.coeffs.size(); ++j) d[j + 2] = -p.series.coeffs[j];
  return d;
}

cplx eval_laurent(const std::vector<cplx>& d, cplx zeta) {
  const cplx iz = 1.0 / zeta;
  cplx acc = 0.0;
  for (std::size_t k = d.size(); k-- > 0;) acc = acc * iz + d[k];
  return acc;
}

cplx eval_laurent_deriv(const std::vector<cplx>& d, cplx zeta) {
  // d/dzeta sum d_k zeta^-k = -sum k d_k zeta^{-k-1}
  const cplx iz = 1.0 / zeta;
  cplx acc = 0.0;
  for (std::size_t k = d.size(); k-- > 1;) acc = acc * iz + static_cast<double>(k) * d[k];
  return -acc * iz * iz;
}

cplx beurling_transform_exterior(const Symbol& mu, cplx zeta, long J, const ProjectionOptions& opt) {
  if (std::abs(zeta) <= 1.0) throw NumericError("interior evaluation not supported by this identity");
  auto p = bergman_project(mu.reflected(), J, opt);
  const cplx z = 1.0 / zeta;
  return -z * z * p.series(z);
}

cplx mobius(cplx zeta, cplx z) {
  if (std::abs(zeta) >= 1.0) throw NumericError("mobius center must lie in the disk");
  const cplx den = 1.0 - std::conj(zeta) * z;
  if (std::abs(den) < 1e-15) throw NumericError("pole of the mobius map");
  return (zeta - z) / den;
}

std::pair<cplx, cplx> dilate_symmetry(const PowerSeries& f, const PowerSeries& g, double r) {
  const std::size_t deg = std::max(f.degree(), g.degree());
  const std::size_t n = std::max<std::size_t>(64, next_pow2(4 * (deg + 1)));
  PolarGrid grid = polar_grid(deg + 4, n);
  auto lhs = sample_field(grid, [&](cplx z) { return f(r * z) * std::conj(g(z)); });
  auto rhs = sample_field(grid, [&](cplx z) { return f(z) * std::conj(g(r * z)); });
  return {disk_integral(lhs), disk_integral(rhs)};
}

std::pair<cplx, cplx> circle_disk_pairing(const PowerSeries& g, const std::vector<cplx>& hn, double r) {
  const long K = static_cast<long>(hn.size() / 2);
  auto h = [&](cplx zeta) {
    cplx s = 0.0;
    const double rho = std::abs(zeta), th = std::arg(zeta);
    for (long n = -K; n <= K; ++n)
      s += hn[static_cast<std::size_t>(n + K)] * std::pow(rho, std::abs(static_cast<double>(n))) *
           std::polar(1.0, n * th);
    return s;
  };
  std::vector<cplx> dh;
  for (long j = 0; j < K; ++j) dh.push_back(static_cast<double>(j + 1) * hn[static_cast<std::size_t>(j + 1 + K)]);
  PowerSeries dhs(dh.empty() ? std::vector<cplx>{0.0} : dh);
  const std::size_t deg = std::max<std::size_t>(g.degree(), static_cast<std::size_t>(K));
  const std::size_t n = std::max<std::size_t>(64, next_pow2(4 * (deg + 2)));
  CircleSamples cs;
  cs.radius = 1.0;
  cs.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx zeta = std::polar(1.0, 2.0 * kPi * k / static_cast<double>(n));
    cs.values[k] = g(r * zeta) * std::conj(std::conj(zeta) * h(zeta));
  }
  PolarGrid grid = polar_grid(deg + 4, n);
  auto field = sample_field(grid, [&](cplx z) { return g(z) * std::conj(dhs(r * z)); });
  return {circle_integral(cs), disk_integral(field)};
}

}  // namespace dw
