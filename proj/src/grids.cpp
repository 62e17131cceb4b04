#include "diskwork/grids.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace dw {

namespace {

std::mutex g_plan_mutex;

struct Plan {
  fftw_plan plan = nullptr;
  fftw_complex* buf = nullptr;
  std::size_t n = 0;
  ~Plan() {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    if (plan) fftw_destroy_plan(plan);
    if (buf) fftw_free(buf);
  }
};

Plan& plan_for(std::size_t n, int sign) {
  thread_local std::map<std::pair<std::size_t, int>, std::unique_ptr<Plan>> cache;
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto p = std::make_unique<Plan>();
  p->n = n;
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    p->buf = fftw_alloc_complex(n);
    p->plan = fftw_plan_dft_1d(static_cast<int>(n), p->buf, p->buf,
                               sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  auto& ref = *p;
  cache.emplace(key, std::move(p));
  return ref;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void fft(std::span<cplx> data, int sign) {
  const std::size_t n = data.size();
  if (n == 0) return;
  Plan& p = plan_for(n, sign);
  auto* b = reinterpret_cast<cplx*>(p.buf);
  std::copy(data.begin(), data.end(), b);
  fftw_execute(p.plan);
  std::copy(b, b + n, data.begin());
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void CircleSamples::validate() const {
  if (values.size() < 4 || !is_pow2(values.size()))
    throw NumericError("circle sample count must be a power of two >= 4");
  for (const auto& v : values)
    if (!finite(v)) throw NumericError("non-finite input");
}

cplx PowerSeries::operator()(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

cplx PowerSeries::derivative(cplx z) const {
  cplx acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs[k];
  return acc;
}

PowerSeries PowerSeries::diff() const {
  std::vector<cplx> c;
  for (std::size_t k = 1; k < coeffs.size(); ++k) c.push_back(static_cast<double>(k) * coeffs[k]);
  if (c.empty()) c.push_back(0.0);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
  std::vector<cplx> c(k, 0.0);
  c.insert(c.end(), coeffs.begin(), coeffs.end());
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::vector<cplx> c(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) c[k] += b.coeffs[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-1.0) * b; }

PowerSeries operator*(cplx s, const PowerSeries& a) {
  PowerSeries r = a;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

PowerSeries series_product(const PowerSeries& a, const PowerSeries& b, std::size_t max_degree) {
  std::vector<cplx> c(max_degree + 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size() && i <= max_degree; ++i)
    for (std::size_t j = 0; j < b.coeffs.size() && i + j <= max_degree; ++j)
      c[i + j] += a.coeffs[i] * b.coeffs[j];
  return PowerSeries(std::move(c));
}

// e = exp(a):  k e_k = sum_{m=1}^k m a_m e_{k-m}
PowerSeries series_exp(const PowerSeries& a, std::size_t max_degree) {
  std::vector<cplx> e(max_degree + 1, 0.0);
  e[0] = std::exp(a.coeffs.empty() ? cplx(0.0) : a.coeffs[0]);
  for (std::size_t k = 1; k <= max_degree; ++k) {
    cplx s = 0.0;
    for (std::size_t m = 1; m <= k && m < a.coeffs.size(); ++m)
      s += static_cast<double>(m) * a.coeffs[m] * e[k - m];
    e[k] = s / static_cast<double>(k);
  }
  return PowerSeries(std::move(e));
}

// l = log(a):  k a_0 l_k = k a_k - sum_{m=1}^{k-1} m l_m a_{k-m}
PowerSeries series_log(const PowerSeries& a, std::size_t max_degree) {
  if (a.coeffs.empty() || a.coeffs[0] == cplx(0.0))
    throw NumericError("log of a series vanishing at the origin");
  auto at = [&](std::size_t k) { return k < a.coeffs.size() ? a.coeffs[k] : cplx(0.0); };
  std::vector<cplx> l(max_degree + 1, 0.0);
  l[0] = std::log(a.coeffs[0]);
  for (std::size_t k = 1; k <= max_degree; ++k) {
    cplx s = static_cast<double>(k) * at(k);
    for (std::size_t m = 1; m < k; ++m) s -= static_cast<double>(m) * l[m] * at(k - m);
    l[k] = s / (static_cast<double>(k) * a.coeffs[0]);
  }
  return PowerSeries(std::move(l));
}

std::size_t PolarGrid::total() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::size_t PolarGrid::offset(std::size_t ring) const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < ring; ++i) t += counts[i];
  return t;
}

bool PolarGrid::uniform() const {
  return std::all_of(counts.begin(), counts.end(), [&](auto c) { return c == counts.front(); });
}

void PolarGrid::validate() const {
  if (radii.empty()) throw NumericError("empty grid");
  if (weights.size() != radii.size() || counts.size() != radii.size())
    throw NumericError("grid arrays disagree in length");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0) || !(radii[i] < 1.0)) throw NumericError("grid radius outside [0,1)");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw NumericError("grid radii must increase");
    if (counts[i] == 0) throw NumericError("ring without angles");
  }
}

std::span<const cplx> DiskField::ring(std::size_t i) const {
  return {values.data() + grid.offset(i), grid.counts[i]};
}

std::span<cplx> DiskField::ring(std::size_t i) {
  return {values.data() + grid.offset(i), grid.counts[i]};
}

cplx DiskField::node(std::size_t ring, std::size_t k) const {
  const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(grid.counts[ring]);
  return std::polar(grid.radii[ring], th);
}

void DiskField::validate() const {
  grid.validate();
  if (values.size() != grid.total()) throw NumericError("field size does not match grid");
  for (const auto& v : values)
    if (!finite(v)) throw NumericError("non-finite input");
}

QuadRule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw NumericError("quadrature needs at least one node");
  QuadRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[i] = mid - half * x;
    q.nodes[n - 1 - i] = mid + half * x;
    q.weights[i] = q.weights[n - 1 - i] = half * w;
  }
  return q;
}

std::size_t angular_count(double r, double factor, std::size_t min_count) {
  double want = std::max(static_cast<double>(min_count), factor / (1.0 - r));
  if (want > 4.0e9) throw NumericError("radius too close to the circle for angular sampling");
  return next_pow2(static_cast<std::size_t>(std::ceil(want)));
}

std::vector<double> radii_ladder(int m_min, int m_max, double cap) {
  std::vector<double> out;
  for (int m = m_min; m <= m_max; ++m) {
    double r = std::min(1.0 - std::ldexp(1.0, -m), 1.0 - cap);
    if (out.empty() || r > out.back()) out.push_back(r);
  }
  return out;
}

cplx circle_integral(const CircleSamples& f) {
  if (f.values.size() < 4) throw NumericError("circle sample count must be >= 4");
  cplx s = 0.0;
  for (const auto& v : f.values) {
    if (!finite(v)) throw NumericError("non-finite input");
    s += v;
  }
  return s / static_cast<double>(f.values.size());
}

cplx disk_integral(const DiskField& f) {
  if (f.grid.radii.empty()) throw NumericError("empty grid");
  f.validate();
  cplx total = 0.0;
  std::size_t off = 0;
  for (std::size_t i = 0; i < f.grid.rings(); ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < f.grid.counts[i]; ++k) s += f.values[off + k];
    total += f.grid.weights[i] * s / static_cast<double>(f.grid.counts[i]);
    off += f.grid.counts[i];
  }
  return total;
}

PowerSeries taylor_from_circle(const CircleSamples& f) {
  if (f.radius == 0.0) throw NumericError("radius must be nonzero");
  f.validate();
  std::vector<cplx> buf = f.values;
  fft(buf, -1);
  const std::size_t n = buf.size();
  std::vector<cplx> c(n / 2);
  double rk = 1.0;
  for (std::size_t j = 0; j < n / 2; ++j) {
    c[j] = buf[j] / (static_cast<double>(n) * rk);
    rk *= f.radius;
  }
  return PowerSeries(std::move(c));
}

CircleSamples sample_circle(const PowerSeries& s, double r, std::size_t n) {
  CircleSamples out;
  out.radius = r;
  out.values.assign(n, 0.0);
  double rk = 1.0;
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    out.values[k % n] += s.coeffs[k] * rk;
    rk *= r;
    if (rk == 0.0) break;
  }
  fft(out.values, +1);
  return out;
}

namespace {

std::vector<std::pair<double, double>> panels(const std::vector<double>& breaks) {
  std::vector<double> b = {0.0};
  for (double x : breaks) {
    if (!(x > b.back() && x < 1.0)) throw NumericError("panel breaks must increase inside (0,1)");
    b.push_back(x);
  }
  b.push_back(1.0);
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) out.emplace_back(b[i], b[i + 1]);
  return out;
}

}  // namespace

PolarGrid polar_grid(std::size_t nodes_per_panel, std::size_t angular,
                     const std::vector<double>& breaks) {
  PolarGrid g;
  for (auto [a, b] : panels(breaks)) {
    auto q = gauss_legendre(nodes_per_panel, a, b);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
      g.radii.push_back(q.nodes[i]);
      g.weights.push_back(2.0 * q.nodes[i] * q.weights[i]);
      g.counts.push_back(angular);
    }
  }
  g.validate();
  return g;
}

PolarGrid adaptive_polar_grid(std::size_t nodes_per_panel, double factor, std::size_t min_count,
                              const std::vector<double>& breaks) {
  PolarGrid g = polar_grid(nodes_per_panel, min_count, breaks);
  for (std::size_t i = 0; i < g.rings(); ++i)
    g.counts[i] = angular_count(g.radii[i], factor, min_count);
  return g;
}

DiskField sample_field(const PolarGrid& g, const std::function<cplx(cplx)>& f) {
  g.validate();
  DiskField d;
  d.grid = g;
  d.values.resize(g.total());
  std::size_t off = 0;
  for (std::size_t i = 0; i < g.rings(); ++i) {
    const std::size_t n = g.counts[i];
    for (std::size_t k = 0; k < n; ++k) {
      const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
      d.values[off + k] = f(std::polar(g.radii[i], th));
    }
    off += n;
  }
  return d;
}

std::vector<cplx> ring_fourier(const DiskField& f, std::size_t ring) {
  auto r = f.ring(ring);
  std::vector<cplx> buf(r.begin(), r.end());
  fft(buf, -1);
  const double inv = 1.0 / static_cast<double>(buf.size());
  for (auto& v : buf) v *= inv;
  return buf;
}

std::vector<cplx> ring_bins_streamed(const std::function<cplx(cplx)>& f, double r, std::size_t n,
                                     std::size_t p) {
  if (p == 0 || n % p != 0) throw NumericError("streamed ring size must be a multiple of the bin count");
  const std::size_t m = n / p;
  std::vector<cplx> roots(p);
  for (std::size_t k = 0; k < p; ++k)
    roots[k] = std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(p));
  std::vector<cplx> bins(p, 0.0), block(p);
  const long half = static_cast<long>(p / 2);
  for (std::size_t q = 0; q < m; ++q) {
    const double phase = 2.0 * kPi * static_cast<double>(q) / static_cast<double>(n);
    const cplx shift = std::polar(r, phase);
    for (std::size_t k = 0; k < p; ++k) block[k] = f(shift * roots[k]);
    fft(block, -1);
    if (m == 1) {
      for (std::size_t k = 0; k < p; ++k) bins[k] += block[k];
      continue;
    }
    // bin of frequency j picks up exp(-i j phase)
    const cplx step = std::polar(1.0, -phase);
    cplx tw = std::polar(1.0, phase * static_cast<double>(half));
    for (long j = -half; j < half; ++j) {
      const std::size_t idx = static_cast<std::size_t>(j < 0 ? j + static_cast<long>(p) : j);
      bins[idx] += tw * block[idx];
      tw *= step;
    }
  }
  const double inv = 1.0 / static_cast<double>(n);
  for (auto& b : bins) b *= inv;
  return bins;
}

}  // namespace dw
