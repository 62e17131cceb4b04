#include "diskwork/beltrami.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace dw {

namespace {

std::size_t mode_index(long n, std::size_t N) {
  const long m = static_cast<long>(N);
  return static_cast<std::size_t>(((n % m) + m) % m);
}

// Barycentric weights of Gauss-Legendre nodes: (-1)^k sqrt((1 - x_k^2) w_k) on [-1,1].
std::vector<double> gl_barycentric(std::size_t n) {
  const QuadRule q = gauss_legendre(n, -1.0, 1.0);
  std::vector<double> lam(n);
  for (std::size_t k = 0; k < n; ++k)
    lam[k] = ((k % 2) ? -1.0 : 1.0) * std::sqrt((1.0 - q.nodes[k] * q.nodes[k]) * q.weights[k]);
  return lam;
}

std::vector<double> interp_row(const std::vector<double>& nodes, const std::vector<double>& lam, double s) {
  std::vector<double> row(nodes.size(), 0.0);
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (s == nodes[k]) {
      row[k] = 1.0;
      return row;
    }
  double den = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    row[k] = lam[k] / (s - nodes[k]);
    den += row[k];
  }
  for (auto& v : row) v /= den;
  return row;
}

}  // namespace

BeurlingEngine::BeurlingEngine(BeltramiGrid g) : cfg_(g) {
  if (!is_pow2(g.angular) || g.angular < 8) throw NumericError("angular count must be a power of two");
  n_ = g.angular;
  grid_ = polar_grid(g.radial_nodes, n_);
  q_ = g.radial_nodes;
  sub_ = gauss_legendre(q_, 0.0, 1.0);
  const auto lam = gl_barycentric(g.radial_nodes);
  const std::size_t R = grid_.rings();
  inner_.resize(R);
  outer_.resize(R);
  inner_nodes_.resize(R);
  outer_nodes_.resize(R);
  outer_weights_.resize(R);
  for (std::size_t i = 0; i < R; ++i) {
    const double rho = grid_.radii[i];
    for (std::size_t m = 0; m < q_; ++m) {
      const double s = rho * sub_.nodes[m];
      const double t = rho + (1.0 - rho) * sub_.nodes[m];
      inner_nodes_[i].push_back(s);
      outer_nodes_[i].push_back(t);
      outer_weights_[i].push_back((1.0 - rho) * sub_.weights[m]);
      auto a = interp_row(grid_.radii, lam, s);
      auto b = interp_row(grid_.radii, lam, t);
      inner_[i].insert(inner_[i].end(), a.begin(), a.end());
      outer_[i].insert(outer_[i].end(), b.begin(), b.end());
    }
  }
}

std::vector<cplx> BeurlingEngine::to_modes(const std::vector<cplx>& values) const {
  std::vector<cplx> out(values);
  for (std::size_t i = 0; i < grid_.rings(); ++i) {
    std::span<cplx> ring(out.data() + i * n_, n_);
    fft(ring, -1);
    for (auto& v : ring) v /= static_cast<double>(n_);
  }
  return out;
}

std::vector<cplx> BeurlingEngine::to_values(const std::vector<cplx>& modes) const {
  std::vector<cplx> out(modes);
  for (std::size_t i = 0; i < grid_.rings(); ++i) fft(std::span<cplx>(out.data() + i * n_, n_), +1);
  return out;
}

std::vector<cplx> BeurlingEngine::sample(const Symbol& mu) const {
  std::vector<cplx> v(grid_.rings() * n_);
  if (mu.is_field()) {
    const DiskField& f = mu.field_data();
    if (f.grid.radii != grid_.radii || f.grid.total() != v.size())
      throw NumericError("field grid does not match the Beltrami grid");
    v = f.values;
  } else {
    for (std::size_t i = 0; i < grid_.rings(); ++i)
      for (std::size_t k = 0; k < n_; ++k)
        v[i * n_ + k] = mu(std::polar(grid_.radii[i], 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_)));
  }
  for (const auto& x : v)
    if (!(std::abs(x) <= 1.0 + 1e-12)) throw NumericError("Beltrami coefficient must satisfy |mu| <= 1");
  return v;
}

std::vector<cplx> BeurlingEngine::interior(const std::vector<cplx>& modes) const {
  const std::size_t R = grid_.rings();
  const long half = static_cast<long>(n_ / 2);
  std::vector<cplx> out(R * n_, 0.0);
  std::vector<cplx> cin(q_ * n_), cout(q_ * n_);
  for (std::size_t i = 0; i < R; ++i) {
    const double rho = grid_.radii[i];
    // interpolate every mode onto the inner and outer sub-rules
    std::fill(cin.begin(), cin.end(), cplx(0.0));
    std::fill(cout.begin(), cout.end(), cplx(0.0));
    for (std::size_t m = 0; m < q_; ++m)
      for (std::size_t k = 0; k < R; ++k) {
        const double a = inner_[i][m * R + k], b = outer_[i][m * R + k];
        const cplx* src = modes.data() + k * n_;
        cplx* di = cin.data() + m * n_;
        cplx* dou = cout.data() + m * n_;
        for (std::size_t n = 0; n < n_; ++n) {
          di[n] += a * src[n];
          dou[n] += b * src[n];
        }
      }
    cplx* dst = out.data() + i * n_;
    // -sum_{j>=0} (j+1) zeta^{-j-2} A_j, with rho^{-j-2} A_j = int_0^1 2 v^{j+1} c_{-j}(rho v) dv
    std::vector<double> vp(q_);
    for (std::size_t m = 0; m < q_; ++m) vp[m] = sub_.nodes[m];
    for (long j = 0; j + 2 <= half; ++j) {
      cplx F = 0.0;
      const std::size_t idx = mode_index(-j, n_);
      for (std::size_t m = 0; m < q_; ++m) {
        F += sub_.weights[m] * 2.0 * vp[m] * cin[m * n_ + idx];
        vp[m] *= sub_.nodes[m];
      }
      dst[mode_index(-(j + 2), n_)] -= static_cast<double>(j + 1) * F;
    }
    // -sum_{j>=1} j zeta^{j-1} B_j, with rho^{j-1} B_j = int_rho^1 2 (rho/t)^{j-1} c_{j+1}(t) / t dt
    std::vector<double> tp(q_, 1.0);
    for (long j = 1; j + 1 < half; ++j) {
      cplx Gs = 0.0;
      const std::size_t idx = mode_index(j + 1, n_);
      for (std::size_t m = 0; m < q_; ++m) {
        const double t = outer_nodes_[i][m];
        Gs += outer_weights_[i][m] * 2.0 * tp[m] / t * cout[m * n_ + idx];
        tp[m] *= rho / t;
      }
      dst[mode_index(j - 1, n_)] -= static_cast<double>(j) * Gs;
    }
    // f(zeta) conj(zeta)/zeta shifts every mode down by two
    const cplx* src = modes.data() + i * n_;
    for (long n = -half + 2; n < half; ++n) dst[mode_index(n - 2, n_)] += src[mode_index(n, n_)];
  }
  return out;
}

std::vector<cplx> BeurlingEngine::exterior(const std::vector<cplx>& modes) const {
  const std::size_t R = grid_.rings();
  const std::size_t half = n_ / 2;
  std::vector<cplx> d(half + 2, 0.0);
  for (std::size_t i = 0; i < R; ++i) {
    double rj = 1.0;
    for (std::size_t j = 0; j < half; ++j) {
      d[j + 2] -= static_cast<double>(j + 1) * grid_.weights[i] * rj *
                  modes[i * n_ + mode_index(-static_cast<long>(j), n_)];
      rj *= grid_.radii[i];
    }
  }
  return d;
}

NeumannSeries::NeumannSeries(const Symbol& mu, std::size_t terms, BeltramiGrid grid) {
  if (terms == 0) throw NumericError("at least one term required");
  const BeurlingEngine eng(grid);
  const std::vector<cplx> mv = eng.sample(mu);
  std::vector<cplx> modes = eng.to_modes(mv);
  for (std::size_t n = 1; n <= terms; ++n) {
    // the first term of a tagged symbol goes through the adaptive projection, which
    // resolves boundary singularities far better than the fixed grid
    if (n == 1 && !mu.is_field())
      laurent_.push_back(beurling_exterior_laurent(mu, 255));
    else
      laurent_.push_back(eng.exterior(modes));
    if (n == terms) break;
    std::vector<cplx> vals = eng.to_values(eng.interior(modes));
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] *= mv[k];
    modes = eng.to_modes(vals);
  }
}

cplx NeumannSeries::term(std::size_t n, cplx zeta) const { return eval_laurent(laurent_.at(n - 1), zeta); }

std::vector<double> NeumannSeries::term_magnitudes(double R, std::size_t samples) const {
  std::vector<double> out;
  for (const auto& d : laurent_) {
    double m = 0.0;
    for (std::size_t k = 0; k < samples; ++k)
      m = std::max(m, std::abs(eval_laurent(d, std::polar(R, 2.0 * kPi * k / samples))));
    out.push_back(m);
  }
  return out;
}

cplx NeumannSeries::derivative(cplx lambda, cplx zeta, std::size_t J) const {
  const std::size_t n = J ? std::min(J, laurent_.size()) : laurent_.size();
  cplx acc = 0.0;
  for (std::size_t k = n; k >= 1; --k) acc = (acc + eval_laurent(laurent_[k - 1], zeta)) * lambda;
  return 1.0 + acc;
}

cplx NeumannSeries::second_derivative(cplx lambda, cplx zeta, std::size_t J) const {
  const std::size_t n = J ? std::min(J, laurent_.size()) : laurent_.size();
  cplx acc = 0.0;
  for (std::size_t k = n; k >= 1; --k) acc = (acc + eval_laurent_deriv(laurent_[k - 1], zeta)) * lambda;
  return acc;
}

std::vector<cplx> NeumannSeries::derivative_laurent(cplx lambda) const {
  std::size_t len = 0;
  for (const auto& d : laurent_) len = std::max(len, d.size());
  std::vector<cplx> out(std::max<std::size_t>(len, 2), 0.0);
  cplx lp = 1.0;
  for (const auto& d : laurent_) {
    lp *= lambda;
    for (std::size_t k = 0; k < d.size(); ++k) out[k] += lp * d[k];
  }
  out[0] += 1.0;
  return out;
}

NeumannValue neumann_derivative(const NeumannSeries& s, cplx lambda, cplx zeta, std::size_t J) {
  if (std::abs(lambda) >= 1.0) throw NumericError("lambda must lie in the unit disk");
  if (std::abs(zeta) <= 1.0) throw NumericError("point must lie outside the closed disk");
  NeumannValue v;
  const std::size_t n = J ? std::min(J, s.terms()) : s.terms();
  v.value = 1.0;
  cplx lp = 1.0;
  double peak = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    lp *= lambda;
    const cplx t = lp * s.term(k, zeta);
    v.value += t;
    v.term_abs.push_back(std::abs(t));
    peak = std::max(peak, std::abs(t));
  }
  const double last = v.term_abs.back();
  const double q = std::abs(lambda);
  v.tail_estimate = last * q / (1.0 - q);
  v.decaying = v.tail_estimate <= 1e-8 * std::max(1.0, peak);
  if (!v.decaying)
    std::cerr << "warning: derivative series not converged, tail estimate " << v.tail_estimate << "\n";
  return v;
}

namespace {

// log of 1 + sum lambda^n T_n along the ray, T given by its values at one point
cplx tracked_log(const std::vector<cplx>& T, cplx lambda) {
  const double len = std::abs(lambda);
  const std::size_t steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / 0.05)));
  double prev = 0.0;
  double modulus = 1.0;
  for (std::size_t s = 1; s <= steps; ++s) {
    const cplx l = lambda * (static_cast<double>(s) / static_cast<double>(steps));
    cplx acc = 0.0;
    for (std::size_t k = T.size(); k >= 1; --k) acc = (acc + T[k - 1]) * l;
    const cplx v = 1.0 + acc;
    double a = std::arg(v);
    a += 2.0 * kPi * std::round((prev - a) / (2.0 * kPi));
    if (std::abs(a - prev) > kPi / 2.0) throw NumericError("log branch tracking lost");
    prev = a;
    modulus = std::abs(v);
  }
  return cplx(std::log(modulus), prev);
}

std::vector<cplx> term_values(const NeumannSeries& s, cplx zeta) {
  std::vector<cplx> T(s.terms());
  for (std::size_t n = 1; n <= s.terms(); ++n) T[n - 1] = s.term(n, zeta);
  return T;
}

}  // namespace

cplx log_derivative_tracked(const NeumannSeries& s, cplx lambda, cplx zeta) {
  if (std::abs(lambda) >= 1.0) throw NumericError("lambda must lie in the unit disk");
  return tracked_log(term_values(s, zeta), lambda);
}

MotionSeries motion_coefficients(const NeumannSeries& s, double R, std::size_t J, const ContourOptions& opt) {
  if (R <= 1.0) throw NumericError("radius must exceed 1");
  if (J == 0 || J + 1 >= opt.M / 2) throw NumericError("truncation must satisfy 1 <= J < M/2 - 1");
  MotionSeries ms;
  ms.R = R;
  ms.J = J;
  const std::size_t nz = opt.samples;
  ms.H.assign(J + 1, CircleSamples{R, std::vector<cplx>(nz, 0.0)});
  for (std::size_t k = 0; k < nz; ++k) {
    const cplx zeta = std::polar(R, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(nz));
    const auto T = term_values(s, zeta);
    for (std::size_t m = 0; m < opt.M; ++m) {
      const cplx lam = std::polar(opt.lambda0, 2.0 * kPi * static_cast<double>(m) / static_cast<double>(opt.M));
      const cplx H = tracked_log(T, lam);
      cplx lp = 1.0;
      for (std::size_t j = 1; j <= J + 1; ++j) {
        lp /= lam;
        ms.H[j - 1].values[k] += H * lp / static_cast<double>(opt.M);
      }
    }
  }
  return ms;
}

cplx motion_first(const NeumannSeries& s, cplx zeta) { return s.term(1, zeta); }

cplx motion_second(const NeumannSeries& s, cplx zeta) {
  const cplx t1 = s.term(1, zeta);
  return (s.terms() >= 2 ? s.term(2, zeta) : cplx(0.0)) - 0.5 * t1 * t1;
}

cplx G_lambda(const NeumannSeries& s, cplx lambda, cplx z) {
  if (std::abs(z) >= 1.0) throw NumericError("point outside the disk");
  if (z == 0.0) return 0.0;
  const cplx zeta = 1.0 / z;
  if (lambda == 0.0) return s.term(1, zeta);
  return log_derivative_tracked(s, lambda, zeta) / lambda;
}

cplx G_lambda_dz(const NeumannSeries& s, cplx lambda, cplx z) {
  if (std::abs(z) >= 1.0) throw NumericError("point outside the disk");
  if (z == 0.0) return 0.0;
  const cplx zeta = 1.0 / z;
  const cplx dzeta = -1.0 / (z * z);
  if (lambda == 0.0) return eval_laurent_deriv(s.term_laurent(1), zeta) * dzeta;
  return s.second_derivative(lambda, zeta) / s.derivative(lambda, zeta) * dzeta / lambda;
}

double bk_splice(double k) { return 2.0 / (k * (1.0 + 7.0 * k) * (1.0 + 7.0 * k)); }

SpectrumBound bk_bound(double k, cplx t) {
  if (!(k > 0.0 && k < 1.0)) throw NumericError("k outside (0,1)");
  SpectrumBound b;
  b.k = k;
  b.t_abs = std::abs(t);
  const double s = 1.0 + 7.0 * k;
  b.quadratic = 0.25 * k * k * b.t_abs * b.t_abs * s * s;
  b.bound = b.quadratic;
  if (b.t_abs >= bk_splice(k)) {
    b.linear = k * b.t_abs - 1.0 / (s * s);
    b.bound = std::min(b.bound, b.linear);
  }
  return b;
}

PlancherelReport plancherel_average_check(const MotionSeries& motion, double a, std::size_t lambda_samples) {
  if (!(a > 0.0 && a < 1.0)) throw NumericError("a outside (0,1)");
  const std::size_t J = motion.J;
  if (motion.H.size() < J + 1) throw NumericError("motion series lacks the allowance coefficient");
  const double R2 = motion.R * motion.R;
  const double L = std::log(R2 / (R2 - 1.0));
  const std::size_t nz = motion.H.front().size();
  const std::size_t M = lambda_samples ? lambda_samples : 2 * J + 2;
  if (M < J) throw NumericError("too few lambda samples");
  PlancherelReport rep;
  double lhs = 0.0, next = 0.0;
  bool div = false;
  for (std::size_t k = 0; k < nz; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < J; ++j) s += std::norm(motion.H[j].values[k]);
    const double e = a * s / L;
    if (e > 700.0) div = true; else lhs += std::exp(e);
    next = std::max(next, std::norm(motion.H[J].values[k]));
  }
  rep.lhs = div ? kInf : lhs / static_cast<double>(nz);
  rep.rhs = 0.0;
  for (std::size_t m = 0; m < M; ++m) {
    const cplx lam = std::polar(1.0, 2.0 * kPi * (m + 0.5) / static_cast<double>(M));
    double acc = 0.0;
    bool d = false;
    for (std::size_t k = 0; k < nz; ++k) {
      cplx h = 0.0;
      for (std::size_t j = J; j >= 1; --j) h = (h + motion.H[j - 1].values[k]) * lam;
      const double e = a * std::norm(h) / L;
      if (e > 700.0) d = true; else acc += std::exp(e);
    }
    rep.rhs = std::max(rep.rhs, d ? kInf : acc / static_cast<double>(nz));
  }
  rep.allowance = rep.lhs * (std::exp(a * next / L) - 1.0);
  return rep;
}

double beurling_tail_integral(const NeumannSeries& s, double a, double R, std::size_t samples) {
  if (R <= 1.0) throw NumericError("radius must exceed 1");
  const double R2 = R * R;
  const double L = std::log(R2 / (R2 - 1.0));
  const std::size_t n = samples ? samples : std::max<std::size_t>(256, next_pow2(static_cast<std::size_t>(32.0 / (R - 1.0))));
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = a * std::norm(s.term(1, std::polar(R, 2.0 * kPi * k / n))) / L;
    if (e > 700.0) return kInf;
    acc += std::exp(e);
  }
  return acc / static_cast<double>(n);
}

ExteriorMap motion_map(const NeumannSeries& s, cplx lambda, std::string name) {
  return ExteriorMap::from_derivative_laurent(s.derivative_laurent(lambda), std::move(name));
}

}  // namespace dw
