#include "diskwork/variance.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace dw {

double log_normalizer(double r) {
  if (r <= 0.0 || r >= 1.0) throw NumericError("radius outside (0,1)");
  return -std::log1p(-r * r);
}

std::size_t dilate_samples(const HoloFn& g, double r) {
  std::size_t n = angular_count(r, 32.0, 256);
  if (g.has_series()) n = std::max(n, next_pow2(4 * (g.series().degree() + 1)));
  return n;
}

CircleSamples normalized_dilate(const HoloFn& g, double r, std::size_t n) {
  const double L = log_normalizer(r);
  if (n == 0) n = dilate_samples(g, r);
  CircleSamples out = g.on_circle(r, n);
  const double s = 1.0 / std::sqrt(L);
  for (auto& v : out.values) v *= s;
  return out;
}

double mean_square(const HoloFn& g, double r) {
  if (g.has_series()) {
    double acc = 0.0, r2k = 1.0;
    for (const auto& c : g.series().coeffs) {
      acc += std::norm(c) * r2k;
      r2k *= r * r;
    }
    return acc;
  }
  double acc = 0.0;
  const std::size_t n = dilate_samples(g, r);
  g.circle_blocks(r, n, [&](std::span<const cplx> b) {
    for (const auto& v : b) acc += std::norm(v);
  });
  return acc / static_cast<double>(n);
}

double avar_estimate(const HoloFn& g, const std::vector<double>& ladder, std::size_t tail) {
  if (ladder.empty()) throw NumericError("empty ladder");
  const std::size_t start = ladder.size() > tail ? ladder.size() - tail : 0;
  double best = 0.0;
  for (std::size_t i = start; i < ladder.size(); ++i)
    best = std::max(best, mean_square(g, ladder[i]) / log_normalizer(ladder[i]));
  return best;
}

DilateProfile::DilateProfile(const HoloFn& g, double r, double c_max, std::size_t n) {
  if (n == 0) n = dilate_samples(g, r);
  n_ = n;
  width_ = c_max > 0.0 ? 0.25 / c_max : 1e300;
  double sum = 0.0;
  g.circle_blocks(r, n, [&](std::span<const cplx> b) {
    for (const auto& v : b) {
      const double x = std::norm(v);
      if (!std::isfinite(x)) throw NumericError("non-finite input");
      sum += x;
      xmax_ = std::max(xmax_, x);
      const double fb = std::floor(x / width_);
      if (fb > 1e7) throw NumericError("profile range too wide");
      const auto k = static_cast<std::size_t>(fb);
      if (k >= bins_.size()) bins_.resize(k + 1, {});
      const double d = x - (k + 0.5) * width_;
      double p = 1.0;
      for (int m = 0; m < kOrder; ++m) {
        bins_[k][m] += p;
        p *= d;
      }
    }
  });
  mean_ = sum / static_cast<double>(n);
}

double DilateProfile::mean_exp(double c) const {
  if (c * xmax_ > kExpCap) return kInf;
  // sum over bins of exp(c x_b) * sum_m c^m M_m / m!
  double acc = 0.0;
  for (std::size_t k = 0; k < bins_.size(); ++k) {
    const auto& mo = bins_[k];
    if (mo[0] == 0.0) continue;
    double s = 0.0, f = 1.0;
    for (int m = 0; m < kOrder; ++m) {
      s += f * mo[m];
      f *= c / (m + 1.0);
    }
    acc += std::exp(c * (k + 0.5) * width_) * s;
  }
  return acc / static_cast<double>(n_);
}

double tail_integral(const HoloFn& g, double a, double r) {
  return tail_integrals(g, {a}, r).front();
}

std::vector<double> tail_integrals(const HoloFn& g, const std::vector<double>& a, double r) {
  if (a.empty()) return {};
  for (double x : a)
    if (x < 0.0) throw NumericError("negative exponent parameter");
  const double L = log_normalizer(r);
  const double scale = r * r * r * r / L;
  const double amax = *std::max_element(a.begin(), a.end());
  DilateProfile prof(g, r, amax * scale);
  std::vector<double> out;
  for (double x : a) out.push_back(prof.mean_exp(x * scale));
  return out;
}

SweepTable tail_sweep(const HoloFn& g, const std::vector<double>& a_grid,
                      const std::vector<double>& ladder) {
  SweepTable t;
  for (double r : ladder) {
    auto v = tail_integrals(g, a_grid, r);
    for (std::size_t i = 0; i < a_grid.size(); ++i)
      t.rows.push_back({a_grid[i], r, v[i], !std::isfinite(v[i])});
  }
  return t;
}

double exp_square_integral(const HoloFn& g, double tau, double r) {
  if (tau <= 0.0) throw NumericError("tau must be positive");
  const double c = 1.0 / (tau * log_normalizer(r));
  return DilateProfile(g, r, c).mean_exp(c);
}

std::vector<double> default_tau_grid() {
  std::vector<double> t;
  for (int k = 5; k <= 80; ++k) t.push_back(0.05 * k);
  return t;
}

double atvar_estimate(const HoloFn& g, const std::vector<double>& ladder,
                      const std::vector<double>& tau_grid) {
  if (tau_grid.empty()) throw NumericError("empty tau grid");
  if (!std::is_sorted(tau_grid.begin(), tau_grid.end()) || tau_grid.front() <= 0.0)
    throw NumericError("tau grid must be positive and increasing");
  const std::size_t tail = 6;
  const std::size_t start = ladder.size() > tail ? ladder.size() - tail : 0;
  std::vector<DilateProfile> prof;
  std::vector<double> L;
  for (std::size_t i = start; i < ladder.size(); ++i) {
    L.push_back(log_normalizer(ladder[i]));
    prof.emplace_back(g, ladder[i], 1.0 / (tau_grid.front() * L.back()));
  }
  for (double tau : tau_grid) {
    bool ok = true;
    double lo = kInf;
    for (std::size_t k = 0; k < prof.size() && ok; ++k) {
      const double s = prof[k].mean_exp(1.0 / (tau * L[k]));
      if (!std::isfinite(s)) ok = false;
      else if (k > 0 && s >= 2.0 * lo) ok = false;
      lo = std::min(lo, s);
    }
    if (ok) return tau;
  }
  return kInf;
}

std::pair<double, double> marshall_bound_check(const HoloFn& g, double sigma, cplx t, double r) {
  if (sigma <= 0.0) throw NumericError("sigma must be positive");
  const double L = log_normalizer(r);
  const double c = 1.0 / (sigma * sigma * L);
  const std::size_t n = dilate_samples(g, r);
  double lhs = 0.0, rhs = 0.0;
  bool div_l = false, div_r = false;
  g.circle_blocks(r, n, [&](std::span<const cplx> b) {
    for (const auto& v : b) {
      const double el = (t * v).real();
      const double er = c * std::norm(v);
      if (el > kExpCap) div_l = true; else lhs += std::exp(el);
      if (er > kExpCap) div_r = true; else rhs += std::exp(er);
    }
  });
  lhs = div_l ? kInf : lhs / static_cast<double>(n);
  rhs = div_r ? kInf : rhs / static_cast<double>(n);
  rhs *= std::exp(sigma * sigma * std::norm(t) * L / 4.0);
  return {lhs, rhs};
}

double betterest_exponent(double a, double t_abs) {
  if (a <= 0.0) throw NumericError("a must be positive");
  t_abs = std::abs(t_abs);
  if (t_abs <= 2.0 * a) return -t_abs * t_abs / (4.0 * a);
  return a - t_abs;
}

double exp_integral(const HoloFn& g, cplx t, double r) {
  const std::size_t n = dilate_samples(g, r);
  double acc = 0.0;
  bool div = false;
  g.circle_blocks(r, n, [&](std::span<const cplx> b) {
    for (const auto& v : b) {
      const double e = (t * v).real();
      if (e > kExpCap) div = true; else acc += std::exp(e);
    }
  });
  return div ? kInf : acc / static_cast<double>(n);
}

SpectrumEstimate exp_type_spectrum(const HoloFn& g, cplx t, const std::vector<double>& ladder,
                                   std::size_t tail) {
  SpectrumEstimate est;
  est.t = t;
  const std::size_t start = ladder.size() > tail ? ladder.size() - tail : 0;
  std::vector<double> xs, ys;
  for (std::size_t i = start; i < ladder.size(); ++i) {
    const double v = exp_integral(g, t, ladder[i]);
    if (!std::isfinite(v)) {
      ++est.dropped;
      continue;
    }
    xs.push_back(log_normalizer(ladder[i]));
    ys.push_back(std::log(v));
  }
  if (est.dropped) std::cerr << "warning: " << est.dropped << " divergent ladder points dropped\n";
  if (xs.size() < 2) throw NumericError("too few ladder points for a slope");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / n;
    my += ys[i] / n;
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  est.beta_hat = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - my - est.beta_hat * (xs[i] - mx);
    ss += e * e;
  }
  est.fit_residual = std::sqrt(ss / n);
  return est;
}

std::pair<double, double> moment_bound_check(const HoloFn& g, double q, double r, double mu_sup) {
  if (q <= 0.0) throw NumericError("q must be positive");
  double lhs;
  if (q == 2.0) {
    lhs = mean_square(g, r);
  } else {
    const std::size_t n = dilate_samples(g, r);
    double acc = 0.0;
    g.circle_blocks(r, n, [&](std::span<const cplx> b) {
      for (const auto& v : b) acc += std::pow(std::abs(v), q);
    });
    lhs = acc / static_cast<double>(n);
  }
  const double L = log_normalizer(r);
  const double rhs = 10.0 * std::pow(3.0 + q, 1.5) * std::pow(mu_sup, q) *
                     std::pow(q / (2.0 * std::exp(1.0)), q / 2.0) *
                     std::pow(L / (r * r * r * r), q / 2.0);
  return {lhs, rhs};
}

}  // namespace dw
