#pragma once

#include <array>
#include <utility>
#include <vector>

#include "diskwork/analytic.hpp"

namespace dw {

struct SweepRow {
  double param = 0.0;
  double r = 0.0;
  double value = 0.0;
  bool divergent = false;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

struct SpectrumEstimate {
  cplx t;
  double beta_hat = 0.0;
  double fit_residual = 0.0;
  std::size_t dropped = 0;  // ladder points discarded as divergent
};

inline constexpr double kExpCap = 700.0;

// L(r) = log(1/(1-r^2))
double log_normalizer(double r);

// Circle sample count used for the dilate g_r.
std::size_t dilate_samples(const HoloFn& g, double r);

// X_r(zeta) = g(r zeta) / sqrt(L(r))
CircleSamples normalized_dilate(const HoloFn& g, double r, std::size_t n = 0);

// int |g_r|^2 ds; Parseval for series, quadrature otherwise.
double mean_square(const HoloFn& g, double r);

// Running max of mean_square / L over the last `tail` ladder radii.
double avar_estimate(const HoloFn& g, const std::vector<double>& ladder, std::size_t tail = 5);

// Binned distribution of x = |g(r zeta)|^2 over the circle. Each bin keeps the
// moments of x about its center, so mean exp(c x) is available for any
// 0 <= c <= c_max from one pass over the samples.
class DilateProfile {
 public:
  DilateProfile(const HoloFn& g, double r, double c_max, std::size_t n = 0);

  // Mean of exp(c |g_r|^2); kInf when c * max|g_r|^2 exceeds the exponent cap.
  double mean_exp(double c) const;
  double max_value() const { return xmax_; }
  double mean_value() const { return mean_; }
  std::size_t samples() const { return n_; }

 private:
  static constexpr int kOrder = 9;
  double width_ = 1.0;
  double xmax_ = 0.0;
  double mean_ = 0.0;
  std::size_t n_ = 0;
  std::vector<std::array<double, kOrder>> bins_;
};

// I_g(a,r) = int exp(a r^4 |g(r zeta)|^2 / L(r)) ds; kInf flags a divergent sample.
double tail_integral(const HoloFn& g, double a, double r);
std::vector<double> tail_integrals(const HoloFn& g, const std::vector<double>& a, double r);
SweepTable tail_sweep(const HoloFn& g, const std::vector<double>& a_grid,
                      const std::vector<double>& ladder);

// int exp(|X_r|^2 / tau) ds
double exp_square_integral(const HoloFn& g, double tau, double r);

std::vector<double> default_tau_grid();
// Smallest tau whose tail sweep does not double over the last six radii; kInf if none.
double atvar_estimate(const HoloFn& g, const std::vector<double>& ladder,
                      const std::vector<double>& tau_grid = default_tau_grid());

// (int |e^{t g_r}| ds, (1-r^2)^{-sigma^2|t|^2/4} int exp(|g_r|^2/(sigma^2 L)) ds)
std::pair<double, double> marshall_bound_check(const HoloFn& g, double sigma, cplx t, double r);

// Exponent of (1-r^2) in the tail-integral bound for int |e^{t r^2 g_r}| ds.
double betterest_exponent(double a, double t_abs);

// int |e^{t g_r}| ds
double exp_integral(const HoloFn& g, cplx t, double r);

// Least-squares slope of log int |e^{t g_r}| ds against L(r) over the ladder tail.
SpectrumEstimate exp_type_spectrum(const HoloFn& g, cplx t, const std::vector<double>& ladder,
                                   std::size_t tail = 6);

// (int |g_r|^q ds, 10 (3+q)^{3/2} |mu|^q (q/2e)^{q/2} (r^-4 L)^{q/2})
std::pair<double, double> moment_bound_check(const HoloFn& g, double q, double r, double mu_sup);

}  // namespace dw
