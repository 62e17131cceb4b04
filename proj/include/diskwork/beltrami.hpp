#pragma once

#include <utility>
#include <vector>

#include "diskwork/conformal.hpp"
#include "diskwork/transforms.hpp"

namespace dw {

struct BeltramiGrid {
  std::size_t radial_nodes = 48;
  std::size_t angular = 128;
};

// Ring-Fourier representation of a field on a Gauss-Legendre polar grid, with
// the interior and exterior Beurling transforms acting on it.
class BeurlingEngine {
 public:
  explicit BeurlingEngine(BeltramiGrid g = {});

  const PolarGrid& grid() const { return grid_; }
  std::size_t angular() const { return n_; }

  // ring-major samples -> ring Fourier coefficients (FFT ordering, normalized)
  std::vector<cplx> to_modes(const std::vector<cplx>& values) const;
  std::vector<cplx> to_values(const std::vector<cplx>& modes) const;

  // S f at the grid nodes for f supported in the disk, as ring modes.
  std::vector<cplx> interior(const std::vector<cplx>& modes) const;
  // Laurent coefficients d[k] of S f(zeta) = sum_k d[k] zeta^-k, |zeta| > 1.
  std::vector<cplx> exterior(const std::vector<cplx>& modes) const;

  std::vector<cplx> sample(const Symbol& mu) const;

 private:
  BeltramiGrid cfg_;
  PolarGrid grid_;
  std::size_t n_ = 0;
  std::size_t q_ = 0;
  QuadRule sub_;
  // per ring: interpolation weights onto the inner and outer sub-rules (q x rings)
  std::vector<std::vector<double>> inner_, outer_;
  std::vector<std::vector<double>> inner_nodes_, outer_nodes_, outer_weights_;
};

// Terms T_n of the derivative series dPsi = 1 + sum_n lambda^n T_n on |zeta| > 1,
// T_1 = S mu and T_n = S(mu T'_{n-1}) with T' the interior values.
class NeumannSeries {
 public:
  NeumannSeries(const Symbol& mu, std::size_t terms = 48, BeltramiGrid grid = {});

  std::size_t terms() const { return laurent_.size(); }
  const std::vector<cplx>& term_laurent(std::size_t n) const { return laurent_.at(n - 1); }
  cplx term(std::size_t n, cplx zeta) const;
  // max of |T_n| on |zeta| = R
  std::vector<double> term_magnitudes(double R, std::size_t samples = 256) const;

  // dPsi(lambda, zeta) using the first J terms (all when J = 0)
  cplx derivative(cplx lambda, cplx zeta, std::size_t J = 0) const;
  cplx second_derivative(cplx lambda, cplx zeta, std::size_t J = 0) const;
  // Laurent coefficients of dPsi(lambda, .)
  std::vector<cplx> derivative_laurent(cplx lambda) const;

 private:
  std::vector<std::vector<cplx>> laurent_;
};

struct NeumannValue {
  cplx value;
  std::vector<double> term_abs;  // |lambda^n T_n(zeta)|
  bool decaying = true;
  double tail_estimate = 0.0;    // geometric continuation of the last term
};
NeumannValue neumann_derivative(const NeumannSeries& s, cplx lambda, cplx zeta, std::size_t J = 0);

// log dPsi(lambda, zeta) continued along the ray from 0 in steps <= 0.05.
cplx log_derivative_tracked(const NeumannSeries& s, cplx lambda, cplx zeta);

// H holds J + 1 coefficients; the last one feeds truncation allowances.
struct MotionSeries {
  double R = 1.0;
  std::size_t J = 0;
  std::vector<CircleSamples> H;  // H[j-1] = H_j on |zeta| = R
};

struct ContourOptions {
  double lambda0 = 0.5;
  std::size_t M = 64;
  std::size_t samples = 256;
};

MotionSeries motion_coefficients(const NeumannSeries& s, double R, std::size_t J,
                                 const ContourOptions& opt = {});

// H_1 = T_1 and H_2 = T_2 - T_1^2 / 2 at zeta
cplx motion_first(const NeumannSeries& s, cplx zeta);
cplx motion_second(const NeumannSeries& s, cplx zeta);

// G(lambda, z) = log dPsi(lambda, 1/z) / lambda, with G(0, z) = T_1(1/z)
cplx G_lambda(const NeumannSeries& s, cplx lambda, cplx z);
cplx G_lambda_dz(const NeumannSeries& s, cplx lambda, cplx z);

struct SpectrumBound {
  double k = 0.0;
  double t_abs = 0.0;
  double quadratic = 0.0;  // k^2 |t|^2 (1+7k)^2 / 4
  double linear = kInf;    // k|t| - (1+7k)^-2 where applicable
  double bound = 0.0;
};
SpectrumBound bk_bound(double k, cplx t);
// |t| at which the linear branch becomes available
double bk_splice(double k);

struct PlancherelReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double allowance = 0.0;
};
// lhs from sum_j |H_j|^2 (j <= J); rhs = max over lambda samples on |lambda| = 1 of
// the same integral with the truncated sum H_J(lambda); allowance from H_{J+1}.
PlancherelReport plancherel_average_check(const MotionSeries& motion, double a,
                                          std::size_t lambda_samples = 0);

// int exp(a |S mu(R zeta)|^2 / log(R^2/(R^2-1))) ds
double beurling_tail_integral(const NeumannSeries& s, double a, double R, std::size_t samples = 0);

// psi' = dPsi(lambda, .) as an exterior map
ExteriorMap motion_map(const NeumannSeries& s, cplx lambda, std::string name = "motion");

}  // namespace dw
