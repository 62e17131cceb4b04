#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "diskwork/analytic.hpp"

namespace dw {

// Real boundary data on the circle together with its Poisson extension h and dh = d/dz h.
class HarmonicData {
 public:
  // h(e^{i theta}) = sum_{|n| <= K} c[n+K] e^{i n theta}; must be real-valued (c[-n] = conj c[n]).
  static HarmonicData trig(std::vector<cplx> coeffs);
  // height on the arc alpha < theta < beta, zero elsewhere
  static HarmonicData arc(double alpha, double beta, double height);
  // unit-mean arc density (height 2 pi / (beta - alpha))
  static HarmonicData arc_density(double alpha, double beta);

  double boundary(double theta) const;
  double value(cplx z) const;
  cplx dh(cplx z) const;
  double mean() const { return value(0.0); }
  bool nonnegative() const;

  // int |h|^q ds on the circle
  double boundary_power_mean(double q) const;
  // int h log h ds, with 0 log 0 = 0
  double entropy() const;
  // true when the boundary values jump (arc data)
  bool discontinuous() const { return arc_; }

 private:
  bool arc_ = false;
  double alpha_ = 0.0, beta_ = 0.0, height_ = 0.0;
  std::vector<cplx> c_;
};

// (int u dA + int (1-|z|^2) lap_u dA, int u ds) with lap = d dbar.
std::pair<cplx, cplx> green_identity_check(const std::function<cplx(cplx)>& u,
                                           const std::function<cplx(cplx)>& lap_u);

// (int |h|^q dA + (q-1) int (1-|z|^2) |dh|^2 |h|^{q-2} dA, int |h|^q ds)
std::pair<double, double> green_energy_inequality(const HarmonicData& h, double q);

// (int |dh(r z)| dA(z), r^-2 sqrt(entropy) sqrt(L(r)))
std::pair<double, double> anentropy_bound_check(const HarmonicData& h, double r);

struct LevelSetReport {
  double r = 0.0;
  double eta = 0.0;
  double measured_length = 0.0;
  double bound = 0.0;
  int best_N = 3;
};

// bound: min over N >= 3 of N exp(-r^4 eta^2 cos^2(pi/N) / (|mu|^2 L))
double level_set_bound(double r, double eta, double mu_sup, int* best_N = nullptr);
LevelSetReport level_set_check(const HoloFn& g, double r, double eta, double mu_sup);

// Distribution-function form of the tail integral,
// 1 + int_0^inf exp(a r^4 eta^2 / L) (2 a r^4 eta / L) nu_r(eta) d eta,
// with nu_r measured on the circle grid and the eta-integral done by composite Gauss rules.
double tail_integral_by_levels(const HoloFn& g, double a, double r, std::size_t panels = 4000);

// N = ceil(pi sqrt 3 / sqrt(1-a)), bound = 1 + a N / (cos^2(pi/N) - a)
std::pair<int, double> strong_bound_N(double a);

// |w| >= eta implies max_k Re(omega^k w) >= eta cos(pi/N), omega = e^{2 pi i/N}
bool polygon_containment(cplx w, double eta, int N);

// (||f||_{A^{2p}}, ||f||_{H^p})
std::pair<double, double> carleman_check(const PowerSeries& f, double p);

}  // namespace dw
