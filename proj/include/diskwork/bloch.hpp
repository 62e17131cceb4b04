#pragma once

#include <vector>

#include "diskwork/analytic.hpp"

namespace dw {

struct SeminormOptions {
  int level = 6;        // grid level; level + 1 contains every node of level
  bool refine = true;   // local pattern search around the best nodes
};

struct SeminormResult {
  double value = 0.0;
  cplx argmax = 0.0;
};

// Nodes of the seminorm grid at the given level: uniform and boundary-graded rings.
std::vector<cplx> seminorm_nodes(int level);

// sup of (1-|z|^2) |g'(z)| over the grid
SeminormResult bloch_seminorm_detail(const HoloFn& g, const SeminormOptions& opt = {});
double bloch_seminorm(const HoloFn& g, const SeminormOptions& opt = {});

// 1/3 on [0,1/2), t/(2-t^2) on [1/2,1)
double omega_weight(double t);

struct Decomposition {
  DiskField nu;
  PowerSeries G;
  double residual = 0.0;     // max grid error of g - z^2 P nu - G
  double nu_sup = 0.0;
  double G_sup = 0.0;
  double G_prime_seminorm = 0.0;
};

// g = z^2 P nu_g + G with nu_g = (1-|z|^2) omega(|z|) (g'(z) - g'(0))/z and
// G = g(0) + g'(0) z + z^2 P(mu_g - nu_g), mu_g = (1-|z|^2)(g'(z) - g'(0))/z.
Decomposition bloch_decompose(const PowerSeries& g, std::size_t nodes_per_panel = 0);

// int (1-omega)/omega (|w|) |1 - z conj(w)|^-2 dA(w)
double constant5_integral(cplx z);
double constant5_check(const std::vector<cplx>& zs);

// g(0) = 0, Gaussian coefficients N(0,1)/j, rescaled to grid seminorm 1
PowerSeries random_bloch_polynomial(unsigned seed, int degree = 10);

// max over the grid of (1-|z|^2) omega(|z|) |(f(z) - f(0))/z|
double quotient_weight_max(const HoloFn& f, int level = 6);

}  // namespace dw
