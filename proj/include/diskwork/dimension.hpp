#pragma once

#include <utility>

namespace dw {

// (sqrt 15 - 1) / 14: upper end of the admissible k range
double k_validity_limit();

// F(k,t) = k^2 t^2 (1+7k)^2 / 4 - t + 1
double F_quadratic(double k, double t);
double F_dt(double k, double t);

// root of F(k, .) in (1,2): 2 / (1 + sqrt(1 - k^2 (1+7k)^2))
double t_k(double k);

// k = 2k'/(1+k'^2) and its inverse k' = (1 - sqrt(1-k^2))/k
double symmetrize(double k_prime);
double desymmetrize(double k);

struct DimensionReport {
  double k = 0.0;
  double k_prime = 0.0;
  double t_k = 0.0;
  double F_at_root = 0.0;
  double derivative_sign = 0.0;  // dF/dt at the root
  double asymptotic_gap = 0.0;   // bound - 1 - k'^2
  double comparison = 0.0;       // 1 + k'^2
};

// t_{k(k')} with its diagnostics
DimensionReport dim_bound(double k_prime);

// Roots of F(k, .) in (1,2), located by sign changes on a fine grid and bisection.
int roots_in_unit_interval(double k, double* root = nullptr);

}  // namespace dw
