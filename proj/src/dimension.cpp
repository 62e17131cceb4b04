#include "diskwork/dimension.hpp"

#include <cmath>

#include "diskwork/grids.hpp"

namespace dw {

double k_validity_limit() { return (std::sqrt(15.0) - 1.0) / 14.0; }

double F_quadratic(double k, double t) {
  const double s = 1.0 + 7.0 * k;
  return 0.25 * k * k * t * t * s * s - t + 1.0;
}

double F_dt(double k, double t) {
  const double s = 1.0 + 7.0 * k;
  return 0.5 * k * k * t * s * s - 1.0;
}

double t_k(double k) {
  if (!(k > 0.0 && k < k_validity_limit())) throw NumericError("k outside validity interval");
  const double x = k * k * (1.0 + 7.0 * k) * (1.0 + 7.0 * k);
  return 2.0 / (1.0 + std::sqrt(1.0 - x));
}

double symmetrize(double k_prime) {
  if (!(k_prime >= 0.0 && k_prime <= 1.0)) throw NumericError("k' outside [0,1]");
  return 2.0 * k_prime / (1.0 + k_prime * k_prime);
}

double desymmetrize(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw NumericError("k outside [0,1]");
  if (k == 0.0) return 0.0;
  // (1 - sqrt(1-k^2))/k written without cancellation
  return k / (1.0 + std::sqrt((1.0 - k) * (1.0 + k)));
}

DimensionReport dim_bound(double k_prime) {
  DimensionReport r;
  r.k_prime = k_prime;
  r.k = symmetrize(k_prime);
  r.t_k = t_k(r.k);
  r.F_at_root = F_quadratic(r.k, r.t_k);
  r.derivative_sign = F_dt(r.k, r.t_k);
  r.comparison = 1.0 + k_prime * k_prime;
  r.asymptotic_gap = r.t_k - r.comparison;
  return r;
}

int roots_in_unit_interval(double k, double* root) {
  const int n = 4096;
  int count = 0;
  double prev = F_quadratic(k, 1.0);
  for (int i = 1; i <= n; ++i) {
    const double t = 1.0 + static_cast<double>(i) / n;
    const double v = F_quadratic(k, t);
    if ((prev > 0.0) != (v > 0.0)) {
      ++count;
      double lo = t - 1.0 / n, hi = t;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((F_quadratic(k, mid) > 0.0) == (F_quadratic(k, lo) > 0.0)) lo = mid; else hi = mid;
      }
      if (root) *root = 0.5 * (lo + hi);
    }
    prev = v;
  }
  return count;
}

}  // namespace dw
