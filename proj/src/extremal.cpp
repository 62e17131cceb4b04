#include "diskwork/extremal.hpp"

#include <cmath>

#include "diskwork/variance.hpp"

namespace dw {

namespace {

cplx log_kernel(cplx z) { return -std::log(1.0 - z); }

}  // namespace

cplx mu0_projection(cplx z) {
  if (std::abs(z) >= 1.0) throw NumericError("point outside the disk");
  if (std::abs(z) < 0.25) {
    // sum z^j / (j+2)
    cplx acc = 0.0;
    for (int j = 60; j >= 0; --j) acc = acc * z + 1.0 / (j + 2.0);
    return acc;
  }
  return log_kernel(z) / (z * z) - 1.0 / z;
}

cplx mu0_projection_deriv(cplx z) {
  if (std::abs(z) >= 1.0) throw NumericError("point outside the disk");
  if (std::abs(z) < 0.25) {
    cplx acc = 0.0;
    for (int j = 60; j >= 1; --j) acc = acc * z + j / (j + 2.0);
    return acc;
  }
  return 1.0 / ((1.0 - z) * z * z) - 2.0 * log_kernel(z) / (z * z * z) + 1.0 / (z * z);
}

HoloFn mu0_projection_fn() { return HoloFn::closed(mu0_projection, mu0_projection_deriv, "P mu0"); }

HoloFn mu0_lifted_fn() {
  return HoloFn::closed([](cplx z) { return log_kernel(z) - z; },
                        [](cplx z) { return 1.0 / (1.0 - z) - 1.0; }, "z^2 P mu0");
}

HoloFn log_kernel_fn() {
  return HoloFn::closed(log_kernel, [](cplx z) { return 1.0 / (1.0 - z); }, "log 1/(1-z)");
}

HoloFn projected(const Symbol& mu, long J) {
  if (mu.kind() == Symbol::Kind::mu0) return mu0_projection_fn();
  return HoloFn(bergman_project(mu, J).series);
}

std::pair<double, double> lower_bound_check(double a, double r) {
  if (a <= 0.0 || r <= 0.0 || r >= 1.0) throw NumericError("parameters out of range");
  const double lhs = tail_integral(mu0_projection_fn(), a, r);
  const double rhs = std::exp(-2.0) * std::pow(1.0 - r * r, -(a - 1.0) / a);
  return {lhs, rhs};
}

}  // namespace dw
