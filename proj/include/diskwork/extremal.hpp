#pragma once

#include <utility>

#include "diskwork/analytic.hpp"
#include "diskwork/transforms.hpp"

namespace dw {

// P mu0(z) = log(1/(1-z))/z^2 - 1/z, with the value 1/2 at z = 0.
cplx mu0_projection(cplx z);
cplx mu0_projection_deriv(cplx z);

// P mu0 and z^2 P mu0 = log(1/(1-z)) - z as closed-form functions.
HoloFn mu0_projection_fn();
HoloFn mu0_lifted_fn();
// log(1/(1-z))
HoloFn log_kernel_fn();

// P mu as a holomorphic function: the closed form for mu0, a truncated series otherwise.
HoloFn projected(const Symbol& mu, long J = 255);

// (tail integral of P mu0, e^-2 (1-r^2)^{-(a-1)/a}); the first should dominate.
std::pair<double, double> lower_bound_check(double a, double r);

}  // namespace dw
