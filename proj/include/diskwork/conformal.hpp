#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diskwork/analytic.hpp"

namespace dw {

// Normalized univalent map of the disk: phi(0) = 0, phi'(0) = 1.
class SchlichtMap {
 public:
  static SchlichtMap identity();
  // z / (1 - e^{i alpha} z)^2
  static SchlichtMap koebe(double alpha = 0.0);
  // phi = int_0^z exp(b) with b = log phi', b(0) = 0; univalent when (1-|z|^2)|z b'(z)| <= 1
  static SchlichtMap from_log_derivative(const PowerSeries& b, std::size_t degree = 160);
  // Random member whose log phi' has grid seminorm `scale` (< 1).
  static SchlichtMap random_becker(unsigned seed, double scale = 0.9, int degree = 8);

  cplx value(cplx z) const;
  cplx deriv(cplx z) const;
  cplx deriv2(cplx z) const;
  const std::string& name() const { return name_; }
  // g_phi as a holomorphic function (closed form or series)
  const HoloFn& g_fn() const { return g_; }
  // h_phi = log phi'
  const HoloFn& h_fn() const { return h_; }

 private:
  enum class Kind { identity, koebe, series } kind_ = Kind::identity;
  double alpha_ = 0.0;
  PowerSeries phi_, dphi_, d2phi_;
  HoloFn g_, h_;
  std::string name_;
};

// g_phi(z) = log(z^2 phi'(z) / phi(z)^2), 0 at z = 0.
cplx g_phi(const SchlichtMap& phi, cplx z);

// max over the grid of |(1-|z|^2) phi''/phi' - 2 conj(z)|
double koebe_bieberbach_max(const SchlichtMap& phi, int level = 5);

// Complete elliptic integrals (E, K) of modulus s; K(1) = inf.
std::pair<double, double> elliptic_EK(double s);

// Exterior map psi(zeta) = zeta + b0 + b1/zeta + ... stored through psi'.
class ExteriorMap {
 public:
  static ExteriorMap identity();
  static ExteriorMap joukowski();
  // psi'(zeta) = sum_k d[k] zeta^-k with d[0] = 1 and d[1] = 0
  static ExteriorMap from_derivative_laurent(std::vector<cplx> d, std::string name = "laurent");

  cplx deriv(cplx zeta) const;
  cplx deriv2(cplx zeta) const;
  // h_psi' = psi'' / psi'
  cplx h_prime(cplx zeta) const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind { identity, joukowski, laurent } kind_ = Kind::identity;
  std::vector<cplx> d_;
  std::string name_;
};

struct GoluzinReport {
  double lhs = 0.0, rhs = 0.0;
  double simple_lhs = 0.0, simple_rhs = 0.0;
};

GoluzinReport goluzin_check(const ExteriorMap& psi, cplx zeta);

// nu_phi(z) = (1-|z|^2) g_phi'(z) / z on a polar grid
struct NuPhiResult {
  DiskField nu;
  double sup = 0.0;
  double residual = 0.0;  // max coefficient error of z^2 P nu against g_phi
};
NuPhiResult nu_phi(const SchlichtMap& phi, std::size_t J = 256);

}  // namespace dw
