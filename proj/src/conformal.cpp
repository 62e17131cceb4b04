#include "diskwork/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "diskwork/bloch.hpp"
#include "diskwork/transforms.hpp"

namespace dw {

SchlichtMap SchlichtMap::identity() {
  SchlichtMap m;
  m.kind_ = Kind::identity;
  m.name_ = "identity";
  m.g_ = HoloFn(PowerSeries({0.0}));
  m.h_ = HoloFn(PowerSeries({0.0}));
  return m;
}

SchlichtMap SchlichtMap::koebe(double alpha) {
  SchlichtMap m;
  m.kind_ = Kind::koebe;
  m.alpha_ = alpha;
  m.name_ = "koebe";
  const cplx c = std::polar(1.0, alpha);
  m.g_ = HoloFn::closed([c](cplx z) { return std::log(1.0 - c * c * z * z); },
                        [c](cplx z) { return -2.0 * c * c * z / (1.0 - c * c * z * z); }, "g koebe");
  m.h_ = HoloFn::closed([c](cplx z) { return std::log(1.0 + c * z) - 3.0 * std::log(1.0 - c * z); },
                        [c](cplx z) { return c / (1.0 + c * z) + 3.0 * c / (1.0 - c * z); }, "h koebe");
  return m;
}

SchlichtMap SchlichtMap::from_log_derivative(const PowerSeries& b, std::size_t degree) {
  if (!b.coeffs.empty() && std::abs(b.coeffs[0]) != 0.0) throw NumericError("log derivative must vanish at 0");
  SchlichtMap m;
  m.kind_ = Kind::series;
  m.name_ = "series";
  const PowerSeries e = series_exp(b, degree);
  std::vector<cplx> a(degree + 2, 0.0);
  for (std::size_t k = 0; k <= degree; ++k) a[k + 1] = e.coeffs[k] / static_cast<double>(k + 1);
  m.phi_ = PowerSeries(a);
  m.dphi_ = m.phi_.diff();
  m.d2phi_ = m.dphi_.diff();
  // g = log phi' - 2 log(phi / z)
  const PowerSeries q(std::vector<cplx>(a.begin() + 1, a.end()));
  m.g_ = HoloFn(b - 2.0 * series_log(q, degree));
  std::vector<cplx> bc = b.coeffs;
  bc.resize(std::max(bc.size(), std::size_t{1}));
  m.h_ = HoloFn(PowerSeries(bc));
  return m;
}

SchlichtMap SchlichtMap::random_becker(unsigned seed, double scale, int degree) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<cplx> c(degree + 1, 0.0);
  for (int k = 1; k <= degree; ++k) c[k] = cplx(nd(rng), nd(rng)) / static_cast<double>(k);
  PowerSeries b(c);
  const double s = bloch_seminorm(HoloFn(b));
  b = (scale / s) * b;
  SchlichtMap m = from_log_derivative(b);
  m.name_ = "becker:" + std::to_string(seed);
  return m;
}

cplx SchlichtMap::value(cplx z) const {
  switch (kind_) {
    case Kind::identity: return z;
    case Kind::koebe: {
      const cplx c = std::polar(1.0, alpha_);
      return z / ((1.0 - c * z) * (1.0 - c * z));
    }
    default: return phi_(z);
  }
}

cplx SchlichtMap::deriv(cplx z) const {
  switch (kind_) {
    case Kind::identity: return 1.0;
    case Kind::koebe: {
      const cplx c = std::polar(1.0, alpha_);
      return (1.0 + c * z) / std::pow(1.0 - c * z, 3);
    }
    default: return dphi_(z);
  }
}

cplx SchlichtMap::deriv2(cplx z) const {
  switch (kind_) {
    case Kind::identity: return 0.0;
    case Kind::koebe: return deriv(z) * h_.deriv(z);
    default: return d2phi_(z);
  }
}

cplx g_phi(const SchlichtMap& phi, cplx z) {
  if (std::abs(z) >= 1.0) throw NumericError("point outside the disk");
  if (z == 0.0) return 0.0;
  if (std::abs(phi.value(z)) == 0.0) throw NumericError("map vanishes away from the origin");
  return phi.g_fn()(z);
}

double koebe_bieberbach_max(const SchlichtMap& phi, int level) {
  double m = 0.0;
  for (const auto& z : seminorm_nodes(level)) {
    const cplx v = (1.0 - std::norm(z)) * phi.deriv2(z) / phi.deriv(z) - 2.0 * std::conj(z);
    m = std::max(m, std::abs(v));
  }
  return m;
}

std::pair<double, double> elliptic_EK(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw NumericError("modulus outside [0,1]");
  if (s == 1.0) return {1.0, kInf};
  return {std::comp_ellint_2(s), std::comp_ellint_1(s)};
}

ExteriorMap ExteriorMap::identity() {
  ExteriorMap m;
  m.kind_ = Kind::identity;
  m.name_ = "identity";
  return m;
}

ExteriorMap ExteriorMap::joukowski() {
  ExteriorMap m;
  m.kind_ = Kind::joukowski;
  m.name_ = "joukowski";
  return m;
}

ExteriorMap ExteriorMap::from_derivative_laurent(std::vector<cplx> d, std::string name) {
  if (d.size() < 2 || std::abs(d[0] - 1.0) > 1e-14 || std::abs(d[1]) > 1e-14)
    throw NumericError("derivative must be 1 + O(zeta^-2)");
  ExteriorMap m;
  m.kind_ = Kind::laurent;
  m.d_ = std::move(d);
  m.name_ = std::move(name);
  return m;
}

cplx ExteriorMap::deriv(cplx zeta) const {
  switch (kind_) {
    case Kind::identity: return 1.0;
    case Kind::joukowski: return 1.0 - 1.0 / (zeta * zeta);
    default: return eval_laurent(d_, zeta);
  }
}

cplx ExteriorMap::deriv2(cplx zeta) const {
  switch (kind_) {
    case Kind::identity: return 0.0;
    case Kind::joukowski: return 2.0 / (zeta * zeta * zeta);
    default: return eval_laurent_deriv(d_, zeta);
  }
}

cplx ExteriorMap::h_prime(cplx zeta) const { return deriv2(zeta) / deriv(zeta); }

GoluzinReport goluzin_check(const ExteriorMap& psi, cplx zeta) {
  const double rho2 = std::norm(zeta);
  if (rho2 <= 1.0) throw NumericError("point must lie outside the closed disk");
  const auto [E, K] = elliptic_EK(1.0 / std::sqrt(rho2));
  const double ratio = E / K;
  const cplx zh = zeta * psi.h_prime(zeta);
  GoluzinReport g;
  g.lhs = std::abs(zh + (4.0 * rho2 - 2.0) / (rho2 - 1.0) - 4.0 * rho2 / (rho2 - 1.0) * ratio);
  g.rhs = 4.0 * rho2 / (rho2 - 1.0) * (1.0 - ratio);
  g.simple_lhs = std::abs(zh);
  g.simple_rhs = 6.0 / (rho2 - 1.0);
  return g;
}

NuPhiResult nu_phi(const SchlichtMap& phi, std::size_t J) {
  const HoloFn& g = phi.g_fn();
  // g'(z)/z, with the limit 2 g2 at the origin
  const cplx g2 = g.deriv(1e-7) / 1e-7;
  auto nu = [&](cplx z) {
    const double r2 = std::norm(z);
    if (std::abs(z) < 1e-7) return (1.0 - r2) * g2;
    return (1.0 - r2) * g.deriv(z) / z;
  };
  NuPhiResult out;
  out.nu = sample_field(polar_grid(64, 256, {0.5, 0.9, 0.99}), nu);
  for (const auto& v : out.nu.values) out.sup = std::max(out.sup, std::abs(v));
  const Symbol s = Symbol::callable(nu, "nu_phi", 6.0);
  const PowerSeries p = bergman_project(s, static_cast<long>(J)).series;
  // Taylor coefficients of g from its values on a circle
  const std::size_t n = next_pow2(4 * (J + 3));
  std::vector<cplx> gc;
  if (g.has_series()) {
    gc = g.series().coeffs;
    gc.resize(std::max(gc.size(), J + 3), 0.0);
  } else {
    // close to the circle so that coefficient J+2 survives the r^-n rescaling
    gc = taylor_from_circle(g.on_circle(0.95, n)).coeffs;
  }
  for (std::size_t j = 0; j <= J; ++j) out.residual = std::max(out.residual, std::abs(p.coeffs[j] - gc[j + 2]));
  return out;
}

}  // namespace dw
