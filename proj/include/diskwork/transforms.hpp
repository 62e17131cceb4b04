#pragma once

#include <memory>

#include "diskwork/analytic.hpp"
#include "diskwork/grids.hpp"

namespace dw {

// A bounded function on the disk (extended by zero outside).
class Symbol {
 public:
  enum class Kind { constant, monomial, mu0, radial, phase, callable, field };

  static Symbol constant(cplx c);
  // c * w^a * conj(w)^b
  static Symbol monomial(int a, int b, cplx c = 1.0);
  static Symbol conjugate() { return monomial(0, 1); }
  static Symbol mu0();
  // |w|^p
  static Symbol radial(double p);
  // exp(i phi(theta)) with phi(theta) = sum_k a_k cos(k theta) + b_k sin(k theta), k >= 1
  static Symbol phase(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);
  static Symbol phase_random(unsigned seed, int degree = 3, double amplitude = 1.0);
  // bound is an a-priori sup bound; pass kInf when unknown
  static Symbol callable(std::function<cplx(cplx)> f, std::string name, double bound = kInf);
  static Symbol field(DiskField f);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  cplx operator()(cplx w) const;
  bool is_field() const { return kind_ == Kind::field; }
  const DiskField& field_data() const { return *field_; }
  // mu*(z) = mu(conj z); fields are resampled at conjugated nodes
  Symbol reflected() const;
  // Scaled copy c * mu
  Symbol scaled(cplx c) const;
  // sup of |mu| (exact for tags, sampled otherwise)
  double sup_norm() const;
  // true when the ring Fourier coefficients decay only like r^n near the circle
  bool boundary_singular() const { return boundary_singular_; }

 private:
  Kind kind_ = Kind::constant;
  std::string name_;
  std::function<cplx(cplx)> eval_;
  std::shared_ptr<const DiskField> field_;
  double bound_ = kInf;
  bool boundary_singular_ = true;
  bool unbounded_ = false;
};

struct ProjectionOptions {
  std::size_t radial_nodes = 0;     // 0: J + 8
  double angular_factor = 16.0;     // ring count >= factor / (1 - r)
  std::size_t min_angular = 256;
};

struct ProjectionResult {
  PowerSeries series;
  double residual = 0.0;  // tail-coefficient magnitude
};

// Taylor coefficients of the Bergman projection, c_j = (j+1) int mu(w) conj(w)^j dA.
// J < 0 selects the default J = N/2 - 1 of the underlying grid.
ProjectionResult bergman_project(const Symbol& mu, long J = -1, const ProjectionOptions& opt = {});

// Moments m_j = int mu(w) w^j dA for j <= J.
std::vector<cplx> holomorphic_moments(const Symbol& mu, long J, const ProjectionOptions& opt = {});

cplx cauchy_transform(const Symbol& mu, cplx zeta, long J = 255, const ProjectionOptions& opt = {});

// S mu(zeta) = -z^2 P mu*(z) at z = 1/zeta, |zeta| > 1.
cplx beurling_transform_exterior(const Symbol& mu, cplx zeta, long J = -1,
                                 const ProjectionOptions& opt = {});
// Laurent coefficients d[k] of S mu(zeta) = sum_k d[k] zeta^-k (d[0] = d[1] = 0).
std::vector<cplx> beurling_exterior_laurent(const Symbol& mu, long J = -1,
                                            const ProjectionOptions& opt = {});
cplx eval_laurent(const std::vector<cplx>& d, cplx zeta);
cplx eval_laurent_deriv(const std::vector<cplx>& d, cplx zeta);

// (zeta - z) / (1 - conj(zeta) z)
cplx mobius(cplx zeta, cplx z);

// Dilate identity: int f(r z) conj(g(z)) dA against int f(z) conj(g(r z)) dA.
std::pair<cplx, cplx> dilate_symmetry(const PowerSeries& f, const PowerSeries& g, double r);

// Circle-disk pairing for a harmonic polynomial h = sum_n hn[n] e^{i n theta} r^|n|.
// hn indexed n = -K..K at hn[n+K]. Returns (<g_r, conj(z) h>_T, <g, (dh)_r>_D).
std::pair<cplx, cplx> circle_disk_pairing(const PowerSeries& g, const std::vector<cplx>& hn, double r);

}  // namespace dw
