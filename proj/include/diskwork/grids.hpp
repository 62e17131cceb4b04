#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dw {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values on N equispaced points of the circle |z| = radius, angles 2*pi*j/N.
struct CircleSamples {
  double radius = 1.0;
  std::vector<cplx> values;

  std::size_t size() const { return values.size(); }
  void validate() const;
};

// Taylor coefficients c[0..J] of a function holomorphic on the disk.
struct PowerSeries {
  std::vector<cplx> coeffs;

  PowerSeries() = default;
  explicit PowerSeries(std::vector<cplx> c) : coeffs(std::move(c)) {}

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;
  PowerSeries diff() const;
  // multiplies by z^k
  PowerSeries shifted(std::size_t k) const;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(cplx s, const PowerSeries& a);
PowerSeries series_product(const PowerSeries& a, const PowerSeries& b, std::size_t max_degree);
PowerSeries series_exp(const PowerSeries& a, std::size_t max_degree);
// requires a(0) != 0; branch fixed by log(a(0)) principal
PowerSeries series_log(const PowerSeries& a, std::size_t max_degree);

// Rings of a polar grid. Weights integrate against dA = dx dy / pi, so they sum to 1.
// Each ring carries its own angular count.
struct PolarGrid {
  std::vector<double> radii;
  std::vector<double> weights;
  std::vector<std::size_t> counts;

  std::size_t rings() const { return radii.size(); }
  std::size_t total() const;
  std::size_t offset(std::size_t ring) const;
  bool uniform() const;
  void validate() const;
};

struct DiskField {
  PolarGrid grid;
  std::vector<cplx> values;  // ring-major

  std::span<const cplx> ring(std::size_t i) const;
  std::span<cplx> ring(std::size_t i);
  cplx node(std::size_t ring, std::size_t k) const;
  void validate() const;
};

// Gauss-Legendre rule on [a,b].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadRule gauss_legendre(std::size_t n, double a = 0.0, double b = 1.0);

// In-place DFT. sign = -1 forward (exp(-i...)), +1 backward. No normalization.
void fft(std::span<cplx> data, int sign);
bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

// Angular count for a boundary dilate at radius r.
std::size_t angular_count(double r, double factor = 16.0, std::size_t min_count = 256);

// r = 1 - 2^-m for m in [m_min, m_max], capped at 1 - cap.
std::vector<double> radii_ladder(int m_min = 4, int m_max = 20, double cap = 1e-6);

cplx circle_integral(const CircleSamples& f);
cplx disk_integral(const DiskField& f);
PowerSeries taylor_from_circle(const CircleSamples& f);

// Samples a series on the circle |z| = r (coefficients beyond N fold by aliasing).
CircleSamples sample_circle(const PowerSeries& s, double r, std::size_t n);

// Radial rule: Gauss-Legendre in r on each panel, weights 2 r dr.
// breaks are interior panel boundaries in (0,1).
PolarGrid polar_grid(std::size_t nodes_per_panel, std::size_t angular,
                     const std::vector<double>& breaks = {});
// Per-ring angular count max(min_count, factor/(1-r)), rounded up to a power of two.
PolarGrid adaptive_polar_grid(std::size_t nodes_per_panel, double factor, std::size_t min_count,
                              const std::vector<double>& breaks = {});

DiskField sample_field(const PolarGrid& g, const std::function<cplx(cplx)>& f);

// Angular Fourier coefficients of one ring: out[k] is the mean of f * exp(-i k theta),
// with index k taken modulo the ring count (FFT ordering).
std::vector<cplx> ring_fourier(const DiskField& f, std::size_t ring);

// Low-frequency Fourier bins of theta -> f(r e^{i theta}) sampled at n = m*p points,
// computed blockwise so the n samples are never stored. Returns p bins in FFT ordering.
std::vector<cplx> ring_bins_streamed(const std::function<cplx(cplx)>& f, double r, std::size_t n,
                                     std::size_t p);

}  // namespace dw
