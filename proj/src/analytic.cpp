#include "diskwork/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace dw {

HoloFn::HoloFn(PowerSeries s) : series_(std::move(s)), name_("series") {
  dseries_ = series_->diff();
}

HoloFn HoloFn::closed(Fn value, Fn deriv, std::string name) {
  HoloFn h;
  h.series_.reset();
  h.dseries_.reset();
  h.value_ = std::move(value);
  h.deriv_ = std::move(deriv);
  h.name_ = std::move(name);
  return h;
}

cplx HoloFn::operator()(cplx z) const { return series_ ? (*series_)(z) : value_(z); }

cplx HoloFn::deriv(cplx z) const { return dseries_ ? (*dseries_)(z) : deriv_(z); }

void HoloFn::circle_blocks(double r, std::size_t n,
                           const std::function<void(std::span<const cplx>)>& sink) const {
  if (n == 0) return;
  if (!series_) {
    const std::size_t block = std::min<std::size_t>(n, 4096);
    std::vector<cplx> buf(block);
    std::size_t done = 0;
    while (done < n) {
      const std::size_t len = std::min(block, n - done);
      for (std::size_t k = 0; k < len; ++k) {
        const double th = 2.0 * kPi * static_cast<double>(done + k) / static_cast<double>(n);
        buf[k] = value_(std::polar(r, th));
      }
      sink(std::span<const cplx>(buf.data(), len));
      done += len;
    }
    return;
  }
  const auto& c = series_->coeffs;
  // trim coefficients that vanish after scaling by r^k
  std::size_t deg = c.size();
  {
    double rk = 1.0;
    std::size_t last = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (std::abs(c[k]) * rk > 0.0) last = k;
      rk *= r;
      if (rk < 1e-300) break;
    }
    deg = last + 1;
  }
  std::size_t p = std::max<std::size_t>(256, next_pow2(2 * deg));
  if (n % p != 0 || p > n) p = n;  // n is a power of two in practice
  const std::size_t m = n / p;
  std::vector<cplx> scaled(deg);
  {
    double rk = 1.0;
    for (std::size_t k = 0; k < deg; ++k) {
      scaled[k] = c[k] * rk;
      rk *= r;
    }
  }
  std::vector<cplx> buf(p);
  for (std::size_t q = 0; q < m; ++q) {
    // samples at angles 2 pi (q + m l)/n, l < p
    std::fill(buf.begin(), buf.end(), cplx(0.0));
    const double phase = 2.0 * kPi * static_cast<double>(q) / static_cast<double>(n);
    const cplx step = std::polar(1.0, phase);
    cplx tw = 1.0;
    for (std::size_t k = 0; k < deg; ++k) {
      buf[k % p] += scaled[k] * tw;
      tw *= step;
    }
    fft(buf, +1);
    sink(std::span<const cplx>(buf.data(), p));
  }
}

CircleSamples HoloFn::on_circle(double r, std::size_t n) const {
  CircleSamples out;
  out.radius = r;
  if (series_) {
    out = sample_circle(*series_, r, n);
    return out;
  }
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.values[k] = value_(std::polar(r, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n)));
  return out;
}

}  // namespace dw
