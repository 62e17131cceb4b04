#pragma once

#include <functional>
#include <optional>
#include <string>

#include "diskwork/grids.hpp"

namespace dw {

// A holomorphic function on the disk, either a truncated Taylor series or a
// closed form with its derivative. Closed forms are needed near the circle,
// where slowly decaying series would need millions of terms.
class HoloFn {
 public:
  using Fn = std::function<cplx(cplx)>;

  HoloFn() : HoloFn(PowerSeries(std::vector<cplx>{0.0})) {}
  HoloFn(PowerSeries s);  // NOLINT(google-explicit-constructor)
  static HoloFn closed(Fn value, Fn deriv, std::string name);

  cplx operator()(cplx z) const;
  cplx deriv(cplx z) const;

  bool has_series() const { return series_.has_value(); }
  const PowerSeries& series() const { return *series_; }
  const std::string& name() const { return name_; }

  // Feeds the n samples of zeta -> g(r zeta) to sink in blocks; order within the
  // circle is unspecified. Series use blockwise inverse FFTs.
  void circle_blocks(double r, std::size_t n,
                     const std::function<void(std::span<const cplx>)>& sink) const;
  CircleSamples on_circle(double r, std::size_t n) const;

 private:
  std::optional<PowerSeries> series_;
  std::optional<PowerSeries> dseries_;
  Fn value_, deriv_;
  std::string name_;
};

}  // namespace dw
