#pragma once

#include <cmath>

namespace youngdim {

/// Neumaier-compensated running sum held as an unevaluated pair of long
/// doubles. On x86-64 that is two 64-bit mantissas, i.e. ~38 significant
/// digits for the represented value.
class ExtendedSum {
 public:
  ExtendedSum() = default;
  explicit ExtendedSum(long double value) : hi_(value) {}

  void add(long double x) noexcept {
    const long double t = hi_ + x;
    if (std::fabs(hi_) >= std::fabs(x)) {
      lo_ += (hi_ - t) + x;
    } else {
      lo_ += (x - t) + hi_;
    }
    hi_ = t;
  }

  ExtendedSum& operator+=(long double x) noexcept {
    add(x);
    return *this;
  }

  long double hi() const noexcept { return hi_; }
  long double lo() const noexcept { return lo_; }
  long double value() const noexcept { return hi_ + lo_; }

  /// a - scale * b, evaluated component-wise before rounding.
  friend long double scaled_difference(const ExtendedSum& a, long double scale,
                                       const ExtendedSum& b) noexcept {
    return (a.hi_ - scale * b.hi_) + (a.lo_ - scale * b.lo_);
  }

  friend bool operator==(const ExtendedSum&, const ExtendedSum&) = default;

 private:
  long double hi_ = 0.0L;
  long double lo_ = 0.0L;
};

}  // namespace youngdim
