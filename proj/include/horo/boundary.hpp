#pragma once

#include "horo/common.hpp"

namespace horo {

/// A point of C ∪ {∞}.
template <typename Scalar>
class BoundaryPoint {
 public:
  static BoundaryPoint infinity() { return BoundaryPoint(true, {}); }
  static BoundaryPoint finite(Complex<Scalar> z) { return BoundaryPoint(false, z); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Throws when called on ∞.
  Complex<Scalar> value() const {
    if (infinite_) throw DomainError("boundary point is infinite");
    return z_;
  }

  friend bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
    return x.infinite_ == y.infinite_ && (x.infinite_ || x.z_ == y.z_);
  }

 private:
  BoundaryPoint(bool inf, Complex<Scalar> z) : infinite_(inf), z_(z) {}

  bool infinite_;
  Complex<Scalar> z_;
};

template <typename Scalar>
bool approx_equal(const BoundaryPoint<Scalar>& x, const BoundaryPoint<Scalar>& y,
                  const Tolerance& tol = kDefaultTolerance) {
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
  return approx_equal(x.value(), y.value(), tol);
}

}  // namespace horo
