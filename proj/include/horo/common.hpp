#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace horo {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<Complex<Scalar>, 2, 2>;

/// Raised when an input violates a geometric precondition (zero spinor,
/// point off the light cone, degenerate tetrahedron, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Mixed absolute/relative tolerance: |x - y| <= atol + rtol * max(|x|, |y|).
struct Tolerance {
  double atol = 1e-12;
  double rtol = 1e-9;

  template <typename Scalar>
  Scalar bound(Scalar scale) const {
    return static_cast<Scalar>(atol) + static_cast<Scalar>(rtol) * scale;
  }
};

inline constexpr Tolerance kDefaultTolerance{};

template <typename Scalar>
bool approx_equal(Scalar x, Scalar y, const Tolerance& tol = kDefaultTolerance) {
  using std::abs;
  return abs(x - y) <= tol.bound(std::max(abs(x), abs(y)));
}

template <typename Scalar>
bool approx_equal(const Complex<Scalar>& x, const Complex<Scalar>& y,
                  const Tolerance& tol = kDefaultTolerance) {
  using std::abs;
  return abs(x - y) <= tol.bound(std::max(abs(x), abs(y)));
}

/// Componentwise comparison of dense objects, scaled by the larger norm.
template <typename DerivedA, typename DerivedB>
bool approx_equal_dense(const Eigen::MatrixBase<DerivedA>& x, const Eigen::MatrixBase<DerivedB>& y,
                        const Tolerance& tol = kDefaultTolerance) {
  using std::max;
  const auto scale = max(x.norm(), y.norm());
  return (x - y).norm() <= tol.bound(scale);
}

/// Reduce an angle into [0, period).
template <typename Scalar>
Scalar wrap_angle(Scalar angle, Scalar period) {
  Scalar r = std::fmod(angle, period);
  if (r < Scalar(0)) r += period;
  if (r >= period) r -= period;
  return r;
}

template <typename Scalar>
constexpr Scalar pi_v = std::numbers::pi_v<Scalar>;

}  // namespace horo
