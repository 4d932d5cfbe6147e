#pragma once

// Complex distances and lambda lengths between (spin-)decorated horospheres.

#include "horo/hyperbolic.hpp"

namespace horo {

/// Decorated distances carry theta mod 2 pi; spin-decorated ones mod 4 pi.
enum class AngleMode { Decorated, Spin };

template <typename Scalar>
Scalar angle_period(AngleMode mode) {
  return mode == AngleMode::Spin ? Scalar(4) * pi_v<Scalar> : Scalar(2) * pi_v<Scalar>;
}

/// d = rho + i theta. A common centre is rho = -inf with same_center set.
template <typename Scalar>
class ComplexDistance {
 public:
  ComplexDistance(Scalar rho, Scalar theta, AngleMode mode)
      : rho_(rho), theta_(wrap_angle(theta, angle_period<Scalar>(mode))), mode_(mode) {}

  static ComplexDistance common_center(AngleMode mode) {
    ComplexDistance d(Scalar(0), Scalar(0), mode);
    d.rho_ = -std::numeric_limits<Scalar>::infinity();
    d.same_center_ = true;
    return d;
  }

  Scalar rho() const { return rho_; }
  Scalar theta() const { return theta_; }
  AngleMode mode() const { return mode_; }
  bool same_center() const { return same_center_; }

  /// e^d; zero for a common centre.
  Complex<Scalar> exp() const {
    if (same_center_) return Complex<Scalar>(0);
    return std::polar(std::exp(rho_), theta_);
  }

 private:
  Scalar rho_;
  Scalar theta_;
  AngleMode mode_;
  bool same_center_ = false;
};

/// lambda = exp(d / 2); zero exactly for a common centre.
template <typename Scalar>
struct LambdaLength {
  Complex<Scalar> value;

  static LambdaLength from_distance(const ComplexDistance<Scalar>& d) {
    if (d.same_center()) return {Complex<Scalar>(0)};
    return {std::polar(std::exp(d.rho() / Scalar(2)), d.theta() / Scalar(2))};
  }
};

/// lambda_12 = {k1, k2}.
template <typename Scalar>
LambdaLength<Scalar> lambda(const NonzeroSpinor<Scalar>& k1, const NonzeroSpinor<Scalar>& k2) {
  return {inner_product<Scalar>(k1, k2)};
}

/// Pairs this close to a common centre are excluded from oracle comparisons.
template <typename Scalar>
bool is_near_degenerate(const NonzeroSpinor<Scalar>& k1, const NonzeroSpinor<Scalar>& k2,
                        Scalar threshold = Scalar(1e-6)) {
  return std::abs(inner_product<Scalar>(k1, k2)) < threshold;
}

/// d = 2 Log {k1, k2}, theta in [0, 4 pi).
template <typename Scalar>
ComplexDistance<Scalar> complex_distance_spin(const NonzeroSpinor<Scalar>& k1, const NonzeroSpinor<Scalar>& k2,
                                              const Tolerance& tol = kDefaultTolerance) {
  const Complex<Scalar> lam = inner_product<Scalar>(k1, k2);
  if (std::abs(lam) <= tol.bound(std::sqrt(k1.norm2() * k2.norm2())))
    return ComplexDistance<Scalar>::common_center(AngleMode::Spin);
  return {Scalar(2) * std::log(std::abs(lam)), Scalar(2) * std::arg(lam), AngleMode::Spin};
}

/// The Möbius map sending centre1 -> ∞ and centre2 -> 0, together with the
/// images of both horospheres.
template <typename Scalar>
struct StandardPosition {
  SL2C<Scalar> normalizer;
  DecoratedHorosphere<Scalar> at_infinity;
  DecoratedHorosphere<Scalar> at_zero;
};

template <typename Scalar>
SL2C<Scalar> normalizer_for(const BoundaryPoint<Scalar>& c1, const BoundaryPoint<Scalar>& c2) {
  using C = Complex<Scalar>;
  if (c1.is_infinite()) return SL2C<Scalar>(C(1), -c2.value(), C(0), C(1));
  if (c2.is_infinite()) return SL2C<Scalar>(C(0), C(-1), C(1), -c1.value());
  // z -> (z - z2) / (z - z1), scaled to determinant 1.
  const C s = std::sqrt(c2.value() - c1.value());
  return SL2C<Scalar>(C(1) / s, -c2.value() / s, C(1) / s, -c1.value() / s, Scalar(1e-9));
}

/// Requires distinct centres.
template <typename Scalar>
StandardPosition<Scalar> standard_position(const DecoratedHorosphere<Scalar>& h1,
                                           const DecoratedHorosphere<Scalar>& h2) {
  const SL2C<Scalar> a = normalizer_for(h1.center(), h2.center());
  DecoratedHorosphere<Scalar> g1 = mobius_act_horosphere(a, h1);
  DecoratedHorosphere<Scalar> g2 = mobius_act_horosphere(a, h2);
  if (!g1.center().is_infinite()) throw DomainError("normalization failed to send the first centre to infinity");
  // The second centre lands on 0 up to rounding; pin it.
  g2 = DecoratedHorosphere<Scalar>(BoundaryPoint<Scalar>::finite(Complex<Scalar>(0)), g2.delta());
  return {a, g1, g2};
}

/// Geometric complex distance between decorated horospheres, theta in
/// [0, 2 pi). In standard position, with the plane at ∞ carrying alpha and
/// the sphere at 0 carrying beta, d = Log(alpha / beta).
template <typename Scalar>
ComplexDistance<Scalar> complex_distance_geometric(const DecoratedHorosphere<Scalar>& h1,
                                                   const DecoratedHorosphere<Scalar>& h2,
                                                   const Tolerance& tol = kDefaultTolerance) {
  const auto& c1 = h1.center();
  const auto& c2 = h2.center();
  if (approx_equal(c1, c2, tol)) return ComplexDistance<Scalar>::common_center(AngleMode::Decorated);
  const StandardPosition<Scalar> sp = standard_position(h1, h2);
  const Complex<Scalar> alpha = sp.at_infinity.delta();
  const Complex<Scalar> beta = sp.at_zero.delta();
  return {std::log(std::abs(alpha)) - std::log(std::abs(beta)), std::arg(alpha / beta), AngleMode::Decorated};
}

}  // namespace horo
