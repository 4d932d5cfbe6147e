#pragma once

// Hyperboloid, disc and upper half space models of hyperbolic 3-space,
// horospheres in each, and the explicit spinor -> decorated horosphere map.

#include "horo/minkowski.hpp"

namespace horo {

/// Horosphere {x in H : <x, p> = 1} of the hyperboloid, stored as p in L+.
template <typename Scalar>
class HorosphereH {
 public:
  explicit HorosphereH(const MinkVec<Scalar>& p, const Tolerance& tol = kDefaultTolerance) : p_(p) {
    if (!p.is_future_null(tol)) throw DomainError("horosphere point must be lightlike and future-pointing");
  }
  const MinkVec<Scalar>& point() const { return p_; }

 private:
  MinkVec<Scalar> p_;
};

template <typename Scalar>
HorosphereH<Scalar> h_map(const MinkVec<Scalar>& p, const Tolerance& tol = kDefaultTolerance) {
  return HorosphereH<Scalar>(p, tol);
}

template <typename Scalar>
MinkVec<Scalar> h_inv(const HorosphereH<Scalar>& h) {
  return h.point();
}

/// <q, q> = 1 with T > 0.
template <typename Scalar>
bool on_hyperboloid(const MinkVec<Scalar>& q, const Tolerance& tol = kDefaultTolerance) {
  return q.T() > Scalar(0) && std::abs(q.mink_norm2() - Scalar(1)) <= tol.bound(q.euclid_norm2());
}

namespace detail {
template <typename Scalar>
void require_hyperboloid(const MinkVec<Scalar>& q, const Tolerance& tol) {
  if (!on_hyperboloid(q, tol)) throw DomainError("point is not on the hyperboloid");
}
}  // namespace detail

template <typename Scalar>
bool on_horosphere(const MinkVec<Scalar>& q, const HorosphereH<Scalar>& h, const Tolerance& tol = kDefaultTolerance) {
  detail::require_hyperboloid(q, tol);
  const Scalar qp = mink_inner(q, h.point());
  return std::abs(qp - Scalar(1)) <= tol.bound(std::max(std::abs(qp), Scalar(1)));
}

/// Signed distance log <q, p>, negative inside the horoball.
template <typename Scalar>
Scalar dist_point_horosphere(const MinkVec<Scalar>& q, const HorosphereH<Scalar>& h,
                             const Tolerance& tol = kDefaultTolerance) {
  detail::require_hyperboloid(q, tol);
  return std::log(mink_inner(q, h.point()));
}

/// Signed distance rho with <p1, p2> = 2 e^rho; -inf for a common centre.
template <typename Scalar>
Scalar dist_horospheres(const HorosphereH<Scalar>& h1, const HorosphereH<Scalar>& h2,
                        const Tolerance& tol = kDefaultTolerance) {
  const Scalar ip = mink_inner(h1.point(), h2.point());
  if (ip <= tol.bound(h1.point().T() * h2.point().T())) return -std::numeric_limits<Scalar>::infinity();
  return std::log(ip / Scalar(2));
}

/// Hyperbolic distance on the hyperboloid.
template <typename Scalar>
Scalar hyperboloid_distance(const MinkVec<Scalar>& q1, const MinkVec<Scalar>& q2) {
  return std::acosh(std::max(Scalar(1), mink_inner(q1, q2)));
}

/// Boundary map L+ -> S^2, (X/T, Y/T, Z/T).
template <typename Scalar>
CelestialPoint<Scalar> i_boundary(const MinkVec<Scalar>& p, const Tolerance& tol = kDefaultTolerance) {
  if (!p.is_future_null(tol)) throw DomainError("i_boundary needs a point of L+");
  return CelestialPoint<Scalar>(Vector3<Scalar>(p.xyz() / p.T()), Scalar(1e-9));
}

/// Hyperboloid -> open unit ball, (X, Y, Z) / (1 + T).
template <typename Scalar>
Vector3<Scalar> hyperboloid_to_disc(const MinkVec<Scalar>& q, const Tolerance& tol = kDefaultTolerance) {
  detail::require_hyperboloid(q, tol);
  return q.xyz() / (Scalar(1) + q.T());
}

/// Boundary map S^2 -> C ∪ {∞}, (x + iy) / (1 - z). The north pole goes to ∞.
template <typename Scalar>
BoundaryPoint<Scalar> j_boundary(const CelestialPoint<Scalar>& u) {
  const Vector3<Scalar>& v = u.vector();
  if (v.z() > Scalar(0)) {
    // (x + iy)/(1 - z) = (1 + z)/(x - iy) on the sphere; better conditioned near the pole.
    const Complex<Scalar> w(v.x(), -v.y());
    if (std::abs(w) == Scalar(0)) return BoundaryPoint<Scalar>::infinity();
    return BoundaryPoint<Scalar>::finite((Scalar(1) + v.z()) / w);
  }
  return BoundaryPoint<Scalar>::finite(Complex<Scalar>(v.x(), v.y()) / (Scalar(1) - v.z()));
}

/// Point of the upper half space: horizontal coordinate w and height > 0.
template <typename Scalar>
struct UpperPoint {
  Complex<Scalar> w;
  Scalar height;
};

/// The isometry of the ball onto the upper half space extending j_boundary:
/// inversion in the sphere of radius sqrt 2 about (0, 0, 1), then z -> -z.
template <typename Scalar>
UpperPoint<Scalar> disc_to_upper(const Vector3<Scalar>& x) {
  const Vector3<Scalar> north(0, 0, 1);
  const Vector3<Scalar> rel = x - north;
  const Vector3<Scalar> img = north + Scalar(2) * rel / rel.squaredNorm();
  return {Complex<Scalar>(img.x(), img.y()), -img.z()};
}

template <typename Scalar>
Scalar upper_distance(const UpperPoint<Scalar>& p, const UpperPoint<Scalar>& q) {
  const Scalar dh = p.height - q.height;
  return std::acosh(Scalar(1) + (std::norm(p.w - q.w) + dh * dh) / (Scalar(2) * p.height * q.height));
}

/// Decorated horosphere in the upper half space. |delta| is the Euclidean
/// diameter (finite centre) or height (centre ∞); arg(delta) is the
/// decoration direction at the north pole (or everywhere, centre ∞).
template <typename Scalar>
class DecoratedHorosphere {
 public:
  DecoratedHorosphere(const BoundaryPoint<Scalar>& center, Complex<Scalar> delta) : center_(center), delta_(delta) {
    if (delta == Complex<Scalar>(0)) throw DomainError("horosphere decoration must be nonzero");
  }

  const BoundaryPoint<Scalar>& center() const { return center_; }
  Complex<Scalar> delta() const { return delta_; }
  /// Euclidean diameter, or height for centre ∞.
  Scalar size() const { return std::abs(delta_); }

 private:
  BoundaryPoint<Scalar> center_;
  Complex<Scalar> delta_;
};

template <typename Scalar>
bool approx_equal(const DecoratedHorosphere<Scalar>& x, const DecoratedHorosphere<Scalar>& y,
                  const Tolerance& tol = kDefaultTolerance) {
  return approx_equal(x.center(), y.center(), tol) && approx_equal(x.delta(), y.delta(), tol);
}

/// (xi, eta) -> centre xi/eta with delta = i eta^-2, or centre ∞ with delta = i xi^2.
template <typename Scalar>
DecoratedHorosphere<Scalar> K_map(const NonzeroSpinor<Scalar>& k) {
  const Complex<Scalar> i(0, 1);
  if (k.eta() == Complex<Scalar>(0)) return {BoundaryPoint<Scalar>::infinity(), i * k.xi() * k.xi()};
  return {BoundaryPoint<Scalar>::finite(k.xi() / k.eta()), i / (k.eta() * k.eta())};
}

/// One of the two spinors ±k with K_map(k) = h.
template <typename Scalar>
NonzeroSpinor<Scalar> spinor_of(const DecoratedHorosphere<Scalar>& h) {
  const Complex<Scalar> i(0, 1);
  if (h.center().is_infinite()) return NonzeroSpinor<Scalar>(std::sqrt(h.delta() / i), Complex<Scalar>(0));
  const Complex<Scalar> eta = std::sqrt(i / h.delta());
  return NonzeroSpinor<Scalar>(h.center().value() * eta, eta);
}

/// z -> (alpha z + beta) / (gamma z + delta) on C ∪ {∞}.
template <typename Scalar>
BoundaryPoint<Scalar> mobius_apply(const SL2C<Scalar>& a, const BoundaryPoint<Scalar>& p) {
  if (p.is_infinite()) {
    if (a.gamma() == Complex<Scalar>(0)) return BoundaryPoint<Scalar>::infinity();
    return BoundaryPoint<Scalar>::finite(a.alpha() / a.gamma());
  }
  const Complex<Scalar> z = p.value();
  const Complex<Scalar> den = a.gamma() * z + a.delta();
  // A pole hit up to a few ulps of cancellation is the pole.
  const Scalar pole_tol = Scalar(8) * std::numeric_limits<Scalar>::epsilon() *
                          (std::abs(a.gamma()) * std::abs(z) + std::abs(a.delta()));
  if (std::abs(den) <= pole_tol) return BoundaryPoint<Scalar>::infinity();
  return BoundaryPoint<Scalar>::finite((a.alpha() * z + a.beta()) / den);
}

/// Isometric action on decorated horospheres. Finite -> finite scales the
/// decoration by m'(z) = (gamma z + delta)^-2; every case involving ∞ reduces
/// to delta' = -1 / (gamma^2 delta), except ∞ -> ∞ where delta' = alpha^2 delta.
template <typename Scalar>
DecoratedHorosphere<Scalar> mobius_act_horosphere(const SL2C<Scalar>& a, const DecoratedHorosphere<Scalar>& h) {
  const BoundaryPoint<Scalar> c = mobius_apply(a, h.center());
  if (h.center().is_infinite() && c.is_infinite()) return {c, a.alpha() * a.alpha() * h.delta()};
  if (h.center().is_infinite() || c.is_infinite()) return {c, Scalar(-1) / (a.gamma() * a.gamma() * h.delta())};
  const Complex<Scalar> m = a.gamma() * h.center().value() + a.delta();
  return {c, h.delta() / (m * m)};
}

/// Signed distance between the underlying horospheres computed from
/// Euclidean data alone: e^rho = |z1 - z2|^2 / (|delta1| |delta2|), or
/// height / diameter when one centre is ∞. -inf for a common centre.
template <typename Scalar>
Scalar horosphere_distance_euclidean(const DecoratedHorosphere<Scalar>& h1, const DecoratedHorosphere<Scalar>& h2,
                                     const Tolerance& tol = kDefaultTolerance) {
  const Scalar neg_inf = -std::numeric_limits<Scalar>::infinity();
  const bool inf1 = h1.center().is_infinite(), inf2 = h2.center().is_infinite();
  if (inf1 && inf2) return neg_inf;
  if (inf1) return std::log(h1.size() / h2.size());
  if (inf2) return std::log(h2.size() / h1.size());
  const Complex<Scalar> z1 = h1.center().value(), z2 = h2.center().value();
  if (std::abs(z1 - z2) <= tol.bound(std::max(std::abs(z1), std::abs(z2)))) return neg_inf;
  return Scalar(2) * std::log(std::abs(z1 - z2)) - std::log(h1.size()) - std::log(h2.size());
}

/// Spin-decorated horosphere; the spinor itself is the spin coordinate, so
/// k and -k are distinct values with the same underlying decoration.
template <typename Scalar>
class SpinDecoratedHorosphere {
 public:
  explicit SpinDecoratedHorosphere(const NonzeroSpinor<Scalar>& k) : k_(k) {}

  const NonzeroSpinor<Scalar>& spinor() const { return k_; }
  DecoratedHorosphere<Scalar> project() const { return K_map(k_); }
  SpinDecoratedHorosphere act(const SL2C<Scalar>& a) const { return SpinDecoratedHorosphere(act_spinor(a, k_)); }

 private:
  NonzeroSpinor<Scalar> k_;
};

}  // namespace horo
