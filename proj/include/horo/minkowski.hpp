#pragma once

// Minkowski space R^{1,3}, the isomorphism with Hermitian matrices, null
// flags, and the spinor frame e1, e2, e3.

#include "horo/boundary.hpp"
#include "horo/spinor.hpp"

namespace horo {

/// Point (T, X, Y, Z) of R^{1,3} with the metric T^2 - X^2 - Y^2 - Z^2.
template <typename Scalar>
class MinkVec {
 public:
  MinkVec() : v_(Vector4<Scalar>::Zero()) {}
  MinkVec(Scalar t, Scalar x, Scalar y, Scalar z) : v_(t, x, y, z) {}
  explicit MinkVec(const Vector4<Scalar>& v) : v_(v) {}

  Scalar T() const { return v_(0); }
  Scalar X() const { return v_(1); }
  Scalar Y() const { return v_(2); }
  Scalar Z() const { return v_(3); }
  Vector3<Scalar> xyz() const { return v_.template tail<3>(); }
  const Vector4<Scalar>& vector() const { return v_; }

  Scalar mink_norm2() const { return v_(0) * v_(0) - xyz().squaredNorm(); }
  /// T^2 + X^2 + Y^2 + Z^2, the scale for causal-type predicates.
  Scalar euclid_norm2() const { return v_.squaredNorm(); }

  bool is_lightlike(const Tolerance& tol = kDefaultTolerance) const {
    return std::abs(mink_norm2()) <= tol.bound(euclid_norm2());
  }
  bool is_timelike(const Tolerance& tol = kDefaultTolerance) const { return mink_norm2() > tol.bound(euclid_norm2()); }
  bool is_spacelike(const Tolerance& tol = kDefaultTolerance) const {
    return mink_norm2() < -tol.bound(euclid_norm2());
  }
  /// On L+: lightlike with T > 0.
  bool is_future_null(const Tolerance& tol = kDefaultTolerance) const { return T() > Scalar(0) && is_lightlike(tol); }

  friend MinkVec operator+(const MinkVec& p, const MinkVec& q) { return MinkVec(Vector4<Scalar>(p.v_ + q.v_)); }
  friend MinkVec operator-(const MinkVec& p, const MinkVec& q) { return MinkVec(Vector4<Scalar>(p.v_ - q.v_)); }
  friend MinkVec operator*(Scalar s, const MinkVec& p) { return MinkVec(Vector4<Scalar>(s * p.v_)); }

 private:
  Vector4<Scalar> v_;
};

template <typename Scalar>
Scalar mink_inner(const MinkVec<Scalar>& p, const MinkVec<Scalar>& q) {
  return p.T() * q.T() - p.xyz().dot(q.xyz());
}

/// [[a, b], [conj b, d]] -> (a + d, 2 Re b, 2 Im b, a - d).
template <typename Scalar>
MinkVec<Scalar> g_map(const Hermitian2<Scalar>& s) {
  return MinkVec<Scalar>(s.a() + s.d(), Scalar(2) * s.b().real(), Scalar(2) * s.b().imag(), s.a() - s.d());
}

template <typename Scalar>
Hermitian2<Scalar> g_inv(const MinkVec<Scalar>& p) {
  return Hermitian2<Scalar>((p.T() + p.Z()) / Scalar(2), (p.T() - p.Z()) / Scalar(2),
                            Complex<Scalar>(p.X(), p.Y()) / Scalar(2));
}

/// g(f(k)) = (|xi|^2 + |eta|^2, 2 Re(xi conj eta), 2 Im(xi conj eta), |xi|^2 - |eta|^2).
template <typename Scalar>
MinkVec<Scalar> gf(const NonzeroSpinor<Scalar>& k) {
  return g_map(f_map(k));
}

/// The SO(1,3)+ matrix of p -> g(A g^{-1}(p) A^*).
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> lorentz_matrix(const SL2C<Scalar>& a) {
  Eigen::Matrix<Scalar, 4, 4> l;
  for (int j = 0; j < 4; ++j) {
    const MinkVec<Scalar> basis(Vector4<Scalar>(Vector4<Scalar>::Unit(j)));
    l.col(j) = g_map(act_hermitian(a, g_inv(basis))).vector();
  }
  return l;
}

template <typename Scalar>
MinkVec<Scalar> act_minkowski(const SL2C<Scalar>& a, const MinkVec<Scalar>& p) {
  return g_map(act_hermitian(a, g_inv(p)));
}

/// Pointed oriented null flag [[base, dir]], stored in canonical form:
/// dir has T = 0, is Euclidean-orthogonal to base.xyz, and |dir.xyz| = base.T.
template <typename Scalar>
class Flag {
 public:
  /// Canonicalizes an arbitrary tangent representative v of the flag at `base`.
  Flag(const MinkVec<Scalar>& base, const MinkVec<Scalar>& v, const Tolerance& tol = kDefaultTolerance)
      : base_(base) {
    if (!base.is_future_null(tol)) throw DomainError("flag base must lie on the future light cone");
    const Scalar scale = std::sqrt(base.euclid_norm2() * v.euclid_norm2());
    if (std::abs(mink_inner(base, v)) > tol.bound(scale))
      throw DomainError("flag direction must be tangent to the light cone");
    // Adding a multiple of base leaves the flag unchanged; use it to kill T.
    const MinkVec<Scalar> w = v - (v.T() / base.T()) * base;
    const Scalar len = w.xyz().norm();
    if (!(len > tol.bound(std::sqrt(v.euclid_norm2()))))
      throw DomainError("flag direction is parallel to its base");
    Vector4<Scalar> d = Vector4<Scalar>::Zero();
    d.template tail<3>() = w.xyz() * (base.T() / len);
    dir_ = MinkVec<Scalar>(d);
  }

  const MinkVec<Scalar>& base() const { return base_; }
  const MinkVec<Scalar>& dir() const { return dir_; }

 private:
  MinkVec<Scalar> base_;
  MinkVec<Scalar> dir_;
};

/// Flag of k: based at g(f(k)), direction g(D_k f(Z(k))) / 2.
template <typename Scalar>
Flag<Scalar> flag_of_spinor(const NonzeroSpinor<Scalar>& k) {
  const Scalar a = k.xi().real(), b = k.xi().imag(), c = k.eta().real(), d = k.eta().imag();
  const MinkVec<Scalar> dir(Scalar(0), Scalar(2) * (c * d - a * b), a * a - b * b + c * c - d * d,
                            Scalar(2) * (a * d + b * c));
  return Flag<Scalar>(gf(k), dir);
}

template <typename Scalar>
bool flags_equal(const Flag<Scalar>& f1, const Flag<Scalar>& f2, const Tolerance& tol = kDefaultTolerance) {
  return approx_equal_dense(f1.base().vector(), f2.base().vector(), tol) &&
         approx_equal_dense(f1.dir().vector(), f2.dir().vector(), tol);
}

template <typename Scalar>
Flag<Scalar> act_flag(const SL2C<Scalar>& a, const Flag<Scalar>& f, const Tolerance& tol = kDefaultTolerance) {
  return Flag<Scalar>(act_minkowski(a, f.base()), act_minkowski(a, f.dir()), tol);
}

template <typename Scalar>
struct FrameBasis {
  Vector3<Scalar> e1;
  Vector3<Scalar> e2;
  Vector3<Scalar> e3;
};

/// Orthogonal right-handed frame of k; each vector has length |xi|^2 + |eta|^2.
/// e3 is the XYZ part of g(f(k)) and e2 the flag direction.
template <typename Scalar>
FrameBasis<Scalar> frame_basis(const NonzeroSpinor<Scalar>& k) {
  const Scalar a = k.xi().real(), b = k.xi().imag(), c = k.eta().real(), d = k.eta().imag();
  const Scalar two(2);
  return {Vector3<Scalar>(a * a - b * b - c * c + d * d, two * (a * b + c * d), two * (b * d - a * c)),
          Vector3<Scalar>(two * (c * d - a * b), a * a - b * b + c * c - d * d, two * (a * d + b * c)),
          Vector3<Scalar>(two * (a * c + b * d), two * (b * c - a * d), a * a + b * b - c * c - d * d)};
}

/// Rotates e1, e2 about e3 by `angle`, measured from e2 towards e1:
/// e2 -> e2 cos(angle) + e1 sin(angle). Multiplying k by e^{i theta}
/// rotates its frame by -2 theta in this sense.
template <typename Scalar>
FrameBasis<Scalar> rotate_frame(const FrameBasis<Scalar>& f, Scalar angle) {
  const Scalar c = std::cos(angle), s = std::sin(angle);
  return {f.e1 * c - f.e2 * s, f.e2 * c + f.e1 * s, f.e3};
}

/// Unit vector of R^3: a point of the celestial sphere L+ ∩ {T = 1}.
template <typename Scalar>
class CelestialPoint {
 public:
  explicit CelestialPoint(const Vector3<Scalar>& u, Scalar tol = Scalar(1e-12)) : u_(u) {
    if (std::abs(u_.norm() - Scalar(1)) > tol) throw DomainError("celestial point must have unit norm");
  }
  const Vector3<Scalar>& vector() const { return u_; }

 private:
  Vector3<Scalar> u_;
};

/// Riemann sphere to unit sphere; ∞ goes to the north pole (0, 0, 1).
template <typename Scalar>
CelestialPoint<Scalar> stereo(const BoundaryPoint<Scalar>& w) {
  if (w.is_infinite()) return CelestialPoint<Scalar>(Vector3<Scalar>(0, 0, 1));
  const Complex<Scalar> z = w.value();
  const Scalar r2 = std::norm(z);
  const Scalar den = Scalar(1) + r2;
  return CelestialPoint<Scalar>(Vector3<Scalar>(Scalar(2) * z.real() / den, Scalar(2) * z.imag() / den,
                                                (r2 - Scalar(1)) / den),
                                Scalar(1e-9));
}

/// xi / eta as a point of C ∪ {∞}.
template <typename Scalar>
BoundaryPoint<Scalar> hopf(const NonzeroSpinor<Scalar>& k) {
  if (k.eta() == Complex<Scalar>(0)) return BoundaryPoint<Scalar>::infinity();
  return BoundaryPoint<Scalar>::finite(k.xi() / k.eta());
}

/// Stereo(Hopf(k)) for a unit spinor. Agrees with the XYZ part of g(f(k)).
template <typename Scalar>
CelestialPoint<Scalar> hopf_stereo(const NonzeroSpinor<Scalar>& k, const Tolerance& tol = kDefaultTolerance) {
  if (std::abs(k.norm2() - Scalar(1)) > tol.bound(Scalar(1))) throw DomainError("hopf_stereo needs a unit spinor");
  return stereo(hopf(k));
}

/// 2 |{k1, k2}|^2 - <g f(k1), g f(k2)>; zero up to rounding.
template <typename Scalar>
Scalar spinor_mink_residual(const NonzeroSpinor<Scalar>& k1, const NonzeroSpinor<Scalar>& k2) {
  return Scalar(2) * std::norm(inner_product<Scalar>(k1, k2)) - mink_inner(gf(k1), gf(k2));
}

/// det M13 det M24 - det M12 det M34 - det M14 det M23 for a 2x4 matrix
/// (columns numbered from 1). Vanishes identically.
template <typename Derived>
typename Derived::Scalar plucker_residual(const Eigen::MatrixBase<Derived>& m) {
  auto minor = [&](int i, int j) { return m(0, i) * m(1, j) - m(0, j) * m(1, i); };
  return minor(0, 2) * minor(1, 3) - minor(0, 1) * minor(2, 3) - minor(0, 3) * minor(1, 2);
}

}  // namespace horo
