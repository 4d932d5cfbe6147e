#pragma once

// Two-component complex spinors, 2x2 Hermitian matrices, and the SL(2,C)
// actions on both.

#include "horo/common.hpp"

namespace horo {

template <typename Scalar>
class Spinor {
 public:
  using Vector = Eigen::Matrix<Complex<Scalar>, 2, 1>;

  Spinor() : v_(Vector::Zero()) {}
  Spinor(Complex<Scalar> xi, Complex<Scalar> eta) { v_ << xi, eta; }
  explicit Spinor(const Vector& v) : v_(v) {}

  Complex<Scalar> xi() const { return v_(0); }
  Complex<Scalar> eta() const { return v_(1); }
  const Vector& vector() const { return v_; }

  /// |xi|^2 + |eta|^2
  Scalar norm2() const { return std::norm(v_(0)) + std::norm(v_(1)); }
  bool is_zero() const { return v_(0) == Complex<Scalar>(0) && v_(1) == Complex<Scalar>(0); }

  Spinor operator-() const { return Spinor(Vector(-v_)); }
  friend Spinor operator*(const Complex<Scalar>& c, const Spinor& k) { return Spinor(Vector(c * k.v_)); }
  friend Spinor operator+(const Spinor& a, const Spinor& b) { return Spinor(Vector(a.v_ + b.v_)); }

 private:
  Vector v_;
};

/// A spinor with a nonzero (and non-NaN) component, checked on construction.
template <typename Scalar>
class NonzeroSpinor : public Spinor<Scalar> {
 public:
  NonzeroSpinor(Complex<Scalar> xi, Complex<Scalar> eta) : Spinor<Scalar>(xi, eta) { check(); }
  explicit NonzeroSpinor(const Spinor<Scalar>& k) : Spinor<Scalar>(k) { check(); }

  NonzeroSpinor operator-() const { return NonzeroSpinor(Spinor<Scalar>::operator-()); }

 private:
  void check() const {
    if (this->is_zero() || this->vector().hasNaN()) throw DomainError("spinor must be nonzero");
  }
};

/// 2x2 Hermitian matrix [[a, b], [conj(b), d]].
template <typename Scalar>
class Hermitian2 {
 public:
  Hermitian2() = default;
  Hermitian2(Scalar a, Scalar d, Complex<Scalar> b) : a_(a), d_(d), b_(b) {}

  /// Takes the Hermitian part of m. Throws if m is not Hermitian within tol.
  static Hermitian2 from_matrix(const Matrix2c<Scalar>& m, const Tolerance& tol = kDefaultTolerance) {
    if ((m - m.adjoint()).norm() > tol.bound(m.norm()))
      throw DomainError("matrix is not Hermitian");
    return Hermitian2(m(0, 0).real(), m(1, 1).real(), (m(0, 1) + std::conj(m(1, 0))) / Scalar(2));
  }

  Scalar a() const { return a_; }
  Scalar d() const { return d_; }
  Complex<Scalar> b() const { return b_; }

  Scalar trace() const { return a_ + d_; }
  Scalar det() const { return a_ * d_ - std::norm(b_); }
  /// Frobenius norm.
  Scalar norm() const { return std::sqrt(a_ * a_ + d_ * d_ + Scalar(2) * std::norm(b_)); }

  Matrix2c<Scalar> matrix() const {
    Matrix2c<Scalar> m;
    m << Complex<Scalar>(a_), b_, std::conj(b_), Complex<Scalar>(d_);
    return m;
  }

  /// Real coordinates (a, d, Re b, Im b).
  Vector4<Scalar> coords() const { return Vector4<Scalar>(a_, d_, b_.real(), b_.imag()); }

  friend Hermitian2 operator+(const Hermitian2& x, const Hermitian2& y) {
    return Hermitian2(x.a_ + y.a_, x.d_ + y.d_, x.b_ + y.b_);
  }
  friend Hermitian2 operator-(const Hermitian2& x, const Hermitian2& y) {
    return Hermitian2(x.a_ - y.a_, x.d_ - y.d_, x.b_ - y.b_);
  }
  friend Hermitian2 operator*(Scalar s, const Hermitian2& x) { return Hermitian2(s * x.a_, s * x.d_, s * x.b_); }

 private:
  Scalar a_ = 0;
  Scalar d_ = 0;
  Complex<Scalar> b_{};
};

template <typename Scalar>
class SL2C {
 public:
  /// Throws unless |det m - 1| <= tol_det. The matrix is stored as given.
  explicit SL2C(const Matrix2c<Scalar>& m, Scalar tol_det = Scalar(1e-12)) : m_(m) {
    if (std::abs(m_.determinant() - Complex<Scalar>(1)) > tol_det)
      throw DomainError("matrix is not in SL(2,C): determinant differs from 1");
  }
  SL2C(Complex<Scalar> alpha, Complex<Scalar> beta, Complex<Scalar> gamma, Complex<Scalar> delta,
       Scalar tol_det = Scalar(1e-12))
      : SL2C(make(alpha, beta, gamma, delta), tol_det) {}

  static SL2C identity() { return SL2C(Matrix2c<Scalar>::Identity()); }

  /// Explicitly rescales m by a square root of its determinant.
  static SL2C from_unnormalized(const Matrix2c<Scalar>& m) {
    const Complex<Scalar> det = m.determinant();
    if (det == Complex<Scalar>(0)) throw DomainError("singular matrix cannot be normalized");
    return SL2C(Matrix2c<Scalar>(m / std::sqrt(det)), Scalar(1e-9));
  }

  Complex<Scalar> alpha() const { return m_(0, 0); }
  Complex<Scalar> beta() const { return m_(0, 1); }
  Complex<Scalar> gamma() const { return m_(1, 0); }
  Complex<Scalar> delta() const { return m_(1, 1); }
  const Matrix2c<Scalar>& matrix() const { return m_; }

  SL2C inverse() const {
    Matrix2c<Scalar> inv;
    inv << delta(), -beta(), -gamma(), alpha();
    return SL2C(inv, Scalar(1e-9));
  }

  friend SL2C operator*(const SL2C& x, const SL2C& y) { return SL2C(Matrix2c<Scalar>(x.m_ * y.m_), Scalar(1e-9)); }

 private:
  static Matrix2c<Scalar> make(Complex<Scalar> a, Complex<Scalar> b, Complex<Scalar> c, Complex<Scalar> d) {
    Matrix2c<Scalar> m;
    m << a, b, c, d;
    return m;
  }

  Matrix2c<Scalar> m_;
};

/// {k1, k2} = xi1 eta2 - xi2 eta1.
template <typename Scalar>
Complex<Scalar> inner_product(const Spinor<Scalar>& k1, const Spinor<Scalar>& k2) {
  return k1.xi() * k2.eta() - k2.xi() * k1.eta();
}

/// f(k) = k k^*, landing in the positive null cone of Hermitian matrices.
template <typename Scalar>
Hermitian2<Scalar> f_map(const NonzeroSpinor<Scalar>& k) {
  return Hermitian2<Scalar>(std::norm(k.xi()), std::norm(k.eta()), k.xi() * std::conj(k.eta()));
}

/// Z(k) = J conj(k) with J = [[0, i], [-i, 0]].
template <typename Scalar>
Spinor<Scalar> zeta(const Spinor<Scalar>& k) {
  const Complex<Scalar> i(0, 1);
  return Spinor<Scalar>(i * std::conj(k.eta()), -i * std::conj(k.xi()));
}

template <typename Scalar>
NonzeroSpinor<Scalar> zeta(const NonzeroSpinor<Scalar>& k) {
  return NonzeroSpinor<Scalar>(zeta(static_cast<const Spinor<Scalar>&>(k)));
}

/// D_k f(v) = k v^* + v k^*.
template <typename Scalar>
Hermitian2<Scalar> derivative_f(const Spinor<Scalar>& k, const Spinor<Scalar>& v) {
  return Hermitian2<Scalar>(Scalar(2) * (k.xi() * std::conj(v.xi())).real(),
                            Scalar(2) * (k.eta() * std::conj(v.eta())).real(),
                            k.xi() * std::conj(v.eta()) + v.xi() * std::conj(k.eta()));
}

enum class ConeClass { Generic, H0, H0Nonneg, H0Pos };

/// Most specific cone class: H0 (det = 0), H0Nonneg (also trace >= 0),
/// H0Pos (also trace > 0). The det test is scaled by |S|^2.
template <typename Scalar>
ConeClass classify_hermitian(const Hermitian2<Scalar>& s, const Tolerance& tol = kDefaultTolerance) {
  const Scalar n = s.norm();
  if (std::abs(s.det()) > tol.bound(n * n)) return ConeClass::Generic;
  const Scalar tr_tol = tol.bound(n);
  if (s.trace() > tr_tol) return ConeClass::H0Pos;
  if (s.trace() >= -tr_tol) return ConeClass::H0Nonneg;
  return ConeClass::H0;
}

/// Nesting H0Pos ⊂ H0Nonneg ⊂ H0: true if `actual` lies in `target`.
inline bool cone_contains(ConeClass target, ConeClass actual) {
  if (target == ConeClass::Generic) return true;
  if (actual == ConeClass::Generic) return false;
  return static_cast<int>(actual) >= static_cast<int>(target);
}

/// Right inverse of f on the positive null cone; the result is unique up to phase.
template <typename Scalar>
NonzeroSpinor<Scalar> spinor_from_hermitian(const Hermitian2<Scalar>& s, const Tolerance& tol = kDefaultTolerance) {
  if (classify_hermitian(s, tol) != ConeClass::H0Pos)
    throw DomainError("Hermitian matrix is not in the positive null cone");
  // f(xi, eta) has off-diagonal xi * conj(eta); fix the phase on the larger diagonal entry.
  if (s.d() >= s.a()) {
    const Scalar eta = std::sqrt(s.d());
    return NonzeroSpinor<Scalar>(s.b() / eta, Complex<Scalar>(eta));
  }
  const Scalar xi = std::sqrt(s.a());
  return NonzeroSpinor<Scalar>(Complex<Scalar>(xi), std::conj(s.b()) / xi);
}

/// Angle theta with k1 ≈ e^{i theta} k2 whenever f(k1) = f(k2).
template <typename Scalar>
Scalar relative_phase(const Spinor<Scalar>& k1, const Spinor<Scalar>& k2) {
  return std::arg(k2.vector().dot(k1.vector()));
}

template <typename Scalar>
Spinor<Scalar> act_spinor(const SL2C<Scalar>& a, const Spinor<Scalar>& k) {
  return Spinor<Scalar>(typename Spinor<Scalar>::Vector(a.matrix() * k.vector()));
}

template <typename Scalar>
NonzeroSpinor<Scalar> act_spinor(const SL2C<Scalar>& a, const NonzeroSpinor<Scalar>& k) {
  return NonzeroSpinor<Scalar>(act_spinor(a, static_cast<const Spinor<Scalar>&>(k)));
}

/// A S A^*.
template <typename Scalar>
Hermitian2<Scalar> act_hermitian(const SL2C<Scalar>& a, const Hermitian2<Scalar>& s) {
  const Matrix2c<Scalar> m = a.matrix() * s.matrix() * a.matrix().adjoint();
  return Hermitian2<Scalar>::from_matrix(m, Tolerance{1e-12, 1e-9});
}

}  // namespace horo
