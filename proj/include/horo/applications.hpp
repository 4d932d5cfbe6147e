#pragma once

// Ptolemy relations, tetrahedron shape parameters, spinor matrices of
// ideal polygons, and Ford circles.

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "horo/lambda.hpp"

namespace horo {

namespace detail {
template <typename Scalar>
Scalar column_norm(const Spinor<Scalar>& k) {
  return std::sqrt(k.norm2());
}
}  // namespace detail

/// lambda01 lambda23 + lambda03 lambda12 - lambda02 lambda13.
template <typename Scalar>
Complex<Scalar> ptolemy_residual(const NonzeroSpinor<Scalar>& k0, const NonzeroSpinor<Scalar>& k1,
                                 const NonzeroSpinor<Scalar>& k2, const NonzeroSpinor<Scalar>& k3) {
  auto l = [](const Spinor<Scalar>& x, const Spinor<Scalar>& y) { return inner_product(x, y); };
  return l(k0, k1) * l(k2, k3) + l(k0, k3) * l(k1, k2) - l(k0, k2) * l(k1, k3);
}

/// Product of the four column norms; every Ptolemy term is bounded by it.
template <typename Scalar>
Scalar ptolemy_scale(const Spinor<Scalar>& k0, const Spinor<Scalar>& k1, const Spinor<Scalar>& k2,
                     const Spinor<Scalar>& k3) {
  return detail::column_norm(k0) * detail::column_norm(k1) * detail::column_norm(k2) * detail::column_norm(k3);
}

/// Shape parameters (z, z', z'') of an ideal tetrahedron.
template <typename Scalar>
struct ShapeTriple {
  Complex<Scalar> z;
  Complex<Scalar> z_prime;
  Complex<Scalar> z_dprime;

  /// z' = 1/(1 - z), z'' = (z - 1)/z and z + 1/z' = 1.
  bool consistent(const Tolerance& tol = kDefaultTolerance) const {
    const Complex<Scalar> one(1);
    return approx_equal(z_prime, one / (one - z), tol) && approx_equal(z_dprime, (z - one) / z, tol) &&
           approx_equal(z + one / z_prime, one, tol);
  }
};

template <typename Scalar>
ShapeTriple<Scalar> shape_parameters(const NonzeroSpinor<Scalar>& k0, const NonzeroSpinor<Scalar>& k1,
                                     const NonzeroSpinor<Scalar>& k2, const NonzeroSpinor<Scalar>& k3,
                                     const Tolerance& tol = kDefaultTolerance) {
  const std::array<const NonzeroSpinor<Scalar>*, 4> k{&k0, &k1, &k2, &k3};
  Complex<Scalar> lam[4][4];
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      lam[i][j] = inner_product<Scalar>(*k[i], *k[j]);
      if (std::abs(lam[i][j]) <= tol.bound(detail::column_norm<Scalar>(*k[i]) * detail::column_norm<Scalar>(*k[j])))
        throw DomainError("degenerate tetrahedron");
    }
  }
  return {lam[0][2] * lam[1][3] / (lam[0][3] * lam[1][2]), -lam[0][3] * lam[1][2] / (lam[0][1] * lam[2][3]),
          lam[0][1] * lam[2][3] / (lam[0][2] * lam[1][3])};
}

enum class Field { Real, Complex };

/// 2 x d matrix whose columns are spinors.
template <typename Scalar>
class SpinorMatrix {
 public:
  SpinorMatrix(std::vector<Spinor<Scalar>> columns, Field field) : columns_(std::move(columns)), field_(field) {
    if (columns_.empty()) throw DomainError("spinor matrix needs at least one column");
    if (field_ == Field::Real && !all_real(columns_)) throw DomainError("real spinor matrix has complex entries");
  }

  /// Tags the matrix as real when every imaginary part is negligible.
  static SpinorMatrix from_columns(std::vector<Spinor<Scalar>> columns) {
    const Field f = all_real(columns) ? Field::Real : Field::Complex;
    return SpinorMatrix(std::move(columns), f);
  }

  const std::vector<Spinor<Scalar>>& columns() const { return columns_; }
  std::size_t size() const { return columns_.size(); }
  Field field() const { return field_; }

  Eigen::Matrix<Complex<Scalar>, 2, Eigen::Dynamic> matrix() const {
    Eigen::Matrix<Complex<Scalar>, 2, Eigen::Dynamic> m(2, columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j) m.col(j) = columns_[j].vector();
    return m;
  }

 private:
  static bool all_real(const std::vector<Spinor<Scalar>>& cols) {
    for (const auto& k : cols)
      if (std::abs(k.xi().imag()) > Scalar(1e-12) || std::abs(k.eta().imag()) > Scalar(1e-12)) return false;
    return true;
  }

  std::vector<Spinor<Scalar>> columns_;
  Field field_;
};

/// Nested classes of an ideal polygon (real) or polyhedron (complex) matrix.
/// spin_coherent is only ever set for real matrices.
struct PolygonClass {
  bool generalized = true;
  bool nondegenerate = false;
  bool ideal = false;
  bool spin_coherent = false;
};

/// A minor counts as nonzero when |det| > minor_rtol * |k_i| |k_j|.
template <typename Scalar>
PolygonClass classify_polygon_matrix(const SpinorMatrix<Scalar>& m, Scalar minor_rtol = Scalar(1e-9)) {
  const auto& cols = m.columns();
  for (const auto& k : cols)
    if (k.is_zero()) throw DomainError("spinor matrix has a zero column");
  PolygonClass c;
  bool any_nonzero = false, all_nonzero = true, all_positive = true;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      const Complex<Scalar> det = inner_product(cols[i], cols[j]);
      const Scalar eps = minor_rtol * detail::column_norm(cols[i]) * detail::column_norm(cols[j]);
      const bool nonzero = std::abs(det) > eps;
      any_nonzero = any_nonzero || nonzero;
      all_nonzero = all_nonzero && nonzero;
      all_positive = all_positive && det.real() > eps;
    }
  }
  c.nondegenerate = any_nonzero;
  c.ideal = c.nondegenerate && all_nonzero;
  c.spin_coherent = c.ideal && m.field() == Field::Real && all_positive;
  return c;
}

/// Centres xi/eta of the columns.
template <typename Scalar>
std::vector<BoundaryPoint<Scalar>> centers(const SpinorMatrix<Scalar>& m) {
  std::vector<BoundaryPoint<Scalar>> out;
  out.reserve(m.size());
  for (const auto& k : m.columns()) out.push_back(hopf(NonzeroSpinor<Scalar>(k)));
  return out;
}

/// True iff the points are in cyclic order around R ∪ {∞}, oriented in the
/// decreasing direction (∞ counts as the largest value). Points must be real
/// or ∞ and pairwise distinct.
template <typename Scalar>
bool vertices_in_order(const std::vector<BoundaryPoint<Scalar>>& points, const Tolerance& tol = kDefaultTolerance) {
  const Scalar inf = std::numeric_limits<Scalar>::infinity();
  std::vector<Scalar> v;
  v.reserve(points.size());
  for (const auto& p : points) {
    if (p.is_infinite()) {
      v.push_back(inf);
      continue;
    }
    const Complex<Scalar> z = p.value();
    if (std::abs(z.imag()) > tol.bound(std::abs(z.real()))) throw DomainError("vertex is not on the real line");
    v.push_back(z.real());
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j] || (std::isfinite(v[i]) && std::isfinite(v[j]) && approx_equal(v[i], v[j], tol)))
        throw DomainError("repeated vertex");
  // A cyclic rotation of a strictly decreasing sequence has at most one ascent.
  std::size_t ascents = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < v[(i + 1) % v.size()]) ++ascents;
  return ascents <= 1;
}

/// Reduced fraction p/q with q >= 0; q = 0 is the circle at ∞.
class FordCircle {
 public:
  FordCircle(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (p_ == 0 && q_ == 0) throw DomainError("Ford circle needs (p, q) != (0, 0)");
    if (std::gcd(p_, q_) != 1) throw DomainError("Ford circle needs coprime p and q");
    if (q_ < 0) {
      p_ = -p_;
      q_ = -q_;
    }
  }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const FordCircle&, const FordCircle&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// ad - bc for circles at a/b and c/d, checked for overflow.
inline std::int64_t ford_determinant(const FordCircle& c1, const FordCircle& c2) {
  const __int128 det = static_cast<__int128>(c1.p()) * c2.q() - static_cast<__int128>(c1.q()) * c2.p();
  if (det > std::numeric_limits<std::int64_t>::max() || det < std::numeric_limits<std::int64_t>::min())
    throw DomainError("Ford determinant overflows 64 bits");
  return static_cast<std::int64_t>(det);
}

/// The decorated horocycle of the integer spinor (p, q): centre p/q, diameter 1/q^2.
template <typename Scalar = double>
DecoratedHorosphere<Scalar> ford_circle(const FordCircle& c) {
  return K_map(NonzeroSpinor<Scalar>(Complex<Scalar>(static_cast<Scalar>(c.p())),
                                     Complex<Scalar>(static_cast<Scalar>(c.q()))));
}

template <typename Scalar = double>
DecoratedHorosphere<Scalar> ford_circle(std::int64_t p, std::int64_t q) {
  return ford_circle<Scalar>(FordCircle(p, q));
}

inline bool ford_tangent(const FordCircle& c1, const FordCircle& c2) {
  const std::int64_t det = ford_determinant(c1, c2);
  return det == 1 || det == -1;
}

/// rho = 2 log |ad - bc|.
template <typename Scalar = double>
Scalar ford_distance(const FordCircle& c1, const FordCircle& c2) {
  const std::int64_t det = ford_determinant(c1, c2);
  if (det == 0) throw DomainError("Ford circles coincide");
  return Scalar(2) * std::log(std::abs(static_cast<Scalar>(det)));
}

/// Farey sum (a + c)/(b + d), reduced.
inline FordCircle mediant(const FordCircle& c1, const FordCircle& c2) {
  if (ford_determinant(c1, c2) == 0) throw DomainError("Ford circles coincide");
  const std::int64_t p = c1.p() + c2.p();
  const std::int64_t q = c1.q() + c2.q();
  const std::int64_t g = std::gcd(p, q);
  return FordCircle(p / g, q / g);
}

namespace detail {
inline void stern_brocot(const FordCircle& left, const FordCircle& right, std::int64_t depth,
                         std::vector<FordCircle>& out) {
  if (left.q() + right.q() > depth) return;
  const FordCircle mid = mediant(left, right);
  stern_brocot(left, mid, depth, out);
  out.push_back(mid);
  stern_brocot(mid, right, depth, out);
}
}  // namespace detail

/// Reduced fractions in [0, 1] with denominator <= depth, increasing.
inline std::vector<FordCircle> farey_enumerate(int depth) {
  if (depth < 1 || depth > 30) throw DomainError("Farey depth must be in [1, 30]");
  std::vector<FordCircle> out;
  const FordCircle lo(0, 1), hi(1, 1);
  out.push_back(lo);
  detail::stern_brocot(lo, hi, depth, out);
  out.push_back(hi);
  return out;
}

}  // namespace horo
