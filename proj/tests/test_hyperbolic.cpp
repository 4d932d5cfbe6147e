#include <gtest/gtest.h>

#include "support/testing.hpp"

namespace horo {
namespace {

using testing::C;
using testing::Rng;

MinkVec<double> mv(const Vector4<double>& v) { return MinkVec<double>(v); }

TEST(HMap, RoundTripAndValidation) {
  const MinkVec<double> p(2, 0, 0, 2);
  EXPECT_EQ(h_inv(h_map(p)).vector(), p.vector());
  EXPECT_THROW(h_map(MinkVec<double>(1, 0, 0, 0)), DomainError);
  EXPECT_THROW(h_map(MinkVec<double>(-1, 0, 0, 1)), DomainError);
}

TEST(HMap, GeneratedPointsLieOnHorosphere) {
  Rng rng(40);
  for (int n = 0; n < 200; ++n) {
    const auto k = rng.spinor();
    const Vector4<double> p = gf(k).vector();
    const auto q = mv(testing::horosphere_point(p, rng.normal(), rng.normal()));
    EXPECT_TRUE(on_hyperboloid(q));
    EXPECT_TRUE(on_horosphere(q, h_map(gf(k))));
  }
}

TEST(Distances, PointToHorosphere) {
  // log T from the origin (1, 0, 0, 0).
  const MinkVec<double> origin(1, 0, 0, 0);
  Rng rng(41);
  for (int n = 0; n < 200; ++n) {
    const auto p = gf(rng.spinor());
    EXPECT_NEAR(dist_point_horosphere(origin, h_map(p)), std::log(p.T()), 1e-12);
  }
  // The horosphere through the origin has distance 0.
  EXPECT_NEAR(dist_point_horosphere(origin, h_map(MinkVec<double>(1, 0, 0, 1))), 0.0, 1e-15);
  EXPECT_THROW(dist_point_horosphere(MinkVec<double>(2, 0, 0, 0), h_map(MinkVec<double>(1, 0, 0, 1))), DomainError);
}

TEST(Distances, BetweenHorospheres) {
  const auto h0 = h_map(MinkVec<double>(1, 0, 0, 1));
  Rng rng(42);
  for (int n = 0; n < 200; ++n) {
    const auto p = gf(rng.spinor());
    EXPECT_NEAR(dist_horospheres(h0, h_map(p)), std::log((p.T() - p.Z()) / 2), 1e-12);
  }
  // Horospheres at the same centre.
  EXPECT_EQ(dist_horospheres(h0, h_map(MinkVec<double>(3, 0, 0, 3))), -std::numeric_limits<double>::infinity());
  // (1,0) and (0,1) are tangent.
  EXPECT_NEAR(dist_horospheres(h0, h_map(MinkVec<double>(1, 0, 0, -1))), 0.0, 1e-15);
}

TEST(ModelMaps, BoundaryChainMatchesHopf) {
  Rng rng(43);
  for (int n = 0; n < 300; ++n) {
    const auto k = rng.spinor();
    const auto z = j_boundary(i_boundary(gf(k)));
    ASSERT_TRUE(z.is_finite());
    EXPECT_LT(testing::rel_err(z.value(), k.xi() / k.eta()), 1e-10);
  }
  EXPECT_TRUE(j_boundary(i_boundary(gf(NonzeroSpinor<double>(1, 0)))).is_infinite());
  EXPECT_EQ(j_boundary(i_boundary(gf(NonzeroSpinor<double>(0, 1)))).value(), C(0));
}

TEST(ModelMaps, DiscToUpperIsIsometry) {
  Rng rng(44);
  auto random_q = [&] {
    const Vector3<double> x(rng.normal(), rng.normal(), rng.normal());
    return MinkVec<double>(std::sqrt(1 + x.squaredNorm()), x.x(), x.y(), x.z());
  };
  for (int n = 0; n < 300; ++n) {
    const auto q1 = random_q(), q2 = random_q();
    const auto u1 = disc_to_upper(hyperboloid_to_disc(q1));
    const auto u2 = disc_to_upper(hyperboloid_to_disc(q2));
    const double d = hyperboloid_distance(q1, q2);
    EXPECT_NEAR(upper_distance(u1, u2), d, 1e-9 * (1 + d));
  }
  const auto o = disc_to_upper(Vector3<double>(0, 0, 0));
  EXPECT_EQ(o.w, C(0));
  EXPECT_EQ(o.height, 1.0);
}

TEST(KMap, HorosphereIsEuclideanSphereOracle) {
  // Push points of h(gf(k)) through hyperboloid -> ball -> upper half space and
  // check they sit on the sphere tangent at xi/eta with diameter |eta|^-2.
  Rng rng(45);
  for (int n = 0; n < 200; ++n) {
    const auto k = rng.spinor();
    const auto h = K_map(k);
    ASSERT_TRUE(h.center().is_finite());
    const C z = k.xi() / k.eta();
    const double diam = 1 / std::norm(k.eta());
    EXPECT_LT(testing::rel_err(h.center().value(), z), 1e-12);
    EXPECT_NEAR(h.size(), diam, 1e-12 * diam);
    const Vector4<double> p = gf(k).vector();
    for (int m = 0; m < 5; ++m) {
      const auto q = mv(testing::horosphere_point(p, rng.normal(), rng.normal()));
      const auto u = disc_to_upper(hyperboloid_to_disc(q));
      const double r = diam / 2;
      const double dist = std::sqrt(std::norm(u.w - z) + (u.height - r) * (u.height - r));
      EXPECT_NEAR(dist, r, 1e-7 * (1 + r));
    }
  }
}

TEST(KMap, PlaneForCentreAtInfinity) {
  Rng rng(46);
  for (int n = 0; n < 50; ++n) {
    const C xi = rng.complex();
    const NonzeroSpinor<double> k(xi, C(0));
    const Vector4<double> p = gf(k).vector();
    for (int m = 0; m < 5; ++m) {
      const auto u = disc_to_upper(hyperboloid_to_disc(mv(testing::horosphere_point(p, rng.normal(), rng.normal()))));
      EXPECT_NEAR(u.height, std::norm(xi), 1e-9 * (1 + std::norm(xi)));
    }
  }
}

TEST(KMap, GoldenValues) {
  const auto h10 = K_map(NonzeroSpinor<double>(1, 0));
  EXPECT_TRUE(h10.center().is_infinite());
  EXPECT_EQ(h10.delta(), C(0, 1));
  EXPECT_EQ(h10.size(), 1.0);
  const auto h01 = K_map(NonzeroSpinor<double>(0, 1));
  EXPECT_EQ(h01.center().value(), C(0));
  EXPECT_EQ(h01.delta(), C(0, 1));
  // Decoration i eta^-2: eta = e^{i pi/4} gives delta = 1 (pointing along +x).
  const auto h = K_map(NonzeroSpinor<double>(C(0), std::polar(1.0, pi_v<double> / 4)));
  EXPECT_LT(std::abs(h.delta() - C(1)), 1e-15);
}

TEST(KMap, SpinorOfInvertsUpToSign) {
  Rng rng(47);
  for (int n = 0; n < 200; ++n) {
    const auto k = rng.spinor();
    const auto back = spinor_of(K_map(k));
    const bool same = (back.vector() - k.vector()).norm() < 1e-10 * std::sqrt(k.norm2());
    const bool opposite = (back.vector() + k.vector()).norm() < 1e-10 * std::sqrt(k.norm2());
    EXPECT_TRUE(same || opposite);
  }
  const auto k = spinor_of(K_map(NonzeroSpinor<double>(C(2, 1), C(0))));
  EXPECT_EQ(k.eta(), C(0));
}

TEST(DecoratedHorosphere, RejectsZeroDecoration) {
  EXPECT_THROW(DecoratedHorosphere<double>(BoundaryPoint<double>::finite(0), C(0)), DomainError);
}

TEST(Mobius, ApplyOnBoundary) {
  const SL2C<double> a(C(1), C(2), C(0), C(1));  // translation by 2
  EXPECT_EQ(mobius_apply(a, BoundaryPoint<double>::finite(C(1, 1))).value(), C(3, 1));
  EXPECT_TRUE(mobius_apply(a, BoundaryPoint<double>::infinity()).is_infinite());
  const SL2C<double> inv(C(0), C(-1), C(1), C(0));  // z -> -1/z
  EXPECT_TRUE(mobius_apply(inv, BoundaryPoint<double>::finite(0)).is_infinite());
  EXPECT_EQ(mobius_apply(inv, BoundaryPoint<double>::infinity()).value(), C(0));
}

TEST(Mobius, EquivarianceAllCases) {
  Rng rng(48);
  for (int n = 0; n < 500; ++n) {
    const auto a = rng.sl2c();
    const auto k = rng.spinor();
    const auto lhs = K_map(act_spinor(a, k));
    const auto rhs = mobius_act_horosphere(a, K_map(k));
    EXPECT_TRUE(approx_equal(lhs, rhs, Tolerance{1e-12, 1e-9}));
  }
  // Centres sent to and from infinity, and fixed at infinity.
  const SL2C<double> inv(C(0), C(-1), C(1), C(0));
  const SL2C<double> aff(C(2), C(1, 1), C(0), C(0.5));
  for (const auto& k : {NonzeroSpinor<double>(C(1, 1), C(0)), NonzeroSpinor<double>(C(0), C(2, -1)),
                        NonzeroSpinor<double>(C(0.5), C(1, 1))}) {
    for (const auto& a : {inv, aff}) {
      EXPECT_TRUE(approx_equal(K_map(act_spinor(a, k)), mobius_act_horosphere(a, K_map(k))));
    }
  }
}

TEST(EuclideanDistance, MatchesHyperboloid) {
  Rng rng(49);
  for (int n = 0; n < 500; ++n) {
    const auto k1 = rng.spinor(), k2 = rng.spinor();
    const double rho_h = dist_horospheres(h_map(gf(k1)), h_map(gf(k2)));
    const auto h1 = K_map(k1), h2 = K_map(k2);
    const double rho_u = std::log(testing::exp_rho_euclidean(false, h1.center().value(), h1.size(), false,
                                                             h2.center().value(), h2.size()));
    EXPECT_NEAR(rho_h, rho_u, 1e-9 * (1 + std::abs(rho_u)));
    EXPECT_NEAR(horosphere_distance_euclidean(h1, h2), rho_u, 1e-9 * (1 + std::abs(rho_u)));
  }
  const auto hinf = K_map(NonzeroSpinor<double>(C(2), C(0)));  // height 4
  const auto h0 = K_map(NonzeroSpinor<double>(C(0), C(1)));    // diameter 1
  EXPECT_NEAR(horosphere_distance_euclidean(hinf, h0), std::log(4.0), 1e-15);
  EXPECT_NEAR(horosphere_distance_euclidean(h0, hinf), std::log(4.0), 1e-15);
  EXPECT_EQ(horosphere_distance_euclidean(hinf, hinf), -std::numeric_limits<double>::infinity());
}

TEST(SpinDecorated, ActsThroughSpinor) {
  const SpinDecoratedHorosphere<double> s(NonzeroSpinor<double>(C(1), C(2)));
  const SL2C<double> a(C(0), C(-1), C(1), C(0));
  const auto t = s.act(a);
  EXPECT_TRUE(approx_equal(t.project(), mobius_act_horosphere(a, s.project())));
  // k and -k project to the same decorated horosphere.
  const SpinDecoratedHorosphere<double> m(-s.spinor());
  EXPECT_TRUE(approx_equal(m.project(), s.project()));
  EXPECT_NE(m.spinor().xi(), s.spinor().xi());
}

}  // namespace
}  // namespace horo
