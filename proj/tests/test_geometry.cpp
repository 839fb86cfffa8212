#include <gtest/gtest.h>

#include "support.hpp"

using namespace lktw;
using testing_support::Random;
using testing_support::pi;
using V4 = Eigen::Vector4d;
using V3 = Eigen::Vector3d;
using VX = Eigen::VectorXd;

namespace {

VX vx(std::initializer_list<double> l) {
  VX v(static_cast<Eigen::Index>(l.size()));
  int i = 0;
  for (double d : l) v[i++] = d;
  return v;
}

}  // namespace

TEST(Geometry, ParseSpaceNames) {
  EXPECT_EQ(parse_space("r3"), Space::Euclidean);
  EXPECT_EQ(parse_space("s3"), Space::Sphere3);
  EXPECT_EQ(parse_space("h3"), Space::Hyperbolic3);
  EXPECT_THROW(parse_space("s2"), input_error);
  EXPECT_EQ(to_string(Space::Hyperbolic3), "h3");
}

TEST(Geometry, AmbientInnerExamples) {
  EXPECT_EQ(ambient_inner(Space::Sphere3, vx({1, 0, 0, 0}), vx({1, 0, 0, 0})), 1.0);
  const double r2 = std::sqrt(2.0);
  EXPECT_NEAR(ambient_inner(Space::Hyperbolic3, vx({r2, 1, 0, 0}), vx({r2, 1, 0, 0})), 1.0, 1e-15);
  EXPECT_EQ(ambient_inner(Space::Euclidean, vx({1, 2, 3}), vx({1, 2, 3})), 14.0);
  EXPECT_THROW(ambient_inner(Space::Euclidean, vx({1, 2, 3, 4}), vx({1, 2, 3})), dimension_error);
  EXPECT_THROW(ambient_inner(Space::Sphere3, vx({1, 0, 0}), vx({1, 0, 0})), dimension_error);
}

TEST(Geometry, HyperbolicRiemannianDotIsNegatedInner) {
  Random<Hyperbolic3> r(3);
  for (int k = 0; k < 20; ++k) {
    const V4 x = r.point(0.8), u = r.tangent(x), v = r.tangent(x);
    EXPECT_DOUBLE_EQ(Hyperbolic3::dot(u, v), -Hyperbolic3::inner(u, v));
    EXPECT_GE(Hyperbolic3::dot(u, u), 0.0);
  }
}

TEST(Geometry, DistanceExamples) {
  EXPECT_NEAR(distance(Space::Sphere3, vx({1, 0, 0, 0}), vx({0, 1, 0, 0})), pi / 2, 1e-15);
  EXPECT_EQ(distance(Space::Sphere3, vx({0.5, 0.5, 0.5, 0.5}), vx({0.5, 0.5, 0.5, 0.5})), 0.0);
  EXPECT_NEAR(distance(Space::Hyperbolic3, vx({1, 0, 0, 0}), vx({std::cosh(1.0), std::sinh(1.0), 0, 0})), 1.0, 1e-14);
  EXPECT_NEAR(distance(Space::Sphere3, vx({1, 0, 0, 0}), vx({-1, 0, 0, 0})), pi, 1e-15);
  EXPECT_NEAR(distance(Space::Euclidean, vx({0, 0, 0}), vx({3, 4, 0})), 5.0, 1e-15);
}

TEST(Geometry, DistanceMatchesArccosForm) {
  Random<Sphere3> s(5);
  Random<Hyperbolic3> h(6);
  for (int k = 0; k < 50; ++k) {
    const V4 x = s.point(), y = s.point();
    EXPECT_NEAR(Sphere3::distance(x, y), std::acos(std::clamp(x.dot(y), -1.0, 1.0)), 1e-12);
    const V4 p = h.point(1.5), q = h.point(1.5);
    EXPECT_NEAR(Hyperbolic3::distance(p, q), std::acosh(std::max(1.0, Hyperbolic3::inner(p, q))), 1e-9);
  }
}

TEST(Geometry, DistanceRejectsPointsOffTheModel) {
  EXPECT_THROW(distance(Space::Sphere3, vx({1, 0, 0, 0}), vx({2, 0, 0, 0})), geometry_error);
  EXPECT_THROW(distance(Space::Hyperbolic3, vx({1, 0, 0, 0}), vx({-1, 0, 0, 0})), geometry_error);
}

TEST(Geometry, GeodesicPointExamples) {
  const VX p = geodesic_point(Space::Sphere3, vx({1, 0, 0, 0}), vx({0, 1, 0, 0}), pi / 2);
  EXPECT_NEAR((p - vx({0, 1, 0, 0})).norm(), 0.0, 1e-15);
  const VX e = geodesic_point(Space::Euclidean, vx({1, 2, 3}), vx({0, 0, 1}), 2.5);
  EXPECT_NEAR((e - vx({1, 2, 5.5})).norm(), 0.0, 1e-15);
  const VX h = geodesic_point(Space::Hyperbolic3, vx({1, 0, 0, 0}), vx({0, 1, 0, 0}), 1.0);
  EXPECT_NEAR((h - vx({std::cosh(1.0), std::sinh(1.0), 0, 0})).norm(), 0.0, 1e-15);
  EXPECT_THROW(geodesic_point(Space::Sphere3, vx({1, 0, 0, 0}), vx({0, 2, 0, 0}), 1.0), geometry_error);
}

TEST(Geometry, ParallelTransportExamples) {
  const VX x = vx({0, 1, 0, 0}), y = vx({1, 0, 0, 0});
  EXPECT_EQ(parallel_transport(Space::Sphere3, x, y, vx({0, 0, 1, 0})), vx({0, 0, 1, 0}));
  // v = (0, a, b, c) at y: subtract a (x + y).
  const VX v = vx({0, 0.3, -0.4, 1.2});
  const VX t = parallel_transport(Space::Sphere3, x, y, v);
  EXPECT_NEAR((t - (v - 0.3 * (x + y))).norm(), 0.0, 1e-15);
  EXPECT_NEAR(t.norm(), v.norm(), 1e-12);
  EXPECT_THROW(parallel_transport(Space::Sphere3, vx({1, 0, 0, 0}), vx({-1, 0, 0, 0}), vx({0, 1, 0, 0})),
               geometry_error);
}

template <class M>
class ModelProperties : public ::testing::Test {};
using Models = ::testing::Types<Euclidean3, Sphere3, Hyperbolic3>;
TYPED_TEST_SUITE(ModelProperties, Models);

TYPED_TEST(ModelProperties, TransportIsIdentityOnTheDiagonal) {
  using M = TypeParam;
  Random<M> r(11);
  for (int k = 0; k < 20; ++k) {
    const auto x = r.point(1.0);
    const auto v = r.tangent(x);
    EXPECT_NEAR((M::transport(x, x, v) - v).norm(), 0.0, 1e-14 * (1 + x.squaredNorm()) * (1 + v.norm()));
  }
}

TYPED_TEST(ModelProperties, TransportIsAnInvertibleIsometry) {
  using M = TypeParam;
  Random<M> r(12);
  for (int k = 0; k < 200; ++k) {
    const auto x = r.point(1.0), y = r.point(1.0);
    const auto v = r.tangent(y);
    const auto t = M::transport(x, y, v);
    if constexpr (M::dim == 4) { EXPECT_NEAR(M::inner(x, t), 0.0, 1e-10 * (1 + v.norm())); }
    EXPECT_NEAR(M::norm(t), M::norm(v), 1e-10 * (1 + M::norm(v)));
    EXPECT_NEAR((M::transport(y, x, t) - v).norm(), 0.0, 1e-9 * (1 + v.norm()));
  }
}

TYPED_TEST(ModelProperties, CrossProductIsTangentOrthogonalAndAntisymmetric) {
  using M = TypeParam;
  Random<M> r(13);
  for (int k = 0; k < 200; ++k) {
    const auto x = r.point(1.0), u = r.tangent(x), v = r.tangent(x);
    const auto c = M::cross(x, u, v);
    const double scale = 1 + M::norm(u) * M::norm(v);
    if constexpr (M::dim == 4) { EXPECT_NEAR(M::inner(x, c), 0.0, 1e-10 * scale); }
    EXPECT_NEAR(M::dot(c, u), 0.0, 1e-10 * scale * (1 + M::norm(u)));
    EXPECT_NEAR(M::dot(c, v), 0.0, 1e-10 * scale * (1 + M::norm(v)));
    EXPECT_NEAR((M::cross(x, v, u) + c).norm(), 0.0, 1e-12 * scale * (1 + x.norm()));
    EXPECT_NEAR(M::cross(x, u, u).norm(), 0.0, 1e-12 * scale * (1 + x.norm()));
    // |u x v|^2 = |u|^2 |v|^2 - (u.v)^2
    const double lag = M::dot(u, u) * M::dot(v, v) - M::dot(u, v) * M::dot(u, v);
    EXPECT_NEAR(M::dot(c, c), lag, 1e-9 * scale * scale);
  }
}

TYPED_TEST(ModelProperties, TripleProductIsCrossDotW) {
  using M = TypeParam;
  Random<M> r(14);
  for (int k = 0; k < 100; ++k) {
    const auto x = r.point(1.0), u = r.tangent(x), v = r.tangent(x), w = r.tangent(x);
    const double scale = (1 + x.norm()) * (1 + u.norm()) * (1 + v.norm()) * (1 + w.norm());
    EXPECT_NEAR(M::triple(x, u, v, w), M::dot(M::cross(x, u, v), w), 1e-12 * scale);
    EXPECT_NEAR(M::triple(x, u, v, u), 0.0, 1e-12 * scale);
  }
}

TYPED_TEST(ModelProperties, GradAlphaIsUnitAndReflects) {
  using M = TypeParam;
  Random<M> r(15);
  for (int k = 0; k < 200; ++k) {
    const auto x = r.point(1.0), y = r.point(1.0);
    const auto gy = M::grad_alpha(x, y), gx = M::grad_alpha(y, x);
    EXPECT_NEAR(M::norm(gy), 1.0, 1e-12);
    if constexpr (M::dim == 4) { EXPECT_NEAR(M::inner(y, gy), 0.0, 1e-12 * (1 + y.norm())); }
    EXPECT_NEAR((M::transport(x, y, gy) + gx).norm(), 0.0, 1e-9 * (1 + x.norm()));
    // Walking from x along -grad_x alpha for the distance reaches y.
    const double a = M::distance(x, y);
    const auto p = M::geodesic_point(x, (-gx).eval(), a);
    EXPECT_NEAR((p - y).norm(), 0.0, 1e-9 * (1 + y.norm()));
  }
}

TYPED_TEST(ModelProperties, GradAlphaMatchesDistanceGradient) {
  using M = TypeParam;
  Random<M> r(16);
  for (int k = 0; k < 30; ++k) {
    const auto x = r.point(1.0), y = r.point(1.0);
    const auto u = r.unit_tangent(y);
    const double h = 1e-5;
    const double fd = (M::distance(x, M::geodesic_point(y, u, h)) - M::distance(x, M::geodesic_point(y, u, -h))) / (2 * h);
    EXPECT_NEAR(M::dot(M::grad_alpha(x, y), u), fd, 1e-7);
  }
}

TEST(Geometry, GradAlphaExamples) {
  const VX g = grad_alpha(Space::Euclidean, vx({0, 0, 0}), vx({0, 3, 4}), GradientAt::Y);
  EXPECT_NEAR((g - vx({0, 0.6, 0.8})).norm(), 0.0, 1e-15);
  const VX s = grad_alpha(Space::Sphere3, vx({1, 0, 0, 0}), vx({0, 1, 0, 0}), GradientAt::Y);
  EXPECT_NEAR((s - vx({-1, 0, 0, 0})).norm(), 0.0, 1e-15);
  const VX sx = grad_alpha(Space::Sphere3, vx({1, 0, 0, 0}), vx({0, 1, 0, 0}), GradientAt::X);
  EXPECT_NEAR((sx - vx({0, -1, 0, 0})).norm(), 0.0, 1e-15);
  EXPECT_THROW(grad_alpha(Space::Sphere3, vx({1, 0, 0, 0}), vx({1, 0, 0, 0}), GradientAt::Y), geometry_error);
  EXPECT_THROW(grad_alpha(Space::Sphere3, vx({1, 0, 0, 0}), vx({-1, 0, 0, 0}), GradientAt::Y), geometry_error);
}

TEST(Geometry, CrossAndTripleExamples) {
  const VX c = cross(Space::Sphere3, vx({1, 0, 0, 0}), vx({0, 1, 0, 0}), vx({0, 0, 1, 0}));
  EXPECT_EQ(c, vx({0, 0, 0, 1}));
  EXPECT_EQ(triple(Space::Sphere3, vx({1, 0, 0, 0}), vx({0, 1, 0, 0}), vx({0, 0, 1, 0}), vx({0, 0, 0, 1})), 1.0);
  EXPECT_EQ(cross(Space::Euclidean, vx({0, 0, 0}), vx({1, 0, 0}), vx({0, 1, 0})), vx({0, 0, 1}));
}

TEST(Geometry, Det4MatchesLuDeterminant) {
  Random<Sphere3> r(17);
  for (int k = 0; k < 100; ++k) {
    const V4 a = r.gauss(), b = r.gauss(), c = r.gauss(), d = r.gauss();
    EXPECT_NEAR(detail::det4(a, b, c, d), testing_support::det_lu(a, b, c, d), 1e-12);
  }
}

TEST(Geometry, QuaternionProductFollowsIjEqualsK) {
  const V4 one(1, 0, 0, 0), i(0, 1, 0, 0), j(0, 0, 1, 0), k(0, 0, 0, 1);
  EXPECT_EQ(quat_mul(i, j), k);
  EXPECT_EQ(quat_mul(j, k), i);
  EXPECT_EQ(quat_mul(k, i), j);
  EXPECT_EQ(quat_mul(j, i), -k);
  EXPECT_EQ(quat_mul(i, i), -one);
  EXPECT_EQ(quat_mul(i, k), -j);
}

TEST(Geometry, LeftTranslateExamples) {
  const VX gx = vx({1, 0, 0, 0}), gy = vx({0, 1, 0, 0}), v = vx({0, 0, 1, 0});
  // (gy gx^{-1}) v = i j = k
  EXPECT_EQ(left_translate(Space::Sphere3, gx, gy, v), vx({0, 0, 0, 1}));
  EXPECT_THROW(left_translate(Space::Hyperbolic3, vx({1, 0, 0, 0}), vx({1, 0, 0, 0}), vx({0, 1, 0, 0})),
               unsupported_format);
  EXPECT_THROW(left_translate(Space::Euclidean, vx({0, 0, 0}), vx({0, 0, 0}), vx({0, 1, 0})), unsupported_format);
}

TEST(Geometry, LeftTranslateIsATangentIsometry) {
  Random<Sphere3> r(18);
  for (int k = 0; k < 200; ++k) {
    const V4 x = r.point(), y = r.point(), v = r.tangent(x);
    const V4 t = left_translate(x, y, v);
    EXPECT_NEAR(t.dot(y), 0.0, 1e-10);
    EXPECT_NEAR(t.norm(), v.norm(), 1e-10);
    EXPECT_NEAR((left_translate(x, x, v) - v).norm(), 0.0, 1e-12);
    EXPECT_NEAR((left_translate(y, x, t) - v).norm(), 0.0, 1e-12);
  }
}

TEST(Geometry, ProjectPointSnapsOnlyPastTolerance) {
  const V4 exact(0.6, 0.8, 0, 0);
  EXPECT_EQ(Sphere3::project_point(exact), exact);
  const V4 off = 1.01 * exact;
  EXPECT_NEAR(Sphere3::project_point(off).norm(), 1.0, 1e-15);
  EXPECT_THROW(Hyperbolic3::project_point(V4(-2, 1, 1, 0)), geometry_error);
}
