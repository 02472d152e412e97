#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "tetramax/error.hpp"
#include "tetramax/surface.hpp"

using namespace tetramax;
using namespace tetramax::testing;

namespace {

std::vector<Vec2> hexagon_quad() {
  return {{1, 0}, {0.5, std::sqrt(3.0) / 2}, {-0.5, std::sqrt(3.0) / 2}, {-1, 0}};
}

void expect_iso_near(const Iso2& a, const Iso2& b, double tol) {
  EXPECT_NEAR(a.c, b.c, tol);
  EXPECT_NEAR(a.s, b.s, tol);
  EXPECT_NEAR(a.t.x, b.t.x, tol);
  EXPECT_NEAR(a.t.y, b.t.y, tol);
}

}  // namespace

TEST(Surface, RegularTetra) {
  const Surface s = Surface::from_tetra(regular_tetra());
  EXPECT_EQ(s.kind(), SurfaceKind::Tetra);
  EXPECT_EQ(s.face_count(), 4);
  ASSERT_EQ(s.cone_points().size(), 4u);
  for (int v : s.cone_points()) EXPECT_NEAR(s.angle_at_cone_point(v), kPi, 1e-14);
  EXPECT_EQ(s.euler_characteristic(), 2);
  EXPECT_NEAR(s.area(), std::sqrt(3.0), 1e-14);
}

TEST(Surface, RectangleDouble) {
  const Surface s = Surface::double_of(rectangle(2, 1));
  EXPECT_EQ(s.kind(), SurfaceKind::Double);
  EXPECT_EQ(s.face_count(), 2);
  ASSERT_EQ(s.cone_points().size(), 4u);
  for (int v : s.cone_points()) EXPECT_NEAR(s.angle_at_cone_point(v), kPi, 1e-14);
  EXPECT_EQ(s.euler_characteristic(), 2);
  EXPECT_NEAR(s.total_curvature(), 4 * kPi, 1e-12);
}

TEST(Surface, NonConvexRejected) {
  try {
    Surface::double_of({{0, 0}, {2, 0}, {0.5, 0.5}, {0, 2}});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConvexPolygon);
  }
}

TEST(Surface, HexagonDoubleAngles) {
  const Surface s = Surface::double_of(hexagon_quad());
  EXPECT_NEAR(s.angle_at_cone_point(0), 2 * kPi / 3, 1e-14);
  EXPECT_NEAR(s.angle_at_cone_point(1), 4 * kPi / 3, 1e-14);
  EXPECT_NEAR(s.angle_at_cone_point(2), 4 * kPi / 3, 1e-14);
  EXPECT_NEAR(s.angle_at_cone_point(3), 2 * kPi / 3, 1e-14);
}

TEST(Surface, ClockwisePolygonKeepsVertexIds) {
  auto poly = hexagon_quad();
  std::reverse(poly.begin(), poly.end());
  const Surface s = Surface::double_of(poly);
  EXPECT_NEAR(s.angle_at_cone_point(0), 2 * kPi / 3, 1e-14);
  EXPECT_NEAR(s.angle_at_cone_point(1), 4 * kPi / 3, 1e-14);
  const SurfacePoint p = s.vertex_point(1);
  EXPECT_NEAR(dist(p.coords, poly[1]), 0.0, 1e-15);
}

TEST(Surface, DoubleUnfoldIsReflection) {
  const auto poly = rectangle(2, 1);
  const Surface s = Surface::double_of(poly);
  for (int k = 0; k < 4; ++k) {
    const Iso2& u = s.unfold_across_edge(0, k);
    const Vec2 a = poly[k], b = poly[(k + 1) % 4];
    // The image of the back copy of a point inside is the mirror across the side line.
    const Vec2 inside{0.3, 0.1};
    const SideRef t = s.twin(0, k);
    ASSERT_EQ(t.face, 1);
    const Vec2 back{inside.x, -inside.y};
    const Vec2 image = u.apply(back);
    const Vec2 e = normalized(b - a);
    const Vec2 rel = inside - a;
    const Vec2 mirrored = a + e * dot(rel, e) - perp(e) * cross(e, rel);
    EXPECT_NEAR(image.x, mirrored.x, 1e-14);
    EXPECT_NEAR(image.y, mirrored.y, 1e-14);
  }
}

TEST(Surface, RegularTetraUnfoldReflectsApex) {
  const Tetra t = regular_tetra();
  const Surface s = Surface::from_tetra(t);
  const int abc = face_with(s, 0, 1, 2);
  const int bcd = face_with(s, 1, 2, 3);
  const Face& f = s.face(abc);
  int side = -1;
  for (int k = 0; k < 3; ++k) {
    const int a = f.vertex[k], b = f.vertex[(k + 1) % 3];
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) side = k;
  }
  ASSERT_GE(side, 0);
  ASSERT_EQ(s.twin(abc, side).face, bcd);
  const Face& g = s.face(bcd);
  Vec2 d_chart{}, a_chart{}, b_chart{}, c_chart{};
  for (int k = 0; k < 3; ++k) {
    if (g.vertex[k] == 3) d_chart = g.chart[k];
    if (f.vertex[k] == 0) a_chart = f.chart[k];
    if (f.vertex[k] == 1) b_chart = f.chart[k];
    if (f.vertex[k] == 2) c_chart = f.chart[k];
  }
  const Vec2 d_image = s.unfold_across_edge(abc, side).apply(d_chart);
  const Vec2 e = normalized(c_chart - b_chart);
  const Vec2 rel = a_chart - b_chart;
  const Vec2 mirrored = b_chart + e * dot(rel, e) - perp(e) * cross(e, rel);
  EXPECT_NEAR(d_image.x, mirrored.x, 1e-14);
  EXPECT_NEAR(d_image.y, mirrored.y, 1e-14);
}

TEST(Surface, UnfoldRoundTripIsIdentity) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, 0.05));
    for (int f = 0; f < s.face_count(); ++f) {
      for (int k = 0; k < 3; ++k) {
        const SideRef t = s.twin(f, k);
        const Iso2 id = s.unfold_across_edge(f, k) * s.unfold_across_edge(t.face, t.side);
        expect_iso_near(id, Iso2{}, 1e-12);
      }
    }
  }
}

TEST(Surface, ChartsMatchChords) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Tetra t = random_tetra(rng, 0.05);
    const Surface s = Surface::from_tetra(t);
    EXPECT_NEAR(s.total_curvature(), 4 * kPi, 1e-12);
    for (int f = 0; f < 4; ++f) {
      for (int k = 0; k < 3; ++k) {
        const Face& face = s.face(f);
        EXPECT_NEAR(dist(face.corner(k), face.corner(k + 1)),
                    t.length(face.vertex[k], face.vertex[(k + 1) % 3]), 1e-12);
        const Vec3 p = s.to_3d({f, face.chart[k]});
        EXPECT_NEAR(dist(p, t.vertex(face.vertex[k])), 0.0, 1e-12);
      }
      const SurfacePoint a = random_surface_point(s, rng);
      const SurfacePoint b{a.face, face_centroid(s, a.face).coords};
      EXPECT_NEAR(dist(a.coords, b.coords), dist(s.to_3d(a), s.to_3d(b)), 1e-12);
    }
  }
}

TEST(Surface, LocateClassifiesPoints) {
  const Surface s = Surface::double_of(rectangle(2, 1));
  const Located corner = s.locate({1, {1, 0.5}});
  EXPECT_EQ(corner.kind, PointKind::Vertex);
  EXPECT_EQ(corner.reps.size(), 2u);
  EXPECT_EQ(corner.reps.front().face, 0);
  EXPECT_NEAR(corner.total_angle, kPi, 1e-14);

  const Located edge = s.locate({1, {1, 0.1}});
  EXPECT_EQ(edge.kind, PointKind::Edge);
  EXPECT_EQ(edge.point().face, 0);
  EXPECT_NEAR(edge.point().coords.y, -0.1, 1e-15);

  const Located inner = s.locate({1, {0.2, 0.1}});
  EXPECT_EQ(inner.kind, PointKind::Interior);
  EXPECT_THROW(s.locate({0, {3, 0}}), GeometryError);
}

TEST(Surface, AngularCoordinatesAgreeAcrossCharts) {
  const Surface s = Surface::double_of(rectangle(2, 1));
  const Located edge = s.locate({0, {1, 0.1}});
  ASSERT_EQ(edge.reps.size(), 2u);
  // Direction pointing into face 0 (towards -x) and the same direction read in face 1.
  const double a0 = s.direction_angle(edge, 0, {-1, 0});
  const SideRef t = s.twin(0, edge.side);
  const Iso2 back = s.unfold_across_edge(0, edge.side).inverse();
  const double a1 = s.direction_angle(edge, 1, back.rotate({-1, 0}));
  EXPECT_NEAR(cyclic_distance(a0, a1), 0.0, 1e-14);
  EXPECT_EQ(t.face, 1);
}

TEST(Surface, TraceLengthBoundsChord) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, 0.05));
    const SurfacePoint p = random_surface_point(s, rng);
    const double len = 3.0 * u(rng);
    const SurfacePoint q = s.trace(p, kTwoPi * u(rng), len);
    EXPECT_LE(dist(s.to_3d(p), s.to_3d(q)), len + 1e-12);
    EXPECT_TRUE(s.same_point(s.trace(p, 1.0, 0.0), p, 1e-12));
  }
}

TEST(Surface, TraceAcrossDoubleReflects) {
  const Surface s = Surface::double_of(rectangle(2, 1));
  // From the centre of the front, head +x for 1.5: cross x = 1 and come back to x = 0.5 on the back.
  const SurfacePoint q = s.trace(SurfacePoint{0, {0, 0}}, 0.0, 1.5);
  EXPECT_EQ(q.face, 1);
  EXPECT_NEAR(q.coords.x, 0.5, 1e-14);
  EXPECT_NEAR(q.coords.y, 0.0, 1e-14);
}

TEST(Surface, RandomPointsInsideFaces) {
  std::mt19937_64 rng(12);
  const Surface s = Surface::double_of(hexagon_quad());
  for (int i = 0; i < 1000; ++i) {
    const SurfacePoint p = random_surface_point(s, rng);
    EXPECT_NO_THROW(s.locate(p));
  }
}
