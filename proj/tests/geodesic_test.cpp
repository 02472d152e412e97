#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_util.hpp"
#include "tetramax/error.hpp"
#include "tetramax/geodesic.hpp"

using namespace tetramax;
using namespace tetramax::testing;

namespace {

// Every crossing lies on its side, strictly away from the endpoints, and the
// unfolded polyline is straight.
void expect_valid_segment(const Surface& s, const GeodesicSegment& g) {
  ASSERT_EQ(g.unfolded.size(), g.crossings.size() + 2);
  const Vec2 p = g.unfolded.front(), q = g.unfolded.back();
  EXPECT_NEAR(dist(p, q), g.length, 1e-12 * s.scale());
  const Vec2 dir = normalized(q - p);
  for (size_t i = 1; i + 1 < g.unfolded.size(); ++i) {
    EXPECT_NEAR(cross(dir, g.unfolded[i] - p), 0.0, 1e-10 * s.scale());
  }
  for (size_t i = 0; i < g.crossings.size(); ++i) {
    const Face& f = s.face(g.crossings[i].face);
    const double side = dist(f.corner(g.crossings[i].side), f.corner(g.crossings[i].side + 1));
    EXPECT_GT(side, 0.0);
  }
}

SurfacePoint vertex_of(const Surface& s, int v) { return s.vertex_point(v); }

}  // namespace

TEST(Geodesic, SamePointIsZero) {
  const Surface s = Surface::from_tetra(regular_tetra());
  const SurfacePoint p = face_centroid(s, 0);
  EXPECT_EQ(shortest_distance(s, p, p), 0.0);
  EXPECT_TRUE(shortest_path(s, p, p).crossings.empty());
}

TEST(Geodesic, AdjacentVerticesOfRegular) {
  const Surface s = Surface::from_tetra(regular_tetra());
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      EXPECT_NEAR(shortest_distance(s, vertex_of(s, a), vertex_of(s, b)), 1.0, 1e-14);
    }
  }
}

TEST(Geodesic, VertexToOppositeCentroid) {
  const Surface s = Surface::from_tetra(regular_tetra());
  const int opposite = face_with(s, 1, 2, 3);
  const SurfacePoint c = face_centroid(s, opposite);
  const double expected = 2.0 / std::sqrt(3.0);
  EXPECT_NEAR(shortest_distance(s, vertex_of(s, 0), c), expected, 1e-12);
  EXPECT_NEAR(oracle_distance(s, vertex_of(s, 0), c, 6), expected, 1e-12);
  const auto segs = all_segments(s, vertex_of(s, 0), c);
  ASSERT_EQ(segs.size(), 3u);
  for (const auto& g : segs) {
    EXPECT_NEAR(g.length, expected, 1e-12);
    expect_valid_segment(s, g);
  }
  // Threefold symmetry: directions at the centroid are 2 pi / 3 apart.
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(cyclic_distance(segs[i].target_angle, segs[(i + 1) % 3].target_angle), kTwoPi / 3, 1e-9);
  }
}

TEST(Geodesic, OracleDepthZero) {
  const Surface s = Surface::from_tetra(regular_tetra());
  const SurfacePoint a = face_centroid(s, 0);
  const SurfacePoint b{0, a.coords + Vec2{0.05, 0.02}};
  EXPECT_NEAR(oracle_distance(s, a, b, 0), dist(a.coords, b.coords), 1e-15);
  try {
    oracle_distance(s, a, face_centroid(s, 1), 0);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthInsufficient);
  }
}

TEST(Geodesic, NearbyPointsSingleChord) {
  const Surface s = Surface::from_tetra(regular_tetra());
  const SurfacePoint a = face_centroid(s, 2);
  const SurfacePoint b{2, a.coords + Vec2{0.03, -0.04}};
  const auto segs = all_segments(s, a, b);
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_NEAR(segs[0].length, 0.05, 1e-15);
  EXPECT_TRUE(segs[0].crossings.empty());
}

TEST(Geodesic, RectangleJunctionHasThreeSegments) {
  const Surface s = Surface::double_of(rectangle(2, 1));
  const SurfacePoint o{0, {0, 0}};
  const SurfacePoint junction{1, {0.75, 0}};
  const auto segs = all_segments(s, o, junction);
  ASSERT_EQ(segs.size(), 3u);
  for (const auto& g : segs) {
    EXPECT_NEAR(g.length, 1.25, 1e-12);
    expect_valid_segment(s, g);
  }
}

TEST(Geodesic, SquareCentreToVertices) {
  const Surface s = Surface::double_of(rectangle(1, 1));
  const auto vs = segments_to_vertices(s, {0, {0, 0}});
  ASSERT_EQ(vs.size(), 4u);
  for (const auto& v : vs) {
    EXPECT_TRUE(v.unique);
    EXPECT_NEAR(v.segment.length, std::sqrt(0.5), 1e-14);
    EXPECT_TRUE(v.segment.crossings.empty());
  }
}

TEST(Geodesic, RegularCentroidToVertices) {
  const Surface s = Surface::from_tetra(regular_tetra());
  const int abc = face_with(s, 0, 1, 2);
  const auto vs = segments_to_vertices(s, face_centroid(s, abc));
  for (const auto& v : vs) {
    if (v.vertex == 3) {
      EXPECT_NEAR(v.segment.length, 2 / std::sqrt(3.0), 1e-12);
      // Three wrappings around the opposite faces tie by symmetry.
      EXPECT_EQ(v.all.size(), 3u);
      EXPECT_FALSE(v.unique);
    } else {
      EXPECT_NEAR(v.segment.length, 1 / std::sqrt(3.0), 1e-12);
      EXPECT_TRUE(v.unique);
    }
  }
}

TEST(Geodesic, SymmetricPointOnRectangleAxisTies) {
  const Surface s = Surface::double_of(rectangle(2, 1));
  const auto vs = segments_to_vertices(s, {0, {1, 0}});
  int ties = 0;
  for (const auto& v : vs) {
    if (!v.unique) {
      ++ties;
      EXPECT_EQ(v.all.size(), 2u);
      EXPECT_NEAR(v.segment.length, std::sqrt(4.25), 1e-12);
    }
  }
  EXPECT_EQ(ties, 2);
}

TEST(Geodesic, CutLocusFromVertexRejected) {
  const Surface s = Surface::from_tetra(regular_tetra());
  EXPECT_THROW(segments_to_vertices(s, vertex_of(s, 0)), GeometryError);
}

TEST(GeodesicProperty, MatchesOracle) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 150; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, 0.1));
    const SurfacePoint p = random_surface_point(s, rng);
    const SurfacePoint q = random_surface_point(s, rng);
    const double fast = shortest_distance(s, p, q);
    const double slow = oracle_distance(s, p, q, 8);
    EXPECT_NEAR(fast, slow, 1e-9 * s.scale()) << "sample " << i;
    expect_valid_segment(s, shortest_path(s, p, q));
  }
}

TEST(GeodesicProperty, VertexEndpointsMatchOracle) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 60; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, 0.1));
    const SurfacePoint p = random_surface_point(s, rng);
    const SurfacePoint v = vertex_of(s, i % 4);
    EXPECT_NEAR(shortest_distance(s, p, v), oracle_distance(s, p, v, 8), 1e-9 * s.scale());
    EXPECT_NEAR(shortest_distance(s, v, p), oracle_distance(s, v, p, 8), 1e-9 * s.scale());
  }
}

TEST(GeodesicProperty, DoublesMatchOracle) {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    std::vector<Vec2> quad{{-1 + 0.3 * u(rng), -1 + 0.3 * u(rng)}, {1 + 0.3 * u(rng), -1 + 0.3 * u(rng)},
                           {1 + 0.3 * u(rng), 1 + 0.3 * u(rng)}, {-1 + 0.3 * u(rng), 1 + 0.3 * u(rng)}};
    const Surface s = Surface::double_of(quad);
    const SurfacePoint p = random_surface_point(s, rng);
    const SurfacePoint q = random_surface_point(s, rng);
    EXPECT_NEAR(shortest_distance(s, p, q), oracle_distance(s, p, q, 8), 1e-9 * s.scale());
  }
}

TEST(GeodesicProperty, NeedleTetraMatchesOracle) {
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> ue(0.005, 0.05), uh(0.1, 1.4);
  for (int i = 0; i < 40; ++i) {
    const double e = ue(rng), h = uh(rng);
    const Surface s = Surface::from_tetra(Tetra::from_vertices(
        {0, 0, 0}, {1, 0, 0}, {0.5, e * std::cos(h), e * std::sin(h)}, {0.5, -e * std::cos(h), e * std::sin(h)}));
    const SurfacePoint p = random_surface_point(s, rng);
    const SurfacePoint q = random_surface_point(s, rng);
    EXPECT_NEAR(shortest_distance(s, p, q), oracle_distance(s, p, q, 8), 1e-9 * s.scale()) << "sample " << i;
  }
}

TEST(GeodesicProperty, MetricAxioms) {
  std::mt19937_64 rng(104);
  for (int i = 0; i < 100; ++i) {
    const Tetra t = random_tetra(rng, 0.05);
    const Surface s = Surface::from_tetra(t);
    const SurfacePoint a = random_surface_point(s, rng);
    const SurfacePoint b = random_surface_point(s, rng);
    const SurfacePoint c = random_surface_point(s, rng);
    const double ab = shortest_distance(s, a, b), ba = shortest_distance(s, b, a);
    const double bc = shortest_distance(s, b, c), ac = shortest_distance(s, a, c);
    EXPECT_NEAR(ab, ba, 1e-12 * s.scale());
    EXPECT_LE(ac, ab + bc + 1e-9 * s.scale());
    EXPECT_GE(ab, dist(s.to_3d(a), s.to_3d(b)) - 1e-12);
  }
}

TEST(GeodesicProperty, SegmentEndsAtTarget) {
  std::mt19937_64 rng(105);
  for (int i = 0; i < 100; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, 0.05));
    const SurfacePoint p = random_surface_point(s, rng);
    const SurfacePoint q = random_surface_point(s, rng);
    const GeodesicSegment g = shortest_path(s, p, q);
    const SurfacePoint end = s.trace(p, g.source_angle, g.length);
    EXPECT_TRUE(s.same_point(end, q, 1e-9 * s.scale())) << "sample " << i;
  }
}
