#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "tetramax/cutlocus.hpp"
#include "tetramax/error.hpp"
#include "tetramax/polygon.hpp"

using namespace tetramax;
using namespace tetramax::testing;

namespace {

std::vector<Vec2> hexagon_quad() {
  return {{1, 0}, {0.5, std::sqrt(3.0) / 2}, {-0.5, std::sqrt(3.0) / 2}, {-1, 0}};
}

int count_degree(const CutLocusTree& t, int d) {
  int c = 0;
  for (const auto& n : t.nodes) c += n.degree == d;
  return c;
}

}  // namespace

TEST(StarUnfolding, RegularTetraCentroid) {
  const Surface s = Surface::from_tetra(regular_tetra());
  const SurfacePoint x = face_centroid(s, face_with(s, 0, 1, 2));
  const StarUnfolding su = star_unfold(s, x);
  EXPECT_EQ(su.size(), 4);
  EXPECT_TRUE(is_simple(su.boundary));
  EXPECT_NEAR(su.area(), std::sqrt(3.0), 1e-9 * std::sqrt(3.0));
  // The tie at d means the library cut along one of three equal segments.
  EXPECT_FALSE(su.generic);
  EXPECT_THROW(star_unfold(s, x, TiePolicy::Reject), GeometryError);
}

TEST(StarUnfolding, SquareCentreIsSquare) {
  const Surface s = Surface::double_of(rectangle(1, 1));
  const StarUnfolding su = star_unfold(s, {0, {0, 0}}, TiePolicy::Reject);
  EXPECT_TRUE(is_simple(su.boundary));
  EXPECT_NEAR(su.area(), 2.0, 1e-12);
  // Four-fold symmetry: the source images form a square of side 1 (diagonal 2 * 1).
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(dist(su.sources[j], su.sources[(j + 1) % 4]), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(dist(su.vertex_images[j], su.sources[j]), std::sqrt(0.5), 1e-12);
  }
}

TEST(StarUnfolding, SourceImagesEquidistantFromCutEnds) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, 0.05));
    const SurfacePoint x = random_surface_point(s, rng);
    const StarUnfolding su = star_unfold(s, x);
    const int n = su.size();
    for (int j = 0; j < n; ++j) {
      const int prev = (j + n - 1) % n;
      EXPECT_NEAR(dist(su.vertex_images[j], su.sources[j]), su.lengths[j], 1e-10 * s.scale());
      EXPECT_NEAR(dist(su.vertex_images[j], su.sources[prev]), su.lengths[j], 1e-10 * s.scale());
    }
    EXPECT_TRUE(is_simple(su.boundary));
    EXPECT_NEAR(su.area(), s.area(), 1e-9 * s.area());
  }
}

TEST(StarUnfolding, AxisPointOnRectangleIsNonGeneric) {
  const Surface s = Surface::double_of(rectangle(2, 1));
  try {
    star_unfold(s, {0, {1, 0}}, TiePolicy::Reject);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonGenericPosition);
  }
}

TEST(CutLocus, RectangleCentreIsH) {
  const Surface s = Surface::double_of(rectangle(2, 1));
  const StarUnfolding su = star_unfold(s, {0, {0, 0}}, TiePolicy::Reject);
  const CutLocusTree t = cut_locus(s, su);
  EXPECT_EQ(t.topology, Topology::H);
  EXPECT_EQ(t.leaves().size(), 4u);
  int junctions = 0;
  for (const auto& n : t.nodes) {
    if (n.degree != 3) continue;
    ++junctions;
    EXPECT_NEAR(n.distance, 1.25, 1e-12);
    EXPECT_EQ(n.point.face, 1);
    EXPECT_NEAR(std::abs(n.point.coords.x), 0.75, 1e-12);
    EXPECT_NEAR(n.point.coords.y, 0.0, 1e-12);
    EXPECT_EQ(n.directions.size(), 3u);
  }
  EXPECT_EQ(junctions, 2);
  // Both cut sides of every tree edge are boundary in the source unfolding.
  const SourceUnfolding src = source_unfold(s, su, t);
  EXPECT_NEAR(src.perimeter(), 2 * t.total_length(), 1e-9);
  EXPECT_NEAR(src.area(), 4.0, 1e-9);
  EXPECT_TRUE(src.star_shaped(1000, 1e-9));
}

TEST(CutLocus, SquareCentreIsX) {
  const Surface s = Surface::double_of(rectangle(1, 1));
  const StarUnfolding su = star_unfold(s, {0, {0, 0}});
  const CutLocusTree t = cut_locus(s, su);
  EXPECT_EQ(t.topology, Topology::X);
  ASSERT_EQ(count_degree(t, 4), 1);
  for (const auto& n : t.nodes) {
    if (n.degree == 4) {
      EXPECT_EQ(n.point.face, 1);
      EXPECT_NEAR(norm(n.point.coords), 0.0, 1e-12);
      EXPECT_NEAR(n.distance, 1.0, 1e-12);
    }
  }
  const SourceUnfolding src = source_unfold(s, su, t);
  EXPECT_NEAR(src.area(), 2.0, 1e-9);
  EXPECT_TRUE(src.star_shaped(1000, 1e-9));
}

TEST(CutLocus, RegularCentroidIsY) {
  const Surface s = Surface::from_tetra(regular_tetra());
  const SurfacePoint x = face_centroid(s, face_with(s, 0, 1, 2));
  const StarUnfolding su = star_unfold(s, x);
  const CutLocusTree t = cut_locus(s, su);
  EXPECT_EQ(t.topology, Topology::Y);
  for (const auto& n : t.nodes) {
    if (n.degree == 3) {
      EXPECT_EQ(n.vertex, 3);
      EXPECT_NEAR(n.distance, 2 / std::sqrt(3.0), 1e-12);
    } else {
      EXPECT_EQ(n.degree, 1);
      EXPECT_NE(n.vertex, 3);
    }
  }
  const SourceUnfolding src = source_unfold(s, su, t);
  EXPECT_NEAR(src.area(), std::sqrt(3.0), 1e-9);
  EXPECT_TRUE(src.star_shaped(1000, 1e-9));
}

TEST(CutLocus, HexagonDoubleIsPath) {
  const Surface s = Surface::double_of(hexagon_quad());
  const StarUnfolding su = star_unfold(s, {0, {0, 0}});
  const CutLocusTree t = cut_locus(s, su);
  EXPECT_EQ(t.topology, Topology::I);
  for (const auto& n : t.nodes) {
    EXPECT_GE(n.vertex, 0);
    EXPECT_NEAR(n.distance, 1.0, 1e-12);
  }
}

TEST(CutLocus, RandomTetraProperties) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, 0.05));
    const SurfacePoint x = random_surface_point(s, rng);
    const StarUnfolding su = star_unfold(s, x);
    const CutLocusTree t = cut_locus(s, su);
    EXPECT_NE(t.topology, Topology::I);
    const auto leaves = t.leaves();
    EXPECT_LE(leaves.size(), 4u);
    int vertex_nodes = 0;
    for (const auto& n : t.nodes) {
      vertex_nodes += n.vertex >= 0;
      EXPECT_GE(n.sites.size(), 2u);
      EXPECT_EQ(static_cast<int>(n.directions.size()), n.degree);
      EXPECT_NEAR(n.distance, shortest_distance(s, x, n.point), 1e-9 * s.scale());
    }
    EXPECT_EQ(vertex_nodes, 4);
    const SourceUnfolding src = source_unfold(s, su, t);
    EXPECT_NEAR(src.area(), s.area(), 1e-9 * s.area());
    EXPECT_NEAR(src.perimeter(), 2 * t.total_length(), 1e-9 * s.scale());
    EXPECT_TRUE(src.star_shaped(1000, 1e-9));
  }
}
