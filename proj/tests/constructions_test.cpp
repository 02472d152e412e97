#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "test_util.hpp"
#include "tetramax/constructions.hpp"
#include "tetramax/error.hpp"
#include "tetramax/extrema.hpp"
#include "tetramax/geodesic.hpp"
#include "tetramax/polygon.hpp"

using namespace tetramax;
using namespace tetramax::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// Every point of M is a strict local maximum when probed on a small circle.
void expect_sampled_maxima(const Surface& s, const SurfacePoint& x, const ExtremumCensus& c) {
  for (const Extremum& e : c.M) {
    const Located loc = s.locate(e.point);
    for (int k = 0; k < 24; ++k) {
      const double a = loc.total_angle * k / 24;
      const SurfacePoint y = s.trace(loc, a, 1e-4);
      EXPECT_LT(shortest_distance(s, x, y), e.distance) << "at distance " << e.distance;
    }
  }
}

}  // namespace

TEST(Constructions, RectangleDouble) {
  EXPECT_EQ(code_of([] { rectangle_double(1, 1); }), ErrorCode::ParamOutOfRange);
  const Example ex = rectangle_double(2, 1);
  const ExtremumCensus c = census(*ex.surface, *ex.x);
  EXPECT_EQ(c.topology, Topology::H);
  int junctions = 0;
  for (const Extremum& e : c.M) junctions += e.vertex < 0;
  EXPECT_EQ(junctions, 2);
}

TEST(Constructions, HexagonDouble) {
  const Example ex = hexagon_double();
  const ExtremumCensus c = census(*ex.surface, *ex.x);
  ASSERT_EQ(c.M.size(), 4u);
  std::set<int> vs;
  for (const Extremum& e : c.M) {
    EXPECT_NEAR(e.distance, 1.0, 1e-9);
    vs.insert(e.vertex);
  }
  EXPECT_EQ(vs, (std::set<int>{0, 1, 2, 3}));
}

TEST(Constructions, ThinTetra) {
  EXPECT_EQ(code_of([] { thin_tetra(0.1, 0.5); }), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of([] { thin_tetra(0.0, 0.5); }), ErrorCode::ParamOutOfRange);
  const Example flat = thin_tetra(0.09, 0.0);
  EXPECT_EQ(flat.surface->kind(), SurfaceKind::Double);
  const Example solid = thin_tetra(0.09, 0.7);
  EXPECT_EQ(solid.surface->kind(), SurfaceKind::Tetra);
  std::mt19937_64 rng(41);
  for (const Example* ex : {&flat, &solid}) {
    const Surface& s = *ex->surface;
    for (int v : s.cone_points()) {
      const std::string& name = ex->vertex_names[v];
      if (name == "a" || name == "b") EXPECT_LT(s.vertex(v).angle, kPi / 4);
    }
    for (int i = 0; i < 100; ++i) {
      const ExtremumCensus c = census(s, random_surface_point(s, rng));
      for (const Extremum& e : c.F) {
        ASSERT_GE(e.vertex, 0);
        const std::string& name = ex->vertex_names[e.vertex];
        EXPECT_TRUE(name == "a" || name == "b") << name;
      }
    }
  }
}

TEST(Constructions, Isosceles) {
  EXPECT_EQ(code_of([] { isosceles({0, 0}, {4, 0}, {0.5, 0.5}); }), ErrorCode::ParamOutOfRange);
  const Example ex = isosceles({0, 0}, {4, 0}, {1.5, 3});
  for (int v : ex.surface->cone_points()) EXPECT_NEAR(ex.surface->vertex(v).angle, kPi, 1e-9);
  const ExtremumCensus c = census(*ex.surface, *ex.x);
  EXPECT_LE(c.M.size(), 2u);
}

TEST(Constructions, F3BasePoint) {
  const F3Instance f = f3_family({0, 0, 0, 0}, 0.5);
  const auto& L = f.example.polygon->vertices;
  using namespace f3;
  EXPECT_NEAR(dist(L[v1], L[w]), 2 * std::sin(kPi / 12), 1e-14);
  EXPECT_NEAR(dist(L[v1], L[w2]), 2 * std::sin(kPi / 12), 1e-14);
  EXPECT_NEAR(dist(L[w], L[u]), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(dist(L[w1], L[u2]), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(f.excess_w, kPi / 12, 1e-14);
  // Inscribed angles 4pi/6 + 19pi/24 + 15pi/24 at u, u', u''.
  EXPECT_NEAR(f.excess_u, kPi / 12, 1e-14);
  EXPECT_LT(f.max_residual(), 1e-9);

  ASSERT_TRUE(std::holds_alternative<Tetra>(f.example.folded->shape));
  const GluingReport& r = f.example.folded->report;
  EXPECT_EQ(r.cones.size(), 4u);
  EXPECT_EQ(r.vertex_class[w], r.vertex_class[w1]);
  EXPECT_EQ(r.vertex_class[w], r.vertex_class[w2]);
  EXPECT_EQ(r.vertex_class[u], r.vertex_class[u2]);
  EXPECT_NEAR(r.classes[r.vertex_class[w]].angle, kTwoPi, 1e-9);
  EXPECT_NEAR(r.classes[r.vertex_class[u]].angle, kTwoPi, 1e-9);
}

TEST(Constructions, F3FarthestPointsAndPlanarDistance) {
  const F3Instance f = f3_family({0.01, -0.02, 0.015, 0.0}, 0.3);
  const Surface& s = *f.example.surface;
  const ExtremumCensus c = census(s, *f.example.x);
  ASSERT_EQ(c.F.size(), 3u);
  EXPECT_NEAR(c.radius, 1.0, 1e-8);
  int cones = 0;
  for (const Extremum& e : c.F) {
    if (e.vertex >= 0) {
      ++cones;
      EXPECT_EQ(f.example.vertex_names[e.vertex], "v1");
    }
  }
  EXPECT_EQ(cones, 1);

  const GluedPolygon& g = *f.example.polygon;
  const Surface glued = glued_surface(g);
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1, 1);
  int checked = 0;
  while (checked < 30) {
    const Vec2 p{u(rng), u(rng)};
    if (!contains(g.vertices, p, 0.0, true)) continue;
    ++checked;
    const SurfacePoint y = transfer_to_fold(glued, *f.example.folded, polygon_point(glued, p));
    EXPECT_NEAR(shortest_distance(s, *f.example.x, y), norm(p), 1e-8);
  }
}

TEST(Constructions, F3Errors) {
  EXPECT_EQ(code_of([] { f3_family({0, 0, 0, 0}, 1.0); }), ErrorCode::ParamOutOfRange);
  EXPECT_EQ(code_of([] { f3_family({0, 0, 1.0, 0}, 0.5); }), ErrorCode::ParamOutOfRange);
}

TEST(Constructions, M5PolygonHasPrescribedAngles) {
  double h = 0;
  std::optional<GluedPolygon> poly;
  for (double g = 0.3; g < 2.0 && !poly; g += 0.1) {
    for (double beta = 1.0; beta < 3.0 && !poly; beta += 0.1) poly = m5_polygon(beta, g, &h);
  }
  ASSERT_TRUE(poly.has_value());
  EXPECT_GT(h, 0);
  const GluingReport r = validate_gluing(*poly);
  std::multiset<long> got;
  for (int c : r.cones) got.insert(std::lround(r.classes[c].angle / kPi * 8));
  EXPECT_EQ(got, (std::multiset<long>{6, 6, 7, 13}));
  for (int c : r.cones) {
    const double a = r.classes[c].angle / kPi * 8;
    EXPECT_NEAR(a, std::round(a), 1e-9);
  }
  // Cut directions must be increasing.
  EXPECT_FALSE(m5_polygon(3.5, 0.5).has_value());
}

TEST(Constructions, M5CandidateOutcome) {
  const M5Result r = m5_candidate();
  EXPECT_EQ(r.candidates, 256);
  if (!r.success) {
    EXPECT_FALSE(r.reason.empty());
    return;
  }
  EXPECT_EQ(r.best_m, 5);
  const Surface& s = *r.example->surface;
  ASSERT_EQ(s.kind(), SurfaceKind::Tetra);
  const Located lx = s.locate(*r.example->x);
  EXPECT_NEAR(lx.total_angle, kTwoPi, 1e-12);
  const ExtremumCensus c = census(s, *r.example->x);
  EXPECT_EQ(c.M.size(), 5u);
  expect_sampled_maxima(s, *r.example->x, c);
  EXPECT_TRUE(r.perturbation_checked);
  EXPECT_TRUE(r.perturbation_retained);
}

TEST(Constructions, M5IsWorkerCountInvariant) {
  M5Options one, four;
  one.workers = 1;
  four.workers = 4;
  const M5Result a = m5_candidate(one), b = m5_candidate(four);
  EXPECT_EQ(a.m_histogram, b.m_histogram);
  EXPECT_EQ(a.beta, b.beta);
  EXPECT_EQ(a.g, b.g);
}

TEST(Constructions, Dispatch) {
  EXPECT_EQ(construct("hexagon_double", {}).kind, "hexagon_double");
  EXPECT_EQ(code_of([] { construct("nope", {}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { construct("rectangle_double", {1}); }), ErrorCode::InvalidArgument);
}
