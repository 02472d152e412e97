#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"
#include "tetramax/json_io.hpp"
#include "tetramax/parallel.hpp"
#include "tetramax/survey.hpp"
#include "tetramax/svg.hpp"

using namespace tetramax;
using namespace tetramax::testing;

TEST(Parallel, ResultsIndependentOfWorkers) {
  for (int workers : {1, 2, 5}) {
    std::vector<int> out(37, -1);
    parallel_for(37, workers, [&](int i) { out[i] = i * i; });
    for (int i = 0; i < 37; ++i) EXPECT_EQ(out[i], i * i);
  }
}

TEST(Parallel, RethrowsLowestIndex) {
  try {
    parallel_for(20, 4, [](int i) {
      if (i % 7 == 3) throw GeometryError(ErrorCode::Internal, std::to_string(i));
    });
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_NE(std::string(e.what()).find(": 3"), std::string::npos);
  }
}

TEST(Parallel, ExplicitRequestWins) { EXPECT_EQ(worker_count(3), 3); }

TEST(Survey, ByteIdenticalAcrossRunsAndWorkers) {
  SurveyConfig c;
  c.seed = 11;
  c.samples = 12;
  c.points = 5;
  c.workers = 1;
  const std::string a = to_csv(run_survey(c), false);
  c.workers = 4;
  const std::string b = to_csv(run_survey(c), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("# tetramax survey csv v1\n", 0), 0u);
}

TEST(Survey, SurfaceDrawIgnoresPointCount) {
  SurveyConfig c;
  c.samples = 3;
  c.points = 1;
  const auto few = run_survey(c);
  c.points = 4;
  const auto many = run_survey(c);
  for (int i = 0; i < 3; ++i) {
    for (int e = 0; e < 6; ++e) EXPECT_EQ(few[i].lengths[e], many[4 * i].lengths[e]);
  }
}

TEST(Survey, TimingColumnOnlyWhenAsked) {
  SurveyConfig c;
  c.samples = 1;
  c.points = 1;
  const auto rows = run_survey(c);
  EXPECT_EQ(csv_header(false).find("wall_ms"), std::string::npos);
  EXPECT_NE(csv_header(true).find("wall_ms"), std::string::npos);
  const std::string line = csv_line(rows[0], true), header = csv_header(true);
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), std::count(header.begin(), header.end(), ','));
}

TEST(Summary, EmptyStreamRejected) {
  try {
    summarize({});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
}

TEST(Summary, SingleRowEqualsRow) {
  SurveyConfig c;
  c.samples = 1;
  c.points = 1;
  const auto rows = run_survey(c);
  const SurveySummary s = summarize(rows);
  EXPECT_EQ(s.rows, 1);
  EXPECT_EQ(s.max_m, rows[0].count_m);
  EXPECT_EQ(s.max_f, rows[0].count_f);
  EXPECT_EQ(s.topology.at(rows[0].topology), 1);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(s.m_at_least.at(k), rows[0].count_m >= k ? 1 : 0);
}

TEST(Summary, FlagsViolations) {
  SurveyRow r;
  r.topology = "H";
  r.count_m = 6;
  r.count_f = 1;
  SurveyRow ok = r;
  ok.count_m = 3;
  const SurveySummary s = summarize({ok, r});
  EXPECT_FALSE(s.ok());
  EXPECT_EQ(s.violations, std::vector<int>{1});
  EXPECT_FALSE(to_json(s).at("ok").get<bool>());
}

TEST(Summary, IsoscelesAtMostTwoMaxima) {
  SurveyConfig c;
  c.family = Family::Isosceles;
  c.samples = 30;
  c.points = 10;
  const SurveySummary s = summarize(run_survey(c));
  EXPECT_EQ(s.errors, 0);
  EXPECT_LE(s.max_m, 2);
  EXPECT_TRUE(s.ok());
}

TEST(Summary, RandomFamilyWithinBounds) {
  SurveyConfig c;
  c.seed = 3;
  c.samples = 60;
  c.points = 10;
  const SurveySummary s = summarize(run_survey(c));
  EXPECT_LE(s.max_m, 5);
  EXPECT_LE(s.max_f, 4);
  EXPECT_TRUE(s.ok());
}

TEST(Summary, FamilyNames) {
  for (Family f : {Family::Random, Family::Isosceles, Family::Thin}) EXPECT_EQ(family_from_string(to_string(f)), f);
  EXPECT_THROW(family_from_string("cube"), GeometryError);
}

TEST(JsonIo, SurfaceRoundTrip) {
  std::mt19937_64 rng(201);
  for (int i = 0; i < 20; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, 0.1));
    const Surface t = surface_from_json(Json::parse(to_json(s).dump()));
    const SurfacePoint p = random_surface_point(s, rng), q = random_surface_point(s, rng);
    EXPECT_NEAR(shortest_distance(s, p, q), shortest_distance(t, p, q), 1e-12 * s.scale());
  }
}

TEST(JsonIo, ConstructionRoundTrip) {
  const Example ex = hexagon_double();
  const Json j = Json::parse(to_json(ex).dump());
  const Surface s = surface_from_json(j.at("surface"));
  const SurfacePoint x = point_from_json(j.at("x"));
  EXPECT_NEAR(census(s, x).radius, 1.0, 1e-12);
}

TEST(JsonIo, GluedPolygonRoundTrip) {
  const GluedPolygon g = double_as_polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  const GluedPolygon h = glued_from_json(to_json(g));
  ASSERT_EQ(h.vertices.size(), g.vertices.size());
  ASSERT_EQ(h.pairings.size(), g.pairings.size());
  for (size_t i = 0; i < g.pairings.size(); ++i) {
    EXPECT_EQ(h.pairings[i].i, g.pairings[i].i);
    EXPECT_EQ(h.pairings[i].j, g.pairings[i].j);
  }
}

TEST(JsonIo, MalformedRejected) {
  for (const char* text : {R"({"lengths":[1,2]})", R"({"tetra":{"vertices":[[0,0,0]]}})", R"({"face":"a"})", "[]"}) {
    try {
      const Json j = Json::parse(text);
      if (j.contains("face")) {
        point_from_json(j);
      } else {
        surface_from_json(j);
      }
      ADD_FAILURE() << text;
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidArgument) << text;
    }
  }
}

TEST(JsonIo, ErrorObject) {
  const Json j = error_json(GeometryError(ErrorCode::SolveFailed, "no root"));
  EXPECT_EQ(j.at("error"), "SolveFailed");
  EXPECT_NE(j.at("message").get<std::string>().find("no root"), std::string::npos);
}

TEST(Svg, StarUnfoldingDrawing) {
  const Example ex = rectangle_double(2, 1);
  const StarUnfolding su = star_unfold(*ex.surface, *ex.x);
  const std::string svg = render_star_svg(su, cut_locus(*ex.surface, su), ex.vertex_names);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("stroke=\"red\""), std::string::npos);
}
