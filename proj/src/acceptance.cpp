#include "tetramax/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "tetramax/constructions.hpp"
#include "tetramax/error.hpp"
#include "tetramax/extrema.hpp"
#include "tetramax/geodesic.hpp"
#include "tetramax/parallel.hpp"
#include "tetramax/polygon.hpp"
#include "tetramax/survey.hpp"

namespace tetramax {
namespace {

constexpr double kConditioning = 0.05;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (passed) detail << "FIRST FAILURE: " << why << "; ";
    passed = false;
  }
};

class Context {
 public:
  explicit Context(const AcceptanceOptions& o) : options(o) {}

  int count(int base) const { return std::max(1, static_cast<int>(std::ceil(base * options.scale))); }
  int workers() const { return worker_count(options.workers); }
  std::mt19937_64 rng(int criterion) const { return sample_rng(options.seed, 1000 * criterion); }
  std::mt19937_64 rng(int criterion, int index) const { return sample_rng(options.seed, 1000 * criterion + 1 + index); }

  void record(const Surface& s) {
    std::lock_guard<std::mutex> lock(mu_);
    ++surfaces_;
    worst_gb_ = std::max(worst_gb_, std::abs(s.total_curvature() - 4 * kPi));
  }
  long surfaces() const { return surfaces_; }
  double worst_gauss_bonnet() const { return worst_gb_; }

  const AcceptanceOptions& options;

 private:
  std::mutex mu_;
  long surfaces_ = 0;
  double worst_gb_ = 0.0;
};

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

SurfacePoint generic_point(const Surface& s, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const SurfacePoint x = random_surface_point(s, rng);
    try {
      star_unfold(s, x, TiePolicy::Reject);
      return x;
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::NonGenericPosition) throw;
    }
  }
  throw GeometryError(ErrorCode::SamplerExhausted, "no generic point found");
}

void geodesic_oracle(Context& ctx, Outcome& out) {
  const int n = ctx.count(500);
  std::mt19937_64 rng = ctx.rng(1);
  std::vector<double> times;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, kConditioning));
    ctx.record(s);
    const SurfacePoint p = random_surface_point(s, rng), q = random_surface_point(s, rng);
    const auto start = std::chrono::steady_clock::now();
    const double fast = shortest_distance(s, p, q);
    times.push_back(ms_since(start));
    double slow = 0.0;
    try {
      slow = oracle_distance(s, p, q, 8);
    } catch (const GeometryError& e) {
      out.fail("oracle: " + std::string(e.what()));
      continue;
    }
    const double err = std::abs(fast - slow) / s.scale();
    worst = std::max(worst, err);
    if (err > 1e-9) out.fail("case " + std::to_string(i) + " differs by " + std::to_string(err));
  }
  const double med = median(times);
  if (med >= 10.0) out.fail("median query " + std::to_string(med) + " ms");
  out.detail << n << " cases, worst |fast-oracle|/diam " << worst << ", median query " << med << " ms";
}

void metric_axioms(Context& ctx, Outcome& out) {
  const int n = ctx.count(200);
  std::mt19937_64 rng = ctx.rng(2);
  double worst_sym = 0.0, worst_tri = 0.0, worst_chord = 0.0;
  for (int i = 0; i < n; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, kConditioning));
    ctx.record(s);
    const SurfacePoint p = random_surface_point(s, rng), q = random_surface_point(s, rng),
                       r = random_surface_point(s, rng);
    const double pq = shortest_distance(s, p, q), qp = shortest_distance(s, q, p);
    const double qr = shortest_distance(s, q, r), pr = shortest_distance(s, p, r);
    const double tol = 1e-9 * s.scale();
    worst_chord = std::max(worst_chord, norm(s.to_3d(p) - s.to_3d(q)) - pq);
    worst_sym = std::max(worst_sym, std::abs(pq - qp));
    worst_tri = std::max(worst_tri, pr - pq - qr);
    if (pq < norm(s.to_3d(p) - s.to_3d(q)) - tol) out.fail("chord bound, triple " + std::to_string(i));
    if (std::abs(pq - qp) > tol) out.fail("symmetry, triple " + std::to_string(i));
    if (pr > pq + qr + tol) out.fail("triangle inequality, triple " + std::to_string(i));
  }
  out.detail << n << " triples, max chord excess " << worst_chord << ", max asymmetry " << worst_sym
             << ", max triangle excess " << worst_tri;
}

void star_unfolding(Context& ctx, Outcome& out) {
  const int n = ctx.count(200);
  std::mt19937_64 rng = ctx.rng(3);
  double worst_area = 0.0, worst_eq = 0.0;
  for (int i = 0; i < n; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, kConditioning));
    ctx.record(s);
    const SurfacePoint x = generic_point(s, rng);
    const StarUnfolding su = star_unfold(s, x, TiePolicy::Reject);
    if (!is_simple(su.boundary)) out.fail("not simple, case " + std::to_string(i));
    const double rel = std::abs(su.area() - s.area()) / s.area();
    worst_area = std::max(worst_area, rel);
    if (rel > 1e-9) out.fail("area, case " + std::to_string(i));
    const CutLocusTree t = cut_locus(s, su);
    for (const CutNode& node : t.nodes) {
      std::vector<double> d;
      for (Vec2 src : su.sources) d.push_back(dist(src, node.planar));
      std::sort(d.begin(), d.end());
      const double gap = (d[1] - d[0]) / s.scale();
      worst_eq = std::max(worst_eq, gap);
      if (gap > 1e-9) out.fail("node not equidistant, case " + std::to_string(i));
    }
  }
  out.detail << n << " generic (T, x), worst relative area error " << worst_area
             << ", worst two-nearest-sites gap " << worst_eq;
}

void source_unfolding(Context& ctx, Outcome& out) {
  const int n = ctx.count(50);
  std::mt19937_64 rng = ctx.rng(4);
  for (int i = 0; i < n; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, kConditioning));
    ctx.record(s);
    const SourceUnfolding su = source_unfold(s, random_surface_point(s, rng));
    if (!su.star_shaped(1000, 1e-9 * s.scale())) out.fail("not star-shaped, case " + std::to_string(i));
    if (std::abs(su.area() - s.area()) > 1e-9 * s.area()) out.fail("area, case " + std::to_string(i));
  }
  out.detail << n << " (T, x), 1000 boundary samples each";
}

void cut_locus_structure(Context& ctx, Outcome& out) {
  const int n = ctx.count(200);
  std::mt19937_64 rng = ctx.rng(5);
  std::map<std::string, int> topo;
  double worst_bisect = 0.0;
  for (int i = 0; i < n; ++i) {
    const Surface s = Surface::from_tetra(random_tetra(rng, kConditioning));
    ctx.record(s);
    const SurfacePoint x = random_surface_point(s, rng);
    const StarUnfolding su = star_unfold(s, x);
    const CutLocusTree t = cut_locus(s, su);
    ++topo[to_string(t.topology)];
    if (t.topology == Topology::I) out.fail("I topology, case " + std::to_string(i));
    std::set<int> leaf_vertices;
    for (int l : t.leaves()) leaf_vertices.insert(t.nodes[l].vertex);
    if (leaf_vertices != std::set<int>{0, 1, 2, 3}) out.fail("leaves are not the vertices, case " + std::to_string(i));
    for (const CutNode& node : t.nodes) {
      const int segs = static_cast<int>(all_segments(s, x, node.point).size());
      if (segs != node.degree) {
        out.fail("degree " + std::to_string(node.degree) + " vs " + std::to_string(segs) + " segments, case " +
                 std::to_string(i));
      }
    }
    for (const CutEdge& e : t.edges) {
      for (int end : {e.a, e.b}) {
        const Vec2 p = t.nodes[end].planar;
        const Vec2 along = t.nodes[end == e.a ? e.b : e.a].planar - p;
        const Vec2 ua = su.sources[e.site_a] - p, ub = su.sources[e.site_b] - p;
        const double aa = std::acos(std::clamp(dot(normalized(along), normalized(ua)), -1.0, 1.0));
        const double ab = std::acos(std::clamp(dot(normalized(along), normalized(ub)), -1.0, 1.0));
        worst_bisect = std::max(worst_bisect, std::abs(aa - ab));
        if (std::abs(aa - ab) > 1e-6) out.fail("edge does not bisect, case " + std::to_string(i));
      }
    }
  }
  out.detail << n << " (T, x); topologies";
  for (const auto& [k, v] : topo) out.detail << ' ' << k << '=' << v;
  out.detail << "; worst bisection defect " << worst_bisect << " rad";
}

void global_bounds(Context& ctx, Outcome& out) {
  SurveyConfig cfg;
  cfg.seed = ctx.options.seed;
  cfg.samples = ctx.count(500);
  cfg.points = 20;
  cfg.workers = ctx.options.workers;
  cfg.conditioning = kConditioning;
  const std::vector<SurveyRow> rows = run_survey(cfg);
  for (int i = 0; i < cfg.samples; ++i) ctx.record(*survey_surface(cfg, i).surface);
  const SurveySummary sum = summarize(rows);
  std::vector<double> times;
  for (const SurveyRow& r : rows) times.push_back(r.wall_ms);
  const double med = median(times);
  if (!sum.ok()) out.fail(std::to_string(sum.violations.size()) + " violating rows");
  if (sum.errors > 0) out.fail(std::to_string(sum.errors) + " census errors");
  if (med >= 1000.0) out.fail("median census " + std::to_string(med) + " ms");
  out.detail << sum.rows << " censuses, max #M " << sum.max_m << ", max #F " << sum.max_f << ", violations "
             << sum.violations.size() << ", errors " << sum.errors << ", median census " << med << " ms";
}

void isosceles_family(Context& ctx, Outcome& out) {
  const int n = ctx.count(50);
  SurveyConfig cfg;
  cfg.seed = ctx.options.seed + 7;
  cfg.family = Family::Isosceles;
  int max_m = 0;
  double worst_angle = 0.0;
  for (int i = 0; i < n; ++i) {
    const Example ex = survey_surface(cfg, i);
    const Surface s = *ex.surface;
    ctx.record(s);
    for (int v : s.cone_points()) {
      worst_angle = std::max(worst_angle, std::abs(s.vertex(v).angle - kPi));
      if (std::abs(s.vertex(v).angle - kPi) > 1e-9) out.fail("cone angle, instance " + std::to_string(i));
    }
    if (s.cone_points().size() != 4) out.fail("cone count, instance " + std::to_string(i));
    std::mt19937_64 rng = ctx.rng(7, i);
    for (int k = 0; k < 100; ++k) {
      const ExtremumCensus c = census(s, random_surface_point(s, rng));
      max_m = std::max(max_m, static_cast<int>(c.M.size()));
      if (c.M.size() > 2) out.fail("#M = " + std::to_string(c.M.size()) + ", instance " + std::to_string(i));
    }
  }
  out.detail << n << " triangles x 100 points, worst |theta - pi| " << worst_angle << ", max #M " << max_m;
}

void hexagon(Context& ctx, Outcome& out) {
  const Example ex = hexagon_double();
  ctx.record(*ex.surface);
  const ExtremumCensus c = census(*ex.surface, *ex.x);
  std::set<int> vs;
  for (const Extremum& e : c.M) {
    vs.insert(e.vertex);
    if (std::abs(e.distance - 1.0) > 1e-9) out.fail("distance " + std::to_string(e.distance));
  }
  if (c.M.size() != 4 || vs != std::set<int>{0, 1, 2, 3}) out.fail("M is not the four vertices");
  out.detail << "#M " << c.M.size() << ", radius " << c.radius;
}

void rectangle(Context& ctx, Outcome& out) {
  const Example ex = rectangle_double(2.0, 1.0);
  ctx.record(*ex.surface);
  const ExtremumCensus c = census(*ex.surface, *ex.x);
  int junctions_in_m = 0;
  for (const Extremum& e : c.M) junctions_in_m += e.vertex < 0 && c.tree.nodes[e.node].degree == 3;
  if (c.topology != Topology::H) out.fail("topology " + to_string(c.topology));
  if (junctions_in_m != 2) out.fail(std::to_string(junctions_in_m) + " junctions in M");
  out.detail << "topology " << to_string(c.topology) << ", junctions in M " << junctions_in_m;
}

void thin_family(Context& ctx, Outcome& out) {
  const int n = ctx.count(50);
  std::mt19937_64 rng = ctx.rng(10);
  std::uniform_real_distribution<double> ue(0.01, thin_tetra_max_eps()), uh(0.0, kPi / 2 - 0.05);
  double worst_angle = 0.0;
  int checked = 0;
  for (int i = 0; i < n; ++i) {
    const Example ex = thin_tetra(ue(rng), i == 0 ? 0.0 : uh(rng));
    const Surface s = *ex.surface;
    ctx.record(s);
    for (int v : s.cone_points()) {
      const std::string& name = ex.vertex_names[v];
      if (name != "a" && name != "b") continue;
      worst_angle = std::max(worst_angle, s.vertex(v).angle);
      if (s.vertex(v).angle > kPi / 4 + 1e-9) out.fail("angle at " + name + ", instance " + std::to_string(i));
    }
    for (int k = 0; k < 100; ++k) {
      const ExtremumCensus c = census(s, random_surface_point(s, rng));
      ++checked;
      for (const Extremum& e : c.F) {
        const bool ok = e.vertex >= 0 && (ex.vertex_names[e.vertex] == "a" || ex.vertex_names[e.vertex] == "b");
        if (!ok) out.fail("antipode outside {a, b}, instance " + std::to_string(i));
      }
    }
  }
  out.detail << n << " instances x 100 points (" << checked << " censuses), largest angle at a/b " << worst_angle;
}

void f3_family_check(Context& ctx, Outcome& out) {
  const int n = ctx.count(20);
  std::mt19937_64 rng = ctx.rng(11);
  std::uniform_real_distribution<double> ud(-0.05, 0.05), ut(0.1, 0.9);
  double worst_res = 0.0, worst_radius = 0.0, worst_planar = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::array<double, 4> delta{ud(rng), ud(rng), ud(rng), ud(rng)};
    const double t = ut(rng);
    const F3Instance f = f3_family(delta, t);
    const Surface s = *f.example.surface;
    ctx.record(s);
    worst_res = std::max(worst_res, f.max_residual());
    if (f.max_residual() > 1e-9) out.fail("residual, draw " + std::to_string(i));
    if (!std::holds_alternative<Tetra>(f.example.folded->shape)) out.fail("fold not a tetrahedron");
    const ExtremumCensus c = census(s, *f.example.x);
    worst_radius = std::max(worst_radius, std::abs(c.radius - 1.0));
    if (c.F.size() != 3) out.fail("#F = " + std::to_string(c.F.size()) + ", draw " + std::to_string(i));
    if (std::abs(c.radius - 1.0) > 1e-8) out.fail("radius, draw " + std::to_string(i));
    const GluedPolygon& g = *f.example.polygon;
    const Surface glued = glued_surface(g);
    ctx.record(glued);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 100;) {
      const Vec2 p{u(rng), u(rng)};
      if (!contains(g.vertices, p, 0.0, true)) continue;
      ++k;
      const SurfacePoint y = transfer_to_fold(glued, *f.example.folded, polygon_point(glued, p));
      const double err = std::abs(shortest_distance(s, *f.example.x, y) - norm(p));
      worst_planar = std::max(worst_planar, err);
      if (err > 1e-8) out.fail("planar distance, draw " + std::to_string(i));
    }
  }
  out.detail << n << " draws, worst residual " << worst_res << ", worst |radius - 1| " << worst_radius
             << ", worst planar-distance error " << worst_planar;
}

void antipode_search(Context& ctx, Outcome& out) {
  const int n = ctx.count(100);
  struct Result {
    bool ok = false;
    int evaluations = 0;
    double gap = 1.0;
    std::string error;
  };
  std::vector<Result> results(n);
  std::vector<Tetra> tetras;
  std::mt19937_64 rng = ctx.rng(12);
  for (int i = 0; i < n; ++i) tetras.push_back(random_tetra(rng, kConditioning));
  parallel_for(n, ctx.workers(), [&](int i) {
    const Surface s = Surface::from_tetra(tetras[i]);
    ctx.record(s);
    try {
      const AntipodeSearchResult r = search_antipode_multiplicity(s, 2);
      results[i] = {r.success && r.gap < 1e-6, r.evaluations, r.gap, ""};
    } catch (const BudgetExhaustedError& e) {
      results[i] = {false, e.best().evaluations, e.best().gap, "budget exhausted"};
    } catch (const GeometryError& e) {
      results[i].error = e.what();
    }
  });
  int ok = 0, max_eval = 0;
  for (int i = 0; i < n; ++i) {
    ok += results[i].ok;
    max_eval = std::max(max_eval, results[i].evaluations);
    if (!results[i].ok) out.fail("tetrahedron " + std::to_string(i) + ": " + results[i].error);
  }
  out.detail << ok << "/" << n << " succeeded, max evaluations " << max_eval;
}

// Moves every polygon vertex by delta along fixed directions while keeping the
// gluing valid: cone images stay on the bisector of their two neighbours and
// the images of x keep a total angle of 2 pi.
GluedPolygon perturbed_star(const GluedPolygon& g, const std::vector<Vec2>& dirs, double delta) {
  GluedPolygon p = g;
  const int n = static_cast<int>(g.vertices.size());
  auto& v = p.vertices;
  for (int i = 0; i < n; i += 2) v[i] = v[i] + dirs[i] * delta;
  auto bisector = [&](int i) {
    const Vec2 a = v[i - 1], b = v[(i + 1) % n];
    return std::make_pair((a + b) / 2, normalized(perp(b - a)));
  };
  for (int i = 1; i < n; i += 2) {
    const auto [m, d] = bisector(i);
    v[i] = m + d * dot(v[i] + dirs[i] * delta - m, d);
  }
  auto excess = [&](double s) {
    const auto [m, d] = bisector(1);
    v[1] = m + d * s;
    double sum = 0.0;
    for (int i = 0; i < n; i += 2) {
      const Vec2 prev = v[(i + n - 1) % n], next = v[(i + 1) % n];
      sum += wrap_angle(angle_of(prev - v[i]) - angle_of(next - v[i]), kTwoPi);
    }
    return sum - kTwoPi;
  };
  const auto [m, d] = bisector(1);
  double s0 = dot(v[1] - m, d), s1 = s0 + 1e-3 * norm(v[2] - v[0]);
  double f0 = excess(s0), f1 = excess(s1);
  for (int it = 0; it < 50 && std::abs(f1) > 1e-15 && f1 != f0; ++it) {
    const double s2 = s1 - f1 * (s1 - s0) / (f1 - f0);
    s0 = s1;
    f0 = f1;
    s1 = s2;
    f1 = excess(s1);
  }
  excess(s1);
  return p;
}

void fold_round_trip(Context& ctx, Outcome& out) {
  const int n = ctx.count(25);
  std::mt19937_64 rng = ctx.rng(13);
  double worst = 0.0;
  int monotone = 0, continuity_cases = 0;
  for (int i = 0; i < n; ++i) {
    const Tetra t = random_tetra(rng, kConditioning);
    const Surface s = Surface::from_tetra(t);
    ctx.record(s);
    const StarUnfolding su = star_unfold(s, generic_point(s, rng), TiePolicy::Reject);
    const GluedPolygon g = star_polygon(su);
    const FoldResult f = fold(g);
    if (f.surface) ctx.record(*f.surface);
    const double d = class_distance(canonicalize(f.lengths), canonicalize(t));
    worst = std::max(worst, d);
    if (d > 1e-7) out.fail("class distance " + std::to_string(d) + ", case " + std::to_string(i));

    if (i >= ctx.count(10)) continue;
    ++continuity_cases;
    std::vector<Vec2> dirs;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      const Vec3 r = random_in_unit_ball(rng);
      dirs.push_back({r.x, r.y});
    }
    std::vector<double> response;
    try {
      for (double delta : {1e-3, 1e-4, 1e-5}) {
        const FoldResult fp = fold(perturbed_star(g, dirs, delta));
        if (fp.surface) ctx.record(*fp.surface);
        response.push_back(class_distance(canonicalize(fp.lengths), canonicalize(f.lengths)));
      }
    } catch (const GeometryError& e) {
      out.fail("perturbed fold, case " + std::to_string(i) + ": " + e.what());
      continue;
    }
    if (response[0] > response[1] && response[1] > response[2]) {
      ++monotone;
    } else {
      std::ostringstream msg;
      msg << "response not decreasing, case " << i << ": " << response[0] << ", " << response[1] << ", "
          << response[2];
      out.fail(msg.str());
    }
  }
  out.detail << n << " round trips, worst class distance " << worst << "; " << monotone << "/" << continuity_cases
             << " perturbation responses decreasing";
}

void m5(Context& ctx, Outcome& out) {
  M5Options o;
  o.workers = ctx.options.workers;
  o.seed = ctx.options.seed;
  const M5Result r = m5_candidate(o);
  if (r.example) ctx.record(*r.example->surface);
  if (r.success) {
    out.detail << "found #M = 5 at beta " << r.beta << ", g " << r.g << ", h " << r.h
               << "; perturbation retained: " << (r.perturbation_retained ? "yes" : "no");
  } else {
    out.detail << "no #M = 5 candidate (best #M " << r.best_m << "): " << r.reason;
  }
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s  %02d %-20s ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str());
  char tail[32];
  std::snprintf(tail, sizeof tail, "  (%.2f s)", r.seconds);
  return head + r.detail + tail;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  Context ctx(options);
  using Fn = void (*)(Context&, Outcome&);
  const std::vector<std::tuple<int, const char*, Fn>> criteria = {
      {1, "geodesic-oracle", geodesic_oracle},
      {2, "metric-axioms", metric_axioms},
      {3, "star-unfolding", star_unfolding},
      {4, "source-unfolding", source_unfolding},
      {5, "cut-locus-structure", cut_locus_structure},
      {6, "global-bounds", global_bounds},
      {7, "isosceles", isosceles_family},
      {8, "hexagon-double", hexagon},
      {9, "rectangle-double", rectangle},
      {10, "thin-family", thin_family},
      {11, "f3-family", f3_family_check},
      {12, "antipode-search", antipode_search},
      {13, "fold-round-trip", fold_round_trip},
      {15, "m5-candidate", m5},
  };
  auto wanted = [&](int id) {
    return options.only.empty() || std::find(options.only.begin(), options.only.end(), id) != options.only.end();
  };
  std::vector<CriterionResult> results;
  for (const auto& [id, name, fn] : criteria) {
    if (!wanted(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      fn(ctx, out);
    } catch (const std::exception& e) {
      out.fail(std::string("unexpected exception: ") + e.what());
    }
    CriterionResult r{id, name, out.passed, out.detail.str(), ms_since(start) / 1000.0};
    if (on_result) on_result(r);
    results.push_back(r);
  }
  if (wanted(14)) {
    if (ctx.surfaces() == 0) ctx.record(Surface::from_tetra(random_tetra(options.seed, kConditioning)));
    const double worst = ctx.worst_gauss_bonnet();
    std::ostringstream detail;
    detail << ctx.surfaces() << " surfaces, worst |total curvature - 4 pi| " << worst;
    CriterionResult r{14, "gauss-bonnet", ctx.surfaces() > 0 && worst <= 1e-12, detail.str(), 0.0};
    if (on_result) on_result(r);
    results.push_back(r);
  }
  return results;
}

}  // namespace tetramax
