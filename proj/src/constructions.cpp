#include "tetramax/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "tetramax/error.hpp"
#include "tetramax/extrema.hpp"
#include "tetramax/parallel.hpp"
#include "tetramax/polygon.hpp"

namespace tetramax {
namespace {

constexpr double kBisectTol = 1e-12;

[[noreturn]] void out_of_range(const std::string& what) {
  throw GeometryError(ErrorCode::ParamOutOfRange, what);
}

// Interior angle at p of a counter-clockwise polygon with neighbours prev, next.
double interior(Vec2 prev, Vec2 p, Vec2 next) {
  return wrap_angle(angle_of(prev - p) - angle_of(next - p), kTwoPi);
}

// Root of a decreasing-then-crossing function on [lo, hi] with f(lo), f(hi)
// of opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi, const char* what) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    std::ostringstream msg;
    msg << what << ": no sign change on [" << lo << ", " << hi << "] (f = " << flo << ", " << fhi << ")";
    throw GeometryError(ErrorCode::SolveFailed, msg.str());
  }
  for (int it = 0; it < 200 && hi - lo > kBisectTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Point on the bisector ray of chord pq (both on the unit circle) that cuts a
// notch of total angle `removed` from the two chord ends.
Vec2 notch_point(Vec2 p, Vec2 q, double removed, const char* what) {
  const Vec2 dir = normalized(p + q);
  const double chord_r = norm(p + q) / 2;
  auto loss = [&](double r) {
    const Vec2 v = dir * r;
    const double base = std::acos(std::clamp(dot(normalized(q - p), normalized(v - p)), -1.0, 1.0));
    return 2 * base - removed;
  };
  return dir * bisect(loss, 0.0, chord_r, what);
}

Example from_glued(std::string kind, GluedPolygon g, Vec2 px) {
  Example ex;
  ex.kind = std::move(kind);
  ex.folded = fold(g);
  if (!ex.folded->surface) {
    throw GeometryError(ErrorCode::Internal, "folded shape has no surface");
  }
  ex.surface = *ex.folded->surface;
  const Surface glued = glued_surface(g);
  ex.x = transfer_to_fold(glued, *ex.folded, polygon_point(glued, px));
  ex.polygon = std::move(g);
  ex.polygon_x = px;
  return ex;
}

std::vector<std::string> default_names(const Surface& s) {
  std::vector<std::string> names(s.vertices().size());
  for (int v : s.cone_points()) names[v] = "v" + std::to_string(v + 1);
  return names;
}

// Barycentric transport of a point between two charts of the same triangle.
SurfacePoint same_barycentric(const Surface& from, const Surface& to, const SurfacePoint& p) {
  const Face& a = from.face(p.face);
  const Face& b = to.face(p.face);
  const Vec2 e1 = a.chart[1] - a.chart[0], e2 = a.chart[2] - a.chart[0], r = p.coords - a.chart[0];
  const double det = cross(e1, e2);
  const double l1 = cross(r, e2) / det, l2 = cross(e1, r) / det;
  return {p.face, b.chart[0] + (b.chart[1] - b.chart[0]) * l1 + (b.chart[2] - b.chart[0]) * l2};
}

}  // namespace

Example rectangle_double(double a, double b) {
  if (!(a > 0 && b > 0)) out_of_range("rectangle sides must be positive");
  if (std::abs(a - b) <= 1e-12 * std::max(a, b)) out_of_range("rectangle must not be a square");
  Example ex;
  ex.kind = "rectangle_double";
  ex.surface = Surface::double_of({{-a / 2, -b / 2}, {a / 2, -b / 2}, {a / 2, b / 2}, {-a / 2, b / 2}});
  ex.x = SurfacePoint{0, {0, 0}};
  ex.vertex_names = default_names(*ex.surface);
  return ex;
}

Example hexagon_double() {
  const double s = std::sqrt(3.0) / 2;
  Example ex;
  ex.kind = "hexagon_double";
  ex.surface = Surface::double_of({{1, 0}, {0.5, s}, {-0.5, s}, {-1, 0}});
  ex.x = ex.surface->canonical({0, {0, 0}});
  ex.vertex_names = default_names(*ex.surface);
  return ex;
}

double thin_tetra_max_eps() { return 0.5 * std::sin(kPi / 16); }

Example thin_tetra(double eps, double h) {
  if (!(eps > 0) || eps > thin_tetra_max_eps() * (1 + 1e-12)) {
    out_of_range("thin tetrahedron needs 0 < eps <= sin(pi/16)/2");
  }
  if (std::abs(std::cos(h)) < 1e-9) out_of_range("c and d coincide when cos h = 0");
  Example ex;
  ex.kind = "thin_tetra";
  const Vec3 a{0, 0, 0}, b{1, 0, 0};
  const Vec3 c{0.5, eps * std::cos(h), eps * std::sin(h)}, d{0.5, -eps * std::cos(h), eps * std::sin(h)};
  try {
    ex.surface = Surface::from_tetra(Tetra::from_vertices(a, b, c, d));
    ex.vertex_names = {"a", "b", "c", "d"};
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::DegenerateInput) throw;
    // Coplanar: the double of the rhombus a d b c.
    const double y = eps * std::abs(std::cos(h));
    ex.surface = Surface::double_of({{0, 0}, {0.5, -y}, {1, 0}, {0.5, y}});
    ex.vertex_names = {"a", "d", "b", "c"};
  }
  return ex;
}

Example isosceles(Vec2 a, Vec2 b, Vec2 c) {
  if (cross(b - a, c - a) < 0) std::swap(b, c);
  const Vec2 p[3] = {a, b, c};
  for (int k = 0; k < 3; ++k) {
    if (interior(p[(k + 2) % 3], p[k], p[(k + 1) % 3]) >= kPi / 2) out_of_range("triangle must be acute");
  }
  GluedPolygon g;
  g.vertices = {a, (a + b) / 2, b, (b + c) / 2, c, (c + a) / 2};
  g.pairings = {{0, 1, -1}, {2, 3, -1}, {4, 5, -1}};
  Example ex = from_glued("isosceles", g, (a + b + c) / 3);
  ex.vertex_names = default_names(*ex.surface);
  return ex;
}

double F3Instance::max_residual() const {
  double m = 0.0;
  for (double r : notch_residuals) m = std::max(m, std::abs(r));
  for (double r : side_residuals) m = std::max(m, std::abs(r));
  for (double r : angle_residuals) m = std::max(m, std::abs(r));
  return m;
}

F3Instance f3_family(const std::array<double, 4>& delta, double t) {
  if (!(t > 0 && t < 1)) out_of_range("t must lie in (0, 1)");
  const double cw = kPi / 6 + delta[0];
  const double cu = 4 * kPi / 6 + delta[1];
  const double cu1 = 5 * kPi / 6 + delta[2];
  const double cu2 = 13 * kPi / 12 + delta[3];
  const double cw2 = kTwoPi - cw;
  const double cw1 = cu2 + (cu - cw);
  const double order[] = {0.0, cw, cu, cu1, cu2, cw1, cw2, kTwoPi};
  for (int k = 0; k + 1 < 8; ++k) {
    if (!(order[k] < order[k + 1])) out_of_range("circular coordinates out of order");
  }
  const Vec2 v1 = unit(0.0), w = unit(cw), u = unit(cu), u1 = unit(cu1), u2 = unit(cu2), w1 = unit(cw1),
             w2 = unit(cw2);

  F3Instance out;
  out.delta = delta;
  out.t = t;
  out.excess_w = interior(v1, w, u) + interior(u2, w1, w2) + interior(w1, w2, v1) - kTwoPi;
  out.excess_u = interior(w, u, u1) + interior(u, u1, u2) + interior(u1, u2, w1) - kTwoPi;
  if (!(out.excess_w > 0) || !(out.excess_u > 0)) {
    std::ostringstream msg;
    msg << "angle sums do not exceed 2 pi (excess " << out.excess_w << ", " << out.excess_u << ")";
    throw GeometryError(ErrorCode::SolveFailed, msg.str());
  }
  const Vec2 v2 = notch_point(w1, w2, out.excess_w, "v2");
  const Vec2 v4 = notch_point(u, u1, t * out.excess_u, "v4");
  const Vec2 v3 = notch_point(u1, u2, (1 - t) * out.excess_u, "v3");

  GluedPolygon g;
  g.vertices = {v1, w, u, v4, u1, v3, u2, w1, v2, w2};
  g.pairings = {{0, 9, -1}, {1, 6, -1}, {2, 3, -1}, {4, 5, -1}, {7, 8, -1}};
  out.notch_residuals = {dist(u, v4) - dist(u1, v4), dist(u1, v3) - dist(u2, v3), dist(w1, v2) - dist(w2, v2)};
  out.side_residuals = {dist(v1, w) - dist(w2, v1), dist(w, u) - dist(u2, w1)};
  out.angle_residuals = {interior(v1, w, u) + interior(u2, w1, v2) + interior(v2, w2, v1) - kTwoPi,
                         interior(w, u, v4) + interior(v4, u1, v3) + interior(v3, u2, w1) - kTwoPi};

  out.example = from_glued("f3_family", g, {0, 0});
  const FoldResult& f = *out.example.folded;
  std::map<int, std::string> corner_name = {{f3::v1, "v1"}, {f3::v2, "v2"}, {f3::v3, "v3"}, {f3::v4, "v4"}};
  out.example.vertex_names.assign(out.example.surface->vertices().size(), "");
  const std::array<int, 4> corner_of = {f3::v1, f3::v2, f3::v3, f3::v4};
  for (int k = 0; k < 4; ++k) {
    const int cls = f.cone_class[k];
    const int vid = f.label_vertex[k];
    for (int named = 0; named < 4; ++named) {
      if (f.report.vertex_class[corner_of[named]] == cls) {
        out.vertex_ids[named] = vid;
        out.example.vertex_names[vid] = corner_name[corner_of[named]];
      }
    }
  }
  return out;
}

std::optional<GluedPolygon> m5_polygon(double beta, double g, double* h_out) {
  if (!(beta > 0 && beta < kPi) || !(g > 0)) return std::nullopt;
  const std::vector<double> phi = {0.0, beta, kPi, kTwoPi - beta};
  const std::vector<double> angles = {7 * kPi / 8, 3 * kPi / 4, 13 * kPi / 8, 3 * kPi / 4};
  auto walk = [&](double h) { return develop_star(phi, {1.0, g, h, g}, angles); };
  // The closing gap is affine in h.
  const StarWalk at1 = walk(1.0), at2 = walk(2.0);
  const Vec2 slope = at2.source_gap - at1.source_gap;
  if (norm(slope) < 1e-12) return std::nullopt;
  const double h = 1.0 - dot(at1.source_gap, slope) / dot(slope, slope);
  if (!(h > 1e-6)) return std::nullopt;
  const StarWalk w = walk(h);
  const double tol = 1e-9 * std::max({1.0, g, h});
  if (norm(w.source_gap) > tol || norm(w.vertex_gap) > tol) return std::nullopt;
  if (!is_simple(w.su.boundary) || signed_area(w.su.boundary) <= 0) return std::nullopt;
  if (h_out) *h_out = h;
  return star_polygon(w.su);
}

M5Result m5_candidate(const M5Options& options) {
  M5Result res;
  const int nb = std::max(1, options.beta_steps), ng = std::max(1, options.g_steps);
  res.candidates = nb * ng;
  res.m_histogram.assign(7, 0);

  struct Trial {
    bool closed = false;
    bool foldable = false;
    int m = -1;
    double margin = 0.0;
    double beta = 0.0, g = 0.0, h = 0.0;
  };
  std::vector<Trial> trials(res.candidates);
  auto param = [](double lo, double hi, int i, int n) { return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1); };
  parallel_for(res.candidates, worker_count(options.workers), [&](int idx) {
    Trial& tr = trials[idx];
    tr.beta = param(options.beta_min, options.beta_max, idx / ng, nb);
    tr.g = param(options.g_min, options.g_max, idx % ng, ng);
    const auto poly = m5_polygon(tr.beta, tr.g, &tr.h);
    if (!poly) return;
    tr.closed = true;
    try {
      const Example ex = from_glued("m5_candidate", *poly, poly->vertices[0]);
      if (ex.surface->kind() != SurfaceKind::Tetra) return;
      tr.foldable = true;
      const ExtremumCensus c = census(*ex.surface, *ex.x);
      tr.m = static_cast<int>(c.M.size());
      tr.margin = c.min_margin;
    } catch (const GeometryError&) {
    }
  });

  int best = -1;
  for (int i = 0; i < res.candidates; ++i) {
    const Trial& tr = trials[i];
    res.closed += tr.closed;
    res.foldable += tr.foldable;
    if (tr.m >= 0) ++res.m_histogram[std::min(tr.m, 6)];
    if (tr.m >= 0 && (best < 0 || tr.m > trials[best].m ||
                      (tr.m == trials[best].m && tr.margin > trials[best].margin))) {
      best = i;
    }
  }
  if (best < 0) {
    res.reason = "no candidate closed and folded to a tetrahedron";
    return res;
  }
  const Trial& tr = trials[best];
  res.best_m = tr.m;
  res.best_margin = tr.margin;
  res.beta = tr.beta;
  res.g = tr.g;
  res.h = tr.h;
  const GluedPolygon poly = *m5_polygon(tr.beta, tr.g);
  res.example = from_glued("m5_candidate", poly, poly.vertices[0]);
  res.example->vertex_names = default_names(*res.example->surface);
  if (tr.m != 5) {
    std::ostringstream msg;
    msg << "largest local-maximum count found is " << tr.m << " over " << res.foldable << " folded candidates";
    res.reason = msg.str();
    return res;
  }
  res.success = true;
  res.perturbation_checked = true;
  const Surface& s = *res.example->surface;
  const Tetra& t = *s.tetra();
  std::mt19937_64 rng(options.seed);
  std::array<Vec3, 4> p;
  for (int k = 0; k < 4; ++k) p[k] = t.vertex(k) + random_in_unit_ball(rng) * options.perturbation;
  try {
    const Surface moved = Surface::from_tetra(Tetra::from_vertices(p[0], p[1], p[2], p[3]));
    const ExtremumCensus c = census(moved, same_barycentric(s, moved, *res.example->x));
    res.perturbation_retained = c.M.size() == 5;
  } catch (const GeometryError& e) {
    res.reason = std::string("perturbed census failed: ") + e.what();
  }
  return res;
}

std::vector<std::string> construction_kinds() {
  return {"rectangle_double", "hexagon_double", "thin_tetra", "isosceles", "f3_family", "m5_candidate"};
}

Example construct(const std::string& kind, const std::vector<double>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      std::ostringstream msg;
      msg << kind << " takes " << n << " parameters, got " << params.size();
      throw GeometryError(ErrorCode::InvalidArgument, msg.str());
    }
  };
  if (kind == "rectangle_double") {
    if (params.empty()) return rectangle_double(2.0, 1.0);
    need(2);
    return rectangle_double(params[0], params[1]);
  }
  if (kind == "hexagon_double") {
    need(0);
    return hexagon_double();
  }
  if (kind == "thin_tetra") {
    if (params.empty()) return thin_tetra(0.09, 0.0);
    need(2);
    return thin_tetra(params[0], params[1]);
  }
  if (kind == "isosceles") {
    if (params.empty()) return isosceles({0, 0}, {4, 0}, {1.5, 3});
    need(6);
    return isosceles({params[0], params[1]}, {params[2], params[3]}, {params[4], params[5]});
  }
  if (kind == "f3_family") {
    if (params.empty()) return f3_family({0, 0, 0, 0}, 0.5).example;
    need(5);
    return f3_family({params[0], params[1], params[2], params[3]}, params[4]).example;
  }
  if (kind == "m5_candidate") {
    need(0);
    M5Result r = m5_candidate();
    if (!r.success || !r.example) throw GeometryError(ErrorCode::SolveFailed, r.reason);
    return *r.example;
  }
  throw GeometryError(ErrorCode::InvalidArgument, "unknown construction kind: " + kind);
}

}  // namespace tetramax
