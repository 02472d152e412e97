#include "tetramax/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "tetramax/error.hpp"
#include "tetramax/geodesic.hpp"
#include "tetramax/polygon.hpp"

namespace tetramax {
namespace {

constexpr double kLengthTol = 1e-10;
constexpr double kAngleExcessTol = 1e-10;

double interior_angle(const std::vector<Vec2>& v, int k) {
  const int n = static_cast<int>(v.size());
  const Vec2 p = v[k], next = v[(k + 1) % n], prev = v[(k + n - 1) % n];
  const Vec2 a = next - p, b = prev - p;
  return wrap_angle(std::atan2(cross(a, b), dot(a, b)));
}

int find(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

}  // namespace

GluingReport validate_gluing(const GluedPolygon& g, bool require_four_cones) {
  const int n = static_cast<int>(g.vertices.size());
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "polygon needs at least three vertices");
  if (!(signed_area(g.vertices) > 0)) throw GeometryError(ErrorCode::InvalidArgument, "polygon must be counter-clockwise");
  if (!is_simple(g.vertices)) throw GeometryError(ErrorCode::InvalidArgument, "polygon must be simple");

  std::vector<int> uses(n, 0);
  for (const Pairing& p : g.pairings) {
    if (p.i < 0 || p.i >= n || p.j < 0 || p.j >= n) throw GeometryError(ErrorCode::InvalidArgument, "side index out of range");
    if (p.orient != -1) throw GeometryError(ErrorCode::NotASphere, "sides glued with parallel orientation");
    if (p.i == p.j) throw GeometryError(ErrorCode::NotASphere, "a side cannot be glued to itself");
    ++uses[p.i];
    ++uses[p.j];
    const double li = dist(g.vertices[p.i], g.vertices[(p.i + 1) % n]);
    const double lj = dist(g.vertices[p.j], g.vertices[(p.j + 1) % n]);
    if (std::abs(li - lj) > kLengthTol * std::max(li, lj)) {
      std::ostringstream msg;
      msg << "sides " << p.i << " and " << p.j << " have lengths " << li << " and " << lj;
      throw GeometryError(ErrorCode::LengthMismatch, msg.str());
    }
  }
  for (int k = 0; k < n; ++k) {
    if (uses[k] != 1) throw GeometryError(ErrorCode::NotASphere, "every side must be paired exactly once");
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Pairing& p : g.pairings) {
    parent[find(parent, p.i)] = find(parent, (p.j + 1) % n);
    parent[find(parent, (p.i + 1) % n)] = find(parent, p.j);
  }
  GluingReport r;
  r.vertex_class.assign(n, -1);
  std::map<int, int> root_to_class;
  for (int k = 0; k < n; ++k) {
    const int root = find(parent, k);
    auto it = root_to_class.find(root);
    if (it == root_to_class.end()) {
      it = root_to_class.emplace(root, static_cast<int>(r.classes.size())).first;
      r.classes.emplace_back();
    }
    r.vertex_class[k] = it->second;
    r.classes[it->second].corners.push_back(k);
    r.classes[it->second].angle += interior_angle(g.vertices, k);
  }
  if (static_cast<int>(r.classes.size()) != static_cast<int>(g.pairings.size()) + 1) {
    throw GeometryError(ErrorCode::NotASphere, "gluing does not produce a sphere");
  }
  for (int c = 0; c < static_cast<int>(r.classes.size()); ++c) {
    const GluedPoint& pt = r.classes[c];
    if (pt.angle > kTwoPi + kAngleExcessTol) {
      std::ostringstream msg;
      msg << "glued angle " << pt.angle << " exceeds 2 pi at vertex " << pt.corners.front();
      throw GeometryError(ErrorCode::AngleExcess, msg.str());
    }
    r.total_curvature += pt.curvature();
    if (pt.is_cone()) r.cones.push_back(c);
  }
  if (require_four_cones && r.cones.size() != 4) {
    std::ostringstream msg;
    msg << "gluing has " << r.cones.size() << " cone points, expected 4";
    throw GeometryError(ErrorCode::WrongConeCount, msg.str());
  }
  return r;
}

Surface glued_surface(const GluedPolygon& g) {
  const GluingReport report = validate_gluing(g, false);
  const int n = static_cast<int>(g.vertices.size());
  const auto tris = ear_clip(g.vertices);
  std::vector<Face> faces;
  std::map<std::pair<int, int>, SideRef> directed;  // polygon vertex pair -> triangle side
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    Face f;
    for (int k = 0; k < 3; ++k) {
      f.chart.push_back(g.vertices[tris[t][k]]);
      f.vertex.push_back(report.vertex_class[tris[t][k]]);
      directed[{tris[t][k], tris[t][(k + 1) % 3]}] = {t, k};
    }
    faces.push_back(f);
  }
  std::vector<std::vector<SideRef>> twin(faces.size(), std::vector<SideRef>(3));
  for (const auto& [key, ref] : directed) {
    auto it = directed.find({key.second, key.first});
    if (it != directed.end()) twin[ref.face][ref.side] = it->second;
  }
  for (const Pairing& p : g.pairings) {
    const SideRef a = directed.at({p.i, (p.i + 1) % n});
    const SideRef b = directed.at({p.j, (p.j + 1) % n});
    twin[a.face][a.side] = b;
    twin[b.face][b.side] = a;
  }
  return Surface::assemble(SurfaceKind::Glued, std::move(faces), std::move(twin));
}

SurfacePoint polygon_point(const Surface& glued, Vec2 p) {
  const double tol = 1e-12 * glued.scale();
  for (int f = 0; f < glued.face_count(); ++f) {
    const Face& face = glued.face(f);
    bool inside = true;
    for (int k = 0; k < face.sides() && inside; ++k) {
      const Vec2 a = face.corner(k), b = face.corner(k + 1);
      if (cross(b - a, p - a) / dist(a, b) < -tol) inside = false;
    }
    if (inside) return {f, p};
  }
  throw GeometryError(ErrorCode::InvalidArgument, "point lies outside the polygon");
}

double portal_distance(const Surface& glued, Vec2 p, Vec2 q) {
  return shortest_distance(glued, polygon_point(glued, p), polygon_point(glued, q));
}

double portal_distance(const GluedPolygon& g, Vec2 p, Vec2 q) {
  return portal_distance(glued_surface(g), p, q);
}

FoldResult fold(const GluedPolygon& g) {
  FoldResult r;
  r.report = validate_gluing(g, true);
  const Surface glued = glued_surface(g);
  for (int k = 0; k < 4; ++k) r.cone_class[k] = r.report.cones[k];
  for (int e = 0; e < 6; ++e) {
    const int a = r.cone_class[kEdgeVertices[e][0]], b = r.cone_class[kEdgeVertices[e][1]];
    r.lengths[e] = shortest_distance(glued, glued.vertex_point(a), glued.vertex_point(b));
  }
  r.shape = cayley_menger_embed(r.lengths);
  if (const Tetra* t = std::get_if<Tetra>(&r.shape)) {
    r.surface = Surface::from_tetra(*t);
    r.label_vertex = {0, 1, 2, 3};
  } else {
    const FlatDouble& flat = std::get<FlatDouble>(r.shape);
    if (flat.is_quadrilateral()) {
      r.surface = Surface::double_of(flat.polygon());
      for (int pos = 0; pos < 4; ++pos) r.label_vertex[flat.hull[pos]] = pos;
    }
  }
  return r;
}

SurfacePoint transfer_to_fold(const Surface& glued, const FoldResult& f, const SurfacePoint& p) {
  if (!f.surface) throw GeometryError(ErrorCode::InvalidArgument, "folded shape has no surface");
  const Surface& target = *f.surface;
  const SurfacePoint v0 = glued.vertex_point(f.cone_class[0]);
  const SurfacePoint w0 = target.vertex_point(f.label_vertex[0]);
  if (glued.same_point(v0, p, 1e-12 * glued.scale())) return w0;
  const double theta = glued.angle_at_cone_point(f.cone_class[0]);

  const GeodesicSegment seg = shortest_path(glued, v0, p);
  const double a1 = shortest_path(glued, v0, glued.vertex_point(f.cone_class[1])).source_angle;
  const double a2 = shortest_path(glued, v0, glued.vertex_point(f.cone_class[2])).source_angle;
  const double b1 = shortest_path(target, w0, target.vertex_point(f.label_vertex[1])).source_angle;
  const double b2 = shortest_path(target, w0, target.vertex_point(f.label_vertex[2])).source_angle;
  const double rel_g = wrap_angle(a2 - a1, theta);
  const double rel_f = wrap_angle(b2 - b1, theta);
  const double sigma = std::abs(rel_g - rel_f) <= std::abs(rel_g - (theta - rel_f)) ? 1.0 : -1.0;
  const double beta = wrap_angle(b1 + sigma * (seg.source_angle - a1), theta);
  return target.trace(w0, beta, seg.length);
}

GluedPolygon star_polygon(const StarUnfolding& su) {
  GluedPolygon g;
  g.vertices = su.boundary;
  for (int k = 0; k < su.size(); ++k) g.pairings.push_back({2 * k, 2 * k + 1, -1});
  return g;
}

GluedPolygon double_as_polygon(const std::vector<Vec2>& convex) {
  std::vector<Vec2> k = convex;
  if (signed_area(k) < 0) std::reverse(k.begin(), k.end());
  const int n = static_cast<int>(k.size());
  if (n < 3) throw GeometryError(ErrorCode::NonConvexPolygon, "polygon needs at least three vertices");
  const Vec2 a = k[n - 1], e = normalized(k[0] - k[n - 1]);
  auto mirror = [&](Vec2 p) {
    const Vec2 rel = p - a;
    return a + e * dot(rel, e) - perp(e) * cross(e, rel);
  };
  GluedPolygon g;
  g.vertices = k;
  for (int m = n - 2; m >= 1; --m) g.vertices.push_back(mirror(k[m]));
  for (int i = 0; i <= n - 2; ++i) g.pairings.push_back({i, 2 * n - 3 - i, -1});
  return g;
}

}  // namespace tetramax
