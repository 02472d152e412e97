#include "tetramax/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tetramax/error.hpp"

namespace tetramax {
namespace {

constexpr double kOnBoundaryTol = 1e-11;  // relative to scale
constexpr double kOutsideTol = 1e-9;      // relative to scale

/// CCW angle from a to b in [0, 2 pi).
double ccw_angle(Vec2 a, Vec2 b) { return wrap_angle(std::atan2(cross(a, b), dot(a, b))); }

double polygon_signed_area(const std::vector<Vec2>& p) {
  double a = 0.0;
  for (size_t i = 0; i < p.size(); ++i) a += cross(p[i], p[(i + 1) % p.size()]);
  return 0.5 * a;
}

}  // namespace

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Tetra: return "tetra";
    case SurfaceKind::Double: return "double";
    case SurfaceKind::Glued: return "glued";
  }
  return "unknown";
}

double Face::area() const { return polygon_signed_area(chart); }

double Face::corner_angle(int k) const {
  const Vec2 v = corner(k);
  return ccw_angle(corner(k + 1) - v, corner(k - 1) - v);
}

Surface Surface::from_tetra(const Tetra& t) {
  Surface s;
  s.kind_ = SurfaceKind::Tetra;
  s.tetra_ = t;
  for (const auto& f : t.faces()) {
    const Vec3 p0 = t.vertex(f[0]), p1 = t.vertex(f[1]), p2 = t.vertex(f[2]);
    const Vec3 ex = (p1 - p0) / norm(p1 - p0);
    Vec3 ey = (p2 - p0) - ex * dot(p2 - p0, ex);
    ey = ey / norm(ey);
    Face face;
    face.chart = {{0.0, 0.0}, {norm(p1 - p0), 0.0}, {dot(p2 - p0, ex), dot(p2 - p0, ey)}};
    face.vertex = {f[0], f[1], f[2]};
    s.faces_.push_back(face);
    s.frames_.push_back({p0, ex, ey});
  }
  s.twin_.assign(4, std::vector<SideRef>(3));
  for (int f = 0; f < 4; ++f) {
    for (int k = 0; k < 3; ++k) {
      const int a = s.faces_[f].vertex[k], b = s.faces_[f].vertex[(k + 1) % 3];
      for (int g = 0; g < 4; ++g) {
        if (g == f) continue;
        for (int j = 0; j < 3; ++j) {
          if (s.faces_[g].vertex[j] == b && s.faces_[g].vertex[(j + 1) % 3] == a) s.twin_[f][k] = {g, j};
        }
      }
    }
  }
  s.finalize();
  return s;
}

Surface Surface::double_of(const std::vector<Vec2>& polygon_in) {
  const int n = static_cast<int>(polygon_in.size());
  if (n < 3) throw GeometryError(ErrorCode::NonConvexPolygon, "polygon needs at least 3 vertices");
  std::vector<Vec2> poly = polygon_in;
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  if (polygon_signed_area(poly) < 0) {
    std::reverse(poly.begin(), poly.end());
    std::reverse(ids.begin(), ids.end());
  }
  double longest = 0.0;
  for (int i = 0; i < n; ++i) longest = std::max(longest, dist(poly[i], poly[(i + 1) % n]));
  for (int i = 0; i < n; ++i) {
    const Vec2 a = poly[(i + n - 1) % n], b = poly[i], c = poly[(i + 1) % n];
    if (!(cross(b - a, c - b) > 1e-12 * longest * longest)) {
      throw GeometryError(ErrorCode::NonConvexPolygon, "polygon is not strictly convex");
    }
  }
  Surface s;
  s.kind_ = SurfaceKind::Double;
  s.polygon_ = polygon_in;
  Face top;
  top.chart = poly;
  top.vertex = ids;
  Face bottom;
  for (int j = 0; j < n; ++j) {
    const int i = (n - j) % n;
    bottom.chart.push_back({poly[i].x, -poly[i].y});
    bottom.vertex.push_back(ids[i]);
  }
  s.faces_ = {top, bottom};
  s.twin_.assign(2, std::vector<SideRef>(n));
  for (int i = 0; i < n; ++i) {
    // top side i: v_i -> v_{i+1}; bottom side j runs v_{n-j} -> v_{n-j-1}.
    const int j = (n - i - 1) % n;
    s.twin_[0][i] = {1, j};
    s.twin_[1][j] = {0, i};
  }
  s.finalize();
  return s;
}

Surface Surface::assemble(SurfaceKind kind, std::vector<Face> faces,
                          std::vector<std::vector<SideRef>> twin) {
  Surface s;
  s.kind_ = kind;
  s.faces_ = std::move(faces);
  s.twin_ = std::move(twin);
  if (s.twin_.size() != s.faces_.size()) {
    throw GeometryError(ErrorCode::InvalidArgument, "twin table does not match faces");
  }
  for (int f = 0; f < s.face_count(); ++f) {
    const Face& face = s.faces_[f];
    if (face.sides() < 3 || static_cast<int>(face.vertex.size()) != face.sides() ||
        static_cast<int>(s.twin_[f].size()) != face.sides()) {
      throw GeometryError(ErrorCode::InvalidArgument, "malformed face");
    }
    for (int k = 0; k < face.sides(); ++k) {
      const SideRef t = s.twin_[f][k];
      if (t.face < 0 || t.face >= s.face_count() || t.side < 0 || t.side >= s.faces_[t.face].sides()) {
        throw GeometryError(ErrorCode::NotASphere, "side without a gluing partner");
      }
      const SideRef back = s.twin_[t.face][t.side];
      if (back.face != f || back.side != k) {
        throw GeometryError(ErrorCode::NotASphere, "side gluing is not symmetric");
      }
    }
  }
  s.finalize();
  return s;
}

void Surface::finalize() {
  scale_ = 0.0;
  int max_vid = -1;
  for (const Face& f : faces_) {
    for (int k = 0; k < f.sides(); ++k) {
      scale_ = std::max(scale_, dist(f.corner(k), f.corner(k + 1)));
      max_vid = std::max(max_vid, f.vertex[k]);
    }
  }
  unfold_.assign(faces_.size(), {});
  for (int f = 0; f < face_count(); ++f) {
    const Face& face = faces_[f];
    unfold_[f].resize(face.sides());
    for (int k = 0; k < face.sides(); ++k) {
      const SideRef t = twin_[f][k];
      const Face& other = faces_[t.face];
      const Vec2 a = face.corner(k), b = face.corner(k + 1);
      const Vec2 ga = other.corner(t.side), gb = other.corner(t.side + 1);
      const double len_f = dist(a, b), len_g = dist(ga, gb);
      if (std::abs(len_f - len_g) > 1e-9 * std::max(len_f, len_g)) {
        throw GeometryError(ErrorCode::LengthMismatch, "glued sides have different lengths");
      }
      // other side runs ga -> gb and maps onto b -> a.
      const double rot = angle_of(a - b) - angle_of(gb - ga);
      Iso2 u = Iso2::rotation(rot);
      u.t = (a + b) * 0.5 - u.rotate((ga + gb) * 0.5);
      unfold_[f][k] = u;
    }
  }
  // Walk corners around each vertex.
  vertices_.assign(max_vid + 1, {});
  std::vector<std::vector<char>> seen(faces_.size());
  for (int f = 0; f < face_count(); ++f) seen[f].assign(faces_[f].sides(), 0);
  for (int f = 0; f < face_count(); ++f) {
    for (int k = 0; k < faces_[f].sides(); ++k) {
      if (seen[f][k]) continue;
      const int vid = faces_[f].vertex[k];
      if (!vertices_[vid].corners.empty()) {
        throw GeometryError(ErrorCode::NotASphere, "vertex neighbourhood is not a disk");
      }
      int cf = f, ck = k;
      double offset = 0.0;
      int guard = 0;
      do {
        if (faces_[cf].vertex[ck] != vid) throw GeometryError(ErrorCode::NotASphere, "inconsistent vertex ids");
        seen[cf][ck] = 1;
        vertices_[vid].corners.push_back({cf, ck, offset});
        offset += faces_[cf].corner_angle(ck);
        const int n = faces_[cf].sides();
        const SideRef t = twin_[cf][(ck + n - 1) % n];
        cf = t.face;
        ck = t.side;
        if (++guard > 10000) throw GeometryError(ErrorCode::NotASphere, "corner cycle does not close");
      } while (cf != f || ck != k);
      vertices_[vid].angle = offset;
    }
  }
  cones_.clear();
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    if (vertices_[v].corners.empty()) throw GeometryError(ErrorCode::InvalidArgument, "unused vertex id");
    if (vertices_[v].is_cone()) cones_.push_back(v);
  }
}

double Surface::total_curvature() const {
  double sum = 0.0;
  for (const auto& v : vertices_) sum += v.curvature();
  return sum;
}

double Surface::area() const {
  double a = 0.0;
  for (const Face& f : faces_) a += f.area();
  return a;
}

int Surface::euler_characteristic() const {
  int sides = 0;
  for (const Face& f : faces_) sides += f.sides();
  return static_cast<int>(vertices_.size()) - sides / 2 + face_count();
}

SurfacePoint Surface::vertex_point(int vertex_id) const {
  const auto& corners = vertices_.at(vertex_id).corners;
  const Corner* best = &corners.front();
  for (const Corner& c : corners) {
    if (c.face < best->face) best = &c;
  }
  return {best->face, faces_[best->face].corner(best->index)};
}

Located Surface::locate(const SurfacePoint& p) const {
  if (p.face < 0 || p.face >= face_count()) throw GeometryError(ErrorCode::InvalidArgument, "face id out of range");
  const Face& face = faces_[p.face];
  const double on_tol = kOnBoundaryTol * scale_;
  const int n = face.sides();

  Located loc;
  int vertex_corner = -1;
  for (int k = 0; k < n; ++k) {
    if (dist(p.coords, face.chart[k]) <= on_tol) vertex_corner = k;
  }
  int edge_side = -1;
  Vec2 pos = p.coords;
  if (vertex_corner < 0) {
    double worst = std::numeric_limits<double>::infinity();
    int worst_side = -1;
    for (int k = 0; k < n; ++k) {
      const Vec2 a = face.corner(k), b = face.corner(k + 1);
      const double signed_dist = cross(b - a, p.coords - a) / dist(a, b);
      if (signed_dist < worst) {
        worst = signed_dist;
        worst_side = k;
      }
    }
    if (worst < -kOutsideTol * scale_) {
      throw GeometryError(ErrorCode::InvalidArgument, "point lies outside its face");
    }
    if (worst <= on_tol) {
      const Vec2 a = face.corner(worst_side), b = face.corner(worst_side + 1);
      const Vec2 ab = b - a;
      const double t = std::clamp(dot(p.coords - a, ab) / dot(ab, ab), 0.0, 1.0);
      pos = a + ab * t;
      if (dist(pos, a) <= on_tol) {
        vertex_corner = worst_side;
      } else if (dist(pos, b) <= on_tol) {
        vertex_corner = (worst_side + 1) % n;
      } else {
        edge_side = worst_side;
      }
    }
  }

  if (vertex_corner >= 0) {
    loc.kind = PointKind::Vertex;
    loc.vertex = face.vertex[vertex_corner];
    const SurfaceVertex& v = vertices_[loc.vertex];
    loc.total_angle = v.angle;
    for (const Corner& c : v.corners) {
      ChartRep r;
      r.face = c.face;
      r.pos = faces_[c.face].corner(c.index);
      r.corner = c.index;
      r.offset = c.offset;
      loc.reps.push_back(r);
    }
    std::stable_sort(loc.reps.begin(), loc.reps.end(),
                     [](const ChartRep& a, const ChartRep& b) { return a.face < b.face; });
    return loc;
  }
  if (edge_side >= 0) {
    loc.kind = PointKind::Edge;
    const SideRef t = twin_[p.face][edge_side];
    const Iso2& u = unfold_[p.face][edge_side];  // neighbour chart -> this chart
    ChartRep here{p.face, pos, 0.0};
    ChartRep there{t.face, u.inverse().apply(pos), u.angle()};
    if (t.face < p.face) {
      here.rotation = -u.angle();
      there.rotation = 0.0;
      loc.side = t.side;
      loc.reps = {there, here};
    } else {
      loc.side = edge_side;
      loc.reps = {here, there};
    }
    return loc;
  }
  loc.kind = PointKind::Interior;
  loc.reps = {ChartRep{p.face, pos, 0.0}};
  return loc;
}

bool Surface::same_point(const SurfacePoint& a, const SurfacePoint& b, double tol) const {
  const Located la = locate(a), lb = locate(b);
  for (const ChartRep& ra : la.reps) {
    for (const ChartRep& rb : lb.reps) {
      if (ra.face == rb.face && dist(ra.pos, rb.pos) <= tol) return true;
    }
  }
  return false;
}

double Surface::direction_angle(const Located& loc, int rep, Vec2 d) const {
  const ChartRep& r = loc.reps[rep];
  if (loc.kind != PointKind::Vertex) return wrap_angle(angle_of(d) + r.rotation);
  const Face& f = faces_[r.face];
  const Vec2 first = f.corner(r.corner + 1) - f.corner(r.corner);
  double a = ccw_angle(first, d);
  const double corner = f.corner_angle(r.corner);
  if (a > corner + 0.5 * (kTwoPi - corner)) a = 0.0;  // rounding just below the first side
  a = std::min(a, corner);
  return wrap_angle(r.offset + a, loc.total_angle);
}

SurfacePoint Surface::trace(const SurfacePoint& start, double angle, double length) const {
  return trace(locate(start), angle, length);
}

SurfacePoint Surface::trace(const Located& start, double angle, double length) const {
  int face = -1;
  Vec2 pos{}, dir{};
  if (start.kind == PointKind::Vertex) {
    const double a = wrap_angle(angle, start.total_angle);
    const ChartRep* chosen = nullptr;
    double within = 0.0;
    for (const ChartRep& r : start.reps) {
      const double ca = faces_[r.face].corner_angle(r.corner);
      if (a >= r.offset - 1e-15 && a <= r.offset + ca + 1e-15) {
        chosen = &r;
        within = a - r.offset;
        break;
      }
    }
    if (chosen == nullptr) {
      chosen = &start.reps.back();
      within = faces_[chosen->face].corner_angle(chosen->corner);
    }
    const Face& f = faces_[chosen->face];
    const Vec2 first = normalized(f.corner(chosen->corner + 1) - f.corner(chosen->corner));
    face = chosen->face;
    pos = chosen->pos;
    dir = Iso2::rotation(within).rotate(first);
  } else {
    double best = -std::numeric_limits<double>::infinity();
    for (const ChartRep& r : start.reps) {
      const Vec2 d = unit(angle - r.rotation);
      // Inward component: smallest signed distance growth over sides touching pos.
      const Face& f = faces_[r.face];
      double inward = 1.0;
      for (int k = 0; k < f.sides(); ++k) {
        const Vec2 a = f.corner(k), b = f.corner(k + 1);
        const double sd = cross(b - a, r.pos - a) / dist(a, b);
        if (sd <= kOnBoundaryTol * scale_ * 10) inward = std::min(inward, cross(normalized(b - a), d));
      }
      if (inward > best) {
        best = inward;
        face = r.face;
        pos = r.pos;
        dir = d;
      }
    }
  }
  if (length <= 0.0) return canonical({face, pos});

  double remaining = length;
  int entry_side = -1;
  for (int guard = 0; guard < 100000; ++guard) {
    const Face& f = faces_[face];
    double t_exit = std::numeric_limits<double>::infinity();
    int exit_side = -1;
    for (int k = 0; k < f.sides(); ++k) {
      if (k == entry_side) continue;
      const Vec2 a = f.corner(k), b = f.corner(k + 1);
      const Vec2 e = b - a;
      const double denom = cross(dir, e);
      if (denom <= 0.0) continue;  // not moving outward through side k
      const double t = cross(a - pos, e) / denom;
      if (t < t_exit) {
        t_exit = t;
        exit_side = k;
      }
    }
    if (exit_side < 0) throw GeometryError(ErrorCode::Internal, "geodesic trace lost its face");
    t_exit = std::max(t_exit, 0.0);
    if (remaining <= t_exit) return canonical({face, pos + dir * remaining});
    const Vec2 crossing = pos + dir * t_exit;
    remaining -= t_exit;
    const SideRef t = twin_[face][exit_side];
    const Iso2 back = unfold_[face][exit_side].inverse();
    pos = back.apply(crossing);
    dir = back.rotate(dir);
    face = t.face;
    entry_side = t.side;
  }
  throw GeometryError(ErrorCode::Internal, "geodesic trace did not terminate");
}

Vec3 Surface::to_3d(const SurfacePoint& p) const {
  if (kind_ != SurfaceKind::Tetra) throw GeometryError(ErrorCode::InvalidArgument, "not a tetrahedron surface");
  const auto& fr = frames_.at(p.face);
  return fr[0] + fr[1] * p.coords.x + fr[2] * p.coords.y;
}

}  // namespace tetramax
