#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetramax/tetra.hpp"
#include "tetramax/vec.hpp"

namespace tetramax {

enum class SurfaceKind { Tetra, Double, Glued };
std::string to_string(SurfaceKind kind);

/// A point located intrinsically: a face and planar coordinates in that
/// face's chart. Boundary points are owned by the lowest face id.
struct SurfacePoint {
  int face = 0;
  Vec2 coords{};
};

/// Convex face with a counter-clockwise planar chart. `vertex[k]` is the
/// surface vertex id sitting at chart corner `chart[k]`; side k runs from
/// corner k to corner k+1.
struct Face {
  std::vector<Vec2> chart;
  std::vector<int> vertex;

  int sides() const { return static_cast<int>(chart.size()); }
  Vec2 corner(int k) const { return chart[((k % sides()) + sides()) % sides()]; }
  double area() const;
  double corner_angle(int k) const;
};

struct SideRef {
  int face = -1;
  int side = -1;
  bool operator==(const SideRef&) const = default;
};

/// Corner of a face incident to a vertex; `offset` is the angular position
/// of the corner's first side (towards the next corner) in the vertex cone.
struct Corner {
  int face = 0;
  int index = 0;
  double offset = 0.0;
};

struct SurfaceVertex {
  double angle = 0.0;           // total angle theta
  std::vector<Corner> corners;  // in counter-clockwise order around the vertex
  bool is_cone() const { return angle < kTwoPi - 1e-8; }
  double curvature() const { return kTwoPi - angle; }
};

enum class PointKind { Interior, Edge, Vertex };

/// One chart realization of a located point. Directions d in this chart map
/// to the point's angular coordinate by `Surface::direction_angle`.
struct ChartRep {
  int face = 0;
  Vec2 pos{};
  double rotation = 0.0;  // interior/edge: chart angle + rotation = angular coordinate
  int corner = -1;        // vertex: corner index within the face
  double offset = 0.0;    // vertex: angular coordinate of the corner's first side
};

/// All chart realizations of a surface point together with its angular
/// coordinate system (period `total_angle`).
struct Located {
  PointKind kind = PointKind::Interior;
  int vertex = -1;
  int side = -1;  // edge points: side of the owner face
  double total_angle = kTwoPi;
  std::vector<ChartRep> reps;  // reps[0] is the canonical owner
  SurfacePoint point() const { return {reps.front().face, reps.front().pos}; }
};

/// Intrinsic surface: convex planar faces glued isometrically along sides.
class Surface {
 public:
  static Surface from_tetra(const Tetra& t);
  /// Double of a convex polygon; throws NonConvexPolygon.
  static Surface double_of(const std::vector<Vec2>& polygon);
  /// General assembly from faces and side gluings (`twin[f][s]`).
  static Surface assemble(SurfaceKind kind, std::vector<Face> faces,
                          std::vector<std::vector<SideRef>> twin);

  SurfaceKind kind() const { return kind_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  SideRef twin(int f, int s) const { return twin_[f][s]; }
  const std::vector<SurfaceVertex>& vertices() const { return vertices_; }
  const SurfaceVertex& vertex(int v) const { return vertices_[v]; }
  /// Vertex ids with total angle below 2 pi, in increasing order.
  const std::vector<int>& cone_points() const { return cones_; }
  const std::optional<Tetra>& tetra() const { return tetra_; }
  /// The source polygon for doubles.
  const std::vector<Vec2>& polygon() const { return polygon_; }

  /// Maps the chart of the face across side `s` of face `f` into f's chart.
  const Iso2& unfold_across_edge(int f, int s) const { return unfold_[f][s]; }
  double angle_at_cone_point(int vertex_id) const { return vertices_.at(vertex_id).angle; }
  double total_curvature() const;

  double area() const;
  /// Longest face side; the length scale used for tolerances.
  double scale() const { return scale_; }
  int euler_characteristic() const;

  SurfacePoint vertex_point(int vertex_id) const;
  Located locate(const SurfacePoint& p) const;
  SurfacePoint canonical(const SurfacePoint& p) const { return locate(p).point(); }
  bool same_point(const SurfacePoint& a, const SurfacePoint& b, double tol) const;

  /// Angular coordinate, at the located point, of chart direction d in reps[rep].
  double direction_angle(const Located& loc, int rep, Vec2 d) const;

  /// Follows the geodesic leaving `start` at angular coordinate `angle` for
  /// arc length `length`.
  SurfacePoint trace(const SurfacePoint& start, double angle, double length) const;
  SurfacePoint trace(const Located& start, double angle, double length) const;

  /// Position in R^3 (tetra kind only).
  Vec3 to_3d(const SurfacePoint& p) const;

 private:
  Surface() = default;
  void finalize();

  SurfaceKind kind_ = SurfaceKind::Tetra;
  std::vector<Face> faces_;
  std::vector<std::vector<SideRef>> twin_;
  std::vector<std::vector<Iso2>> unfold_;
  std::vector<SurfaceVertex> vertices_;
  std::vector<int> cones_;
  std::optional<Tetra> tetra_;
  std::vector<Vec2> polygon_;
  // 3D frames of tetra faces: origin, x axis, y axis.
  std::vector<std::array<Vec3, 3>> frames_;
  double scale_ = 1.0;
};

/// Uniformly distributed point (by area).
template <class Rng>
SurfacePoint random_surface_point(const Surface& s, Rng& rng);

}  // namespace tetramax

#include <random>

namespace tetramax {

template <class Rng>
SurfacePoint random_surface_point(const Surface& s, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double total = s.area();
  double pick = u(rng) * total;
  int f = 0;
  for (; f + 1 < s.face_count(); ++f) {
    const double a = s.face(f).area();
    if (pick < a) break;
    pick -= a;
  }
  const Face& face = s.face(f);
  // Fan triangulation from corner 0, choose a triangle by area.
  double tri_pick = u(rng) * face.area();
  int k = 1;
  for (; k + 2 < face.sides(); ++k) {
    const double a = 0.5 * cross(face.chart[k] - face.chart[0], face.chart[k + 1] - face.chart[0]);
    if (tri_pick < a) break;
    tri_pick -= a;
  }
  double r1 = u(rng), r2 = u(rng);
  if (r1 + r2 > 1.0) {
    r1 = 1.0 - r1;
    r2 = 1.0 - r2;
  }
  const Vec2 p = face.chart[0] + (face.chart[k] - face.chart[0]) * r1 +
                 (face.chart[k + 1] - face.chart[0]) * r2;
  return {f, p};
}

}  // namespace tetramax
