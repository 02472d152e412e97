#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tetramax/cutlocus.hpp"
#include "tetramax/surface.hpp"
#include "tetramax/tetra.hpp"

namespace tetramax {

/// Side i (from vertex i to vertex i+1) is glued to side j. Orientation -1
/// glues them in opposite directions: vertex i meets vertex j+1 and vertex
/// i+1 meets vertex j. Orientation +1 would produce a non-orientable surface.
struct Pairing {
  int i = 0;
  int j = 0;
  int orient = -1;
};

/// Simple counter-clockwise polygon with side pairings.
struct GluedPolygon {
  std::vector<Vec2> vertices;
  std::vector<Pairing> pairings;
};

/// An equivalence class of polygon vertices after gluing.
struct GluedPoint {
  std::vector<int> corners;  // polygon vertex indices
  double angle = 0.0;
  double curvature() const { return kTwoPi - angle; }
  bool is_cone() const { return angle < kTwoPi - 1e-8; }
};

struct GluingReport {
  std::vector<GluedPoint> classes;  // class id = index
  std::vector<int> vertex_class;    // polygon vertex -> class id
  std::vector<int> cones;           // class ids of cone points
  double total_curvature = 0.0;
};

/// Checks lengths, orientation, topology and the angle condition.
/// Throws LengthMismatch, AngleExcess, NotASphere or WrongConeCount
/// (exactly four cone points are required when `require_four_cones`).
GluingReport validate_gluing(const GluedPolygon& g, bool require_four_cones = true);

/// Triangulated intrinsic surface of the glued polygon. Triangles keep the
/// polygon's coordinates as charts; vertex ids are the gluing classes.
Surface glued_surface(const GluedPolygon& g);

/// Surface point of the glued surface at polygon coordinates p.
SurfacePoint polygon_point(const Surface& glued, Vec2 p);

/// Intrinsic distance between two points of the polygon in the glued metric.
double portal_distance(const GluedPolygon& g, Vec2 p, Vec2 q);
double portal_distance(const Surface& glued, Vec2 p, Vec2 q);

struct FoldResult {
  GluingReport report;
  std::array<int, 4> cone_class{};  // tetra label k is gluing class cone_class[k]
  EdgeLengths lengths{};
  Embedding shape = FlatDouble{};
  /// Surface of the folded shape; `label_vertex[k]` is the surface vertex id
  /// of tetra label k.
  std::optional<Surface> surface;
  std::array<int, 4> label_vertex{};
};

/// Folds a glued polygon with four cone points using the six cone-point
/// distances as edge lengths.
FoldResult fold(const GluedPolygon& g);

/// Carries a point of the glued surface onto the folded surface by replaying
/// its segment from the first cone point.
SurfacePoint transfer_to_fold(const Surface& glued, const FoldResult& f, const SurfacePoint& p);

/// The star unfolding as a glued polygon: every cut segment's two sides are paired.
GluedPolygon star_polygon(const StarUnfolding& su);

/// The double of a convex polygon written as a single polygon: K followed by
/// its mirror image across the last side.
GluedPolygon double_as_polygon(const std::vector<Vec2>& convex);

}  // namespace tetramax
