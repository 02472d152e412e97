#pragma once

#include <vector>

#include "tetramax/surface.hpp"

namespace tetramax {

/// A geodesic realized by unfolding an edge sequence into the plane.
struct GeodesicSegment {
  SurfacePoint source;
  SurfacePoint target;
  double length = 0.0;
  /// Crossed sides in order, each given as (face being left, side index).
  std::vector<SideRef> crossings;
  /// Unit directions in the source and target face charts. The target
  /// direction points from the target back towards the source.
  Vec2 source_direction{};
  Vec2 target_direction{};
  int source_face = 0;
  int target_face = 0;
  /// Angular coordinates of the two directions (see Surface::direction_angle).
  double source_angle = 0.0;
  double target_angle = 0.0;
  /// Crossing points in source-frame coordinates, with the unfolded endpoints.
  std::vector<Vec2> unfolded;
};

struct SearchStats {
  long nodes = 0;
};

/// Length of a shortest path from p to q.
double shortest_distance(const Surface& s, const SurfacePoint& p, const SurfacePoint& q,
                         SearchStats* stats = nullptr);

/// A shortest path from p to q.
GeodesicSegment shortest_path(const Surface& s, const SurfacePoint& p, const SurfacePoint& q);

/// Every geodesic from p to q whose length is within `tie_tol` (relative) of
/// the minimum, deduplicated by direction and sorted by angle at q.
std::vector<GeodesicSegment> all_segments(const Surface& s, const SurfacePoint& p,
                                          const SurfacePoint& q, double tie_tol = 1e-9);

/// Exhaustive enumeration over every side sequence of length at most
/// `max_depth`. Throws DepthInsufficient when none reaches q.
double oracle_distance(const Surface& s, const SurfacePoint& p, const SurfacePoint& q,
                       int max_depth);

struct VertexSegment {
  int vertex = -1;
  GeodesicSegment segment;
  bool unique = true;
  std::vector<GeodesicSegment> all;  // every tied segment, sorted by angle at x
};

/// Shortest segments from x to every cone point, in cone-point order.
std::vector<VertexSegment> segments_to_vertices(const Surface& s, const SurfacePoint& x,
                                                double tie_tol = 1e-9);

}  // namespace tetramax
