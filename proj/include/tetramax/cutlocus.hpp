#pragma once

#include <string>
#include <vector>

#include "tetramax/geodesic.hpp"
#include "tetramax/surface.hpp"

namespace tetramax {

/// What to do when x is joined to some cone point by several segments.
enum class TiePolicy {
  LowestAngle,  // cut along the tied segment with the smallest angle at x
  Reject,       // throw NonGenericPosition
};

/// Development of the surface cut along the segments from x to every cone
/// point. Sector j lies between the cut directions phi[j] and phi[j+1] at x
/// and is developed around the source image sources[j]; a surface direction a
/// in sector j has planar angle a + psi[j].
struct StarUnfolding {
  SurfacePoint x;
  double x_angle = kTwoPi;         // total angle at x
  std::vector<double> phi;         // cut directions at x, increasing
  std::vector<double> psi;         // planar rotation per sector
  std::vector<double> lengths;     // cut segment lengths, aligned with phi
  std::vector<int> vertex_ids;     // cone point cut at direction phi[j]
  std::vector<Vec2> sources;       // images of x, one per sector
  std::vector<Vec2> vertex_images; // images of the cone points, aligned with phi
  std::vector<Vec2> boundary;      // counter-clockwise: X0, v0, X(n-1), v(n-1), ..., X1, v1
  bool generic = true;             // false when some cut segment was tied

  int size() const { return static_cast<int>(sources.size()); }
  double area() const;
  /// Surface point developed at planar position y of sector j.
  SurfacePoint lift(const Surface& s, Vec2 y, int sector) const;
};

/// Star unfolding rebuilt from cut directions, cut lengths and cone angles
/// alone. The gaps measure how far the walk around x fails to close.
struct StarWalk {
  StarUnfolding su;
  Vec2 vertex_gap{};
  Vec2 source_gap{};
};
StarWalk develop_star(const std::vector<double>& phi, const std::vector<double>& lengths,
                      const std::vector<double>& cone_angles, double x_angle = kTwoPi);

StarUnfolding star_unfold(const Surface& s, const SurfacePoint& x,
                          TiePolicy policy = TiePolicy::LowestAngle);

enum class Topology { H, X, Y, I };
std::string to_string(Topology t);

struct CutNode {
  Vec2 planar;             // position in the star unfolding
  SurfacePoint point;      // position on the surface
  double distance = 0.0;   // distance from x
  int vertex = -1;         // cone point id, or -1
  std::vector<int> sites;  // nearest source images
  int degree = 0;
  double total_angle = kTwoPi;
  /// Angular coordinates at the node of every segment from x, sorted.
  std::vector<double> directions;
  /// Angular coordinates at x of those segments.
  std::vector<double> directions_at_x;
};

struct CutEdge {
  int a = 0;
  int b = 0;
  int site_a = 0;  // the two source images the edge bisects
  int site_b = 0;
  double length = 0.0;
};

struct CutLocusTree {
  std::vector<CutNode> nodes;
  std::vector<CutEdge> edges;
  Topology topology = Topology::I;

  std::vector<int> neighbours(int node) const;
  double total_length() const;
  std::vector<int> leaves() const;
};

/// Restricted Voronoi diagram of the source images, lifted to the surface.
/// Throws MalformedVoronoi when the result is not a tree with cone-point leaves.
CutLocusTree cut_locus(const Surface& s, const StarUnfolding& su);

/// Classifies by node degrees; throws UnclassifiableTree for degree > 4.
Topology classify_topology(const CutLocusTree& t);

/// The surface cut along the cut locus, developed around x: a polygon listed
/// by increasing angle at x, x at the origin.
struct SourceUnfolding {
  std::vector<Vec2> boundary;
  double area() const;
  double perimeter() const;
  /// Chords from the origin to `samples` points spread along the boundary
  /// stay inside the domain within `tol`.
  bool star_shaped(int samples, double tol) const;
};

SourceUnfolding source_unfold(const Surface& s, const StarUnfolding& su, const CutLocusTree& t);
SourceUnfolding source_unfold(const Surface& s, const SurfacePoint& x);

}  // namespace tetramax
