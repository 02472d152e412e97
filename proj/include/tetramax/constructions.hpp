#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetramax/gluing.hpp"
#include "tetramax/surface.hpp"

namespace tetramax {

/// A named example surface with its designated point when it has one.
/// Gluing-based examples also carry the polygon, the point's polygon
/// coordinates and the fold.
struct Example {
  std::string kind;
  std::optional<Surface> surface;
  std::optional<SurfacePoint> x;
  std::optional<GluedPolygon> polygon;
  std::optional<Vec2> polygon_x;
  std::optional<FoldResult> folded;
  /// Display names of the cone points, indexed by surface vertex id.
  std::vector<std::string> vertex_names;
};

/// Double of the a-by-b rectangle centred at the origin; x is the centre.
Example rectangle_double(double a, double b);

/// Double of four consecutive vertices of the unit regular hexagon; x is the
/// hexagon centre, which lies on the long side.
Example hexagon_double();

/// a=(0,0,0), b=(1,0,0), c=(1/2, e cos h, e sin h), d=(1/2, -e cos h, e sin h).
Example thin_tetra(double eps, double h);
double thin_tetra_max_eps();

/// Triangle abc folded along its medial triangle.
Example isosceles(Vec2 a, Vec2 b, Vec2 c);

/// Ten-gon on and inside the unit circle around x whose gluing has x at
/// distance 1 from three farthest points. Polygon order:
/// v1 w u v4 u' v3 u'' w' v2 w''.
struct F3Instance {
  Example example;
  std::array<double, 4> delta{};
  double t = 0.5;
  double excess_w = 0.0;  // angle sum at w, w', w'' before notching, minus 2 pi
  double excess_u = 0.0;  // same at u, u', u''
  /// Equal-length conditions at the notches v4, v3, v2.
  std::array<double, 3> notch_residuals{};
  /// Equal-length conditions for the pairs v1w ~ w''v1 and wu ~ u''w'.
  std::array<double, 2> side_residuals{};
  /// Angle sums at the w and u classes minus 2 pi.
  std::array<double, 2> angle_residuals{};
  /// Surface vertex ids of v1..v4 on the folded tetrahedron.
  std::array<int, 4> vertex_ids{};
  double max_residual() const;
};

F3Instance f3_family(const std::array<double, 4>& delta, double t);

/// Polygon index of each named F3 point.
namespace f3 {
constexpr int v1 = 0, w = 1, u = 2, v4 = 3, u1 = 4, v3 = 5, u2 = 6, w1 = 7, v2 = 8, w2 = 9;
}

struct M5Options {
  int beta_steps = 16;
  int g_steps = 16;
  double beta_min = 0.15;
  double beta_max = kPi - 0.15;
  double g_min = 0.2;
  double g_max = 2.0;
  double perturbation = 1e-5;
  std::uint64_t seed = 1;
  int workers = 0;  // 0: environment or hardware default
};

/// Outcome of the search for a flat point with five local maxima. Failure
/// is a result, not an error.
struct M5Result {
  bool success = false;
  int candidates = 0;
  int closed = 0;      // star walk closed with positive length
  int foldable = 0;    // glued polygon valid and folded to a tetrahedron
  int best_m = 0;
  double best_margin = 0.0;
  double beta = 0.0;
  double g = 0.0;
  double h = 0.0;
  std::vector<int> m_histogram;  // index = #M
  std::optional<Example> example;
  bool perturbation_checked = false;
  bool perturbation_retained = false;
  std::string reason;
};

/// Symmetric star polygon around x with cone angles 7pi/8, 13pi/8, 3pi/4,
/// 3pi/4 for v1..v4. Cut directions 0, beta, pi, 2pi - beta reach v1, v3,
/// v2, v4; cut lengths 1, g, h, g with h chosen to close the polygon.
std::optional<GluedPolygon> m5_polygon(double beta, double g, double* h_out = nullptr);

M5Result m5_candidate(const M5Options& options = {});

/// Dispatch by kind name with positional numeric parameters.
Example construct(const std::string& kind, const std::vector<double>& params);
std::vector<std::string> construction_kinds();

}  // namespace tetramax
