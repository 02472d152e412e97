#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetramax/cutlocus.hpp"
#include "tetramax/error.hpp"

namespace tetramax {

struct Extremum {
  SurfacePoint point;
  double distance = 0.0;
  int node = -1;    // index into the cut-locus tree
  int vertex = -1;  // cone point id, or -1
  double margin = 0.0;  // pi minus the largest angular gap at the point
};

struct ExtremumCensus {
  SurfacePoint x;
  CutLocusTree tree;
  std::vector<Extremum> M;
  std::vector<Extremum> F;
  Topology topology = Topology::I;
  int m_steiner_leaves = 0;
  bool f_steiner_is_path = true;
  double radius = 0.0;
  /// Smallest |pi - largest gap| over every candidate node; how far the
  /// census is from changing under the gap test.
  double min_margin = 0.0;
  bool generic = true;
};

/// Largest cyclic gap between sorted angular coordinates on a cone of total
/// angle `period`. A single direction has gap `period`.
double largest_gap(const std::vector<double>& directions, double period);

/// Local maxima of the distance from x among the tree nodes.
std::vector<Extremum> local_maxima(const CutLocusTree& t, double gap_tol = 1e-9);

/// Tree nodes within `tie_tol` (relative) of the largest distance.
std::vector<Extremum> farthest_points(const CutLocusTree& t, double tie_tol = 1e-9);

/// Node set of the smallest subtree containing `nodes`.
std::vector<int> steiner_subtree(const CutLocusTree& t, const std::vector<int>& nodes);
int steiner_leaf_count(const CutLocusTree& t, const std::vector<int>& nodes);
bool steiner_is_path(const CutLocusTree& t, const std::vector<int>& nodes);

ExtremumCensus census(const Surface& s, const SurfacePoint& x,
                      TiePolicy policy = TiePolicy::LowestAngle);

enum class F4Type { First, Second, Third };
std::string to_string(F4Type t);

/// Type of a census with four farthest points. Throws InapplicableCensus
/// unless #F = 4 within `tie_tol` and the tree is Y or H.
F4Type f4_type(const ExtremumCensus& c, double tie_tol = 1e-6);

struct AntipodeSearchResult {
  bool success = false;
  SurfacePoint x;
  double gap = 1.0;
  int evaluations = 0;
  std::optional<ExtremumCensus> census;
};

/// Thrown when the evaluation budget runs out; carries the best point found.
class BudgetExhaustedError : public GeometryError {
 public:
  explicit BudgetExhaustedError(AntipodeSearchResult best)
      : GeometryError(ErrorCode::BudgetExhausted, "no point with the requested antipode count within budget"),
        best_(std::move(best)) {}
  const AntipodeSearchResult& best() const { return best_; }

 private:
  AntipodeSearchResult best_;
};

struct AntipodeSearchOptions {
  int budget = 2000;
  double success_gap = 1e-6;
  int grid = 3;  // barycentric subdivisions per face for the coarse scan
  std::vector<SurfacePoint> hints;  // tried before the grid
};

/// Looks for x whose k largest local maxima of the distance are equal.
AntipodeSearchResult search_antipode_multiplicity(const Surface& s, int k,
                                                  const AntipodeSearchOptions& options = {});

}  // namespace tetramax
