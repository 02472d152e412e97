#include "tetramax/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tetramax/error.hpp"

namespace tetramax {

double largest_gap(const std::vector<double>& directions, double period) {
  if (directions.empty()) return period;
  std::vector<double> d;
  for (double a : directions) d.push_back(wrap_angle(a, period));
  std::sort(d.begin(), d.end());
  double gap = d.front() + period - d.back();
  for (size_t i = 1; i < d.size(); ++i) gap = std::max(gap, d[i] - d[i - 1]);
  return gap;
}

std::vector<Extremum> local_maxima(const CutLocusTree& t, double gap_tol) {
  std::vector<Extremum> out;
  for (int k = 0; k < static_cast<int>(t.nodes.size()); ++k) {
    const CutNode& n = t.nodes[k];
    // Candidates: leaves, junctions, and cone points inside the tree.
    const bool candidate = n.degree == 1 || n.degree >= 3 || n.vertex >= 0;
    if (!candidate) continue;
    const double margin = kPi - largest_gap(n.directions, n.total_angle);
    if (margin > gap_tol) out.push_back({n.point, n.distance, k, n.vertex, margin});
  }
  return out;
}

std::vector<Extremum> farthest_points(const CutLocusTree& t, double tie_tol) {
  double radius = 0.0;
  for (const CutNode& n : t.nodes) radius = std::max(radius, n.distance);
  std::vector<Extremum> out;
  for (int k = 0; k < static_cast<int>(t.nodes.size()); ++k) {
    const CutNode& n = t.nodes[k];
    if (n.distance >= radius * (1.0 - tie_tol)) {
      out.push_back({n.point, n.distance, k, n.vertex, kPi - largest_gap(n.directions, n.total_angle)});
    }
  }
  return out;
}

std::vector<int> steiner_subtree(const CutLocusTree& t, const std::vector<int>& nodes) {
  const int n = static_cast<int>(t.nodes.size());
  std::vector<char> alive(n, 1), keep(n, 0);
  for (int k : nodes) keep[k] = 1;
  std::vector<int> degree(n, 0);
  for (const CutEdge& e : t.edges) {
    ++degree[e.a];
    ++degree[e.b];
  }
  if (nodes.empty()) return {};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < n; ++k) {
      if (!alive[k] || keep[k] || degree[k] > 1) continue;
      alive[k] = 0;
      changed = true;
      for (const CutEdge& e : t.edges) {
        if (e.a == k && alive[e.b]) --degree[e.b];
        if (e.b == k && alive[e.a]) --degree[e.a];
      }
    }
  }
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    if (alive[k]) out.push_back(k);
  }
  return out;
}

namespace {

std::vector<int> subtree_degrees(const CutLocusTree& t, const std::vector<int>& sub) {
  std::vector<int> degree(t.nodes.size(), 0);
  std::vector<char> in(t.nodes.size(), 0);
  for (int k : sub) in[k] = 1;
  for (const CutEdge& e : t.edges) {
    if (in[e.a] && in[e.b]) {
      ++degree[e.a];
      ++degree[e.b];
    }
  }
  return degree;
}

}  // namespace

int steiner_leaf_count(const CutLocusTree& t, const std::vector<int>& nodes) {
  const auto sub = steiner_subtree(t, nodes);
  if (sub.size() <= 1) return static_cast<int>(sub.size());
  const auto degree = subtree_degrees(t, sub);
  int leaves = 0;
  for (int k : sub) leaves += degree[k] == 1;
  return leaves;
}

bool steiner_is_path(const CutLocusTree& t, const std::vector<int>& nodes) {
  const auto sub = steiner_subtree(t, nodes);
  const auto degree = subtree_degrees(t, sub);
  for (int k : sub) {
    if (degree[k] > 2) return false;
  }
  return true;
}

ExtremumCensus census(const Surface& s, const SurfacePoint& x, TiePolicy policy) {
  const StarUnfolding su = star_unfold(s, x, policy);
  ExtremumCensus c;
  c.x = su.x;
  c.generic = su.generic;
  c.tree = cut_locus(s, su);
  c.topology = c.tree.topology;
  c.M = local_maxima(c.tree);
  c.F = farthest_points(c.tree);
  for (const Extremum& e : c.F) c.radius = std::max(c.radius, e.distance);
  std::vector<int> m_nodes, f_nodes;
  for (const Extremum& e : c.M) m_nodes.push_back(e.node);
  for (const Extremum& e : c.F) f_nodes.push_back(e.node);
  c.m_steiner_leaves = steiner_leaf_count(c.tree, m_nodes);
  c.f_steiner_is_path = steiner_is_path(c.tree, f_nodes);
  c.min_margin = std::numeric_limits<double>::infinity();
  for (const CutNode& n : c.tree.nodes) {
    if (n.degree == 1 || n.degree >= 3 || n.vertex >= 0) {
      c.min_margin = std::min(c.min_margin, std::abs(kPi - largest_gap(n.directions, n.total_angle)));
    }
  }
  return c;
}

std::string to_string(F4Type t) {
  switch (t) {
    case F4Type::First: return "first";
    case F4Type::Second: return "second";
    case F4Type::Third: return "third";
  }
  return "?";
}

F4Type f4_type(const ExtremumCensus& c, double tie_tol) {
  double radius = 0.0;
  for (const CutNode& n : c.tree.nodes) radius = std::max(radius, n.distance);
  std::vector<int> far;
  for (int k = 0; k < static_cast<int>(c.tree.nodes.size()); ++k) {
    if (c.tree.nodes[k].distance >= radius * (1.0 - tie_tol)) far.push_back(k);
  }
  if (far.size() != 4) throw GeometryError(ErrorCode::InapplicableCensus, "census does not have four antipodes");
  if (c.topology == Topology::Y) return F4Type::First;
  if (c.topology != Topology::H) {
    throw GeometryError(ErrorCode::InapplicableCensus, "type is defined for Y and H trees only");
  }
  std::vector<std::pair<double, bool>> leaf_dirs;
  for (int k = 0; k < static_cast<int>(c.tree.nodes.size()); ++k) {
    const CutNode& n = c.tree.nodes[k];
    if (n.degree != 1) continue;
    if (n.directions_at_x.empty()) throw GeometryError(ErrorCode::InapplicableCensus, "leaf without a segment");
    const bool antipode = std::find(far.begin(), far.end(), k) != far.end();
    leaf_dirs.push_back({n.directions_at_x.front(), antipode});
  }
  int antipodes = 0;
  for (const auto& l : leaf_dirs) antipodes += l.second;
  if (leaf_dirs.size() != 4 || antipodes != 2) {
    throw GeometryError(ErrorCode::InapplicableCensus, "H tree without exactly two leaf antipodes");
  }
  std::sort(leaf_dirs.begin(), leaf_dirs.end());
  for (int i = 0; i < 4; ++i) {
    if (leaf_dirs[i].second && leaf_dirs[(i + 1) % 4].second) return F4Type::Second;
  }
  return F4Type::Third;
}

namespace {

struct Evaluation {
  double objective = std::numeric_limits<double>::infinity();
  double gap = 1.0;
};

/// Relative gap between the largest and k-th largest local maximum. When
/// fewer than k local maxima exist the value is 1 plus the gap among all tree
/// nodes, so that the objective still guides the search.
Evaluation evaluate(const Surface& s, const SurfacePoint& x, int k) {
  Evaluation ev;
  try {
    const StarUnfolding su = star_unfold(s, x);
    const CutLocusTree t = cut_locus(s, su);
    std::vector<double> m, all;
    for (const Extremum& e : local_maxima(t)) m.push_back(e.distance);
    for (const CutNode& n : t.nodes) all.push_back(n.distance);
    std::sort(m.begin(), m.end(), std::greater<>());
    std::sort(all.begin(), all.end(), std::greater<>());
    if (static_cast<int>(m.size()) >= k) {
      ev.gap = (m[0] - m[k - 1]) / m[0];
      ev.objective = ev.gap;
    } else {
      ev.gap = 1.0;
      ev.objective = 1.0 + (all[0] - all[std::min<size_t>(k, all.size()) - 1]) / all[0];
    }
  } catch (const GeometryError&) {
    // Cone points and numerically degenerate trees are simply skipped.
  }
  return ev;
}

}  // namespace

AntipodeSearchResult search_antipode_multiplicity(const Surface& s, int k,
                                                  const AntipodeSearchOptions& options) {
  if (k < 2 || k > 4) throw GeometryError(ErrorCode::InvalidArgument, "k must be 2, 3 or 4");
  AntipodeSearchResult best;
  best.gap = std::numeric_limits<double>::infinity();
  double best_objective = std::numeric_limits<double>::infinity();
  int evaluations = 0;

  auto consider = [&](const SurfacePoint& x, const Evaluation& ev) {
    if (ev.objective < best_objective) {
      best_objective = ev.objective;
      best.x = x;
      best.gap = ev.gap;
    }
  };
  auto done = [&]() { return best.gap < options.success_gap || evaluations >= options.budget; };

  // Coarse scan: hints, then a barycentric grid on every face.
  std::vector<std::pair<double, SurfacePoint>> starts;
  std::vector<SurfacePoint> scan = options.hints;
  const int g = std::max(1, options.grid);
  for (int f = 0; f < s.face_count() && !done(); ++f) {
    const Face& face = s.face(f);
    for (int tri = 1; tri + 1 < face.sides(); ++tri) {
      const Vec2 a = face.chart[0], b = face.chart[tri], c = face.chart[tri + 1];
      for (int i = 1; i <= g; ++i) {
        for (int j = 1; i + j <= g + 1; ++j) {
          const double u = i / (g + 2.0), v = j / (g + 2.0);
          scan.push_back({f, a + (b - a) * u + (c - a) * v});
        }
      }
    }
  }
  for (const SurfacePoint& x : scan) {
    if (done()) break;
    const Evaluation ev = evaluate(s, x, k);
    ++evaluations;
    consider(x, ev);
    starts.push_back({ev.objective, x});
  }
  std::stable_sort(starts.begin(), starts.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  // Compass search from the best starts, moving x along geodesics.
  const int directions = 8;
  for (size_t st = 0; st < starts.size() && !done(); ++st) {
    SurfacePoint x = starts[st].second;
    double current = starts[st].first;
    if (!std::isfinite(current)) continue;
    double step = 0.1 * s.scale();
    while (step > 1e-13 * s.scale() && !done()) {
      bool improved = false;
      for (int d = 0; d < directions && !done(); ++d) {
        SurfacePoint y;
        try {
          y = s.trace(x, kTwoPi * d / directions, step);
        } catch (const GeometryError&) {
          continue;
        }
        const Evaluation ev = evaluate(s, y, k);
        ++evaluations;
        consider(y, ev);
        if (ev.objective < current) {
          current = ev.objective;
          x = y;
          improved = true;
          break;
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  best.evaluations = evaluations;
  best.success = best.gap < options.success_gap;
  if (std::isfinite(best_objective)) {
    try {
      best.census = census(s, best.x);
    } catch (const GeometryError&) {
    }
  }
  if (!best.success) throw BudgetExhaustedError(best);
  return best;
}

}  // namespace tetramax
