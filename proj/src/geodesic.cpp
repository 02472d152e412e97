#include "tetramax/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "tetramax/error.hpp"

namespace tetramax {
namespace {

constexpr int kMaxCrossings = 1024;
constexpr double kWedgeSlack = 1e-11;  // relative to surface scale

struct Node {
  int face = 0;
  Iso2 to_src;  // face chart -> root chart
  Vec2 a, b;    // window on the entry side, root chart
  int entry = -1;
  int root = 0;  // index into the source reps
  int parent = -1;
  SideRef via;  // side crossed to reach this node
  int depth = 0;
};

struct Candidate {
  double length = 0.0;
  int node = -1;
  int q_rep = 0;
  Vec2 image;  // target image in the root chart
};

/// Keeps the part of segment [a, b] lying in the wedge spanned from p by the
/// window [wa, wb]. Returns false when nothing remains.
bool clip_to_wedge(Vec2 p, Vec2 wa, Vec2 wb, double slack, Vec2& a, Vec2& b) {
  Vec2 u = normalized(wa - p), v = normalized(wb - p);
  if (cross(u, v) < 0) std::swap(u, v);
  double lo = 0.0, hi = 1.0;
  const Vec2 d = b - a;
  // h(t) = h0 + t * h1 >= 0 for each bounding ray.
  const double h0[2] = {cross(u, a - p) + slack, cross(a - p, v) + slack};
  const double h1[2] = {cross(u, d), cross(d, v)};
  for (int i = 0; i < 2; ++i) {
    if (h1[i] == 0.0) {
      if (h0[i] < 0.0) return false;
    } else {
      const double t = -h0[i] / h1[i];
      if (h1[i] > 0.0) {
        lo = std::max(lo, t);
      } else {
        hi = std::min(hi, t);
      }
    }
  }
  if (!(lo < hi)) return false;
  const Vec2 na = a + d * lo, nb = a + d * hi;
  a = na;
  b = nb;
  return true;
}

bool in_wedge(Vec2 p, Vec2 wa, Vec2 wb, double slack, Vec2 y) {
  Vec2 u = normalized(wa - p), v = normalized(wb - p);
  if (cross(u, v) < 0) std::swap(u, v);
  return cross(u, y - p) >= -slack && cross(y - p, v) >= -slack;
}

class Search {
 public:
  Search(const Surface& s, const Located& lp, const Located& lq, bool collect, double tie_tol)
      : s_(s), lp_(lp), lq_(lq), collect_(collect), tie_tol_(tie_tol) {}

  void run(SearchStats* stats) {
    const double scale = s_.scale();
    slack_ = kWedgeSlack * scale;
    abs_tol_ = 1e-12 * scale;
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (int r = 0; r < static_cast<int>(lp_.reps.size()); ++r) {
      Node n;
      n.face = lp_.reps[r].face;
      n.root = r;
      nodes_.push_back(n);
      queue.push({0.0, static_cast<int>(nodes_.size()) - 1});
    }
    while (!queue.empty()) {
      const auto [bound, id] = queue.top();
      queue.pop();
      if (bound > threshold()) break;
      expand(id, queue);
    }
    if (stats != nullptr) stats->nodes += static_cast<long>(nodes_.size());
  }

  double best() const { return best_; }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  double threshold() const {
    if (!collect_) return best_;
    return best_ * (1.0 + tie_tol_) + abs_tol_;
  }

  template <class Queue>
  void expand(int id, Queue& queue) {
    const Node node = nodes_[id];
    const Face& face = s_.face(node.face);
    const Vec2 p = lp_.reps[node.root].pos;
    const bool root = node.parent < 0;

    for (int r = 0; r < static_cast<int>(lq_.reps.size()); ++r) {
      const ChartRep& rep = lq_.reps[r];
      if (rep.face != node.face) continue;
      const Vec2 image = node.to_src.apply(rep.pos);
      if (!root && !in_wedge(p, node.a, node.b, slack_, image)) continue;
      const double len = dist(p, image);
      if (len <= abs_tol_) continue;
      if (len < best_) best_ = len;
      if (collect_ && len <= threshold()) candidates_.push_back({len, id, r, image});
      if (!collect_ && len <= best_) candidates_.push_back({len, id, r, image});
    }

    for (int k = 0; k < face.sides(); ++k) {
      if (k == node.entry) continue;
      Vec2 a = node.to_src.apply(face.corner(k));
      Vec2 b = node.to_src.apply(face.corner(k + 1));
      if (root) {
        if (point_segment_distance(p, a, b) <= slack_) continue;
      } else if (!clip_to_wedge(p, node.a, node.b, 0.0, a, b)) {
        continue;
      }
      if (dist(a, b) <= abs_tol_) continue;
      const double bound = point_segment_distance(p, a, b);
      if (bound > threshold()) continue;
      if (node.depth + 1 > kMaxCrossings) {
        throw GeometryError(ErrorCode::Internal, "geodesic search exceeded the crossing cap");
      }
      const SideRef t = s_.twin(node.face, k);
      // On a convex polyhedron the in-face chord would shortcut a second visit.
      if (s_.kind() != SurfaceKind::Glued && on_chain(id, t.face)) continue;
      Node child;
      child.face = t.face;
      child.to_src = node.to_src * s_.unfold_across_edge(node.face, k);
      child.a = a;
      child.b = b;
      child.entry = t.side;
      child.root = node.root;
      child.parent = id;
      child.via = {node.face, k};
      child.depth = node.depth + 1;
      nodes_.push_back(child);
      queue.push({bound, static_cast<int>(nodes_.size()) - 1});
    }
  }

  bool on_chain(int id, int face) const {
    for (; id >= 0; id = nodes_[id].parent) {
      if (nodes_[id].face == face) return true;
    }
    return false;
  }

  const Surface& s_;
  const Located& lp_;
  const Located& lq_;
  bool collect_;
  double tie_tol_;
  double slack_ = 0.0;
  double abs_tol_ = 0.0;
  double best_ = std::numeric_limits<double>::infinity();
  std::vector<Node> nodes_;
  std::vector<Candidate> candidates_;
};

Vec2 line_intersection(Vec2 p, Vec2 q, Vec2 a, Vec2 b) {
  const Vec2 d = q - p, e = b - a;
  const double denom = cross(d, e);
  if (denom == 0.0) return a;
  const double mu = cross(a - p, d) / denom;
  return a + e * std::clamp(mu, 0.0, 1.0);
}

GeodesicSegment build_segment(const Surface& s, const Located& lp, const Located& lq,
                              const std::vector<Node>& nodes, const Candidate& c) {
  GeodesicSegment g;
  g.source = lp.point();
  g.target = lq.point();
  g.length = c.length;
  std::vector<int> chain;
  for (int id = c.node; id >= 0; id = nodes[id].parent) chain.push_back(id);
  std::reverse(chain.begin(), chain.end());
  const Node& root = nodes[chain.front()];
  const Node& last = nodes[c.node];
  const Vec2 p = lp.reps[root.root].pos;
  g.unfolded.push_back(p);
  for (size_t i = 1; i < chain.size(); ++i) {
    const Node& n = nodes[chain[i]];
    g.crossings.push_back(n.via);
    const Node& prev = nodes[n.parent];
    const Face& f = s.face(n.via.face);
    const Vec2 a = prev.to_src.apply(f.corner(n.via.side));
    const Vec2 b = prev.to_src.apply(f.corner(n.via.side + 1));
    g.unfolded.push_back(line_intersection(p, c.image, a, b));
  }
  g.unfolded.push_back(c.image);
  g.source_face = lp.reps[root.root].face;
  g.target_face = lq.reps[c.q_rep].face;
  g.source_direction = normalized(c.image - p);
  g.target_direction = normalized(last.to_src.inverse().rotate(p - c.image));
  g.source_angle = s.direction_angle(lp, root.root, g.source_direction);
  g.target_angle = s.direction_angle(lq, c.q_rep, g.target_direction);
  return g;
}

GeodesicSegment zero_segment(const Located& lp) {
  GeodesicSegment g;
  g.source = g.target = lp.point();
  g.source_face = g.target_face = lp.reps.front().face;
  g.unfolded = {lp.reps.front().pos, lp.reps.front().pos};
  return g;
}

}  // namespace

double shortest_distance(const Surface& s, const SurfacePoint& p, const SurfacePoint& q,
                         SearchStats* stats) {
  const Located lp = s.locate(p), lq = s.locate(q);
  if (s.same_point(lp.point(), lq.point(), 1e-12 * s.scale())) return 0.0;
  Search search(s, lp, lq, false, 0.0);
  search.run(stats);
  if (!std::isfinite(search.best())) throw GeometryError(ErrorCode::Internal, "no geodesic found");
  return search.best();
}

GeodesicSegment shortest_path(const Surface& s, const SurfacePoint& p, const SurfacePoint& q) {
  const Located lp = s.locate(p), lq = s.locate(q);
  if (s.same_point(lp.point(), lq.point(), 1e-12 * s.scale())) return zero_segment(lp);
  Search search(s, lp, lq, false, 0.0);
  search.run(nullptr);
  const auto& cands = search.candidates();
  if (cands.empty()) throw GeometryError(ErrorCode::Internal, "no geodesic found");
  const auto best = std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.length < b.length;
  });
  return build_segment(s, lp, lq, search.nodes(), *best);
}

std::vector<GeodesicSegment> all_segments(const Surface& s, const SurfacePoint& p,
                                          const SurfacePoint& q, double tie_tol) {
  const Located lp = s.locate(p), lq = s.locate(q);
  if (s.same_point(lp.point(), lq.point(), 1e-12 * s.scale())) return {zero_segment(lp)};
  Search search(s, lp, lq, true, tie_tol);
  search.run(nullptr);
  const double limit = search.best() * (1.0 + tie_tol) + 1e-12 * s.scale();
  std::vector<Candidate> kept;
  for (const Candidate& c : search.candidates()) {
    if (c.length <= limit) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Candidate& a, const Candidate& b) { return a.length < b.length; });
  std::vector<GeodesicSegment> out;
  for (const Candidate& c : kept) {
    GeodesicSegment g = build_segment(s, lp, lq, search.nodes(), c);
    bool duplicate = false;
    for (GeodesicSegment& o : out) {
      if (cyclic_distance(o.target_angle, g.target_angle, lq.total_angle) < 1e-6 ||
          cyclic_distance(o.source_angle, g.source_angle, lp.total_angle) < 1e-6) {
        // The same geodesic seen through a side it only touches at an endpoint.
        if (g.crossings.size() < o.crossings.size()) o = std::move(g);
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const GeodesicSegment& a, const GeodesicSegment& b) {
    return a.target_angle < b.target_angle;
  });
  return out;
}

namespace {

struct OracleState {
  const Surface* s;
  const Located* lq;
  Vec2 p;
  int max_depth;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<Vec2, Vec2>> sides;  // crossed sides in the root chart
};

bool straight_through(const OracleState& st, Vec2 image) {
  const Vec2 d = image - st.p;
  const double tol = 1e-12;
  double last = -tol;
  for (const auto& [a, b] : st.sides) {
    const Vec2 e = b - a;
    const double denom = cross(d, e);
    if (std::abs(denom) < 1e-300) return false;
    const double lambda = cross(a - st.p, e) / denom;
    const double mu = cross(a - st.p, d) / denom;
    if (lambda < last - tol || lambda > 1.0 + tol || mu < -tol || mu > 1.0 + tol) return false;
    last = lambda;
  }
  return true;
}

void oracle_dfs(OracleState& st, int face, const Iso2& to_src, int depth) {
  for (const ChartRep& rep : st.lq->reps) {
    if (rep.face != face) continue;
    const Vec2 image = to_src.apply(rep.pos);
    if (straight_through(st, image)) st.best = std::min(st.best, dist(st.p, image));
  }
  if (depth == st.max_depth) return;
  const Face& f = st.s->face(face);
  for (int k = 0; k < f.sides(); ++k) {
    st.sides.emplace_back(to_src.apply(f.corner(k)), to_src.apply(f.corner(k + 1)));
    oracle_dfs(st, st.s->twin(face, k).face, to_src * st.s->unfold_across_edge(face, k), depth + 1);
    st.sides.pop_back();
  }
}

}  // namespace

double oracle_distance(const Surface& s, const SurfacePoint& p, const SurfacePoint& q,
                       int max_depth) {
  if (max_depth < 0) throw GeometryError(ErrorCode::InvalidArgument, "negative depth");
  const Located lp = s.locate(p), lq = s.locate(q);
  double best = std::numeric_limits<double>::infinity();
  for (const ChartRep& r : lp.reps) {
    OracleState st{&s, &lq, r.pos, max_depth, std::numeric_limits<double>::infinity(), {}};
    oracle_dfs(st, r.face, Iso2{}, 0);
    best = std::min(best, st.best);
  }
  if (!std::isfinite(best)) {
    throw GeometryError(ErrorCode::DepthInsufficient, "no side sequence within the depth reaches the target");
  }
  return best;
}

std::vector<VertexSegment> segments_to_vertices(const Surface& s, const SurfacePoint& x,
                                                double tie_tol) {
  const Located lx = s.locate(x);
  if (lx.kind == PointKind::Vertex && s.vertex(lx.vertex).is_cone()) {
    throw GeometryError(ErrorCode::InvalidArgument, "x must not be a cone point");
  }
  std::vector<VertexSegment> out;
  for (int v : s.cone_points()) {
    VertexSegment vs;
    vs.vertex = v;
    vs.all = all_segments(s, x, s.vertex_point(v), tie_tol);
    std::sort(vs.all.begin(), vs.all.end(), [](const GeodesicSegment& a, const GeodesicSegment& b) {
      return a.source_angle < b.source_angle;
    });
    vs.segment = vs.all.front();
    vs.unique = vs.all.size() == 1;
    out.push_back(std::move(vs));
  }
  return out;
}

}  // namespace tetramax
