#include "tetramax/cutlocus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "tetramax/error.hpp"
#include "tetramax/polygon.hpp"

namespace tetramax {
namespace {

constexpr double kMergeTol = 1e-7;       // junction merge, relative to scale
constexpr double kSiteTol = 1e-7;        // nearest-site ties, relative to scale
constexpr double kNodeTieTol = 1e-7;     // relative tie tolerance for node segments
constexpr double kClosureTol = 1e-7;     // star unfolding closure, relative to scale

std::vector<int> nearest_sites(const std::vector<Vec2>& sites, Vec2 y, double tol) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& s : sites) best = std::min(best, dist(s, y));
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(sites.size()); ++k) {
    if (dist(sites[k], y) <= best + tol) out.push_back(k);
  }
  return out;
}

bool has(const std::vector<int>& v, int k) { return std::find(v.begin(), v.end(), k) != v.end(); }

}  // namespace

std::string to_string(Topology t) {
  switch (t) {
    case Topology::H: return "H";
    case Topology::X: return "X";
    case Topology::Y: return "Y";
    case Topology::I: return "I";
  }
  return "?";
}

double StarUnfolding::area() const { return signed_area(boundary); }

SurfacePoint StarUnfolding::lift(const Surface& s, Vec2 y, int sector) const {
  const Vec2 d = y - sources[sector];
  const double len = norm(d);
  if (len == 0.0) return s.canonical(x);
  const double angle = wrap_angle(angle_of(d) - psi[sector], x_angle);
  return s.trace(x, angle, len);
}

StarWalk develop_star(const std::vector<double>& phi, const std::vector<double>& lengths,
                      const std::vector<double>& cone_angles, double x_angle) {
  const int n = static_cast<int>(phi.size());
  if (n < 2 || static_cast<int>(lengths.size()) != n || static_cast<int>(cone_angles.size()) != n) {
    throw GeometryError(ErrorCode::InvalidArgument, "star data needs matching arrays of size two or more");
  }
  StarWalk w;
  StarUnfolding& su = w.su;
  su.x_angle = x_angle;
  su.phi = phi;
  su.lengths = lengths;
  su.sources.assign(n, Vec2{});
  su.psi.assign(n, 0.0);
  su.vertex_images.assign(n, Vec2{});
  su.vertex_images[0] = su.sources[0] + unit(su.phi[0] + su.psi[0]) * su.lengths[0];
  for (int j = 0; j < n; ++j) {
    const int jn = (j + 1) % n;
    const double phi_next = su.phi[jn] + (jn == 0 ? su.x_angle : 0.0);
    const Vec2 v = su.sources[j] + unit(phi_next + su.psi[j]) * su.lengths[jn];
    const double heading = angle_of(su.sources[j] - v) + cone_angles[jn];
    const Vec2 next = v + unit(heading) * su.lengths[jn];
    if (jn == 0) {
      w.vertex_gap = v - su.vertex_images[0];
      w.source_gap = next - su.sources[0];
    } else {
      su.vertex_images[jn] = v;
      su.sources[jn] = next;
      su.psi[jn] = angle_of(v - next) - su.phi[jn];
    }
  }
  for (int k = 0; k < n; ++k) {
    const int j = (n - k) % n;
    su.boundary.push_back(su.sources[j]);
    su.boundary.push_back(su.vertex_images[j]);
  }
  return w;
}

StarUnfolding star_unfold(const Surface& s, const SurfacePoint& x, TiePolicy policy) {
  const Located lx = s.locate(x);
  if (lx.kind == PointKind::Vertex && s.vertex(lx.vertex).is_cone()) {
    throw GeometryError(ErrorCode::InvalidArgument, "x must not be a cone point");
  }
  const std::vector<VertexSegment> vs = segments_to_vertices(s, x);
  StarUnfolding su;
  su.x = lx.point();
  su.x_angle = lx.total_angle;
  for (const VertexSegment& v : vs) {
    if (!v.unique) {
      su.generic = false;
      if (policy == TiePolicy::Reject) {
        std::ostringstream msg;
        msg << "cone point " << v.vertex << " is joined to x by " << v.all.size() << " segments";
        throw GeometryError(ErrorCode::NonGenericPosition, msg.str());
      }
    }
  }
  const int n = static_cast<int>(vs.size());
  if (n < 2) throw GeometryError(ErrorCode::InvalidArgument, "surface needs at least two cone points");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> angle(n);
  for (int i = 0; i < n; ++i) angle[i] = wrap_angle(vs[i].segment.source_angle, su.x_angle);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return angle[a] < angle[b]; });
  for (int i : order) {
    su.phi.push_back(angle[i]);
    su.lengths.push_back(vs[i].segment.length);
    su.vertex_ids.push_back(vs[i].vertex);
  }
  std::vector<double> cone_angles;
  for (int v : su.vertex_ids) cone_angles.push_back(s.angle_at_cone_point(v));

  const StarWalk walk = develop_star(su.phi, su.lengths, cone_angles, su.x_angle);
  if (!(norm(walk.vertex_gap) <= kClosureTol * s.scale()) ||
      !(norm(walk.source_gap) <= kClosureTol * s.scale())) {
    throw GeometryError(ErrorCode::Internal, "star unfolding does not close");
  }
  su.sources = walk.su.sources;
  su.psi = walk.su.psi;
  su.vertex_images = walk.su.vertex_images;
  su.boundary = walk.su.boundary;
  return su;
}

std::vector<int> CutLocusTree::neighbours(int node) const {
  std::vector<int> out;
  for (const CutEdge& e : edges) {
    if (e.a == node) out.push_back(e.b);
    if (e.b == node) out.push_back(e.a);
  }
  return out;
}

double CutLocusTree::total_length() const {
  double l = 0.0;
  for (const CutEdge& e : edges) l += e.length;
  return l;
}

std::vector<int> CutLocusTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].degree == 1) out.push_back(i);
  }
  return out;
}

Topology classify_topology(const CutLocusTree& t) {
  int deg3 = 0, deg4 = 0;
  for (const CutNode& n : t.nodes) {
    if (n.degree > 4) throw GeometryError(ErrorCode::UnclassifiableTree, "node of degree above four");
    if (n.degree == 3) ++deg3;
    if (n.degree == 4) ++deg4;
  }
  if (deg4 == 1 && deg3 == 0) return Topology::X;
  if (deg4 == 0 && deg3 == 2) return Topology::H;
  if (deg4 == 0 && deg3 == 1) return Topology::Y;
  if (deg4 == 0 && deg3 == 0) return Topology::I;
  throw GeometryError(ErrorCode::UnclassifiableTree, "degree pattern does not match a four-leaf tree");
}

CutLocusTree cut_locus(const Surface& s, const StarUnfolding& su) {
  const int n = su.size();
  const double scale = s.scale();
  const double merge_tol = kMergeTol * scale;
  const double site_tol = kSiteTol * scale;
  const auto& sites = su.sources;
  const auto& poly = su.boundary;

  struct Proto {
    Vec2 pos;
    int vertex_slot = -1;  // index into su.vertex_ids
    std::set<int> sites;
  };
  std::vector<Proto> protos;
  auto add = [&](Vec2 p, int slot, std::initializer_list<int> from) {
    for (Proto& q : protos) {
      if (dist(q.pos, p) <= merge_tol) {
        if (slot >= 0 && q.vertex_slot < 0) {
          q.pos = p;
          q.vertex_slot = slot;
        }
        q.sites.insert(from);
        return;
      }
    }
    Proto q;
    q.pos = p;
    q.vertex_slot = slot;
    q.sites.insert(from);
    protos.push_back(q);
  };
  for (int j = 0; j < n; ++j) add(su.vertex_images[j], j, {(j + n - 1) % n, j});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Vec2 a = sites[i], b = sites[j], c = sites[k];
        const double d = 2.0 * cross(b - a, c - a);
        if (std::abs(d) <= 1e-14 * scale * scale) continue;
        const double bb = dot(b - a, b - a), cc = dot(c - a, c - a);
        const Vec2 center = a + Vec2{(c - a).y * bb - (b - a).y * cc, (b - a).x * cc - (c - a).x * bb} / d;
        const double r = dist(center, a);
        bool valid = true;
        for (int m = 0; m < n && valid; ++m) {
          if (m != i && m != j && m != k && dist(center, sites[m]) < r - site_tol) valid = false;
        }
        if (!valid) continue;
        bool near_vertex = false;
        for (const Vec2& v : su.vertex_images) near_vertex = near_vertex || dist(v, center) <= merge_tol;
        if (!near_vertex && !contains(poly, center, 1e-9 * scale, true)) continue;
        add(center, -1, {i, j, k});
      }
    }
  }

  CutLocusTree t;
  for (const Proto& p : protos) {
    CutNode node;
    node.planar = p.pos;
    std::set<int> all = p.sites;
    for (int k : nearest_sites(sites, p.pos, site_tol)) all.insert(k);
    node.sites.assign(all.begin(), all.end());
    if (p.vertex_slot >= 0) {
      node.vertex = su.vertex_ids[p.vertex_slot];
      node.distance = su.lengths[p.vertex_slot];
    } else {
      double best = std::numeric_limits<double>::infinity();
      for (int k : node.sites) best = std::min(best, dist(p.pos, sites[k]));
      node.distance = best;
    }
    t.nodes.push_back(node);
  }

  // Connect consecutive nodes along each bisector.
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> on;
      for (int k = 0; k < static_cast<int>(t.nodes.size()); ++k) {
        if (has(t.nodes[k].sites, i) && has(t.nodes[k].sites, j)) on.push_back(k);
      }
      if (on.size() < 2) continue;
      const Vec2 dir = perp(sites[j] - sites[i]);
      std::sort(on.begin(), on.end(), [&](int a, int b) {
        return dot(t.nodes[a].planar, dir) < dot(t.nodes[b].planar, dir);
      });
      for (size_t k = 0; k + 1 < on.size(); ++k) {
        const int a = on[k], b = on[k + 1];
        const Vec2 mid = (t.nodes[a].planar + t.nodes[b].planar) * 0.5;
        if (dist(t.nodes[a].planar, t.nodes[b].planar) <= merge_tol) continue;
        const auto near = nearest_sites(sites, mid, site_tol);
        if (!has(near, i) || !has(near, j)) continue;
        if (!contains(poly, mid, 1e-9 * scale, true)) continue;
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second) continue;
        t.edges.push_back({key.first, key.second, i, j, dist(t.nodes[a].planar, t.nodes[b].planar)});
      }
    }
  }

  // Drop isolated non-vertex nodes (circumcentres that are not tree points).
  std::vector<int> degree(t.nodes.size(), 0);
  for (const CutEdge& e : t.edges) {
    ++degree[e.a];
    ++degree[e.b];
  }
  std::vector<int> remap(t.nodes.size(), -1);
  std::vector<CutNode> kept;
  for (size_t k = 0; k < t.nodes.size(); ++k) {
    if (degree[k] == 0 && t.nodes[k].vertex < 0) continue;
    remap[k] = static_cast<int>(kept.size());
    t.nodes[k].degree = degree[k];
    kept.push_back(t.nodes[k]);
  }
  t.nodes = std::move(kept);
  for (CutEdge& e : t.edges) {
    e.a = remap[e.a];
    e.b = remap[e.b];
  }

  // Tree validation.
  const int nn = static_cast<int>(t.nodes.size());
  std::ostringstream why;
  if (static_cast<int>(t.edges.size()) != nn - 1) why << "edge count " << t.edges.size() << " for " << nn << " nodes; ";
  std::vector<int> comp(nn);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int a) { return comp[a] == a ? a : comp[a] = find(comp[a]); };
  for (const CutEdge& e : t.edges) comp[find(e.a)] = find(e.b);
  for (int k = 0; k < nn; ++k) {
    if (find(k) != find(0)) {
      why << "disconnected; ";
      break;
    }
  }
  for (const CutNode& node : t.nodes) {
    if (node.degree == 1 && node.vertex < 0) why << "leaf away from a cone point; ";
    if (node.degree == 0) why << "isolated cone point; ";
  }
  if (!why.str().empty()) throw GeometryError(ErrorCode::MalformedVoronoi, why.str());

  // Lift to the surface and recover the segments at every node.
  const Located lx = s.locate(su.x);
  for (CutNode& node : t.nodes) {
    if (node.vertex >= 0) {
      node.point = s.vertex_point(node.vertex);
      node.total_angle = s.angle_at_cone_point(node.vertex);
    } else {
      int site = node.sites.front();
      for (int k : node.sites) {
        if (dist(node.planar, sites[k]) < dist(node.planar, sites[site])) site = k;
      }
      node.point = su.lift(s, node.planar, site);
      const Located ln = s.locate(node.point);
      node.total_angle = ln.total_angle;
    }
    const auto segs = all_segments(s, lx.point(), node.point, kNodeTieTol);
    for (const GeodesicSegment& g : segs) {
      node.directions.push_back(g.target_angle);
      node.directions_at_x.push_back(g.source_angle);
    }
    std::sort(node.directions.begin(), node.directions.end());
  }
  for (CutEdge& e : t.edges) e.length = dist(t.nodes[e.a].planar, t.nodes[e.b].planar);
  t.topology = classify_topology(t);
  return t;
}

double SourceUnfolding::area() const { return signed_area(boundary); }
double SourceUnfolding::perimeter() const { return tetramax::perimeter(boundary); }

bool SourceUnfolding::star_shaped(int samples, double tol) const {
  const double total = perimeter();
  const int n = static_cast<int>(boundary.size());
  if (n < 3 || total <= 0.0) return false;
  std::vector<double> cum(n + 1, 0.0);
  for (int i = 0; i < n; ++i) cum[i + 1] = cum[i] + dist(boundary[i], boundary[(i + 1) % n]);
  for (int k = 0; k < samples; ++k) {
    const double at = total * (k + 0.5) / samples;
    const int e = static_cast<int>(std::upper_bound(cum.begin(), cum.end(), at) - cum.begin()) - 1;
    const Vec2 a = boundary[e], b = boundary[(e + 1) % n];
    const double len = cum[e + 1] - cum[e];
    const Vec2 p = len > 0 ? a + (b - a) * ((at - cum[e]) / len) : a;
    const Vec2 d = p;
    for (int f = 0; f < n; ++f) {
      if (f == e) continue;
      const Vec2 c = boundary[f], g = boundary[(f + 1) % n];
      const Vec2 eg = g - c;
      const double denom = cross(d, eg);
      if (std::abs(denom) <= 1e-300) continue;
      const double lambda = cross(c, eg) / denom;
      const double mu = cross(c, d) / denom;
      const double slack = tol / norm(d);
      if (lambda > slack && lambda < 1.0 - slack && mu > -1e-12 && mu < 1.0 + 1e-12) return false;
    }
  }
  return true;
}

SourceUnfolding source_unfold(const Surface& s, const StarUnfolding& su, const CutLocusTree& t) {
  (void)s;
  std::vector<std::pair<double, double>> polar;
  for (const CutNode& node : t.nodes) {
    for (int k : node.sites) {
      const Vec2 d = node.planar - su.sources[k];
      polar.push_back({wrap_angle(angle_of(d) - su.psi[k], su.x_angle), norm(d)});
    }
  }
  std::sort(polar.begin(), polar.end());
  std::vector<std::pair<double, double>> unique;
  for (const auto& p : polar) {
    if (!unique.empty() && std::abs(p.first - unique.back().first) < 1e-9) continue;
    unique.push_back(p);
  }
  if (unique.size() > 1 && su.x_angle - unique.back().first + unique.front().first < 1e-9) unique.pop_back();
  SourceUnfolding out;
  const double stretch = kTwoPi / su.x_angle;
  for (const auto& [a, r] : unique) out.boundary.push_back(unit(a * stretch) * r);
  return out;
}

SourceUnfolding source_unfold(const Surface& s, const SurfacePoint& x) {
  const StarUnfolding su = star_unfold(s, x);
  return source_unfold(s, su, cut_locus(s, su));
}

}  // namespace tetramax
