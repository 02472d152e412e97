#include "tetramax/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tetramax/error.hpp"

namespace tetramax {

double signed_area(const std::vector<Vec2>& poly) {
  double a = 0.0;
  for (size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
  return 0.5 * a;
}

double perimeter(const std::vector<Vec2>& poly) {
  double p = 0.0;
  for (size_t i = 0; i < poly.size(); ++i) p += dist(poly[i], poly[(i + 1) % poly.size()]);
  return p;
}

double boundary_distance(const std::vector<Vec2>& poly, Vec2 p) {
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < poly.size(); ++i) {
    d = std::min(d, point_segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
  }
  return d;
}

bool contains(const std::vector<Vec2>& poly, Vec2 p, double tol, bool strict) {
  if (boundary_distance(poly, p) <= tol) return !strict;
  bool inside = false;
  const size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

namespace {

double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = orient(c, d, a), d2 = orient(c, d, b);
  const double d3 = orient(a, b, c), d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

bool is_simple(const std::vector<Vec2>& poly) {
  const size_t n = poly.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i], b = poly[(i + 1) % n];
    for (size_t j = i + 1; j < n; ++j) {
      const Vec2 c = poly[j], d = poly[(j + 1) % n];
      const bool next = j == i + 1;
      const bool wrap = i == 0 && j == n - 1;
      if (next || wrap) {
        // Adjacent sides may only fold back onto each other when collinear and opposite.
        const Vec2 shared = next ? b : a;
        const Vec2 u = (next ? a : b) - shared, v = (next ? d : c) - shared;
        if (std::abs(cross(u, v)) <= 1e-14 * norm(u) * norm(v) && dot(u, v) > 0) return false;
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

std::vector<std::array<int, 3>> ear_clip(const std::vector<Vec2>& poly) {
  std::vector<int> idx(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) idx[i] = static_cast<int>(i);
  double scale = 0.0;
  for (size_t i = 0; i < poly.size(); ++i) scale = std::max(scale, dist(poly[i], poly[(i + 1) % poly.size()]));
  const double eps = 1e-12 * scale * scale;

  std::vector<std::array<int, 3>> tris;
  while (idx.size() > 3) {
    const size_t m = idx.size();
    int best = -1;
    double best_quality = -1.0;
    for (size_t k = 0; k < m; ++k) {
      const int ia = idx[(k + m - 1) % m], ib = idx[k], ic = idx[(k + 1) % m];
      const Vec2 a = poly[ia], b = poly[ib], c = poly[ic];
      const double area2 = orient(a, b, c);
      if (area2 <= eps) continue;  // reflex or collinear corner
      bool empty = true;
      for (size_t r = 0; r < m && empty; ++r) {
        const int ip = idx[r];
        if (ip == ia || ip == ib || ip == ic) continue;
        const Vec2 p = poly[ip];
        if (orient(a, b, p) >= -eps && orient(b, c, p) >= -eps && orient(c, a, p) >= -eps) empty = false;
      }
      if (!empty) continue;
      // Prefer well shaped ears: ratio of area to the squared longest side.
      const double longest = std::max({dist(a, b), dist(b, c), dist(c, a)});
      const double quality = area2 / (longest * longest);
      if (quality > best_quality) {
        best_quality = quality;
        best = static_cast<int>(k);
      }
    }
    if (best < 0) throw GeometryError(ErrorCode::DegenerateInput, "polygon cannot be triangulated");
    tris.push_back({idx[(best + m - 1) % m], idx[best], idx[(best + 1) % m]});
    idx.erase(idx.begin() + best);
  }
  if (orient(poly[idx[0]], poly[idx[1]], poly[idx[2]]) <= eps) {
    throw GeometryError(ErrorCode::DegenerateInput, "polygon cannot be triangulated");
  }
  tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

}  // namespace tetramax
