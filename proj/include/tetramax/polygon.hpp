#pragma once

#include <array>
#include <vector>

#include "tetramax/vec.hpp"

namespace tetramax {

double signed_area(const std::vector<Vec2>& poly);
double perimeter(const std::vector<Vec2>& poly);

/// Distance from p to the polygon boundary.
double boundary_distance(const std::vector<Vec2>& poly, Vec2 p);

/// Even-odd containment; points within `tol` of the boundary count as outside
/// when `strict` and inside otherwise.
bool contains(const std::vector<Vec2>& poly, Vec2 p, double tol, bool strict);

/// True when closed segments [a,b] and [c,d] share a point.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

/// No two non-adjacent sides meet and adjacent sides only share their vertex.
bool is_simple(const std::vector<Vec2>& poly);

/// Triangulation of a simple counter-clockwise polygon by ear clipping.
/// Collinear vertices are allowed.
std::vector<std::array<int, 3>> ear_clip(const std::vector<Vec2>& poly);

}  // namespace tetramax
