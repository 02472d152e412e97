#pragma once

#include <cmath>
#include <random>

#include "tetramax/surface.hpp"
#include "tetramax/tetra.hpp"

namespace tetramax::testing {

inline Tetra regular_tetra() {
  return Tetra::from_vertices({0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0},
                              {0.5, std::sqrt(3.0) / 6, std::sqrt(2.0 / 3.0)});
}

/// Face of `s` whose vertex ids are exactly {a, b, c}.
inline int face_with(const Surface& s, int a, int b, int c) {
  for (int f = 0; f < s.face_count(); ++f) {
    const auto& v = s.face(f).vertex;
    int hits = 0;
    for (int id : v) hits += (id == a || id == b || id == c);
    if (hits == 3) return f;
  }
  return -1;
}

inline SurfacePoint face_centroid(const Surface& s, int f) {
  Vec2 c{};
  for (const Vec2& p : s.face(f).chart) c = c + p;
  return {f, c / static_cast<double>(s.face(f).sides())};
}

inline std::vector<Vec2> rectangle(double a, double b) {
  return {{-a / 2, -b / 2}, {a / 2, -b / 2}, {a / 2, b / 2}, {-a / 2, b / 2}};
}

}  // namespace tetramax::testing
