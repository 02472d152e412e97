#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "tetramax/vec.hpp"

namespace tetramax {

/// Index of the edge joining vertices i < j in the fixed order
/// (01, 02, 03, 12, 13, 23).
int edge_index(int i, int j);
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

using EdgeLengths = std::array<double, 6>;

/// A non-degenerate tetrahedron with labeled vertices 0..3 (a, b, c, d).
class Tetra {
 public:
  /// Throws DegenerateInput when volume < 1e-10 * (longest edge)^3.
  static Tetra from_vertices(Vec3 a, Vec3 b, Vec3 c, Vec3 d);

  const std::array<Vec3, 4>& vertices() const { return vertices_; }
  Vec3 vertex(int v) const { return vertices_[v]; }
  const EdgeLengths& edge_lengths() const { return lengths_; }
  double length(int i, int j) const { return lengths_[edge_index(i, j)]; }
  double longest_edge() const;
  double volume() const;

  /// Total angle theta_v: sum of the three face angles at v.
  double cone_angle(int v) const { return cone_angles_[v]; }
  /// omega_v = 2 pi - theta_v.
  double curvature(int v) const { return kTwoPi - cone_angles_[v]; }

  /// The four faces as vertex triples, each ordered counter-clockwise when seen
  /// from outside.
  const std::array<std::array<int, 3>, 4>& faces() const { return faces_; }

 private:
  Tetra() = default;

  std::array<Vec3, 4> vertices_{};
  EdgeLengths lengths_{};
  std::array<double, 4> cone_angles_{};
  std::array<std::array<int, 3>, 4> faces_{};
};

double tetra_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// Volume divided by that of the regular tetrahedron with the same longest
/// edge; 1 for the regular tetrahedron, 0 for flat configurations.
double normalized_volume(const Tetra& t);

/// Planar quadruple of points realizing a metric with vanishing
/// Cayley-Menger determinant. `hull` lists the indices in counter-clockwise
/// convex-hull order; when one point lies inside the triangle of the others
/// the hull has three entries.
struct FlatDouble {
  std::array<Vec2, 4> points{};
  std::vector<int> hull;

  bool is_quadrilateral() const { return hull.size() == 4; }
  std::vector<Vec2> polygon() const;
};

using Embedding = std::variant<Tetra, FlatDouble>;

/// 288 V^2 as a function of the six edge lengths.
double cayley_menger_determinant(const EdgeLengths& lengths);

/// Builds a tetrahedron from its six edge lengths (order 01,02,03,12,13,23).
/// Returns FlatDouble when the volume is below 1e-8 * L^3; throws
/// MetricInfeasible when a face violates the triangle inequality or the
/// determinant is negative beyond tolerance.
Embedding cayley_menger_embed(const EdgeLengths& lengths);

/// Representative of a tetrahedron modulo isometry, reflection and homothety.
struct CanonicalClass {
  EdgeLengths lengths{};  // normalized to max 1, lexicographically minimal
  std::array<int, 4> relabeling{};  // canonical label k came from source label relabeling[k]
};

CanonicalClass canonicalize(const EdgeLengths& lengths);
CanonicalClass canonicalize(const Tetra& t);

/// Proxy metric on the space of tetrahedra: max-norm between normalized
/// length vectors, minimized over the 24 relabelings of the second argument.
double class_distance(const CanonicalClass& a, const CanonicalClass& b);

/// Relabels a length vector: result(i,j) = lengths(perm[i], perm[j]).
EdgeLengths permute_lengths(const EdgeLengths& lengths, const std::array<int, 4>& perm);

/// Vertices i.i.d. uniform in the unit ball, rejected until the normalized
/// volume reaches `conditioning`. Throws SamplerExhausted after
/// `max_attempts` rejections.
Tetra random_tetra(std::mt19937_64& rng, double conditioning, int max_attempts = 20000);
Tetra random_tetra(std::uint64_t seed, double conditioning, int max_attempts = 20000);

Vec3 random_in_unit_ball(std::mt19937_64& rng);

}  // namespace tetramax
