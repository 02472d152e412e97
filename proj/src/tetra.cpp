#include "tetramax/tetra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tetramax/error.hpp"

namespace tetramax {
namespace {

double face_angle(Vec3 apex, Vec3 p, Vec3 q) {
  const Vec3 u = p - apex;
  const Vec3 v = q - apex;
  return std::atan2(norm(cross(u, v)), dot(u, v));
}

std::array<std::array<int, 4>, 24> all_permutations() {
  std::array<std::array<int, 4>, 24> out{};
  std::array<int, 4> p{0, 1, 2, 3};
  int k = 0;
  do {
    out[k++] = p;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::array<std::array<int, 4>, 24>& permutations() {
  static const auto perms = all_permutations();
  return perms;
}

double triangle_area(double a, double b, double c) {
  // Kahan's stable Heron formula.
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double x = s[0], y = s[1], z = s[2];
  const double prod = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return 0.25 * std::sqrt(std::max(0.0, prod));
}

constexpr double kFlatVolumeRatio = 1e-8;
constexpr double kDegenerateVolumeRatio = 1e-10;

}  // namespace

int edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  if (i < 0 || j > 3 || i == j) throw GeometryError(ErrorCode::InvalidArgument, "bad vertex pair");
  return table[i][j];
}

double tetra_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return dot(b - a, cross(c - a, d - a)) / 6.0;
}

Tetra Tetra::from_vertices(Vec3 a, Vec3 b, Vec3 c, Vec3 d) {
  Tetra t;
  t.vertices_ = {a, b, c, d};
  for (int e = 0; e < 6; ++e) {
    t.lengths_[e] = dist(t.vertices_[kEdgeVertices[e][0]], t.vertices_[kEdgeVertices[e][1]]);
  }
  const double signed_volume = tetra_volume(a, b, c, d);
  const double longest = t.longest_edge();
  if (!(std::abs(signed_volume) >= kDegenerateVolumeRatio * longest * longest * longest)) {
    throw GeometryError(ErrorCode::DegenerateInput, "vertices are (nearly) coplanar");
  }
  if (signed_volume > 0) {
    t.faces_ = {{{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}}};
  } else {
    t.faces_ = {{{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}};
  }
  t.cone_angles_.fill(0.0);
  for (const auto& f : t.faces_) {
    for (int k = 0; k < 3; ++k) {
      const int v = f[k];
      t.cone_angles_[v] += face_angle(t.vertices_[v], t.vertices_[f[(k + 1) % 3]],
                                      t.vertices_[f[(k + 2) % 3]]);
    }
  }
  return t;
}

double Tetra::longest_edge() const { return *std::max_element(lengths_.begin(), lengths_.end()); }

double Tetra::volume() const {
  return std::abs(tetra_volume(vertices_[0], vertices_[1], vertices_[2], vertices_[3]));
}

double normalized_volume(const Tetra& t) {
  const double l = t.longest_edge();
  return t.volume() / (l * l * l / (6.0 * std::sqrt(2.0)));
}

std::vector<Vec2> FlatDouble::polygon() const {
  std::vector<Vec2> out;
  for (int i : hull) out.push_back(points[i]);
  return out;
}

double cayley_menger_determinant(const EdgeLengths& l) {
  double m[5][5] = {};
  for (int i = 1; i < 5; ++i) m[0][i] = m[i][0] = 1.0;
  for (int e = 0; e < 6; ++e) {
    const int i = kEdgeVertices[e][0] + 1;
    const int j = kEdgeVertices[e][1] + 1;
    m[i][j] = m[j][i] = l[e] * l[e];
  }
  // Gaussian elimination with partial pivoting.
  double det = 1.0;
  for (int c = 0; c < 5; ++c) {
    int piv = c;
    for (int r = c + 1; r < 5; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      for (int k = 0; k < 5; ++k) std::swap(m[c][k], m[piv][k]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 5; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

EdgeLengths permute_lengths(const EdgeLengths& lengths, const std::array<int, 4>& perm) {
  EdgeLengths out{};
  for (int e = 0; e < 6; ++e) {
    out[e] = lengths[edge_index(perm[kEdgeVertices[e][0]], perm[kEdgeVertices[e][1]])];
  }
  return out;
}

Embedding cayley_menger_embed(const EdgeLengths& lengths) {
  const double longest = *std::max_element(lengths.begin(), lengths.end());
  if (!(longest > 0.0) || !std::isfinite(longest)) {
    throw GeometryError(ErrorCode::MetricInfeasible, "edge lengths must be positive and finite");
  }
  for (double l : lengths) {
    if (!(l > 0.0)) throw GeometryError(ErrorCode::MetricInfeasible, "edge lengths must be positive");
  }
  static constexpr int kFaces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  const double slack = 1e-12 * longest;
  int best_face = 0;
  double best_area = -1.0;
  for (int f = 0; f < 4; ++f) {
    const double a = lengths[edge_index(kFaces[f][0], kFaces[f][1])];
    const double b = lengths[edge_index(kFaces[f][0], kFaces[f][2])];
    const double c = lengths[edge_index(kFaces[f][1], kFaces[f][2])];
    if (a + b < c - slack || a + c < b - slack || b + c < a - slack) {
      throw GeometryError(ErrorCode::MetricInfeasible, "face triangle inequality violated");
    }
    const double area = triangle_area(a, b, c);
    if (area > best_area) {
      best_area = area;
      best_face = f;
    }
  }
  // Relabel so that the largest face is (0,1,2).
  std::array<int, 4> perm{kFaces[best_face][0], kFaces[best_face][1], kFaces[best_face][2], 0};
  perm[3] = 6 - perm[0] - perm[1] - perm[2];
  const EdgeLengths l = permute_lengths(lengths, perm);
  auto d = [&](int i, int j) { return l[edge_index(i, j)]; };

  const double d01 = d(0, 1), d02 = d(0, 2), d03 = d(0, 3);
  const double x2 = (d01 * d01 + d02 * d02 - d(1, 2) * d(1, 2)) / (2 * d01);
  const double y2 = std::sqrt(std::max(0.0, d02 * d02 - x2 * x2));
  if (!(y2 > 1e-12 * longest)) {
    throw GeometryError(ErrorCode::MetricInfeasible, "all faces are degenerate");
  }
  const double x3 = (d01 * d01 + d03 * d03 - d(1, 3) * d(1, 3)) / (2 * d01);
  const double y3 = (d02 * d02 + d03 * d03 - d(2, 3) * d(2, 3) - 2 * x2 * x3) / (2 * y2);
  const double z2 = d03 * d03 - x3 * x3 - y3 * y3;
  if (z2 < -1e-10 * longest * longest) {
    throw GeometryError(ErrorCode::MetricInfeasible, "Cayley-Menger determinant is negative");
  }
  const double z = std::sqrt(std::max(0.0, z2));
  const double volume = best_area * z / 3.0;

  std::array<Vec3, 4> placed{Vec3{0, 0, 0}, Vec3{d01, 0, 0}, Vec3{x2, y2, 0}, Vec3{x3, y3, z}};
  std::array<Vec3, 4> original{};
  for (int k = 0; k < 4; ++k) original[perm[k]] = placed[k];

  if (volume < kFlatVolumeRatio * longest * longest * longest) {
    FlatDouble flat;
    for (int k = 0; k < 4; ++k) flat.points[k] = {original[k].x, original[k].y};
    // Convex hull of four points (gift wrapping).
    const auto& pts = flat.points;
    int start = 0;
    for (int k = 1; k < 4; ++k) {
      if (pts[k].x < pts[start].x || (pts[k].x == pts[start].x && pts[k].y < pts[start].y)) start = k;
    }
    int cur = start;
    do {
      flat.hull.push_back(cur);
      int next = (cur + 1) % 4;
      for (int k = 0; k < 4; ++k) {
        if (k == cur) continue;
        const double c = cross(pts[next] - pts[cur], pts[k] - pts[cur]);
        if (c < -1e-12 * longest * longest ||
            (std::abs(c) <= 1e-12 * longest * longest &&
             dist(pts[k], pts[cur]) > dist(pts[next], pts[cur]))) {
          next = k;
        }
      }
      cur = next;
    } while (cur != start && flat.hull.size() < 4);
    return flat;
  }
  return Tetra::from_vertices(original[0], original[1], original[2], original[3]);
}

CanonicalClass canonicalize(const EdgeLengths& lengths) {
  const double longest = *std::max_element(lengths.begin(), lengths.end());
  EdgeLengths normalized{};
  for (int e = 0; e < 6; ++e) normalized[e] = lengths[e] / longest;
  CanonicalClass best;
  bool first = true;
  for (const auto& p : permutations()) {
    const EdgeLengths cand = permute_lengths(normalized, p);
    if (first || cand < best.lengths) {
      best.lengths = cand;
      best.relabeling = p;
      first = false;
    }
  }
  return best;
}

CanonicalClass canonicalize(const Tetra& t) { return canonicalize(t.edge_lengths()); }

double class_distance(const CanonicalClass& a, const CanonicalClass& b) {
  double best = 1e300;
  for (const auto& p : permutations()) {
    const EdgeLengths cand = permute_lengths(b.lengths, p);
    double m = 0.0;
    for (int e = 0; e < 6; ++e) m = std::max(m, std::abs(a.lengths[e] - cand[e]));
    best = std::min(best, m);
  }
  return best;
}

Vec3 random_in_unit_ball(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const Vec3 p{u(rng), u(rng), u(rng)};
    if (dot(p, p) <= 1.0) return p;
  }
}

Tetra random_tetra(std::mt19937_64& rng, double conditioning, int max_attempts) {
  if (!(conditioning > 0.0 && conditioning < 1.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "conditioning must lie in (0, 1)");
  }
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const Vec3 a = random_in_unit_ball(rng);
    const Vec3 b = random_in_unit_ball(rng);
    const Vec3 c = random_in_unit_ball(rng);
    const Vec3 d = random_in_unit_ball(rng);
    const double lmax = std::max({dist(a, b), dist(a, c), dist(a, d), dist(b, c), dist(b, d), dist(c, d)});
    const double nv = std::abs(tetra_volume(a, b, c, d)) / (lmax * lmax * lmax / (6.0 * std::sqrt(2.0)));
    if (nv >= conditioning) return Tetra::from_vertices(a, b, c, d);
  }
  throw GeometryError(ErrorCode::SamplerExhausted, "rejection budget exhausted");
}

Tetra random_tetra(std::uint64_t seed, double conditioning, int max_attempts) {
  std::mt19937_64 rng(seed);
  return random_tetra(rng, conditioning, max_attempts);
}

}  // namespace tetramax
