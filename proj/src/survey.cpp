#include "tetramax/survey.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "tetramax/parallel.hpp"

namespace tetramax {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Example random_isosceles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(0.0, 1.0), uy(0.0, 2.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Vec2 c{ux(rng), uy(rng)};
    // Acute iff c is outside the circle on the base as diameter.
    if (dist(c, {0.5, 0.0}) <= 0.5 + 1e-3) continue;
    return isosceles({0, 0}, {1, 0}, c);
  }
  throw GeometryError(ErrorCode::SamplerExhausted, "no acute triangle drawn");
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Random: return "random";
    case Family::Isosceles: return "isosceles";
    case Family::Thin: return "thin";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "random") return Family::Random;
  if (name == "isosceles") return Family::Isosceles;
  if (name == "thin") return Family::Thin;
  throw GeometryError(ErrorCode::InvalidArgument, "unknown family: " + name);
}

std::mt19937_64 sample_rng(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

Example survey_surface(const SurveyConfig& config, int index) {
  std::mt19937_64 rng = sample_rng(config.seed, index);
  switch (config.family) {
    case Family::Random: {
      Example ex;
      ex.kind = "random";
      ex.surface = Surface::from_tetra(random_tetra(rng, config.conditioning));
      ex.vertex_names = {"v1", "v2", "v3", "v4"};
      return ex;
    }
    case Family::Isosceles:
      return random_isosceles(rng);
    case Family::Thin: {
      std::uniform_real_distribution<double> ue(0.01, thin_tetra_max_eps()), uh(0.05, kPi / 2 - 0.05);
      const double eps = ue(rng), h = uh(rng);
      return thin_tetra(eps, h);
    }
  }
  throw GeometryError(ErrorCode::Internal, "unhandled family");
}

std::vector<SurveyRow> run_survey(const SurveyConfig& config) {
  if (config.samples < 0 || config.points < 0) {
    throw GeometryError(ErrorCode::InvalidArgument, "sample and point counts must be non-negative");
  }
  std::vector<std::vector<SurveyRow>> per_sample(config.samples);
  parallel_for(config.samples, worker_count(config.workers), [&](int i) {
    const Example ex = survey_surface(config, i);
    const Surface& s = *ex.surface;
    EdgeLengths lengths{};
    if (s.tetra()) {
      lengths = canonicalize(*s.tetra()).lengths;
    } else if (s.cone_points().size() == 4) {
      const auto& c = s.cone_points();
      for (int e = 0; e < 6; ++e) {
        lengths[e] = shortest_distance(s, s.vertex_point(c[kEdgeVertices[e][0]]), s.vertex_point(c[kEdgeVertices[e][1]]));
      }
      lengths = canonicalize(lengths).lengths;
    }
    // Points use their own stream so that the surface draw is unaffected by `points`.
    std::mt19937_64 rng = sample_rng(config.seed ^ 0x9e3779b97f4a7c15ull, i);
    for (int p = 0; p < config.points; ++p) {
      SurveyRow row;
      row.seed = config.seed;
      row.sample = i;
      row.point = p;
      row.lengths = lengths;
      row.x = random_surface_point(s, rng);
      const auto start = std::chrono::steady_clock::now();
      try {
        const ExtremumCensus c = census(s, row.x);
        row.topology = to_string(c.topology);
        row.count_m = static_cast<int>(c.M.size());
        row.count_f = static_cast<int>(c.F.size());
        row.radius = c.radius;
        row.min_margin = c.min_margin;
        row.m_steiner_leaves = c.m_steiner_leaves;
        row.f_path = c.f_steiner_is_path;
        for (const Extremum& f : c.F) {
          bool found = false;
          for (const Extremum& m : c.M) found = found || m.node == f.node;
          row.f_in_m = row.f_in_m && found;
        }
      } catch (const GeometryError& e) {
        row.topology = "error";
        row.error = std::string(to_string(e.code()));
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      per_sample[i].push_back(row);
    }
  });
  std::vector<SurveyRow> rows;
  for (auto& v : per_sample) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

std::string csv_header(bool timing) {
  std::string h =
      "# tetramax survey csv v1\n"
      "seed,sample,point,l0,l1,l2,l3,l4,l5,face,x,y,topology,count_M,count_F,radius,min_margin,"
      "m_steiner_leaves,f_path,f_in_m,error";
  if (timing) h += ",wall_ms";
  return h + "\n";
}

std::string csv_line(const SurveyRow& r, bool timing) {
  std::ostringstream out;
  out << r.seed << ',' << r.sample << ',' << r.point;
  for (double l : r.lengths) out << ',' << num(l);
  out << ',' << r.x.face << ',' << num(r.x.coords.x) << ',' << num(r.x.coords.y) << ',' << r.topology << ','
      << r.count_m << ',' << r.count_f << ',' << num(r.radius) << ',' << num(r.min_margin) << ','
      << r.m_steiner_leaves << ',' << (r.f_path ? 1 : 0) << ',' << (r.f_in_m ? 1 : 0) << ',' << r.error;
  if (timing) out << ',' << num(r.wall_ms);
  out << '\n';
  return out.str();
}

std::string to_csv(const std::vector<SurveyRow>& rows, bool timing) {
  std::string out = csv_header(timing);
  for (const SurveyRow& r : rows) out += csv_line(r, timing);
  return out;
}

SurveySummary summarize(const std::vector<SurveyRow>& rows) {
  if (rows.empty()) throw GeometryError(ErrorCode::EmptyInput, "no survey rows");
  SurveySummary s;
  for (int k = 1; k <= 6; ++k) s.m_at_least[k] = 0;
  for (int k = 1; k <= 5; ++k) s.f_at_least[k] = 0;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    const SurveyRow& r = rows[i];
    ++s.rows;
    ++s.topology[r.topology];
    if (!r.error.empty()) {
      ++s.errors;
      continue;
    }
    s.max_m = std::max(s.max_m, r.count_m);
    s.max_f = std::max(s.max_f, r.count_f);
    for (auto& [k, n] : s.m_at_least) n += r.count_m >= k;
    for (auto& [k, n] : s.f_at_least) n += r.count_f >= k;
    if (r.count_m > 5 || r.count_f > 4 || !r.f_in_m || r.m_steiner_leaves > 3 || !r.f_path) {
      s.violations.push_back(i);
    }
  }
  return s;
}

Json to_json(const SurveySummary& s) {
  Json topo = Json::object();
  for (const auto& [k, n] : s.topology) topo[k] = n;
  Json m = Json::object(), f = Json::object();
  for (const auto& [k, n] : s.m_at_least) m[std::to_string(k)] = n;
  for (const auto& [k, n] : s.f_at_least) f[std::to_string(k)] = n;
  return {{"rows", s.rows},
          {"errors", s.errors},
          {"topology", topo},
          {"max_M", s.max_m},
          {"max_F", s.max_f},
          {"M_at_least", m},
          {"F_at_least", f},
          {"violations", s.violations},
          {"ok", s.ok()}};
}

}  // namespace tetramax
