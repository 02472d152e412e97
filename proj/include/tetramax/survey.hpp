#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tetramax/json_io.hpp"

namespace tetramax {

enum class Family { Random, Isosceles, Thin };
std::string to_string(Family f);
Family family_from_string(const std::string& name);  // throws InvalidArgument

struct SurveyConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  int points = 20;
  int workers = 0;
  double conditioning = 0.05;
  Family family = Family::Random;
  bool timing = false;  // adds a wall-time column; breaks byte-identical output
};

/// One census. Rows depend only on (seed, sample, point, configuration).
struct SurveyRow {
  std::uint64_t seed = 0;
  int sample = 0;
  int point = 0;
  EdgeLengths lengths{};  // canonical class
  SurfacePoint x;
  std::string topology;   // H, X, Y, I, or "error"
  int count_m = 0;
  int count_f = 0;
  double radius = 0.0;
  double min_margin = 0.0;
  int m_steiner_leaves = 0;
  bool f_path = true;
  bool f_in_m = true;
  double wall_ms = 0.0;
  std::string error;
};

/// Generator for sample `index` of a run seeded with `seed`.
std::mt19937_64 sample_rng(std::uint64_t seed, int index);

/// The surface of sample `index` together with its vertex names.
Example survey_surface(const SurveyConfig& config, int index);

std::vector<SurveyRow> run_survey(const SurveyConfig& config);

std::string csv_header(bool timing);
std::string csv_line(const SurveyRow& row, bool timing);
std::string to_csv(const std::vector<SurveyRow>& rows, bool timing);

struct SurveySummary {
  int rows = 0;
  int errors = 0;
  std::map<std::string, int> topology;
  int max_m = 0;
  int max_f = 0;
  std::map<int, int> m_at_least;  // k -> rows with #M >= k, k = 1..6
  std::map<int, int> f_at_least;  // k -> rows with #F >= k, k = 1..5
  /// Rows breaking #M <= 5, #F <= 4, F in M, at most three Steiner leaves
  /// for M, or a path for F.
  std::vector<int> violations;
  bool ok() const { return violations.empty(); }
};

/// Throws EmptyInput on an empty stream.
SurveySummary summarize(const std::vector<SurveyRow>& rows);
Json to_json(const SurveySummary& s);

}  // namespace tetramax
