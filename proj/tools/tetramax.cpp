#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "tetramax/acceptance.hpp"
#include "tetramax/json_io.hpp"
#include "tetramax/parallel.hpp"
#include "tetramax/survey.hpp"
#include "tetramax/svg.hpp"

using namespace tetramax;

namespace {

constexpr int kUsageError = 2;
constexpr int kGeometryError = 3;

std::string read_all(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorCode::InvalidArgument, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw GeometryError(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw GeometryError(ErrorCode::InvalidArgument, std::string("bad JSON: ") + e.what());
  }
}

// A surface document: a bare surface, a {"tetra": ...} object, or a
// construction as printed by `construct` (which also carries x and names).
struct Input {
  Surface surface;
  std::optional<SurfacePoint> x;
  std::vector<std::string> names;
};

Input load_input(const std::string& path) {
  const Json j = parse(read_all(path));
  if (!j.is_object()) throw GeometryError(ErrorCode::InvalidArgument, "expected a JSON object");
  if (j.contains("surface")) {
    Input in{surface_from_json(j.at("surface")), std::nullopt, {}};
    if (j.contains("x")) in.x = point_from_json(j.at("x"));
    if (j.contains("vertex_names") && j.at("vertex_names").is_object()) {
      for (const auto& [k, v] : j.at("vertex_names").items()) {
        const int id = std::stoi(k);
        if (id < 0) continue;
        if (static_cast<int>(in.names.size()) <= id) in.names.resize(id + 1);
        in.names[id] = v.get<std::string>();
      }
    }
    return in;
  }
  return {surface_from_json(j), std::nullopt, {}};
}

// center | vertex:V | centroid:F | F:x,y | {"face":F,"coords":[x,y]}
SurfacePoint parse_point(const std::string& text, const Input& in) {
  const Surface& s = in.surface;
  if (text == "center") {
    if (in.x) return *in.x;
    throw GeometryError(ErrorCode::InvalidArgument, "input carries no designated point");
  }
  if (!text.empty() && text.front() == '{') return point_from_json(parse(text));
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw GeometryError(ErrorCode::InvalidArgument, "bad point: " + text);
  const std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
  try {
    if (head == "vertex") {
      const int v = std::stoi(tail);
      if (v < 0 || v >= static_cast<int>(s.vertices().size())) throw std::out_of_range("vertex");
      return s.vertex_point(v);
    }
    if (head == "centroid") {
      const int f = std::stoi(tail);
      if (f < 0 || f >= s.face_count()) throw std::out_of_range("face");
      Vec2 c{};
      for (Vec2 p : s.face(f).chart) c = c + p;
      return {f, c * (1.0 / s.face(f).chart.size())};
    }
    const int f = std::stoi(head);
    const auto comma = tail.find(',');
    if (comma == std::string::npos || f < 0 || f >= s.face_count()) throw std::out_of_range("point");
    return {f, {std::stod(tail.substr(0, comma)), std::stod(tail.substr(comma + 1))}};
  } catch (const std::logic_error&) {
    throw GeometryError(ErrorCode::InvalidArgument, "bad point: " + text);
  }
}

TiePolicy parse_tie(const std::string& name) {
  if (name == "lowest") return TiePolicy::LowestAngle;
  if (name == "reject") return TiePolicy::Reject;
  throw GeometryError(ErrorCode::InvalidArgument, "unknown tie policy: " + name);
}

// Runs `f(x)`; on NonGenericPosition moves x by a seeded displacement of
// 1e-7 scale within its face and tries again, at most `retries` times.
template <class F>
auto with_jitter(const Surface& s, SurfacePoint x, int retries, Json& log, F&& f) {
  std::mt19937_64 rng(0x6a09e667f3bcc908ull);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0;; ++attempt) {
    try {
      auto result = f(x);
      if (attempt > 0) log = {{"retries", attempt}, {"x", to_json(x)}};
      return result;
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::NonGenericPosition || attempt >= retries) throw;
      x = s.canonical({x.face, x.coords + Vec2{u(rng), u(rng)} * (1e-7 * s.scale())});
    }
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intrinsic geodesics, cut loci and farthest points on tetrahedra"};
  app.require_subcommand(1);

  std::string input = "-", from, to, x_spec, tie = "lowest", out = "-";
  int jitter = 0;

  auto* distance = app.add_subcommand("distance", "Intrinsic distance between two surface points");
  auto* segments = app.add_subcommand("segments", "All shortest segments between two points");
  for (auto* c : {distance, segments}) {
    c->add_option("-i,--input", input, "Surface JSON (- for stdin)");
    c->add_option("--from", from, "Source point")->required();
    c->add_option("--to", to, "Target point")->required();
  }
  double tie_tol = 1e-9;
  segments->add_option("--tie-tol", tie_tol, "Relative length tolerance for ties");

  auto* cutlocus = app.add_subcommand("cutlocus", "Star unfolding and cut locus of a point");
  auto* extrema = app.add_subcommand("extrema", "Local maxima and farthest points of the distance from x");
  auto* render = app.add_subcommand("render", "SVG of the star or source unfolding");
  std::string svg_path;
  bool source_view = false;
  for (auto* c : {cutlocus, extrema, render}) {
    c->add_option("-i,--input", input, "Surface JSON (- for stdin)");
    c->add_option("--x", x_spec, "Point: center, vertex:V, centroid:F, F:x,y or JSON")->required();
    c->add_option("--tie", tie, "Segment tie policy: lowest or reject")->check(CLI::IsMember({"lowest", "reject"}));
    c->add_option("--jitter", jitter, "Retries with a perturbed x on a non-generic point")->check(CLI::NonNegativeNumber);
  }
  cutlocus->add_option("--svg", svg_path, "Also write the star unfolding as SVG");
  render->add_option("-o,--out", out, "SVG output (- for stdout)");
  render->add_flag("--source", source_view, "Render the source unfolding instead");

  auto* fold_cmd = app.add_subcommand("fold", "Validate a glued polygon and fold it to a tetrahedron");
  fold_cmd->add_option("-i,--input", input, "Glued polygon JSON (- for stdin)");

  auto* construct_cmd = app.add_subcommand("construct", "Build one of the explicit constructions");
  std::string kind;
  std::vector<double> params;
  bool list = false;
  construct_cmd->add_option("--kind", kind, "Construction name");
  construct_cmd->add_option("--param", params, "Numeric parameters, in order");
  construct_cmd->add_flag("--list", list, "List construction names");

  auto* survey_cmd = app.add_subcommand("survey", "Randomized census survey");
  SurveyConfig cfg;
  std::string family = "random", csv_path = "-", summary_path;
  survey_cmd->add_option("--seed", cfg.seed, "Master seed");
  survey_cmd->add_option("--samples", cfg.samples, "Number of surfaces")->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--points", cfg.points, "Points per surface")->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--workers", cfg.workers, "Worker threads (0: TETRAMAX_WORKERS or all cores)")
      ->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--family", family, "random, isosceles or thin")
      ->check(CLI::IsMember({"random", "isosceles", "thin"}));
  survey_cmd->add_option("--conditioning", cfg.conditioning, "Minimum face conditioning of random tetrahedra");
  survey_cmd->add_flag("--timing", cfg.timing, "Add a wall-time column");
  survey_cmd->add_option("--csv", csv_path, "CSV output (- for stdout)");
  survey_cmd->add_option("--summary", summary_path, "Summary JSON output (default: stderr)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  AcceptanceOptions acc;
  verify_cmd->add_option("--scale", acc.scale, "Sample count multiplier")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--only", acc.only, "Criterion ids to run");
  verify_cmd->add_option("--seed", acc.seed, "Seed");
  verify_cmd->add_option("--workers", acc.workers, "Worker threads")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*distance || *segments) {
      const Input in = load_input(input);
      const SurfacePoint p = parse_point(from, in), q = parse_point(to, in);
      if (*distance) {
        const GeodesicSegment g = shortest_path(in.surface, p, q);
        print({{"distance", g.length}, {"segment", to_json(g)}});
      } else {
        Json segs = Json::array();
        for (const auto& g : all_segments(in.surface, p, q, tie_tol)) segs.push_back(to_json(g));
        print({{"count", segs.size()}, {"segments", segs}});
      }
    } else if (*cutlocus || *extrema || *render) {
      const Input in = load_input(input);
      const Surface& s = in.surface;
      const TiePolicy policy = parse_tie(tie);
      Json jitter_log;
      if (*extrema) {
        const ExtremumCensus c = with_jitter(s, parse_point(x_spec, in), jitter, jitter_log,
                                             [&](const SurfacePoint& x) { return census(s, x, policy); });
        Json j = to_json(c, in.names);
        if (!jitter_log.is_null()) j["jitter"] = jitter_log;
        print(j);
      } else {
        struct Star {
          StarUnfolding su;
          CutLocusTree tree;
        };
        const Star st = with_jitter(s, parse_point(x_spec, in), jitter, jitter_log, [&](const SurfacePoint& x) {
          StarUnfolding su = star_unfold(s, x, policy);
          CutLocusTree tree = cut_locus(s, su);
          return Star{std::move(su), std::move(tree)};
        });
        if (*render) {
          write_all(out, source_view ? render_source_svg(source_unfold(s, st.su, st.tree))
                                     : render_star_svg(st.su, st.tree, in.names));
        } else {
          Json j = {{"topology", to_string(classify_topology(st.tree))},
                    {"star", to_json(st.su)},
                    {"cut_locus", to_json(st.tree)}};
          if (!jitter_log.is_null()) j["jitter"] = jitter_log;
          if (!svg_path.empty()) write_all(svg_path, render_star_svg(st.su, st.tree, in.names));
          print(j);
        }
      }
    } else if (*fold_cmd) {
      const GluedPolygon g = glued_from_json(parse(read_all(input)));
      const GluingReport report = validate_gluing(g);
      print({{"report", to_json(report)}, {"fold", to_json(fold(g))}});
    } else if (*construct_cmd) {
      if (list) {
        for (const auto& k : construction_kinds()) std::cout << k << '\n';
        return 0;
      }
      if (kind.empty()) {
        std::cerr << "construct: --kind is required\n";
        return kUsageError;
      }
      print(to_json(construct(kind, params)));
    } else if (*survey_cmd) {
      cfg.family = family_from_string(family);
      const auto rows = run_survey(cfg);
      write_all(csv_path, to_csv(rows, cfg.timing));
      const SurveySummary summary = summarize(rows);
      const std::string text = to_json(summary).dump(2) + "\n";
      if (summary_path.empty()) {
        std::cerr << text;
      } else {
        write_all(summary_path, text);
      }
      return summary.ok() ? 0 : 1;
    } else if (*verify_cmd) {
      const auto results = run_acceptance(acc, [](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
      });
      bool ok = !results.empty();
      for (const auto& r : results) ok = ok && r.passed;
      std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << '\n';
      return ok ? 0 : 1;
    }
  } catch (const GeometryError& e) {
    std::cerr << error_json(e).dump() << '\n';
    return kGeometryError;
  }
  return 0;
}
