#include "tetramax/json_io.hpp"

namespace tetramax {
namespace {

Vec2 vec2_of(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw GeometryError(ErrorCode::InvalidArgument, "expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Vec3 vec3_of(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw GeometryError(ErrorCode::InvalidArgument, "expected [x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<Vec2> polygon_of(const Json& j) {
  std::vector<Vec2> out;
  for (const Json& p : j) out.push_back(vec2_of(p));
  return out;
}

Json polyline(const std::vector<Vec2>& pts) {
  Json a = Json::array();
  for (Vec2 p : pts) a.push_back(to_json(p));
  return a;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw GeometryError(ErrorCode::InvalidArgument, std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Json to_json(Vec2 p) { return Json::array({p.x, p.y}); }
Json to_json(const Vec3& p) { return Json::array({p.x, p.y, p.z}); }

Json to_json(const Tetra& t) {
  Json v = Json::array();
  for (int k = 0; k < 4; ++k) v.push_back(to_json(t.vertex(k)));
  return {{"vertices", v}};
}

Json to_json(const CanonicalClass& c) {
  return {{"lengths", std::vector<double>(c.lengths.begin(), c.lengths.end())},
          {"relabeling", std::vector<int>(c.relabeling.begin(), c.relabeling.end())}};
}

Json to_json(const FlatDouble& f) {
  Json pts = Json::array();
  for (Vec2 p : f.points) pts.push_back(to_json(p));
  return {{"points", pts}, {"hull", f.hull}, {"quadrilateral", f.is_quadrilateral()}};
}

Json to_json(const Embedding& e) {
  if (const Tetra* t = std::get_if<Tetra>(&e)) {
    Json j = to_json(*t);
    j["shape"] = "tetra";
    return j;
  }
  Json j = to_json(std::get<FlatDouble>(e));
  j["shape"] = "flat";
  return j;
}

Json to_json(const Surface& s) {
  Json faces = Json::array();
  for (const Face& f : s.faces()) faces.push_back({{"chart", polyline(f.chart)}, {"vertices", f.vertex}});
  Json edges = Json::array();
  for (int f = 0; f < s.face_count(); ++f) {
    for (int k = 0; k < s.face(f).sides(); ++k) {
      const SideRef t = s.twin(f, k);
      if (f < t.face || (f == t.face && k < t.side)) edges.push_back({f, k, t.face, t.side});
    }
  }
  Json cones = Json::array();
  for (int v : s.cone_points()) cones.push_back(Json::array({v, s.vertex(v).angle}));
  Json j = {{"kind", to_string(s.kind())}, {"faces", faces}, {"edges", edges}, {"cones", cones}};
  if (s.tetra()) j["tetra"] = to_json(*s.tetra());
  if (s.kind() == SurfaceKind::Double) j["polygon"] = polyline(s.polygon());
  return j;
}

Json to_json(const SurfacePoint& p) { return {{"face", p.face}, {"coords", to_json(p.coords)}}; }

Json to_json(const GeodesicSegment& g) {
  Json crossings = Json::array();
  for (const SideRef& r : g.crossings) crossings.push_back({r.face, r.side});
  return {{"source", to_json(g.source)},
          {"target", to_json(g.target)},
          {"length", g.length},
          {"edges", crossings},
          {"source_angle", g.source_angle},
          {"target_angle", g.target_angle},
          {"source_direction", to_json(g.source_direction)},
          {"target_direction", to_json(g.target_direction)},
          {"unfolded", polyline(g.unfolded)}};
}

Json to_json(const GluedPolygon& g) {
  Json pairs = Json::array();
  for (const Pairing& p : g.pairings) pairs.push_back({p.i, p.j, p.orient});
  return {{"vertices", polyline(g.vertices)}, {"pairings", pairs}};
}

Json to_json(const GluingReport& r) {
  Json classes = Json::array();
  for (const GluedPoint& c : r.classes) {
    classes.push_back({{"corners", c.corners}, {"angle", c.angle}, {"cone", c.is_cone()}});
  }
  Json cones = Json::array();
  for (int c : r.cones) {
    cones.push_back({{"class", c}, {"angle", r.classes[c].angle}, {"curvature", r.classes[c].curvature()}});
  }
  return {{"valid", true}, {"classes", classes}, {"cones", cones}, {"total_curvature", r.total_curvature}};
}

Json to_json(const FoldResult& f) {
  return {{"report", to_json(f.report)},
          {"cone_class", std::vector<int>(f.cone_class.begin(), f.cone_class.end())},
          {"lengths", std::vector<double>(f.lengths.begin(), f.lengths.end())},
          {"shape", to_json(f.shape)}};
}

Json to_json(const StarUnfolding& su) {
  return {{"x", to_json(su.x)},
          {"x_angle", su.x_angle},
          {"directions", su.phi},
          {"lengths", su.lengths},
          {"vertex_ids", su.vertex_ids},
          {"sources", polyline(su.sources)},
          {"vertex_images", polyline(su.vertex_images)},
          {"boundary", polyline(su.boundary)},
          {"area", su.area()},
          {"generic", su.generic}};
}

Json to_json(const CutLocusTree& t) {
  Json nodes = Json::array();
  for (const CutNode& n : t.nodes) {
    nodes.push_back({{"point", to_json(n.point)},
                     {"planar", to_json(n.planar)},
                     {"distance", n.distance},
                     {"degree", n.degree},
                     {"vertex", n.vertex},
                     {"total_angle", n.total_angle}});
  }
  Json edges = Json::array();
  for (const CutEdge& e : t.edges) {
    edges.push_back({{"a", e.a},
                     {"b", e.b},
                     {"length", e.length},
                     {"polyline", polyline({t.nodes[e.a].planar, t.nodes[e.b].planar})}});
  }
  return {{"topology", to_string(t.topology)}, {"nodes", nodes}, {"edges", edges}, {"length", t.total_length()}};
}

Json to_json(const Extremum& e, const std::vector<std::string>& names) {
  Json j = {{"point", to_json(e.point)}, {"distance", e.distance}, {"node", e.node}, {"margin", e.margin}};
  if (e.vertex >= 0) {
    j["vertex"] = e.vertex;
    if (e.vertex < static_cast<int>(names.size()) && !names[e.vertex].empty()) j["name"] = names[e.vertex];
  }
  return j;
}

Json to_json(const ExtremumCensus& c, const std::vector<std::string>& names) {
  Json m = Json::array(), f = Json::array();
  for (const Extremum& e : c.M) m.push_back(to_json(e, names));
  for (const Extremum& e : c.F) f.push_back(to_json(e, names));
  return {{"x", to_json(c.x)},
          {"topology", to_string(c.topology)},
          {"M", m},
          {"F", f},
          {"count_M", c.M.size()},
          {"count_F", c.F.size()},
          {"radius", c.radius},
          {"min_margin", c.min_margin},
          {"m_steiner_leaves", c.m_steiner_leaves},
          {"f_steiner_is_path", c.f_steiner_is_path},
          {"generic", c.generic},
          {"tree", to_json(c.tree)}};
}

Json to_json(const Example& ex) {
  Json j = {{"kind", ex.kind}, {"surface", to_json(*ex.surface)}};
  if (ex.x) j["x"] = to_json(*ex.x);
  if (ex.polygon) j["polygon"] = to_json(*ex.polygon);
  if (ex.polygon_x) j["polygon_x"] = to_json(*ex.polygon_x);
  if (ex.folded) j["fold"] = to_json(*ex.folded);
  Json names = Json::object();
  for (int v = 0; v < static_cast<int>(ex.vertex_names.size()); ++v) {
    if (!ex.vertex_names[v].empty()) names[std::to_string(v)] = ex.vertex_names[v];
  }
  j["vertex_names"] = names;
  return j;
}

Json to_json(const F3Instance& f) {
  return {{"example", to_json(f.example)},
          {"delta", std::vector<double>(f.delta.begin(), f.delta.end())},
          {"t", f.t},
          {"excess_w", f.excess_w},
          {"excess_u", f.excess_u},
          {"notch_residuals", std::vector<double>(f.notch_residuals.begin(), f.notch_residuals.end())},
          {"side_residuals", std::vector<double>(f.side_residuals.begin(), f.side_residuals.end())},
          {"angle_residuals", std::vector<double>(f.angle_residuals.begin(), f.angle_residuals.end())},
          {"max_residual", f.max_residual()}};
}

Json to_json(const M5Result& r) {
  Json j = {{"success", r.success},
            {"candidates", r.candidates},
            {"closed", r.closed},
            {"foldable", r.foldable},
            {"best_M", r.best_m},
            {"best_margin", r.best_margin},
            {"beta", r.beta},
            {"g", r.g},
            {"h", r.h},
            {"M_histogram", r.m_histogram},
            {"perturbation_checked", r.perturbation_checked},
            {"perturbation_retained", r.perturbation_retained}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.example) j["example"] = to_json(*r.example);
  return j;
}

Json to_json(const AntipodeSearchResult& r) {
  Json j = {{"success", r.success}, {"x", to_json(r.x)}, {"gap", r.gap}, {"evaluations", r.evaluations}};
  if (r.census) j["census"] = to_json(*r.census);
  return j;
}

Json error_json(const GeometryError& e) {
  std::string msg = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  return {{"error", std::string(to_string(e.code()))}, {"message", msg}};
}

Tetra tetra_from_json(const Json& j) {
  return guarded([&] {
    const Json& v = j.at("vertices");
    if (!v.is_array() || v.size() != 4) throw GeometryError(ErrorCode::InvalidArgument, "expected four vertices");
    return Tetra::from_vertices(vec3_of(v[0]), vec3_of(v[1]), vec3_of(v[2]), vec3_of(v[3]));
  });
}

Surface surface_from_json(const Json& j) {
  return guarded([&]() -> Surface {
    if (j.contains("tetra")) return Surface::from_tetra(tetra_from_json(j.at("tetra")));
    if (j.contains("polygon") && j.at("polygon").is_array()) return Surface::double_of(polygon_of(j.at("polygon")));
    if (j.contains("pairings")) return glued_surface(glued_from_json(j));
    if (j.contains("lengths")) {
      EdgeLengths l{};
      const Json& a = j.at("lengths");
      if (!a.is_array() || a.size() != 6) throw GeometryError(ErrorCode::InvalidArgument, "expected six lengths");
      for (int e = 0; e < 6; ++e) l[e] = a[e].get<double>();
      const Embedding emb = cayley_menger_embed(l);
      if (const Tetra* t = std::get_if<Tetra>(&emb)) return Surface::from_tetra(*t);
      const FlatDouble& f = std::get<FlatDouble>(emb);
      if (!f.is_quadrilateral()) {
        throw GeometryError(ErrorCode::DegenerateInput, "flat metric with a point inside the triangle of the others");
      }
      return Surface::double_of(f.polygon());
    }
    if (j.contains("faces")) {
      std::vector<Face> faces;
      for (const Json& f : j.at("faces")) {
        Face face;
        face.chart = polygon_of(f.at("chart"));
        face.vertex = f.at("vertices").get<std::vector<int>>();
        faces.push_back(face);
      }
      std::vector<std::vector<SideRef>> twin(faces.size());
      for (std::size_t f = 0; f < faces.size(); ++f) twin[f].assign(faces[f].chart.size(), SideRef{});
      auto slot = [&](int f, int s) -> SideRef& {
        if (f < 0 || f >= static_cast<int>(faces.size()) || s < 0 || s >= faces[f].sides()) {
          throw GeometryError(ErrorCode::InvalidArgument, "edge refers to a missing side");
        }
        return twin[f][s];
      };
      for (const Json& e : j.at("edges")) {
        const int f = e.at(0), s = e.at(1), g = e.at(2), t = e.at(3);
        slot(f, s) = {g, t};
        slot(g, t) = {f, s};
      }
      return Surface::assemble(SurfaceKind::Glued, std::move(faces), std::move(twin));
    }
    if (j.contains("vertices")) return Surface::from_tetra(tetra_from_json(j));
    throw GeometryError(ErrorCode::InvalidArgument, "unrecognized surface document");
  });
}

SurfacePoint point_from_json(const Json& j) {
  return guarded([&] { return SurfacePoint{j.at("face").get<int>(), vec2_of(j.at("coords"))}; });
}

GluedPolygon glued_from_json(const Json& j) {
  return guarded([&] {
    GluedPolygon g;
    g.vertices = polygon_of(j.at("vertices"));
    for (const Json& p : j.at("pairings")) {
      if (!p.is_array() || p.size() < 2 || p.size() > 3) {
        throw GeometryError(ErrorCode::InvalidArgument, "pairing must be [i, j] or [i, j, orient]");
      }
      g.pairings.push_back({p[0].get<int>(), p[1].get<int>(), p.size() == 3 ? p[2].get<int>() : -1});
    }
    return g;
  });
}

}  // namespace tetramax
