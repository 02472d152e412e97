#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tetramax/constructions.hpp"
#include "tetramax/cutlocus.hpp"
#include "tetramax/error.hpp"
#include "tetramax/extrema.hpp"
#include "tetramax/geodesic.hpp"
#include "tetramax/gluing.hpp"

namespace tetramax {

using Json = nlohmann::json;

Json to_json(Vec2 p);
Json to_json(const Vec3& p);
Json to_json(const Tetra& t);  // {"vertices": [[x,y,z] x4]}
Json to_json(const CanonicalClass& c);
Json to_json(const FlatDouble& f);
Json to_json(const Embedding& e);

/// {"kind", "faces": [{"chart", "vertices"}], "edges": [[f,s,f',s']...],
/// "cones": [[vid, theta]...]}; tetra surfaces also carry "tetra", doubles
/// carry "polygon".
Json to_json(const Surface& s);
Json to_json(const SurfacePoint& p);
Json to_json(const GeodesicSegment& g);
Json to_json(const GluedPolygon& g);
Json to_json(const GluingReport& r);
Json to_json(const FoldResult& f);
Json to_json(const StarUnfolding& su);
Json to_json(const CutLocusTree& t);
Json to_json(const Extremum& e, const std::vector<std::string>& names = {});
Json to_json(const ExtremumCensus& c, const std::vector<std::string>& names = {});
Json to_json(const Example& ex);
Json to_json(const F3Instance& f);
Json to_json(const M5Result& r);
Json to_json(const AntipodeSearchResult& r);

/// {"error": code, "message": text}
Json error_json(const GeometryError& e);

Tetra tetra_from_json(const Json& j);
/// Accepts a surface document, a tetrahedron document ("vertices"), an
/// edge-length document ("lengths"), a convex polygon ("polygon", doubled)
/// or a glued polygon ("vertices" + "pairings", triangulated).
Surface surface_from_json(const Json& j);
SurfacePoint point_from_json(const Json& j);
GluedPolygon glued_from_json(const Json& j);

}  // namespace tetramax
