#pragma once

#include <string>
#include <vector>

#include "tetramax/cutlocus.hpp"

namespace tetramax {

/// Star unfolding in model units with the y axis up: boundary in black, cut
/// locus in red, source images as blue dots, cone-point images labelled by
/// `names` (indexed by vertex id; v1.. when empty).
std::string render_star_svg(const StarUnfolding& su, const CutLocusTree& tree,
                            const std::vector<std::string>& names = {});

/// Source unfolding: its boundary is the cut locus (red), x at the origin (blue).
std::string render_source_svg(const SourceUnfolding& su);

}  // namespace tetramax
