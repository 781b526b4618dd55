#pragma once

#include <string>
#include <vector>

#include "chunkorder/sequence_miner.hpp"

namespace chunkorder {

/// 8x8 transition-probability heatmap with numeric cell labels; rows are
/// "from", columns "to", both in canonical FC order. Undefined rows render
/// gray without labels.
std::string transitions_heatmap_svg(const TransitionMatrix& m, int prob_decimals);

/// 2-D scatter of projected points colored by their first tag, with a
/// legend of the distinct tags.
std::string projection_scatter_svg(const std::vector<std::string>& ids,
                                   const std::vector<std::pair<double, double>>& points,
                                   const std::vector<std::string>& color_tags);

}  // namespace chunkorder
