#pragma once

// Deterministic atlases: thin apartments, rank-one trees, rank-two fans
// around one wall, and two malformed-but-valid negative models.

#include <cstddef>
#include <string>
#include <string_view>

#include "lbk/atlas.hpp"

namespace lbk {

/// One chart, no transitions.
Atlas single_apartment(std::string_view type, std::size_t lambda_rank);

/// Type A1, one chart per pair of ends {i < j}: end i is the negative ray
/// and end j the positive ray. Charts sharing an end are glued along that
/// ray, the others at the branch point o. Throws MalformedInput for n < 2.
Atlas lambda_tree(std::size_t ends, std::size_t lambda_rank);

/// Rank-two fan of m half-apartments bounded by M = {(a1, v) = 0}: one chart
/// per pair of leaves {p < q}, leaf p on the side (a1, v) >= 0. Throws
/// MalformedInput for m < 2 or a type that is not rank two.
Atlas fan(std::size_t leaves, std::string_view type = "A2", std::size_t lambda_rank = 1);

/// The three-leaf fan without the chart of leaves 2 and 3.
Atlas pruned_fan(std::string_view type = "A2", std::size_t lambda_rank = 1);

/// Two A1 charts glued along {(a1, v) >= 0} and nothing else.
Atlas broken_pair(std::size_t lambda_rank = 1);

/// Three A1 charts overlapping pairwise in rays with empty triple
/// intersection: R_12 = {v >= 0}, R_13 = {v <= -1} in chart 1.
Atlas shifted_rays(std::size_t lambda_rank = 1);

/// Chart name of the end pair {i < j} (1-based ends).
std::string pair_name(std::size_t i, std::size_t j, std::size_t ends);

}  // namespace lbk
