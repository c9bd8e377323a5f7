#pragma once

// Command-line front end. Exit codes: 0 pass, 1 fail, 2 malformed input,
// 3 inconclusive.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lbk/atlas.hpp"

namespace lbk {

/// Arguments exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "chart:23 (1)" or "23:(1)".
BuildingPoint parse_building_point(const Atlas& atlas, std::string_view text);
/// A point literal followed by "/ word", e.g. "chart:12 (0) / s1 s2"; the
/// word "e" is the identity.
BuildingSector parse_building_sector(const Atlas& atlas, std::string_view text);

/// Lambda literal with trailing zero components dropped.
std::string short_string(const Lambda& a);

}  // namespace lbk
