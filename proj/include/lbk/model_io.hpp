#pragma once

// Line-oriented model files:
//
//   lambda 2
//   roots A2                      or  cartan [[2,-1],[-1,2]]
//   charts 3
//   name 1 12                     optional chart label
//   glue 1 2 : ge a1 0 le a1+a2 3|1 ; word s1 s2 ; t (0|0,1|0)
//
// A glue line sets the transition from the first chart to the second;
// missing reverse transitions are derived. `eq` stands for a ge/le pair.
// '#' starts a comment.

#include <filesystem>
#include <string>
#include <string_view>

#include "lbk/atlas.hpp"

namespace lbk {

/// Throws MalformedInput with the offending line number.
Atlas parse_model(std::string_view text);
Atlas load_model(const std::filesystem::path& path);

/// Canonical text; parse_model(format_model(a)) reproduces a.
std::string format_model(const Atlas& atlas);

RootVector parse_root(std::string_view text, std::size_t rank);
AffineIsometry parse_isometry(const Apartment& sigma, std::string_view text);
std::string format_isometry(const AffineIsometry& g);

}  // namespace lbk
