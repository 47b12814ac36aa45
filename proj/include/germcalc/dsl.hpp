#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germcalc/germ.hpp"

namespace germcalc {

// Surface syntax (whitespace insignificant):
//
//   multigerm := branch | "{" branch (";" branch)* "}"
//   branch    := "(" poly ("," poly)* ")"
//   poly      := ["-"] term (("+" | "-") term)*
//   term      := integer | [integer "*"] factor ("*" factor)*
//   factor    := var ["^" natural]
//   var       := lowercase letter, then letters, digits or '_'
//
// Variables are numbered by first appearance.

struct ParseOptions {
    /// Forces the source dimension; extra unnamed variables are appended.
    std::optional<std::size_t> source_dim;
    /// Checked against the component count.
    std::optional<std::size_t> target_dim;
};

MultiGerm parse_multigerm(std::string_view text, const ParseOptions& options = {});

/// Parses one polynomial. Variables already in `var_names` keep their
/// position; new ones are appended in order of appearance.
Poly parse_poly(std::string_view text, std::vector<std::string>& var_names);

/// Canonical rendering, e.g. "{(x^3+x*y, y, z); (x, y^2+z^3, z)}".
std::string format_multigerm(const MultiGerm& f);

std::string format_poly(const Poly& p, const std::vector<std::string>& var_names);

}  // namespace germcalc
