#pragma once

// Permutation text format: compact digits ("246153") or comma separated
// values ("2,5,1,7,3,10,4,6,9,8"). Parsing picks the form by the presence of
// a comma; formatting uses the compact form whenever n <= 9.

#include <string>
#include <string_view>
#include <vector>

#include "permmob/permutation.hpp"

namespace permmob {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Any distinct integers; use parse_permutation for canonical input.
std::vector<int> parse_word(std::string_view text);

/// Canonical 1..n permutation; throws ParseError otherwise.
Permutation parse_permutation(std::string_view text);

std::string to_string(const Permutation& p);

/// Letters in `marked` positions are wrapped in brackets: "[5]3[4][2][1]".
/// Values above 9 are comma separated as in the plain form.
std::string to_marked_string(const Permutation& p, const std::vector<int>& marked);

/// One-based comma separated positions, e.g. "1,2" -> {0,1}.
std::vector<int> parse_positions(std::string_view text);

/// Zero-based positions rendered one-based: {0,1} -> "1,2".
std::string positions_to_string(const std::vector<int>& positions);

}  // namespace permmob
