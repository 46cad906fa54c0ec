#pragma once

#include <string>
#include <string_view>

#include "ferrers/board.hpp"
#include "ferrers/permutation.hpp"

namespace ferrers {

/// Parses one-line notation. Values are separated by spaces and/or commas
/// ("7 4 6 3 5 2 1", "7,4,6,3,5,2,1"). A single run of digits with no
/// separator is read one digit per letter ("321"), which covers every
/// pattern of length <= 9. Throws ParseError or InvariantViolation.
Permutation parse_permutation(std::string_view text);

/// Parses comma-separated column heights ("4,3,2,2"); spaces are also
/// accepted as separators.
Board parse_board(std::string_view text);

/// Space-separated one-line notation.
std::string format_permutation(const Permutation& p);
/// Comma-separated column heights.
std::string format_board(const Board& b);

}  // namespace ferrers
