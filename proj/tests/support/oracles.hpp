#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond the value types, so agreement between the two is evidence
// rather than tautology.

#include <cstdint>
#include <optional>
#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/permutation.hpp"
#include "ferrers/placement.hpp"

namespace ferrers::oracle {

/// Every permutation of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Placements on `b`, found by filtering all of S_n.
std::vector<Placement> placements(const Board& b);

/// Conjugate by counting the cells of every row.
Board conjugate(const Board& b);

/// Every subset of columns, tested for order-isomorphism and the rectangle rule.
bool contains(const Placement& p, const Permutation& tau);
std::vector<std::vector<int>> occurrences(const Placement& p, const Permutation& tau);

/// Lexicographically least (on values, left to right) rectangle-valid
/// decreasing subsequence of length k, as 1-based columns.
std::optional<std::vector<int>> a_sequence(const Placement& p, int k);

/// The A-sequence of the inverse placement reflected back onto p.
std::optional<std::vector<int>> b_sequence(const Placement& p, int k);

/// Longest decreasing subsequence starting at each position, by subset search.
std::vector<int> labels(const std::vector<int>& word);

std::int64_t inversions(const Permutation& perm);

/// Involutions of S_n that avoid every pattern in `patterns` (square board).
std::uint64_t involutions_avoiding(int n, const std::vector<Permutation>& patterns);

/// M_n from the recurrence M_n = M_{n-1} + sum_{i} M_i M_{n-2-i}.
std::uint64_t motzkin_by_recurrence(int n);

}  // namespace ferrers::oracle
