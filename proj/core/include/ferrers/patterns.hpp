#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ferrers/permutation.hpp"
#include "ferrers/placement.hpp"

namespace ferrers {

/// A non-empty list of patterns, each of length >= 1.
class PatternSet {
 public:
  PatternSet() = default;
  /// Throws PreconditionError if `patterns` is empty or holds the empty pattern.
  explicit PatternSet(std::vector<Permutation> patterns);

  const std::vector<Permutation>& patterns() const noexcept { return patterns_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }

  bool operator==(const PatternSet&) const = default;

 private:
  std::vector<Permutation> patterns_;
};

/// 1-based column indices i_1 < ... < i_k of one occurrence.
using Occurrence = std::vector<int>;

/// True iff some occurrence of `tau` in p.perm() fits in a rectangular
/// sub-board, i.e. the cell (i_k, max_j perm(i_j)) lies in the board.
bool contains(const Placement& p, const Permutation& tau);

/// Every rectangle-valid occurrence of `tau`, sorted lexicographically by
/// positions and truncated after `limit` entries when given.
std::vector<Occurrence> find_occurrences(const Placement& p, const Permutation& tau,
                                         std::optional<std::size_t> limit = std::nullopt);

bool avoids_all(const Placement& p, const PatternSet& patterns);

/// k (k-1) ... 1
Permutation decreasing_pattern(int k);
/// (k-1) ... 2 1 k
Permutation shifted_pattern(int k);

}  // namespace ferrers
