#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ferrers {

/// A permutation of {1, ..., n} in one-line notation.
///
/// Positions and values are both 1-based, matching the cell convention of
/// placements: position i carries value (*this)(i). The empty permutation
/// (n = 0) is valid.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvariantViolation unless `values` is a permutation of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  /// n (n-1) ... 1
  static Permutation decreasing(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 1-based position i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const noexcept { return values_; }

  /// 1-based position of value v.
  int position_of(int v) const;

  Permutation inverse() const;
  bool is_involution() const;

  /// Number of pairs i < j with value(i) > value(j).
  std::int64_t inversions() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// True if `values` is a permutation of {1, ..., values.size()}.
bool is_permutation_of_one_to_n(std::span<const int> values);

}  // namespace ferrers
