#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ferrers {

/// A Ferrers board stored as weakly decreasing column heights c_1 >= ... >= c_n >= 1.
///
/// Cell (i, j) is column i counted from the left and row j counted from the
/// bottom, both 1-based; it belongs to the board iff j <= c_i. The board with
/// no columns is valid and carries the empty placement.
class Board {
 public:
  Board() = default;

  /// Throws InvariantViolation on an increasing step or a non-positive height.
  explicit Board(std::vector<int> column_heights);

  static Board square(int n);
  /// Heights n, n-1, ..., 1.
  static Board staircase(int n);

  int columns() const noexcept { return static_cast<int>(heights_.size()); }
  /// Number of rows, i.e. c_1 (0 for the empty board).
  int rows() const noexcept { return heights_.empty() ? 0 : heights_.front(); }

  /// Height of 1-based column i.
  int height(int column) const { return heights_[static_cast<std::size_t>(column - 1)]; }

  bool contains_cell(int column, int row) const noexcept;

  /// Rightmost column whose height is at least `row` (0 if none).
  int last_column_reaching(int row) const noexcept;

  std::span<const int> heights() const noexcept { return heights_; }
  std::int64_t cell_count() const noexcept;

  bool is_square() const noexcept;

  auto operator<=>(const Board&) const = default;
  bool operator==(const Board&) const = default;

 private:
  std::vector<int> heights_;
};

/// Transpose partition: column heights of the result are the row lengths of `b`.
Board conjugate_board(const Board& b);

bool is_self_conjugate(const Board& b);

/// True iff the board carries at least one full rook placement: c_1 = n and
/// c_i >= n + 1 - i for every column i.
bool admits_full_placement(const Board& b);

/// Number of full rook placements, prod_i (c_i - (n - i)) clamped at zero.
/// Throws std::overflow_error if the product leaves 64 bits.
std::uint64_t full_placement_count(const Board& b);

}  // namespace ferrers
