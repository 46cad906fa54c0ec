#include "ferrers/board.hpp"

#include <stdexcept>
#include <string>

#include "ferrers/error.hpp"

namespace ferrers {

Board::Board(std::vector<int> column_heights) : heights_(std::move(column_heights)) {
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (heights_[i] < 1) {
      throw InvariantViolation("column " + std::to_string(i + 1) + " has non-positive height");
    }
    if (i > 0 && heights_[i] > heights_[i - 1]) {
      throw InvariantViolation("column heights must be weakly decreasing (column " +
                               std::to_string(i + 1) + ")");
    }
  }
}

Board Board::square(int n) { return Board(std::vector<int>(static_cast<std::size_t>(n), n)); }

Board Board::staircase(int n) {
  std::vector<int> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] = n - i;
  return Board(std::move(h));
}

bool Board::contains_cell(int column, int row) const noexcept {
  return column >= 1 && column <= columns() && row >= 1 && row <= height(column);
}

int Board::last_column_reaching(int row) const noexcept {
  int last = 0;
  for (int i = 1; i <= columns() && height(i) >= row; ++i) last = i;
  return last;
}

std::int64_t Board::cell_count() const noexcept {
  std::int64_t total = 0;
  for (int h : heights_) total += h;
  return total;
}

bool Board::is_square() const noexcept {
  for (int h : heights_) {
    if (h != columns()) return false;
  }
  return true;
}

Board conjugate_board(const Board& b) {
  std::vector<int> rows(static_cast<std::size_t>(b.rows()));
  for (int j = 1; j <= b.rows(); ++j) rows[static_cast<std::size_t>(j - 1)] = b.last_column_reaching(j);
  return Board(std::move(rows));
}

bool is_self_conjugate(const Board& b) { return conjugate_board(b) == b; }

bool admits_full_placement(const Board& b) {
  const int n = b.columns();
  if (b.rows() != n) return false;
  for (int i = 1; i <= n; ++i) {
    if (b.height(i) < n + 1 - i) return false;
  }
  return true;
}

std::uint64_t full_placement_count(const Board& b) {
  if (!admits_full_placement(b)) return 0;
  const int n = b.columns();
  std::uint64_t total = 1;
  // Fill from the shortest column: column i sees n - i rows already taken.
  for (int i = n; i >= 1; --i) {
    const auto choices = static_cast<std::uint64_t>(b.height(i) - (n - i));
    if (__builtin_mul_overflow(total, choices, &total)) {
      throw std::overflow_error("placement count exceeds 64 bits");
    }
  }
  return total;
}

}  // namespace ferrers
