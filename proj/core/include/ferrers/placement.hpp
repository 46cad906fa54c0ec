#pragma once

#include <compare>

#include "ferrers/board.hpp"
#include "ferrers/permutation.hpp"

namespace ferrers {

/// A full rook placement: a dot in cell (i, perm(i)) of `board` for every column i.
class Placement {
 public:
  Placement() = default;

  /// Throws InvariantViolation if the sizes disagree, the board is not
  /// as tall as it is wide, or a dot falls outside the board.
  Placement(Board board, Permutation perm);

  /// The permutation on the n x n square.
  static Placement square(Permutation perm);

  const Board& board() const noexcept { return board_; }
  const Permutation& perm() const noexcept { return perm_; }
  int size() const noexcept { return perm_.size(); }

  /// Same board, different dots. Validates the new permutation.
  Placement with_perm(Permutation perm) const;

  auto operator<=>(const Placement&) const = default;
  bool operator==(const Placement&) const = default;

 private:
  Board board_;
  Permutation perm_;
};

/// Reflection through the main diagonal: conjugate board, inverse permutation.
Placement inverse_placement(const Placement& p);

/// Self-conjugate board and self-inverse permutation.
bool is_symmetric(const Placement& p);

std::int64_t inversion_number(const Placement& p);

}  // namespace ferrers
