#include "ferrers/placement.hpp"

#include <string>

#include "ferrers/error.hpp"

namespace ferrers {

Placement::Placement(Board board, Permutation perm) : board_(std::move(board)), perm_(std::move(perm)) {
  const int n = perm_.size();
  if (board_.columns() != n) {
    throw InvariantViolation("permutation of length " + std::to_string(n) + " on a board with " +
                             std::to_string(board_.columns()) + " columns");
  }
  if (board_.rows() != n) {
    throw InvariantViolation("board has " + std::to_string(board_.rows()) + " rows but " +
                             std::to_string(n) + " columns");
  }
  for (int i = 1; i <= n; ++i) {
    if (perm_(i) > board_.height(i)) {
      throw InvariantViolation("dot (" + std::to_string(i) + "," + std::to_string(perm_(i)) +
                               ") lies outside the board");
    }
  }
}

Placement Placement::square(Permutation perm) {
  Board board = Board::square(perm.size());
  return Placement(std::move(board), std::move(perm));
}

Placement Placement::with_perm(Permutation perm) const { return Placement(board_, std::move(perm)); }

Placement inverse_placement(const Placement& p) {
  return Placement(conjugate_board(p.board()), p.perm().inverse());
}

bool is_symmetric(const Placement& p) { return is_self_conjugate(p.board()) && p.perm().is_involution(); }

std::int64_t inversion_number(const Placement& p) { return p.perm().inversions(); }

}  // namespace ferrers
