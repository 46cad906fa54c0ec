#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "ferrers/board.hpp"
#include "ferrers/patterns.hpp"
#include "ferrers/placement.hpp"

namespace ferrers {

/// Lazily walks the full rook placements of a board in lexicographic order
/// of their permutations. Usable as an input range:
///
///   for (const Placement& p : PlacementRange(board)) { ... }
class PlacementRange {
 public:
  explicit PlacementRange(Board board);
  /// Only the placements whose first values are exactly `prefix`.
  PlacementRange(Board board, std::vector<int> prefix);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Placement;
    using difference_type = std::ptrdiff_t;
    using pointer = const Placement*;
    using reference = const Placement&;

    iterator() = default;

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
      return !it.current_.has_value();
    }

   private:
    friend class PlacementRange;
    iterator(const Board* board, const std::vector<int>* prefix);
    bool feasible_from(std::size_t depth) const;
    bool fill_from(std::size_t depth);
    bool advance();
    void publish();

    const Board* board_ = nullptr;
    std::size_t fixed_ = 0;
    std::vector<int> values_;
    std::vector<bool> used_;
    std::optional<Placement> current_;
  };

  iterator begin() const { return iterator(&board_, &prefix_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  Board board_;
  std::vector<int> prefix_;
};

/// Every full placement on `b`, lexicographic by permutation.
std::vector<Placement> enumerate_placements(const Board& b);

/// Every symmetric placement on a self-conjugate board, lexicographic by
/// permutation. Throws PreconditionError for other boards.
std::vector<Placement> enumerate_symmetric_placements(const Board& b);

/// All boards with n columns that carry a full placement, in lexicographic
/// order of their heights. n = 0 yields the empty board.
std::vector<Board> boards_with_placements(int n);
std::vector<Board> self_conjugate_boards_with_placements(int n);

struct CountReport {
  Board board;
  PatternSet patterns;
  bool symmetric_only = false;
  std::uint64_t count = 0;
};

/// Exact number of (symmetric) placements on `b` avoiding every pattern.
CountReport count_avoiders(const Board& b, const PatternSet& patterns, bool symmetric_only,
                           unsigned jobs = 1);

/// Outcome of checking that phi* maps one avoider class onto another.
struct BijectionReport {
  std::size_t domain_size = 0;  // avoiders of (k-1)...21k
  std::size_t target_size = 0;  // avoiders of k...21
  bool lands_in_target = true;  // every image avoids k...21
  bool injective = true;
  bool onto = true;
  bool preserves_symmetry = true;
  std::optional<Placement> counterexample;

  bool ok() const noexcept { return lands_in_target && injective && onto && preserves_symmetry; }
};

BijectionReport verify_bwx_bijection(const Board& b, int k);

/// The same check restricted to symmetric placements of a self-conjugate board.
BijectionReport verify_involution_transfer(const Board& b, int k);

/// True iff the first k letters of `pattern` are literally 1, 2, ..., k.
bool has_increasing_prefix(const Permutation& pattern, int k);

/// Replaces the prefix 1 2 ... k of every pattern by k ... 2 1.
/// Throws PreconditionError if a pattern lacks the prefix.
PatternSet transfer_prefix(const PatternSet& patterns, int k);

struct WilfReport {
  PatternSet patterns;
  PatternSet transferred;
  std::uint64_t count_patterns = 0;
  std::uint64_t count_transferred = 0;

  bool equal() const noexcept { return count_patterns == count_transferred; }
};

/// Counts involutions of S_n avoiding T and T'.
WilfReport verify_wilf_set(int n, const PatternSet& patterns, int k, unsigned jobs = 1);

/// sum_{j=0}^{floor(n/2)} n! / (j! (j+1)! (n-2j)!), exactly.
/// Throws std::overflow_error past 64 bits.
std::uint64_t motzkin(int n);

struct MotzkinRow {
  int n = 0;
  std::uint64_t motzkin = 0;
  std::uint64_t avoid_1234 = 0;
  std::uint64_t avoid_4321 = 0;
  std::uint64_t avoid_2143 = 0;
  std::uint64_t avoid_3214 = 0;

  bool ok() const noexcept {
    return avoid_1234 == motzkin && avoid_4321 == motzkin && avoid_2143 == motzkin &&
           avoid_3214 == motzkin;
  }
};

struct MotzkinReport {
  std::vector<MotzkinRow> rows;
  bool ok() const noexcept;
};

/// Involution counts I_n for 1234, 4321, 2143, 3214 against M_n, n = 0..n_max.
MotzkinReport verify_motzkin_identities(int n_max, unsigned jobs = 1);

}  // namespace ferrers
