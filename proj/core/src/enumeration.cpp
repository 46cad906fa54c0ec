#include "ferrers/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "ferrers/error.hpp"
#include "ferrers/parallel.hpp"
#include "ferrers/shifts.hpp"

namespace ferrers {

// ---------------------------------------------------------------------------
// PlacementRange

PlacementRange::PlacementRange(Board board) : board_(std::move(board)) {}

PlacementRange::PlacementRange(Board board, std::vector<int> prefix)
    : board_(std::move(board)), prefix_(std::move(prefix)) {}

PlacementRange::iterator::iterator(const Board* board, const std::vector<int>* prefix)
    : board_(board), fixed_(prefix->size()) {
  const auto n = static_cast<std::size_t>(board_->columns());
  if (!admits_full_placement(*board_) || fixed_ > n) return;
  values_.assign(n, 0);
  used_.assign(n + 1, false);
  for (std::size_t i = 0; i < fixed_; ++i) {
    const int v = (*prefix)[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || used_[static_cast<std::size_t>(v)] ||
        v > board_->height(static_cast<int>(i) + 1)) {
      return;
    }
    values_[i] = v;
    used_[static_cast<std::size_t>(v)] = true;
  }
  if (feasible_from(fixed_) && fill_from(fixed_)) publish();
}

// Columns depth..n-1 can still be completed with the unused values iff, for
// every such column j, at least (n - j) unused values fit under c_j. Heights
// decrease to the right, so this Hall condition is also sufficient.
bool PlacementRange::iterator::feasible_from(std::size_t depth) const {
  const auto n = values_.size();
  for (std::size_t j = depth; j < n; ++j) {
    const int h = board_->height(static_cast<int>(j) + 1);
    std::size_t fitting = 0;
    for (int v = 1; v <= h; ++v) {
      if (!used_[static_cast<std::size_t>(v)]) ++fitting;
    }
    if (fitting < n - j) return false;
  }
  return true;
}

bool PlacementRange::iterator::fill_from(std::size_t depth) {
  const auto n = values_.size();
  for (std::size_t d = depth; d < n; ++d) {
    const int h = board_->height(static_cast<int>(d) + 1);
    bool placed = false;
    for (int v = 1; v <= h && !placed; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      used_[static_cast<std::size_t>(v)] = true;
      if (feasible_from(d + 1)) {
        values_[d] = v;
        placed = true;
      } else {
        used_[static_cast<std::size_t>(v)] = false;
      }
    }
    if (!placed) return false;
  }
  return true;
}

bool PlacementRange::iterator::advance() {
  const auto n = values_.size();
  for (std::size_t d = n; d-- > fixed_;) {
    const int old = values_[d];
    used_[static_cast<std::size_t>(old)] = false;
    for (std::size_t j = d + 1; j < n; ++j) used_[static_cast<std::size_t>(values_[j])] = false;
    const int h = board_->height(static_cast<int>(d) + 1);
    for (int v = old + 1; v <= h; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      used_[static_cast<std::size_t>(v)] = true;
      if (feasible_from(d + 1)) {
        values_[d] = v;
        return fill_from(d + 1);
      }
      used_[static_cast<std::size_t>(v)] = false;
    }
    values_[d] = 0;
    // Column d is released; keep the later columns marked free and retry one level up.
    for (std::size_t j = d + 1; j < n; ++j) values_[j] = 0;
  }
  return false;
}

void PlacementRange::iterator::publish() { current_.emplace(*board_, Permutation(values_)); }

PlacementRange::iterator& PlacementRange::iterator::operator++() {
  if (!current_) return *this;
  if (advance()) {
    publish();
  } else {
    current_.reset();
  }
  return *this;
}

// ---------------------------------------------------------------------------
// Enumerations

std::vector<Placement> enumerate_placements(const Board& b) {
  std::vector<Placement> out;
  for (const Placement& p : PlacementRange(b)) out.push_back(p);
  return out;
}

std::vector<Placement> enumerate_symmetric_placements(const Board& b) {
  if (!is_self_conjugate(b)) {
    throw PreconditionError("symmetric placements need a self-conjugate board");
  }
  std::vector<Placement> out;
  if (!admits_full_placement(b)) return out;
  const int n = b.columns();
  std::vector<int> values(static_cast<std::size_t>(n), 0);

  // Pair the smallest free column with itself or with a later free column,
  // keeping both mirrored dots inside the board.
  std::function<void()> pair_up = [&] {
    int i = 1;
    while (i <= n && values[static_cast<std::size_t>(i - 1)] != 0) ++i;
    if (i > n) {
      out.emplace_back(b, Permutation(values));
      return;
    }
    if (b.contains_cell(i, i)) {
      values[static_cast<std::size_t>(i - 1)] = i;
      pair_up();
      values[static_cast<std::size_t>(i - 1)] = 0;
    }
    for (int j = i + 1; j <= n; ++j) {
      if (values[static_cast<std::size_t>(j - 1)] != 0) continue;
      if (!b.contains_cell(i, j) || !b.contains_cell(j, i)) continue;
      values[static_cast<std::size_t>(i - 1)] = j;
      values[static_cast<std::size_t>(j - 1)] = i;
      pair_up();
      values[static_cast<std::size_t>(i - 1)] = 0;
      values[static_cast<std::size_t>(j - 1)] = 0;
    }
  };
  pair_up();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Board> boards_with_placements(int n) {
  if (n < 0) throw PreconditionError("negative column count");
  std::vector<Board> out;
  std::vector<int> heights;
  heights.reserve(static_cast<std::size_t>(n));
  std::function<void()> grow = [&] {
    const int i = static_cast<int>(heights.size()) + 1;
    if (i > n) {
      out.emplace_back(heights);
      return;
    }
    const int hi = i == 1 ? n : heights.back();
    const int lo = i == 1 ? n : n + 1 - i;
    for (int h = lo; h <= hi; ++h) {
      heights.push_back(h);
      grow();
      heights.pop_back();
    }
  };
  grow();
  return out;
}

std::vector<Board> self_conjugate_boards_with_placements(int n) {
  auto boards = boards_with_placements(n);
  std::erase_if(boards, [](const Board& b) { return !is_self_conjugate(b); });
  return boards;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

std::uint64_t count_matching(const std::vector<Placement>& placements, unsigned jobs,
                             const std::function<bool(const Placement&)>& pred) {
  std::atomic<std::uint64_t> total{0};
  parallel_for(placements.size(), jobs, [&](std::size_t i) {
    if (pred(placements[i])) total.fetch_add(1, std::memory_order_relaxed);
  });
  return total.load();
}

std::uint64_t count_all_avoiders(const Board& b, const PatternSet& patterns, unsigned jobs) {
  if (jobs <= 1 || b.columns() < 2) {
    std::uint64_t total = 0;
    for (const Placement& p : PlacementRange(b)) {
      if (avoids_all(p, patterns)) ++total;
    }
    return total;
  }
  // One slice per value of the first column.
  std::atomic<std::uint64_t> total{0};
  parallel_for(static_cast<std::size_t>(b.height(1)), jobs, [&](std::size_t slice) {
    std::uint64_t local = 0;
    for (const Placement& p : PlacementRange(b, {static_cast<int>(slice) + 1})) {
      if (avoids_all(p, patterns)) ++local;
    }
    total.fetch_add(local, std::memory_order_relaxed);
  });
  return total.load();
}

}  // namespace

CountReport count_avoiders(const Board& b, const PatternSet& patterns, bool symmetric_only, unsigned jobs) {
  CountReport report{b, patterns, symmetric_only, 0};
  if (symmetric_only) {
    const auto symmetric = enumerate_symmetric_placements(b);
    report.count = count_matching(symmetric, jobs, [&](const Placement& p) { return avoids_all(p, patterns); });
  } else {
    report.count = count_all_avoiders(b, patterns, jobs);
  }
  return report;
}

namespace {

BijectionReport check_bijection(const std::vector<Placement>& candidates, int k, bool symmetric) {
  require_valid_k(k);
  const Permutation source_pattern = shifted_pattern(k);
  const Permutation target_pattern = decreasing_pattern(k);

  BijectionReport report;
  std::set<Placement> images;
  std::set<Placement> targets;
  for (const Placement& p : candidates) {
    if (!contains(p, target_pattern)) targets.insert(p);
    if (contains(p, source_pattern)) continue;
    ++report.domain_size;
    Placement image = phi_star(p, k, TraceOptions{0}).placement;
    auto flag = [&](bool& field) {
      field = false;
      if (!report.counterexample) report.counterexample = p;
    };
    if (contains(image, target_pattern)) flag(report.lands_in_target);
    if (symmetric && !is_symmetric(image)) flag(report.preserves_symmetry);
    if (!images.insert(std::move(image)).second) flag(report.injective);
  }
  report.target_size = targets.size();
  for (const Placement& t : targets) {
    if (!images.contains(t)) {
      report.onto = false;
      if (!report.counterexample) report.counterexample = t;
      break;
    }
  }
  return report;
}

}  // namespace

BijectionReport verify_bwx_bijection(const Board& b, int k) {
  require_valid_k(k);
  return check_bijection(enumerate_placements(b), k, false);
}

BijectionReport verify_involution_transfer(const Board& b, int k) {
  require_valid_k(k);
  return check_bijection(enumerate_symmetric_placements(b), k, true);
}

// ---------------------------------------------------------------------------
// Prefix transfer

bool has_increasing_prefix(const Permutation& pattern, int k) {
  if (pattern.size() < k) return false;
  for (int i = 1; i <= k; ++i) {
    if (pattern(i) != i) return false;
  }
  return true;
}

PatternSet transfer_prefix(const PatternSet& patterns, int k) {
  require_valid_k(k);
  std::vector<Permutation> out;
  for (const auto& tau : patterns) {
    if (!has_increasing_prefix(tau, k)) {
      throw PreconditionError("pattern does not start with 1 2 ... " + std::to_string(k));
    }
    std::vector<int> v(tau.values().begin(), tau.values().end());
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = k - i;
    out.emplace_back(std::move(v));
  }
  return PatternSet(std::move(out));
}

WilfReport verify_wilf_set(int n, const PatternSet& patterns, int k, unsigned jobs) {
  if (n < 0) throw PreconditionError("negative n");
  WilfReport report{patterns, transfer_prefix(patterns, k), 0, 0};
  const Board square = Board::square(n);
  report.count_patterns = count_avoiders(square, report.patterns, true, jobs).count;
  report.count_transferred = count_avoiders(square, report.transferred, true, jobs).count;
  return report;
}

// ---------------------------------------------------------------------------
// Motzkin numbers

namespace {

__extension__ typedef unsigned __int128 u128;
constexpr u128 kLimit = static_cast<u128>(~std::uint64_t{0});

u128 checked(u128 x) {
  if (x > kLimit) throw std::overflow_error("Motzkin number exceeds 64 bits");
  return x;
}

// C(n, r) by the exact multiplicative recurrence.
u128 binomial(int n, int r) {
  u128 c = 1;
  for (int i = 1; i <= r; ++i) c = checked(c * static_cast<u128>(n - r + i) / static_cast<u128>(i));
  return c;
}

}  // namespace

std::uint64_t motzkin(int n) {
  if (n < 0) throw PreconditionError("negative n");
  u128 total = 0;
  // n! / (j! (j+1)! (n-2j)!) = C(n, 2j) * C(2j, j) / (j + 1)
  for (int j = 0; 2 * j <= n; ++j) {
    const u128 term = checked(binomial(n, 2 * j) * (binomial(2 * j, j) / static_cast<u128>(j + 1)));
    total = checked(total + term);
  }
  return static_cast<std::uint64_t>(total);
}

bool MotzkinReport::ok() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const MotzkinRow& r) { return r.ok(); });
}

MotzkinReport verify_motzkin_identities(int n_max, unsigned jobs) {
  if (n_max < 0) throw PreconditionError("negative n_max");
  const PatternSet p1234({Permutation({1, 2, 3, 4})});
  const PatternSet p4321({Permutation({4, 3, 2, 1})});
  const PatternSet p2143({Permutation({2, 1, 4, 3})});
  const PatternSet p3214({Permutation({3, 2, 1, 4})});
  MotzkinReport report;
  for (int n = 0; n <= n_max; ++n) {
    const Board square = Board::square(n);
    const auto involutions = enumerate_symmetric_placements(square);
    auto count = [&](const PatternSet& t) {
      return count_matching(involutions, jobs, [&](const Placement& p) { return avoids_all(p, t); });
    };
    report.rows.push_back({n, motzkin(n), count(p1234), count(p4321), count(p2143), count(p3214)});
  }
  return report;
}

}  // namespace ferrers
