#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ferrers/placement.hpp"

namespace ferrers {

/// The two elementary rewriting steps. ASHIFT is phi, BSHIFT is psi.
enum class ShiftKind { ASHIFT, BSHIFT };

std::string_view to_string(ShiftKind kind) noexcept;

/// Throws PreconditionError when k < 2.
void require_valid_k(int k);

/// 1-based columns of the k dots of a k...21 occurrence, left to right.
using DotSequence = std::vector<int>;

/// Lexicographically smallest rectangle-valid occurrence of k...21, compared
/// on the values a_k, ..., a_1. Built greedily: each dot is the lowest one
/// that still extends to a full occurrence. Absent iff p avoids k...21.
std::optional<DotSequence> a_sequence(const Placement& p, int k);

/// Same A-sequence, built the other way: a_k as above, then each following
/// dot as far left as possible. Kept as an independent construction.
std::optional<DotSequence> a_sequence_leftmost(const Placement& p, int k);

/// B-sequence: b_1 is the leftmost dot ending an occurrence of k...21, and
/// each b_j is the leftmost dot such that b_j ... b_1 ends an occurrence.
std::optional<DotSequence> b_sequence(const Placement& p, int k);

/// Same B-sequence with b_j, j >= 2, chosen as low as possible.
std::optional<DotSequence> b_sequence_lowest(const Placement& p, int k);

/// Moves the values on `columns` (a decreasing run v_1 > ... > v_k) to
/// v_2, ..., v_k, v_1, turning k...21 into (k-1)...21k. Other dots stay.
Placement cyclic_shift(const Placement& p, std::span<const int> columns);

/// phi. Returns p unchanged when it avoids k...21.
Placement a_shift(const Placement& p, int k);
/// psi, computed directly from the B-sequence.
Placement b_shift(const Placement& p, int k);
/// psi as (phi(p'))'.
Placement b_shift_via_inverse(const Placement& p, int k);

/// Sum over m of #{i : i_m < i < i_{m+1}, perm(i_1) > perm(i) > perm(i_{m+1})}
/// for the columns i_1 < ... < i_k of a decreasing occurrence.
std::int64_t inversion_drop_correction(const Permutation& perm, std::span<const int> columns);

struct ShiftStep {
  ShiftKind op = ShiftKind::ASHIFT;
  DotSequence moved_positions;
  Permutation perm_before;
  Permutation perm_after;
  std::int64_t inv_before = 0;
  std::int64_t inv_after = 0;
};

/// Record of successive shifts. When `cap` was set, `steps` holds at most
/// `cap` entries while `step_count` keeps counting.
struct ShiftTrace {
  int k = 2;
  std::vector<ShiftStep> steps;
  std::size_t step_count = 0;

  bool truncated() const noexcept { return steps.size() < step_count; }
  void record(ShiftStep step, std::optional<std::size_t> cap);
};

struct TraceOptions {
  std::optional<std::size_t> cap;
};

struct ShiftOutcome {
  Placement placement;
  std::optional<ShiftStep> step;  // empty when p was already a fixed point
};

/// One phi or psi step, with its audit record.
ShiftOutcome shift_once(const Placement& p, int k, ShiftKind kind);

struct IteratedShift {
  Placement placement;
  ShiftTrace trace;
};

/// phi iterated to its fixed point, which avoids k...21.
IteratedShift phi_star(const Placement& p, int k, TraceOptions options = {});
/// psi iterated to its fixed point.
IteratedShift psi_star(const Placement& p, int k, TraceOptions options = {});

}  // namespace ferrers
