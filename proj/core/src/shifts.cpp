#include "ferrers/shifts.hpp"

#include <algorithm>
#include <string>

#include "ferrers/error.hpp"

namespace ferrers {

std::string_view to_string(ShiftKind kind) noexcept { return kind == ShiftKind::ASHIFT ? "phi" : "psi"; }

void require_valid_k(int k) {
  if (k < 2) throw PreconditionError("k must be at least 2 (got " + std::to_string(k) + ")");
}

namespace {

enum class Pick { LOWEST, LEFTMOST };

// Longest decreasing run starting at each column of [first, last], using only
// columns up to `last`. Indexed by column; entries outside the window are 0.
std::vector<int> labels_from_left(const Permutation& perm, int first, int last) {
  std::vector<int> label(static_cast<std::size_t>(perm.size()) + 1, 0);
  for (int x = last; x >= first; --x) {
    int best = 0;
    for (int m = x + 1; m <= last; ++m) {
      if (perm(m) < perm(x)) best = std::max(best, label[static_cast<std::size_t>(m)]);
    }
    label[static_cast<std::size_t>(x)] = best + 1;
  }
  return label;
}

// Longest decreasing run ending at each column of [1, last], using only
// letters no larger than `top_row`. Letters above the row get 0.
std::vector<int> labels_from_right(const Permutation& perm, int last, int top_row) {
  std::vector<int> label(static_cast<std::size_t>(perm.size()) + 1, 0);
  for (int x = 1; x <= last; ++x) {
    if (perm(x) > top_row) continue;
    int best = 0;
    for (int m = 1; m < x; ++m) {
      if (perm(m) > perm(x) && perm(m) <= top_row) best = std::max(best, label[static_cast<std::size_t>(m)]);
    }
    label[static_cast<std::size_t>(x)] = best + 1;
  }
  return label;
}

std::optional<DotSequence> a_sequence_impl(const Placement& p, int k, Pick pick) {
  require_valid_k(k);
  const auto& perm = p.perm();
  const int n = p.size();
  if (k > n) return std::nullopt;

  // a_k: the lowest dot that starts an occurrence. An occurrence starting at
  // value v lives in the rectangle of columns pos(v)..Q(v) and rows 1..v.
  for (int v = k; v <= n; ++v) {
    const int start = perm.position_of(v);
    const int last = p.board().last_column_reaching(v);
    const auto label = labels_from_left(perm, start, last);
    if (label[static_cast<std::size_t>(start)] < k) continue;

    DotSequence seq{start};
    int current = start;
    for (int need = k - 1; need >= 1; --need) {
      int chosen = 0;
      for (int c = current + 1; c <= last; ++c) {
        if (perm(c) >= perm(current) || label[static_cast<std::size_t>(c)] < need) continue;
        if (chosen == 0) {
          chosen = c;
          if (pick == Pick::LEFTMOST) break;
        } else if (perm(c) < perm(chosen)) {
          chosen = c;
        }
      }
      seq.push_back(chosen);
      current = chosen;
    }
    return seq;
  }
  return std::nullopt;
}

std::optional<DotSequence> b_sequence_impl(const Placement& p, int k, Pick pick) {
  require_valid_k(k);
  const auto& perm = p.perm();
  const int n = p.size();
  if (k > n) return std::nullopt;

  // b_1: the leftmost dot that ends an occurrence. An occurrence ending at
  // column q lives in the rectangle of columns 1..q and rows 1..c_q.
  for (int end = k; end <= n; ++end) {
    const int top = p.board().height(end);
    const auto label = labels_from_right(perm, end, top);
    if (label[static_cast<std::size_t>(end)] < k) continue;

    DotSequence reversed{end};
    int current = end;
    for (int need = k - 1; need >= 1; --need) {
      int chosen = 0;
      for (int c = 1; c < current; ++c) {
        if (perm(c) <= perm(current) || label[static_cast<std::size_t>(c)] < need) continue;
        if (chosen == 0) {
          chosen = c;
          if (pick == Pick::LEFTMOST) break;
        } else if (perm(c) < perm(chosen)) {
          chosen = c;
        }
      }
      reversed.push_back(chosen);
      current = chosen;
    }
    return DotSequence(reversed.rbegin(), reversed.rend());
  }
  return std::nullopt;
}

}  // namespace

std::optional<DotSequence> a_sequence(const Placement& p, int k) { return a_sequence_impl(p, k, Pick::LOWEST); }

std::optional<DotSequence> a_sequence_leftmost(const Placement& p, int k) {
  return a_sequence_impl(p, k, Pick::LEFTMOST);
}

std::optional<DotSequence> b_sequence(const Placement& p, int k) { return b_sequence_impl(p, k, Pick::LEFTMOST); }

std::optional<DotSequence> b_sequence_lowest(const Placement& p, int k) {
  return b_sequence_impl(p, k, Pick::LOWEST);
}

Placement cyclic_shift(const Placement& p, std::span<const int> columns) {
  if (columns.size() < 2) return p;
  std::vector<int> values(p.perm().values().begin(), p.perm().values().end());
  const int first = values[static_cast<std::size_t>(columns.front() - 1)];
  for (std::size_t m = 0; m + 1 < columns.size(); ++m) {
    values[static_cast<std::size_t>(columns[m] - 1)] = p.perm()(columns[m + 1]);
  }
  values[static_cast<std::size_t>(columns.back() - 1)] = first;
  return p.with_perm(Permutation(std::move(values)));
}

Placement a_shift(const Placement& p, int k) {
  const auto seq = a_sequence(p, k);
  return seq ? cyclic_shift(p, *seq) : p;
}

Placement b_shift(const Placement& p, int k) {
  const auto seq = b_sequence(p, k);
  return seq ? cyclic_shift(p, *seq) : p;
}

Placement b_shift_via_inverse(const Placement& p, int k) {
  return inverse_placement(a_shift(inverse_placement(p), k));
}

std::int64_t inversion_drop_correction(const Permutation& perm, std::span<const int> columns) {
  if (columns.empty()) return 0;
  const int top = perm(columns.front());
  std::int64_t total = 0;
  for (std::size_t m = 0; m + 1 < columns.size(); ++m) {
    const int floor = perm(columns[m + 1]);
    for (int i = columns[m] + 1; i < columns[m + 1]; ++i) {
      if (perm(i) < top && perm(i) > floor) ++total;
    }
  }
  return total;
}

void ShiftTrace::record(ShiftStep step, std::optional<std::size_t> cap) {
  ++step_count;
  if (!cap || steps.size() < *cap) steps.push_back(std::move(step));
}

ShiftOutcome shift_once(const Placement& p, int k, ShiftKind kind) {
  const auto seq = kind == ShiftKind::ASHIFT ? a_sequence(p, k) : b_sequence(p, k);
  if (!seq) return {p, std::nullopt};
  Placement next = cyclic_shift(p, *seq);
  ShiftStep step;
  step.op = kind;
  step.moved_positions = *seq;
  step.perm_before = p.perm();
  step.perm_after = next.perm();
  step.inv_before = p.perm().inversions();
  step.inv_after = next.perm().inversions();
  return {std::move(next), std::move(step)};
}

namespace {

IteratedShift iterate(const Placement& p, int k, ShiftKind kind, TraceOptions options) {
  require_valid_k(k);
  IteratedShift result{p, ShiftTrace{k, {}, 0}};
  for (;;) {
    auto outcome = shift_once(result.placement, k, kind);
    if (!outcome.step) break;
    result.trace.record(std::move(*outcome.step), options.cap);
    result.placement = std::move(outcome.placement);
  }
  return result;
}

}  // namespace

IteratedShift phi_star(const Placement& p, int k, TraceOptions options) {
  return iterate(p, k, ShiftKind::ASHIFT, options);
}

IteratedShift psi_star(const Placement& p, int k, TraceOptions options) {
  return iterate(p, k, ShiftKind::BSHIFT, options);
}

}  // namespace ferrers
