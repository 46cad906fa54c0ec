#include "ferrers/rewriting.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "ferrers/error.hpp"

namespace ferrers {

ShiftProgram parse_program(std::string_view text) {
  std::string spaced;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto rest = text.substr(i);
    if (rest.starts_with("\xCF\x86")) {  // φ
      spaced += " phi ";
      ++i;
    } else if (rest.starts_with("\xCF\x88")) {  // ψ
      spaced += " psi ";
      ++i;
    } else if (text[i] == ',' || text[i] == '.') {
      spaced += ' ';
    } else {
      spaced += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    }
  }

  std::vector<ShiftKind> ops;
  std::size_t i = 0;
  while (i < spaced.size()) {
    while (i < spaced.size() && std::isspace(static_cast<unsigned char>(spaced[i]))) ++i;
    const std::size_t start = i;
    while (i < spaced.size() && !std::isspace(static_cast<unsigned char>(spaced[i]))) ++i;
    if (i == start) continue;
    const auto token = std::string_view(spaced).substr(start, i - start);
    if (token == "phi") {
      ops.push_back(ShiftKind::ASHIFT);
    } else if (token == "psi") {
      ops.push_back(ShiftKind::BSHIFT);
    } else {
      throw ParseError("unknown program letter '" + std::string(token) + "'");
    }
  }
  return ShiftProgram(std::move(ops));
}

std::string format_program(const ShiftProgram& program) {
  std::string out;
  for (auto op : program.ops()) {
    if (!out.empty()) out += ' ';
    out += to_string(op);
  }
  return out;
}

IteratedShift apply_program(const Placement& p, int k, const ShiftProgram& program, TraceOptions options) {
  require_valid_k(k);
  IteratedShift result{p, ShiftTrace{k, {}, 0}};
  for (auto it = program.ops().rbegin(); it != program.ops().rend(); ++it) {
    auto outcome = shift_once(result.placement, k, *it);
    if (!outcome.step) continue;
    result.trace.record(std::move(*outcome.step), options.cap);
    result.placement = std::move(outcome.placement);
  }
  return result;
}

std::string describe(const Strategy& strategy) {
  switch (strategy.kind) {
    case StrategyKind::ALWAYS_PHI: return "always-phi";
    case StrategyKind::ALWAYS_PSI: return "always-psi";
    case StrategyKind::ALTERNATE: return "alternate";
    case StrategyKind::RANDOM: return "random(seed=" + std::to_string(strategy.seed) + ")";
    case StrategyKind::PROGRAM_PREFIX: return "prefix(" + format_program(strategy.prefix) + ")";
  }
  return "unknown";
}

NormalForm normal_form(const Placement& p, int k, const Strategy& strategy) {
  require_valid_k(k);
  std::mt19937_64 rng(strategy.seed);
  std::bernoulli_distribution coin(0.5);
  auto prefix = strategy.prefix.ops().rbegin();
  const auto prefix_end = strategy.prefix.ops().rend();

  NormalForm result{p, 0};
  for (;;) {
    ShiftKind op = ShiftKind::ASHIFT;
    switch (strategy.kind) {
      case StrategyKind::ALWAYS_PHI: op = ShiftKind::ASHIFT; break;
      case StrategyKind::ALWAYS_PSI: op = ShiftKind::BSHIFT; break;
      case StrategyKind::ALTERNATE:
        op = result.steps % 2 == 0 ? ShiftKind::ASHIFT : ShiftKind::BSHIFT;
        break;
      case StrategyKind::RANDOM: op = coin(rng) ? ShiftKind::ASHIFT : ShiftKind::BSHIFT; break;
      case StrategyKind::PROGRAM_PREFIX:
        op = prefix != prefix_end ? *prefix++ : ShiftKind::ASHIFT;
        break;
    }
    // phi and psi move dots exactly when the placement contains k...21.
    auto outcome = shift_once(result.placement, k, op);
    if (!outcome.step) return result;
    result.placement = std::move(outcome.placement);
    ++result.steps;
  }
}

RewriteNode rewrite_node(const Placement& p, int k) {
  const auto reduced = phi_star(p, k, TraceOptions{0});
  return RewriteNode{p, reduced.trace.step_count == 0, reduced.trace.step_count};
}

LocalCommutationReport local_commutation_check(const Placement& p, int k) {
  require_valid_k(k);
  const auto a = a_sequence(p, k);
  const auto b = b_sequence(p, k);
  LocalCommutationReport report;
  report.applicable = a && b && *a != *b;
  const Placement phi_p = a ? cyclic_shift(p, *a) : p;
  const Placement psi_p = b ? cyclic_shift(p, *b) : p;
  report.holds = a_shift(psi_p, k) == b_shift(phi_p, k);
  report.both_still_contain = a_sequence(phi_p, k).has_value() && a_sequence(psi_p, k).has_value();
  return report;
}

bool global_commutation_check(const Placement& p, int k) {
  const auto lhs = phi_star(inverse_placement(p), k, TraceOptions{0}).placement;
  const auto rhs = inverse_placement(phi_star(p, k, TraceOptions{0}).placement);
  return lhs == rhs;
}

namespace {

struct Reach {
  std::set<Permutation> normal_forms;
  std::size_t shortest = 0;
  std::size_t longest = 0;
};

class ReductionExplorer {
 public:
  ReductionExplorer(const Board& board, int k) : board_(board), k_(k) {}

  const Reach& visit(const Permutation& perm) {
    if (auto it = memo_.find(perm); it != memo_.end()) return it->second;
    const Placement p(board_, perm);
    Reach reach;
    const auto a = a_sequence(p, k_);
    if (!a) {
      reach.normal_forms.insert(perm);
    } else {
      const auto b = b_sequence(p, k_);
      std::vector<Permutation> next{cyclic_shift(p, *a).perm()};
      if (*b != *a) next.push_back(cyclic_shift(p, *b).perm());
      bool first = true;
      for (const auto& q : next) {
        const Reach& child = visit(q);
        reach.normal_forms.insert(child.normal_forms.begin(), child.normal_forms.end());
        reach.shortest = first ? child.shortest + 1 : std::min(reach.shortest, child.shortest + 1);
        reach.longest = std::max(reach.longest, child.longest + 1);
        first = false;
      }
    }
    return memo_.emplace(perm, std::move(reach)).first->second;
  }

  std::size_t states() const noexcept { return memo_.size(); }

 private:
  Board board_;
  int k_;
  std::map<Permutation, Reach> memo_;
};

}  // namespace

ReductionSummary explore_reductions(const Placement& p, int k) {
  require_valid_k(k);
  ReductionExplorer explorer(p.board(), k);
  const Reach& root = explorer.visit(p.perm());
  ReductionSummary summary;
  summary.normal_form_count = root.normal_forms.size();
  summary.shortest = root.shortest;
  summary.longest = root.longest;
  summary.states = explorer.states();
  return summary;
}

}  // namespace ferrers
