#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/placement.hpp"
#include "ferrers/shifts.hpp"

namespace ferrers {

/// A word over {phi, psi}. Like function composition it is applied right to
/// left: the program "phi psi psi" applies psi twice, then phi.
class ShiftProgram {
 public:
  ShiftProgram() = default;
  explicit ShiftProgram(std::vector<ShiftKind> ops) : ops_(std::move(ops)) {}

  const std::vector<ShiftKind>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

  bool operator==(const ShiftProgram&) const = default;

 private:
  std::vector<ShiftKind> ops_;
};

/// Accepts "phi"/"psi" tokens separated by spaces, commas or dots, or the
/// letters φ/ψ written back to back ("φψψ"). The empty string is the empty
/// program. Throws ParseError.
ShiftProgram parse_program(std::string_view text);
std::string format_program(const ShiftProgram& program);

/// Applies the program right to left. Fixed points pass through, and only
/// non-trivial steps are recorded.
IteratedShift apply_program(const Placement& p, int k, const ShiftProgram& program,
                            TraceOptions options = {});

enum class StrategyKind { ALWAYS_PHI, ALWAYS_PSI, ALTERNATE, RANDOM, PROGRAM_PREFIX };

/// How to choose between phi and psi while reducing to normal form.
struct Strategy {
  StrategyKind kind = StrategyKind::ALWAYS_PHI;
  std::uint64_t seed = 0;
  ShiftProgram prefix;

  static Strategy always_phi() { return {StrategyKind::ALWAYS_PHI, 0, {}}; }
  static Strategy always_psi() { return {StrategyKind::ALWAYS_PSI, 0, {}}; }
  /// phi first, then psi, then phi, ...
  static Strategy alternate() { return {StrategyKind::ALTERNATE, 0, {}}; }
  /// Fair coin per step from a seeded mt19937_64.
  static Strategy random(std::uint64_t seed) { return {StrategyKind::RANDOM, seed, {}}; }
  /// Runs `program` first, then finishes with phi.
  static Strategy program_prefix(ShiftProgram program) {
    return {StrategyKind::PROGRAM_PREFIX, 0, std::move(program)};
  }
};

std::string describe(const Strategy& strategy);

struct NormalForm {
  Placement placement;
  std::size_t steps = 0;
};

/// Reduces p until it avoids k...21. Every step is non-trivial, so `steps`
/// is the length of the reduction word actually used.
NormalForm normal_form(const Placement& p, int k, const Strategy& strategy);

struct RewriteNode {
  Placement placement;
  bool is_normal = true;
  std::size_t minimal_steps = 0;
};

RewriteNode rewrite_node(const Placement& p, int k);

struct LocalCommutationReport {
  bool applicable = false;          // A- and B-sequences exist and differ
  bool holds = false;               // phi(psi(p)) == psi(phi(p))
  bool both_still_contain = false;  // phi(p) and psi(p) still contain k...21

  bool confirmed() const noexcept { return !applicable || (holds && both_still_contain); }
};

LocalCommutationReport local_commutation_check(const Placement& p, int k);

/// phi*(p') == (phi*(p))'
bool global_commutation_check(const Placement& p, int k);

/// Result of exploring every reduction word from p.
struct ReductionSummary {
  std::size_t normal_form_count = 0;  // distinct normal forms reachable
  std::size_t shortest = 0;           // shortest maximal reduction
  std::size_t longest = 0;            // longest maximal reduction
  std::size_t states = 0;             // placements visited

  bool confluent() const noexcept { return normal_form_count == 1 && shortest == longest; }
};

/// Memoised walk over the whole {phi, psi} reduction graph below p.
ReductionSummary explore_reductions(const Placement& p, int k);

}  // namespace ferrers
