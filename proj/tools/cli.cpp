#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ferrers/ferrers.hpp"
#include "json.hpp"

namespace ferrers::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string op = "phi";
  std::string check;
  int k = 0;
  std::string board;
  std::string perm;
  std::string program;
  std::string strategy = "always-phi";
  std::string format;
  std::vector<std::string> patterns;
  std::vector<std::string> seed_perms;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trace_cap;
  std::optional<std::size_t> limit;
  std::optional<unsigned> jobs;
  bool trace = false;
  bool involutions = false;
  bool all_boards = false;
  int random_strategies = 20;
};

// ---------------------------------------------------------------------------
// Config helpers

unsigned resolve_jobs(const Config& cfg) {
  if (cfg.jobs) return std::max(1u, *cfg.jobs);
  if (const char* env = std::getenv("FERRERS_JOBS")) {
    unsigned value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError("FERRERS_JOBS must be a non-negative integer");
    }
    return value == 0 ? hardware_jobs() : value;
  }
  return 1;
}

int require_k(const Config& cfg) {
  if (cfg.k == 0) throw UsageError("--k is required");
  require_valid_k(cfg.k);
  return cfg.k;
}

void check_n(int n) {
  if (n < 0) throw UsageError("n must be non-negative");
  if (n > kMaxN) throw UsageError("n is capped at " + std::to_string(kMaxN));
}

Board board_for(const Config& cfg, std::optional<int> fallback_n = std::nullopt) {
  if (!cfg.board.empty()) {
    Board b = parse_board(cfg.board);
    check_n(b.columns());
    return b;
  }
  const auto n = cfg.n ? cfg.n : fallback_n;
  if (!n) throw UsageError("give --board or --n");
  check_n(*n);
  return Board::square(*n);
}

std::vector<Board> boards_for(const Config& cfg) {
  if (cfg.all_boards) {
    if (!cfg.n) throw UsageError("--all-boards needs --n");
    check_n(*cfg.n);
    return boards_with_placements(*cfg.n);
  }
  return {board_for(cfg)};
}

std::vector<Board> self_conjugate_boards_for(const Config& cfg) {
  auto boards = boards_for(cfg);
  if (cfg.all_boards) {
    std::erase_if(boards, [](const Board& b) { return !is_self_conjugate(b); });
  }
  return boards;
}

PatternSet patterns_for(const Config& cfg) {
  if (cfg.patterns.empty()) throw UsageError("give at least one --avoid pattern");
  std::vector<Permutation> patterns;
  for (const auto& text : cfg.patterns) patterns.push_back(parse_permutation(text));
  return PatternSet(std::move(patterns));
}

Placement placement_for(const Config& cfg, const std::string& perm_text) {
  Permutation perm = parse_permutation(perm_text);
  if (cfg.board.empty()) return Placement::square(std::move(perm));
  return Placement(parse_board(cfg.board), std::move(perm));
}

std::string format_or(const Config& cfg, std::string fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

json ints(std::span<const int> values) { return json(std::vector<int>(values.begin(), values.end())); }

json step_json(const ShiftStep& step) {
  json j;
  j["op"] = std::string(to_string(step.op));
  j["moved_positions"] = step.moved_positions;
  j["perm_before"] = ints(step.perm_before.values());
  j["perm_after"] = ints(step.perm_after.values());
  j["inv_before"] = step.inv_before;
  j["inv_after"] = step.inv_after;
  return j;
}

std::string join_positions(const std::vector<int>& positions) {
  std::string out;
  for (int c : positions) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
  }
  return out;
}

std::string describe(const Placement& p) {
  return "board " + format_board(p.board()) + " perm " + format_permutation(p.perm());
}

// ---------------------------------------------------------------------------
// shift

Strategy strategy_for(const Config& cfg) {
  const auto& s = cfg.strategy;
  if (s == "always-phi") return Strategy::always_phi();
  if (s == "always-psi") return Strategy::always_psi();
  if (s == "alternate") return Strategy::alternate();
  if (s == "random") {
    if (!cfg.seed) throw UsageError("--strategy random requires --seed");
    return Strategy::random(*cfg.seed);
  }
  if (s == "program") return Strategy::program_prefix(parse_program(cfg.program));
  throw UsageError("unknown strategy '" + s + "'");
}

int cmd_shift(const Config& cfg, std::ostream& out) {
  const int k = require_k(cfg);
  if (cfg.perm.empty()) throw UsageError("--perm is required");
  const Placement p = placement_for(cfg, cfg.perm);
  const TraceOptions options{cfg.trace_cap};

  IteratedShift result{p, ShiftTrace{k, {}, 0}};
  std::optional<std::size_t> normal_steps;
  if (cfg.op == "phi" || cfg.op == "psi") {
    auto outcome = shift_once(p, k, cfg.op == "phi" ? ShiftKind::ASHIFT : ShiftKind::BSHIFT);
    if (outcome.step) result.trace.record(std::move(*outcome.step), options.cap);
    result.placement = std::move(outcome.placement);
  } else if (cfg.op == "phi-star") {
    result = phi_star(p, k, options);
  } else if (cfg.op == "psi-star") {
    result = psi_star(p, k, options);
  } else if (cfg.op == "program") {
    result = apply_program(p, k, parse_program(cfg.program), options);
  } else if (cfg.op == "normal-form") {
    const auto nf = normal_form(p, k, strategy_for(cfg));
    result.placement = nf.placement;
    normal_steps = nf.steps;
  } else {
    throw UsageError("unknown --op '" + cfg.op + "'");
  }

  const auto format = format_or(cfg, "text");
  if (format == "json") {
    json doc;
    doc["op"] = cfg.op;
    doc["k"] = k;
    doc["board"] = ints(p.board().heights());
    doc["input"] = ints(p.perm().values());
    doc["result"] = ints(result.placement.perm().values());
    if (normal_steps) {
      doc["strategy"] = ferrers::describe(strategy_for(cfg));
      doc["step_count"] = *normal_steps;
    } else {
      doc["step_count"] = result.trace.step_count;
      doc["truncated"] = result.trace.truncated();
      if (cfg.trace) {
        doc["steps"] = json::array();
        for (const auto& step : result.trace.steps) doc["steps"].push_back(step_json(step));
      }
    }
    out << doc.dump(2) << "\n";
  } else if (format == "text") {
    if (cfg.trace) {
      std::size_t index = 0;
      for (const auto& step : result.trace.steps) {
        out << "step " << ++index << ": " << to_string(step.op) << " moved " << join_positions(step.moved_positions)
            << " | " << format_permutation(step.perm_before) << " -> " << format_permutation(step.perm_after)
            << " | inv " << step.inv_before << " -> " << step.inv_after << "\n";
      }
      if (result.trace.truncated()) {
        out << "(" << result.trace.step_count - result.trace.steps.size() << " further steps not retained)\n";
      }
      if (normal_steps) out << "steps: " << *normal_steps << "\n";
    }
    out << format_permutation(result.placement.perm()) << "\n";
  } else {
    throw UsageError("shift supports --format text or json");
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// count

int cmd_count(const Config& cfg, std::ostream& out) {
  const Board board = board_for(cfg);
  const PatternSet patterns = patterns_for(cfg);
  if (cfg.involutions && !is_self_conjugate(board)) {
    throw UsageError("--involutions needs a self-conjugate board");
  }
  const auto report = count_avoiders(board, patterns, cfg.involutions, resolve_jobs(cfg));
  const auto format = format_or(cfg, "text");
  if (format == "json") {
    json doc;
    doc["board"] = ints(report.board.heights());
    doc["patterns"] = json::array();
    for (const auto& tau : report.patterns) doc["patterns"].push_back(ints(tau.values()));
    doc["symmetric_only"] = report.symmetric_only;
    doc["count"] = report.count;
    out << doc.dump() << "\n";
  } else if (format == "text") {
    out << report.count << "\n";
  } else {
    throw UsageError("count supports --format text or json");
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// verify

struct Verdict {
  std::string check;
  std::size_t checked = 0;
  std::string summary;  // extra text after the pass/fail head
  std::optional<std::string> counterexample;
  json details = json::object();
};

// Runs `ok` over every item and reports the smallest failing index.
template <class Item, class Pred>
std::optional<std::size_t> first_failure(const std::vector<Item>& items, unsigned jobs, Pred ok) {
  std::atomic<std::size_t> worst{std::numeric_limits<std::size_t>::max()};
  parallel_for(items.size(), jobs, [&](std::size_t i) {
    if (i >= worst.load(std::memory_order_relaxed)) return;
    if (!ok(items[i])) {
      std::size_t seen = worst.load();
      while (i < seen && !worst.compare_exchange_weak(seen, i)) {
      }
    }
  });
  const auto idx = worst.load();
  if (idx == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return idx;
}

std::vector<Placement> placements_on(const std::vector<Board>& boards) {
  std::vector<Placement> all;
  for (const auto& b : boards) {
    for (const Placement& p : PlacementRange(b)) all.push_back(p);
  }
  return all;
}

Verdict verify_commutation(const Config& cfg, unsigned jobs) {
  const int k = require_k(cfg);
  const auto boards = boards_for(cfg);
  const auto items = placements_on(boards);
  Verdict v{"commutation", items.size(), "k=" + std::to_string(k), std::nullopt, json::object()};
  if (auto bad = first_failure(items, jobs, [&](const Placement& p) { return global_commutation_check(p, k); })) {
    const Placement& p = items[*bad];
    const auto lhs = phi_star(inverse_placement(p), k, TraceOptions{0}).placement;
    const auto rhs = inverse_placement(phi_star(p, k, TraceOptions{0}).placement);
    v.counterexample = describe(p) + ": phi*(p') = " + format_permutation(lhs.perm()) +
                       ", (phi*(p))' = " + format_permutation(rhs.perm());
  }
  v.summary += ", " + std::to_string(boards.size()) + " board(s)";
  return v;
}

Verdict verify_local(const Config& cfg, unsigned jobs) {
  const int k = require_k(cfg);
  const auto boards = boards_for(cfg);
  const auto items = placements_on(boards);
  std::atomic<std::size_t> applicable{0};
  Verdict v{"local", items.size(), "", std::nullopt, json::object()};
  auto bad = first_failure(items, jobs, [&](const Placement& p) {
    const auto report = local_commutation_check(p, k);
    if (report.applicable) applicable.fetch_add(1, std::memory_order_relaxed);
    return report.confirmed();
  });
  if (bad) {
    const auto report = local_commutation_check(items[*bad], k);
    v.counterexample = describe(items[*bad]) + ": holds=" + (report.holds ? "true" : "false") +
                       " both_still_contain=" + (report.both_still_contain ? "true" : "false");
  }
  v.summary = "k=" + std::to_string(k) + ", " + std::to_string(applicable.load()) + " with A != B";
  v.details["applicable"] = applicable.load();
  return v;
}

Verdict verify_confluence(const Config& cfg, unsigned jobs) {
  const int k = require_k(cfg);
  if (cfg.random_strategies < 0) throw UsageError("--random-strategies must be non-negative");
  if (cfg.random_strategies > 0 && !cfg.seed) throw UsageError("random strategies require --seed");
  std::vector<Strategy> strategies{Strategy::always_phi(), Strategy::always_psi(), Strategy::alternate()};
  for (int i = 0; i < cfg.random_strategies; ++i) {
    strategies.push_back(Strategy::random(*cfg.seed + static_cast<std::uint64_t>(i)));
  }

  const auto items = placements_on(boards_for(cfg));
  Verdict v{"confluence", items.size(), "", std::nullopt, json::object()};
  auto check = [&](const Placement& p, std::string* why) {
    const auto reference = phi_star(p, k);
    for (const auto& step : reference.trace.steps) {
      const auto drop = step.inv_before - step.inv_after;
      const auto expected = (k - 1) + 2 * inversion_drop_correction(step.perm_before, step.moved_positions);
      if (drop != expected) {
        if (why) *why = "inversion drop " + std::to_string(drop) + " != " + std::to_string(expected);
        return false;
      }
    }
    for (const auto& s : strategies) {
      const auto nf = normal_form(p, k, s);
      if (nf.placement != reference.placement || nf.steps != reference.trace.step_count) {
        if (why) {
          *why = ferrers::describe(s) + " reached " + format_permutation(nf.placement.perm()) + " in " +
                 std::to_string(nf.steps) + " steps";
        }
        return false;
      }
    }
    const auto summary = explore_reductions(p, k);
    if (!summary.confluent()) {
      if (why) {
        *why = std::to_string(summary.normal_form_count) + " normal forms, lengths " +
               std::to_string(summary.shortest) + ".." + std::to_string(summary.longest);
      }
      return false;
    }
    return true;
  };
  if (auto bad = first_failure(items, jobs, [&](const Placement& p) { return check(p, nullptr); })) {
    std::string why;
    check(items[*bad], &why);
    v.counterexample = describe(items[*bad]) + ": " + why;
  }
  v.summary = "k=" + std::to_string(k) + ", " + std::to_string(strategies.size()) + " strategies";
  return v;
}

Verdict verify_bijection(const Config& cfg, unsigned jobs, bool involutions) {
  const int k = require_k(cfg);
  const auto boards = involutions ? self_conjugate_boards_for(cfg) : boards_for(cfg);
  for (const auto& b : boards) {
    if (involutions && !is_self_conjugate(b)) throw UsageError("board " + format_board(b) + " is not self-conjugate");
  }
  std::vector<BijectionReport> reports(boards.size());
  parallel_for(boards.size(), jobs, [&](std::size_t i) {
    reports[i] = involutions ? verify_involution_transfer(boards[i], k) : verify_bwx_bijection(boards[i], k);
  });
  Verdict v{involutions ? "involutions" : "bwx", 0, "", std::nullopt, json::object()};
  v.details["boards"] = json::array();
  for (std::size_t i = 0; i < boards.size(); ++i) {
    const auto& r = reports[i];
    v.checked += r.domain_size;
    v.details["boards"].push_back({{"board", ints(boards[i].heights())},
                                   {"domain", r.domain_size},
                                   {"target", r.target_size},
                                   {"ok", r.ok()}});
    if (!r.ok() && !v.counterexample) {
      v.counterexample = "board " + format_board(boards[i]) + ": domain " + std::to_string(r.domain_size) +
                         ", target " + std::to_string(r.target_size) +
                         (r.counterexample ? ", witness " + format_permutation(r.counterexample->perm()) : "");
    }
  }
  v.summary = "k=" + std::to_string(k) + ", " + std::to_string(boards.size()) + " board(s)";
  if (boards.size() == 1) {
    v.summary += ", " + std::to_string(reports[0].domain_size) + " <-> " + std::to_string(reports[0].target_size);
  }
  return v;
}

Verdict verify_wilf(const Config& cfg, unsigned jobs) {
  const int k = require_k(cfg);
  const PatternSet patterns = patterns_for(cfg);
  int lo = 0;
  int hi = 0;
  if (cfg.n_max) {
    hi = *cfg.n_max;
  } else if (cfg.n) {
    lo = hi = *cfg.n;
  } else {
    throw UsageError("give --n or --n-max");
  }
  check_n(hi);
  Verdict v{"wilf", 0, "k=" + std::to_string(k), std::nullopt, json::object()};
  v.details["rows"] = json::array();
  for (int n = lo; n <= hi; ++n) {
    const auto r = verify_wilf_set(n, patterns, k, jobs);
    ++v.checked;
    v.details["rows"].push_back({{"n", n}, {"count_T", r.count_patterns}, {"count_T_prime", r.count_transferred}});
    if (lo == hi) {
      v.summary += ", I(T)=" + std::to_string(r.count_patterns) + " I(T')=" + std::to_string(r.count_transferred);
    }
    if (!r.equal() && !v.counterexample) {
      v.counterexample = "n=" + std::to_string(n) + ": I(T)=" + std::to_string(r.count_patterns) +
                         " I(T')=" + std::to_string(r.count_transferred);
    }
  }
  return v;
}

Verdict verify_motzkin(const Config& cfg, unsigned jobs, std::ostream& out, bool text) {
  const int n_max = cfg.n_max ? *cfg.n_max : (cfg.n ? *cfg.n : -1);
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  check_n(n_max);
  const auto report = verify_motzkin_identities(n_max, jobs);
  Verdict v{"motzkin", report.rows.size(), "n<=" + std::to_string(n_max), std::nullopt, json::object()};
  v.details["rows"] = json::array();
  for (const auto& r : report.rows) {
    if (text) {
      out << "n=" << r.n << " M=" << r.motzkin << " I(1234)=" << r.avoid_1234 << " I(4321)=" << r.avoid_4321
          << " I(2143)=" << r.avoid_2143 << " I(3214)=" << r.avoid_3214 << (r.ok() ? "" : "  MISMATCH") << "\n";
    }
    v.details["rows"].push_back({{"n", r.n},
                                 {"motzkin", r.motzkin},
                                 {"1234", r.avoid_1234},
                                 {"4321", r.avoid_4321},
                                 {"2143", r.avoid_2143},
                                 {"3214", r.avoid_3214}});
    if (!r.ok() && !v.counterexample) v.counterexample = "n=" + std::to_string(r.n);
  }
  return v;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const unsigned jobs = resolve_jobs(cfg);
  const auto format = format_or(cfg, "text");
  if (format != "text" && format != "json") throw UsageError("verify supports --format text or json");
  const bool text = format == "text";

  Verdict v;
  if (cfg.check == "commutation") {
    v = verify_commutation(cfg, jobs);
  } else if (cfg.check == "local") {
    v = verify_local(cfg, jobs);
  } else if (cfg.check == "confluence") {
    v = verify_confluence(cfg, jobs);
  } else if (cfg.check == "bwx") {
    v = verify_bijection(cfg, jobs, false);
  } else if (cfg.check == "involutions") {
    v = verify_bijection(cfg, jobs, true);
  } else if (cfg.check == "wilf") {
    v = verify_wilf(cfg, jobs);
  } else if (cfg.check == "motzkin") {
    v = verify_motzkin(cfg, jobs, out, text);
  } else {
    throw UsageError("unknown check '" + cfg.check + "'");
  }

  const bool pass = !v.counterexample;
  if (text) {
    out << (pass ? "PASS " : "FAIL ") << v.check << " (" << v.summary << "): " << v.checked << " checked\n";
    if (!pass) out << "counterexample: " << *v.counterexample << "\n";
  } else {
    json doc;
    doc["check"] = v.check;
    doc["passed"] = pass;
    doc["checked"] = v.checked;
    doc["summary"] = v.summary;
    doc["counterexample"] = pass ? json(nullptr) : json(*v.counterexample);
    doc["details"] = v.details;
    out << doc.dump(2) << "\n";
  }
  return pass ? kPass : kCounterexample;
}

// ---------------------------------------------------------------------------
// graph and inspect

int cmd_graph(const Config& cfg, std::ostream& out) {
  const int k = require_k(cfg);
  if (cfg.seed_perms.empty()) throw UsageError("give at least one --seed-perm");
  std::vector<Placement> seeds;
  for (const auto& text : cfg.seed_perms) seeds.push_back(placement_for(cfg, text));
  out << export_graph(seeds, k, parse_graph_format(format_or(cfg, "dot")));
  return kPass;
}

int cmd_inspect(const Config& cfg, std::ostream& out) {
  const int k = require_k(cfg);
  if (cfg.perm.empty()) throw UsageError("--perm is required");
  const Placement p = placement_for(cfg, cfg.perm);
  const auto labels = label_sequence(p.perm().values());
  const auto a = a_sequence(p, k);
  const auto b = b_sequence(p, k);

  auto values_at = [&](const std::optional<DotSequence>& seq) {
    std::vector<int> values;
    if (seq) {
      for (int c : *seq) values.push_back(p.perm()(c));
    }
    return values;
  };
  std::vector<std::vector<int>> occurrences;
  if (!cfg.patterns.empty()) occurrences = find_occurrences(p, parse_permutation(cfg.patterns.front()), cfg.limit);

  if (format_or(cfg, "text") == "json") {
    json doc;
    doc["board"] = ints(p.board().heights());
    doc["perm"] = ints(p.perm().values());
    doc["k"] = k;
    doc["labels"] = ints(labels.labels());
    doc["inversions"] = inversion_number(p);
    doc["a_sequence"] = a ? json(*a) : json(nullptr);
    doc["b_sequence"] = b ? json(*b) : json(nullptr);
    if (!cfg.patterns.empty()) doc["occurrences"] = occurrences;
    out << doc.dump(2) << "\n";
    return kPass;
  }
  auto line = [&](const std::string& name, const std::optional<DotSequence>& seq) {
    out << name << ": ";
    if (!seq) {
      out << "none\n";
      return;
    }
    const auto values = values_at(seq);
    out << "values";
    for (int v : values) out << ' ' << v;
    out << " at columns " << join_positions(*seq) << "\n";
  };
  out << "board: " << format_board(p.board()) << "\n";
  out << "perm: " << format_permutation(p.perm()) << "\n";
  out << "labels:";
  for (int l : labels.labels()) out << ' ' << l;
  out << "\ninversions: " << inversion_number(p) << "\n";
  line("A-sequence", a);
  line("B-sequence", b);
  if (!cfg.patterns.empty()) {
    out << "occurrences of " << cfg.patterns.front() << ":";
    for (const auto& occ : occurrences) out << " (" << join_positions(occ) << ")";
    out << "\n";
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Shifts, normal forms and avoider counts for rook placements on Ferrers boards"};
  app.name("ferrers");
  app.require_subcommand(1);

  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "Length of the decreasing pattern k...21"); };
  auto add_board = [&](CLI::App* sub) {
    sub->add_option("--board", cfg.board, "Column heights, e.g. \"4,3,2,2\" (default: square)");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads (falls back to FERRERS_JOBS, then 1)");
  };

  auto* shift = app.add_subcommand("shift", "Apply phi, psi, phi*, psi*, a program, or reduce to normal form");
  shift->add_option("--op", cfg.op, "phi | psi | phi-star | psi-star | program | normal-form")
      ->check(CLI::IsMember({"phi", "psi", "phi-star", "psi-star", "program", "normal-form"}));
  add_k(shift);
  shift->add_option("--perm", cfg.perm, "Permutation in one-line notation");
  add_board(shift);
  shift->add_option("--program", cfg.program, "Word over {phi, psi}, applied right to left");
  shift->add_option("--strategy", cfg.strategy, "always-phi | always-psi | alternate | random | program");
  shift->add_option("--seed", cfg.seed, "Seed for --strategy random");
  shift->add_flag("--trace", cfg.trace, "Print every step");
  shift->add_option("--trace-cap", cfg.trace_cap, "Keep at most this many steps in the trace");
  shift->add_option("--format", cfg.format, "text | json");

  auto* count = app.add_subcommand("count", "Count placements avoiding a pattern set");
  add_board(count);
  count->add_option("--n", cfg.n, "Square board size");
  count->add_option("--avoid", cfg.patterns, "Pattern to avoid (repeatable)");
  count->add_flag("--involutions", cfg.involutions, "Count symmetric placements only");
  count->add_option("--format", cfg.format, "text | json");
  add_jobs(count);

  auto* verify = app.add_subcommand("verify", "Exhaustively check one of the theorems");
  verify->add_option("check", cfg.check, "commutation | local | confluence | bwx | involutions | wilf | motzkin")
      ->required()
      ->check(CLI::IsMember({"commutation", "local", "confluence", "bwx", "involutions", "wilf", "motzkin"}));
  add_k(verify);
  add_board(verify);
  verify->add_option("--n", cfg.n, "Square board size");
  verify->add_option("--n-max", cfg.n_max, "Largest n (motzkin, wilf)");
  verify->add_flag("--all-boards", cfg.all_boards, "Sweep every board with --n columns");
  verify->add_option("--avoid", cfg.patterns, "Pattern of T for wilf (repeatable)");
  verify->add_option("--seed", cfg.seed, "Base seed for random strategies (confluence)");
  verify->add_option("--random-strategies", cfg.random_strategies, "Number of seeded random strategies");
  verify->add_option("--format", cfg.format, "text | json");
  add_jobs(verify);

  auto* graph = app.add_subcommand("graph", "Export the phi/psi rewriting graph below some seeds");
  add_k(graph);
  graph->add_option("--seed-perm", cfg.seed_perms, "Seed permutation (repeatable)");
  add_board(graph);
  graph->add_option("--format", cfg.format, "dot | json");

  auto* inspect = app.add_subcommand("inspect", "Show labels, A- and B-sequences, occurrences");
  add_k(inspect);
  inspect->add_option("--perm", cfg.perm, "Permutation in one-line notation");
  add_board(inspect);
  inspect->add_option("--pattern", cfg.patterns, "List occurrences of this pattern");
  inspect->add_option("--limit", cfg.limit, "Stop after this many occurrences");
  inspect->add_option("--format", cfg.format, "text | json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (shift->parsed()) return cmd_shift(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (graph->parsed()) return cmd_graph(cfg, out);
    if (inspect->parsed()) return cmd_inspect(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return kDataInvariant;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kDataInvariant;
  }
  return kUsage;
}

}  // namespace ferrers::cli
