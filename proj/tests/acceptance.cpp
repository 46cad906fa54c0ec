// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
//
// Each criterion is a function returning an Outcome. Wall-clock limits are
// enforced here rather than by ctest so a slow but correct run still says
// which criterion overran.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ferrers/ferrers.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace ferrers;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::optional<std::string> failure;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Placement sq(std::vector<int> v) { return Placement::square(Permutation(std::move(v))); }

std::vector<Placement> all_square(int n) {
  std::vector<Placement> out;
  for (const auto& perm : oracle::all_permutations(n)) out.push_back(Placement::square(perm));
  return out;
}

std::vector<Placement> all_on_boards(int n_max) {
  std::vector<Placement> out;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& b : boards_with_placements(n)) {
      for (const auto& p : PlacementRange(b)) out.push_back(p);
    }
  }
  return out;
}

std::string where(const Placement& p, int k) {
  return "board " + format_board(p.board()) + " perm " + format_permutation(p.perm()) + " k=" + std::to_string(k);
}

// Records a failure once; later ones are ignored so the first in sweep order is reported.
void note(Outcome& o, bool ok, const std::function<std::string()>& what) {
  ++o.checks;
  if (!ok && !o.failure) o.failure = what();
}

// The correction sum, recomputed here from the definition.
std::int64_t correction(const Permutation& perm, const std::vector<int>& cols) {
  std::int64_t sum = 0;
  const int top = perm(cols.front());
  for (std::size_t m = 0; m + 1 < cols.size(); ++m) {
    const int low = perm(cols[m + 1]);
    for (int i = cols[m] + 1; i < cols[m + 1]; ++i) sum += (perm(i) < top && perm(i) > low) ? 1 : 0;
  }
  return sum;
}

// ---------------------------------------------------------------------------

Outcome worked_examples() {
  Outcome o;
  const auto expect = [&](const Placement& got, const std::string& want, const std::string& what) {
    note(o, format_permutation(got.perm()) == want,
         [&] { return what + ": got " + format_permutation(got.perm()) + ", expected " + want; });
  };
  expect(phi_star(sq({7, 4, 6, 3, 5, 2, 1}), 4).placement, "3 2 6 1 5 7 4", "phi*(7463521)");
  expect(phi_star(sq({7, 6, 4, 2, 5, 3, 1}), 4).placement, "4 2 1 7 5 3 6", "phi*(7642531)");
  const auto pi = sq({17, 21, 20, 16, 19, 18, 13, 15, 11, 14, 12, 8, 10, 9, 7, 4, 2, 6, 5, 3, 1});
  expect(a_shift(pi, 12), "16 21 20 15 19 18 13 14 11 12 10 8 9 7 6 4 2 5 3 1 17", "phi of the length-21 example");
  expect(b_shift(pi, 12), "17 20 19 16 18 15 13 14 11 12 10 8 9 7 4 2 21 6 5 3 1", "psi of the length-21 example");
  const auto labels = label_sequence(std::vector<int>{3, 7, 4, 9, 1, 8, 5, 6, 2});
  note(o, labels == LabelSequence({2, 3, 2, 4, 1, 3, 2, 2, 1}), [] { return std::string("label table differs"); });
  return o;
}

Outcome global_commutation() {
  Outcome o;
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : all_square(n)) {
      for (int k = 2; k <= 5; ++k) note(o, global_commutation_check(p, k), [&] { return where(p, k); });
    }
  }
  for (const auto& p : all_on_boards(6)) {
    for (int k = 2; k <= 4; ++k) note(o, global_commutation_check(p, k), [&] { return where(p, k); });
  }
  return o;
}

Outcome local_commutation() {
  Outcome o;
  std::size_t applicable = 0;
  const auto check = [&](const Placement& p, int k) {
    const auto r = local_commutation_check(p, k);
    applicable += r.applicable ? 1 : 0;
    note(o, r.confirmed(), [&] {
      return where(p, k) + (r.holds ? "" : " (phi psi != psi phi)") +
             (r.both_still_contain ? "" : " (a shift lost the pattern)");
    });
  };
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : all_square(n)) {
      for (int k = 2; k <= 5; ++k) check(p, k);
    }
  }
  for (const auto& p : all_on_boards(6)) {
    for (int k = 2; k <= 4; ++k) check(p, k);
  }
  if (applicable == 0 && !o.failure) o.failure = "no placement with A != B was seen";
  return o;
}

Outcome confluence() {
  Outcome o;
  std::vector<Strategy> strategies{Strategy::always_phi(), Strategy::always_psi(), Strategy::alternate()};
  for (std::uint64_t s = 0; s < 20; ++s) strategies.push_back(Strategy::random(20240 + s));
  for (const auto& p : all_square(6)) {
    for (int k = 2; k <= 3; ++k) {
      const auto reference = normal_form(p, k, strategies.front());
      for (const auto& s : strategies) {
        const auto nf = normal_form(p, k, s);
        note(o, nf.placement == reference.placement && nf.steps == reference.steps,
             [&] { return where(p, k) + " under " + describe(s); });
      }
      const auto summary = explore_reductions(p, k);
      note(o, summary.confluent() && summary.longest == reference.steps, [&] {
        return where(p, k) + ": " + std::to_string(summary.normal_form_count) + " normal forms, lengths " +
               std::to_string(summary.shortest) + ".." + std::to_string(summary.longest);
      });
    }
  }
  return o;
}

// Every state any strategy visits from a permutation of S_6 is again in S_6,
// so checking every phi-step out of S_6 covers every run of the previous criterion.
Outcome inversion_drop() {
  Outcome o;
  for (const auto& p : all_square(6)) {
    for (int k = 2; k <= 3; ++k) {
      const auto a = a_sequence(p, k);
      if (!a) continue;
      const auto next = a_shift(p, k);
      const auto drop = oracle::inversions(p.perm()) - oracle::inversions(next.perm());
      const auto expected = (k - 1) + 2 * correction(p.perm(), *a);
      note(o, drop == expected, [&] {
        return where(p, k) + ": drop " + std::to_string(drop) + ", formula " + std::to_string(expected);
      });
    }
  }
  return o;
}

Outcome bwx() {
  Outcome o;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& b : boards_with_placements(n)) {
      for (int k = 2; k <= 4; ++k) {
        const auto r = verify_bwx_bijection(b, k);
        const auto target = count_avoiders(b, PatternSet({decreasing_pattern(k)}), false).count;
        const auto domain = count_avoiders(b, PatternSet({shifted_pattern(k)}), false).count;
        note(o, r.ok() && r.domain_size == domain && r.target_size == target && domain == target, [&] {
          return "board " + format_board(b) + " k=" + std::to_string(k) + ": " + std::to_string(domain) + " vs " +
                 std::to_string(target);
        });
      }
    }
  }
  return o;
}

Outcome involutions() {
  Outcome o;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& b : self_conjugate_boards_with_placements(n)) {
      for (int k = 2; k <= 4; ++k) {
        const auto r = verify_involution_transfer(b, k);
        note(o, r.ok() && r.domain_size == r.target_size,
             [&] { return "board " + format_board(b) + " k=" + std::to_string(k); });
      }
    }
  }
  struct Family {
    std::vector<std::vector<int>> patterns;
    int k;
  };
  const std::vector<Family> families{{{{1, 2, 3, 4}}, 4}, {{{1, 2, 3}}, 3}, {{{1, 2, 3, 4}, {1, 2, 4, 3}}, 2},
                                     {{{1, 2, 3, 4, 5}}, 5}};
  for (const auto& f : families) {
    std::vector<Permutation> ps;
    for (const auto& v : f.patterns) ps.emplace_back(v);
    const PatternSet set(ps);
    for (int n = 0; n <= 8; ++n) {
      const auto r = verify_wilf_set(n, set, f.k);
      note(o, r.equal(), [&] {
        return "n=" + std::to_string(n) + " k=" + std::to_string(f.k) + ": " + std::to_string(r.count_patterns) +
               " vs " + std::to_string(r.count_transferred);
      });
    }
  }
  return o;
}

Outcome motzkin_identities() {
  Outcome o;
  const auto report = verify_motzkin_identities(8);
  const std::vector<Permutation> patterns{Permutation({1, 2, 3, 4}), Permutation({4, 3, 2, 1}),
                                          Permutation({2, 1, 4, 3}), Permutation({3, 2, 1, 4})};
  for (const auto& row : report.rows) {
    note(o, row.ok(), [&] { return "n=" + std::to_string(row.n) + " differs from M_n"; });
    note(o, row.motzkin == oracle::motzkin_by_recurrence(row.n),
         [&] { return "formula and recurrence disagree at n=" + std::to_string(row.n); });
    const std::vector<std::uint64_t> counted{row.avoid_1234, row.avoid_4321, row.avoid_2143, row.avoid_3214};
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      const auto brute = oracle::involutions_avoiding(row.n, {patterns[i]});
      note(o, brute == counted[i], [&] {
        return "brute-force count " + std::to_string(brute) + " at n=" + std::to_string(row.n) + " pattern " +
               format_permutation(patterns[i]);
      });
    }
  }
  note(o, report.rows.size() == 9 && report.rows.back().motzkin == 323,
       [] { return std::string("M_8 is not 323"); });
  return o;
}

Outcome property_suites() {
  Outcome o;
  using WordCheck = props::Failure (*)(const Permutation&, int);
  const std::vector<WordCheck> word_checks{
      props::labels_give_a_sequence, props::a_labels_unchanged,      props::b_labels_unchanged,
      props::small_labels_never_increase, props::intersection_contiguous, props::a_longer_after_intersection,
      props::a_prefix_survives,      props::a_suffix_survives,       props::middles_coincide};
  const auto record = [&](const props::Failure& f) { note(o, !f, [&] { return *f; }); };
  for (int n = 0; n <= 7; ++n) {
    for (const auto& perm : oracle::all_permutations(n)) {
      record(props::same_label_increasing(perm));
      const auto p = Placement::square(perm);
      for (int k = 2; k <= 5; ++k) {
        for (auto check : word_checks) record(check(perm, k));
        record(props::two_definitions_agree(p, k));
        record(props::psi_keeps_a_start(p, k));
      }
    }
  }
  for (const auto& p : all_on_boards(6)) {
    for (int k = 2; k <= 4; ++k) {
      record(props::two_definitions_agree(p, k));
      record(props::psi_keeps_a_start(p, k));
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked examples", 1.0, worked_examples},
      {2, "global commutation", 120.0, global_commutation},
      {3, "local commutation", 0.0, local_commutation},
      {4, "confluence", 0.0, confluence},
      {5, "inversion drop formula", 0.0, inversion_drop},
      {6, "BWX bijection", 0.0, bwx},
      {7, "involution transfer and Wilf sets", 0.0, involutions},
      {8, "Motzkin identities", 300.0, motzkin_identities},
      {9, "property suites", 0.0, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.failure && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      std::ostringstream msg;
      msg << "took " << seconds << " s, limit " << c.limit_seconds << " s";
      outcome.failure = msg.str();
    }
    const bool pass = !outcome.failure;
    failures += pass ? 0 : 1;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << outcome.checks
              << " checks, " << timing << ")";
    if (!pass) std::cout << " -- " << *outcome.failure;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
