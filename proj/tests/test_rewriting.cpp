#include <set>

#include "doctest.h"
#include "ferrers/ferrers.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {
Placement sq(std::vector<int> v) { return Placement::square(Permutation(std::move(v))); }
const Placement kPi = sq({7, 4, 6, 3, 5, 2, 1});
}  // namespace

TEST_CASE("programs apply right to left") {
  CHECK(apply_program(kPi, 4, parse_program("phi phi")).placement == sq({3, 2, 6, 1, 5, 7, 4}));
  CHECK(apply_program(kPi, 4, ShiftProgram()).placement == kPi);
  CHECK(apply_program(kPi, 4, ShiftProgram()).trace.step_count == 0);

  const auto psi_then_phi = apply_program(kPi, 4, parse_program("phi psi"));
  CHECK(psi_then_phi.placement == a_shift(b_shift(kPi, 4), 4));
  CHECK(psi_then_phi.trace.steps.front().op == ShiftKind::BSHIFT);
  CHECK(psi_then_phi.placement == apply_program(kPi, 4, parse_program("psi phi")).placement);

  // Steps on a fixed point are skipped, not recorded.
  const auto long_run = apply_program(kPi, 4, parse_program("phi phi phi phi"));
  CHECK(long_run.trace.step_count == 2);
  CHECK_THROWS_AS(apply_program(kPi, 1, ShiftProgram()), PreconditionError);
}

TEST_CASE("normal forms under the fixed strategies") {
  for (const auto& s : {Strategy::always_phi(), Strategy::always_psi(), Strategy::alternate(), Strategy::random(7),
                        Strategy::program_prefix(parse_program("psi"))}) {
    const auto nf = normal_form(kPi, 4, s);
    CHECK(nf.placement == sq({3, 2, 6, 1, 5, 7, 4}));
    CHECK(nf.steps == 2);
  }
  CHECK(normal_form(sq({4, 2, 1, 7, 5, 3, 6}), 4, Strategy::always_phi()).steps == 0);
  CHECK(normal_form(sq({7, 6, 4, 2, 5, 3, 1}), 4, Strategy::always_psi()).placement == sq({4, 2, 1, 7, 5, 3, 6}));
  CHECK(describe(Strategy::random(3)) == "random(seed=3)");
  CHECK(describe(Strategy::program_prefix(parse_program("psi phi"))) == "prefix(psi phi)");
}

TEST_CASE("random strategies are reproducible") {
  const auto p = sq({6, 5, 4, 3, 2, 1});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = normal_form(p, 2, Strategy::random(seed));
    const auto b = normal_form(p, 2, Strategy::random(seed));
    CHECK(a.placement == b.placement);
    CHECK(a.steps == b.steps);
  }
}

TEST_CASE("local commutation examples") {
  const auto r = local_commutation_check(kPi, 4);
  CHECK(r.applicable);
  CHECK(r.holds);
  CHECK(r.both_still_contain);
  CHECK_FALSE(local_commutation_check(sq({3, 2, 1}), 3).applicable);
  CHECK_FALSE(local_commutation_check(sq({1, 2, 3}), 2).applicable);
  CHECK(local_commutation_check(sq({1, 2, 3}), 2).confirmed());
}

TEST_CASE("global commutation examples") {
  CHECK(global_commutation_check(kPi, 4));
  CHECK(phi_star(inverse_placement(kPi), 4).placement == sq({4, 2, 1, 7, 5, 3, 6}));
  CHECK(global_commutation_check(sq({1, 2, 3}), 3));
}

TEST_CASE("strategy independence on every board up to n = 6") {
  std::vector<Strategy> strategies{Strategy::always_phi(), Strategy::always_psi(), Strategy::alternate()};
  for (std::uint64_t s = 0; s < 20; ++s) strategies.push_back(Strategy::random(1000 + s));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& b : boards_with_placements(n)) {
      for (const auto& p : enumerate_placements(b)) {
        for (int k = 2; k <= 4; ++k) {
          const auto reference = phi_star(p, k, TraceOptions{0});
          for (const auto& s : strategies) {
            const auto nf = normal_form(p, k, s);
            REQUIRE(nf.placement == reference.placement);
            REQUIRE(nf.steps == reference.trace.step_count);
          }
          REQUIRE(rewrite_node(p, k).minimal_steps == reference.trace.step_count);
        }
      }
    }
  }
}

TEST_CASE("reduction graph below a placement") {
  const auto s = explore_reductions(kPi, 4);
  CHECK(s.confluent());
  CHECK(s.normal_form_count == 1);
  CHECK(s.shortest == 2);
  CHECK(s.longest == 2);
  CHECK(s.states >= 4);
  const auto trivial = explore_reductions(sq({1, 2}), 2);
  CHECK(trivial.states == 1);
  CHECK(trivial.longest == 0);
}

TEST_CASE("graph export") {
  const std::vector<Placement> seeds{sq({3, 2, 1})};
  const auto g = build_rewrite_graph(seeds, 3);
  REQUIRE(g.nodes.size() == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].label == EdgeLabel::BOTH);
  CHECK(to_dot(g) == "digraph {\n  \"2 1 3\";\n  \"3 2 1\";\n  \"3 2 1\" -> \"2 1 3\" [label=\"both\"];\n}\n");

  const std::vector<Placement> id{sq({1, 2, 3})};
  const auto single = build_rewrite_graph(id, 2);
  CHECK(single.nodes.size() == 1);
  CHECK(single.edges.empty());

  const auto doc = nlohmann::json::parse(export_graph(seeds, 3, GraphFormat::JSON));
  CHECK(doc["k"] == 3);
  CHECK(doc["nodes"].size() == 2);
  CHECK(doc["edges"][0]["label"] == "both");
  CHECK(doc["nodes"][0]["is_normal"] == true);

  CHECK_THROWS_AS(parse_graph_format("svg"), PreconditionError);
  CHECK_THROWS_AS(build_rewrite_graph(seeds, 1), PreconditionError);
}

TEST_CASE("the graph below 7463521 contains the commuting square") {
  const std::vector<Placement> seeds{kPi};
  const auto g = build_rewrite_graph(seeds, 4);
  const auto index = [&](const Placement& p) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      if (g.nodes[i] == p) return i;
    }
    FAIL("node missing");
    return std::size_t{0};
  };
  const auto phi = a_shift(kPi, 4);
  const auto psi = b_shift(kPi, 4);
  const auto meet = a_shift(psi, 4);
  CHECK(meet == b_shift(phi, 4));
  std::set<std::tuple<std::size_t, std::size_t, EdgeLabel>> edges;
  for (const auto& e : g.edges) edges.insert({e.source, e.target, e.label});
  CHECK(edges.count({index(kPi), index(phi), EdgeLabel::PHI}) == 1);
  CHECK(edges.count({index(kPi), index(psi), EdgeLabel::PSI}) == 1);
  const auto into_meet = [&](std::size_t from) {
    for (const auto& e : g.edges) {
      if (e.source == from && e.target == index(meet)) return true;
    }
    return false;
  };
  CHECK(into_meet(index(phi)));
  CHECK(into_meet(index(psi)));
}

TEST_CASE("graph edges lower inversions, normal nodes are sinks, output is deterministic") {
  for (const auto& perm : oracle::all_permutations(5)) {
    const std::vector<Placement> seeds{Placement::square(perm)};
    for (int k = 2; k <= 3; ++k) {
      const auto g = build_rewrite_graph(seeds, k);
      for (const auto& e : g.edges) {
        REQUIRE(inversion_number(g.nodes[e.target]) < inversion_number(g.nodes[e.source]));
        REQUIRE_FALSE(g.is_normal[e.source]);
      }
      REQUIRE(std::is_sorted(g.nodes.begin(), g.nodes.end()));
      REQUIRE(to_dot(g) == to_dot(build_rewrite_graph(seeds, k)));
    }
  }
}

TEST_CASE("the inverse seed gives the reflected component") {
  const std::vector<Placement> a{kPi};
  const std::vector<Placement> b{inverse_placement(kPi)};
  const auto ga = build_rewrite_graph(a, 4);
  const auto gb = build_rewrite_graph(b, 4);
  CHECK(ga.nodes.size() == gb.nodes.size());
  CHECK(ga.edges.size() == gb.edges.size());
  std::set<Placement> reflected;
  for (const auto& p : ga.nodes) reflected.insert(inverse_placement(p));
  CHECK(reflected == std::set<Placement>(gb.nodes.begin(), gb.nodes.end()));
}
