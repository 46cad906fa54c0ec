#include "ferrers/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "ferrers/error.hpp"
#include "ferrers/shifts.hpp"
#include "ferrers/text.hpp"
#include "json.hpp"

namespace ferrers {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::DOT;
  if (name == "json") return GraphFormat::JSON;
  throw PreconditionError("unknown graph format '" + std::string(name) + "' (expected dot or json)");
}

std::string_view to_string(EdgeLabel label) noexcept {
  switch (label) {
    case EdgeLabel::BOTH: return "both";
    case EdgeLabel::PHI: return "phi";
    case EdgeLabel::PSI: return "psi";
  }
  return "?";
}

bool RewriteGraph::single_board() const noexcept {
  return std::all_of(nodes.begin(), nodes.end(),
                     [&](const Placement& p) { return p.board() == nodes.front().board(); });
}

std::string RewriteGraph::node_label(std::size_t index) const {
  const Placement& p = nodes[index];
  if (single_board()) return format_permutation(p.perm());
  return "[" + format_board(p.board()) + "] " + format_permutation(p.perm());
}

RewriteGraph build_rewrite_graph(std::span<const Placement> seeds, int k) {
  require_valid_k(k);
  struct RawEdge {
    Placement source;
    Placement target;
    EdgeLabel label;
  };

  std::set<Placement> seen(seeds.begin(), seeds.end());
  std::deque<Placement> queue(seen.begin(), seen.end());
  std::vector<RawEdge> raw;
  while (!queue.empty()) {
    Placement p = std::move(queue.front());
    queue.pop_front();
    const auto a = a_sequence(p, k);
    if (!a) continue;
    const auto b = b_sequence(p, k);
    auto add = [&](Placement q, EdgeLabel label) {
      if (seen.insert(q).second) queue.push_back(q);
      raw.push_back({p, std::move(q), label});
    };
    if (*a == *b) {
      add(cyclic_shift(p, *a), EdgeLabel::BOTH);
    } else {
      add(cyclic_shift(p, *a), EdgeLabel::PHI);
      add(cyclic_shift(p, *b), EdgeLabel::PSI);
    }
  }

  RewriteGraph graph;
  graph.k = k;
  graph.nodes.assign(seen.begin(), seen.end());
  std::map<Placement, std::size_t> index;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) index.emplace(graph.nodes[i], i);
  graph.is_normal.assign(graph.nodes.size(), true);
  for (const auto& e : raw) {
    const auto s = index.at(e.source);
    graph.is_normal[s] = false;
    graph.edges.push_back({s, index.at(e.target), e.label});
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.source, x.label, x.target) < std::tie(y.source, y.label, y.target);
  });
  return graph;
}

std::string to_dot(const RewriteGraph& graph) {
  std::ostringstream out;
  out << "digraph {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) out << "  \"" << graph.node_label(i) << "\";\n";
  for (const auto& e : graph.edges) {
    out << "  \"" << graph.node_label(e.source) << "\" -> \"" << graph.node_label(e.target)
        << "\" [label=\"" << to_string(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const RewriteGraph& graph) {
  nlohmann::ordered_json doc;
  doc["k"] = graph.k;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& p = graph.nodes[i];
    nlohmann::ordered_json node;
    node["id"] = graph.node_label(i);
    node["board"] = std::vector<int>(p.board().heights().begin(), p.board().heights().end());
    node["perm"] = std::vector<int>(p.perm().values().begin(), p.perm().values().end());
    node["is_normal"] = static_cast<bool>(graph.is_normal[i]);
    node["inversions"] = p.perm().inversions();
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges) {
    doc["edges"].push_back({{"source", graph.node_label(e.source)},
                            {"target", graph.node_label(e.target)},
                            {"label", std::string(to_string(e.label))}});
  }
  return doc.dump(2) + "\n";
}

std::string export_graph(std::span<const Placement> seeds, int k, GraphFormat format) {
  const auto graph = build_rewrite_graph(seeds, k);
  return format == GraphFormat::DOT ? to_dot(graph) : to_json(graph);
}

}  // namespace ferrers
