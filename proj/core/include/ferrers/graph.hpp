#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/placement.hpp"

namespace ferrers {

enum class GraphFormat { DOT, JSON };

/// "dot" or "json"; throws PreconditionError on anything else.
GraphFormat parse_graph_format(std::string_view name);

/// Edge labels sort as both < phi < psi.
enum class EdgeLabel { BOTH, PHI, PSI };
std::string_view to_string(EdgeLabel label) noexcept;

/// Closure of a seed set under phi and psi. Nodes are sorted by
/// (board, permutation); edges by (source index, label).
struct RewriteGraph {
  struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    EdgeLabel label = EdgeLabel::PHI;
  };

  int k = 2;
  std::vector<Placement> nodes;
  std::vector<bool> is_normal;
  std::vector<Edge> edges;

  /// One-line notation, prefixed by the board when the graph spans several boards.
  std::string node_label(std::size_t index) const;
  bool single_board() const noexcept;
};

RewriteGraph build_rewrite_graph(std::span<const Placement> seeds, int k);

std::string to_dot(const RewriteGraph& graph);
std::string to_json(const RewriteGraph& graph);

std::string export_graph(std::span<const Placement> seeds, int k, GraphFormat format);

}  // namespace ferrers
