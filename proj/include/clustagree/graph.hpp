#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clustagree/clustering.hpp"

namespace clustagree {

struct Edge {
  std::size_t u;
  std::size_t v;
  double weight = 1.0;
};

enum class DuplicateEdges { reject, sum };

/// Undirected weighted simple graph. Edges are stored with u < v, in input order.
class Graph {
 public:
  struct Neighbor {
    std::size_t node;
    double weight;
  };

  static Graph from_edges(std::size_t nodes, std::vector<Edge> edges,
                          DuplicateEdges duplicates = DuplicateEdges::reject);

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<double>& degrees() const noexcept { return degrees_; }
  double degree(std::size_t node) const { return degrees_.at(node); }
  double total_weight() const noexcept { return total_weight_; }
  std::span<const Neighbor> neighbors(std::size_t node) const;
  /// A_uv, zero when there is no edge.
  double weight(std::size_t u, std::size_t v) const;

  /// Same graph over a larger node set; node i becomes mapping[i].
  Graph remapped(std::size_t nodes, std::span<const std::size_t> mapping) const;

 private:
  std::size_t nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> degrees_;
  double total_weight_ = 0.0;
  std::vector<std::size_t> adj_offsets_;
  std::vector<Neighbor> adj_;
};

/// Node-by-edge incidence matrix with sqrt(w) at both endpoints of each edge,
/// read as a clustering where every edge is a two-node cluster.
Clustering incidence(const Graph& graph);

}  // namespace clustagree
