#include "clustagree/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace clustagree {

Graph Graph::from_edges(std::size_t nodes, std::vector<Edge> edges, DuplicateEdges duplicates) {
  Graph g;
  g.nodes_ = nodes;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (auto e : edges) {
    if (e.u >= nodes || e.v >= nodes) {
      throw Error(Errc::invalid_edge, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(Errc::invalid_edge, "self-loop on node " + std::to_string(e.u));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(Errc::invalid_edge, "edge weights must be positive and finite");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    auto [it, inserted] = seen.try_emplace({e.u, e.v}, g.edges_.size());
    if (!inserted) {
      if (duplicates == DuplicateEdges::reject) {
        throw Error(Errc::duplicate_edge, "duplicate edge (" + std::to_string(e.u) + ", " +
                                              std::to_string(e.v) + ")");
      }
      g.edges_[it->second].weight += e.weight;
      continue;
    }
    g.edges_.push_back(e);
  }

  g.degrees_.assign(nodes, 0.0);
  g.adj_offsets_.assign(nodes + 1, 0);
  for (const auto& e : g.edges_) {
    g.degrees_[e.u] += e.weight;
    g.degrees_[e.v] += e.weight;
    g.total_weight_ += e.weight;
    ++g.adj_offsets_[e.u + 1];
    ++g.adj_offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < nodes; ++i) g.adj_offsets_[i + 1] += g.adj_offsets_[i];
  g.adj_.resize(g.adj_offsets_[nodes]);
  std::vector<std::size_t> fill(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.adj_[fill[e.u]++] = {e.v, e.weight};
    g.adj_[fill[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t i = 0; i < nodes; ++i) {
    std::sort(g.adj_.begin() + g.adj_offsets_[i], g.adj_.begin() + g.adj_offsets_[i + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
  return g;
}

std::span<const Graph::Neighbor> Graph::neighbors(std::size_t node) const {
  return {adj_.data() + adj_offsets_.at(node), adj_offsets_.at(node + 1) - adj_offsets_[node]};
}

double Graph::weight(std::size_t u, std::size_t v) const {
  auto ns = neighbors(u);
  auto it = std::lower_bound(ns.begin(), ns.end(), v,
                             [](const Neighbor& n, std::size_t x) { return n.node < x; });
  return (it != ns.end() && it->node == v) ? it->weight : 0.0;
}

Graph Graph::remapped(std::size_t nodes, std::span<const std::size_t> mapping) const {
  if (mapping.size() != nodes_) {
    throw Error(Errc::invalid_argument, "remap: mapping size does not match node count");
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({mapping[e.u], mapping[e.v], e.weight});
  return from_edges(nodes, std::move(edges));
}

Clustering incidence(const Graph& graph) {
  if (graph.edge_count() == 0) {
    throw Error(Errc::empty_graph, "incidence: graph has no edges");
  }
  std::vector<Membership> entries;
  entries.reserve(2 * graph.edge_count());
  const auto& edges = graph.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const double w = std::sqrt(edges[k].weight);
    entries.push_back({edges[k].u, k, w});
    entries.push_back({edges[k].v, k, w});
  }
  return Clustering::from_matrix(graph.nodes(), edges.size(), std::move(entries));
}

}  // namespace clustagree
