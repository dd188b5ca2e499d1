#include "clustagree/structure.hpp"

#include <algorithm>
#include <cmath>

namespace clustagree {

bool accepts_overlapping(MeasureId id) noexcept {
  switch (id) {
    case MeasureId::ri_delta:
    case MeasureId::ari_delta:
    case MeasureId::d_norm:
    case MeasureId::i_sqrt_tr:
      return true;
    default:
      return false;
  }
}

double BaseMeasure::operator()(const Clustering& u, const Clustering& v) const {
  switch (id) {
    case MeasureId::ri_delta: return ri_delta(u, v, variant);
    case MeasureId::ari_delta: return ari_delta(u, v, variant);
    case MeasureId::d_norm: return i_norm(u, v, norm);
    case MeasureId::i_sqrt_tr: return i_sqrt_tr(u, v);
    default:
      throw Error(Errc::requires_overlapping_measure,
                  "structure-dependent comparison needs a co-membership measure");
  }
}

namespace {

void check_graph(const Clustering& u, const Graph& graph) {
  if (graph.nodes() != u.points()) {
    throw Error(Errc::universe_mismatch, "graph does not cover the clustering universe");
  }
}

void check_base(const BaseMeasure& base) {
  if (!accepts_overlapping(base.id)) {
    throw Error(Errc::requires_overlapping_measure,
                "structure-dependent comparison needs a co-membership measure");
  }
}

}  // namespace

Clustering transform_by_edges(const Clustering& u, const Graph& graph) {
  check_graph(u, graph);
  if (graph.edge_count() == 0) throw Error(Errc::empty_graph, "transform: graph has no edges");
  std::vector<Membership> entries;
  const auto& edges = graph.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const double w = std::sqrt(edges[k].weight);
    auto a = u.row(edges[k].u);
    auto b = u.row(edges[k].v);
    // Merge the two sorted rows.
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
        entries.push_back({k, a[i].index, w * a[i].weight});
        ++i;
      } else if (i == a.size() || b[j].index < a[i].index) {
        entries.push_back({k, b[j].index, w * b[j].weight});
        ++j;
      } else {
        entries.push_back({k, a[i].index, w * (a[i].weight + b[j].weight)});
        ++i;
        ++j;
      }
    }
  }
  return Clustering::from_matrix(edges.size(), u.clusters(), std::move(entries),
                                 u.cluster_names());
}

double transformed_measure(const Clustering& u, const Clustering& v, const Graph& graph,
                           const BaseMeasure& base) {
  check_base(base);
  require_same_universe(u, v);
  return base(transform_by_edges(u, graph), transform_by_edges(v, graph));
}

double combined_measure(const Clustering& u, const Clustering& v, const Graph& graph,
                        const BaseMeasure& base, double alpha) {
  check_base(base);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(Errc::invalid_argument, "combined_measure: alpha must lie in [0, 1]");
  }
  require_same_universe(u, v);
  check_graph(u, graph);
  const Clustering edges = incidence(graph);
  const double d_uv = 1.0 - base(u, v);
  if (alpha == 1.0) return 1.0 - d_uv;
  const double d_un = 1.0 - base(u, edges);
  const double d_vn = 1.0 - base(v, edges);
  return 1.0 - (alpha * d_uv + (1.0 - alpha) * std::abs(d_un - d_vn));
}

double graph_agreement(const Clustering& u, const Graph& graph, const BaseMeasure& base) {
  check_base(base);
  check_graph(u, graph);
  return base(u, incidence(graph));
}

}  // namespace clustagree
