#pragma once

#include "clustagree/comembership.hpp"
#include "clustagree/graph.hpp"

namespace clustagree {

/// Every measure the library exposes. Only the co-membership family accepts
/// soft and overlapping input, and therefore only it can serve as a base for
/// the structure-dependent comparisons.
enum class MeasureId {
  ri,
  ari,
  ari_approx,
  jaccard,
  f1,
  mirkin,
  vi,
  nmi_sum,
  nmi_sqrt,
  ami,
  ri_delta,
  ari_delta,
  d_norm,
  i_sqrt_tr,
  omega,
  omega_adj,
  gen,
};

bool accepts_overlapping(MeasureId id) noexcept;

/// A co-membership agreement measure with its options. d_norm is reported as
/// the agreement 1 - D_norm.
struct BaseMeasure {
  MeasureId id = MeasureId::ari_delta;
  DeltaVariant variant = DeltaVariant::exact;
  NormKind norm = NormKind::plain;

  /// Throws RequiresOverlappingMeasure for measures outside the co-membership family.
  double operator()(const Clustering& u, const Clustering& v) const;
};

/// N^T U: each edge (a, b, w) becomes a row holding sqrt(w) (u_a + u_b).
/// Rows follow the graph's edge order.
Clustering transform_by_edges(const Clustering& u, const Graph& graph);

/// base(N^T U, N^T V): compares the clusterings over the edge universe.
double transformed_measure(const Clustering& u, const Clustering& v, const Graph& graph,
                           const BaseMeasure& base);

/// 1 - [alpha D(U,V) + (1 - alpha) |D(U,N) - D(V,N)|] with D = 1 - base and N
/// the incidence clustering of the graph.
double combined_measure(const Clustering& u, const Clustering& v, const Graph& graph,
                        const BaseMeasure& base, double alpha = 0.5);

/// base(U, N): agreement of a clustering with the graph, each edge a cluster.
double graph_agreement(const Clustering& u, const Graph& graph, const BaseMeasure& base);

}  // namespace clustagree
