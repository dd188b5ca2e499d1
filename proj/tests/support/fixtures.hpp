#pragma once

// In-memory copies of the worked examples shipped under fixtures/.

#include <algorithm>
#include <string>
#include <vector>

#include "clustagree/clustering.hpp"
#include "clustagree/contingency.hpp"
#include "clustagree/graph.hpp"

namespace testsupport {

inline clustagree::Clustering labels_from(const std::string& s) {
  return clustagree::clustering_from_assignments(std::vector<char>(s.begin(), s.end()));
}

/// Two clusterings of ten points whose contingency table is [[3,0,3],[1,3,0]].
inline clustagree::Clustering fig3_u() { return labels_from("bbbrrrrbbb"); }
inline clustagree::Clustering fig3_v() { return labels_from("bbbbrrrggg"); }

/// Nine-node, fifteen-edge graph with a ground truth and two candidates that
/// differ from it by one point each.
inline clustagree::Graph fig4_graph() {
  return clustagree::Graph::from_edges(
      9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
          {0, 6}, {5, 6}, {6, 7}, {5, 8}, {6, 8}, {7, 8}});
}
inline clustagree::Clustering fig4_truth() { return labels_from("bbbbbbrrr"); }
inline clustagree::Clustering fig4_u1() { return labels_from("rbbbbbrrr"); }
inline clustagree::Clustering fig4_u2() { return labels_from("bbbbbrrrr"); }

inline clustagree::Clustering from_triples(std::size_t n,
                                           const std::vector<clustagree::MembershipTriple>& t) {
  return clustagree::clustering_from_memberships(n, t);
}

/// Point 3 belongs fully to b and r.
inline clustagree::Clustering fig2_v() {
  return from_triples(10, {{0, "b", 1}, {1, "b", 1}, {2, "b", 1}, {3, "b", 1}, {3, "r", 1},
                           {4, "r", 1}, {5, "r", 1}, {6, "r", 1}, {7, "g", 1}, {8, "g", 1},
                           {9, "g", 1}});
}
/// Point 3 split 60/40 between b and r.
inline clustagree::Clustering fig2_u1() {
  return from_triples(10, {{0, "b", 1}, {1, "b", 1}, {2, "b", 1}, {3, "b", 0.6}, {3, "r", 0.4},
                           {4, "r", 1}, {5, "r", 1}, {6, "r", 1}, {7, "g", 1}, {8, "g", 1},
                           {9, "g", 1}});
}

/// Overlapping triple where only the pair (0, 1) changes: it shares two
/// clusters in the reference, one in the first variant and none in the second.
inline clustagree::Clustering shared_pair_reference() {
  return from_triples(7, {{0, "a", 1}, {1, "a", 1}, {2, "a", 1}, {0, "b", 1}, {1, "b", 1},
                          {3, "b", 1}, {4, "c", 1}, {5, "c", 1}, {6, "c", 1}});
}
inline clustagree::Clustering shared_pair_once() {
  return from_triples(7, {{0, "a", 1}, {1, "a", 1}, {2, "a", 1}, {0, "b", 1}, {3, "b", 1},
                          {1, "d", 1}, {3, "d", 1}, {4, "c", 1}, {5, "c", 1}, {6, "c", 1}});
}
inline clustagree::Clustering shared_pair_never() {
  return from_triples(7, {{0, "a", 1}, {2, "a", 1}, {1, "e", 1}, {2, "e", 1}, {0, "b", 1},
                          {3, "b", 1}, {1, "d", 1}, {3, "d", 1}, {4, "c", 1}, {5, "c", 1},
                          {6, "c", 1}});
}

/// Dense table with rows and columns in cluster-name order, as printed.
inline std::vector<std::vector<double>> by_name(const clustagree::ContingencyTable& t,
                                                const clustagree::Clustering& u,
                                                const clustagree::Clustering& v) {
  auto order = [](const clustagree::Clustering& c) {
    std::vector<std::size_t> idx(c.clusters());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return c.cluster_names()[a] < c.cluster_names()[b];
    });
    return idx;
  };
  const auto rows = order(u);
  const auto cols = order(v);
  std::vector<std::vector<double>> out(rows.size(), std::vector<double>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = t.at(rows[i], cols[j]);
  return out;
}

}  // namespace testsupport
