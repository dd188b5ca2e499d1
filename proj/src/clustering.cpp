#include "clustagree/clustering.hpp"

#include <algorithm>
#include <cmath>

namespace clustagree {

std::size_t PointUniverse::intern(std::string_view id) {
  auto [it, inserted] = index_.try_emplace(std::string(id), ids_.size());
  if (inserted) ids_.emplace_back(id);
  return it->second;
}

std::optional<std::size_t> PointUniverse::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Clustering Clustering::from_matrix(std::size_t points, std::size_t clusters,
                                   std::vector<Membership> entries,
                                   std::vector<std::string> cluster_names) {
  if (!cluster_names.empty() && cluster_names.size() != clusters) {
    throw Error(Errc::invalid_argument, "cluster name count does not match cluster count");
  }
  for (const auto& e : entries) {
    if (e.point >= points || e.cluster >= clusters) {
      throw Error(Errc::invalid_argument, "membership index out of range");
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw Error(Errc::negative_weight, "membership weights must be finite and non-negative");
    }
  }
  std::erase_if(entries, [](const Membership& e) { return e.weight == 0.0; });
  std::sort(entries.begin(), entries.end(), [](const Membership& a, const Membership& b) {
    return a.point != b.point ? a.point < b.point : a.cluster < b.cluster;
  });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].point == entries[i - 1].point && entries[i].cluster == entries[i - 1].cluster) {
      throw Error(Errc::duplicate_entry, "point " + std::to_string(entries[i].point) +
                                             " listed twice in cluster " +
                                             std::to_string(entries[i].cluster));
    }
  }

  Clustering c;
  c.points_ = points;
  c.clusters_ = clusters;
  c.cluster_names_ = std::move(cluster_names);

  c.row_offsets_.assign(points + 1, 0);
  c.col_offsets_.assign(clusters + 1, 0);
  for (const auto& e : entries) {
    ++c.row_offsets_[e.point + 1];
    ++c.col_offsets_[e.cluster + 1];
  }
  for (std::size_t i = 0; i < points; ++i) c.row_offsets_[i + 1] += c.row_offsets_[i];
  for (std::size_t j = 0; j < clusters; ++j) c.col_offsets_[j + 1] += c.col_offsets_[j];

  c.row_entries_.reserve(entries.size());
  c.col_entries_.resize(entries.size());
  c.cluster_mass_.assign(clusters, 0.0);
  std::vector<std::size_t> col_fill(c.col_offsets_.begin(), c.col_offsets_.end() - 1);
  for (const auto& e : entries) {
    c.row_entries_.push_back({e.cluster, e.weight});
    c.col_entries_[col_fill[e.cluster]++] = {e.point, e.weight};
    c.cluster_mass_[e.cluster] += e.weight;
  }

  c.crisp_ = std::all_of(entries.begin(), entries.end(),
                         [](const Membership& e) { return e.weight == 1.0; });
  c.disjoint_ = true;
  bool every_point_once = true;
  for (std::size_t i = 0; i < points; ++i) {
    const std::size_t count = c.row_offsets_[i + 1] - c.row_offsets_[i];
    if (count == 0) ++c.uncovered_;
    if (count > 1) {
      ++c.overlapping_;
      c.disjoint_ = false;
    }
    if (count != 1) every_point_once = false;
  }
  c.disjoint_crisp_ = points > 0 && c.crisp_ && every_point_once;
  return c;
}

std::span<const Entry> Clustering::row(std::size_t point) const {
  return {row_entries_.data() + row_offsets_.at(point),
          row_offsets_.at(point + 1) - row_offsets_[point]};
}

std::span<const Entry> Clustering::members(std::size_t cluster) const {
  return {col_entries_.data() + col_offsets_.at(cluster),
          col_offsets_.at(cluster + 1) - col_offsets_[cluster]};
}

double Clustering::weight(std::size_t point, std::size_t cluster) const {
  auto r = row(point);
  auto it = std::lower_bound(r.begin(), r.end(), cluster,
                             [](const Entry& e, std::size_t c) { return e.index < c; });
  return (it != r.end() && it->index == cluster) ? it->weight : 0.0;
}

std::vector<std::optional<std::size_t>> Clustering::argmax_labels() const {
  std::vector<std::optional<std::size_t>> labels(points_);
  for (std::size_t i = 0; i < points_; ++i) {
    double best = 0.0;
    for (const auto& e : row(i)) {
      if (!labels[i] || e.weight > best) {
        labels[i] = e.index;
        best = e.weight;
      }
    }
  }
  return labels;
}

Clustering Clustering::with_universe(std::shared_ptr<const PointUniverse> universe) const {
  if (universe && universe->size() != points_) {
    throw Error(Errc::universe_mismatch, "universe size does not match clustering size");
  }
  Clustering copy = *this;
  copy.universe_ = std::move(universe);
  return copy;
}

Clustering Clustering::remapped(std::size_t points, std::span<const std::size_t> mapping) const {
  if (mapping.size() != points_) {
    throw Error(Errc::invalid_argument, "remap: mapping size does not match point count");
  }
  std::vector<Membership> entries;
  entries.reserve(nonzeros());
  for (std::size_t i = 0; i < points_; ++i) {
    for (const auto& e : row(i)) entries.push_back({mapping[i], e.index, e.weight});
  }
  return from_matrix(points, clusters_, std::move(entries), cluster_names_);
}

void require_same_universe(const Clustering& a, const Clustering& b) {
  if (a.points() != b.points()) {
    throw Error(Errc::universe_mismatch, "clusterings cover " + std::to_string(a.points()) +
                                             " and " + std::to_string(b.points()) + " points");
  }
  auto ua = a.universe();
  auto ub = b.universe();
  if (ua && ub && ua != ub && !(*ua == *ub)) {
    throw Error(Errc::universe_mismatch, "clusterings are built over different point universes");
  }
}

Clustering clustering_from_memberships(std::size_t points,
                                       const std::vector<MembershipTriple>& triples) {
  if (points == 0) {
    throw Error(Errc::empty_clustering, "clustering_from_memberships: no points");
  }
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> names;
  std::vector<Membership> entries;
  entries.reserve(triples.size());
  for (const auto& t : triples) {
    if (t.weight < 0.0) {
      throw Error(Errc::negative_weight, "negative weight for point " + std::to_string(t.point) +
                                             " in cluster '" + t.cluster + "'");
    }
    auto [it, inserted] = index.try_emplace(t.cluster, names.size());
    if (inserted) names.push_back(t.cluster);
    entries.push_back({t.point, it->second, t.weight});
  }
  const std::size_t k = names.size();
  Clustering c = Clustering::from_matrix(points, k, std::move(entries), names);
  for (std::size_t j = 0; j < k; ++j) {
    if (c.members(j).empty()) {
      throw Error(Errc::empty_cluster, "cluster '" + names[j] + "' has no members");
    }
  }
  return c;
}

}  // namespace clustagree
