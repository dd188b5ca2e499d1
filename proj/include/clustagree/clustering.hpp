#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "clustagree/error.hpp"

namespace clustagree {

/// Bidirectional map between external point ids and dense indices.
/// Indices are handed out in first-interned order.
class PointUniverse {
 public:
  std::size_t intern(std::string_view id);
  std::optional<std::size_t> find(std::string_view id) const;
  const std::string& id(std::size_t index) const { return ids_.at(index); }
  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  friend bool operator==(const PointUniverse& a, const PointUniverse& b) {
    return a.ids_ == b.ids_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One stored entry of a sparse membership matrix.
struct Entry {
  std::size_t index;  // cluster index in a point row, point index in a cluster column
  double weight;
};

struct Membership {
  std::size_t point;
  std::size_t cluster;
  double weight;
};

/// An n x k non-negative membership matrix. Covers disjoint, crisp-overlapping
/// and soft clusterings; zero weights are never stored. Immutable.
class Clustering {
 public:
  /// General constructor. Empty columns are allowed here (transformed and
  /// incidence matrices need them); the user-facing builders reject them.
  static Clustering from_matrix(std::size_t points, std::size_t clusters,
                                std::vector<Membership> entries,
                                std::vector<std::string> cluster_names = {});

  std::size_t points() const noexcept { return points_; }
  std::size_t clusters() const noexcept { return clusters_; }
  std::size_t nonzeros() const noexcept { return row_entries_.size(); }

  /// Clusters of one point, sorted by cluster index.
  std::span<const Entry> row(std::size_t point) const;
  /// Points of one cluster, sorted by point index.
  std::span<const Entry> members(std::size_t cluster) const;
  double weight(std::size_t point, std::size_t cluster) const;

  /// Column sums (cluster masses; cluster sizes for crisp input).
  const std::vector<double>& cluster_mass() const noexcept { return cluster_mass_; }

  /// Every point has exactly one entry of weight 1.
  bool disjoint_crisp() const noexcept { return disjoint_crisp_; }
  /// Every stored weight is exactly 1 (overlap allowed).
  bool crisp() const noexcept { return crisp_; }
  /// No point belongs to more than one cluster.
  bool disjoint() const noexcept { return disjoint_; }
  std::size_t uncovered_points() const noexcept { return uncovered_; }
  std::size_t overlapping_points() const noexcept { return overlapping_; }

  /// Cluster of maximal weight per point (first on ties); nullopt for uncovered points.
  std::vector<std::optional<std::size_t>> argmax_labels() const;

  const std::vector<std::string>& cluster_names() const noexcept { return cluster_names_; }

  std::shared_ptr<const PointUniverse> universe() const noexcept { return universe_; }
  Clustering with_universe(std::shared_ptr<const PointUniverse> universe) const;

  /// Copy with every point index passed through `mapping` into a universe of
  /// `points` points. Used to extend clusterings with zero rows.
  Clustering remapped(std::size_t points, std::span<const std::size_t> mapping) const;

 private:
  Clustering() = default;

  std::size_t points_ = 0;
  std::size_t clusters_ = 0;
  std::vector<std::size_t> row_offsets_;
  std::vector<Entry> row_entries_;
  std::vector<std::size_t> col_offsets_;
  std::vector<Entry> col_entries_;
  std::vector<double> cluster_mass_;
  std::vector<std::string> cluster_names_;
  std::shared_ptr<const PointUniverse> universe_;
  bool disjoint_crisp_ = false;
  bool crisp_ = false;
  bool disjoint_ = false;
  std::size_t uncovered_ = 0;
  std::size_t overlapping_ = 0;
};

/// Throws UniverseMismatch unless `a` and `b` describe the same point set.
void require_same_universe(const Clustering& a, const Clustering& b);

/// A disjoint crisp clustering from one label per point. Clusters are
/// numbered in first-appearance order of their labels.
template <typename Label>
Clustering clustering_from_assignments(const std::vector<Label>& labels);

struct MembershipTriple {
  std::size_t point;
  std::string cluster;
  double weight;
};

/// A general clustering over `points` points from (point, cluster id, weight)
/// triples. Zero weights are dropped; a cluster id left without members is an
/// error, as are negative weights and repeated (point, cluster) pairs.
Clustering clustering_from_memberships(std::size_t points,
                                       const std::vector<MembershipTriple>& triples);

namespace detail {
template <typename Label>
std::string label_name(const Label& label) {
  if constexpr (std::is_convertible_v<const Label&, std::string_view>) {
    return std::string(std::string_view(label));
  } else if constexpr (std::is_same_v<Label, char>) {
    return std::string(1, label);
  } else {
    return std::to_string(label);
  }
}
}  // namespace detail

template <typename Label>
Clustering clustering_from_assignments(const std::vector<Label>& labels) {
  if (labels.empty()) {
    throw Error(Errc::empty_clustering, "clustering_from_assignments: no labels");
  }
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> names;
  std::vector<Membership> entries;
  entries.reserve(labels.size());
  for (std::size_t point = 0; point < labels.size(); ++point) {
    std::string name = detail::label_name(labels[point]);
    auto [it, inserted] = index.try_emplace(name, names.size());
    if (inserted) names.push_back(std::move(name));
    entries.push_back({point, it->second, 1.0});
  }
  const std::size_t k = names.size();
  return Clustering::from_matrix(labels.size(), k, std::move(entries), std::move(names));
}

}  // namespace clustagree
