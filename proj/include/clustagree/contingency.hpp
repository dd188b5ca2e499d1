#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "clustagree/clustering.hpp"
#include "clustagree/graph.hpp"

namespace clustagree {

struct Cell {
  std::size_t row;
  std::size_t col;
  double value;
};

/// k_U x k_V overlap matrix with its marginals.
///
/// Small tables (rows * cols <= dense_limit) keep a dense array, larger ones a
/// row-major list of non-zero cells. Both layouts visit non-zeros in the same
/// row-major order, so every reduction over a table is layout independent.
class ContingencyTable {
 public:
  static constexpr std::size_t default_dense_limit = 1'000'000;

  /// Cells may repeat (values are summed) and may be listed in any order.
  /// `partition_counts` marks a count table of two disjoint crisp clusterings,
  /// which the classic measures require.
  static ContingencyTable from_cells(std::size_t rows, std::size_t cols, std::vector<Cell> cells,
                                     bool partition_counts = false,
                                     std::size_t dense_limit = default_dense_limit);

  /// Count table from a dense integer-valued matrix.
  static ContingencyTable from_counts(const std::vector<std::vector<double>>& matrix);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_dense() const noexcept { return dense_; }
  bool partition_counts() const noexcept { return partition_counts_; }

  double at(std::size_t row, std::size_t col) const;
  const std::vector<double>& row_marginals() const noexcept { return row_marginals_; }
  const std::vector<double>& col_marginals() const noexcept { return col_marginals_; }
  double total() const noexcept { return total_; }

  /// Calls f(row, col, value) for each non-zero cell in row-major order.
  void for_each_nonzero(const std::function<void(std::size_t, std::size_t, double)>& f) const;
  std::vector<Cell> nonzeros() const;

  ContingencyTable transposed() const;
  std::vector<std::vector<double>> to_dense() const;

  bool all_integer() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool dense_ = true;
  bool partition_counts_ = false;
  std::size_t dense_limit_ = default_dense_limit;
  std::vector<double> dense_cells_;
  std::vector<Cell> sparse_cells_;
  std::vector<double> row_marginals_;
  std::vector<double> col_marginals_;
  double total_ = 0.0;
};

/// M11 (same in both), M10 (same in U only), M01 (same in V only), M00.
struct PairCounts {
  double m11 = 0;
  double m10 = 0;
  double m01 = 0;
  double m00 = 0;

  double total() const noexcept { return m11 + m10 + m01 + m00; }
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

enum class PairConvention { unordered, ordered };

/// How the similarity of two clusters is quantified.
struct OverlapKind {
  enum class Kind { count, degree_weighted, edge_overlap };

  Kind kind = Kind::count;
  const Graph* graph = nullptr;
  PairConvention pairs = PairConvention::unordered;

  static OverlapKind count() { return {}; }
  static OverlapKind degree_weighted(const Graph& g) { return {Kind::degree_weighted, &g}; }
  static OverlapKind edge_overlap(const Graph& g,
                                  PairConvention pairs = PairConvention::unordered) {
    return {Kind::edge_overlap, &g, pairs};
  }
};

/// Overlap table of U and V.
///
/// count:           U^T V (cluster intersections for crisp input).
/// degree_weighted: sum of d_i over shared points, U^T diag(d) V.
/// edge_overlap:    sum of A_ij over point pairs inside both clusters, each pair
///                  weighted by its four memberships (1 for crisp input). The
///                  unordered convention counts each edge once; ordered counts
///                  both (i, j) and (j, i), exactly doubling every cell.
ContingencyTable overlap_table(const Clustering& u, const Clustering& v,
                               const OverlapKind& kind = OverlapKind::count(),
                               std::size_t dense_limit = ContingencyTable::default_dense_limit);

/// Pair counts of two disjoint crisp clusterings, from their contingency table.
PairCounts pair_counts(const Clustering& u, const Clustering& v);
PairCounts pair_counts(const ContingencyTable& table);

}  // namespace clustagree
