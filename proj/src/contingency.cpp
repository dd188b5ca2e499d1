#include "clustagree/contingency.hpp"

#include <algorithm>
#include <cmath>

namespace clustagree {

namespace {

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

ContingencyTable ContingencyTable::from_cells(std::size_t rows, std::size_t cols,
                                              std::vector<Cell> cells, bool partition_counts,
                                              std::size_t dense_limit) {
  ContingencyTable t;
  t.rows_ = rows;
  t.cols_ = cols;
  t.partition_counts_ = partition_counts;
  t.dense_limit_ = dense_limit;
  t.dense_ = rows * cols <= dense_limit;
  for (const auto& c : cells) {
    if (c.row >= rows || c.col >= cols) {
      throw Error(Errc::invalid_argument, "contingency cell out of range");
    }
    if (!(c.value >= 0.0) || !std::isfinite(c.value)) {
      throw Error(Errc::negative_cell, "contingency cells must be finite and non-negative");
    }
  }

  if (t.dense_) {
    t.dense_cells_.assign(rows * cols, 0.0);
    for (const auto& c : cells) t.dense_cells_[c.row * cols + c.col] += c.value;
  } else {
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (const auto& c : cells) {
      if (!t.sparse_cells_.empty() && t.sparse_cells_.back().row == c.row &&
          t.sparse_cells_.back().col == c.col) {
        t.sparse_cells_.back().value += c.value;
      } else {
        t.sparse_cells_.push_back(c);
      }
    }
    std::erase_if(t.sparse_cells_, [](const Cell& c) { return c.value == 0.0; });
  }

  t.row_marginals_.assign(rows, 0.0);
  t.col_marginals_.assign(cols, 0.0);
  t.for_each_nonzero([&](std::size_t i, std::size_t j, double x) {
    t.row_marginals_[i] += x;
    t.col_marginals_[j] += x;
  });
  for (double x : t.row_marginals_) t.total_ += x;
  return t;
}

ContingencyTable ContingencyTable::from_counts(const std::vector<std::vector<double>>& matrix) {
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix.front().size();
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < rows; ++i) {
    if (matrix[i].size() != cols) {
      throw Error(Errc::invalid_argument, "from_counts: ragged matrix");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (matrix[i][j] != 0.0) cells.push_back({i, j, matrix[i][j]});
    }
  }
  auto t = from_cells(rows, cols, std::move(cells), true);
  if (!t.all_integer()) {
    throw Error(Errc::non_integer_table, "from_counts: cells must be integers");
  }
  return t;
}

double ContingencyTable::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw Error(Errc::invalid_argument, "contingency index out of range");
  }
  if (dense_) return dense_cells_[row * cols_ + col];
  auto it = std::lower_bound(sparse_cells_.begin(), sparse_cells_.end(), Cell{row, col, 0.0},
                             [](const Cell& a, const Cell& b) {
                               return a.row != b.row ? a.row < b.row : a.col < b.col;
                             });
  return (it != sparse_cells_.end() && it->row == row && it->col == col) ? it->value : 0.0;
}

void ContingencyTable::for_each_nonzero(
    const std::function<void(std::size_t, std::size_t, double)>& f) const {
  if (dense_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const double x = dense_cells_[i * cols_ + j];
        if (x != 0.0) f(i, j, x);
      }
    }
  } else {
    for (const auto& c : sparse_cells_) f(c.row, c.col, c.value);
  }
}

std::vector<Cell> ContingencyTable::nonzeros() const {
  std::vector<Cell> out;
  for_each_nonzero([&](std::size_t i, std::size_t j, double x) { out.push_back({i, j, x}); });
  return out;
}

ContingencyTable ContingencyTable::transposed() const {
  std::vector<Cell> cells;
  for_each_nonzero([&](std::size_t i, std::size_t j, double x) { cells.push_back({j, i, x}); });
  return from_cells(cols_, rows_, std::move(cells), partition_counts_, dense_limit_);
}

std::vector<std::vector<double>> ContingencyTable::to_dense() const {
  std::vector<std::vector<double>> m(rows_, std::vector<double>(cols_, 0.0));
  for_each_nonzero([&](std::size_t i, std::size_t j, double x) { m[i][j] = x; });
  return m;
}

bool ContingencyTable::all_integer() const {
  bool ok = true;
  for_each_nonzero([&](std::size_t, std::size_t, double x) {
    if (x != std::floor(x)) ok = false;
  });
  return ok;
}

ContingencyTable overlap_table(const Clustering& u, const Clustering& v, const OverlapKind& kind,
                               std::size_t dense_limit) {
  require_same_universe(u, v);
  const std::size_t n = u.points();
  if (kind.kind != OverlapKind::Kind::count) {
    if (kind.graph == nullptr) {
      throw Error(Errc::missing_graph, "structure-aware overlap requires a graph");
    }
    if (kind.graph->nodes() != n) {
      throw Error(Errc::universe_mismatch, "graph does not cover the clustering universe");
    }
  }

  std::vector<Cell> cells;
  switch (kind.kind) {
    case OverlapKind::Kind::count:
    case OverlapKind::Kind::degree_weighted: {
      const bool weighted = kind.kind == OverlapKind::Kind::degree_weighted;
      for (std::size_t i = 0; i < n; ++i) {
        const double scale = weighted ? kind.graph->degree(i) : 1.0;
        for (const auto& a : u.row(i)) {
          for (const auto& b : v.row(i)) cells.push_back({a.index, b.index, scale * a.weight * b.weight});
        }
      }
      break;
    }
    case OverlapKind::Kind::edge_overlap: {
      const double factor = kind.pairs == PairConvention::ordered ? 2.0 : 1.0;
      for (const auto& e : kind.graph->edges()) {
        // Only clusters holding both endpoints contribute.
        for (const auto& a : u.row(e.u)) {
          const double ub = u.weight(e.v, a.index);
          if (ub == 0.0) continue;
          for (const auto& b : v.row(e.u)) {
            const double vb = v.weight(e.v, b.index);
            if (vb == 0.0) continue;
            cells.push_back({a.index, b.index, factor * e.weight * a.weight * b.weight * ub * vb});
          }
        }
      }
      break;
    }
  }
  const bool partitions = kind.kind == OverlapKind::Kind::count && u.disjoint_crisp() &&
                          v.disjoint_crisp();
  return ContingencyTable::from_cells(u.clusters(), v.clusters(), std::move(cells), partitions,
                                      dense_limit);
}

PairCounts pair_counts(const ContingencyTable& table) {
  if (!table.partition_counts()) {
    throw Error(Errc::not_disjoint,
                "pair counts need a count table of two disjoint crisp clusterings");
  }
  PairCounts pc;
  double same_u = 0.0;
  double same_v = 0.0;
  table.for_each_nonzero([&](std::size_t, std::size_t, double x) { pc.m11 += choose2(x); });
  for (double x : table.row_marginals()) same_u += choose2(x);
  for (double x : table.col_marginals()) same_v += choose2(x);
  pc.m10 = same_u - pc.m11;
  pc.m01 = same_v - pc.m11;
  pc.m00 = choose2(table.total()) - pc.m11 - pc.m10 - pc.m01;
  return pc;
}

PairCounts pair_counts(const Clustering& u, const Clustering& v) {
  if (!u.disjoint_crisp() || !v.disjoint_crisp()) {
    throw Error(Errc::not_disjoint,
                "pair_counts requires disjoint crisp clusterings; use the co-membership measures");
  }
  return pair_counts(overlap_table(u, v));
}

}  // namespace clustagree
