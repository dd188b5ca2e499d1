#pragma once

#include <cstddef>
#include <vector>

#include "clustagree/clustering.hpp"

namespace clustagree {

/// exact: co-membership diagonals removed, pairs counted as n(n-1).
/// approx: full co-membership matrices, pairs counted as n^2.
enum class DeltaVariant { exact, approx };

enum class NormKind { plain, squared };

/// Reductions of the co-membership matrices UU^T and VV^T, computed from the
/// k x k, r x r and k x r cluster Gram products; no n x n matrix is formed.
struct GramStats {
  std::size_t points = 0;
  double frob_u = 0;  // ||UU^T||_F^2 = ||U^T U||_F^2
  double frob_v = 0;
  double cross = 0;   // |UU^T o VV^T| = ||U^T V||_F^2
  double sum_u = 0;   // |UU^T|
  double sum_v = 0;
  std::vector<double> diag_u;  // (UU^T)_ii, squared row norms
  std::vector<double> diag_v;
  double max_u = 0;  // max entry of UU^T (always on the diagonal)
  double max_v = 0;
  double offdiag_max_u = 0;  // max entry of UU^T off the diagonal
  double offdiag_max_v = 0;
  std::size_t work = 0;  // scalar multiply-adds spent

  struct Terms {
    double frob_u, frob_v, cross, sum_u, sum_v, max_u, max_v, pairs;
  };
  /// The reductions as seen by one variant (diagonal kept or zeroed).
  Terms terms(DeltaVariant variant) const;
};

GramStats gram_stats(const Clustering& u, const Clustering& v);

/// ||UU^T - VV^T||_F^2, diagonals zeroed for the exact variant.
double delta_sq(const Clustering& u, const Clustering& v, DeltaVariant variant);

/// Rand index from the co-membership difference. The normalizer is
/// pairs * max(max UU^T, max VV^T)^2, the largest value a squared cell
/// difference can take; it reduces to n(n-1) or n^2 for disjoint crisp input.
double ri_delta(const Clustering& u, const Clustering& v, DeltaVariant variant);

/// Adjusted Rand index from the co-membership difference.
double ari_delta(const Clustering& u, const Clustering& v, DeltaVariant variant);

double ri_delta(const GramStats& stats, DeltaVariant variant);
double ari_delta(const GramStats& stats, DeltaVariant variant);

/// ||Delta|| / (||UU^T|| + ||VV^T||) with plain Frobenius norms, or the
/// squared-norm ratio.
double d_norm(const Clustering& u, const Clustering& v, NormKind norm = NormKind::plain);
double i_norm(const Clustering& u, const Clustering& v, NormKind norm = NormKind::plain);

/// tr(UU^T VV^T) / sqrt(tr((UU^T)^2) tr((VV^T)^2)).
double i_sqrt_tr(const Clustering& u, const Clustering& v);

struct OmegaStats {
  double omega = 0;     // share of point pairs with equal co-membership counts
  double expected = 0;  // sum over counts c of f_U(c) f_V(c)
};

/// Omega index of two crisp (possibly overlapping) clusterings.
OmegaStats omega_stats(const Clustering& u, const Clustering& v);
double omega(const Clustering& u, const Clustering& v);
double adjusted_omega(const Clustering& u, const Clustering& v);

}  // namespace clustagree
