#include "clustagree/comembership.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace clustagree {

namespace {

constexpr std::size_t dense_product_limit = 1'000'000;

/// ||A^T B||_F^2 for sparse n x k and n x r matrices. The accumulation order
/// depends only on the matrix contents, so equal inputs give equal bits.
double cross_gram_frobenius(const Clustering& a, const Clustering& b, std::size_t& work) {
  const std::size_t k = a.clusters();
  const std::size_t r = b.clusters();
  double frob = 0.0;
  if (k * r <= dense_product_limit) {
    std::vector<double> product(k * r, 0.0);
    for (std::size_t i = 0; i < a.points(); ++i) {
      for (const auto& x : a.row(i)) {
        for (const auto& y : b.row(i)) {
          product[x.index * r + y.index] += x.weight * y.weight;
          ++work;
        }
      }
    }
    for (double p : product) frob += p * p;
  } else {
    std::unordered_map<std::uint64_t, double> product;
    std::vector<std::uint64_t> order;
    for (std::size_t i = 0; i < a.points(); ++i) {
      for (const auto& x : a.row(i)) {
        for (const auto& y : b.row(i)) {
          const std::uint64_t key = static_cast<std::uint64_t>(x.index) * r + y.index;
          auto [it, inserted] = product.try_emplace(key, 0.0);
          if (inserted) order.push_back(key);
          it->second += x.weight * y.weight;
          ++work;
        }
      }
    }
    for (auto key : order) frob += product[key] * product[key];
  }
  return frob;
}

/// Largest off-diagonal entry of UU^T.
double offdiag_max(const Clustering& c, std::size_t& work) {
  double best = 0.0;
  if (c.disjoint()) {
    // (UU^T)_ij is non-zero only inside one cluster: the two largest weights.
    for (std::size_t j = 0; j < c.clusters(); ++j) {
      double first = 0.0;
      double second = 0.0;
      for (const auto& m : c.members(j)) {
        if (m.weight > first) {
          second = first;
          first = m.weight;
        } else if (m.weight > second) {
          second = m.weight;
        }
      }
      best = std::max(best, first * second);
      work += c.members(j).size();
    }
    return best;
  }
  // Overlapping input: accumulate one row of UU^T at a time.
  std::vector<double> acc(c.points(), 0.0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < c.points(); ++i) {
    for (const auto& x : c.row(i)) {
      for (const auto& m : c.members(x.index)) {
        if (m.index <= i) continue;
        if (acc[m.index] == 0.0) touched.push_back(m.index);
        acc[m.index] += x.weight * m.weight;
        ++work;
      }
    }
    for (auto j : touched) {
      best = std::max(best, acc[j]);
      acc[j] = 0.0;
    }
    touched.clear();
  }
  return best;
}

void fill_side(const Clustering& c, std::vector<double>& diag, double& sum, double& max_entry) {
  diag.assign(c.points(), 0.0);
  for (std::size_t i = 0; i < c.points(); ++i) {
    double d = 0.0;
    for (const auto& e : c.row(i)) d += e.weight * e.weight;
    diag[i] = d;
    max_entry = std::max(max_entry, d);
  }
  sum = 0.0;
  for (double mass : c.cluster_mass()) sum += mass * mass;
}

double ratio_or_one(double delta, double nf, const char* what) {
  const double scale = std::max(1.0, std::abs(nf));
  if (std::abs(nf) <= 1e-12 * scale) {
    if (std::abs(delta) <= 1e-12 * scale) return 1.0;
    throw Error(Errc::zero_nf, std::string(what) + ": zero normalizing factor");
  }
  return 1.0 - delta / nf;
}

}  // namespace

GramStats::Terms GramStats::terms(DeltaVariant variant) const {
  const double n = static_cast<double>(points);
  if (variant == DeltaVariant::approx) {
    return {frob_u, frob_v, cross, sum_u, sum_v, max_u, max_v, n * n};
  }
  double diag_sq_u = 0.0;
  double diag_sq_v = 0.0;
  double diag_uv = 0.0;
  double trace_u = 0.0;
  double trace_v = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    diag_sq_u += diag_u[i] * diag_u[i];
    diag_sq_v += diag_v[i] * diag_v[i];
    diag_uv += diag_u[i] * diag_v[i];
    trace_u += diag_u[i];
    trace_v += diag_v[i];
  }
  return {frob_u - diag_sq_u, frob_v - diag_sq_v, cross - diag_uv,
          sum_u - trace_u,    sum_v - trace_v,    offdiag_max_u,
          offdiag_max_v,      n * (n - 1.0)};
}

GramStats gram_stats(const Clustering& u, const Clustering& v) {
  require_same_universe(u, v);
  GramStats s;
  s.points = u.points();
  s.frob_u = cross_gram_frobenius(u, u, s.work);
  s.frob_v = cross_gram_frobenius(v, v, s.work);
  s.cross = cross_gram_frobenius(u, v, s.work);
  fill_side(u, s.diag_u, s.sum_u, s.max_u);
  fill_side(v, s.diag_v, s.sum_v, s.max_v);
  s.offdiag_max_u = offdiag_max(u, s.work);
  s.offdiag_max_v = offdiag_max(v, s.work);
  return s;
}

namespace {

double delta_from(const GramStats::Terms& t) {
  return std::max(0.0, t.frob_u + t.frob_v - 2.0 * t.cross);
}

}  // namespace

double delta_sq(const Clustering& u, const Clustering& v, DeltaVariant variant) {
  return delta_from(gram_stats(u, v).terms(variant));
}

double ri_delta(const GramStats& stats, DeltaVariant variant) {
  const auto t = stats.terms(variant);
  const double m = std::max(t.max_u, t.max_v);
  return ratio_or_one(delta_from(t), t.pairs * m * m, "ri_delta");
}

double ari_delta(const GramStats& stats, DeltaVariant variant) {
  const auto t = stats.terms(variant);
  if (t.pairs <= 0.0) throw Error(Errc::too_few_points, "ari_delta: fewer than two points");
  const double nf = t.frob_u + t.frob_v - 2.0 * t.sum_u * t.sum_v / t.pairs;
  return ratio_or_one(delta_from(t), nf, "ari_delta");
}

double ri_delta(const Clustering& u, const Clustering& v, DeltaVariant variant) {
  return ri_delta(gram_stats(u, v), variant);
}

double ari_delta(const Clustering& u, const Clustering& v, DeltaVariant variant) {
  return ari_delta(gram_stats(u, v), variant);
}

double d_norm(const Clustering& u, const Clustering& v, NormKind norm) {
  const auto t = gram_stats(u, v).terms(DeltaVariant::approx);
  const double delta = delta_from(t);
  if (t.frob_u == 0.0 && t.frob_v == 0.0) {
    throw Error(Errc::zero_norm, "d_norm: both co-membership matrices are zero");
  }
  if (norm == NormKind::squared) return delta / (t.frob_u + t.frob_v);
  return std::sqrt(delta) / (std::sqrt(t.frob_u) + std::sqrt(t.frob_v));
}

double i_norm(const Clustering& u, const Clustering& v, NormKind norm) {
  return 1.0 - d_norm(u, v, norm);
}

double i_sqrt_tr(const Clustering& u, const Clustering& v) {
  const auto t = gram_stats(u, v).terms(DeltaVariant::approx);
  if (t.frob_u == 0.0 || t.frob_v == 0.0) {
    throw Error(Errc::zero_norm, "i_sqrt_tr: a co-membership matrix is zero");
  }
  return std::min(1.0, t.cross / std::sqrt(t.frob_u * t.frob_v));
}

OmegaStats omega_stats(const Clustering& u, const Clustering& v) {
  require_same_universe(u, v);
  if (!u.crisp() || !v.crisp()) {
    throw Error(Errc::not_crisp, "omega requires crisp memberships");
  }
  const std::size_t n = u.points();
  if (n < 2) throw Error(Errc::too_few_points, "omega: fewer than two points");
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;

  std::vector<std::uint32_t> count_u(n, 0);
  std::vector<std::uint32_t> count_v(n, 0);
  std::vector<std::size_t> touched_u;
  std::vector<std::size_t> touched_v;
  std::vector<double> freq_u(1, 0.0);
  std::vector<double> freq_v(1, 0.0);
  double disagree = 0.0;

  auto collect = [](const Clustering& c, std::size_t i, std::vector<std::uint32_t>& count,
                    std::vector<std::size_t>& touched) {
    for (const auto& x : c.row(i)) {
      for (const auto& m : c.members(x.index)) {
        if (m.index <= i) continue;
        if (count[m.index]++ == 0) touched.push_back(m.index);
      }
    }
  };
  auto bump = [](std::vector<double>& freq, std::uint32_t c) {
    if (freq.size() <= c) freq.resize(c + 1, 0.0);
    freq[c] += 1.0;
  };

  for (std::size_t i = 0; i < n; ++i) {
    collect(u, i, count_u, touched_u);
    collect(v, i, count_v, touched_v);
    for (auto j : touched_u) {
      bump(freq_u, count_u[j]);
      if (count_u[j] != count_v[j]) disagree += 1.0;
    }
    for (auto j : touched_v) {
      bump(freq_v, count_v[j]);
      if (count_u[j] == 0) disagree += 1.0;
    }
    for (auto j : touched_u) count_u[j] = 0;
    for (auto j : touched_v) count_v[j] = 0;
    touched_u.clear();
    touched_v.clear();
  }

  double nonzero_u = 0.0;
  double nonzero_v = 0.0;
  for (std::size_t c = 1; c < freq_u.size(); ++c) nonzero_u += freq_u[c];
  for (std::size_t c = 1; c < freq_v.size(); ++c) nonzero_v += freq_v[c];
  freq_u[0] = pairs - nonzero_u;
  freq_v[0] = pairs - nonzero_v;

  OmegaStats s;
  s.omega = (pairs - disagree) / pairs;
  const std::size_t common = std::min(freq_u.size(), freq_v.size());
  for (std::size_t c = 0; c < common; ++c) s.expected += (freq_u[c] / pairs) * (freq_v[c] / pairs);
  return s;
}

double omega(const Clustering& u, const Clustering& v) { return omega_stats(u, v).omega; }

double adjusted_omega(const Clustering& u, const Clustering& v) {
  const OmegaStats s = omega_stats(u, v);
  if (s.expected == 1.0) {
    if (s.omega == 1.0) return 1.0;
    throw Error(Errc::zero_denominator, "adjusted omega: expected agreement is 1");
  }
  return (s.omega - s.expected) / (1.0 - s.expected);
}

}  // namespace clustagree
