#include "clustagree/classic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace clustagree {

namespace {

double choose2(double x) { return x * (x - 1.0) / 2.0; }

void require_partition_counts(const ContingencyTable& table, const char* what) {
  if (!table.partition_counts()) {
    throw Error(Errc::not_disjoint,
                std::string(what) + " requires a count table of two disjoint crisp clusterings");
  }
}

double base_scale(LogBase base) { return base == LogBase::base2 ? 1.0 / std::numbers::ln2 : 1.0; }

/// Each row and each column holds exactly one non-zero cell: the two
/// clusterings are the same partition up to cluster relabeling.
bool is_matching(const ContingencyTable& table) {
  std::vector<int> row_hits(table.rows(), 0);
  std::vector<int> col_hits(table.cols(), 0);
  table.for_each_nonzero([&](std::size_t i, std::size_t j, double) {
    ++row_hits[i];
    ++col_hits[j];
  });
  return std::all_of(row_hits.begin(), row_hits.end(), [](int h) { return h == 1; }) &&
         std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

double entropy_of(const std::vector<double>& counts, double n) {
  double h = 0.0;
  for (double x : counts) {
    if (x > 0.0) h += (x / n) * std::log(n / x);
  }
  return h;
}

double adjusted(double index, double expected, double maximum) {
  const double numerator = index - expected;
  const double denominator = maximum - expected;
  if (std::abs(denominator) <= 1e-12 * std::max(1.0, std::abs(maximum))) {
    if (std::abs(numerator) <= 1e-12 * std::max(1.0, std::abs(index))) return 1.0;
    throw Error(Errc::zero_denominator, "adjusted index: zero denominator");
  }
  return numerator / denominator;
}

}  // namespace

double jaccard(const PairCounts& pc) {
  const double denominator = pc.m11 + pc.m10 + pc.m01;
  if (denominator == 0.0) {
    throw Error(Errc::zero_denominator, "jaccard: no pair is co-clustered in either clustering");
  }
  return pc.m11 / denominator;
}

double f_measure(const PairCounts& pc, double beta) {
  if (!(beta > 0.0)) throw Error(Errc::invalid_argument, "f_measure: beta must be positive");
  if (pc.m11 + pc.m10 == 0.0 || pc.m11 + pc.m01 == 0.0) {
    throw Error(Errc::degenerate_precision_recall, "f_measure: precision or recall undefined");
  }
  const double precision = pc.m11 / (pc.m11 + pc.m10);
  const double recall = pc.m11 / (pc.m11 + pc.m01);
  const double b2 = beta * beta;
  if (precision == 0.0 && recall == 0.0) return 0.0;
  return (b2 + 1.0) * precision * recall / (b2 * precision + recall);
}

double mirkin(const PairCounts& pc) {
  const double pairs = pc.total();
  if (pairs == 0.0) throw Error(Errc::too_few_points, "mirkin: fewer than two points");
  const double ri = (pc.m11 + pc.m00) / pairs;
  // n(n-1) = 2 * C(n, 2)
  return 2.0 * pairs * (ri - 1.0);
}

double rand_index(const ContingencyTable& table) {
  require_partition_counts(table, "rand_index");
  const double n = table.total();
  if (n < 2.0) throw Error(Errc::too_few_points, "rand_index: fewer than two points");
  double cells = 0.0;
  double marginals = 0.0;
  table.for_each_nonzero([&](std::size_t, std::size_t, double x) { cells += x * x; });
  for (double a : table.row_marginals()) marginals += a * a;
  for (double b : table.col_marginals()) marginals += b * b;
  return 1.0 + (2.0 * cells - marginals) / (n * n - n);
}

EntropySuite entropy_suite(const ContingencyTable& table, LogBase base) {
  require_partition_counts(table, "entropy_suite");
  const double n = table.total();
  if (n <= 0.0) throw Error(Errc::zero_total, "entropy_suite: empty table");
  const auto& rows = table.row_marginals();
  const auto& cols = table.col_marginals();

  EntropySuite s;
  s.h_u = entropy_of(rows, n);
  s.h_v = entropy_of(cols, n);
  if (is_matching(table)) {
    s.h_v = s.h_u;
    s.h_uv = s.h_u;
    s.mutual_information = s.h_u;
  } else {
    const double log_n = std::log(n);
    table.for_each_nonzero([&](std::size_t i, std::size_t j, double x) {
      const double p = x / n;
      s.h_uv += p * std::log(n / x);
      s.mutual_information += p * (log_n + std::log(x) - std::log(rows[i]) - std::log(cols[j]));
      s.variation_of_information += p * (std::log(rows[i]) + std::log(cols[j]) - 2.0 * std::log(x));
    });
  }
  const double scale = base_scale(base);
  s.h_u *= scale;
  s.h_v *= scale;
  s.h_uv *= scale;
  s.mutual_information *= scale;
  s.variation_of_information *= scale;
  s.h_u_given_v = s.h_uv - s.h_v;
  s.h_v_given_u = s.h_uv - s.h_u;
  return s;
}

double nmi(const ContingencyTable& table, NmiVariant variant, LogBase base) {
  const EntropySuite s = entropy_suite(table, base);
  if (s.h_u == 0.0 && s.h_v == 0.0) return 1.0;  // both single-cluster
  if (variant == NmiVariant::sum) {
    return std::clamp(2.0 * s.mutual_information / (s.h_u + s.h_v), 0.0, 1.0);
  }
  const double product = s.h_u * s.h_v;
  if (product == 0.0) {
    throw Error(Errc::degenerate_entropy, "nmi (sqrt): one clustering has zero entropy");
  }
  return std::clamp(s.mutual_information / std::sqrt(product), 0.0, 1.0);
}

double ari(const ContingencyTable& table, AriVariant variant) {
  require_partition_counts(table, "ari");
  const double n = table.total();
  if (n < 2.0) throw Error(Errc::too_few_points, "ari: fewer than two points");
  const auto term = [variant](double x) { return variant == AriVariant::exact ? choose2(x) : x * x; };

  double index = 0.0;
  double sum_u = 0.0;
  double sum_v = 0.0;
  table.for_each_nonzero([&](std::size_t, std::size_t, double x) { index += term(x); });
  for (double a : table.row_marginals()) sum_u += term(a);
  for (double b : table.col_marginals()) sum_v += term(b);
  const double expected = sum_u * sum_v / term(n);
  return adjusted(index, expected, 0.5 * (sum_u + sum_v));
}

double emi(const ContingencyTable& table, const EmiOptions& options) {
  require_partition_counts(table, "emi");
  const double n = table.total();
  if (n > static_cast<double>(options.max_points)) {
    throw Error(Errc::cap_exceeded, "emi: " + std::to_string(static_cast<long long>(n)) +
                                        " points exceed the configured cap of " +
                                        std::to_string(options.max_points));
  }
  if (n <= 0.0) throw Error(Errc::zero_total, "emi: empty table");

  const auto& rows = table.row_marginals();
  const auto& cols = table.col_marginals();
  const double log_n = std::log(n);
  const double lg_n = std::lgamma(n + 1.0);
  double total = 0.0;
  for (double a : rows) {
    if (a == 0.0) continue;
    const double lg_a = std::lgamma(a + 1.0) + std::lgamma(n - a + 1.0);
    for (double b : cols) {
      if (b == 0.0) continue;
      const double lg_ab = lg_a + std::lgamma(b + 1.0) + std::lgamma(n - b + 1.0) - lg_n;
      const double lo = std::max(a + b - n, 1.0);
      const double hi = std::min(a, b);
      double cell = 0.0;
      for (double m = lo; m <= hi; m += 1.0) {
        const double log_p = lg_ab - std::lgamma(m + 1.0) - std::lgamma(a - m + 1.0) -
                             std::lgamma(b - m + 1.0) - std::lgamma(n - a - b + m + 1.0);
        const double log_ratio = log_n + std::log(m) - std::log(a) - std::log(b);
        cell += (m / n) * log_ratio * std::exp(log_p);
      }
      total += cell;
    }
  }
  return total * base_scale(options.base);
}

double ami(const ContingencyTable& table, AmiUpperBound upper, const EmiOptions& options) {
  const EntropySuite s = entropy_suite(table, options.base);
  const double expected = emi(table, options);
  double bound = 0.0;
  switch (upper) {
    case AmiUpperBound::min: bound = std::min(s.h_u, s.h_v); break;
    case AmiUpperBound::sqrt: bound = std::sqrt(s.h_u * s.h_v); break;
    case AmiUpperBound::mean: bound = 0.5 * (s.h_u + s.h_v); break;
    case AmiUpperBound::max: bound = std::max(s.h_u, s.h_v); break;
    case AmiUpperBound::joint: bound = s.h_uv; break;
  }
  const double denominator = bound - expected;
  if (std::abs(denominator) <= 1e-12 * std::max(1.0, bound)) {
    throw Error(Errc::degenerate_entropy, "ami: upper bound equals the expected mutual information");
  }
  return (s.mutual_information - expected) / denominator;
}

}  // namespace clustagree
