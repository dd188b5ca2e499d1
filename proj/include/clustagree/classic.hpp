#pragma once

#include <cstddef>

#include "clustagree/contingency.hpp"

namespace clustagree {

enum class LogBase { natural, base2 };

struct EntropySuite {
  double h_u = 0;   // H(U), entropy of the row clustering
  double h_v = 0;   // H(V), entropy of the column clustering
  double h_uv = 0;  // joint entropy
  double mutual_information = 0;
  double variation_of_information = 0;
  double h_u_given_v = 0;
  double h_v_given_u = 0;
};

enum class NmiVariant { sum, sqrt };
enum class AriVariant { exact, approx };
enum class AmiUpperBound { min, sqrt, mean, max, joint };

// Pair-counting measures. Precision is M11/(M11+M10), recall M11/(M11+M01).
double jaccard(const PairCounts& pc);
double f_measure(const PairCounts& pc, double beta = 1.0);
double mirkin(const PairCounts& pc);

double rand_index(const ContingencyTable& table);

/// All entropy quantities of a partition count table; 0 log 0 is taken as 0.
EntropySuite entropy_suite(const ContingencyTable& table, LogBase base = LogBase::natural);

/// NMI; the sum form is 2I/(H(U)+H(V)), the sqrt form I/sqrt(H(U)H(V)).
/// Two single-cluster clusterings agree perfectly and score 1.
double nmi(const ContingencyTable& table, NmiVariant variant = NmiVariant::sum,
           LogBase base = LogBase::natural);

/// Hubert-Arabie ARI (exact, binomial terms) or its squared-term approximation.
double ari(const ContingencyTable& table, AriVariant variant = AriVariant::exact);

struct EmiOptions {
  std::size_t max_points = 100'000;
  LogBase base = LogBase::natural;
};

/// Expected mutual information under the fixed-marginal hypergeometric model.
double emi(const ContingencyTable& table, const EmiOptions& options = {});

double ami(const ContingencyTable& table, AmiUpperBound upper = AmiUpperBound::mean,
           const EmiOptions& options = {});

}  // namespace clustagree
