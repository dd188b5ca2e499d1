#pragma once

#include <functional>
#include <string>

#include "clustagree/contingency.hpp"

namespace clustagree {

/// How the chance-expected cell term of the adjusted distance is formed.
enum class ExpectationModel {
  /// sum over cells of phi(row * col / total): phi evaluated at the independence table.
  plug_in,
  /// sum phi(rows) * sum phi(cols) / phi(total): the fixed-marginal hypergeometric
  /// expectation of sum C(n_ij, 2); coincides with plug_in for multiplicative phi.
  hypergeometric,
};

/// Scalar generator of the generalized distance, applied element-wise.
class PhiFunction {
 public:
  enum class Kind { x_log_x, binom2, square, x_times_x_minus_1, custom };

  static PhiFunction x_log_x();
  static PhiFunction binom2();
  static PhiFunction square();
  static PhiFunction x_times_x_minus_1();
  /// A user generator. Must satisfy phi(0) = 0 and be superadditive on
  /// non-negative input; both are spot-checked here (Errc::invalid_argument).
  static PhiFunction custom(std::string name, std::function<double(double)> fn,
                            ExpectationModel expectation = ExpectationModel::plug_in);

  double operator()(double x) const { return x == 0.0 ? 0.0 : fn_(x); }

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  ExpectationModel expectation() const noexcept { return expectation_; }

 private:
  PhiFunction(Kind kind, std::string name, std::function<double(double)> fn,
              ExpectationModel expectation)
      : kind_(kind), name_(std::move(name)), fn_(std::move(fn)), expectation_(expectation) {}

  Kind kind_;
  std::string name_;
  std::function<double(double)> fn_;
  ExpectationModel expectation_;
};

struct GeneralizedResult {
  double d_u_given_v = 0;  // sum over V clusters of phi(column sum) - sum phi(cells)
  double d_v_given_u = 0;  // the same over U clusters (rows)
  double d_total = 0;
  double nf = 0;           // phi(total)
  double normalized = 0;   // d_total / nf, or 0 when nf == 0
};

/// Sums appearing in the matrix form of the distance for a table N.
struct MatrixFormTerms {
  double row_term = 0;    // 1 phi(N 1^T)
  double col_term = 0;    // phi(1 N) 1^T
  double cell_term = 0;   // 1 phi(N) 1^T
  double total_term = 0;  // phi(1 N 1^T)

  double distance() const { return (row_term - cell_term) + (col_term - cell_term); }
};

/// Summation form, one directed term per clustering.
GeneralizedResult gen_distance(const ContingencyTable& table, const PhiFunction& phi);

/// Matrix form from the table's marginal vectors.
MatrixFormTerms gen_matrix_terms(const ContingencyTable& table, const PhiFunction& phi);

/// D / phi(total), in [0, 1] for positive superadditive phi.
double gen_distance_normalized(const ContingencyTable& table, const PhiFunction& phi);

/// D normalized by its chance-adjusted bound; 1 - result is the adjusted agreement.
double gen_distance_adjusted(const ContingencyTable& table, const PhiFunction& phi);

}  // namespace clustagree
