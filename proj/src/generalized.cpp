#include "clustagree/generalized.hpp"

#include <cmath>
#include <random>

namespace clustagree {

PhiFunction PhiFunction::x_log_x() {
  return {Kind::x_log_x, "xlogx", [](double x) { return x * std::log(x); },
          ExpectationModel::plug_in};
}

PhiFunction PhiFunction::binom2() {
  return {Kind::binom2, "binom2", [](double x) { return x * (x - 1.0) / 2.0; },
          ExpectationModel::hypergeometric};
}

PhiFunction PhiFunction::square() {
  return {Kind::square, "square", [](double x) { return x * x; }, ExpectationModel::plug_in};
}

PhiFunction PhiFunction::x_times_x_minus_1() {
  return {Kind::x_times_x_minus_1, "x(x-1)", [](double x) { return x * (x - 1.0); },
          ExpectationModel::hypergeometric};
}

PhiFunction PhiFunction::custom(std::string name, std::function<double(double)> fn,
                                ExpectationModel expectation) {
  if (!fn) throw Error(Errc::invalid_argument, "custom phi: empty function");
  if (fn(0.0) != 0.0) throw Error(Errc::invalid_argument, "custom phi: phi(0) must be 0");
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  for (int trial = 0; trial < 256; ++trial) {
    const double x = dist(rng);
    const double y = dist(rng);
    const double joint = fn(x + y);
    const double split = fn(x) + fn(y);
    if (joint < split - 1e-9 * std::max(1.0, std::abs(joint))) {
      throw Error(Errc::invalid_argument, "custom phi '" + name + "' is not superadditive");
    }
  }
  return {Kind::custom, std::move(name), std::move(fn), expectation};
}

namespace {

void check_table(const ContingencyTable& table, const PhiFunction& phi) {
  if (phi.kind() == PhiFunction::Kind::x_log_x && !table.all_integer()) {
    throw Error(Errc::non_integer_table, "phi = x log x requires an integer-valued table");
  }
}

}  // namespace

GeneralizedResult gen_distance(const ContingencyTable& table, const PhiFunction& phi) {
  check_table(table, phi);
  std::vector<double> row_cells(table.rows(), 0.0);
  std::vector<double> col_cells(table.cols(), 0.0);
  table.for_each_nonzero([&](std::size_t i, std::size_t j, double x) {
    const double p = phi(x);
    row_cells[i] += p;
    col_cells[j] += p;
  });

  GeneralizedResult r;
  const auto& rows = table.row_marginals();
  const auto& cols = table.col_marginals();
  for (std::size_t j = 0; j < cols.size(); ++j) r.d_u_given_v += phi(cols[j]) - col_cells[j];
  for (std::size_t i = 0; i < rows.size(); ++i) r.d_v_given_u += phi(rows[i]) - row_cells[i];
  r.d_total = r.d_u_given_v + r.d_v_given_u;
  r.nf = phi(table.total());
  r.normalized = r.nf > 0.0 ? r.d_total / r.nf : 0.0;
  return r;
}

MatrixFormTerms gen_matrix_terms(const ContingencyTable& table, const PhiFunction& phi) {
  check_table(table, phi);
  MatrixFormTerms t;
  for (double a : table.row_marginals()) t.row_term += phi(a);
  for (double b : table.col_marginals()) t.col_term += phi(b);
  table.for_each_nonzero([&](std::size_t, std::size_t, double x) { t.cell_term += phi(x); });
  t.total_term = phi(table.total());
  return t;
}

double gen_distance_normalized(const ContingencyTable& table, const PhiFunction& phi) {
  const double total = table.total();
  if (!(total > 0.0)) throw Error(Errc::zero_total, "normalized distance: empty table");
  const GeneralizedResult r = gen_distance(table, phi);
  if (!(r.nf > 0.0)) {
    throw Error(Errc::zero_total, "normalized distance: phi(total) is not positive");
  }
  return r.normalized;
}

double gen_distance_adjusted(const ContingencyTable& table, const PhiFunction& phi) {
  const double total = table.total();
  if (!(total > 0.0)) throw Error(Errc::zero_total, "adjusted distance: empty table");
  const MatrixFormTerms t = gen_matrix_terms(table, phi);
  const double d = t.distance();

  double expected = 0.0;
  if (phi.expectation() == ExpectationModel::hypergeometric) {
    expected = t.row_term * t.col_term / t.total_term;
  } else {
    for (double a : table.row_marginals()) {
      for (double b : table.col_marginals()) expected += phi(a * b / total);
    }
  }
  const double nf = t.row_term + t.col_term - 2.0 * expected;
  const double scale = std::max(1.0, std::abs(t.row_term) + std::abs(t.col_term));
  if (std::abs(nf) <= 1e-12 * scale || !std::isfinite(nf)) {
    if (std::abs(d) <= 1e-12 * scale) return 0.0;
    throw Error(Errc::zero_nf, "adjusted distance: zero normalizing factor");
  }
  return d / nf;
}

}  // namespace clustagree
