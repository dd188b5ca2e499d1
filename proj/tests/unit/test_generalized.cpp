#include <doctest.h>

#include <cmath>

#include "clustagree/classic.hpp"
#include "clustagree/contingency.hpp"
#include "clustagree/generalized.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace clustagree;
using namespace testsupport;
using doctest::Approx;

namespace {

ContingencyTable fig3_table() { return ContingencyTable::from_counts({{3, 0, 3}, {1, 3, 0}}); }

ContingencyTable random_table(Rng& rng, std::size_t k, std::size_t r, bool integer) {
  std::vector<Cell> cells;
  std::uniform_real_distribution<double> real(0.0, 5.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const double x = integer ? static_cast<double>(uniform(rng, 0, 6)) : real(rng);
      cells.push_back({i, j, x});
    }
  }
  cells.push_back({0, 0, 2.0});
  return ContingencyTable::from_cells(k, r, std::move(cells));
}

}  // namespace

TEST_CASE("matrix-form terms of the ten-point example") {
  const auto terms = gen_matrix_terms(fig3_table(), PhiFunction::binom2());
  CHECK(terms.row_term == 21);
  CHECK(terms.col_term == 12);
  CHECK(terms.cell_term == 9);
  CHECK(terms.total_term == 45);
  CHECK(terms.distance() == 15);
  const auto r = gen_distance(fig3_table(), PhiFunction::binom2());
  CHECK(r.d_total == 15);
  CHECK(r.d_total == r.d_u_given_v + r.d_v_given_u);
  CHECK(r.normalized == Approx(1.0 / 3));
}

TEST_CASE("normalized and adjusted values of the ten-point example") {
  const auto t = fig3_table();
  CHECK(1 - gen_distance_normalized(t, PhiFunction::binom2()) == Approx(rand_index(t)));
  const double vi = entropy_suite(t).variation_of_information;
  CHECK(gen_distance_normalized(t, PhiFunction::x_log_x()) == Approx(vi / std::log(10.0)));
  CHECK(gen_distance_normalized(t, PhiFunction::x_log_x()) == Approx(0.376).epsilon(1e-3));
  CHECK(1 - gen_distance_adjusted(t, PhiFunction::x_times_x_minus_1()) ==
        Approx(0.312).epsilon(1e-3));
  CHECK(1 - gen_distance_adjusted(t, PhiFunction::x_log_x()) == Approx(0.5085).epsilon(1e-4));
  CHECK(1 - gen_distance_adjusted(t, PhiFunction::square()) ==
        Approx(ari(t, AriVariant::approx)).epsilon(1e-12));
}

TEST_CASE("identical clusterings have zero distance") {
  Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    const auto u = random_partition(rng, 30, 4);
    const auto table = overlap_table(u, u);
    for (const auto& phi : {PhiFunction::x_log_x(), PhiFunction::binom2(), PhiFunction::square(),
                            PhiFunction::x_times_x_minus_1()}) {
      CHECK(gen_distance(table, phi).d_total == Approx(0.0).epsilon(1e-12));
      CHECK(gen_distance_normalized(table, phi) == Approx(0.0).epsilon(1e-12));
      CHECK(gen_distance_adjusted(table, phi) == Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("matrix form equals summation form and the oracle") {
  Rng rng(67);
  for (int t = 0; t < 200; ++t) {
    const bool integer = t % 2 == 0;
    const auto table = random_table(rng, uniform(rng, 1, 5), uniform(rng, 1, 5), integer);
    std::vector<PhiFunction> phis{PhiFunction::binom2(), PhiFunction::square(),
                                  PhiFunction::x_times_x_minus_1()};
    if (integer) phis.push_back(PhiFunction::x_log_x());
    for (const auto& phi : phis) {
      const auto sum_form = gen_distance(table, phi);
      const double matrix_form = gen_matrix_terms(table, phi).distance();
      const auto slow = oracle::brute_generalized(table.to_dense(), phi);
      const double scale = std::max(1.0, std::abs(slow.distance));
      CHECK(std::abs(sum_form.d_total - matrix_form) / scale < 1e-9);
      CHECK(std::abs(sum_form.d_total - slow.distance) / scale < 1e-9);
    }
  }
}

TEST_CASE("normalized distance stays in the unit interval") {
  Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    const auto table = random_table(rng, uniform(rng, 1, 6), uniform(rng, 1, 6), true);
    for (const auto& phi : {PhiFunction::x_log_x(), PhiFunction::binom2(), PhiFunction::square(),
                            PhiFunction::x_times_x_minus_1()}) {
      const double nd = gen_distance_normalized(table, phi);
      CHECK(nd >= -1e-12);
      CHECK(nd <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("adjusted distance with a square phi is scale invariant") {
  Rng rng(73);
  for (int t = 0; t < 50; ++t) {
    const auto table = random_table(rng, 3, 4, false);
    std::vector<Cell> scaled = table.nonzeros();
    for (auto& c : scaled) c.value *= 7.5;
    const auto big = ContingencyTable::from_cells(3, 4, scaled);
    CHECK(gen_distance_adjusted(big, PhiFunction::square()) ==
          Approx(gen_distance_adjusted(table, PhiFunction::square())).epsilon(1e-12));
  }
}

TEST_CASE("edge overlap convention does not change the normalized square distance") {
  const auto g = fig4_graph();
  const auto a = overlap_table(fig4_u1(), fig4_truth(), OverlapKind::edge_overlap(g));
  const auto b = overlap_table(fig4_u1(), fig4_truth(),
                               OverlapKind::edge_overlap(g, PairConvention::ordered));
  CHECK(gen_distance_normalized(a, PhiFunction::square()) ==
        Approx(gen_distance_normalized(b, PhiFunction::square())));
}

TEST_CASE("phi catalogue and custom generators") {
  CHECK(PhiFunction::binom2()(4) == 6);
  CHECK(PhiFunction::square()(3) == 9);
  CHECK(PhiFunction::x_times_x_minus_1()(4) == 12);
  CHECK(PhiFunction::x_log_x()(0) == 0);
  CHECK(PhiFunction::x_log_x()(std::exp(1.0)) == Approx(std::exp(1.0)));
  const auto cube = PhiFunction::custom("cube", [](double x) { return x * x * x; });
  CHECK(cube.kind() == PhiFunction::Kind::custom);
  CHECK(gen_distance(fig3_table(), cube).d_total > 0);
  CHECK_THROWS_AS(PhiFunction::custom("sqrt", [](double x) { return std::sqrt(x); }), Error);
  CHECK_THROWS_AS(PhiFunction::custom("shift", [](double x) { return x * x + 1; }), Error);
}

TEST_CASE("generalized distance errors") {
  const auto soft = ContingencyTable::from_cells(1, 2, {{0, 0, 0.5}, {0, 1, 1.5}});
  CHECK_THROWS_AS(gen_distance(soft, PhiFunction::x_log_x()), Error);
  const auto empty = ContingencyTable::from_cells(1, 1, {});
  CHECK_THROWS_AS(gen_distance_normalized(empty, PhiFunction::square()), Error);
  const auto one = ContingencyTable::from_counts({{4}});
  CHECK(gen_distance_adjusted(one, PhiFunction::square()) == 0.0);
}
