#include <doctest.h>

#include <cmath>

#include "clustagree/classic.hpp"
#include "clustagree/comembership.hpp"
#include "clustagree/contingency.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace clustagree;
using namespace testsupport;
using doctest::Approx;

TEST_CASE("gram statistics of the ten-point example") {
  const auto s = gram_stats(fig3_u(), fig3_v());
  CHECK(s.frob_u == 52);
  CHECK(s.frob_v == 34);
  CHECK(s.cross == 28);
  const auto exact = s.terms(DeltaVariant::exact);
  CHECK(exact.frob_u == 42);
  CHECK(exact.frob_v == 24);
  CHECK(delta_sq(fig3_u(), fig3_v(), DeltaVariant::exact) == 30);
  CHECK(oracle::dense_delta(fig3_u(), fig3_v(), DeltaVariant::exact) == 30);
}

TEST_CASE("agreement of the two one-point-off candidates") {
  const auto u = fig4_truth();
  for (const auto& v : {fig4_u1(), fig4_u2()}) {
    CHECK(delta_sq(u, v, DeltaVariant::exact) == 16);
    CHECK(ri_delta(u, v, DeltaVariant::exact) == Approx(0.778).epsilon(1e-3));
    CHECK(ari_delta(u, v, DeltaVariant::exact) == Approx(0.556).epsilon(1e-3));
    CHECK(ri_delta(u, v, DeltaVariant::approx) == Approx(0.802).epsilon(1e-3));
    CHECK(ari_delta(u, v, DeltaVariant::approx) == Approx(0.604).epsilon(1e-3));
    CHECK(i_norm(u, v) == Approx(0.695).epsilon(1e-3));
    CHECK(i_norm(u, v) == Approx(1 - 4 / (std::sqrt(41.0) + std::sqrt(45.0))));
    CHECK(i_norm(u, v, NormKind::squared) == Approx(1 - 16.0 / 86));
    CHECK(i_sqrt_tr(u, v) == Approx(0.815).epsilon(1e-3));
    CHECK(omega(u, v) == Approx(rand_index(overlap_table(u, v))));
  }
}

TEST_CASE("overlapping and soft clusterings agree with themselves") {
  for (const auto& c : {fig2_v(), fig2_u1()}) {
    CHECK(delta_sq(c, c, DeltaVariant::exact) == 0);
    CHECK(delta_sq(c, c, DeltaVariant::approx) == 0);
    CHECK(ri_delta(c, c, DeltaVariant::exact) == 1);
    CHECK(ari_delta(c, c, DeltaVariant::approx) == 1);
    CHECK(i_sqrt_tr(c, c) == 1);
    CHECK(d_norm(c, c) == 0);
  }
  CHECK(omega(fig2_v(), fig2_v()) == 1);
  CHECK(adjusted_omega(fig2_v(), fig2_v()) == 1);
}

TEST_CASE("contingency ARI does not recognize an overlapping clustering as identical to itself") {
  // The co-membership version does (previous case); the count table of the
  // same clustering is not a permutation matrix.
  const auto t = overlap_table(fig2_v(), fig2_v());
  CHECK(t.at(0, 1) == 1.0);
}

TEST_CASE("pair sharing two clusters versus one or none") {
  const auto v = shared_pair_reference();
  const auto once = shared_pair_once();
  const auto never = shared_pair_never();
  CHECK(delta_sq(v, once, DeltaVariant::exact) == 2);
  CHECK(delta_sq(v, never, DeltaVariant::exact) == 8);
  CHECK(ari_delta(v, once, DeltaVariant::exact) > ari_delta(v, never, DeltaVariant::exact));
  CHECK(omega(v, once) == omega(v, never));
  CHECK(omega(v, once) == Approx(20.0 / 21));
}

TEST_CASE("reduction to classic measures on partitions") {
  Rng rng(79);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = uniform(rng, 2, 60);
    const auto u = random_partition(rng, n, uniform(rng, 1, std::min<std::size_t>(n, 6)));
    const auto v = random_partition(rng, n, uniform(rng, 1, std::min<std::size_t>(n, 6)));
    const auto table = overlap_table(u, v);
    CHECK(std::abs(ri_delta(u, v, DeltaVariant::exact) - rand_index(table)) < 1e-9);
    CHECK(std::abs(omega(u, v) - rand_index(table)) < 1e-9);
    bool defined = true;
    double expected = 0;
    try {
      expected = ari(table);
    } catch (const Error&) {
      defined = false;
    }
    if (defined) CHECK(std::abs(ari_delta(u, v, DeltaVariant::exact) - expected) < 1e-9);
  }
}

TEST_CASE("symmetry") {
  Rng rng(83);
  for (int t = 0; t < 100; ++t) {
    const auto u = random_soft(rng, 25, 4);
    const auto v = random_overlapping(rng, 25, 5);
    for (auto variant : {DeltaVariant::exact, DeltaVariant::approx}) {
      CHECK(ri_delta(u, v, variant) == Approx(ri_delta(v, u, variant)).epsilon(1e-12));
      CHECK(ari_delta(u, v, variant) == Approx(ari_delta(v, u, variant)).epsilon(1e-12));
    }
    CHECK(i_sqrt_tr(u, v) == Approx(i_sqrt_tr(v, u)).epsilon(1e-12));
    CHECK(d_norm(u, v) == Approx(d_norm(v, u)).epsilon(1e-12));
    const auto w = random_overlapping(rng, 25, 3);
    CHECK(omega(w, v) == omega(v, w));
  }
}

TEST_CASE("cluster order does not matter") {
  Rng rng(89);
  for (int t = 0; t < 50; ++t) {
    const auto u = random_soft(rng, 20, 5);
    const auto v = random_overlapping(rng, 20, 4);
    std::vector<Membership> shuffled;
    std::vector<std::size_t> perm{4, 2, 0, 3, 1};
    for (std::size_t i = 0; i < u.points(); ++i)
      for (const auto& e : u.row(i)) shuffled.push_back({i, perm[e.index], e.weight});
    const auto u2 = Clustering::from_matrix(20, 5, shuffled);
    CHECK(ari_delta(u, v, DeltaVariant::exact) ==
          Approx(ari_delta(u2, v, DeltaVariant::exact)).epsilon(1e-12));
    CHECK(i_sqrt_tr(u, v) == Approx(i_sqrt_tr(u2, v)).epsilon(1e-12));
  }
}

TEST_CASE("omega requires crisp memberships") {
  CHECK_THROWS_AS(omega(fig2_u1(), fig2_v()), Error);
  CHECK_THROWS_AS(omega(labels_from("a"), labels_from("a")), Error);
}

TEST_CASE("gram work stays linear in the number of stored memberships") {
  Rng rng(97);
  const auto u = random_partition(rng, 20'000, 50);
  const auto v = random_partition(rng, 20'000, 40);
  const auto s = gram_stats(u, v);
  CHECK(s.work < 10 * 20'000);
}
