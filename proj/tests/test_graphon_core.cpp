#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace graphonkit;

TEST_CASE("construction and validation") {
  SECTION("single block, infinite ambient") {
    StepGraphon w({1.0}, {1.0}, kInfiniteMass);
    CHECK(w.block_count() == 1);
    CHECK(integral(w) == 1.0);
  }
  SECTION("shape mismatch rejected") {
    CHECK_THROWS_AS(StepGraphon({1.0}, {1.0, 0.0, 0.0, 0.0}, kInfiniteMass), graphon_error);
  }
  SECTION("symmetric signed graphon integrates to zero") {
    StepGraphon w({0.5, 0.5}, {1.0, -1.0, -1.0, 1.0}, 1.0);
    CHECK(integral(w) == 0.0);
  }
  SECTION("asymmetry rejected exactly") {
    CHECK_THROWS_AS(StepGraphon({1.0, 1.0}, {0.0, 0.5, 0.5 + 1e-15, 0.0}, kInfiniteMass),
                    graphon_error);
  }
  SECTION("nonpositive weight rejected") {
    CHECK_THROWS_AS(StepGraphon({0.0}, {1.0}, kInfiniteMass), graphon_error);
    CHECK_THROWS_AS(StepGraphon({-1.0}, {1.0}, kInfiniteMass), graphon_error);
  }
  SECTION("ambient smaller than support rejected") {
    CHECK_THROWS_AS(StepGraphon({1.0, 1.0}, std::vector<double>(4, 0.0), 1.5), graphon_error);
  }
  SECTION("empty graphon is the zero graphon") {
    StepGraphon w;
    CHECK(w.block_count() == 0);
    CHECK(l1_norm(w) == 0.0);
    CHECK(w.is_zero());
  }
}

TEST_CASE("trivial extension") {
  StepGraphon w({1.0}, {1.0}, kInfiniteMass);
  SECTION("two-point extension used by the one-point-space example") {
    StepGraphon e = trivial_extension(w, 1.0);
    CHECK(e.weights() == std::vector<double>{1.0, 1.0});
    CHECK(e.values() == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  }
  SECTION("zero extra mass is the identity") {
    StepGraphon e = trivial_extension(w, 0.0);
    CHECK(e.weights() == w.weights());
    CHECK(e.values() == w.values());
  }
  SECTION("norms and integral unchanged") {
    stream_rng rng(7);
    for (int i = 0; i < 10; ++i) {
      StepGraphon g = gktest::random_graphon(rng, 4);
      StepGraphon e = trivial_extension(g, 2.5);
      CHECK(l1_norm(e) == Catch::Approx(l1_norm(g)).margin(1e-14));
      CHECK(lp_norm(e, 2.0) == Catch::Approx(lp_norm(g, 2.0)).margin(1e-14));
      CHECK(integral(e) == Catch::Approx(integral(g)).margin(1e-14));
      CHECK(cut_norm_exact(e).value == Catch::Approx(cut_norm_exact(g).value).margin(1e-14));
    }
  }
  SECTION("infinite extra mass raises the ambient") {
    StepGraphon e = trivial_extension(StepGraphon({1.0}, {1.0}, 1.0), kInfiniteMass);
    CHECK(e.ambient_mass() == kInfiniteMass);
    CHECK(e.block_count() == 1);
  }
}

TEST_CASE("norms and integral") {
  SECTION("lp profile of the constant n^{-2} block of mass n") {
    for (int n = 1; n <= 6; ++n) {
      const double nn = n;
      StepGraphon w({nn}, {1.0 / (nn * nn)}, kInfiniteMass);
      for (double p : {1.5, 2.0, 3.0})
        CHECK(lp_norm(w, p) ==
              Catch::Approx(std::pow(nn, -2.0 * (1.0 - 1.0 / p))).epsilon(1e-12));
    }
  }
  SECTION("constant block") {
    StepGraphon w({3.0}, {-2.0}, kInfiniteMass);
    CHECK(l1_norm(w) == 18.0);
    CHECK(integral(w) == -18.0);
    CHECK(sup_norm(w) == 2.0);
  }
  SECTION("p < 1 rejected") {
    StepGraphon w({1.0}, {1.0}, kInfiniteMass);
    CHECK_THROWS_AS(lp_norm(w, 0.5), graphon_error);
  }
}

TEST_CASE("refine_difference") {
  SECTION("identity coupling of W with itself vanishes") {
    stream_rng rng(11);
    StepGraphon w = gktest::random_graphon(rng, 5);
    StepGraphon d = refine_difference(w, w, identity_coupling(w.weights()));
    CHECK(l1_norm(d) == 0.0);
    CHECK(cut_norm_exact(d).value == 0.0);
  }
  SECTION("transposition coupling on the extended one-point pair") {
    StepGraphon w1 = trivial_extension(StepGraphon({1.0}, {1.0}, 1.0), 1.0);
    StepGraphon w2 = trivial_extension(StepGraphon({1.0}, {-1.0}, 1.0), 1.0);
    Coupling c;
    c.rows = c.cols = 2;
    c.matrix = {0.0, 1.0, 1.0, 0.0};
    c.row_marginals = c.col_marginals = {1.0, 1.0};
    StepGraphon d = refine_difference(w1, w2, c);
    CHECK(cut_norm_exact(d).value == 2.0);  // both diagonal cells carry +1
    CHECK(l1_norm(d) == 2.0);
  }
  SECTION("L1 of refinement dominates the integral gap") {
    stream_rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      StepGraphon w1 = gktest::random_graphon(rng, 3);
      StepGraphon w2 = gktest::random_graphon(rng, 4);
      auto [e1, e2, common] = equalize_masses(w1, w2);
      (void)common;
      Coupling c;
      c.rows = e1.block_count();
      c.cols = e2.block_count();
      c.row_marginals = e1.weights();
      c.col_marginals = e2.weights();
      double total = e1.support_mass();
      c.matrix.resize(c.rows * c.cols);
      for (std::size_t i = 0; i < c.rows; ++i)
        for (std::size_t j = 0; j < c.cols; ++j)
          c.matrix[i * c.cols + j] = c.row_marginals[i] * c.col_marginals[j] / total;
      StepGraphon d = refine_difference(e1, e2, c);
      CHECK(l1_norm(d) >= integral_lower_bound(w1, w2) - 1e-10);
    }
  }
  SECTION("marginal mismatch rejected") {
    StepGraphon w({1.0}, {1.0}, kInfiniteMass);
    Coupling c;
    c.rows = c.cols = 1;
    c.matrix = {0.5};
    c.row_marginals = c.col_marginals = {0.5};
    CHECK_THROWS_AS(refine_difference(w, w, c), graphon_error);
  }
}

TEST_CASE("degree vector") {
  SECTION("constant block") {
    StepGraphon w({2.0}, {1.0}, kInfiniteMass);
    CHECK(degree_vector(w) == std::vector<double>{2.0});
  }
  SECTION("two-block bipartite-ish") {
    StepGraphon w({0.5, 0.5}, {0.0, 1.0, 1.0, 0.0}, 1.0);
    CHECK(degree_vector(w) == std::vector<double>{0.5, 0.5});
  }
  SECTION("weighted degrees sum to the integral") {
    stream_rng rng(17);
    StepGraphon w = gktest::random_graphon(rng, 6);
    const auto d = degree_vector(w);
    double s = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) s += w.weight(i) * d[i];
    CHECK(s == Catch::Approx(integral(w)).margin(1e-12));
  }
}
