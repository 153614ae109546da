#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lrsolve/closed_form.hpp"
#include "lrsolve/oracle.hpp"
#include "lrsolve/random_instances.hpp"
#include "test_support.hpp"

using namespace lrsolve;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752;

DenseMatrix make(std::initializer_list<std::initializer_list<double>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  DenseMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("partition_v: identical single columns share the same V rows") {
  // [X, A] = [[1,1],[0,0]] has sigma = sqrt(2) and V = [1/sqrt2; 1/sqrt2].
  DenseMatrix x = make({{1}, {0}});
  Partition p = partition_v(x, x);
  REQUIRE(p.concat.rank == 1);
  CHECK(p.concat.sigma(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(p.vx(0, 0) == doctest::Approx(kInvSqrt2).epsilon(1e-13));
  CHECK(p.va(0, 0) == doctest::Approx(kInvSqrt2).epsilon(1e-13));
}

TEST_CASE("partition_v: zero data block contributes zero V rows") {
  DenseMatrix x = DenseMatrix::Zero(2, 1);
  DenseMatrix a = make({{1}, {0}});
  Partition p = partition_v(x, a);
  REQUIRE(p.concat.rank == 1);
  CHECK(std::abs(p.vx(0, 0)) <= 1e-14);
  CHECK(std::abs(p.va(0, 0)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("partition_v: reconstruction identities hold") {
  DenseMatrix x = make({{2}, {0}});
  DenseMatrix a = DenseMatrix::Identity(2, 2);
  Partition p = partition_v(x, a);
  DenseMatrix us = p.concat.u * p.concat.sigma.asDiagonal();
  CHECK(testutil::approx_equal(us * p.vx.transpose(), x, 1e-10));
  CHECK(testutil::approx_equal(us * p.va.transpose(), a, 1e-10));
}

TEST_CASE("partition_v: va has full column rank on feasible instances") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<Index> dim(2, 16);
    const Index m = dim(rng), k = dim(rng), n = dim(rng);
    LrrInstance inst = random_feasible_lrr(rng, m, k, n, std::min(m, k) / 2 + 1);
    Partition p = partition_v(inst.data, inst.dict);
    CHECK(numerical_rank(p.va) == p.concat.rank);
    DenseMatrix us = p.concat.u * p.concat.sigma.asDiagonal();
    CHECK(testutil::approx_equal(us * p.vx.transpose(), inst.data, 1e-10));
    CHECK(testutil::approx_equal(us * p.va.transpose(), inst.dict, 1e-10));
  }
}

TEST_CASE("solve_lrr: identity dictionary forces Z = X") {
  DenseMatrix x = make({{3, 1}, {2, 5}});
  Solution s = solve_lrr(x, DenseMatrix::Identity(2, 2));
  CHECK(s.method_tag == Method::theorem1);
  CHECK(testutil::approx_equal(s.minimizer, x, 1e-10));
  CHECK(s.feasibility_residual <= Tolerances{}.feas_tol);
  CHECK(s.objective == doctest::Approx(nuclear_norm(x)).epsilon(1e-12));
}

TEST_CASE("solve_lrr: wide dictionary matches the feasible-line scan oracle") {
  // Constraint [1,1] z = 2 is the line z(t) = [2-t, t]; its nuclear norm
  // sqrt((2-t)^2 + t^2) is scanned by brute force first.
  double best_t = 0.0;
  double best_val = std::numeric_limits<double>::infinity();
  for (double t = -3.0; t <= 5.0; t += 1e-4) {
    const double val = std::sqrt((2.0 - t) * (2.0 - t) + t * t);
    if (val < best_val) {
      best_val = val;
      best_t = t;
    }
  }
  CHECK(best_t == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(best_val == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));

  Solution s = solve_lrr(make({{2}}), make({{1, 1}}));
  REQUIRE(s.minimizer.rows() == 2);
  CHECK(s.minimizer(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.minimizer(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.objective == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("solve_lrr: single-column dictionary is determined by the constraint") {
  Solution s = solve_lrr(make({{2}, {4}}), make({{1}, {2}}));
  REQUIRE(s.minimizer.rows() == 1);
  CHECK(s.minimizer(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("solve_lrr: zero data yields the zero minimizer") {
  Solution s = solve_lrr(DenseMatrix::Zero(2, 3), make({{1, 0}, {0, 1}}));
  CHECK(s.minimizer.rows() == 2);
  CHECK(s.minimizer.cols() == 3);
  CHECK(s.minimizer.isZero(0.0));
  CHECK(s.objective == 0.0);
}

TEST_CASE("solve_lrr: typed errors") {
  CHECK_THROWS_AS(solve_lrr(make({{1}, {2}}), DenseMatrix::Zero(2, 2)), ZeroDictionary);
  CHECK_THROWS_AS(solve_lrr(make({{0}, {1}}), make({{1}, {0}})), Infeasible);
  CHECK_THROWS_AS(solve_lrr(DenseMatrix::Zero(3, 1), DenseMatrix::Zero(2, 2)),
                  DimensionMismatch);
  // A dictionary below the caller's rank cutoff counts as numerically zero.
  Tolerances coarse;
  coarse.rank_tol_factor = 1.0;
  CHECK_THROWS_AS(solve_lrr(make({{0}, {0}}), make({{1e-300}, {0}}), coarse),
                  ZeroDictionary);
}

TEST_CASE("solve_lrr: feasible round trip with minimal objective") {
  std::mt19937_64 rng(13);
  Tolerances tol;
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<Index> dim(2, 20);
    const Index m = dim(rng), k = dim(rng), n = dim(rng);
    Index rank = std::min(m, k);
    if (trial % 3 == 2 && rank > 1) {
      rank = rank / 2 + (rank % 2);
    }
    LrrInstance inst = random_feasible_lrr(rng, m, k, n, rank);
    Solution s = solve_lrr(inst.data, inst.dict);
    CHECK((inst.dict * s.minimizer - inst.data).norm() <=
          tol.feas_tol * (1.0 + inst.data.norm()));
    CHECK(s.objective <= nuclear_norm(inst.coeff) + 1e-8);
    // Eq. (4) evaluates to the pseudo-inverse route.
    CHECK(relative_distance(s.minimizer, pseudo_inverse(inst.dict) * inst.data) <=
          1e-8);
  }
}

TEST_CASE("solve_lrr: null-space perturbations strictly increase the objective") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Index m = 6, k = 10, n = 5;
    LrrInstance inst = random_feasible_lrr(rng, m, k, n, 4);
    Solution s = solve_lrr(inst.data, inst.dict);
    for (int p = 0; p < 20; ++p) {
      auto pert = feasible_perturbation_lrr(inst.dict, k, n,
                                            1000 * trial + static_cast<std::uint64_t>(p));
      REQUIRE(pert.has_value());
      CHECK(nuclear_norm(s.minimizer + *pert) > s.objective);
    }
  }
}

TEST_CASE("solve_lrr_full_row_rank: examples") {
  DenseMatrix x = make({{1, 2}, {3, 4}, {5, 6}});
  Solution s = solve_lrr_full_row_rank(x, DenseMatrix::Identity(3, 3));
  CHECK(s.method_tag == Method::corollary1);
  CHECK(testutil::approx_equal(s.minimizer, x, 1e-12));

  Solution wide = solve_lrr_full_row_rank(make({{2}}), make({{1, 1}}));
  CHECK(wide.minimizer(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wide.minimizer(1, 0) == doctest::Approx(1.0).epsilon(1e-12));

  Solution diag = solve_lrr_full_row_rank(make({{2, 0}, {0, 8}}), make({{2, 0}, {0, 4}}));
  CHECK(testutil::approx_equal(diag.minimizer, make({{1, 0}, {0, 2}}), 1e-12));
}

TEST_CASE("solve_lrr_full_row_rank: rank precondition enforced") {
  CHECK_THROWS_AS(solve_lrr_full_row_rank(make({{2}, {4}}), make({{1}, {2}})),
                  NotFullRowRank);
}

TEST_CASE("solve_lrr agrees with corollary 1 on full-row-rank dictionaries") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<Index> dim(2, 12);
    const Index m = dim(rng);
    const Index k = m + dim(rng);
    const Index n = dim(rng);
    LrrInstance inst = random_feasible_lrr(rng, m, k, n, m);
    Solution general = solve_lrr(inst.data, inst.dict);
    Solution fast = solve_lrr_full_row_rank(inst.data, inst.dict);
    CHECK(relative_distance(general.minimizer, fast.minimizer) <= 1e-8);
  }
}

TEST_CASE("shape_interaction_matrix: examples") {
  DenseMatrix x = make({{1, 0}, {0, 0}});
  Solution s = shape_interaction_matrix(x);
  CHECK(s.method_tag == Method::corollary2);
  CHECK(testutil::approx_equal(s.minimizer, x, 1e-12));

  std::mt19937_64 rng(29);
  DenseMatrix full = random_matrix(rng, 4, 4);
  CHECK(testutil::approx_equal(shape_interaction_matrix(full).minimizer,
                               DenseMatrix::Identity(4, 4), 1e-10));

  Solution ones = shape_interaction_matrix(make({{1, 1}, {1, 1}}));
  CHECK(testutil::approx_equal(ones.minimizer, make({{0.5, 0.5}, {0.5, 0.5}}), 1e-12));

  CHECK_THROWS_AS(shape_interaction_matrix(DenseMatrix::Zero(2, 2)), ZeroDictionary);
}

TEST_CASE("shape_interaction_matrix: projector laws across rank profiles") {
  std::mt19937_64 rng(37);
  Tolerances tol;
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<Index> dim(2, 18);
    const Index m = dim(rng), n = dim(rng);
    std::uniform_int_distribution<Index> rank_dist(1, std::min(m, n));
    const Index r = trial % 2 == 0 ? std::min(m, n) : rank_dist(rng);
    DenseMatrix x = random_low_rank(rng, m, n, r);
    if (numerical_rank(x) == 0) {
      continue;
    }
    Solution s = shape_interaction_matrix(x);
    const DenseMatrix& z = s.minimizer;
    CHECK((z - z.transpose()).norm() <= 1e-9 * (1.0 + z.norm()));
    CHECK((z * z - z).norm() <= 1e-9 * (1.0 + z.norm()));
    CHECK(std::llround(z.trace()) == numerical_rank(x));
    CHECK((x * z - x).norm() <= 1e-8 * (1.0 + x.norm()));
    // Corollary 2 is Theorem 1 with A = X.
    Solution general = solve_lrr(x, x);
    CHECK(relative_distance(z, general.minimizer) <= 1e-8);
  }
}

TEST_CASE("solve_semiorthogonal: identity factors fix Z = M") {
  DenseMatrix m = make({{3, 1}, {4, 1}});
  Solution s = solve_semiorthogonal(DenseMatrix::Identity(2, 2),
                                    DenseMatrix::Identity(2, 2), m);
  CHECK(s.method_tag == Method::lemma3);
  CHECK(testutil::approx_equal(s.minimizer, m, 1e-12));
}

TEST_CASE("solve_semiorthogonal: embeds the scalar in the top-left corner") {
  DenseMatrix u = make({{1}, {0}});
  DenseMatrix v = make({{1}, {0}});
  Solution s = solve_semiorthogonal(u, v, make({{5}}));
  CHECK(testutil::approx_equal(s.minimizer, make({{5, 0}, {0, 0}}), 1e-12));
}

TEST_CASE("solve_semiorthogonal: objective equals the target nuclear norm") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<Index> inner(1, 6);
    const Index p = inner(rng), q = inner(rng);
    std::uniform_int_distribution<Index> outer_p(p, p + 8);
    std::uniform_int_distribution<Index> outer_q(q, q + 8);
    DenseMatrix u = random_semi_orthogonal(rng, outer_p(rng), p);
    DenseMatrix v = random_semi_orthogonal(rng, outer_q(rng), q);
    DenseMatrix m = random_matrix(rng, p, q);
    Solution s = solve_semiorthogonal(u, v, m);
    const double target = nuclear_norm(m);
    CHECK((u.transpose() * s.minimizer * v - m).norm() <= 1e-10 * (1.0 + m.norm()));
    CHECK(std::abs(s.objective - target) <= 1e-10 * (1.0 + target));
  }
}

TEST_CASE("solve_semiorthogonal: minimizer beats every feasible perturbation") {
  std::mt19937_64 rng(59);
  DenseMatrix u = random_semi_orthogonal(rng, 4, 2);
  DenseMatrix v = random_semi_orthogonal(rng, 3, 2);
  DenseMatrix m = random_matrix(rng, 2, 2);
  Solution s = solve_semiorthogonal(u, v, m);
  for (int p = 0; p < 100; ++p) {
    auto pert = feasible_perturbation_semiorthogonal(u, v, 4, 3,
                                                     static_cast<std::uint64_t>(p));
    REQUIRE(pert.has_value());
    CHECK((u.transpose() * *pert * v).norm() <= 1e-10);
    CHECK(nuclear_norm(s.minimizer + *pert) > s.objective);
  }
}

TEST_CASE("solve_semiorthogonal: typed errors") {
  CHECK_THROWS_AS(solve_semiorthogonal(make({{2, 0}, {0, 1}}),
                                       DenseMatrix::Identity(2, 2),
                                       DenseMatrix::Identity(2, 2)),
                  NotSemiOrthogonal);
  CHECK_THROWS_AS(solve_semiorthogonal(DenseMatrix::Identity(2, 2),
                                       DenseMatrix::Identity(2, 2),
                                       DenseMatrix::Zero(3, 2)),
                  DimensionMismatch);
}

TEST_CASE("solve_azb: identity B reduces to the one-sided problem") {
  std::mt19937_64 rng(61);
  LrrInstance inst = random_feasible_lrr(rng, 5, 7, 4, 3);
  Solution azb = solve_azb(inst.data, inst.dict, DenseMatrix::Identity(4, 4));
  Solution lrr = solve_lrr(inst.data, inst.dict);
  CHECK(azb.method_tag == Method::azb);
  CHECK(relative_distance(azb.minimizer, lrr.minimizer) <= 1e-10);
}

TEST_CASE("solve_azb: identity A and B fix Z = X") {
  DenseMatrix x = make({{1, 2}, {3, 4}});
  Solution s = solve_azb(x, DenseMatrix::Identity(2, 2), DenseMatrix::Identity(2, 2));
  CHECK(testutil::approx_equal(s.minimizer, x, 1e-12));
}

TEST_CASE("solve_azb: rank-one sandwich matches the ADMM oracle") {
  DenseMatrix a = make({{1, 1}});
  DenseMatrix b = make({{1}, {1}});
  DenseMatrix x = make({{4}});
  Solution s = solve_azb(x, a, b);
  CHECK(testutil::approx_equal(s.minimizer, make({{1, 1}, {1, 1}}), 1e-10));

  AdmmParams params;
  OracleReport oracle = admm_solve_azb(x, a, b, params, &s.minimizer);
  REQUIRE(oracle.distance_to_reference.has_value());
  CHECK(*oracle.distance_to_reference <= 1e-4);
}

TEST_CASE("solve_azb: equals the double pseudo-inverse formula") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<Index> dim(2, 10);
    const Index m = dim(rng), p = dim(rng), q = dim(rng), n = dim(rng);
    DenseMatrix a = random_low_rank(rng, m, p, std::min(m, p) / 2 + 1);
    DenseMatrix b = random_low_rank(rng, q, n, std::min(q, n) / 2 + 1);
    DenseMatrix z0 = random_matrix(rng, p, q);
    DenseMatrix x = a * z0 * b;
    if (x.isZero(0.0)) {
      continue;
    }
    Solution s = solve_azb(x, a, b);
    CHECK((a * s.minimizer * b - x).norm() <= 1e-8 * (1.0 + x.norm()));
    DenseMatrix candidate = pseudo_inverse(a) * x * pseudo_inverse(b);
    CHECK(relative_distance(s.minimizer, candidate) <= 1e-8);
  }
}

TEST_CASE("solve_azb: typed errors") {
  DenseMatrix x = make({{1}, {0}});
  CHECK_THROWS_AS(solve_azb(x, DenseMatrix::Zero(2, 2), DenseMatrix::Identity(1, 1)),
                  ZeroDictionary);
  CHECK_THROWS_AS(solve_azb(x, DenseMatrix::Identity(2, 2), DenseMatrix::Zero(1, 1)),
                  ZeroDictionary);
  CHECK_THROWS_AS(solve_azb(make({{0}, {1}}), make({{1}, {0}}), DenseMatrix::Identity(1, 1)),
                  Infeasible);
  CHECK_THROWS_AS(solve_azb(x, DenseMatrix::Identity(2, 2), DenseMatrix::Identity(2, 2)),
                  DimensionMismatch);
}
