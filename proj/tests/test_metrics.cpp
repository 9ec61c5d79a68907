#include "fgnsr/metrics.hpp"
#include "fgnsr/synthgen.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace fgnsr;
using fgnsr::testing::random_matrix;

TEST_CASE("mrsa_pair") {
  const Eigen::VectorXd a = (Eigen::VectorXd(4) << 1, 3, 2, 5).finished();
  CHECK(mrsa_pair(a, a) == 0.0);

  const Eigen::VectorXd shifted = 2.0 * a + Eigen::VectorXd::Constant(4, 7.0);
  CHECK(mrsa_pair(shifted, a) <= 1e-10);

  // Mean-removed vectors (1,-1,0,0) and (0,0,1,-1) are orthogonal.
  const Eigen::VectorXd u = (Eigen::VectorXd(4) << 1, -1, 0, 0).finished();
  const Eigen::VectorXd v = (Eigen::VectorXd(4) << 0, 0, 1, -1).finished();
  CHECK(mrsa_pair(u, v) == doctest::Approx(50.0).epsilon(1e-12));
  CHECK(mrsa_pair(u, -u) == doctest::Approx(100.0).epsilon(1e-12));

  const Eigen::VectorXd flat = Eigen::VectorXd::Constant(4, 3.0);
  CHECK(mrsa_pair(flat, a) == 100.0);
  CHECK(mrsa_pair(flat, Eigen::VectorXd::Constant(4, -1.0)) == 0.0);
}

TEST_CASE("mrsa uses the best column matching") {
  Rng rng(401);
  const Eigen::MatrixXd w = random_matrix(rng, 20, 5);
  Eigen::MatrixXd shuffled(20, 5);
  const auto perm = rng.permutation(5);
  for (Index j = 0; j < 5; ++j) shuffled.col(j) = w.col(perm[static_cast<std::size_t>(j)]);
  CHECK(mrsa(DenseMatrix(shuffled), DenseMatrix(w)) <= 1e-6);
  CHECK_THROWS_AS(mrsa(DenseMatrix(w), DenseMatrix(random_matrix(rng, 20, 4))),
                  std::invalid_argument);
}

TEST_CASE("Hungarian assignment matches exhaustive search") {
  Rng rng(402);
  for (int t = 0; t < 200; ++t) {
    const Index r = 1 + static_cast<Index>(rng.below(7));
    const Eigen::MatrixXd cost = random_matrix(rng, r, r, 0.0, 100.0);
    const IndexList a = min_cost_assignment(cost);
    std::vector<bool> used(static_cast<std::size_t>(r), false);
    double total = 0.0;
    for (Index i = 0; i < r; ++i) {
      const Index j = a[static_cast<std::size_t>(i)];
      CHECK_FALSE(used[static_cast<std::size_t>(j)]);
      used[static_cast<std::size_t>(j)] = true;
      total += cost(i, j);
    }
    CHECK(total == doctest::Approx(fgnsr::testing::exhaustive_assignment_cost(cost)).epsilon(1e-12));
  }
}

TEST_CASE("mrsa against an exhaustive oracle") {
  Rng rng(403);
  for (int t = 0; t < 30; ++t) {
    const Eigen::MatrixXd a = random_matrix(rng, 12, 5);
    const Eigen::MatrixXd b = random_matrix(rng, 12, 5);
    Eigen::MatrixXd cost(5, 5);
    for (Index i = 0; i < 5; ++i) {
      for (Index j = 0; j < 5; ++j) cost(i, j) = mrsa_pair(a.col(i), b.col(j));
    }
    const double want = fgnsr::testing::exhaustive_assignment_cost(cost) / 5.0;
    CHECK(mrsa(DenseMatrix(a), DenseMatrix(b)) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("relative approximation measures") {
  const auto inst = gen_middlepoint(30, 6, 0.0, 2);
  CHECK(rel_approx_measure(inst.m, inst.k_true) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rel_error_pct(inst.m, inst.k_true) <= 1e-4);
  CHECK(rel_approx_measure(inst.m, inst.k_true, 0) == 0.0);
  CHECK(rel_error_pct(inst.m, inst.k_true, 0) == doctest::Approx(100.0));

  Rng rng(404);
  const DenseMatrix m(random_matrix(rng, 12, 8));
  IndexList all(8);
  std::iota(all.begin(), all.end(), Index{0});
  CHECK(std::abs(rel_approx_measure(m, all) - 1.0) <= 1e-8);

  const IndexList one{0};
  const DenseMatrix rank2 = DenseMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  CHECK(rel_error_pct(rank2, one) > 0.0);
  CHECK(std::abs(rel_error_pct(m, one) - 100.0 * (1.0 - rel_approx_measure(m, one))) <= 1e-10);
  CHECK_THROWS_AS(rel_error_pct(m, IndexList{}), std::invalid_argument);
  CHECK_THROWS_AS(rel_error_pct(m, IndexList{8}), std::out_of_range);
}

TEST_CASE("adding columns never lowers the measure") {
  Rng rng(405);
  const DenseMatrix m(random_matrix(rng, 10, 12));
  IndexList k;
  double prev = 0.0;
  for (Index j = 0; j < 12; ++j) {
    k.push_back(j);
    const double cur = rel_approx_measure(m, k);
    CHECK(cur >= prev - 1e-9);
    prev = cur;
  }
}

TEST_CASE("index_recovery") {
  CHECK(index_recovery(IndexList{1, 2, 3}, IndexList{3, 1, 2}) == 1.0);
  CHECK(index_recovery(IndexList{4, 5}, IndexList{1, 2}) == 0.0);
  CHECK(index_recovery(IndexList{0, 1, 2, 3, 4, 10, 11, 12, 13, 14},
                       IndexList{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}) == 0.5);
  CHECK_THROWS_AS(index_recovery(IndexList{}, IndexList{}), std::invalid_argument);
  CHECK_THROWS_AS(index_recovery(IndexList{1}, IndexList{1, 2}), std::invalid_argument);
}
