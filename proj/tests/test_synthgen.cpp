#include "fgnsr/synthgen.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fgnsr;

namespace {

// Position of every non-vertex column in the noiseless weights: a pair (a, b)
// of vertices with weight 1/2 each, or nothing for a vertex column.
bool is_pair_midpoint(const Eigen::VectorXd& h) {
  int halves = 0;
  for (Index i = 0; i < h.size(); ++i) {
    if (h[i] == 0.5) {
      ++halves;
    } else if (h[i] != 0.0) {
      return false;
    }
  }
  return halves == 2;
}

}  // namespace

TEST_CASE("middle-point instance shape") {
  CHECK(middlepoint_cols(3) == 6);
  CHECK(middlepoint_cols(10) == 55);
  const auto inst = gen_middlepoint(50, 10, 0.1, 5);
  CHECK(inst.m.rows() == 50);
  CHECK(inst.m.cols() == 55);
  CHECK(inst.w_true.cols() == 10);
  CHECK(inst.h_true.rows() == 10);
  CHECK(inst.h_true.cols() == 55);
  CHECK(inst.k_true.size() == 10);
}

TEST_CASE("noiseless midpoints") {
  const auto inst = gen_middlepoint(7, 3, 0.0, 11);
  const Eigen::MatrixXd& w = inst.w_true.values();
  for (Index i = 0; i < 3; ++i) {
    CHECK(w.col(i).minCoeff() >= 0.0);
    CHECK(w.col(i).sum() == doctest::Approx(1.0).epsilon(1e-14));
  }
  int vertices = 0;
  int midpoints = 0;
  for (Index j = 0; j < 6; ++j) {
    const Eigen::VectorXd h = inst.h_true.values().col(j);
    if (is_pair_midpoint(h)) {
      ++midpoints;
    } else {
      ++vertices;
    }
    CHECK((inst.m.values().col(j) - w * h).norm() <= 1e-15);
  }
  CHECK(vertices == 3);
  CHECK(midpoints == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(inst.m.values().col(inst.k_true[i]) == w.col(static_cast<Index>(i)));
  }
}

TEST_CASE("noise has the requested norm and spares the vertices") {
  for (const double eps : {0.01, 0.3, 2.0}) {
    const auto inst = gen_middlepoint(20, 5, eps, 3);
    const Eigen::MatrixXd noise = inst.m.values() - inst.w_true.values() * inst.h_true.values();
    CHECK(noise.norm() == doctest::Approx(eps).epsilon(1e-12));
    CHECK(inst.eps == eps);
    for (const Index k : inst.k_true) CHECK(noise.col(k).norm() <= 1e-15);
  }
}

TEST_CASE("noise points midpoints away from the vertex centroid") {
  const auto inst = gen_middlepoint(20, 5, 0.5, 8);
  const Eigen::MatrixXd& w = inst.w_true.values();
  const Eigen::VectorXd centroid = w.rowwise().mean();
  for (Index j = 0; j < inst.m.cols(); ++j) {
    const Eigen::VectorXd clean = w * inst.h_true.values().col(j);
    const Eigen::VectorXd noise = inst.m.values().col(j) - clean;
    if (noise.norm() == 0.0) continue;
    CHECK(noise.dot(clean - centroid) > 0.0);
    CHECK(noise.normalized().dot((clean - centroid).normalized()) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("generation is deterministic") {
  const auto a = gen_scaled_middlepoint(30, 6, 0.2, 4.0, 77);
  const auto b = gen_scaled_middlepoint(30, 6, 0.2, 4.0, 77);
  const auto c = gen_scaled_middlepoint(30, 6, 0.2, 4.0, 78);
  CHECK(a.m == b.m);
  CHECK(a.k_true == b.k_true);
  CHECK_FALSE(a.m == c.m);
}

TEST_CASE("alpha = 1 reproduces the unscaled generator") {
  const auto a = gen_middlepoint(25, 6, 0.1, 5);
  const auto b = gen_scaled_middlepoint(25, 6, 0.1, 1.0, 5);
  CHECK(a.m == b.m);
  CHECK(a.k_true == b.k_true);
  CHECK(a.h_true == b.h_true);
}

TEST_CASE("scaled midpoints stay within the requested range") {
  const auto inst = gen_scaled_middlepoint(50, 10, 0.0, 4.0, 13);
  const Eigen::MatrixXd& h = inst.h_true.values();
  bool some_scaled = false;
  for (Index j = 0; j < h.cols(); ++j) {
    if (std::find(inst.k_true.begin(), inst.k_true.end(), j) != inst.k_true.end()) {
      CHECK(h.col(j).sum() == 1.0);
      continue;
    }
    const double s = h.col(j).sum();
    CHECK(s >= 0.25);
    CHECK(s <= 4.0);
    some_scaled = some_scaled || std::abs(s - 1.0) > 1e-3;
  }
  CHECK(some_scaled);
}

TEST_CASE("generator argument checks") {
  CHECK_THROWS_AS(gen_middlepoint(10, 1, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_middlepoint(10, 3, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_middlepoint(0, 3, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_scaled_middlepoint(10, 3, 0.0, 0.5, 1), std::invalid_argument);
}
