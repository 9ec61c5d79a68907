#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library code paths being checked.

#include "fgnsr/linalg.hpp"
#include "fgnsr/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace fgnsr::testing {

inline Eigen::MatrixXd random_matrix(Rng& rng, Index rows, Index cols, double lo = 0.0,
                                     double hi = 1.0) {
  Eigen::MatrixXd a(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) a(i, j) = rng.uniform(lo, hi);
  }
  return a;
}

inline std::vector<double> naive_col_l1(const Eigen::MatrixXd& a) {
  std::vector<double> out(static_cast<std::size_t>(a.cols()), 0.0);
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) out[static_cast<std::size_t>(j)] += std::abs(a(i, j));
  }
  return out;
}

inline double naive_frob(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  }
  return std::sqrt(s);
}

inline double eig_max_gram(const Eigen::MatrixXd& a) {
  const Eigen::MatrixXd g = a.transpose() * a;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues().maxCoeff();
}

// F(X) = 1/2 ||M - M X||_F^2 + mu p^T diag(X), evaluated with explicit loops.
inline double naive_objective(const Eigen::MatrixXd& m, const Eigen::MatrixXd& x, double mu,
                              const Eigen::VectorXd& p) {
  double s = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      double mx = 0.0;
      for (Index k = 0; k < m.cols(); ++k) mx += m(i, k) * x(k, j);
      s += (m(i, j) - mx) * (m(i, j) - mx);
    }
  }
  double pen = 0.0;
  for (Index i = 0; i < m.cols(); ++i) pen += p[i] * x(i, i);
  return 0.5 * s + mu * pen;
}

inline Eigen::MatrixXd finite_difference_gradient(const Eigen::MatrixXd& m,
                                                  const Eigen::MatrixXd& x, double mu,
                                                  const Eigen::VectorXd& p, double h = 1e-5) {
  Eigen::MatrixXd g(x.rows(), x.cols());
  Eigen::MatrixXd probe = x;
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index j = 0; j < x.cols(); ++j) {
      probe(i, j) = x(i, j) + h;
      const double up = naive_objective(m, probe, mu, p);
      probe(i, j) = x(i, j) - h;
      const double down = naive_objective(m, probe, mu, p);
      probe(i, j) = x(i, j);
      g(i, j) = (up - down) / (2.0 * h);
    }
  }
  return g;
}

// Classical Gram-Schmidt greedy row selection, recomputing every residual
// from scratch against the orthonormal basis of the rows picked so far.
inline IndexList naive_row_spa(const Eigen::MatrixXd& x, Index r) {
  std::vector<Eigen::VectorXd> basis;
  IndexList picked;
  for (Index step = 0; step < r; ++step) {
    Index best = -1;
    double best_norm = -1.0;
    Eigen::VectorXd best_res;
    for (Index i = 0; i < x.rows(); ++i) {
      if (std::find(picked.begin(), picked.end(), i) != picked.end()) continue;
      Eigen::VectorXd res = x.row(i).transpose();
      for (const auto& q : basis) res -= q.dot(x.row(i).transpose()) * q;
      const double nrm = res.norm();
      if (nrm > best_norm) {
        best = i;
        best_norm = nrm;
        best_res = res;
      }
    }
    picked.push_back(best);
    basis.push_back(best_res / best_norm);
  }
  return picked;
}

// Minimum assignment cost by trying every permutation (small r only).
inline double exhaustive_assignment_cost(const Eigen::MatrixXd& cost) {
  std::vector<Index> perm(static_cast<std::size_t>(cost.rows()));
  std::iota(perm.begin(), perm.end(), Index{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (Index i = 0; i < cost.rows(); ++i) s += cost(i, perm[static_cast<std::size_t>(i)]);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Per-cluster column means with explicit accumulation.
inline Eigen::MatrixXd naive_cluster_means(const Eigen::MatrixXd& m,
                                           const std::vector<Index>& labels, Index clusters) {
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(m.rows(), clusters);
  std::vector<double> counts(static_cast<std::size_t>(clusters), 0.0);
  for (Index j = 0; j < m.cols(); ++j) {
    const Index k = labels[static_cast<std::size_t>(j)];
    for (Index i = 0; i < m.rows(); ++i) sums(i, k) += m(i, j);
    counts[static_cast<std::size_t>(k)] += 1.0;
  }
  for (Index k = 0; k < clusters; ++k) sums.col(k) /= counts[static_cast<std::size_t>(k)];
  return sums;
}

}  // namespace fgnsr::testing
