#include "fgnsr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

namespace fgnsr {

double mrsa_pair(const Eigen::Ref<const Eigen::VectorXd>& a,
                 const Eigen::Ref<const Eigen::VectorXd>& b) {
  const Eigen::VectorXd ca = a.array() - a.mean();
  const Eigen::VectorXd cb = b.array() - b.mean();
  const double na = ca.norm();
  const double nb = cb.norm();
  if (na == 0.0 || nb == 0.0) return (na == 0.0 && nb == 0.0) ? 0.0 : 100.0;
  // Angle between unit vectors as 2 atan2(|u - v|, |u + v|); unlike acos of
  // the cosine this stays exact at 0 and pi.
  const Eigen::VectorXd u = ca / na;
  const Eigen::VectorXd v = cb / nb;
  const double angle = 2.0 * std::atan2((u - v).norm(), (u + v).norm());
  return 100.0 / std::numbers::pi * angle;
}

IndexList min_cost_assignment(const Eigen::MatrixXd& cost) {
  const Index n = cost.rows();
  if (cost.cols() != n) throw std::invalid_argument("assignment cost must be square");
  // Potentials formulation, 1-based with a virtual column 0.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n + 1), 0.0), v(u.size(), 0.0);
  std::vector<Index> owner(u.size(), 0), way(u.size(), 0);
  for (Index i = 1; i <= n; ++i) {
    owner[0] = i;
    Index j0 = 0;
    std::vector<double> minv(u.size(), inf);
    std::vector<bool> used(u.size(), false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const Index i0 = owner[static_cast<std::size_t>(j0)];
      double delta = inf;
      Index j1 = 0;
      for (Index j = 1; j <= n; ++j) {
        const auto js = static_cast<std::size_t>(j);
        if (used[js]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[js];
        if (cur < minv[js]) {
          minv[js] = cur;
          way[js] = j0;
        }
        if (minv[js] < delta) {
          delta = minv[js];
          j1 = j;
        }
      }
      for (Index j = 0; j <= n; ++j) {
        const auto js = static_cast<std::size_t>(j);
        if (used[js]) {
          u[static_cast<std::size_t>(owner[js])] += delta;
          v[js] -= delta;
        } else {
          minv[js] -= delta;
        }
      }
      j0 = j1;
    } while (owner[static_cast<std::size_t>(j0)] != 0);
    do {
      const Index j1 = way[static_cast<std::size_t>(j0)];
      owner[static_cast<std::size_t>(j0)] = owner[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  IndexList assignment(static_cast<std::size_t>(n));
  for (Index j = 1; j <= n; ++j) {
    assignment[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)] - 1)] = j - 1;
  }
  return assignment;
}

double mrsa(const DenseMatrix& w_est, const DenseMatrix& w_true) {
  if (w_est.rows() != w_true.rows() || w_est.cols() != w_true.cols()) {
    throw std::invalid_argument("mrsa: shape mismatch");
  }
  const Index r = w_true.cols();
  Eigen::MatrixXd cost(r, r);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) cost(i, j) = mrsa_pair(w_est.col(i), w_true.col(j));
  }
  const IndexList match = min_cost_assignment(cost);
  double total = 0.0;
  for (Index i = 0; i < r; ++i) total += cost(i, match[static_cast<std::size_t>(i)]);
  return total / static_cast<double>(r);
}

namespace {

double relative_residual(const DenseMatrix& m, std::span<const Index> k, int sweeps) {
  if (k.empty()) throw std::invalid_argument("index set must be nonempty");
  const double norm = m.values().norm();
  if (norm == 0.0) return 0.0;
  const DenseMatrix basis = m.select_columns(k);
  const NnlsResult fit =
      nnls_cd(basis.values(), m.values(), NnlsOptions{sweeps, kMetricTol});
  return fit.residual.norm() / norm;
}

}  // namespace

double rel_approx_measure(const DenseMatrix& m, std::span<const Index> k, int sweeps) {
  return std::clamp(1.0 - relative_residual(m, k, sweeps), 0.0, 1.0);
}

double rel_error_pct(const DenseMatrix& m, std::span<const Index> k, int sweeps) {
  return 100.0 * relative_residual(m, k, sweeps);
}

double index_recovery(std::span<const Index> k_est, std::span<const Index> k_true) {
  if (k_true.empty()) throw std::invalid_argument("index_recovery: empty reference set");
  if (k_est.size() != k_true.size()) {
    throw std::invalid_argument("index_recovery: index sets differ in length");
  }
  const std::set<Index> truth(k_true.begin(), k_true.end());
  const std::set<Index> est(k_est.begin(), k_est.end());
  std::size_t hits = 0;
  for (Index j : est) hits += truth.count(j);
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

}  // namespace fgnsr
