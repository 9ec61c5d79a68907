#include "fgnsr/baselines.hpp"

#include "fgnsr/error.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fgnsr {

namespace {

// Relative size below which a residual column counts as zero.
constexpr double kExhaustedTol = 1e-12;

void check_rank_request(const DenseMatrix& m, Index r) {
  if (r < 1 || r > m.cols()) {
    throw std::invalid_argument("r must lie in [1, " + std::to_string(m.cols()) +
                                "], got " + std::to_string(r));
  }
}

// argmax of v over entries not yet taken; ties to the lower index.
Index argmax_untaken(const Eigen::VectorXd& v, const std::vector<bool>& taken) {
  Index best = -1;
  for (Index j = 0; j < v.size(); ++j) {
    if (taken[static_cast<std::size_t>(j)]) continue;
    if (best < 0 || v[j] > v[best]) best = j;
  }
  return best;
}

Eigen::MatrixXd nnls_residual(const Eigen::MatrixXd& m, const IndexList& k) {
  Eigen::MatrixXd basis(m.rows(), static_cast<Index>(k.size()));
  for (std::size_t i = 0; i < k.size(); ++i) basis.col(static_cast<Index>(i)) = m.col(k[i]);
  return nnls_cd(basis, m, NnlsOptions{kRefitSweeps, 1e-10}).residual;
}

}  // namespace

PartialSelection spa_partial(const Eigen::MatrixXd& m, Index r) {
  PartialSelection out;
  Eigen::MatrixXd res = m;
  std::vector<bool> taken(static_cast<std::size_t>(m.cols()), false);
  Eigen::VectorXd norms_sq = res.colwise().squaredNorm().transpose();
  const double floor = kExhaustedTol * kExhaustedTol * norms_sq.maxCoeff();
  for (Index step = 0; step < r; ++step) {
    const Index j = argmax_untaken(norms_sq, taken);
    if (j < 0 || norms_sq[j] <= floor || norms_sq[j] == 0.0) {
      out.exhausted = true;
      break;
    }
    const double pick = std::sqrt(norms_sq[j]);
    const Eigen::VectorXd u = res.col(j) / pick;
    res -= u * (u.transpose() * res);
    taken[static_cast<std::size_t>(j)] = true;
    norms_sq = res.colwise().squaredNorm().transpose();
    out.selection.indices.push_back(j);
    out.selection.pick_norms.push_back(pick);
    out.selection.residual_norms.push_back(res.norm());
  }
  return out;
}

GreedySelection spa(const DenseMatrix& m, Index r) {
  check_rank_request(m, r);
  auto partial = spa_partial(m.values(), r);
  if (partial.exhausted) throw SolverError("rank exhausted");
  return std::move(partial.selection);
}

GreedySelection snpa(const DenseMatrix& m, Index r) {
  check_rank_request(m, r);
  const Eigen::MatrixXd& a = m.values();
  GreedySelection out;
  std::vector<bool> taken(static_cast<std::size_t>(a.cols()), false);
  Eigen::MatrixXd res = a;
  const double floor = kExhaustedTol * a.colwise().norm().maxCoeff();
  for (Index step = 0; step < r; ++step) {
    const Eigen::VectorXd norms = res.colwise().norm().transpose();
    const Index j = argmax_untaken(norms, taken);
    if (j < 0 || norms[j] <= floor) throw SolverError("rank exhausted");
    taken[static_cast<std::size_t>(j)] = true;
    out.indices.push_back(j);
    out.pick_norms.push_back(norms[j]);
    res = nnls_residual(a, out.indices);
    out.residual_norms.push_back(res.norm());
  }
  return out;
}

GreedySelection xray_max(const DenseMatrix& m, Index r) {
  check_rank_request(m, r);
  const Eigen::MatrixXd& a = m.values();
  if ((a.array() < 0.0).any()) {
    throw std::invalid_argument("XRAY requires nonnegative input");
  }
  // p = all-ones, so p^T M(:,j) is the column sum.
  const Eigen::VectorXd mass = a.colwise().sum().transpose();
  GreedySelection out;
  std::vector<bool> taken(static_cast<std::size_t>(a.cols()), false);
  Eigen::MatrixXd res = a;
  const double floor = kExhaustedTol * a.colwise().norm().maxCoeff();
  for (Index step = 0; step < r; ++step) {
    const Eigen::VectorXd norms = res.colwise().norm().transpose();
    Index anchor = 0;
    norms.maxCoeff(&anchor);  // first maximum, i.e. lowest index on ties
    if (norms[anchor] <= floor) throw SolverError("rank exhausted");

    const Eigen::VectorXd score = a.transpose() * res.col(anchor);
    Index best = -1;
    double best_score = 0.0;
    for (Index j = 0; j < a.cols(); ++j) {
      if (taken[static_cast<std::size_t>(j)] || mass[j] <= 0.0) continue;
      const double s = score[j] / mass[j];
      if (best < 0 || s > best_score) {
        best = j;
        best_score = s;
      }
    }
    if (best < 0) throw SolverError("rank exhausted");
    taken[static_cast<std::size_t>(best)] = true;
    out.indices.push_back(best);
    out.pick_norms.push_back(norms[anchor]);
    res = nnls_residual(a, out.indices);
    out.residual_norms.push_back(res.norm());
  }
  return out;
}

DenseMatrix normalize_columns_l1(const DenseMatrix& m) {
  Eigen::MatrixXd out = m.values();
  const ColumnWeights w = col_l1_norms(m);
  for (Index j = 0; j < out.cols(); ++j) {
    if (w.values[j] > 0.0) out.col(j) /= w.values[j];
  }
  return DenseMatrix(std::move(out));
}

}  // namespace fgnsr
