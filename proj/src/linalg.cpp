#include "fgnsr/linalg.hpp"

#include "fgnsr/error.hpp"
#include "fgnsr/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fgnsr {

namespace {

void require_shape(Index rows, Index cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("DenseMatrix needs at least one row and column, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
}

constexpr std::uint64_t kPowerMethodSeed = 0x9e3779b97f4a7c15ULL;

}  // namespace

DenseMatrix::DenseMatrix(Index rows, Index cols) {
  require_shape(rows, cols);
  values_ = Eigen::MatrixXd::Zero(rows, cols);
}

DenseMatrix::DenseMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
  require_shape(values_.rows(), values_.cols());
  if (!values_.allFinite()) {
    throw std::invalid_argument("DenseMatrix entries must be finite");
  }
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const auto nrows = static_cast<Index>(rows.size());
  const auto ncols = nrows > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
  Eigen::MatrixXd v(nrows, ncols);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != ncols) {
      throw std::invalid_argument("ragged row list");
    }
    Index j = 0;
    for (double x : row) v(i, j++) = x;
    ++i;
  }
  return DenseMatrix(std::move(v));
}

DenseMatrix DenseMatrix::identity(Index n) {
  return DenseMatrix(Eigen::MatrixXd::Identity(n, n));
}

DenseMatrix DenseMatrix::select_columns(std::span<const Index> indices) const {
  Eigen::MatrixXd out(rows(), static_cast<Index>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const Index j = indices[k];
    if (j < 0 || j >= cols()) throw std::out_of_range("column index out of range");
    out.col(static_cast<Index>(k)) = values_.col(j);
  }
  return DenseMatrix(std::move(out));
}

ColumnWeights col_l1_norms(const DenseMatrix& m) {
  return ColumnWeights{m.values().cwiseAbs().colwise().sum().transpose()};
}

double frob_norm(const DenseMatrix& m) { return m.values().norm(); }

double spectral_norm_sq(const DenseMatrix& m, PowerMethodOptions opts) {
  const Eigen::MatrixXd& a = m.values();
  const double max_col_sq = a.colwise().squaredNorm().maxCoeff();
  if (max_col_sq == 0.0) throw SolverError("zero operator");

  Rng rng(kPowerMethodSeed);
  Eigen::VectorXd v(a.cols());
  for (Index j = 0; j < v.size(); ++j) v[j] = rng.uniform(-1.0, 1.0);
  v.normalize();

  double estimate = 0.0;
  for (int it = 0; it < opts.max_iters; ++it) {
    const Eigen::VectorXd u = a * v;
    const double rq = u.squaredNorm();
    Eigen::VectorXd next = a.transpose() * u;
    const double nn = next.norm();
    if (nn == 0.0) break;  // start vector in the null space
    v = next / nn;
    // Successive quotients can agree well before the estimate is within tol
    // when the top two singular values are close; stop an order earlier.
    const bool converged = it > 0 && std::abs(rq - estimate) < 0.1 * opts.tol * rq;
    estimate = rq;
    if (converged) break;
  }
  return std::max(estimate, max_col_sq);
}

NnlsResult nnls_cd(const Eigen::MatrixXd& w, const Eigen::MatrixXd& m,
                   NnlsOptions opts) {
  if (w.rows() != m.rows()) {
    throw std::invalid_argument("nnls_cd: W has " + std::to_string(w.rows()) +
                                " rows but M has " + std::to_string(m.rows()));
  }
  if (w.cols() < 1) throw std::invalid_argument("nnls_cd: W needs at least one column");

  const Index r = w.cols();
  NnlsResult out;
  out.h = Eigen::MatrixXd::Zero(r, m.cols());
  out.residual = m;
  const Eigen::VectorXd col_sq = w.colwise().squaredNorm();

  double obj = out.residual.squaredNorm();
  out.objective.push_back(obj);
  Eigen::RowVectorXd updated(m.cols());
  for (int s = 0; s < opts.sweeps; ++s) {
    for (Index k = 0; k < r; ++k) {
      if (col_sq[k] == 0.0) continue;
      updated = (out.h.row(k) + (w.col(k).transpose() * out.residual) / col_sq[k])
                    .cwiseMax(0.0);
      const Eigen::RowVectorXd delta = updated - out.h.row(k);
      out.residual.noalias() -= w.col(k) * delta;
      out.h.row(k) = updated;
    }
    const double prev = obj;
    obj = out.residual.squaredNorm();
    out.objective.push_back(obj);
    out.sweeps_run = s + 1;
    if (obj == 0.0) break;
    if (opts.rel_tol > 0.0 && prev - obj < opts.rel_tol * prev) break;
  }
  return out;
}

DenseMatrix nnls_cd(const DenseMatrix& w, const DenseMatrix& m, int sweeps) {
  return DenseMatrix(
      nnls_cd(w.values(), m.values(), NnlsOptions{sweeps, 0.0}).h);
}

}  // namespace fgnsr
