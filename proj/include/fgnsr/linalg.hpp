#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <span>
#include <vector>

namespace fgnsr {

using Index = Eigen::Index;
using IndexList = std::vector<Index>;

// Column-major real matrix with at least one row and one column and only
// finite entries. Columns are data points throughout the library.
class DenseMatrix {
 public:
  DenseMatrix(Index rows, Index cols);
  explicit DenseMatrix(Eigen::MatrixXd values);

  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix identity(Index n);

  Index rows() const noexcept { return values_.rows(); }
  Index cols() const noexcept { return values_.cols(); }
  double operator()(Index i, Index j) const { return values_(i, j); }

  const Eigen::MatrixXd& values() const noexcept { return values_; }
  auto col(Index j) const { return values_.col(j); }

  DenseMatrix select_columns(std::span<const Index> indices) const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.values_.rows() == b.values_.rows() &&
           a.values_.cols() == b.values_.cols() && a.values_ == b.values_;
  }

 private:
  Eigen::MatrixXd values_;
};

// w_j = ||M(:,j)||_1. Zero entries mark degenerate columns.
struct ColumnWeights {
  Eigen::VectorXd values;

  Index size() const noexcept { return values.size(); }
  bool is_degenerate(Index j) const { return values[j] == 0.0; }
  std::span<const double> span() const {
    return {values.data(), static_cast<std::size_t>(values.size())};
  }
};

ColumnWeights col_l1_norms(const DenseMatrix& m);

double frob_norm(const DenseMatrix& m);

struct PowerMethodOptions {
  double tol = 1e-6;
  int max_iters = 100;
};

/// Estimate of lambda_max(M^T M) = sigma_max(M)^2 by power iteration from a
/// fixed pseudo-random start vector. The result is a lower bound on the true
/// value and is never below the largest squared column norm.
/// Throws SolverError("zero operator") when M = 0.
double spectral_norm_sq(const DenseMatrix& m, PowerMethodOptions opts = {});

struct NnlsOptions {
  int sweeps = 100;
  /// Stop once a sweep lowers the objective by less than this fraction.
  /// Zero disables early exit.
  double rel_tol = 1e-10;
};

struct NnlsResult {
  Eigen::MatrixXd h;          // r x n, entrywise >= 0
  Eigen::MatrixXd residual;   // M - W H
  std::vector<double> objective;  // ||M - WH||_F^2 before sweep 1, after each sweep
  int sweeps_run = 0;
};

/// Coordinate-descent NNLS: min_{H >= 0} ||M - W H||_F^2, cycling over the
/// rows of H with the closed-form clamped update. Starts at H = 0.
NnlsResult nnls_cd(const Eigen::MatrixXd& w, const Eigen::MatrixXd& m,
                   NnlsOptions opts);

/// Fixed number of sweeps without early exit.
DenseMatrix nnls_cd(const DenseMatrix& w, const DenseMatrix& m, int sweeps);

}  // namespace fgnsr
