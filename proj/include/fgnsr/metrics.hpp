#pragma once

#include "fgnsr/linalg.hpp"

#include <span>

namespace fgnsr {

struct EvalReport {
  double mrsa_mean = 0.0;      // [0, 100], 0 is a perfect match
  double rel_measure = 0.0;    // [0, 1], 1 is exact
  double rel_error_pct = 0.0;  // >= 0
  double index_recovery = 0.0; // [0, 1]
};

/// Mean-removed spectral angle of one column pair, scaled to [0, 100].
/// Constant columns score 100 against anything but another constant column.
double mrsa_pair(const Eigen::Ref<const Eigen::VectorXd>& a,
                 const Eigen::Ref<const Eigen::VectorXd>& b);

/// Mean pair MRSA under the column matching that minimizes the total.
double mrsa(const DenseMatrix& w_est, const DenseMatrix& w_true);

/// Minimum-cost perfect matching on a square cost matrix (Hungarian method).
/// Returns assignment[i] = column matched to row i.
IndexList min_cost_assignment(const Eigen::MatrixXd& cost);

/// Sweep budget for the NNLS fits behind the residual-based measures.
inline constexpr int kMetricSweeps = 1000;
inline constexpr double kMetricTol = 1e-10;

/// 1 - min_{H>=0} ||M - M(:,K) H||_F / ||M||_F, clamped to [0, 1].
double rel_approx_measure(const DenseMatrix& m, std::span<const Index> k,
                          int sweeps = kMetricSweeps);

/// 100 min_{H>=0} ||M - M(:,K) H||_F / ||M||_F.
double rel_error_pct(const DenseMatrix& m, std::span<const Index> k,
                     int sweeps = kMetricSweeps);

/// |K_est intersect K_true| / |K_true|.
double index_recovery(std::span<const Index> k_est, std::span<const Index> k_true);

}  // namespace fgnsr
