#pragma once

#include "fgnsr/linalg.hpp"

namespace fgnsr {

struct GreedySelection {
  IndexList indices;                 // selection order
  std::vector<double> pick_norms;    // residual 2-norm of each picked column
  std::vector<double> residual_norms;  // ||R||_F after each step
};

/// Successive projection algorithm. Throws SolverError("rank exhausted") if
/// every residual column vanishes before r picks.
GreedySelection spa(const DenseMatrix& m, Index r);

/// SPA variant returning early instead of throwing; `exhausted` reports
/// whether fewer than r columns were found.
struct PartialSelection {
  GreedySelection selection;
  bool exhausted = false;
};
PartialSelection spa_partial(const Eigen::MatrixXd& m, Index r);

/// Successive nonnegative projection: the residual after each pick is the
/// NNLS residual of M on the cone of the selected columns.
GreedySelection snpa(const DenseMatrix& m, Index r);

/// XRAY, "max" selection. Requires M >= 0.
GreedySelection xray_max(const DenseMatrix& m, Index r);

/// Sweeps per NNLS refit inside SNPA and XRAY.
inline constexpr int kRefitSweeps = 100;

/// Divides every nonzero column by its l1 norm.
DenseMatrix normalize_columns_l1(const DenseMatrix& m);

}  // namespace fgnsr
