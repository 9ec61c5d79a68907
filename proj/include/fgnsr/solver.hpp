#pragma once

#include "fgnsr/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace fgnsr {

// Accelerated projected gradient for
//
//   min_{X in Omega} F(X) = 1/2 ||M - M X||_F^2 + mu p^T diag(X)
//
// followed by a postprocessing step that turns X into r column indices.

enum class MuMode {
  fixed,      // use SolverConfig::mu as given
  heuristic,  // balance both terms of F at an SPA-based starting point
  dynamic,    // start from the heuristic, then steer ||M - MY||_F toward eps_target
};

enum class Postprocess {
  topdiag,   // r largest diagonal entries
  spa_rows,  // successive projection on the rows of X
};

struct DynamicMuSchedule {
  int period = 50;
  double gamma_up = 2.0;
  double gamma_down = 0.5;
  double decay = 0.8;  // gamma <- gamma^decay after each adjustment
};

struct SolverConfig {
  Index r = 1;
  std::optional<Eigen::VectorXd> p;  // defaults to default_p(n, p_seed)
  std::uint64_t p_seed = 20160301;
  double mu = 0.0;
  MuMode mu_mode = MuMode::heuristic;
  double eps_target = 0.0;
  DynamicMuSchedule schedule;
  int maxiter = 1000;
  std::optional<Eigen::MatrixXd> warm_start;
  bool warm_start_from_heuristic = false;
  bool objective_trace = false;
  bool early_exit = false;
  double early_exit_tol = 1e-9;
  Postprocess postprocess = Postprocess::topdiag;
  PowerMethodOptions power;
  /// Called with (k, Y_k) after every projection.
  std::function<void(int, const Eigen::MatrixXd&)> on_iterate;
};

struct ExtractionResult {
  IndexList indices;
  Eigen::MatrixXd x_final;  // last projected iterate, in Omega
  std::vector<double> objective_history;  // F(Y_k), k = 1..iterations_run
  double mu_used = 0.0;
  double lipschitz = 0.0;
  int iterations_run = 0;
  bool rank_deficient = false;  // spa_rows found fewer than r independent rows
};

/// Entries uniform on [0.99, 1.01] from a fixed seed.
Eigen::VectorXd default_p(Index n, std::uint64_t seed);

// Gradient of F. M^T M is formed once when m >= 2n and reused; otherwise
// each call evaluates M^T (M X - M), which is cheaper in that regime.
class GradientOperator {
 public:
  explicit GradientOperator(const DenseMatrix& m);

  Eigen::MatrixXd operator()(const Eigen::MatrixXd& x, double mu,
                             const Eigen::VectorXd& p) const;

  bool uses_gram() const noexcept { return gram_.has_value(); }

 private:
  const Eigen::MatrixXd& m_;
  std::optional<Eigen::MatrixXd> gram_;
};

Eigen::MatrixXd gradient(const DenseMatrix& m, const Eigen::MatrixXd& x, double mu,
                         const Eigen::VectorXd& p);

double objective(const DenseMatrix& m, const Eigen::MatrixXd& x, double mu,
                 const Eigen::VectorXd& p);

/// alpha_k >= 0 with alpha_k^2 = (1 - alpha_k) alpha_{k-1}^2.
double next_alpha(double alpha_prev);

double momentum_beta(double alpha_prev, double alpha);

inline constexpr double kInitialAlpha = 0.05;

struct MuEstimate {
  double mu = 0.0;
  Eigen::MatrixXd x0;  // n x n; rows outside `indices` are zero
  IndexList indices;   // SPA selection used for x0
  bool floored = false;
};

/// mu = ||M - M X0||_F^2 / p^T diag(X0), where X0 holds NNLS weights on r
/// columns picked by SPA. Falls back to 1e-6 L / n when the residual or the
/// weighted trace is numerically zero.
MuEstimate estimate_mu(const DenseMatrix& m, Index r, const Eigen::VectorXd& p);

ExtractionResult solve(const DenseMatrix& m, const SolverConfig& config);

/// Indices of the r largest diagonal entries, ties to the lower index.
IndexList postprocess_topdiag(const Eigen::MatrixXd& x, Index r);

struct RowSelection {
  IndexList indices;
  bool rank_deficient = false;
};

/// SPA on X^T: repeatedly take the row with the largest residual 2-norm and
/// project every row onto its orthogonal complement.
RowSelection postprocess_spa_rows(const Eigen::MatrixXd& x, Index r);

}  // namespace fgnsr
