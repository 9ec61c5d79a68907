#include "fgnsr/solver.hpp"

#include "fgnsr/baselines.hpp"
#include "fgnsr/error.hpp"
#include "fgnsr/projection.hpp"
#include "fgnsr/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fgnsr {

Eigen::VectorXd default_p(Index n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd p(n);
  for (Index i = 0; i < n; ++i) p[i] = rng.uniform(0.99, 1.01);
  return p;
}

GradientOperator::GradientOperator(const DenseMatrix& m) : m_(m.values()) {
  if (m_.rows() >= 2 * m_.cols()) gram_ = m_.transpose() * m_;
}

Eigen::MatrixXd GradientOperator::operator()(const Eigen::MatrixXd& x, double mu,
                                             const Eigen::VectorXd& p) const {
  Eigen::MatrixXd g;
  if (gram_) {
    g.noalias() = *gram_ * x;
    g -= *gram_;
  } else {
    Eigen::MatrixXd mx = m_ * x;
    mx -= m_;
    g.noalias() = m_.transpose() * mx;
  }
  g.diagonal() += mu * p;
  return g;
}

Eigen::MatrixXd gradient(const DenseMatrix& m, const Eigen::MatrixXd& x, double mu,
                         const Eigen::VectorXd& p) {
  if (x.rows() != m.cols() || x.cols() != m.cols() || p.size() != m.cols()) {
    throw std::invalid_argument("gradient: shape mismatch");
  }
  return GradientOperator(m)(x, mu, p);
}

double objective(const DenseMatrix& m, const Eigen::MatrixXd& x, double mu,
                 const Eigen::VectorXd& p) {
  if (x.rows() != m.cols() || x.cols() != m.cols() || p.size() != m.cols()) {
    throw std::invalid_argument("objective: shape mismatch");
  }
  const Eigen::MatrixXd res = m.values() - m.values() * x;
  return 0.5 * res.squaredNorm() + mu * p.dot(x.diagonal());
}

double next_alpha(double alpha_prev) {
  // Positive root of a^2 + c a - c = 0 with c = alpha_prev^2, written without
  // the cancellation in (-c + sqrt(c^2 + 4c)) / 2.
  const double c = alpha_prev * alpha_prev;
  if (c == 0.0) return 0.0;
  return 2.0 * c / (c + std::sqrt(c * c + 4.0 * c));
}

double momentum_beta(double alpha_prev, double alpha) {
  return alpha_prev * (1.0 - alpha_prev) / (alpha_prev * alpha_prev + alpha);
}

MuEstimate estimate_mu(const DenseMatrix& m, Index r, const Eigen::VectorXd& p) {
  const Index n = m.cols();
  if (r < 1 || r > n) throw std::invalid_argument("estimate_mu: r out of range");
  if (p.size() != n) throw std::invalid_argument("estimate_mu: p has wrong length");

  MuEstimate out;
  out.indices = spa_partial(m.values(), r).selection.indices;
  out.x0 = Eigen::MatrixXd::Zero(n, n);
  double num = m.values().squaredNorm();
  double den = 0.0;
  if (!out.indices.empty()) {
    const DenseMatrix basis = m.select_columns(out.indices);
    const NnlsResult fit = nnls_cd(basis.values(), m.values(), NnlsOptions{});
    for (std::size_t i = 0; i < out.indices.size(); ++i) {
      out.x0.row(out.indices[i]) = fit.h.row(static_cast<Index>(i));
    }
    num = fit.residual.squaredNorm();
    den = p.dot(out.x0.diagonal());
  }

  const double scale = m.values().squaredNorm();
  if (num < 1e-12 * scale || den < 1e-12) {
    out.mu = 1e-6 * spectral_norm_sq(m) / static_cast<double>(n);
    out.floored = true;
  } else {
    out.mu = num / den;
  }
  return out;
}

namespace {

void validate(const DenseMatrix& m, const SolverConfig& c, const Eigen::VectorXd& p) {
  const Index n = m.cols();
  if (c.r < 1 || c.r > n) {
    throw std::invalid_argument("r must lie in [1, " + std::to_string(n) + "]");
  }
  if (c.maxiter < 1) throw std::invalid_argument("maxiter must be >= 1");
  if (p.size() != n || !(p.array() > 0.0).all()) {
    throw std::invalid_argument("p must be a positive vector of length n");
  }
  if (c.mu_mode == MuMode::fixed && !(c.mu >= 0.0)) {
    throw std::invalid_argument("mu must be nonnegative");
  }
  if (c.mu_mode == MuMode::dynamic && !(c.eps_target > 0.0)) {
    throw std::invalid_argument("dynamic mu needs eps_target > 0");
  }
  if (c.mu_mode == MuMode::dynamic && c.schedule.period < 1) {
    throw std::invalid_argument("dynamic mu period must be >= 1");
  }
  if (c.warm_start && (c.warm_start->rows() != n || c.warm_start->cols() != n)) {
    throw std::invalid_argument("warm start must be n x n");
  }
}

}  // namespace

ExtractionResult solve(const DenseMatrix& m, const SolverConfig& config) {
  const Index n = m.cols();
  const Eigen::VectorXd p = config.p ? *config.p : default_p(n, config.p_seed);
  validate(m, config, p);
  if (m.values().isZero(0.0)) throw SolverError("zero operator");

  ExtractionResult out;
  out.lipschitz = spectral_norm_sq(m, config.power) * (1.0 + 10.0 * config.power.tol);
  const double step = 1.0 / out.lipschitz;
  OmegaProjector projector(col_l1_norms(m));
  const GradientOperator grad(m);

  double mu = config.mu;
  std::optional<MuEstimate> heuristic;
  if (config.mu_mode != MuMode::fixed || config.warm_start_from_heuristic) {
    heuristic = estimate_mu(m, config.r, p);
    if (config.mu_mode != MuMode::fixed) mu = heuristic->mu;
  }

  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(n, n);
  if (config.warm_start) {
    y = *config.warm_start;
    projector.project_in_place(y);
  } else if (config.warm_start_from_heuristic) {
    y = heuristic->x0;
    projector.project_in_place(y);
  }
  Eigen::MatrixXd x = y;
  Eigen::MatrixXd y_prev(n, n);
  double alpha = kInitialAlpha;

  double gamma_up = config.schedule.gamma_up;
  double gamma_down = config.schedule.gamma_down;

  for (int k = 1; k <= config.maxiter; ++k) {
    y_prev = y;
    y = x - step * grad(x, mu, p);
    projector.project_in_place(y);
    if (!y.allFinite()) throw SolverError("divergence");

    const double alpha_next = next_alpha(alpha);
    const double beta = momentum_beta(alpha, alpha_next);
    alpha = alpha_next;
    x = y + beta * (y - y_prev);
    out.iterations_run = k;

    if (config.objective_trace) out.objective_history.push_back(objective(m, y, mu, p));
    if (config.on_iterate) config.on_iterate(k, y);

    if (config.mu_mode == MuMode::dynamic && k % config.schedule.period == 0 &&
        k < config.maxiter) {
      const double residual = (m.values() - m.values() * y).norm();
      if (residual < config.eps_target) {
        mu *= gamma_up;
      } else if (residual > config.eps_target) {
        mu *= gamma_down;
      }
      gamma_up = std::pow(gamma_up, config.schedule.decay);
      gamma_down = std::pow(gamma_down, config.schedule.decay);
      // The objective changed, so the momentum sequence starts over.
      alpha = kInitialAlpha;
      x = y;
    }

    if (config.early_exit &&
        (y - y_prev).norm() / (1.0 + y.norm()) < config.early_exit_tol) {
      break;
    }
  }

  out.mu_used = mu;
  if (config.postprocess == Postprocess::topdiag) {
    out.indices = postprocess_topdiag(y, config.r);
  } else {
    RowSelection sel = postprocess_spa_rows(y, config.r);
    out.indices = std::move(sel.indices);
    out.rank_deficient = sel.rank_deficient;
  }
  out.x_final = std::move(y);
  return out;
}

}  // namespace fgnsr
