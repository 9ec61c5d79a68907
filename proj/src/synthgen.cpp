#include "fgnsr/synthgen.hpp"

#include "fgnsr/random.hpp"

#include <cmath>
#include <stdexcept>

namespace fgnsr {

Index middlepoint_cols(Index r) { return r + r * (r - 1) / 2; }

SyntheticInstance gen_scaled_middlepoint(Index m, Index r, double eps, double alpha,
                                         std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("gen_middlepoint: m must be >= 1");
  if (r < 2) throw std::invalid_argument("gen_middlepoint: r must be >= 2");
  if (!(eps >= 0.0)) throw std::invalid_argument("gen_middlepoint: eps must be >= 0");
  if (!(alpha >= 1.0)) throw std::invalid_argument("gen_middlepoint: alpha must be >= 1");

  const Index n = middlepoint_cols(r);
  Rng rng(seed);

  Eigen::MatrixXd w(m, r);
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < m; ++i) w(i, j) = rng.uniform();
  }
  for (Index j = 0; j < r; ++j) {
    const double s = w.col(j).sum();
    if (s > 0.0) w.col(j) /= s;
  }

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(r, n);
  h.leftCols(r).setIdentity();
  const double log_alpha = std::log(alpha);
  Index col = r;
  for (Index a = 0; a < r; ++a) {
    for (Index b = a + 1; b < r; ++b, ++col) {
      const double scale = alpha == 1.0 ? 1.0 : std::exp(rng.uniform(-log_alpha, log_alpha));
      h(a, col) = 0.5 * scale;
      h(b, col) = 0.5 * scale;
    }
  }

  const Eigen::MatrixXd clean = w * h;
  const Eigen::VectorXd centroid = w.rowwise().mean();
  Eigen::MatrixXd noise = Eigen::MatrixXd::Zero(m, n);
  noise.rightCols(n - r) = clean.rightCols(n - r).colwise() - centroid;
  const double nn = noise.norm();
  if (eps == 0.0 || nn == 0.0) {
    noise.setZero();
  } else {
    noise *= eps / nn;
  }
  const Eigen::MatrixXd full = clean + noise;

  // Column k of the output is column perm[k] of the construction.
  const auto perm = rng.permutation(n);
  Eigen::MatrixXd m_out(m, n);
  Eigen::MatrixXd h_out(r, n);
  IndexList k_true(static_cast<std::size_t>(r));
  for (Index k = 0; k < n; ++k) {
    const Index src = perm[static_cast<std::size_t>(k)];
    m_out.col(k) = full.col(src);
    h_out.col(k) = h.col(src);
    if (src < r) k_true[static_cast<std::size_t>(src)] = k;
  }

  return SyntheticInstance{DenseMatrix(std::move(m_out)),
                           DenseMatrix(std::move(w)),
                           std::move(k_true),
                           DenseMatrix(std::move(h_out)),
                           eps,
                           alpha,
                           seed};
}

SyntheticInstance gen_middlepoint(Index m, Index r, double eps, std::uint64_t seed) {
  return gen_scaled_middlepoint(m, r, eps, 1.0, seed);
}

}  // namespace fgnsr
