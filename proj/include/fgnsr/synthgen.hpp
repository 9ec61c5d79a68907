#pragma once

#include "fgnsr/linalg.hpp"

#include <cstdint>

namespace fgnsr {

// Noisy r-separable matrix M = W H + N with the vertex columns of W and the
// midpoints of every vertex pair, midpoints pushed away from the vertex
// centroid, columns shuffled.
struct SyntheticInstance {
  DenseMatrix m;
  DenseMatrix w_true;   // m x r, columns sum to one
  IndexList k_true;     // M(:, k_true[i]) == W_true(:, i)
  DenseMatrix h_true;   // r x n, noiseless weights in shuffled column order
  double eps = 0.0;     // ||M - W_true H_true||_F
  double alpha = 1.0;   // midpoint scale range [1/alpha, alpha]
  std::uint64_t seed = 0;
};

/// n = r + r(r-1)/2 columns.
Index middlepoint_cols(Index r);

SyntheticInstance gen_middlepoint(Index m, Index r, double eps, std::uint64_t seed);

/// Midpoint columns of H are scaled by independent log-uniform factors on
/// [1/alpha, alpha] before the noise is built.
SyntheticInstance gen_scaled_middlepoint(Index m, Index r, double eps, double alpha,
                                         std::uint64_t seed);

}  // namespace fgnsr
