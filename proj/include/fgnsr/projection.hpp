#pragma once

#include "fgnsr/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fgnsr {

// Euclidean projection onto
//
//   Omega = { X >= 0 | X_ii <= 1, w_i X_ij <= w_j X_ii for all i, j }.
//
// Rows decouple: row i is projected onto
//
//   Omega_1(i) = { z >= 0 | z_i <= 1, w_i z_j <= w_j z_i }
//
// with i as the pivot. For a trial pivot value t, every coordinate with
// breakpoint b_j = (w_i / w_j) x_j >= t sits on its coupling constraint
// (z_j = (w_j / w_i) t), all others keep z_j = x_j. The optimal t minimizes
// a strongly convex piecewise quadratic; it is found by moving breakpoints
// into the active set in decreasing order until the closed-form trial value
//
//   t = w_i (w_i x_i + sum_{j in B} w_j x_j) / (w_i^2 + sum_{j in B} w_j^2)
//
// no longer lies below the next breakpoint, then clamping t to [0, 1].
// Breakpoints above 1 are always active and those below max(x_i, 0) never
// are, so only the window in between has to be ordered.

enum class BreakpointScan {
  heap,       // partial ordering, O(n + k log k) for k scanned breakpoints
  full_sort,  // sorts every breakpoint up front, O(n log n)
};

struct RowProjection {
  std::vector<double> z;
  double t = 0.0;                    // last trial value, before clamping
  std::size_t active_count = 0;      // coupling constraints at equality
  std::vector<double> trial_values;  // scan sequence (strictly increasing)
};

/// Projects x onto Omega_1(pivot). Requires w >= 0 entrywise and finite x.
/// A zero pivot weight makes every coupling constraint vacuous: the result is
/// then z_pivot = clamp(x_pivot, 0, 1) and z_j = max(x_j, 0).
RowProjection project_row_detailed(std::span<const double> x,
                                   std::span<const double> w, std::size_t pivot,
                                   BreakpointScan scan = BreakpointScan::heap);

std::vector<double> project_row(std::span<const double> x,
                                std::span<const double> w, std::size_t pivot,
                                BreakpointScan scan = BreakpointScan::heap);

/// Row-wise projection of a square matrix onto Omega.
DenseMatrix project_omega(const DenseMatrix& x, const ColumnWeights& w);

// Reusable workspace for projecting many rows of an Eigen matrix in place.
class OmegaProjector {
 public:
  explicit OmegaProjector(ColumnWeights w);

  void project_in_place(Eigen::MatrixXd& x);

  const ColumnWeights& weights() const noexcept { return weights_; }

 private:
  ColumnWeights weights_;
  std::vector<double> row_;
  RowProjection out_;
};

/// Exhaustive reference: enumerates every face of Omega_1(pivot) (each
/// non-pivot coordinate free, zero, or coupled; the pivot free, zero, or one),
/// solves the equality-constrained least-squares problem on each, and keeps
/// the nearest feasible candidate. Exponential in n; limited to n <= 12.
std::vector<double> brute_force_project_row(std::span<const double> x,
                                            std::span<const double> w,
                                            std::size_t pivot);

}  // namespace fgnsr
