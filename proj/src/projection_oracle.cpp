#include "fgnsr/projection.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fgnsr {

namespace {

enum class Face { free, zero, tied };  // tied: coupling (or z_pivot = 1) active

constexpr double kFeasTol = 1e-12;

bool feasible(const Eigen::VectorXd& z, std::span<const double> w, std::size_t pivot) {
  const auto p = static_cast<Index>(pivot);
  if (z[p] > 1.0 + kFeasTol) return false;
  for (Index j = 0; j < z.size(); ++j) {
    const double scale = 1.0 + std::abs(z[j]);
    if (z[j] < -kFeasTol * scale) return false;
    if (j != p && w[pivot] * z[j] > w[static_cast<std::size_t>(j)] * z[p] +
                                        kFeasTol * (1.0 + w[static_cast<std::size_t>(j)])) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<double> brute_force_project_row(std::span<const double> x,
                                            std::span<const double> w,
                                            std::size_t pivot) {
  const std::size_t n = x.size();
  if (n > 12) throw std::invalid_argument("oracle limit");
  if (w.size() != n) throw std::invalid_argument("brute_force_project_row: length mismatch");
  if (pivot >= n) throw std::out_of_range("brute_force_project_row: pivot out of range");

  const auto nn = static_cast<Index>(n);
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), nn);
  std::vector<Face> face(n, Face::free);

  Eigen::VectorXd best = Eigen::VectorXd::Zero(nn);
  double best_dist = std::numeric_limits<double>::infinity();

  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= 3;

  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    Index k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      face[j] = static_cast<Face>(c % 3);
      c /= 3;
      if (face[j] != Face::free) ++k;
    }

    Eigen::VectorXd z;
    if (k == 0) {
      z = xv;
    } else {
      // Equality system A z = b for the active constraints of this face.
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, nn);
      Eigen::VectorXd b = Eigen::VectorXd::Zero(k);
      Index row = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const auto jj = static_cast<Index>(j);
        if (face[j] == Face::zero) {
          a(row++, jj) = 1.0;
        } else if (face[j] == Face::tied) {
          if (j == pivot) {
            a(row, jj) = 1.0;
            b[row++] = 1.0;
          } else {
            a(row, jj) = w[pivot];
            a(row++, static_cast<Index>(pivot)) = -w[j];
          }
        }
      }
      // min ||x - z|| s.t. A z = b  =>  z = x - A^T lambda, (A A^T) lambda = A x - b
      const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a * a.transpose());
      const Eigen::VectorXd rhs = a * xv - b;
      const Eigen::VectorXd lambda = cod.solve(rhs);
      z = xv - a.transpose() * lambda;
      if ((a * z - b).norm() > 1e-9 * (1.0 + b.norm() + xv.norm())) continue;  // inconsistent face
    }
    if (!feasible(z, w, pivot)) continue;
    const double dist = (xv - z).squaredNorm();
    if (dist < best_dist) {
      best_dist = dist;
      best = z;
    }
  }
  return {best.data(), best.data() + nn};
}

}  // namespace fgnsr
