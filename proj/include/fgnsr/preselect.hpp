#pragma once

#include "fgnsr/linalg.hpp"

#include <cstdint>
#include <span>

namespace fgnsr {

// Column subsampling for large n: cluster the columns, keep one centroid per
// cluster scaled by sqrt(cluster size), run the solver on the centroids.

struct ClusterAssignment {
  std::vector<Index> labels;  // per column, in [0, C)
  std::vector<Index> counts;  // n_k, all positive

  Index clusters() const noexcept { return static_cast<Index>(counts.size()); }
};

/// Validates 0-based dense labels; throws on an empty cluster.
ClusterAssignment make_assignment(std::vector<Index> labels);

/// Accepts arbitrary integer ids and renumbers them 0..C-1 in increasing id
/// order.
ClusterAssignment assignment_from_ids(std::span<const std::int64_t> ids);

struct CentroidSet {
  DenseMatrix centroids;     // m x C, column k = sqrt(n_k) * mean of cluster k
  std::vector<Index> counts;
  IndexList colmap;          // member nearest (l2) to each unscaled centroid
};

CentroidSet centroids_scaled(const DenseMatrix& m, const ClusterAssignment& assignment);

/// Recursive 2-means on l2-normalized columns, always splitting the cluster
/// with the largest within-cluster scatter, until there are C clusters.
ClusterAssignment simple_split_cluster(const DenseMatrix& m, Index c, std::uint64_t seed);

}  // namespace fgnsr
