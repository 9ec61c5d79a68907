#include "fgnsr/preselect.hpp"

#include "fgnsr/random.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace fgnsr {

ClusterAssignment make_assignment(std::vector<Index> labels) {
  ClusterAssignment out;
  Index c = 0;
  for (Index l : labels) {
    if (l < 0) throw std::invalid_argument("negative cluster label");
    c = std::max(c, l + 1);
  }
  out.counts.assign(static_cast<std::size_t>(c), 0);
  for (Index l : labels) ++out.counts[static_cast<std::size_t>(l)];
  for (Index k = 0; k < c; ++k) {
    if (out.counts[static_cast<std::size_t>(k)] == 0) {
      throw std::invalid_argument("empty cluster " + std::to_string(k));
    }
  }
  out.labels = std::move(labels);
  return out;
}

ClusterAssignment assignment_from_ids(std::span<const std::int64_t> ids) {
  std::map<std::int64_t, Index> remap;
  for (auto id : ids) remap.emplace(id, 0);
  Index next = 0;
  for (auto& [id, label] : remap) label = next++;
  std::vector<Index> labels;
  labels.reserve(ids.size());
  for (auto id : ids) labels.push_back(remap.at(id));
  return make_assignment(std::move(labels));
}

CentroidSet centroids_scaled(const DenseMatrix& m, const ClusterAssignment& assignment) {
  const Index n = m.cols();
  if (static_cast<Index>(assignment.labels.size()) != n) {
    throw std::invalid_argument("cluster labels do not cover every column");
  }
  const Index c = assignment.clusters();
  std::vector<Index> counts(static_cast<std::size_t>(c), 0);
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(m.rows(), c);
  for (Index j = 0; j < n; ++j) {
    const Index k = assignment.labels[static_cast<std::size_t>(j)];
    if (k < 0 || k >= c) throw std::invalid_argument("cluster label out of range");
    sums.col(k) += m.col(j);
    ++counts[static_cast<std::size_t>(k)];
  }
  for (Index k = 0; k < c; ++k) {
    if (counts[static_cast<std::size_t>(k)] == 0) {
      throw std::invalid_argument("empty cluster " + std::to_string(k));
    }
    sums.col(k) /= static_cast<double>(counts[static_cast<std::size_t>(k)]);
  }

  IndexList colmap(static_cast<std::size_t>(c), -1);
  std::vector<double> best(static_cast<std::size_t>(c), 0.0);
  for (Index j = 0; j < n; ++j) {
    const auto k = static_cast<std::size_t>(assignment.labels[static_cast<std::size_t>(j)]);
    const double d = (m.col(j) - sums.col(static_cast<Index>(k))).squaredNorm();
    if (colmap[k] < 0 || d < best[k]) {
      colmap[k] = j;
      best[k] = d;
    }
  }

  for (Index k = 0; k < c; ++k) {
    sums.col(k) *= std::sqrt(static_cast<double>(counts[static_cast<std::size_t>(k)]));
  }
  return CentroidSet{DenseMatrix(std::move(sums)), std::move(counts), std::move(colmap)};
}

namespace {

constexpr int kLloydIters = 30;

struct Cluster {
  std::vector<Index> members;
  double scatter = 0.0;
};

double scatter_of(const Eigen::MatrixXd& z, const std::vector<Index>& members) {
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(z.rows());
  for (Index j : members) mean += z.col(j);
  mean /= static_cast<double>(members.size());
  double s = 0.0;
  for (Index j : members) s += (z.col(j) - mean).squaredNorm();
  return s;
}

Index farthest(const Eigen::MatrixXd& z, const std::vector<Index>& members,
               const Eigen::VectorXd& from) {
  Index best = members.front();
  double best_d = -1.0;
  for (Index j : members) {
    const double d = (z.col(j) - from).squaredNorm();
    if (d > best_d) {
      best = j;
      best_d = d;
    }
  }
  return best;
}

std::pair<std::vector<Index>, std::vector<Index>> two_means(const Eigen::MatrixXd& z,
                                                             const std::vector<Index>& members,
                                                             Rng& rng) {
  const Index start = members[rng.below(members.size())];
  Eigen::VectorXd c0 = z.col(farthest(z, members, z.col(start)));
  Eigen::VectorXd c1 = z.col(farthest(z, members, c0));

  std::vector<char> side(members.size(), 0);
  for (int it = 0; it < kLloydIters; ++it) {
    bool changed = false;
    Eigen::VectorXd s0 = Eigen::VectorXd::Zero(z.rows());
    Eigen::VectorXd s1 = Eigen::VectorXd::Zero(z.rows());
    std::size_t n0 = 0;
    std::size_t n1 = 0;
    for (std::size_t t = 0; t < members.size(); ++t) {
      const auto col = z.col(members[t]);
      const char s = (col - c1).squaredNorm() < (col - c0).squaredNorm() ? 1 : 0;
      if (s != side[t]) changed = true;
      side[t] = s;
      if (s) {
        s1 += col;
        ++n1;
      } else {
        s0 += col;
        ++n0;
      }
    }
    if (n0 == 0 || n1 == 0) break;
    c0 = s0 / static_cast<double>(n0);
    c1 = s1 / static_cast<double>(n1);
    if (it > 0 && !changed) break;
  }

  std::pair<std::vector<Index>, std::vector<Index>> out;
  for (std::size_t t = 0; t < members.size(); ++t) {
    (side[t] ? out.second : out.first).push_back(members[t]);
  }
  if (out.first.empty() || out.second.empty()) {
    // Identical points: split the member list in half.
    const auto mid = members.begin() + static_cast<std::ptrdiff_t>(members.size() / 2);
    out.first.assign(members.begin(), mid);
    out.second.assign(mid, members.end());
  }
  return out;
}

}  // namespace

ClusterAssignment simple_split_cluster(const DenseMatrix& m, Index c, std::uint64_t seed) {
  const Index n = m.cols();
  if (c < 1 || c > n) {
    throw std::invalid_argument("cluster count must lie in [1, " + std::to_string(n) + "]");
  }
  Eigen::MatrixXd z = m.values();
  for (Index j = 0; j < n; ++j) {
    const double nrm = z.col(j).norm();
    if (nrm > 0.0) z.col(j) /= nrm;
  }

  Rng rng(seed);
  std::vector<Cluster> clusters(1);
  clusters[0].members.resize(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) clusters[0].members[static_cast<std::size_t>(j)] = j;
  clusters[0].scatter = scatter_of(z, clusters[0].members);

  while (static_cast<Index>(clusters.size()) < c) {
    std::size_t pick = clusters.size();
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      if (clusters[k].members.size() < 2) continue;
      if (pick == clusters.size()) {
        pick = k;
        continue;
      }
      const Cluster& a = clusters[k];
      const Cluster& b = clusters[pick];
      if (a.scatter > b.scatter ||
          (a.scatter == b.scatter && a.members.size() > b.members.size())) {
        pick = k;
      }
    }
    auto [left, right] = two_means(z, clusters[pick].members, rng);
    clusters[pick].members = std::move(left);
    clusters[pick].scatter = scatter_of(z, clusters[pick].members);
    Cluster extra{std::move(right), 0.0};
    extra.scatter = scatter_of(z, extra.members);
    clusters.push_back(std::move(extra));
  }

  std::vector<Index> labels(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    for (Index j : clusters[k].members) labels[static_cast<std::size_t>(j)] = static_cast<Index>(k);
  }
  return make_assignment(std::move(labels));
}

}  // namespace fgnsr
