#include "fgnsr/solver.hpp"

#include "fgnsr/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fgnsr {

IndexList postprocess_topdiag(const Eigen::MatrixXd& x, Index r) {
  if (x.rows() != x.cols()) throw std::invalid_argument("postprocess_topdiag: X must be square");
  if (r < 0 || r > x.rows()) throw std::invalid_argument("postprocess_topdiag: r > n");
  IndexList order(static_cast<std::size_t>(x.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  const auto d = x.diagonal();
  std::partial_sort(order.begin(), order.begin() + r, order.end(),
                    [&](Index a, Index b) { return d[a] > d[b] || (d[a] == d[b] && a < b); });
  order.resize(static_cast<std::size_t>(r));
  return order;
}

RowSelection postprocess_spa_rows(const Eigen::MatrixXd& x, Index r) {
  if (x.rows() != x.cols()) throw std::invalid_argument("postprocess_spa_rows: X must be square");
  if (r < 0 || r > x.rows()) throw std::invalid_argument("postprocess_spa_rows: r > n");
  PartialSelection sel = spa_partial(x.transpose(), r);
  return RowSelection{std::move(sel.selection.indices), sel.exhausted};
}

}  // namespace fgnsr
