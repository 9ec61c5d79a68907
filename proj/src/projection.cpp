#include "fgnsr/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fgnsr {

namespace {

struct Breakpoint {
  double value;
  std::size_t index;
};

// Strict weak order placing the next breakpoint to activate first: larger
// value first, equal values by lower index.
struct ActivatesBefore {
  bool operator()(const Breakpoint& a, const Breakpoint& b) const {
    return a.value > b.value || (a.value == b.value && a.index < b.index);
  }
};

void validate(std::span<const double> x, std::span<const double> w,
              std::size_t pivot) {
  if (x.size() != w.size()) {
    throw std::invalid_argument("project_row: x and w differ in length");
  }
  if (pivot >= x.size()) throw std::out_of_range("project_row: pivot out of range");
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("project_row: weights must be finite and >= 0");
    }
  }
}

void project_row_into(std::span<const double> x, std::span<const double> w,
                      std::size_t pivot, BreakpointScan scan, bool record_trials,
                      std::vector<Breakpoint>& window, RowProjection& out) {
  const std::size_t n = x.size();
  out.z.assign(n, 0.0);
  out.trial_values.clear();
  out.active_count = 0;

  const double wp = w[pivot];
  const double xp = x[pivot];
  if (wp == 0.0) {
    for (std::size_t j = 0; j < n; ++j) out.z[j] = std::max(x[j], 0.0);
    out.z[pivot] = std::clamp(xp, 0.0, 1.0);
    out.t = out.z[pivot];
    return;
  }

  const double xp_plus = std::max(xp, 0.0);
  double num = wp * xp;
  double den = wp * wp;
  window.clear();
  // out.z doubles as the active marker: NaN flags coupled coordinates until
  // the final pivot value is known.
  constexpr double kActive = std::numeric_limits<double>::quiet_NaN();
  auto activate = [&](std::size_t j) {
    num += w[j] * x[j];
    den += w[j] * w[j];
    out.z[j] = kActive;
    ++out.active_count;
  };

  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot || x[j] <= 0.0 || w[j] == 0.0) continue;
    const double b = (wp / w[j]) * x[j];
    if (b > 1.0) {
      activate(j);
      if (scan == BreakpointScan::full_sort) window.push_back({b, j});
    } else {
      out.z[j] = x[j];
      if (scan == BreakpointScan::full_sort || b >= xp_plus) window.push_back({b, j});
    }
  }

  double t = wp * num / den;
  if (record_trials) out.trial_values.push_back(t);
  auto advance = [&](const Breakpoint& bp) {
    activate(bp.index);
    t = wp * num / den;
    if (record_trials) out.trial_values.push_back(t);
  };

  if (scan == BreakpointScan::heap) {
    // std heap keeps the largest element under the comparator on top, so
    // the inverted order surfaces the next breakpoint to activate.
    auto after = [](const Breakpoint& a, const Breakpoint& b) {
      return ActivatesBefore{}(b, a);
    };
    std::make_heap(window.begin(), window.end(), after);
    auto end = window.end();
    while (end != window.begin() && t < window.front().value) {
      std::pop_heap(window.begin(), end, after);
      --end;
      advance(*end);
    }
  } else {
    std::sort(window.begin(), window.end(), ActivatesBefore{});
    for (const Breakpoint& bp : window) {
      if (bp.value > 1.0) continue;  // activated up front
      if (bp.value < xp_plus || !(t < bp.value)) break;
      advance(bp);
    }
  }

  const double zp = std::min(1.0, std::max(0.0, t));
  out.t = t;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isnan(out.z[j])) out.z[j] = zp * w[j] / wp;
  }
  out.z[pivot] = zp;
}

}  // namespace

RowProjection project_row_detailed(std::span<const double> x,
                                   std::span<const double> w, std::size_t pivot,
                                   BreakpointScan scan) {
  validate(x, w, pivot);
  RowProjection out;
  std::vector<Breakpoint> window;
  project_row_into(x, w, pivot, scan, true, window, out);
  return out;
}

std::vector<double> project_row(std::span<const double> x,
                                std::span<const double> w, std::size_t pivot,
                                BreakpointScan scan) {
  validate(x, w, pivot);
  RowProjection out;
  std::vector<Breakpoint> window;
  project_row_into(x, w, pivot, scan, false, window, out);
  return std::move(out.z);
}

DenseMatrix project_omega(const DenseMatrix& x, const ColumnWeights& w) {
  if (x.rows() != x.cols()) throw std::invalid_argument("project_omega: X must be square");
  if (w.size() != x.cols()) {
    throw std::invalid_argument("project_omega: weight length differs from X");
  }
  Eigen::MatrixXd out = x.values();
  OmegaProjector(w).project_in_place(out);
  return DenseMatrix(std::move(out));
}

OmegaProjector::OmegaProjector(ColumnWeights w) : weights_(std::move(w)) {
  const auto s = weights_.span();
  validate(s, s, 0);
  row_.resize(s.size());
}

void OmegaProjector::project_in_place(Eigen::MatrixXd& x) {
  const auto n = static_cast<std::size_t>(weights_.size());
  if (static_cast<std::size_t>(x.rows()) != n || static_cast<std::size_t>(x.cols()) != n) {
    throw std::invalid_argument("OmegaProjector: shape mismatch");
  }
  std::vector<Breakpoint> window;
  window.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Index>(i);
    for (std::size_t j = 0; j < n; ++j) row_[j] = x(ii, static_cast<Index>(j));
    project_row_into(row_, weights_.span(), i, BreakpointScan::heap, false, window, out_);
    for (std::size_t j = 0; j < n; ++j) x(ii, static_cast<Index>(j)) = out_.z[j];
  }
}

}  // namespace fgnsr
