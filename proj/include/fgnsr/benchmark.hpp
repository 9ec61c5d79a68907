#pragma once

#include "fgnsr/linalg.hpp"
#include "fgnsr/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fgnsr {

// Column-selection algorithms addressable by name:
//   fgnsr          heuristic mu, topdiag
//   fgnsr-dynamic  mu steered toward the known noise level
//   spa, snpa, xray (negative entries clamped to zero first)
//   spa-l1, fgnsr-l1   the same after l1-normalizing the columns of M
const std::vector<std::string>& algorithm_names();

bool is_algorithm(const std::string& name);

struct AlgorithmOptions {
  int maxiter = 1000;
  double eps_target = 0.0;  // used by fgnsr-dynamic; <= 0 falls back to heuristic
};

IndexList run_algorithm(const std::string& name, const DenseMatrix& m, Index r,
                        const AlgorithmOptions& opts = {});

enum class InstanceKind { middlepoint, scaled };

InstanceKind parse_instance_kind(const std::string& s);

struct SweepSpec {
  InstanceKind kind = InstanceKind::middlepoint;
  Index m = 50;
  Index r = 10;
  double alpha = 4.0;  // scaled instances only
  std::vector<double> eps_levels;
  int trials = 25;
  std::uint64_t base_seed = 1;
  std::vector<std::string> algorithms;
  int maxiter = 1000;
};

struct SweepRow {
  std::string algorithm;
  double eps = 0.0;
  std::uint64_t trial_seed = 0;
  double index_recovery = 0.0;
  double mrsa_mean = 0.0;
  double rel_measure = 0.0;
  double runtime_seconds = 0.0;
};

/// Trial t uses seed base_seed + t at every noise level, so each level sees
/// the same bases and permutations.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepHeader =
    "algorithm,eps,trial_seed,index_recovery,mrsa_mean,rel_measure,runtime_seconds";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace fgnsr
