#include "commands.hpp"

#include "fgnsr/baselines.hpp"
#include "fgnsr/benchmark.hpp"
#include "fgnsr/error.hpp"
#include "fgnsr/io.hpp"
#include "fgnsr/metrics.hpp"
#include "fgnsr/preselect.hpp"
#include "fgnsr/projection.hpp"
#include "fgnsr/solver.hpp"
#include "fgnsr/synthgen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

namespace fgnsr::cli {

namespace {

using nlohmann::json;

struct GenerateArgs {
  std::string kind = "middlepoint";
  Index m = 50;
  Index r = 10;
  double eps = 0.0;
  double alpha = 4.0;
  std::uint64_t seed = 1;
  std::string out;
};

struct UnmixArgs {
  std::string in;
  std::string algorithm = "fgnsr";
  Index r = 1;
  std::string mu_mode = "heuristic";
  double mu = 0.0;
  double eps = 0.0;
  int maxiter = 1000;
  std::string postprocess;  // empty: topdiag, or spa_rows under preselection
  Index preselect = 0;
  std::string labels;
  std::uint64_t seed = 1;
  bool normalize = false;
  std::string out;
};

struct SweepArgs {
  std::string kind = "middlepoint";
  Index m = 50;
  Index r = 10;
  double alpha = 4.0;
  std::vector<double> eps;
  int trials = 25;
  std::vector<std::string> algorithms = {"fgnsr", "spa"};
  std::uint64_t seed = 1;
  int maxiter = 1000;
  std::string out;
};

struct ProjectArgs {
  std::string x;
  std::string w;
  std::size_t pivot = 0;
  std::string out;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

json indices_json(const IndexList& k) {
  json arr = json::array();
  for (Index j : k) arr.push_back(j);
  return arr;
}

int cmd_generate(const GenerateArgs& a) {
  const InstanceKind kind = parse_instance_kind(a.kind);
  const SyntheticInstance inst =
      kind == InstanceKind::scaled ? gen_scaled_middlepoint(a.m, a.r, a.eps, a.alpha, a.seed)
                                   : gen_middlepoint(a.m, a.r, a.eps, a.seed);
  io::write_matrix(a.out, inst.m);
  json meta = {{"kind", a.kind},
               {"m", inst.m.rows()},
               {"n", inst.m.cols()},
               {"r", a.r},
               {"eps", inst.eps},
               {"alpha", inst.alpha},
               {"seed", inst.seed},
               {"K_true", indices_json(inst.k_true)}};
  emit(a.out + ".meta.json", meta.dump(2) + "\n", std::cout);
  return kExitOk;
}

Postprocess parse_postprocess(const std::string& s) {
  if (s == "topdiag") return Postprocess::topdiag;
  if (s == "spa_rows") return Postprocess::spa_rows;
  throw ParseError("unknown postprocess '" + s + "'");
}

MuMode parse_mu_mode(const std::string& s) {
  if (s == "fixed") return MuMode::fixed;
  if (s == "heuristic") return MuMode::heuristic;
  if (s == "dynamic") return MuMode::dynamic;
  throw ParseError("unknown mu mode '" + s + "'");
}

int cmd_unmix(const UnmixArgs& a, std::ostream& out) {
  const DenseMatrix original = io::read_matrix(a.in);
  const Index n = original.cols();
  if (a.algorithm != "fgnsr" && a.algorithm != "spa" && a.algorithm != "snpa" &&
      a.algorithm != "xray") {
    throw ParseError("unknown algorithm '" + a.algorithm + "'");
  }
  const MuMode mu_mode = parse_mu_mode(a.mu_mode);
  std::optional<ClusterAssignment> assignment;
  json preselect = nullptr;
  if (!a.labels.empty()) {
    const auto ids = io::read_labels(a.labels);
    if (static_cast<Index>(ids.size()) != n) {
      throw ParseError(a.labels + ": " + std::to_string(ids.size()) + " labels for " +
                       std::to_string(n) + " columns");
    }
    assignment = assignment_from_ids(ids);
    preselect = {{"source", "labels"}, {"clusters", assignment->clusters()}};
  } else if (a.preselect > 0) {
    if (a.preselect > n) throw ParseError("--preselect exceeds the number of columns");
    preselect = {{"source", "split"}, {"clusters", a.preselect}, {"seed", a.seed}};
  }
  const Postprocess post = a.postprocess.empty()
                               ? (preselect.is_null() ? Postprocess::topdiag
                                                      : Postprocess::spa_rows)
                               : parse_postprocess(a.postprocess);
  if (a.r < 1) throw ParseError("--r must be >= 1");

  const auto start = std::chrono::steady_clock::now();
  const DenseMatrix data = a.normalize ? normalize_columns_l1(original) : original;
  std::optional<CentroidSet> centroids;
  if (!preselect.is_null()) {
    if (!assignment) assignment = simple_split_cluster(data, a.preselect, a.seed);
    centroids = centroids_scaled(data, *assignment);
  }
  const DenseMatrix& work = centroids ? centroids->centroids : data;
  if (a.r > work.cols()) throw ParseError("--r exceeds the number of candidate columns");

  json result;
  IndexList picked;
  json scores = json::array();
  if (a.algorithm == "fgnsr") {
    SolverConfig config;
    config.r = a.r;
    config.mu = a.mu;
    config.mu_mode = mu_mode;
    config.eps_target = a.eps;
    config.maxiter = a.maxiter;
    config.postprocess = post;
    const ExtractionResult res = solve(work, config);
    picked = res.indices;
    for (Index k : picked) {
      scores.push_back({{"diag", res.x_final(k, k)}, {"row_norm", res.x_final.row(k).norm()}});
    }
    result["solver"] = {{"mu", res.mu_used},
                        {"mu_mode", a.mu_mode},
                        {"iterations", res.iterations_run},
                        {"lipschitz", res.lipschitz},
                        {"postprocess", post == Postprocess::topdiag ? "topdiag" : "spa_rows"},
                        {"rank_deficient", res.rank_deficient}};
  } else {
    const GreedySelection sel = a.algorithm == "spa"    ? spa(work, a.r)
                                : a.algorithm == "snpa" ? snpa(work, a.r)
                                                        : xray_max(work, a.r);
    picked = sel.indices;
    for (std::size_t i = 0; i < picked.size(); ++i) {
      scores.push_back({{"pick_norm", sel.pick_norms[i]}, {"residual_fro", sel.residual_norms[i]}});
    }
  }

  IndexList reported = picked;
  if (centroids) {
    for (auto& k : reported) k = centroids->colmap[static_cast<std::size_t>(k)];
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  json diagnostics = json::array();
  for (std::size_t i = 0; i < reported.size(); ++i) {
    json d = scores[i];
    d["index"] = reported[i];
    if (centroids) {
      d["centroid"] = picked[i];
      d["cluster_size"] = centroids->counts[static_cast<std::size_t>(picked[i])];
    }
    diagnostics.push_back(std::move(d));
  }
  result["algorithm"] = a.algorithm;
  result["m"] = original.rows();
  result["n"] = n;
  result["r"] = a.r;
  result["normalized"] = a.normalize;
  result["indices"] = indices_json(reported);
  result["diagnostics"] = std::move(diagnostics);
  result["preselect"] = preselect;
  result["rel_error_pct"] = rel_error_pct(original, reported);
  result["metric_settings"] = {{"nnls_sweeps", kMetricSweeps}, {"nnls_rel_tol", kMetricTol}};
  result["runtime_seconds"] = elapsed.count();
  emit(a.out, result.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepSpec spec;
  spec.kind = parse_instance_kind(a.kind);
  spec.m = a.m;
  spec.r = a.r;
  spec.alpha = a.alpha;
  spec.eps_levels = a.eps;
  spec.trials = a.trials;
  spec.base_seed = a.seed;
  spec.algorithms = a.algorithms;
  spec.maxiter = a.maxiter;
  for (const auto& name : spec.algorithms) {
    if (!is_algorithm(name)) throw ParseError("unknown algorithm '" + name + "'");
  }
  if (spec.trials < 1) throw ParseError("--trials must be >= 1");
  std::ostringstream csv;
  write_sweep_csv(csv, run_sweep(spec));
  emit(a.out, csv.str(), out);
  return kExitOk;
}

int cmd_project(const ProjectArgs& a, std::ostream& out) {
  const auto x = io::read_vector(a.x);
  const auto w = io::read_vector(a.w);
  if (x.size() != w.size()) {
    throw ParseError("row has " + std::to_string(x.size()) + " entries but weights have " +
                     std::to_string(w.size()));
  }
  if (a.pivot >= x.size()) throw ParseError("--pivot out of range");
  for (double v : w) {
    if (v < 0.0) throw ParseError("weights must be nonnegative");
  }
  const RowProjection proj = project_row_detailed(x, w, a.pivot);
  const json result = {{"z", proj.z},
                       {"pivot", a.pivot},
                       {"t", proj.t},
                       {"z_pivot", proj.z[a.pivot]},
                       {"active_set_size", proj.active_count}};
  emit(a.out, result.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-separable NMF by fast-gradient sparse regression with self dictionary"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a synthetic middle-point instance");
  g->add_option("--kind", gen.kind, "middlepoint | scaled")->capture_default_str();
  g->add_option("--m", gen.m, "Rows (bands)")->capture_default_str();
  g->add_option("--r", gen.r, "Number of vertices")->capture_default_str();
  g->add_option("--eps", gen.eps, "Noise level ||N||_F")->capture_default_str();
  g->add_option("--alpha", gen.alpha, "Scale range for --kind scaled")->capture_default_str();
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_option("--out", gen.out, "Matrix file (.csv for text, binary otherwise)")->required();

  UnmixArgs un;
  auto* u = app.add_subcommand("unmix", "Select r columns of a data matrix");
  u->add_option("--in", un.in, "Matrix file")->required();
  u->add_option("--algorithm", un.algorithm, "fgnsr | spa | snpa | xray")->capture_default_str();
  u->add_option("--r", un.r, "Columns to extract")->required();
  u->add_option("--mu-mode", un.mu_mode, "fixed | heuristic | dynamic")->capture_default_str();
  u->add_option("--mu", un.mu, "Penalty for --mu-mode fixed");
  u->add_option("--eps", un.eps, "Target ||M - MX||_F for --mu-mode dynamic");
  u->add_option("--maxiter", un.maxiter)->capture_default_str();
  u->add_option("--postprocess", un.postprocess, "topdiag | spa_rows");
  u->add_option("--preselect", un.preselect, "Cluster into C centroids first (0: off)");
  u->add_option("--labels", un.labels, "Cluster id per column, one per line");
  u->add_option("--seed", un.seed, "Seed for the built-in cluster splitter");
  u->add_flag("--normalize", un.normalize, "l1-normalize columns before selection");
  u->add_option("--out", un.out, "JSON report (stdout if omitted)");

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "Robustness sweep over noise levels");
  s->add_option("--kind", sw.kind)->capture_default_str();
  s->add_option("--m", sw.m)->capture_default_str();
  s->add_option("--r", sw.r)->capture_default_str();
  s->add_option("--alpha", sw.alpha)->capture_default_str();
  s->add_option("--eps", sw.eps, "Comma-separated noise levels")->delimiter(',')->required();
  s->add_option("--trials", sw.trials)->capture_default_str();
  s->add_option("--algorithms", sw.algorithms, "Comma-separated algorithm names")
      ->delimiter(',');
  s->add_option("--seed", sw.seed, "Trial t uses seed + t")->capture_default_str();
  s->add_option("--maxiter", sw.maxiter)->capture_default_str();
  s->add_option("--out", sw.out, "CSV report (stdout if omitted)");

  ProjectArgs pr;
  auto* p = app.add_subcommand("project", "Project one row onto the weighted polyhedron");
  p->add_option("--x", pr.x, "Row vector file")->required();
  p->add_option("--w", pr.w, "Weight vector file")->required();
  p->add_option("--pivot", pr.pivot, "0-based pivot coordinate")->capture_default_str();
  p->add_option("--out", pr.out, "JSON result (stdout if omitted)");

  std::vector<char*> argv;
  std::vector<std::string> storage(args);
  if (storage.empty()) storage.emplace_back("fgnsr");
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (g->parsed()) return cmd_generate(gen);
    if (u->parsed()) return cmd_unmix(un, out);
    if (s->parsed()) return cmd_sweep(sw, out);
    if (p->parsed()) return cmd_project(pr, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitParse;
}

}  // namespace fgnsr::cli
