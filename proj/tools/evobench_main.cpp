// evobench command-line front end: runs experiment grids, evaluates single
// benchmark points, and produces the nonparametric comparison report.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "evobench/config.hpp"
#include "evobench/harness.hpp"
#include "evobench/stats_io.hpp"

namespace fs = std::filesystem;
using namespace evobench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

unsigned default_workers() {
  if (const char* env = std::getenv("EVOBENCH_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

CellFilter parse_filter(const std::vector<std::string>& specs) {
  CellFilter filter;
  for (const std::string& spec : specs) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) {
        throw ConfigurationError("filter entries must look like key=value: " + item);
      }
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "problem") {
        filter.problem = value;
      } else if (key == "dim") {
        filter.dim = value;
      } else if (key == "algorithm") {
        filter.algorithm = value;
      } else {
        throw ConfigurationError("unknown filter key '" + key +
                                 "' (expected problem/dim/algorithm)");
      }
    }
  }
  return filter;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& fn) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  fn(os);
  if (!os) throw std::runtime_error("failed while writing " + path.string());
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::vector<std::string>& filter_specs,
            std::optional<std::uint64_t> seed_override, unsigned workers,
            bool quiet) {
  ExperimentConfig config = load_experiment_config(config_path);
  if (seed_override) config.master_seed = *seed_override;
  const CellFilter filter = parse_filter(filter_specs);

  fs::create_directories(out_dir);
  const ExperimentOutput output =
      run_experiment(config, filter, workers, quiet ? nullptr : &std::cerr);
  if (output.records.empty()) {
    std::cerr << "error: filter matched no cells\n";
    return kExitConfig;
  }

  const fs::path base(out_dir);
  write_file(base / "manifest.json", [&](std::ostream& os) {
    write_manifest_json(os, config, filter, output);
  });
  write_file(base / "convergence.csv", [&](std::ostream& os) {
    write_convergence_csv(os, output.records);
  });
  write_file(base / "finals.csv", [&](std::ostream& os) {
    write_finals_csv(os, output.records);
  });
  write_file(base / "summary.csv", [&](std::ostream& os) {
    write_summary_csv(os, summarize(output.records));
  });
  if (!quiet) {
    std::cerr << "wrote manifest.json, convergence.csv, finals.csv, summary.csv to "
              << out_dir << "\n";
  }
  return kExitOk;
}

int cmd_stats(const std::string& finals_path, const std::string& out_path,
              double alpha) {
  std::ifstream in(finals_path);
  if (!in) {
    std::cerr << "error: cannot open " << finals_path << "\n";
    return kExitConfig;
  }
  const auto cells = stats::read_finals_csv(in);
  if (cells.empty()) {
    std::cerr << "error: " << finals_path << " holds no data rows\n";
    return kExitConfig;
  }
  const auto rows = stats::build_stats_report(cells, alpha);
  write_file(out_path, [&](std::ostream& os) {
    stats::write_stats_report_csv(os, rows);
  });

  std::cout << "non-significant pairs against each cell's best-mean algorithm "
               "(alpha = "
            << alpha << "):\n";
  std::cout << "problem,dim,pair,p_value\n";
  for (const auto& pair : stats::nonsignificant_vs_best(cells, alpha)) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", pair.p_value);
    std::cout << pair.problem << ',' << pair.dim << ',' << pair.pair << ','
              << buf << '\n';
  }
  std::cout << "full pairwise report written to " << out_path << "\n";
  return kExitOk;
}

int cmd_list() {
  std::cout << "benchmarks:\n";
  for (BenchmarkId id : kAllBenchmarks) {
    const SearchSpace space = benchmark_domain(id, 2);
    std::cout << "  " << benchmark_name(id) << "  domain [" << space.lower()[0]
              << ", " << space.upper()[0] << "]^n\n";
  }
  std::cout << "\nalgorithms (default parameter sets):\n";
  for (const AlgorithmSpec& spec : default_algorithms()) {
    std::cout << "  " << spec.name << ":";
    if (spec.id != AlgorithmId::Pso) {
      std::cout << " crossover_rate=" << spec.crossover_rate
                << " mutation_rate=" << spec.mutation_rate_numerator << "/n"
                << " sbx_index=" << spec.sbx_index
                << " mutation_index=" << spec.mutation_index;
    }
    if (spec.id != AlgorithmId::Ga) {
      std::cout << " c1=" << spec.c1 << " c2=" << spec.c2
                << " w=" << spec.inertia_weight
                << " vmax_fraction=" << spec.vmax_fraction;
    }
    if (spec.id == AlgorithmId::Pgshea) {
      std::cout << " swap_interval=" << spec.swap_interval << " start="
                << phase_name(spec.starting_algorithm);
    }
    if (spec.id == AlgorithmId::Pgphea) {
      std::cout << " exchange_interval=" << spec.exchange_interval
                << " exchange_number=" << spec.exchange_number;
    }
    if (spec.id == AlgorithmId::Pgchea) {
      std::cout << " start=" << phase_name(spec.starting_algorithm);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_bench(const std::string& problem, std::size_t dim,
              const std::string& point_csv, bool at_optimum,
              std::uint64_t instance_seed_value) {
  const auto id = benchmark_from_name(problem);
  if (!id) {
    std::cerr << "error: unknown benchmark '" << problem << "'\n";
    return kExitConfig;
  }
  BenchmarkSpec spec{*id, dim, std::nullopt, std::nullopt};
  if (*id == BenchmarkId::ShiftedRotatedWeierstrass) {
    RngStream rng(instance_seed_value);
    spec = make_weierstrass_instance(dim, rng);
  }
  std::vector<double> x;
  if (at_optimum) {
    if (*id == BenchmarkId::ShiftedRotatedWeierstrass) {
      x = *spec.shift;
    } else if (auto opt = benchmark_optimum(*id, dim)) {
      x = *opt;
    } else {
      std::cerr << "error: " << problem << " has no catalogued optimum\n";
      return kExitConfig;
    }
  } else {
    std::stringstream ss(point_csv);
    std::string item;
    while (std::getline(ss, item, ',')) x.push_back(std::stod(item));
    if (x.size() != dim) {
      std::cerr << "error: point has " << x.size() << " coordinates, expected "
                << dim << "\n";
      return kExitConfig;
    }
  }
  Objective objective = make_objective(spec);
  std::cout << format_double(objective.evaluate(x)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"black-box optimization benchmark harness (GA, PSO, and PSO-GA hybrids)"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "execute an experiment grid from a JSON config");
  std::string config_path;
  std::string out_dir = "results";
  std::vector<std::string> filter_specs;
  std::optional<std::uint64_t> seed_override;
  unsigned workers = default_workers();
  bool quiet = false;
  run->add_option("--config", config_path, "experiment config (JSON)")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--filter", filter_specs,
                  "cell filter, e.g. problem=rastrigin,dim=10 (repeatable; globs ok)");
  run->add_option("--seed", seed_override, "override the config's master seed");
  run->add_option("--workers", workers,
                  "concurrent runs (default: $EVOBENCH_WORKERS or hardware)");
  run->add_flag("--quiet", quiet, "suppress progress output");

  // stats
  auto* stats_cmd =
      app.add_subcommand("stats", "nonparametric comparison from a finals.csv");
  std::string finals_path = "results/finals.csv";
  std::string report_path = "results/stats_report.csv";
  double alpha = 0.05;
  stats_cmd->add_option("--finals", finals_path, "finals.csv produced by 'run'");
  stats_cmd->add_option("--out", report_path, "stats report output path");
  stats_cmd->add_option("--alpha", alpha, "significance level (default 0.05)");

  // list
  app.add_subcommand("list", "list benchmarks, algorithms, and default parameters");

  // bench
  auto* bench = app.add_subcommand("bench", "evaluate one benchmark at a point");
  std::string bench_problem;
  std::size_t bench_dim = 2;
  std::string bench_point;
  bool bench_at_optimum = false;
  std::uint64_t bench_seed = 1;
  bench->add_option("--problem", bench_problem, "benchmark name")->required();
  bench->add_option("--dim", bench_dim, "dimensionality")->required();
  bench->add_option("--point", bench_point, "comma-separated coordinates");
  bench->add_flag("--at-optimum", bench_at_optimum,
                  "evaluate at the catalogued optimum instead of --point");
  bench->add_option("--instance-seed", bench_seed,
                    "seed for the shifted/rotated instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (app.got_subcommand("run")) {
      return cmd_run(config_path, out_dir, filter_specs, seed_override, workers,
                     quiet);
    }
    if (app.got_subcommand("stats")) {
      return cmd_stats(finals_path, report_path, alpha);
    }
    if (app.got_subcommand("list")) {
      return cmd_list();
    }
    if (app.got_subcommand("bench")) {
      return cmd_bench(bench_problem, bench_dim, bench_point, bench_at_optimum,
                       bench_seed);
    }
  } catch (const ConfigurationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
