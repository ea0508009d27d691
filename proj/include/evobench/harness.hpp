#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evobench/benchmarks.hpp"
#include "evobench/core.hpp"

namespace evobench {

enum class AlgorithmId { Ga, Pso, Pgshea, Pgphea, Pgchea };

inline constexpr AlgorithmId kAllAlgorithms[] = {
    AlgorithmId::Ga, AlgorithmId::Pso, AlgorithmId::Pgshea,
    AlgorithmId::Pgphea, AlgorithmId::Pgchea};

std::string algorithm_label(AlgorithmId id);
std::optional<AlgorithmId> algorithm_from_label(std::string_view label);

/// One algorithm column of the experiment grid. The mutation rate is stored
/// as a numerator and expands to numerator/dim at run time; PSO fields are
/// ignored by plain GA and GA fields by plain PSO.
struct AlgorithmSpec {
  AlgorithmId id = AlgorithmId::Ga;
  std::string name = "GA";

  double crossover_rate = 0.9;
  double mutation_rate_numerator = 1.0;
  double sbx_index = 15.0;
  double mutation_index = 20.0;

  double c1 = 1.97;
  double c2 = 0.94;
  double inertia_weight = 0.56;
  double vmax_fraction = 0.5;

  std::uint64_t swap_interval = 13;
  std::uint64_t exchange_interval = 13;
  std::size_t exchange_number = 7;
  Phase starting_algorithm = Phase::Pso;
};

/// The five reference parameter sets used by the shipped experiment config.
std::vector<AlgorithmSpec> default_algorithms();

struct ExperimentConfig {
  std::uint64_t master_seed = 20240917;
  std::size_t population_size = 100;
  int runs_per_cell = 10;
  std::uint64_t trace_stride = 100;
  std::vector<std::size_t> dimensions;
  std::map<std::size_t, std::uint64_t> budgets;
  std::optional<std::uint64_t> default_budget;
  std::vector<BenchmarkId> problems;
  std::vector<AlgorithmSpec> algorithms;

  std::uint64_t budget_for(std::size_t dim) const;
  void validate() const;
};

struct TracePoint {
  std::uint64_t evaluations;
  double best_fitness;
};

/// Complete deterministic record of one run.
struct RunRecord {
  std::string problem;
  std::size_t dim = 0;
  std::string algorithm;
  int run_index = 0;
  std::uint64_t seed = 0;
  std::vector<TracePoint> trace;
  std::vector<double> final_best_position;
  double final_best_fitness = kInfinity;
  std::uint64_t evaluations_consumed = 0;
  double wall_seconds = 0.0;
};

/// problem/dim/algorithm globs ('*' and '?'); empty pattern matches all.
struct CellFilter {
  std::string problem = "*";
  std::string dim = "*";
  std::string algorithm = "*";

  bool matches(std::string_view problem_name, std::size_t dimension,
               std::string_view algorithm_name) const;
};

bool glob_match(std::string_view pattern, std::string_view text);

struct SummaryRow {
  std::string problem;
  std::size_t dim = 0;
  std::string algorithm;
  std::size_t runs = 0;
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

/// Per-cell mean/sd/min/median/max of final fitness, cells in record order.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

// Deterministic seed derivation: independent of worker count and of which
// cells a filter selects, so a filtered re-run reproduces the full grid's
// runs exactly.
std::uint64_t run_seed(std::uint64_t master_seed, std::string_view problem,
                       std::size_t dim, std::string_view algorithm,
                       int run_index);
std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t dim);

std::unique_ptr<Optimizer> make_optimizer(const AlgorithmSpec& spec,
                                          std::size_t population_size,
                                          const SearchSpace& space,
                                          std::uint64_t max_evaluations,
                                          std::uint64_t seed);

/// One run of one grid cell. `instance` carries the shifted-rotated
/// Weierstrass machinery when the problem needs it.
RunRecord execute_run(const ExperimentConfig& config, BenchmarkId problem,
                      std::size_t dim, const AlgorithmSpec& algorithm,
                      int run_index, const BenchmarkSpec& instance);

struct ExperimentOutput {
  std::vector<RunRecord> records;
  /// Weierstrass instances actually used, one per dimension, in grid order.
  std::vector<std::pair<std::size_t, BenchmarkSpec>> srw_instances;
};

/// Executes the (filtered) grid with up to `workers` concurrent runs.
/// Records come back in grid order regardless of scheduling.
ExperimentOutput run_experiment(const ExperimentConfig& config,
                                const CellFilter& filter, unsigned workers,
                                std::ostream* progress = nullptr);

std::string format_double(double v);

void write_convergence_csv(std::ostream& os,
                           const std::vector<RunRecord>& records);
void write_finals_csv(std::ostream& os, const std::vector<RunRecord>& records);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);
void write_manifest_json(std::ostream& os, const ExperimentConfig& config,
                         const CellFilter& filter,
                         const ExperimentOutput& output);

}  // namespace evobench
