#include "evobench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>
#include <thread>

#include "evobench/ga.hpp"
#include "evobench/hybrids.hpp"
#include "evobench/pso.hpp"

namespace evobench {
namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t chain(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ v);
}

VariationParams variation_for(const AlgorithmSpec& spec, std::size_t dim) {
  VariationParams vp;
  vp.crossover_rate = spec.crossover_rate;
  vp.mutation_rate =
      std::min(1.0, spec.mutation_rate_numerator / static_cast<double>(dim));
  vp.sbx_index = spec.sbx_index;
  vp.mutation_index = spec.mutation_index;
  return vp;
}

PsoConfig pso_for(const AlgorithmSpec& spec, std::size_t population_size) {
  PsoConfig pc;
  pc.population_size = population_size;
  pc.c1 = spec.c1;
  pc.c2 = spec.c2;
  pc.w = spec.inertia_weight;
  pc.vmax_fraction = spec.vmax_fraction;
  return pc;
}

}  // namespace

std::string algorithm_label(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::Ga: return "GA";
    case AlgorithmId::Pso: return "PSO";
    case AlgorithmId::Pgshea: return "PGSHEA";
    case AlgorithmId::Pgphea: return "PGPHEA";
    case AlgorithmId::Pgchea: return "PGCHEA";
  }
  throw ContractViolation("algorithm_label: unknown id");
}

std::optional<AlgorithmId> algorithm_from_label(std::string_view label) {
  const std::string l = to_lower(label);
  for (AlgorithmId id : kAllAlgorithms) {
    if (to_lower(algorithm_label(id)) == l) return id;
  }
  return std::nullopt;
}

std::vector<AlgorithmSpec> default_algorithms() {
  std::vector<AlgorithmSpec> out;

  AlgorithmSpec ga;
  ga.id = AlgorithmId::Ga;
  ga.name = "GA";
  ga.crossover_rate = 0.9;
  ga.mutation_rate_numerator = 1.0;
  out.push_back(ga);

  AlgorithmSpec pso;
  pso.id = AlgorithmId::Pso;
  pso.name = "PSO";
  pso.c1 = 1.97;
  pso.c2 = 0.94;
  pso.inertia_weight = 0.56;
  out.push_back(pso);

  AlgorithmSpec shea;
  shea.id = AlgorithmId::Pgshea;
  shea.name = "PGSHEA";
  shea.crossover_rate = 1.0;
  shea.mutation_rate_numerator = 0.38;
  shea.c1 = 2.63;
  shea.c2 = 0.21;
  shea.inertia_weight = 0.01;
  shea.swap_interval = 13;
  shea.starting_algorithm = Phase::Pso;
  out.push_back(shea);

  AlgorithmSpec phea;
  phea.id = AlgorithmId::Pgphea;
  phea.name = "PGPHEA";
  phea.crossover_rate = 1.0;
  phea.mutation_rate_numerator = 0.37;
  phea.c1 = 0.01;
  phea.c2 = 0.26;
  phea.inertia_weight = 0.17;
  phea.exchange_interval = 13;
  phea.exchange_number = 7;
  out.push_back(phea);

  AlgorithmSpec chea;
  chea.id = AlgorithmId::Pgchea;
  chea.name = "PGCHEA";
  chea.crossover_rate = 1.0;
  chea.mutation_rate_numerator = 0.61;
  chea.c1 = 1.85;
  chea.c2 = 0.5;
  chea.inertia_weight = 1.53;
  chea.starting_algorithm = Phase::Pso;
  out.push_back(chea);

  return out;
}

std::uint64_t ExperimentConfig::budget_for(std::size_t dim) const {
  if (const auto it = budgets.find(dim); it != budgets.end()) return it->second;
  if (default_budget) return *default_budget;
  throw ConfigurationError("no budget rule covers dimension " + std::to_string(dim));
}

void ExperimentConfig::validate() const {
  if (problems.empty()) throw ConfigurationError("config: no problems listed");
  if (dimensions.empty()) throw ConfigurationError("config: no dimensions listed");
  if (algorithms.empty()) throw ConfigurationError("config: no algorithms listed");
  if (runs_per_cell < 1) throw ConfigurationError("config: runs_per_cell must be >= 1");
  if (population_size < 2) throw ConfigurationError("config: population_size must be >= 2");
  if (trace_stride < 1) throw ConfigurationError("config: trace_stride must be >= 1");
  for (std::size_t dim : dimensions) {
    if (dim == 0) throw ConfigurationError("config: dimension 0 is invalid");
    (void)budget_for(dim);  // must be covered
    if (budget_for(dim) < population_size) {
      throw ConfigurationError("config: budget below one population evaluation");
    }
  }
  for (const AlgorithmSpec& alg : algorithms) {
    if (alg.name.empty()) throw ConfigurationError("config: algorithm with empty name");
    if (alg.id == AlgorithmId::Pgphea &&
        alg.exchange_number > population_size / 2) {
      throw ConfigurationError("config: exchange_number must be <= N/2");
    }
  }
}

bool glob_match(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) return true;
  std::size_t p = 0;
  std::size_t t = 0;
  std::size_t star = std::string_view::npos;
  std::size_t match = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      match = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++match;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

bool CellFilter::matches(std::string_view problem_name, std::size_t dimension,
                         std::string_view algorithm_name) const {
  return glob_match(to_lower(problem), to_lower(problem_name)) &&
         glob_match(dim, std::to_string(dimension)) &&
         glob_match(to_lower(algorithm), to_lower(algorithm_name));
}

std::uint64_t run_seed(std::uint64_t master_seed, std::string_view problem,
                       std::size_t dim, std::string_view algorithm,
                       int run_index) {
  std::uint64_t h = splitmix64(master_seed);
  h = chain(h, fnv1a(problem));
  h = chain(h, static_cast<std::uint64_t>(dim));
  h = chain(h, fnv1a(algorithm));
  h = chain(h, static_cast<std::uint64_t>(run_index));
  return h;
}

std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t dim) {
  std::uint64_t h = splitmix64(master_seed);
  h = chain(h, fnv1a("weierstrass-instance"));
  h = chain(h, static_cast<std::uint64_t>(dim));
  return h;
}

std::unique_ptr<Optimizer> make_optimizer(const AlgorithmSpec& spec,
                                          std::size_t population_size,
                                          const SearchSpace& space,
                                          std::uint64_t max_evaluations,
                                          std::uint64_t seed) {
  const std::size_t dim = space.dim();
  switch (spec.id) {
    case AlgorithmId::Ga: {
      GaConfig cfg;
      cfg.population_size = population_size;
      cfg.variation = variation_for(spec, dim);
      return std::make_unique<GaOptimizer>(cfg, space, max_evaluations, seed);
    }
    case AlgorithmId::Pso: {
      return std::make_unique<PsoOptimizer>(pso_for(spec, population_size),
                                            space, max_evaluations, seed);
    }
    case AlgorithmId::Pgshea: {
      PgsheaConfig cfg;
      cfg.population_size = population_size;
      cfg.pso = pso_for(spec, population_size);
      cfg.variation = variation_for(spec, dim);
      cfg.swap_interval = spec.swap_interval;
      cfg.starting_algorithm = spec.starting_algorithm;
      return std::make_unique<PgsheaOptimizer>(cfg, space, max_evaluations, seed);
    }
    case AlgorithmId::Pgphea: {
      PgpheaConfig cfg;
      cfg.population_size = population_size;
      cfg.pso = pso_for(spec, population_size);
      cfg.variation = variation_for(spec, dim);
      cfg.exchange_interval = spec.exchange_interval;
      cfg.exchange_number = spec.exchange_number;
      return std::make_unique<PgpheaOptimizer>(cfg, space, max_evaluations, seed);
    }
    case AlgorithmId::Pgchea: {
      PgcheaConfig cfg;
      cfg.population_size = population_size;
      cfg.pso = pso_for(spec, population_size);
      cfg.variation = variation_for(spec, dim);
      cfg.starting_algorithm = spec.starting_algorithm;
      return std::make_unique<PgcheaOptimizer>(cfg, space, max_evaluations, seed);
    }
  }
  throw ContractViolation("make_optimizer: unknown algorithm");
}

RunRecord execute_run(const ExperimentConfig& config, BenchmarkId problem,
                      std::size_t dim, const AlgorithmSpec& algorithm,
                      int run_index, const BenchmarkSpec& instance) {
  const auto t0 = std::chrono::steady_clock::now();

  RunRecord rec;
  rec.problem = benchmark_name(problem);
  rec.dim = dim;
  rec.algorithm = algorithm.name;
  rec.run_index = run_index;
  rec.seed = run_seed(config.master_seed, rec.problem, dim, rec.algorithm,
                      run_index);

  Objective objective = make_objective(instance);
  const SearchSpace& space = objective.space();
  const std::uint64_t budget = config.budget_for(dim);
  auto optimizer = make_optimizer(algorithm, config.population_size, space,
                                  budget, rec.seed);

  std::uint64_t next_mark = config.trace_stride;
  const auto sample_trace = [&] {
    const OptimizerState& st = optimizer->state();
    while (next_mark <= st.budget.consumed()) {
      rec.trace.push_back({next_mark, st.global_best.fitness});
      next_mark += config.trace_stride;
    }
  };

  optimizer->init(objective);
  sample_trace();
  while (optimizer->step(objective)) sample_trace();

  const OptimizerState& st = optimizer->state();
  rec.final_best_position = st.global_best.position;
  rec.final_best_fitness = st.global_best.fitness;
  rec.evaluations_consumed = st.budget.consumed();
  if (rec.evaluations_consumed != objective.evaluations()) {
    throw ContractViolation("evaluation accounting mismatch: budget=" +
                            std::to_string(rec.evaluations_consumed) + " counted=" +
                            std::to_string(objective.evaluations()));
  }
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

ExperimentOutput run_experiment(const ExperimentConfig& config,
                                const CellFilter& filter, unsigned workers,
                                std::ostream* progress) {
  config.validate();

  struct Task {
    BenchmarkId problem;
    std::size_t dim;
    const AlgorithmSpec* algorithm;
    int run_index;
    const BenchmarkSpec* instance;
  };

  ExperimentOutput out;

  // Weierstrass instances are fixed per dimension so every algorithm and run
  // in a cell faces the identical problem; they depend only on the master
  // seed, never on the filter or scheduling.
  std::map<std::size_t, BenchmarkSpec> srw;
  for (BenchmarkId problem : config.problems) {
    if (problem != BenchmarkId::ShiftedRotatedWeierstrass) continue;
    for (std::size_t dim : config.dimensions) {
      bool used = false;
      for (const AlgorithmSpec& alg : config.algorithms) {
        used = used || filter.matches(benchmark_name(problem), dim, alg.name);
      }
      if (used && !srw.contains(dim)) {
        RngStream rng(instance_seed(config.master_seed, dim));
        srw.emplace(dim, make_weierstrass_instance(dim, rng));
      }
    }
  }

  std::vector<Task> tasks;
  for (BenchmarkId problem : config.problems) {
    for (std::size_t dim : config.dimensions) {
      for (const AlgorithmSpec& alg : config.algorithms) {
        if (!filter.matches(benchmark_name(problem), dim, alg.name)) continue;
        const BenchmarkSpec* instance = nullptr;
        if (problem == BenchmarkId::ShiftedRotatedWeierstrass) {
          instance = &srw.at(dim);
        }
        for (int run = 0; run < config.runs_per_cell; ++run) {
          tasks.push_back({problem, dim, &alg, run, instance});
        }
      }
    }
  }

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex log_mutex;
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const auto body = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      try {
        BenchmarkSpec plain{task.problem, task.dim, std::nullopt, std::nullopt};
        const BenchmarkSpec& inst = task.instance ? *task.instance : plain;
        records[i] = execute_run(config, task.problem, task.dim,
                                 *task.algorithm, task.run_index, inst);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress != nullptr) {
        std::lock_guard lock(log_mutex);
        *progress << "[" << finished << "/" << tasks.size() << "] "
                  << records[i].problem << " n=" << records[i].dim << " "
                  << records[i].algorithm << " run " << records[i].run_index
                  << " best=" << format_double(records[i].final_best_fitness)
                  << "\n";
      }
    }
  };

  const unsigned nthreads =
      std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (nthreads == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(body);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  out.records = std::move(records);
  for (auto& [dim, spec] : srw) out.srw_instances.emplace_back(dim, spec);
  return out;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw ContractViolation("summarize: empty record set");
  std::vector<SummaryRow> rows;
  std::size_t i = 0;
  while (i < records.size()) {
    std::size_t j = i;
    std::vector<double> finals;
    while (j < records.size() && records[j].problem == records[i].problem &&
           records[j].dim == records[i].dim &&
           records[j].algorithm == records[i].algorithm) {
      finals.push_back(records[j].final_best_fitness);
      ++j;
    }
    SummaryRow row;
    row.problem = records[i].problem;
    row.dim = records[i].dim;
    row.algorithm = records[i].algorithm;
    row.runs = finals.size();
    const auto n = static_cast<double>(finals.size());
    double sum = 0.0;
    for (double f : finals) sum += f;
    row.mean = sum / n;
    double ss = 0.0;
    for (double f : finals) ss += (f - row.mean) * (f - row.mean);
    row.sd = finals.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    std::vector<double> sorted = finals;
    std::sort(sorted.begin(), sorted.end());
    row.min = sorted.front();
    row.max = sorted.back();
    row.median = sorted.size() % 2 == 1
                     ? sorted[sorted.size() / 2]
                     : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
    rows.push_back(std::move(row));
    i = j;
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_convergence_csv(std::ostream& os,
                           const std::vector<RunRecord>& records) {
  os << "problem,dim,algorithm,run,evaluations,best_fitness\n";
  for (const RunRecord& rec : records) {
    for (const TracePoint& pt : rec.trace) {
      os << rec.problem << ',' << rec.dim << ',' << rec.algorithm << ','
         << rec.run_index << ',' << pt.evaluations << ','
         << format_double(pt.best_fitness) << '\n';
    }
  }
}

void write_finals_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << "problem,dim,algorithm,run,final_fitness\n";
  for (const RunRecord& rec : records) {
    os << rec.problem << ',' << rec.dim << ',' << rec.algorithm << ','
       << rec.run_index << ',' << format_double(rec.final_best_fitness) << '\n';
  }
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "problem,dim,algorithm,mean,sd,min,median,max\n";
  for (const SummaryRow& row : rows) {
    os << row.problem << ',' << row.dim << ',' << row.algorithm << ','
       << format_double(row.mean) << ',' << format_double(row.sd) << ','
       << format_double(row.min) << ',' << format_double(row.median) << ','
       << format_double(row.max) << '\n';
  }
}

}  // namespace evobench
