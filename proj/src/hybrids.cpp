#include "evobench/hybrids.hpp"

#include <algorithm>
#include <numeric>

namespace evobench {

void PgsheaConfig::validate() const {
  if (population_size < 2) {
    throw ConfigurationError("PgsheaConfig: population_size must be >= 2");
  }
  if (swap_interval == 0) {
    throw ConfigurationError("PgsheaConfig: swap_interval must be >= 1");
  }
  PsoConfig p = pso;
  p.population_size = population_size;
  p.validate();
  variation.validate();
}

PgsheaOptimizer::PgsheaOptimizer(PgsheaConfig config, SearchSpace space,
                                 std::uint64_t max_evaluations,
                                 std::uint64_t seed)
    : config_(std::move(config)),
      space_(std::move(space)),
      state_(EvaluationBudget(max_evaluations)),
      rng_(seed) {
  config_.validate();
  config_.pso.population_size = config_.population_size;
  state_.phase = config_.starting_algorithm;
}

void PgsheaOptimizer::init(Objective& objective) {
  if (initialized_) throw ContractViolation("PgsheaOptimizer: init called twice");
  if (!state_.budget.try_consume(config_.population_size)) {
    throw InitializationError("PGSHEA: budget cannot cover initial population");
  }
  state_.population.reserve(config_.population_size);
  for (std::size_t i = 0; i < config_.population_size; ++i) {
    state_.population.push_back(
        state_.phase == Phase::Pso
            ? random_particle(config_.pso, space_, objective, rng_)
            : random_individual(space_, objective, rng_));
    const Individual& ind = state_.population.back();
    state_.global_best.update(ind.position, *ind.fitness);
  }
  initialized_ = true;
}

void PgsheaOptimizer::switch_phase() {
  if (state_.phase == Phase::Pso) {
    for (Individual& ind : state_.population) ind.drop_particle_state();
    state_.phase = Phase::Ga;
  } else {
    for (Individual& ind : state_.population) {
      attach_particle_state(ind, config_.pso, space_, rng_);
    }
    state_.phase = Phase::Pso;
  }
}

bool PgsheaOptimizer::step(Objective& objective) {
  if (!initialized_) throw ContractViolation("PgsheaOptimizer: step before init");
  if (!state_.budget.try_consume(config_.population_size)) return false;
  if (state_.phase == Phase::Pso) {
    const std::vector<double> guide = state_.global_best.position;
    pso_iteration(state_.population, config_.pso, space_, objective, rng_, guide,
                  state_.global_best);
  } else {
    ga_generation(state_.population, config_.variation, space_, objective, rng_,
                  /*inherit_particle_state=*/false, state_.global_best);
  }
  if (config_.swap_interval != kNeverSwap &&
      ++steps_in_phase_ == config_.swap_interval) {
    switch_phase();
    steps_in_phase_ = 0;
  }
  return true;
}

void PgpheaConfig::validate() const {
  if (population_size < 4) {
    throw ConfigurationError("PgpheaConfig: population_size must be >= 4");
  }
  if (exchange_interval == 0) {
    throw ConfigurationError("PgpheaConfig: exchange_interval must be >= 1");
  }
  if (exchange_number < 1 || exchange_number > population_size / 2) {
    throw ConfigurationError("PgpheaConfig: exchange_number must lie in [1, N/2]");
  }
  PsoConfig p = pso;
  p.population_size = population_size;
  p.validate();
  variation.validate();
}

PgpheaOptimizer::PgpheaOptimizer(PgpheaConfig config, SearchSpace space,
                                 std::uint64_t max_evaluations,
                                 std::uint64_t seed)
    : config_(std::move(config)),
      space_(std::move(space)),
      state_(EvaluationBudget(max_evaluations)),
      ga_count_((config_.population_size + 1) / 2),  // GA gets the odd one
      seed_rng_(seed) {
  config_.validate();
  config_.pso.population_size = config_.population_size - ga_count_;
  // Independent substreams keep each side's dynamics identical to a
  // stand-alone run on the same half population.
  ga_rng_.emplace(seed_rng_.split());
  pso_rng_.emplace(seed_rng_.split());
}

void PgpheaOptimizer::init(Objective& objective) {
  if (initialized_) throw ContractViolation("PgpheaOptimizer: init called twice");
  if (!state_.budget.try_consume(config_.population_size)) {
    throw InitializationError("PGPHEA: budget cannot cover initial population");
  }
  state_.population.reserve(config_.population_size);
  for (std::size_t i = 0; i < ga_count_; ++i) {
    state_.population.push_back(random_individual(space_, objective, *ga_rng_));
  }
  for (std::size_t i = ga_count_; i < config_.population_size; ++i) {
    state_.population.push_back(
        random_particle(config_.pso, space_, objective, *pso_rng_));
    const Individual& p = state_.population.back();
    pso_guidance_.update(p.position, *p.fitness);
  }
  for (const Individual& ind : state_.population) {
    state_.global_best.update(ind.position, *ind.fitness);
  }
  initialized_ = true;
}

namespace {

/// Indices of the `count` best individuals in `pop`, fitness ascending,
/// earlier slots first on ties.
std::vector<std::size_t> top_indices(std::span<const Individual> pop,
                                     std::size_t count) {
  std::vector<std::size_t> idx(pop.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return *pop[a].fitness < *pop[b].fitness;
  });
  idx.resize(count);
  return idx;
}

}  // namespace

void pgphea_exchange(std::span<Individual> ga_part,
                     std::span<Individual> pso_part, std::size_t n_e,
                     const PsoConfig& pso_config, const SearchSpace& space,
                     RngStream& rng, BestSoFar& pso_guidance) {
  if (n_e > ga_part.size() || n_e > pso_part.size()) {
    throw ContractViolation("pgphea_exchange: exchange number exceeds a subpopulation");
  }
  const auto ga_top = top_indices(ga_part, n_e);
  const auto pso_top = top_indices(pso_part, n_e);
  for (std::size_t k = 0; k < n_e; ++k) {
    Individual& g = ga_part[ga_top[k]];
    Individual& p = pso_part[pso_top[k]];
    std::swap(g.position, p.position);
    std::swap(g.fitness, p.fitness);
    // The particle slot now holds a GA solution: new momentum, fresh memory.
    attach_particle_state(p, pso_config, space, rng);
    pso_guidance.update(p.position, *p.fitness);
    // The GA slot holds an ex-particle: position and fitness only.
    g.drop_particle_state();
  }
}

void PgpheaOptimizer::exchange() {
  auto ga_part = std::span<Individual>(state_.population.data(), ga_count_);
  auto pso_part = std::span<Individual>(state_.population.data() + ga_count_,
                                        state_.population.size() - ga_count_);
  pgphea_exchange(ga_part, pso_part, config_.exchange_number, config_.pso,
                  space_, *pso_rng_, pso_guidance_);
}

bool PgpheaOptimizer::step(Objective& objective) {
  if (!initialized_) throw ContractViolation("PgpheaOptimizer: step before init");
  if (!state_.budget.try_consume(config_.population_size)) return false;

  auto pso_part = std::span<Individual>(state_.population.data() + ga_count_,
                                        state_.population.size() - ga_count_);
  const std::vector<double> guide = pso_guidance_.position;
  pso_iteration(pso_part, config_.pso, space_, objective, *pso_rng_, guide,
                pso_guidance_);

  // ga_generation wants a vector; operate on a copy of the GA slots.
  std::vector<Individual> ga_pop(
      state_.population.begin(),
      state_.population.begin() + static_cast<std::ptrdiff_t>(ga_count_));
  ga_generation(ga_pop, config_.variation, space_, objective, *ga_rng_,
                /*inherit_particle_state=*/false, state_.global_best);
  std::move(ga_pop.begin(), ga_pop.end(), state_.population.begin());

  // Barrier: synchronize the reported global best from both sides.
  state_.global_best.update(pso_guidance_.position, pso_guidance_.fitness);

  if (config_.exchange_interval != kNeverSwap &&
      ++joint_steps_ % config_.exchange_interval == 0) {
    exchange();
  }
  return true;
}

void PgcheaConfig::validate() const {
  if (population_size < 2) {
    throw ConfigurationError("PgcheaConfig: population_size must be >= 2");
  }
  PsoConfig p = pso;
  p.population_size = population_size;
  p.validate();
  variation.validate();
}

PgcheaOptimizer::PgcheaOptimizer(PgcheaConfig config, SearchSpace space,
                                 std::uint64_t max_evaluations,
                                 std::uint64_t seed)
    : config_(std::move(config)),
      space_(std::move(space)),
      state_(EvaluationBudget(max_evaluations)),
      rng_(seed) {
  config_.validate();
  config_.pso.population_size = config_.population_size;
  state_.phase = config_.starting_algorithm;
}

void PgcheaOptimizer::init(Objective& objective) {
  if (initialized_) throw ContractViolation("PgcheaOptimizer: init called twice");
  if (!state_.budget.try_consume(config_.population_size)) {
    throw InitializationError("PGCHEA: budget cannot cover initial population");
  }
  // Every individual is a particle from the start, whatever the first phase.
  state_.population.reserve(config_.population_size);
  for (std::size_t i = 0; i < config_.population_size; ++i) {
    state_.population.push_back(
        random_particle(config_.pso, space_, objective, rng_));
    const Individual& p = state_.population.back();
    state_.global_best.update(p.position, *p.fitness);
  }
  initialized_ = true;
}

bool PgcheaOptimizer::step(Objective& objective) {
  if (!initialized_) throw ContractViolation("PgcheaOptimizer: step before init");
  if (!state_.budget.try_consume(config_.population_size)) return false;
  if (state_.phase == Phase::Pso) {
    const std::vector<double> guide = state_.global_best.position;
    pso_iteration(state_.population, config_.pso, space_, objective, rng_, guide,
                  state_.global_best);
    state_.phase = Phase::Ga;
  } else {
    ga_generation(state_.population, config_.variation, space_, objective, rng_,
                  /*inherit_particle_state=*/true, state_.global_best);
    for (Individual& ind : state_.population) {
      if (*ind.fitness < *ind.pbest_fitness) {
        ind.pbest_position = ind.position;
        ind.pbest_fitness = ind.fitness;
      }
    }
    state_.phase = Phase::Pso;
  }
  return true;
}

}  // namespace evobench
