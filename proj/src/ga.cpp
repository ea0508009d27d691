#include "evobench/ga.hpp"

#include "evobench/pso.hpp"

namespace evobench {

void ga_generation(std::vector<Individual>& population,
                   const VariationParams& params, const SearchSpace& space,
                   Objective& objective, RngStream& rng,
                   bool inherit_particle_state, BestSoFar& best) {
  const std::size_t n = population.size();
  if (n < 2) throw ContractViolation("ga_generation: population must have >= 2 members");

  std::vector<Individual> pool;
  pool.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pool.push_back(tournament_select(population, rng));
  }

  std::vector<Individual> offspring;
  offspring.reserve(n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    auto [c1, c2] = inherit_particle_state
                        ? sbx_crossover_inheriting(pool[i], pool[i + 1], params,
                                                   space, rng)
                        : sbx_crossover(pool[i], pool[i + 1], params, space, rng);
    offspring.push_back(std::move(c1));
    offspring.push_back(std::move(c2));
  }
  if (n % 2 == 1) offspring.push_back(pool.back());

  for (Individual& child : offspring) {
    polynomial_mutation(child, params, space, rng);
    child.fitness = objective.evaluate(child.position);
    best.update(child.position, *child.fitness);
  }

  population = replace_truncation(std::move(population), std::move(offspring), n);
}

GaOptimizer::GaOptimizer(GaConfig config, SearchSpace space,
                         std::uint64_t max_evaluations, std::uint64_t seed)
    : config_(std::move(config)),
      space_(std::move(space)),
      state_(EvaluationBudget(max_evaluations)),
      rng_(seed) {
  config_.validate();
  state_.phase = Phase::Ga;
}

void GaOptimizer::init(Objective& objective) {
  if (initialized_) throw ContractViolation("GaOptimizer: init called twice");
  if (!state_.budget.try_consume(config_.population_size)) {
    throw InitializationError("GA: budget cannot cover initial population");
  }
  state_.population.reserve(config_.population_size);
  for (std::size_t i = 0; i < config_.population_size; ++i) {
    state_.population.push_back(random_individual(space_, objective, rng_));
    const Individual& ind = state_.population.back();
    state_.global_best.update(ind.position, *ind.fitness);
  }
  initialized_ = true;
}

bool GaOptimizer::step(Objective& objective) {
  if (!initialized_) throw ContractViolation("GaOptimizer: step before init");
  if (!state_.budget.try_consume(config_.population_size)) return false;
  ga_generation(state_.population, config_.variation, space_, objective, rng_,
                /*inherit_particle_state=*/false, state_.global_best);
  ++generations_;
  return true;
}

}  // namespace evobench
