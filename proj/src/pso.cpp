#include "evobench/pso.hpp"

namespace evobench {

void attach_particle_state(Individual& ind, const PsoConfig& config,
                           const SearchSpace& space, RngStream& rng) {
  const std::size_t dim = space.dim();
  std::vector<double> v(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double vmax = config.vmax_fraction * space.width(j);
    v[j] = rng.uniform(-vmax, vmax);
  }
  if (!ind.evaluated()) {
    throw ContractViolation("attach_particle_state: individual must be evaluated");
  }
  ind.velocity = std::move(v);
  ind.pbest_position = ind.position;
  ind.pbest_fitness = ind.fitness;
}

Individual random_individual(const SearchSpace& space, Objective& objective,
                             RngStream& rng) {
  Individual ind;
  ind.position.resize(space.dim());
  for (std::size_t j = 0; j < space.dim(); ++j) {
    ind.position[j] = rng.uniform(space.lower()[j], space.upper()[j]);
  }
  ind.fitness = objective.evaluate(ind.position);
  return ind;
}

Individual random_particle(const PsoConfig& config, const SearchSpace& space,
                           Objective& objective, RngStream& rng) {
  Individual ind;
  ind.position.resize(space.dim());
  for (std::size_t j = 0; j < space.dim(); ++j) {
    ind.position[j] = rng.uniform(space.lower()[j], space.upper()[j]);
  }
  std::vector<double> v(space.dim());
  for (std::size_t j = 0; j < space.dim(); ++j) {
    const double vmax = config.vmax_fraction * space.width(j);
    v[j] = rng.uniform(-vmax, vmax);
  }
  ind.fitness = objective.evaluate(ind.position);
  ind.velocity = std::move(v);
  ind.pbest_position = ind.position;
  ind.pbest_fitness = ind.fitness;
  return ind;
}

void pso_iteration(std::span<Individual> swarm, const PsoConfig& config,
                   const SearchSpace& space, Objective& objective,
                   RngStream& rng, std::span<const double> gbest_position,
                   BestSoFar& best) {
  for (Individual& particle : swarm) {
    particle.velocity =
        pso_velocity_update(particle, gbest_position, config, space, rng);
    for (std::size_t j = 0; j < space.dim(); ++j) {
      particle.position[j] += (*particle.velocity)[j];
    }
    clamp_in_place(particle.position, space);
    particle.fitness = objective.evaluate(particle.position);
    if (*particle.fitness < *particle.pbest_fitness) {
      particle.pbest_position = particle.position;
      particle.pbest_fitness = particle.fitness;
    }
    best.update(particle.position, *particle.fitness);
  }
}

PsoOptimizer::PsoOptimizer(PsoConfig config, SearchSpace space,
                           std::uint64_t max_evaluations, std::uint64_t seed)
    : config_(config),
      space_(std::move(space)),
      state_(EvaluationBudget(max_evaluations)),
      rng_(seed) {
  config_.validate();
}

void PsoOptimizer::init(Objective& objective) {
  if (initialized_) throw ContractViolation("PsoOptimizer: init called twice");
  if (!state_.budget.try_consume(config_.population_size)) {
    throw InitializationError("PSO: budget cannot cover initial population");
  }
  state_.population.reserve(config_.population_size);
  for (std::size_t i = 0; i < config_.population_size; ++i) {
    state_.population.push_back(random_particle(config_, space_, objective, rng_));
    const Individual& p = state_.population.back();
    state_.global_best.update(p.position, *p.fitness);
  }
  initialized_ = true;
}

bool PsoOptimizer::step(Objective& objective) {
  if (!initialized_) throw ContractViolation("PsoOptimizer: step before init");
  if (!state_.budget.try_consume(config_.population_size)) return false;
  // Synchronous semantics: guidance is the global best as of the previous
  // step, held in a copy while `global_best` itself absorbs new evaluations.
  const std::vector<double> guide = state_.global_best.position;
  pso_iteration(state_.population, config_, space_, objective, rng_, guide,
                state_.global_best);
  return true;
}

}  // namespace evobench
