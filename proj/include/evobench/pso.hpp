#pragma once

#include <span>
#include <vector>

#include "evobench/core.hpp"
#include "evobench/variation.hpp"

namespace evobench {

/// Global-best PSO parameters with inertia weight. Velocities are clamped to
/// +-vmax_fraction * (upper - lower) per dimension.
struct PsoConfig {
  std::size_t population_size = 100;
  double c1 = 1.97;
  double c2 = 0.94;
  double w = 0.56;
  double vmax_fraction = 0.5;

  void validate() const {
    if (population_size < 1) {
      throw ConfigurationError("PsoConfig: population_size must be >= 1");
    }
    if (c1 < 0.0 || c2 < 0.0 || w < 0.0 || !(vmax_fraction > 0.0)) {
      throw ConfigurationError("PsoConfig: coefficients must be non-negative, vmax positive");
    }
  }
};

/// New velocity for one particle: w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x)
/// with fresh r1, r2 per dimension, clamped to +-vmax per dimension.
template <UniformSource R>
std::vector<double> pso_velocity_update(const Individual& particle,
                                        std::span<const double> gbest_position,
                                        const PsoConfig& config,
                                        const SearchSpace& space, R& rng) {
  if (!particle.has_particle_state()) {
    throw ContractViolation("pso_velocity_update: particle lacks velocity/pbest");
  }
  const std::size_t dim = space.dim();
  if (particle.position.size() != dim || gbest_position.size() != dim) {
    throw ContractViolation("pso_velocity_update: dimension mismatch");
  }
  std::vector<double> v(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double r1 = rng.uniform();
    const double r2 = rng.uniform();
    const double x = particle.position[j];
    double vj = config.w * (*particle.velocity)[j] +
                config.c1 * r1 * ((*particle.pbest_position)[j] - x) +
                config.c2 * r2 * (gbest_position[j] - x);
    const double vmax = config.vmax_fraction * space.width(j);
    v[j] = std::min(vmax, std::max(-vmax, vj));
  }
  return v;
}

/// Turns an individual into a particle in place: fresh uniform velocity in
/// +-vmax and personal best reset to the current position/fitness.
void attach_particle_state(Individual& ind, const PsoConfig& config,
                           const SearchSpace& space, RngStream& rng);

/// Draws one uniform-random particle (position, velocity, pbest = self) and
/// evaluates it. Consumes dim position draws then dim velocity draws.
Individual random_particle(const PsoConfig& config, const SearchSpace& space,
                           Objective& objective, RngStream& rng);

/// Draws one uniform-random plain individual (no velocity/pbest) and
/// evaluates it.
Individual random_individual(const SearchSpace& space, Objective& objective,
                             RngStream& rng);

/// One synchronous PSO sweep over `swarm`: per particle velocity update,
/// position update (clamped), evaluation, and strict personal-best update.
/// `gbest_position` is the guidance from the end of the previous step and is
/// read-only here; every new evaluation is reported to `best`. The caller is
/// responsible for budget accounting.
void pso_iteration(std::span<Individual> swarm, const PsoConfig& config,
                   const SearchSpace& space, Objective& objective,
                   RngStream& rng, std::span<const double> gbest_position,
                   BestSoFar& best);

class PsoOptimizer final : public Optimizer {
 public:
  PsoOptimizer(PsoConfig config, SearchSpace space,
               std::uint64_t max_evaluations, std::uint64_t seed);

  void init(Objective& objective) override;
  bool step(Objective& objective) override;
  const OptimizerState& state() const override { return state_; }

 private:
  PsoConfig config_;
  SearchSpace space_;
  OptimizerState state_;
  RngStream rng_;
  bool initialized_ = false;
};

}  // namespace evobench
