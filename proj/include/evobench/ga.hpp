#pragma once

#include <span>
#include <vector>

#include "evobench/core.hpp"
#include "evobench/variation.hpp"

namespace evobench {

struct GaConfig {
  std::size_t population_size = 100;
  VariationParams variation;

  void validate() const {
    if (population_size < 2) {
      throw ConfigurationError("GaConfig: population_size must be >= 2");
    }
    variation.validate();
  }
};

/// One full GA generation over `population`, in place: a tournament mating
/// pool of population.size() parents paired consecutively, SBX (standard or
/// velocity/pbest-inheriting), polynomial mutation, evaluation of every
/// offspring, then truncation replacement over parents + offspring.
///
/// The caller must already have reserved population.size() evaluations; every
/// new evaluation is reported to `best`. With an odd population the last pool
/// member is carried over as a clone (SBX with itself is the identity) and
/// only mutated.
void ga_generation(std::vector<Individual>& population,
                   const VariationParams& params, const SearchSpace& space,
                   Objective& objective, RngStream& rng,
                   bool inherit_particle_state, BestSoFar& best);

class GaOptimizer final : public Optimizer {
 public:
  GaOptimizer(GaConfig config, SearchSpace space, std::uint64_t max_evaluations,
              std::uint64_t seed);

  void init(Objective& objective) override;
  bool step(Objective& objective) override;
  const OptimizerState& state() const override { return state_; }

  std::uint64_t generations() const noexcept { return generations_; }

 private:
  GaConfig config_;
  SearchSpace space_;
  OptimizerState state_;
  RngStream rng_;
  std::uint64_t generations_ = 0;
  bool initialized_ = false;
};

}  // namespace evobench
