#pragma once

#include <optional>
#include <vector>

#include "evobench/ga.hpp"
#include "evobench/pso.hpp"

namespace evobench {

inline constexpr std::uint64_t kNeverSwap = UINT64_MAX;

/// Sequential hybrid: the whole population runs one algorithm at a time and
/// switches after every `swap_interval` steps of the active algorithm.
/// Velocity and personal-best memory exist only during PSO phases: a GA->PSO
/// switch re-randomizes velocities and resets personal bests to the current
/// position; a PSO->GA switch discards both. The global best survives
/// switches and serves as the PSO guidance, but is never injected into the
/// population.
struct PgsheaConfig {
  std::size_t population_size = 100;
  PsoConfig pso;
  VariationParams variation;
  std::uint64_t swap_interval = 13;
  Phase starting_algorithm = Phase::Pso;

  void validate() const;
};

class PgsheaOptimizer final : public Optimizer {
 public:
  PgsheaOptimizer(PgsheaConfig config, SearchSpace space,
                  std::uint64_t max_evaluations, std::uint64_t seed);

  void init(Objective& objective) override;
  bool step(Objective& objective) override;
  const OptimizerState& state() const override { return state_; }

 private:
  void switch_phase();

  PgsheaConfig config_;
  SearchSpace space_;
  OptimizerState state_;
  RngStream rng_;
  std::uint64_t steps_in_phase_ = 0;
  bool initialized_ = false;
};

/// Parallel hybrid: GA evolves the first ceil(N/2) slots, PSO the rest, each
/// on its own derived random stream. Every `exchange_interval` joint steps
/// the rank-matched top exchange_number solutions of the two subpopulations
/// swap positional vectors (with fitness); migrants entering the PSO side get
/// fresh random velocities and a personal best equal to their position, while
/// migrants entering the GA side carry position and fitness only.
///
/// The PSO side is guided by its own best-evaluated-so-far record (which also
/// absorbs incoming migrants); the reported global best is synchronized from
/// both sides after every joint step.
struct PgpheaConfig {
  std::size_t population_size = 100;
  PsoConfig pso;
  VariationParams variation;
  std::uint64_t exchange_interval = 13;
  std::size_t exchange_number = 7;

  void validate() const;
};

/// The migration primitive: rank-matched position/fitness swap between the
/// top n_e members of each subpopulation, with particle-state bookkeeping on
/// both sides. New arrivals on the PSO side are reported to `pso_guidance`.
void pgphea_exchange(std::span<Individual> ga_part,
                     std::span<Individual> pso_part, std::size_t n_e,
                     const PsoConfig& pso_config, const SearchSpace& space,
                     RngStream& rng, BestSoFar& pso_guidance);

class PgpheaOptimizer final : public Optimizer {
 public:
  PgpheaOptimizer(PgpheaConfig config, SearchSpace space,
                  std::uint64_t max_evaluations, std::uint64_t seed);

  void init(Objective& objective) override;
  bool step(Objective& objective) override;
  const OptimizerState& state() const override { return state_; }

  std::span<const Individual> ga_population() const {
    return {state_.population.data(), ga_count_};
  }
  std::span<const Individual> pso_population() const {
    return {state_.population.data() + ga_count_,
            state_.population.size() - ga_count_};
  }

 private:
  void exchange();

  PgpheaConfig config_;
  SearchSpace space_;
  OptimizerState state_;
  std::size_t ga_count_;
  BestSoFar pso_guidance_;
  std::uint64_t joint_steps_ = 0;
  std::optional<RngStream> ga_rng_;
  std::optional<RngStream> pso_rng_;
  RngStream seed_rng_;
  bool initialized_ = false;
};

/// Consecutive hybrid: strict PSO/GA step alternation over one population in
/// which every individual permanently carries velocity and personal-best
/// memory. GA steps use the inheriting crossover so offspring keep their
/// parents' momentum, and after each GA step every survivor's personal best
/// is refreshed against its current position.
struct PgcheaConfig {
  std::size_t population_size = 100;
  PsoConfig pso;
  VariationParams variation;
  Phase starting_algorithm = Phase::Pso;

  void validate() const;
};

class PgcheaOptimizer final : public Optimizer {
 public:
  PgcheaOptimizer(PgcheaConfig config, SearchSpace space,
                  std::uint64_t max_evaluations, std::uint64_t seed);

  void init(Objective& objective) override;
  bool step(Objective& objective) override;
  const OptimizerState& state() const override { return state_; }

 private:
  PgcheaConfig config_;
  SearchSpace space_;
  OptimizerState state_;
  RngStream rng_;
  bool initialized_ = false;
};

}  // namespace evobench
