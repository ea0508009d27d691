#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace evobench {

/// Violation of a documented precondition (programming error, not input error).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an optimizer cannot even afford its initial population.
class InitializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Axis-aligned feasible box: per-dimension lower/upper bounds.
class SearchSpace {
 public:
  SearchSpace(std::vector<double> lower, std::vector<double> upper);

  /// Same [lo, hi] interval replicated over `dim` dimensions.
  static SearchSpace uniform_box(std::size_t dim, double lo, double hi);

  std::size_t dim() const noexcept { return lower_.size(); }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }
  double width(std::size_t j) const { return upper_[j] - lower_[j]; }
  bool contains(std::span<const double> x) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// One member of a population. Plain GA individuals carry just a position and
/// cached fitness; particles additionally carry a velocity and personal-best
/// memory. Fitness is empty until the objective has been evaluated at
/// `position`.
struct Individual {
  std::vector<double> position;
  std::optional<double> fitness;
  std::optional<std::vector<double>> velocity;
  std::optional<std::vector<double>> pbest_position;
  std::optional<double> pbest_fitness;

  bool evaluated() const noexcept { return fitness.has_value(); }
  bool has_particle_state() const noexcept {
    return velocity.has_value() && pbest_position.has_value() &&
           pbest_fitness.has_value();
  }
  void drop_particle_state() {
    velocity.reset();
    pbest_position.reset();
    pbest_fitness.reset();
  }
};

/// Hard cap on objective evaluations; the sole termination criterion.
/// Consumption is all-or-nothing so that a step which cannot be fully paid
/// for is never started.
class EvaluationBudget {
 public:
  explicit EvaluationBudget(std::uint64_t max_evaluations);

  /// Atomically consumes k evaluations if they fit; otherwise leaves the
  /// budget untouched and returns false.
  bool try_consume(std::uint64_t k);

  std::uint64_t consumed() const noexcept { return consumed_; }
  std::uint64_t max_evaluations() const noexcept { return max_; }
  std::uint64_t remaining() const noexcept { return max_ - consumed_; }

 private:
  std::uint64_t max_;
  std::uint64_t consumed_ = 0;
};

/// Deterministic random stream: same seed, same platform-independent draw
/// sequence. All stochastic operator draws go through this type; no
/// distribution object from <random> is used since their algorithms are
/// implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Child stream for (master seed, index) pairs; children with distinct
  /// indices do not share state with each other or the parent.
  static RngStream derive(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  /// Uniform index in {0, ..., n-1}; n >= 1.
  std::size_t uniform_index(std::size_t n);

  /// Standard normal via Box-Muller (deterministic, cached pair).
  double normal();

  /// Draws a seed suitable for an independent child stream.
  std::uint64_t split() { return next_u64(); }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer; used for seed derivation and hashing.
std::uint64_t splitmix64(std::uint64_t x);

/// Incumbent-preserving best-so-far tracker (ties keep the incumbent).
struct BestSoFar {
  std::vector<double> position;
  double fitness = kInfinity;

  bool update(std::span<const double> candidate, double candidate_fitness) {
    if (candidate_fitness < fitness) {
      position.assign(candidate.begin(), candidate.end());
      fitness = candidate_fitness;
      return true;
    }
    return false;
  }
};

enum class Phase { Pso, Ga };

inline const char* phase_name(Phase p) { return p == Phase::Pso ? "PSO" : "GA"; }

/// Shared optimizer snapshot: population, global best over every evaluation
/// made in the run, budget, and the active phase (meaningful for hybrids).
struct OptimizerState {
  explicit OptimizerState(EvaluationBudget b) : budget(b) {}

  std::vector<Individual> population;
  BestSoFar global_best;
  EvaluationBudget budget;
  Phase phase = Phase::Pso;
};

/// Named minimization objective with instrumented call counting.
class Objective {
 public:
  using EvalFn = std::function<double(std::span<const double>)>;

  Objective(std::string name, SearchSpace space, EvalFn fn);

  double evaluate(std::span<const double> x) {
    ++evaluations_;
    return fn_(x);
  }

  std::uint64_t evaluations() const noexcept { return evaluations_; }
  const SearchSpace& space() const noexcept { return space_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  SearchSpace space_;
  EvalFn fn_;
  std::uint64_t evaluations_ = 0;
};

/// Componentwise projection onto the box.
std::vector<double> clamp_to_bounds(std::vector<double> position,
                                    const SearchSpace& space);
void clamp_in_place(std::span<double> position, const SearchSpace& space);

/// Replaces the global best iff the candidate is strictly better.
inline bool update_global_best(OptimizerState& state,
                               std::span<const double> candidate_position,
                               double candidate_fitness) {
  return state.global_best.update(candidate_position, candidate_fitness);
}

/// Interface the experiment harness drives. Implementations own their
/// random stream; a (config, seed) pair fully determines the run.
class Optimizer {
 public:
  virtual ~Optimizer() = default;

  /// Evaluates the initial population. Throws InitializationError when the
  /// budget cannot cover it.
  virtual void init(Objective& objective) = 0;

  /// One algorithm step. Returns false (and changes nothing) when the
  /// remaining budget cannot cover the step; that signals run completion.
  virtual bool step(Objective& objective) = 0;

  virtual const OptimizerState& state() const = 0;
};

}  // namespace evobench
