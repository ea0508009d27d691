#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "evobench/core.hpp"

namespace evobench {

/// Source of U(0,1) draws; satisfied by RngStream and by the forced-value
/// stubs used in tests.
template <typename R>
concept UniformSource = requires(R r) {
  { r.uniform() } -> std::convertible_to<double>;
};

/// GA variation-operator parameters. Mutation is gated per gene, crossover
/// per parent pair.
struct VariationParams {
  double crossover_rate = 0.9;
  double mutation_rate = 0.1;
  double sbx_index = 15.0;
  double mutation_index = 20.0;

  void validate() const {
    if (crossover_rate < 0.0 || crossover_rate > 1.0 || mutation_rate < 0.0 ||
        mutation_rate > 1.0) {
      throw ConfigurationError("VariationParams: rates must lie in [0, 1]");
    }
    if (!(sbx_index > 0.0) || !(mutation_index > 0.0)) {
      throw ConfigurationError("VariationParams: distribution indices must be > 0");
    }
  }
};

/// Binary tournament under minimization: two uniform draws with replacement,
/// fitter wins, first-drawn wins ties.
template <UniformSource R>
const Individual& tournament_select(const std::vector<Individual>& population,
                                    R& rng) {
  if (population.empty()) {
    throw ContractViolation("tournament_select: empty population");
  }
  const Individual& a = population[rng.uniform_index(population.size())];
  const Individual& b = population[rng.uniform_index(population.size())];
  if (!a.evaluated() || !b.evaluated()) {
    throw ContractViolation("tournament_select: unevaluated individual");
  }
  return *a.fitness <= *b.fitness ? a : b;
}

namespace detail {

/// Shared SBX body. Draw order: one gate draw, then one spread draw per gene.
/// `inherit` copies parent k's velocity and personal best into child k;
/// otherwise children carry positions only.
template <UniformSource R>
std::pair<Individual, Individual> sbx_impl(const Individual& p1,
                                           const Individual& p2,
                                           const VariationParams& params,
                                           const SearchSpace& space, R& rng,
                                           bool inherit) {
  if (p1.position.size() != space.dim() || p2.position.size() != space.dim()) {
    throw ContractViolation("sbx_crossover: dimension mismatch");
  }
  if (inherit && (!p1.has_particle_state() || !p2.has_particle_state())) {
    throw ContractViolation("sbx_crossover_inheriting: parent lacks velocity/pbest");
  }
  if (rng.uniform() > params.crossover_rate) {
    return {p1, p2};  // gate not passed: verbatim copies
  }
  Individual c1;
  Individual c2;
  c1.position.resize(space.dim());
  c2.position.resize(space.dim());
  const double exponent = 1.0 / (params.sbx_index + 1.0);
  for (std::size_t j = 0; j < space.dim(); ++j) {
    const double u = rng.uniform();
    const double beta = u <= 0.5 ? std::pow(2.0 * u, exponent)
                                 : std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
    const double x1 = p1.position[j];
    const double x2 = p2.position[j];
    c1.position[j] = 0.5 * ((1.0 + beta) * x1 + (1.0 - beta) * x2);
    c2.position[j] = 0.5 * ((1.0 - beta) * x1 + (1.0 + beta) * x2);
  }
  clamp_in_place(c1.position, space);
  clamp_in_place(c2.position, space);
  if (inherit) {
    c1.velocity = p1.velocity;
    c1.pbest_position = p1.pbest_position;
    c1.pbest_fitness = p1.pbest_fitness;
    c2.velocity = p2.velocity;
    c2.pbest_position = p2.pbest_position;
    c2.pbest_fitness = p2.pbest_fitness;
  }
  return {std::move(c1), std::move(c2)};
}

}  // namespace detail

/// Simulated binary crossover. With probability 1 - crossover_rate the
/// parents are returned unchanged; otherwise per-gene spread factors produce
/// two children (mean-preserving before clamping) with fitness unset.
template <UniformSource R>
std::pair<Individual, Individual> sbx_crossover(const Individual& p1,
                                                const Individual& p2,
                                                const VariationParams& params,
                                                const SearchSpace& space,
                                                R& rng) {
  return detail::sbx_impl(p1, p2, params, space, rng, /*inherit=*/false);
}

/// SBX variant whose children inherit velocity and personal best verbatim
/// from their index-aligned parent; position draws are identical to
/// sbx_crossover given the same stream.
template <UniformSource R>
std::pair<Individual, Individual> sbx_crossover_inheriting(
    const Individual& p1, const Individual& p2, const VariationParams& params,
    const SearchSpace& space, R& rng) {
  return detail::sbx_impl(p1, p2, params, space, rng, /*inherit=*/true);
}

/// Polynomial mutation, applied gene-wise with probability mutation_rate.
/// Velocity and personal-best fields pass through untouched; fitness is
/// cleared iff some gene actually changed.
template <UniformSource R>
void polynomial_mutation(Individual& ind, const VariationParams& params,
                         const SearchSpace& space, R& rng) {
  if (ind.position.size() != space.dim()) {
    throw ContractViolation("polynomial_mutation: dimension mismatch");
  }
  const double exponent = 1.0 / (params.mutation_index + 1.0);
  bool changed = false;
  for (std::size_t j = 0; j < space.dim(); ++j) {
    if (rng.uniform() >= params.mutation_rate) continue;
    const double u = rng.uniform();
    const double delta = u < 0.5 ? std::pow(2.0 * u, exponent) - 1.0
                                 : 1.0 - std::pow(2.0 * (1.0 - u), exponent);
    const double next = std::min(
        space.upper()[j],
        std::max(space.lower()[j], ind.position[j] + delta * space.width(j)));
    if (next != ind.position[j]) {
      ind.position[j] = next;
      changed = true;
    }
  }
  if (changed) ind.fitness.reset();
}

/// Keeps the N best of parents + offspring; exact fitness ties prefer
/// parents (and earlier individuals), so the per-generation best never
/// regresses.
std::vector<Individual> replace_truncation(std::vector<Individual> parents,
                                           std::vector<Individual> offspring,
                                           std::size_t n);

}  // namespace evobench
