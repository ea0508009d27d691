#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evobench/core.hpp"

namespace evobench {

enum class BenchmarkId {
  Ackley,
  Griewank,
  Levy,
  Michalewicz,
  Rastrigin,
  Schwefel,
  ShiftedRotatedWeierstrass,
};

inline constexpr BenchmarkId kAllBenchmarks[] = {
    BenchmarkId::Ackley,        BenchmarkId::Griewank,
    BenchmarkId::Levy,          BenchmarkId::Michalewicz,
    BenchmarkId::Rastrigin,     BenchmarkId::Schwefel,
    BenchmarkId::ShiftedRotatedWeierstrass,
};

std::string benchmark_name(BenchmarkId id);
std::optional<BenchmarkId> benchmark_from_name(std::string_view name);

/// The benchmark's documented search domain at a given dimensionality.
SearchSpace benchmark_domain(BenchmarkId id, std::size_t dim);

/// Known global minimizer, when the benchmark has one that is
/// dimension-independent (Michalewicz and the shifted/rotated variant have
/// none in this sense).
std::optional<std::vector<double>> benchmark_optimum(BenchmarkId id,
                                                     std::size_t dim);

/// A concrete benchmark instance. Shift and rotation are present exactly for
/// the shifted-rotated Weierstrass variant; the rotation must be orthogonal
/// and the shift components must lie inside [-0.5, 0.5].
struct BenchmarkSpec {
  BenchmarkId name;
  std::size_t dim;
  std::optional<std::vector<double>> shift;
  std::optional<Eigen::MatrixXd> rotation;

  void validate() const;
};

// Direct evaluators. Each checks its domain and throws std::domain_error on
// out-of-domain input, so optimizer-side clamping bugs surface immediately.
double eval_ackley(std::span<const double> x);
double eval_griewank(std::span<const double> x);
double eval_levy(std::span<const double> x);
double eval_michalewicz(std::span<const double> x);  // m = 10
double eval_rastrigin(std::span<const double> x);
double eval_schwefel(std::span<const double> x);

/// Weierstrass sum over z = R(x - s), inner index k = 0..20 inclusive.
/// z itself is not re-checked against the box.
double eval_weierstrass_sr(std::span<const double> x, const BenchmarkSpec& spec);

/// Random orthogonal matrix from QR of a standard-Gaussian matrix with the
/// usual sign correction.
Eigen::MatrixXd make_random_rotation(std::size_t dim, RngStream& rng);

/// Uniform shift in [-0.5, 0.5]^dim plus a random rotation, both drawn from
/// `rng`; the instance machinery for the shifted-rotated Weierstrass.
BenchmarkSpec make_weierstrass_instance(std::size_t dim, RngStream& rng);

/// Counting objective for a benchmark instance. For the shifted-rotated
/// Weierstrass the returned object owns its scratch buffers, so each run
/// should hold its own Objective.
Objective make_objective(const BenchmarkSpec& spec);

}  // namespace evobench
