#include "evobench/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace evobench {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw ContractViolation("SearchSpace: bounds must be non-empty and equal-length");
  }
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!(lower_[j] < upper_[j])) {
      throw ContractViolation("SearchSpace: lower[j] < upper[j] required");
    }
  }
}

SearchSpace SearchSpace::uniform_box(std::size_t dim, double lo, double hi) {
  return SearchSpace(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != dim()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lower_[j] || x[j] > upper_[j]) return false;
  }
  return true;
}

EvaluationBudget::EvaluationBudget(std::uint64_t max_evaluations)
    : max_(max_evaluations) {
  if (max_ == 0) throw ContractViolation("EvaluationBudget: max_evaluations must be positive");
}

bool EvaluationBudget::try_consume(std::uint64_t k) {
  if (k == 0) throw ContractViolation("EvaluationBudget: k must be >= 1");
  if (consumed_ + k > max_) return false;
  consumed_ += k;
  return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

RngStream RngStream::derive(std::uint64_t master_seed, std::uint64_t index) {
  return RngStream(splitmix64(splitmix64(master_seed) ^ index));
}

std::size_t RngStream::uniform_index(std::size_t n) {
  if (n == 0) throw ContractViolation("uniform_index: n must be >= 1");
  // Lemire multiply-shift; deterministic and effectively unbiased here.
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(gen_()) * static_cast<unsigned __int128>(n);
  return static_cast<std::size_t>(wide >> 64);
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], so the log is finite.
  const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Objective::Objective(std::string name, SearchSpace space, EvalFn fn)
    : name_(std::move(name)), space_(std::move(space)), fn_(std::move(fn)) {
  if (!fn_) throw ContractViolation("Objective: evaluator must be callable");
}

std::vector<double> clamp_to_bounds(std::vector<double> position,
                                    const SearchSpace& space) {
  clamp_in_place(position, space);
  return position;
}

void clamp_in_place(std::span<double> position, const SearchSpace& space) {
  if (position.size() != space.dim()) {
    throw ContractViolation("clamp_to_bounds: dimension mismatch");
  }
  const auto& lo = space.lower();
  const auto& hi = space.upper();
  for (std::size_t j = 0; j < position.size(); ++j) {
    position[j] = std::min(hi[j], std::max(lo[j], position[j]));
  }
}

}  // namespace evobench
