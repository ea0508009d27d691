#include "evobench/variation.hpp"

#include <algorithm>

namespace evobench {

std::vector<Individual> replace_truncation(std::vector<Individual> parents,
                                           std::vector<Individual> offspring,
                                           std::size_t n) {
  if (parents.size() + offspring.size() < n) {
    throw ContractViolation("replace_truncation: union smaller than N");
  }
  std::vector<Individual> merged;
  merged.reserve(parents.size() + offspring.size());
  for (Individual& p : parents) {
    if (!p.evaluated()) throw ContractViolation("replace_truncation: unevaluated parent");
    merged.push_back(std::move(p));
  }
  for (Individual& o : offspring) {
    if (!o.evaluated()) throw ContractViolation("replace_truncation: unevaluated offspring");
    merged.push_back(std::move(o));
  }
  // Stable sort with parents listed first implements the tie preference.
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Individual& a, const Individual& b) {
                     return *a.fitness < *b.fitness;
                   });
  merged.resize(n);
  return merged;
}

}  // namespace evobench
