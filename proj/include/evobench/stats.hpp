#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evobench/core.hpp"

namespace evobench::stats {

class DegenerateSampleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedSampleSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TestReport {
  std::string test_name;
  double statistic = 0.0;
  double p_value = 1.0;
  double alpha = 0.05;
  bool reject_null = false;
  std::vector<std::string> groups;
};

enum class PAdjust { None, Bonferroni };

struct PairwiseComparison {
  std::size_t i = 0;
  std::size_t j = 0;
  double z = 0.0;
  double p_unadjusted = 1.0;
  double p_bonferroni = 1.0;
};

/// Mid-ranks of `values` (average rank across ties) plus the tie term
/// sum(t^3 - t) over tie groups.
struct RankedData {
  std::vector<double> ranks;
  double tie_sum = 0.0;
};
RankedData midranks(std::span<const double> values);

/// Upper tail of the chi-square distribution with k degrees of freedom.
double chi2_sf(double x, double df);

/// Two-sided standard-normal p-value for a z score.
double normal_two_sided_p(double z);

/// Shapiro-Wilk W test for 3 <= n <= 50 samples, coefficient approximation
/// per Royston's AS R94. Throws DegenerateSampleError on zero-range samples
/// and UnsupportedSampleSizeError outside the size window.
TestReport shapiro_wilk(std::span<const double> sample, double alpha = 0.05);

/// Kruskal-Wallis omnibus test with mid-rank tie correction; p-value from
/// chi-square with (k-1) degrees of freedom.
TestReport kruskal_wallis(const std::vector<std::vector<double>>& groups,
                          double alpha = 0.05);

/// Dunn's pairwise rank comparisons; every pair gets a z score plus
/// unadjusted and Bonferroni-adjusted two-sided p-values.
std::vector<PairwiseComparison> dunn_test(
    const std::vector<std::vector<double>>& groups);

/// dunn_test with a decision column at `alpha` using the chosen adjustment.
std::vector<TestReport> dunn_test_reports(
    const std::vector<std::vector<double>>& groups, PAdjust adjustment,
    double alpha = 0.05, std::span<const std::string> labels = {});

/// Full per-cell pipeline: per-group normality screening, Kruskal-Wallis
/// omnibus, Dunn pairwise. Groups whose normality cannot be assessed
/// (degenerate or unsupported size) get an empty normality slot.
struct CellComparison {
  std::vector<std::optional<TestReport>> normality;
  TestReport omnibus;
  std::vector<PairwiseComparison> pairwise;
  std::size_t best_index = 0;  // by group mean, minimization
  /// Pairs involving the best-mean group that are NOT significant at alpha
  /// (unadjusted p), i.e. rivals statistically indistinguishable from it.
  std::vector<PairwiseComparison> nonsignificant_vs_best;
};

CellComparison compare_cell(const std::vector<std::vector<double>>& finals,
                            double alpha = 0.05);

}  // namespace evobench::stats
