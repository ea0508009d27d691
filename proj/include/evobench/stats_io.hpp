#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evobench/stats.hpp"

namespace evobench::stats {

/// finals.csv contents regrouped per (problem, dimension) cell, preserving
/// first-appearance order of cells and of algorithms within a cell.
struct FinalsCell {
  std::string problem;
  std::size_t dim = 0;
  std::vector<std::string> algorithms;
  std::vector<std::vector<double>> finals;  // parallel to algorithms
};

std::vector<FinalsCell> read_finals_csv(std::istream& in);

struct StatsReportRow {
  std::string problem;
  std::size_t dim = 0;
  std::string algorithm_a;
  std::string algorithm_b;
  double z = 0.0;
  double p_unadjusted = 1.0;
  double p_bonferroni = 1.0;
  bool significant = false;  // unadjusted p < alpha
};

/// Full pairwise Dunn report for every cell with >= 2 algorithm groups.
std::vector<StatsReportRow> build_stats_report(
    const std::vector<FinalsCell>& cells, double alpha);

void write_stats_report_csv(std::ostream& os,
                            const std::vector<StatsReportRow>& rows);

/// The filtered view printed alongside the CSV: pairs involving each cell's
/// best-mean algorithm that are not significantly different from it.
struct NonSignificantPair {
  std::string problem;
  std::size_t dim = 0;
  std::string pair;
  double p_value = 1.0;
};

std::vector<NonSignificantPair> nonsignificant_vs_best(
    const std::vector<FinalsCell>& cells, double alpha);

}  // namespace evobench::stats
