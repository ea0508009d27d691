#include "evobench/stats_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "evobench/harness.hpp"

namespace evobench::stats {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_double(const std::string& s, int line_no) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ConfigurationError("finals.csv: bad number '" + s + "' on line " +
                             std::to_string(line_no));
  }
  return v;
}

}  // namespace

std::vector<FinalsCell> read_finals_csv(std::istream& in) {
  std::vector<FinalsCell> cells;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "problem,dim,algorithm,run,final_fitness") {
        throw ConfigurationError("finals.csv: unexpected header '" + line + "'");
      }
      saw_header = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) {
      throw ConfigurationError("finals.csv: expected 5 fields on line " +
                               std::to_string(line_no));
    }
    const std::string& problem = fields[0];
    const auto dim = static_cast<std::size_t>(parse_double(fields[1], line_no));
    const std::string& algorithm = fields[2];
    const double final_fitness = parse_double(fields[4], line_no);

    FinalsCell* cell = nullptr;
    for (FinalsCell& c : cells) {
      if (c.problem == problem && c.dim == dim) {
        cell = &c;
        break;
      }
    }
    if (cell == nullptr) {
      cells.push_back(FinalsCell{problem, dim, {}, {}});
      cell = &cells.back();
    }
    std::size_t gi = cell->algorithms.size();
    for (std::size_t i = 0; i < cell->algorithms.size(); ++i) {
      if (cell->algorithms[i] == algorithm) {
        gi = i;
        break;
      }
    }
    if (gi == cell->algorithms.size()) {
      cell->algorithms.push_back(algorithm);
      cell->finals.emplace_back();
    }
    cell->finals[gi].push_back(final_fitness);
  }
  if (!saw_header) throw ConfigurationError("finals.csv: empty input");
  return cells;
}

std::vector<StatsReportRow> build_stats_report(
    const std::vector<FinalsCell>& cells, double alpha) {
  std::vector<StatsReportRow> rows;
  for (const FinalsCell& cell : cells) {
    if (cell.algorithms.size() < 2) continue;
    for (const PairwiseComparison& cmp : dunn_test(cell.finals)) {
      StatsReportRow row;
      row.problem = cell.problem;
      row.dim = cell.dim;
      row.algorithm_a = cell.algorithms[cmp.i];
      row.algorithm_b = cell.algorithms[cmp.j];
      row.z = cmp.z;
      row.p_unadjusted = cmp.p_unadjusted;
      row.p_bonferroni = cmp.p_bonferroni;
      row.significant = cmp.p_unadjusted < alpha;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_stats_report_csv(std::ostream& os,
                            const std::vector<StatsReportRow>& rows) {
  os << "problem,dim,pair,z,p_unadjusted,p_bonferroni,significant\n";
  for (const StatsReportRow& row : rows) {
    os << row.problem << ',' << row.dim << ',' << row.algorithm_a << " vs "
       << row.algorithm_b << ',' << format_double(row.z) << ','
       << format_double(row.p_unadjusted) << ','
       << format_double(row.p_bonferroni) << ',' << (row.significant ? 1 : 0)
       << '\n';
  }
}

std::vector<NonSignificantPair> nonsignificant_vs_best(
    const std::vector<FinalsCell>& cells, double alpha) {
  std::vector<NonSignificantPair> out;
  for (const FinalsCell& cell : cells) {
    if (cell.algorithms.size() < 2) continue;
    const CellComparison cmp = compare_cell(cell.finals, alpha);
    for (const PairwiseComparison& pair : cmp.nonsignificant_vs_best) {
      out.push_back(NonSignificantPair{
          cell.problem, cell.dim,
          cell.algorithms[pair.i] + " vs " + cell.algorithms[pair.j],
          pair.p_unadjusted});
    }
  }
  return out;
}

}  // namespace evobench::stats
