#include "evobench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace evobench::stats {
namespace {

// --- small special functions -------------------------------------------

double gamma_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 500; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

/// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw ContractViolation("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_series(a, x) : gamma_cf(a, x);
}

// Inverse normal CDF, Beasley-Springer AS 111 (the approximation the W-test
// coefficients were fitted against).
double ppnd(double p) {
  constexpr double split = 0.42;
  const double q = p - 0.5;
  if (std::abs(q) <= split) {
    const double r = q * q;
    return q *
           (((-25.44106049637 * r + 41.39119773534) * r - 18.61500062529) * r +
            2.50662823884) /
           ((((3.13082909833 * r - 21.06224101826) * r + 23.08336743743) * r -
             8.47351093090) *
                r +
            1.0);
  }
  double r = q > 0.0 ? 1.0 - p : p;
  if (r <= 0.0) return 0.0;
  r = std::sqrt(-std::log(r));
  const double val =
      (((2.32121276858 * r + 4.85014127135) * r - 2.29796479134) * r -
       2.78718931138) /
      ((1.63706781897 * r + 3.54388924762) * r + 1.0);
  return q < 0.0 ? -val : val;
}

// Upper normal tail, Hill AS 66 (companion approximation to AS R94).
double alnorm_upper(double x) {
  constexpr double ltone = 7.0;
  constexpr double utzero = 18.66;
  constexpr double con = 1.28;
  bool up = true;
  double z = x;
  if (z < 0.0) {
    up = false;
    z = -z;
  }
  double result;
  if (z <= ltone || (up && z <= utzero)) {
    const double y = 0.5 * z * z;
    if (z > con) {
      result = 0.398942280385 * std::exp(-y) /
               (z - 3.8052e-8 +
                1.00000615302 /
                    (z + 3.98064794e-4 +
                     1.98615381364 /
                         (z - 0.151679116635 +
                          5.29330324926 /
                              (z + 4.8385912808 -
                               15.1508972451 /
                                   (z + 0.742380924027 +
                                    30.789933034 / (z + 3.99019417011))))));
    } else {
      result = 0.5 - z * (0.398942280444 -
                          0.399903438504 * y /
                              (y + 5.75885480458 -
                               29.8213557808 /
                                   (y + 2.62433121679 +
                                    48.6959930692 / (y + 5.92885724438))));
    }
  } else {
    result = 0.0;
  }
  return up ? result : 1.0 - result;
}

double poly(std::span<const double> c, double x) {
  double r = c[0];
  double p = 1.0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    p *= x;
    r += c[i] * p;
  }
  return r;
}

std::string pair_label(std::span<const std::string> labels, std::size_t i,
                       std::size_t j) {
  if (i < labels.size() && j < labels.size()) {
    return labels[i] + " vs " + labels[j];
  }
  return "group " + std::to_string(i) + " vs group " + std::to_string(j);
}

void check_groups(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) {
    throw ContractViolation("at least two groups required");
  }
  for (const auto& g : groups) {
    if (g.empty()) throw ContractViolation("empty group");
  }
}

}  // namespace

RankedData midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  RankedData out;
  out.ranks.resize(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    const auto t = static_cast<double>(j - i + 1);
    out.tie_sum += t * t * t - t;
    for (std::size_t k = i; k <= j; ++k) out.ranks[order[k]] = avg;
    i = j + 1;
  }
  return out;
}

double chi2_sf(double x, double df) { return gamma_q(df / 2.0, x / 2.0); }

double normal_two_sided_p(double z) {
  return std::erfc(std::abs(z) / std::numbers::sqrt2);
}

TestReport shapiro_wilk(std::span<const double> sample, double alpha) {
  const std::size_t n = sample.size();
  if (n < 3 || n > 50) {
    throw UnsupportedSampleSizeError("shapiro_wilk: sample size must be in [3, 50]");
  }
  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  if (x.front() == x.back()) {
    throw DegenerateSampleError("shapiro_wilk: sample has zero range");
  }
  // Center on a middle order statistic for numerical conditioning.
  const double mid = x[n / 2];
  for (double& v : x) v -= mid;

  const auto an = static_cast<double>(n);
  const std::size_t n2 = n / 2;
  std::vector<double> a(n2);
  if (n == 3) {
    a[0] = std::numbers::sqrt2 / 2.0;
  } else {
    const double an25 = an + 0.25;
    double summ2 = 0.0;
    for (std::size_t i = 1; i <= n2; ++i) {
      a[i - 1] = ppnd((static_cast<double>(i) - 0.375) / an25);
      summ2 += a[i - 1] * a[i - 1];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);
    constexpr double c1[] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
    constexpr double c2[] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
    const double a1 = poly(c1, rsn) - a[0] / ssumm2;
    std::size_t i1;
    double fac;
    if (n > 5) {
      i1 = 3;
      const double a2 = -a[1] / ssumm2 + poly(c2, rsn);
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1]) /
                      (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      a[1] = a2;
    } else {
      i1 = 2;
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0]) / (1.0 - 2.0 * a1 * a1));
    }
    a[0] = a1;
    for (std::size_t i = i1; i <= n2; ++i) a[i - 1] = -a[i - 1] / fac;
  }

  // W statistic on range-scaled data, coefficients applied antisymmetrically.
  const double range = x[n - 1] - x[0];
  double sx = 0.0;
  for (double v : x) sx += v / range;
  sx /= an;
  double sa = -a[0];
  {
    std::size_t j = n - 1;
    for (std::size_t i = 2; i <= n; ++i) {
      if (i != j) {
        const double sign = i > j ? 1.0 : -1.0;
        sa += sign * a[std::min(i, j) - 1];
      }
      if (j > 0) --j;
    }
    sa /= an;
  }
  double ssa = 0.0;
  double ssx = 0.0;
  double sax = 0.0;
  {
    std::size_t j = n;
    for (std::size_t i = 1; i <= n; ++i) {
      double asa;
      if (i != j) {
        const double sign = i > j ? 1.0 : -1.0;
        asa = sign * a[std::min(i, j) - 1] - sa;
      } else {
        asa = -sa;
      }
      const double xsx = x[i - 1] / range - sx;
      ssa += asa * asa;
      ssx += xsx * xsx;
      sax += asa * xsx;
      --j;
    }
  }
  const double ssassx = std::sqrt(ssa * ssx);
  const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  const double w = 1.0 - w1;

  double pw;
  if (n == 3) {
    constexpr double pi6 = 1.90985931710274;   // 6/pi
    constexpr double stqr = 1.04719755119660;  // pi/3
    pw = pi6 * (std::asin(std::sqrt(w)) - stqr);
    pw = std::clamp(pw, 0.0, 1.0);
  } else {
    const double y = std::log1p(-w);
    if (n <= 11) {
      constexpr double g[] = {-2.273, 0.459};
      constexpr double c3[] = {0.5440, -0.39978, 0.025054, -6.714e-4};
      constexpr double c4[] = {1.3822, -0.77857, 0.062767, -2.0322e-3};
      const double gamma = poly(g, an);
      if (y >= gamma) {
        pw = 1e-99;
      } else {
        const double yy = -std::log(gamma - y);
        pw = alnorm_upper((yy - poly(c3, an)) / std::exp(poly(c4, an)));
      }
    } else {
      constexpr double c5[] = {-1.5861, -0.31082, -0.083751, 3.8915e-3};
      constexpr double c6[] = {-0.4803, -0.082676, 3.0302e-3};
      const double lx = std::log(an);
      pw = alnorm_upper((y - poly(c5, lx)) / std::exp(poly(c6, lx)));
    }
  }

  TestReport report;
  report.test_name = "shapiro-wilk";
  report.statistic = w;
  report.p_value = pw;
  report.alpha = alpha;
  report.reject_null = pw < alpha;
  return report;
}

TestReport kruskal_wallis(const std::vector<std::vector<double>>& groups,
                          double alpha) {
  check_groups(groups);
  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const auto n_total = static_cast<double>(pooled.size());
  const RankedData ranked = midranks(pooled);

  double h = 0.0;
  std::size_t pos = 0;
  for (const auto& g : groups) {
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) rank_sum += ranked.ranks[pos + i];
    pos += g.size();
    h += rank_sum * rank_sum / static_cast<double>(g.size());
  }
  h = 12.0 / (n_total * (n_total + 1.0)) * h - 3.0 * (n_total + 1.0);
  const double correction =
      1.0 - ranked.tie_sum / (n_total * n_total * n_total - n_total);

  TestReport report;
  report.test_name = "kruskal-wallis";
  report.alpha = alpha;
  if (correction <= 0.0) {
    // Every pooled observation identical: no evidence of any difference.
    report.statistic = 0.0;
    report.p_value = 1.0;
  } else {
    report.statistic = h / correction;
    report.p_value = chi2_sf(report.statistic,
                             static_cast<double>(groups.size()) - 1.0);
  }
  report.reject_null = report.p_value < alpha;
  return report;
}

std::vector<PairwiseComparison> dunn_test(
    const std::vector<std::vector<double>>& groups) {
  check_groups(groups);
  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const auto n_total = static_cast<double>(pooled.size());
  const RankedData ranked = midranks(pooled);

  std::vector<double> mean_rank(groups.size());
  std::size_t pos = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    double sum = 0.0;
    for (std::size_t i = 0; i < groups[gi].size(); ++i) sum += ranked.ranks[pos + i];
    pos += groups[gi].size();
    mean_rank[gi] = sum / static_cast<double>(groups[gi].size());
  }

  const double var_base = n_total * (n_total + 1.0) / 12.0 -
                          ranked.tie_sum / (12.0 * (n_total - 1.0));
  const std::size_t k = groups.size();
  const auto npairs = static_cast<double>(k * (k - 1) / 2);
  std::vector<PairwiseComparison> out;
  out.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      PairwiseComparison cmp;
      cmp.i = i;
      cmp.j = j;
      const double denom =
          std::sqrt(var_base * (1.0 / static_cast<double>(groups[i].size()) +
                                1.0 / static_cast<double>(groups[j].size())));
      cmp.z = denom > 0.0 ? (mean_rank[i] - mean_rank[j]) / denom : 0.0;
      cmp.p_unadjusted = normal_two_sided_p(cmp.z);
      cmp.p_bonferroni = std::min(1.0, cmp.p_unadjusted * npairs);
      out.push_back(cmp);
    }
  }
  return out;
}

std::vector<TestReport> dunn_test_reports(
    const std::vector<std::vector<double>>& groups, PAdjust adjustment,
    double alpha, std::span<const std::string> labels) {
  std::vector<TestReport> reports;
  for (const PairwiseComparison& cmp : dunn_test(groups)) {
    TestReport report;
    report.test_name = "dunn";
    report.statistic = cmp.z;
    report.p_value =
        adjustment == PAdjust::Bonferroni ? cmp.p_bonferroni : cmp.p_unadjusted;
    report.alpha = alpha;
    report.reject_null = report.p_value < alpha;
    report.groups = {pair_label(labels, cmp.i, cmp.j)};
    reports.push_back(std::move(report));
  }
  return reports;
}

CellComparison compare_cell(const std::vector<std::vector<double>>& finals,
                            double alpha) {
  check_groups(finals);
  CellComparison cell;
  cell.normality.reserve(finals.size());
  for (const auto& g : finals) {
    try {
      cell.normality.push_back(shapiro_wilk(g, alpha));
    } catch (const std::invalid_argument&) {
      cell.normality.push_back(std::nullopt);  // degenerate or unsupported size
    }
  }
  cell.omnibus = kruskal_wallis(finals, alpha);
  cell.pairwise = dunn_test(finals);

  double best_mean = kInfinity;
  for (std::size_t i = 0; i < finals.size(); ++i) {
    const double mean =
        std::accumulate(finals[i].begin(), finals[i].end(), 0.0) /
        static_cast<double>(finals[i].size());
    if (mean < best_mean) {
      best_mean = mean;
      cell.best_index = i;
    }
  }
  for (const PairwiseComparison& cmp : cell.pairwise) {
    const bool involves_best = cmp.i == cell.best_index || cmp.j == cell.best_index;
    if (involves_best && cmp.p_unadjusted >= alpha) {
      cell.nonsignificant_vs_best.push_back(cmp);
    }
  }
  return cell;
}

}  // namespace evobench::stats
