#include "evobench/benchmarks.hpp"

#include <cmath>
#include <numbers>

namespace evobench {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_domain(std::span<const double> x, double lo, double hi,
                  const char* fn) {
  if (x.empty()) throw std::domain_error(std::string(fn) + ": empty input");
  for (double v : x) {
    if (!(v >= lo && v <= hi)) {
      throw std::domain_error(std::string(fn) + ": input outside search domain");
    }
  }
}

double ipow(double base, unsigned exp) {
  double r = 1.0;
  while (exp != 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

/// sum_{k=0..20} 0.5^k cos(2*pi*3^k*(t + 0.5)).
///
/// 3^k is an integer, so the phase can be folded into [0,1) before each
/// multiplication by 3; this keeps every cosine argument small instead of
/// feeding ~1e10-sized arguments into libm range reduction.
double weierstrass_term(double t) {
  double u = t + 0.5;
  u -= std::floor(u);
  double acc = 0.0;
  double w = 1.0;
  for (int k = 0; k <= 20; ++k) {
    acc += w * std::cos(kTwoPi * u);
    w *= 0.5;
    u *= 3.0;
    u -= std::floor(u);
  }
  return acc;
}

const double kWeierstrassOffset = weierstrass_term(0.0);

double weierstrass_base(std::span<const double> z) {
  double total = 0.0;
  for (double v : z) total += weierstrass_term(v);
  return total - static_cast<double>(z.size()) * kWeierstrassOffset;
}

}  // namespace

std::string benchmark_name(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::Ackley: return "ackley";
    case BenchmarkId::Griewank: return "griewank";
    case BenchmarkId::Levy: return "levy";
    case BenchmarkId::Michalewicz: return "michalewicz";
    case BenchmarkId::Rastrigin: return "rastrigin";
    case BenchmarkId::Schwefel: return "schwefel";
    case BenchmarkId::ShiftedRotatedWeierstrass: return "shifted_rotated_weierstrass";
  }
  throw ContractViolation("benchmark_name: unknown id");
}

std::optional<BenchmarkId> benchmark_from_name(std::string_view name) {
  for (BenchmarkId id : kAllBenchmarks) {
    if (benchmark_name(id) == name) return id;
  }
  return std::nullopt;
}

SearchSpace benchmark_domain(BenchmarkId id, std::size_t dim) {
  switch (id) {
    case BenchmarkId::Ackley: return SearchSpace::uniform_box(dim, -32.768, 32.768);
    case BenchmarkId::Griewank: return SearchSpace::uniform_box(dim, -600.0, 600.0);
    case BenchmarkId::Levy: return SearchSpace::uniform_box(dim, -10.0, 10.0);
    case BenchmarkId::Michalewicz:
      return SearchSpace::uniform_box(dim, 0.0, std::numbers::pi);
    case BenchmarkId::Rastrigin: return SearchSpace::uniform_box(dim, -5.12, 5.12);
    case BenchmarkId::Schwefel: return SearchSpace::uniform_box(dim, -500.0, 500.0);
    case BenchmarkId::ShiftedRotatedWeierstrass:
      return SearchSpace::uniform_box(dim, -0.5, 0.5);
  }
  throw ContractViolation("benchmark_domain: unknown id");
}

std::optional<std::vector<double>> benchmark_optimum(BenchmarkId id,
                                                     std::size_t dim) {
  switch (id) {
    case BenchmarkId::Ackley:
    case BenchmarkId::Griewank:
    case BenchmarkId::Rastrigin:
      return std::vector<double>(dim, 0.0);
    case BenchmarkId::Levy:
      return std::vector<double>(dim, 1.0);
    case BenchmarkId::Schwefel:
      return std::vector<double>(dim, 420.9687);
    case BenchmarkId::Michalewicz:
    case BenchmarkId::ShiftedRotatedWeierstrass:
      return std::nullopt;
  }
  throw ContractViolation("benchmark_optimum: unknown id");
}

void BenchmarkSpec::validate() const {
  if (dim == 0) throw ConfigurationError("BenchmarkSpec: dim must be positive");
  const bool srw = name == BenchmarkId::ShiftedRotatedWeierstrass;
  if (srw != (shift.has_value() && rotation.has_value())) {
    throw ConfigurationError(
        "BenchmarkSpec: shift/rotation present iff shifted-rotated Weierstrass");
  }
  if (!srw) return;
  if (shift->size() != dim) {
    throw ConfigurationError("BenchmarkSpec: shift length != dim");
  }
  for (double s : *shift) {
    if (s < -0.5 || s > 0.5) {
      throw ConfigurationError("BenchmarkSpec: shift component outside [-0.5, 0.5]");
    }
  }
  const Eigen::MatrixXd& r = *rotation;
  if (r.rows() != static_cast<Eigen::Index>(dim) ||
      r.cols() != static_cast<Eigen::Index>(dim)) {
    throw ConfigurationError("BenchmarkSpec: rotation must be dim x dim");
  }
  const Eigen::MatrixXd gram = r.transpose() * r;
  const double err =
      (gram - Eigen::MatrixXd::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    throw ConfigurationError("BenchmarkSpec: rotation is not orthogonal");
  }
}

double eval_ackley(std::span<const double> x) {
  check_domain(x, -32.768, 32.768, "ackley");
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(kTwoPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
         std::numbers::e;
}

double eval_griewank(std::span<const double> x) {
  check_domain(x, -600.0, 600.0, "griewank");
  double sq = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sq += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + sq / 4000.0 - prod;
}

double eval_levy(std::span<const double> x) {
  check_domain(x, -10.0, 10.0, "levy");
  const auto w = [](double v) { return 1.0 + (v - 1.0) / 4.0; };
  const std::size_t n = x.size();
  const double w1 = w(x[0]);
  double total = std::sin(std::numbers::pi * w1) * std::sin(std::numbers::pi * w1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double wi = w(x[i]);
    const double s = std::sin(std::numbers::pi * wi + 1.0);
    total += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * s * s);
  }
  const double wn = w(x[n - 1]);
  const double sn = std::sin(kTwoPi * wn);
  total += (wn - 1.0) * (wn - 1.0) * (1.0 + sn * sn);
  return total;
}

double eval_michalewicz(std::span<const double> x) {
  check_domain(x, 0.0, std::numbers::pi, "michalewicz");
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double s = std::sin(static_cast<double>(i + 1) * x[i] * x[i] /
                              std::numbers::pi);
    total -= std::sin(x[i]) * ipow(s * s, 10);  // sin^(2m), m = 10
  }
  return total;
}

double eval_rastrigin(std::span<const double> x) {
  check_domain(x, -5.12, 5.12, "rastrigin");
  double total = 10.0 * static_cast<double>(x.size());
  for (double v : x) total += v * v - 10.0 * std::cos(kTwoPi * v);
  return total;
}

double eval_schwefel(std::span<const double> x) {
  check_domain(x, -500.0, 500.0, "schwefel");
  double total = 418.9829 * static_cast<double>(x.size());
  for (double v : x) total -= v * std::sin(std::sqrt(std::abs(v)));
  return total;
}

double eval_weierstrass_sr(std::span<const double> x, const BenchmarkSpec& spec) {
  if (spec.name != BenchmarkId::ShiftedRotatedWeierstrass) {
    throw ConfigurationError("eval_weierstrass_sr: wrong benchmark spec");
  }
  spec.validate();
  if (x.size() != spec.dim) {
    throw std::domain_error("weierstrass: dimension mismatch");
  }
  check_domain(x, -0.5, 0.5, "weierstrass");
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(),
                                             static_cast<Eigen::Index>(x.size()));
  const Eigen::Map<const Eigen::VectorXd> sv(spec.shift->data(),
                                             static_cast<Eigen::Index>(x.size()));
  const Eigen::VectorXd z = *spec.rotation * (xv - sv);
  return weierstrass_base({z.data(), static_cast<std::size_t>(z.size())});
}

Eigen::MatrixXd make_random_rotation(std::size_t dim, RngStream& rng) {
  if (dim == 0) throw ContractViolation("make_random_rotation: dim must be >= 1");
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  // Fix column signs by the R diagonal so the distribution is Haar-like.
  for (Eigen::Index j = 0; j < n; ++j) {
    if (qr.matrixQR()(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

BenchmarkSpec make_weierstrass_instance(std::size_t dim, RngStream& rng) {
  std::vector<double> shift(dim);
  for (double& s : shift) s = rng.uniform(-0.5, 0.5);
  BenchmarkSpec spec{BenchmarkId::ShiftedRotatedWeierstrass, dim,
                     std::move(shift), make_random_rotation(dim, rng)};
  spec.validate();
  return spec;
}

Objective make_objective(const BenchmarkSpec& spec) {
  spec.validate();
  SearchSpace space = benchmark_domain(spec.name, spec.dim);
  const std::string name = benchmark_name(spec.name);
  switch (spec.name) {
    case BenchmarkId::Ackley:
      return Objective(name, std::move(space), eval_ackley);
    case BenchmarkId::Griewank:
      return Objective(name, std::move(space), eval_griewank);
    case BenchmarkId::Levy:
      return Objective(name, std::move(space), eval_levy);
    case BenchmarkId::Michalewicz:
      return Objective(name, std::move(space), eval_michalewicz);
    case BenchmarkId::Rastrigin:
      return Objective(name, std::move(space), eval_rastrigin);
    case BenchmarkId::Schwefel:
      return Objective(name, std::move(space), eval_schwefel);
    case BenchmarkId::ShiftedRotatedWeierstrass: {
      // Shares the instance, owns the GEMV scratch space.
      struct SrwEval {
        std::shared_ptr<const BenchmarkSpec> inst;
        Eigen::VectorXd centered;
        Eigen::VectorXd z;

        double operator()(std::span<const double> x) {
          if (x.size() != inst->dim) {
            throw std::domain_error("weierstrass: dimension mismatch");
          }
          check_domain(x, -0.5, 0.5, "weierstrass");
          const Eigen::Map<const Eigen::VectorXd> xv(
              x.data(), static_cast<Eigen::Index>(x.size()));
          const Eigen::Map<const Eigen::VectorXd> sv(
              inst->shift->data(), static_cast<Eigen::Index>(x.size()));
          centered = xv - sv;
          z.noalias() = *inst->rotation * centered;
          return weierstrass_base({z.data(), static_cast<std::size_t>(z.size())});
        }
      };
      auto inst = std::make_shared<const BenchmarkSpec>(spec);
      const auto n = static_cast<Eigen::Index>(spec.dim);
      return Objective(name, std::move(space),
                       SrwEval{std::move(inst), Eigen::VectorXd(n), Eigen::VectorXd(n)});
    }
  }
  throw ContractViolation("make_objective: unknown id");
}

}  // namespace evobench
