#include "evobench/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace evobench {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ConfigurationError("config: unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
T get_or(const json& obj, const std::string& key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigurationError("config: bad value for '" + key + "'");
  }
}

Phase parse_phase(const std::string& s) {
  if (s == "pso" || s == "PSO") return Phase::Pso;
  if (s == "ga" || s == "GA") return Phase::Ga;
  throw ConfigurationError("config: starting_algorithm must be 'pso' or 'ga'");
}

AlgorithmSpec parse_algorithm(const json& obj) {
  if (!obj.is_object() || !obj.contains("type")) {
    throw ConfigurationError("config: each algorithm needs a 'type'");
  }
  const std::string type = obj.at("type").get<std::string>();
  const auto id = algorithm_from_label(type);
  if (!id) throw ConfigurationError("config: unknown algorithm type '" + type + "'");

  std::set<std::string> allowed = {"type", "name"};
  const std::set<std::string> ga_keys = {"crossover_rate", "mutation_rate_numerator",
                                         "sbx_index", "mutation_index"};
  const std::set<std::string> pso_keys = {"c1", "c2", "inertia_weight",
                                          "vmax_fraction"};
  switch (*id) {
    case AlgorithmId::Ga:
      allowed.insert(ga_keys.begin(), ga_keys.end());
      break;
    case AlgorithmId::Pso:
      allowed.insert(pso_keys.begin(), pso_keys.end());
      break;
    case AlgorithmId::Pgshea:
      allowed.insert(ga_keys.begin(), ga_keys.end());
      allowed.insert(pso_keys.begin(), pso_keys.end());
      allowed.insert({"swap_interval", "starting_algorithm"});
      break;
    case AlgorithmId::Pgphea:
      allowed.insert(ga_keys.begin(), ga_keys.end());
      allowed.insert(pso_keys.begin(), pso_keys.end());
      allowed.insert({"exchange_interval", "exchange_number"});
      break;
    case AlgorithmId::Pgchea:
      allowed.insert(ga_keys.begin(), ga_keys.end());
      allowed.insert(pso_keys.begin(), pso_keys.end());
      allowed.insert({"starting_algorithm"});
      break;
  }
  require_keys(obj, allowed, "algorithm '" + type + "'");

  AlgorithmSpec spec;
  spec.id = *id;
  spec.name = get_or<std::string>(obj, "name", algorithm_label(*id));
  spec.crossover_rate = get_or(obj, "crossover_rate", spec.crossover_rate);
  spec.mutation_rate_numerator =
      get_or(obj, "mutation_rate_numerator", spec.mutation_rate_numerator);
  spec.sbx_index = get_or(obj, "sbx_index", spec.sbx_index);
  spec.mutation_index = get_or(obj, "mutation_index", spec.mutation_index);
  spec.c1 = get_or(obj, "c1", spec.c1);
  spec.c2 = get_or(obj, "c2", spec.c2);
  spec.inertia_weight = get_or(obj, "inertia_weight", spec.inertia_weight);
  spec.vmax_fraction = get_or(obj, "vmax_fraction", spec.vmax_fraction);
  spec.swap_interval = get_or<std::uint64_t>(obj, "swap_interval", spec.swap_interval);
  spec.exchange_interval =
      get_or<std::uint64_t>(obj, "exchange_interval", spec.exchange_interval);
  spec.exchange_number =
      get_or<std::size_t>(obj, "exchange_number", spec.exchange_number);
  if (obj.contains("starting_algorithm")) {
    spec.starting_algorithm =
        parse_phase(obj.at("starting_algorithm").get<std::string>());
  }
  return spec;
}

json algorithm_to_json(const AlgorithmSpec& spec) {
  json obj;
  obj["type"] = algorithm_label(spec.id);
  obj["name"] = spec.name;
  const bool has_ga = spec.id != AlgorithmId::Pso;
  const bool has_pso = spec.id != AlgorithmId::Ga;
  if (has_ga) {
    obj["crossover_rate"] = spec.crossover_rate;
    obj["mutation_rate_numerator"] = spec.mutation_rate_numerator;
    obj["sbx_index"] = spec.sbx_index;
    obj["mutation_index"] = spec.mutation_index;
  }
  if (has_pso) {
    obj["c1"] = spec.c1;
    obj["c2"] = spec.c2;
    obj["inertia_weight"] = spec.inertia_weight;
    obj["vmax_fraction"] = spec.vmax_fraction;
  }
  if (spec.id == AlgorithmId::Pgshea) obj["swap_interval"] = spec.swap_interval;
  if (spec.id == AlgorithmId::Pgphea) {
    obj["exchange_interval"] = spec.exchange_interval;
    obj["exchange_number"] = spec.exchange_number;
  }
  if (spec.id == AlgorithmId::Pgshea || spec.id == AlgorithmId::Pgchea) {
    obj["starting_algorithm"] = spec.starting_algorithm == Phase::Pso ? "pso" : "ga";
  }
  return obj;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigurationError("config: top level must be an object");
  require_keys(root,
               {"master_seed", "population_size", "runs_per_cell", "trace_stride",
                "dimensions", "budgets", "problems", "algorithms"},
               "top level");

  ExperimentConfig cfg;
  cfg.master_seed = get_or<std::uint64_t>(root, "master_seed", cfg.master_seed);
  cfg.population_size =
      get_or<std::size_t>(root, "population_size", cfg.population_size);
  cfg.runs_per_cell = get_or<int>(root, "runs_per_cell", cfg.runs_per_cell);
  cfg.trace_stride = get_or<std::uint64_t>(root, "trace_stride", cfg.trace_stride);

  if (!root.contains("dimensions") || !root.at("dimensions").is_array()) {
    throw ConfigurationError("config: 'dimensions' array required");
  }
  for (const auto& d : root.at("dimensions")) {
    if (!d.is_number_unsigned()) {
      throw ConfigurationError("config: dimensions must be positive integers");
    }
    cfg.dimensions.push_back(d.get<std::size_t>());
  }

  if (!root.contains("budgets") || !root.at("budgets").is_object()) {
    throw ConfigurationError("config: 'budgets' object required");
  }
  for (const auto& [key, value] : root.at("budgets").items()) {
    if (!value.is_number_unsigned()) {
      throw ConfigurationError("config: budget values must be positive integers");
    }
    if (key == "default") {
      cfg.default_budget = value.get<std::uint64_t>();
      continue;
    }
    std::size_t dim = 0;
    try {
      dim = std::stoull(key);
    } catch (const std::exception&) {
      throw ConfigurationError("config: budget key '" + key +
                               "' is neither a dimension nor 'default'");
    }
    cfg.budgets[dim] = value.get<std::uint64_t>();
  }

  if (!root.contains("problems") || !root.at("problems").is_array()) {
    throw ConfigurationError("config: 'problems' array required");
  }
  for (const auto& p : root.at("problems")) {
    const auto id = benchmark_from_name(p.get<std::string>());
    if (!id) {
      throw ConfigurationError("config: unknown problem '" + p.get<std::string>() + "'");
    }
    cfg.problems.push_back(*id);
  }

  if (!root.contains("algorithms") || !root.at("algorithms").is_array()) {
    throw ConfigurationError("config: 'algorithms' array required");
  }
  for (const auto& a : root.at("algorithms")) cfg.algorithms.push_back(parse_algorithm(a));

  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigurationError("config: cannot open " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

std::string experiment_config_to_json(const ExperimentConfig& config, int indent) {
  json root;
  root["master_seed"] = config.master_seed;
  root["population_size"] = config.population_size;
  root["runs_per_cell"] = config.runs_per_cell;
  root["trace_stride"] = config.trace_stride;
  root["dimensions"] = config.dimensions;
  json budgets = json::object();
  for (const auto& [dim, budget] : config.budgets) {
    budgets[std::to_string(dim)] = budget;
  }
  if (config.default_budget) budgets["default"] = *config.default_budget;
  root["budgets"] = budgets;
  json problems = json::array();
  for (BenchmarkId id : config.problems) problems.push_back(benchmark_name(id));
  root["problems"] = problems;
  json algorithms = json::array();
  for (const AlgorithmSpec& spec : config.algorithms) {
    algorithms.push_back(algorithm_to_json(spec));
  }
  root["algorithms"] = algorithms;
  return root.dump(indent);
}

std::vector<std::pair<std::size_t, BenchmarkSpec>> read_manifest_instances(
    std::istream& in) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("manifest: invalid JSON: ") + e.what());
  }
  std::vector<std::pair<std::size_t, BenchmarkSpec>> out;
  if (!root.contains("weierstrass_instances")) return out;
  for (const auto& inst : root.at("weierstrass_instances")) {
    const auto dim = inst.at("dim").get<std::size_t>();
    BenchmarkSpec spec{BenchmarkId::ShiftedRotatedWeierstrass, dim,
                       inst.at("shift").get<std::vector<double>>(),
                       Eigen::MatrixXd(static_cast<Eigen::Index>(dim),
                                       static_cast<Eigen::Index>(dim))};
    const auto& rows = inst.at("rotation");
    if (rows.size() != dim) {
      throw ConfigurationError("manifest: rotation row count != dim");
    }
    for (std::size_t r = 0; r < dim; ++r) {
      const auto row = rows[r].get<std::vector<double>>();
      if (row.size() != dim) {
        throw ConfigurationError("manifest: rotation column count != dim");
      }
      for (std::size_t c = 0; c < dim; ++c) {
        (*spec.rotation)(static_cast<Eigen::Index>(r),
                         static_cast<Eigen::Index>(c)) = row[c];
      }
    }
    spec.validate();
    out.emplace_back(dim, std::move(spec));
  }
  return out;
}

void write_manifest_json(std::ostream& os, const ExperimentConfig& config,
                         const CellFilter& filter,
                         const ExperimentOutput& output) {
  os << "{\n\"master_seed\": " << config.master_seed << ",\n";
  os << "\"filter\": {\"problem\": " << json(filter.problem).dump()
     << ", \"dim\": " << json(filter.dim).dump()
     << ", \"algorithm\": " << json(filter.algorithm).dump() << "},\n";
  os << "\"config\": " << experiment_config_to_json(config, 1) << ",\n";
  os << "\"weierstrass_instances\": [";
  // Rotation matrices can be large; stream them instead of building one
  // in-memory document.
  bool first_instance = true;
  for (const auto& [dim, spec] : output.srw_instances) {
    if (!first_instance) os << ',';
    first_instance = false;
    os << "\n{\"dim\": " << dim << ",\n\"shift\": [";
    for (std::size_t j = 0; j < spec.shift->size(); ++j) {
      if (j != 0) os << ',';
      os << format_double((*spec.shift)[j]);
    }
    os << "],\n\"rotation\": [";
    const Eigen::MatrixXd& rot = *spec.rotation;
    for (Eigen::Index r = 0; r < rot.rows(); ++r) {
      if (r != 0) os << ',';
      os << "\n[";
      for (Eigen::Index c = 0; c < rot.cols(); ++c) {
        if (c != 0) os << ',';
        os << format_double(rot(r, c));
      }
      os << ']';
    }
    os << "]}";
  }
  os << "\n]\n}\n";
}

}  // namespace evobench
