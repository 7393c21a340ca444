#pragma once

// Run configuration for the experiment CLI. The file form is a flat JSON
// object whose keys are the CLI flag names without the leading dashes, e.g.
//   {"j2": 8, "kappa": 3, "avg-kicks": 200, "log-base": "2"}

#include <kicked_top/errors.hpp>
#include <kicked_top/measures.hpp>
#include <kicked_top/types.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace kicked_top::harness {

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

enum class Experiment { classical_map, time_series, avg_map, phi_slice, compare };

inline std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::classical_map: return "classical-map";
    case Experiment::time_series: return "time-series";
    case Experiment::avg_map: return "avg-map";
    case Experiment::phi_slice: return "phi-slice";
    case Experiment::compare: return "compare";
  }
  return "";
}

inline std::optional<Experiment> parse_experiment(const std::string& name) {
  for (auto e : {Experiment::classical_map, Experiment::time_series, Experiment::avg_map,
                 Experiment::phi_slice, Experiment::compare}) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

struct ExperimentConfig {
  std::optional<Experiment> experiment;
  int j2 = 8;
  double kappa = 3.0;
  double p = pi / 2.0;
  double theta = 2.25;
  double phi = 0.63;
  int kicks = 100;
  int avg_kicks = 200;
  int grid_theta = 16;
  int grid_phi = 32;
  double slice_theta = 2.25;
  int opt_grid_theta = 64;
  int opt_grid_phi = 128;
  LogBase log_base = LogBase::two;
  int workers = 0;
  std::string out;
  std::uint64_t seed = 0;

  double j() const { return 0.5 * j2; }
  int qubits() const { return j2; }

  OptimizerParams optimizer() const {
    OptimizerParams o;
    o.grid_theta = opt_grid_theta;
    o.grid_phi = opt_grid_phi;
    return o;
  }
};

namespace detail {

using nlohmann::json;

template <typename T>
T read_as(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw ConfigError("key '" + key + "' must be a string");
    return v.get<std::string>();
  } else if constexpr (std::is_integral_v<T>) {
    if (v.is_number_integer() || v.is_number_unsigned()) return v.get<T>();
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (d == static_cast<double>(static_cast<long long>(d))) return static_cast<T>(d);
    }
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      std::size_t used = 0;
      try {
        long long parsed = std::stoll(s, &used);
        if (used == s.size()) return static_cast<T>(parsed);
      } catch (const std::exception&) {
      }
    }
    throw ConfigError("key '" + key + "' must be an integer");
  } else {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      std::size_t used = 0;
      try {
        double parsed = std::stod(s, &used);
        if (used == s.size()) return parsed;
      } catch (const std::exception&) {
      }
    }
    throw ConfigError("key '" + key + "' must be a number");
  }
}

inline LogBase read_log_base(const json& doc) {
  const json& v = doc.at("log-base");
  if (v.is_number() && v.get<double>() == 2.0) return LogBase::two;
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "2") return LogBase::two;
    if (s == "e") return LogBase::e;
  }
  throw ConfigError("key 'log-base' must be 2 or \"e\"");
}

}  // namespace detail

inline const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "experiment", "j2",         "kappa",          "p",
      "theta",      "phi",        "kicks",          "avg-kicks",
      "grid-theta", "grid-phi",   "slice-theta",    "opt-grid-theta",
      "opt-grid-phi", "log-base", "workers",        "out",
      "seed"};
  return keys;
}

inline void validate(const ExperimentConfig& c) {
  auto require = [](bool ok, const std::string& key, const std::string& what) {
    if (!ok) throw ConfigError("key '" + key + "' " + what);
  };
  require(c.j2 >= 2, "j2", "must be an integer >= 2 (at least two qubits)");
  require(c.kappa >= 0.0 && std::isfinite(c.kappa), "kappa", "must be finite and >= 0");
  require(std::isfinite(c.p), "p", "must be finite");
  require(c.theta >= 0.0 && c.theta <= pi, "theta", "must lie in [0, pi]");
  require(c.phi >= -pi && c.phi <= pi, "phi", "must lie in [-pi, pi]");
  require(c.kicks >= 0, "kicks", "must be >= 0");
  require(c.avg_kicks >= 1, "avg-kicks", "must be >= 1");
  require(c.grid_theta >= 1, "grid-theta", "must be >= 1");
  require(c.grid_phi >= 1, "grid-phi", "must be >= 1");
  require(c.slice_theta >= 0.0 && c.slice_theta <= pi, "slice-theta", "must lie in [0, pi]");
  require(c.opt_grid_theta >= 2, "opt-grid-theta", "must be >= 2");
  require(c.opt_grid_phi >= 2, "opt-grid-phi", "must be >= 2");
  require(c.workers >= 0, "workers", "must be >= 0 (0 = one per hardware thread)");
  if (c.kappa > 6.0) {
    std::clog << "kicked_top: kappa = " << c.kappa
              << " lies outside the studied range [0, 6]\n";
  }
}

// Applies every key of a flat JSON object on top of `config`.
inline void apply_overrides(ExperimentConfig& config, const nlohmann::json& doc) {
  using detail::read_as;
  if (!doc.is_object()) throw ConfigError("configuration must be a flat JSON object");
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (item.value().is_object() || item.value().is_array()) {
      throw ConfigError("key '" + key + "' must be a scalar (the document is flat)");
    }
    if (key == "experiment") {
      auto e = parse_experiment(read_as<std::string>(doc, key));
      if (!e) throw ConfigError("key 'experiment' names an unknown experiment");
      config.experiment = e;
    } else if (key == "j2") {
      config.j2 = read_as<int>(doc, key);
    } else if (key == "kappa") {
      config.kappa = read_as<double>(doc, key);
    } else if (key == "p") {
      config.p = read_as<double>(doc, key);
    } else if (key == "theta") {
      config.theta = read_as<double>(doc, key);
    } else if (key == "phi") {
      config.phi = read_as<double>(doc, key);
    } else if (key == "kicks") {
      config.kicks = read_as<int>(doc, key);
    } else if (key == "avg-kicks") {
      config.avg_kicks = read_as<int>(doc, key);
    } else if (key == "grid-theta") {
      config.grid_theta = read_as<int>(doc, key);
    } else if (key == "grid-phi") {
      config.grid_phi = read_as<int>(doc, key);
    } else if (key == "slice-theta") {
      config.slice_theta = read_as<double>(doc, key);
    } else if (key == "opt-grid-theta") {
      config.opt_grid_theta = read_as<int>(doc, key);
    } else if (key == "opt-grid-phi") {
      config.opt_grid_phi = read_as<int>(doc, key);
    } else if (key == "log-base") {
      config.log_base = detail::read_log_base(doc);
    } else if (key == "workers") {
      config.workers = read_as<int>(doc, key);
    } else if (key == "out") {
      config.out = read_as<std::string>(doc, key);
    } else if (key == "seed") {
      config.seed = read_as<std::uint64_t>(doc, key);
    } else {
      throw ConfigError("unknown configuration key '" + key + "'");
    }
  }
}

inline nlohmann::json parse_config_text(const std::string& text, const std::string& origin) {
  const bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
  if (blank) return nlohmann::json::object();
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("malformed configuration document " + origin + ": " + e.what());
  }
}

// File (optional) first, then flag overrides, then validation.
inline ExperimentConfig parse_config(const std::optional<std::filesystem::path>& file,
                                     const nlohmann::json& flag_overrides) {
  ExperimentConfig config;
  if (file) {
    std::ifstream in(*file, std::ios::binary);
    if (!in) throw ConfigError("cannot read configuration file '" + file->string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_overrides(config, parse_config_text(buf.str(), "'" + file->string() + "'"));
  }
  apply_overrides(config, flag_overrides);
  validate(config);
  return config;
}

inline nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json doc = nlohmann::json::object();
  if (c.experiment) doc["experiment"] = to_string(*c.experiment);
  doc["j2"] = c.j2;
  doc["kappa"] = c.kappa;
  doc["p"] = c.p;
  doc["theta"] = c.theta;
  doc["phi"] = c.phi;
  doc["kicks"] = c.kicks;
  doc["avg-kicks"] = c.avg_kicks;
  doc["grid-theta"] = c.grid_theta;
  doc["grid-phi"] = c.grid_phi;
  doc["slice-theta"] = c.slice_theta;
  doc["opt-grid-theta"] = c.opt_grid_theta;
  doc["opt-grid-phi"] = c.opt_grid_phi;
  doc["log-base"] = c.log_base == LogBase::two ? "2" : "e";
  doc["workers"] = c.workers;
  doc["out"] = c.out;
  doc["seed"] = c.seed;
  return doc;
}

inline bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return to_json(a) == to_json(b);
}

}  // namespace kicked_top::harness
