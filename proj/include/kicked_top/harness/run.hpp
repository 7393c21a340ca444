#pragma once

// Runs one experiment and writes its CSV plus the resolved-config sidecar
// (<out stem>.config.json). `compare` also writes <out stem>.summary.json.

#include <kicked_top/harness/config.hpp>
#include <kicked_top/harness/experiments.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace kicked_top::harness {

inline std::filesystem::path sidecar_path(const std::filesystem::path& out,
                                          const std::string& suffix) {
  std::filesystem::path p = out;
  p.replace_extension(suffix);
  return p;
}

inline std::filesystem::path default_output(Experiment e) {
  std::string name = to_string(e);
  for (auto& ch : name) {
    if (ch == '-') ch = '_';
  }
  return name + ".csv";
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "': " +
                          ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

struct RunOutputs {
  std::filesystem::path csv;
  std::filesystem::path config;
  std::filesystem::path summary;  // compare only
  std::string csv_text;
  std::string summary_text;
};

inline RunOutputs run_experiment(Experiment experiment, ExperimentConfig config) {
  if (config.experiment && *config.experiment != experiment) {
    throw ConfigError("key 'experiment' is '" + to_string(*config.experiment) +
                      "' but the subcommand is '" + to_string(experiment) + "'");
  }
  config.experiment = experiment;
  if (config.out.empty()) config.out = default_output(experiment).string();

  RunOutputs outputs;
  outputs.csv = config.out;
  outputs.config = sidecar_path(outputs.csv, ".config.json");

  std::ostringstream csv;
  switch (experiment) {
    case Experiment::classical_map: write_csv(csv, run_classical_map(config)); break;
    case Experiment::time_series: write_csv(csv, run_time_series(config)); break;
    case Experiment::avg_map: write_csv(csv, run_avg_map(config)); break;
    case Experiment::phi_slice: write_csv(csv, run_phi_slice(config)); break;
    case Experiment::compare: {
      const auto result = run_compare(config);
      write_csv(csv, result.series);
      outputs.summary = sidecar_path(outputs.csv, ".summary.json");
      outputs.summary_text = to_json(result.summary).dump(2) + "\n";
      break;
    }
  }
  outputs.csv_text = csv.str();
  write_file(outputs.csv, outputs.csv_text);
  write_file(outputs.config, to_json(config).dump(2) + "\n");
  if (!outputs.summary.empty()) write_file(outputs.summary, outputs.summary_text);
  return outputs;
}

}  // namespace kicked_top::harness
