#include <kicked_top/harness/config.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace kicked_top;
using namespace kicked_top::harness;
using nlohmann::json;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

void expect_config_error_mentioning(const json& overrides, const std::string& key) {
  try {
    parse_config(std::nullopt, overrides);
    FAIL() << "expected ConfigError for " << overrides.dump();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(key), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Config, Defaults) {
  const auto c = parse_config(std::nullopt, json::object());
  EXPECT_EQ(c.j2, 8);
  EXPECT_EQ(c.kappa, 3.0);
  EXPECT_EQ(c.p, pi / 2);
  EXPECT_EQ(c.theta, 2.25);
  EXPECT_EQ(c.phi, 0.63);
  EXPECT_EQ(c.kicks, 100);
  EXPECT_EQ(c.avg_kicks, 200);
  EXPECT_EQ(c.log_base, LogBase::two);
  EXPECT_EQ(c.workers, 0);
  EXPECT_EQ(c.opt_grid_theta, 64);
  EXPECT_EQ(c.opt_grid_phi, 128);
}

TEST(Config, SpinFromJ2) {
  const auto c = parse_config(std::nullopt, json{{"j2", "8"}});
  const SpinQuantumNumber s(c.j2);
  EXPECT_EQ(s.j(), 4.0);
  EXPECT_EQ(s.qubits(), 8);
  EXPECT_EQ(s.dimension(), 9);
}

TEST(Config, RejectsInvalidValues) {
  expect_config_error_mentioning(json{{"kappa", -1}}, "kappa");
  expect_config_error_mentioning(json{{"j2", 1}}, "j2");
  expect_config_error_mentioning(json{{"j2", "4.5"}}, "j2");
  expect_config_error_mentioning(json{{"theta", 4.0}}, "theta");
  expect_config_error_mentioning(json{{"phi", -3.5}}, "phi");
  expect_config_error_mentioning(json{{"kicks", -1}}, "kicks");
  expect_config_error_mentioning(json{{"avg-kicks", 0}}, "avg-kicks");
  expect_config_error_mentioning(json{{"workers", -2}}, "workers");
  expect_config_error_mentioning(json{{"log-base", "10"}}, "log-base");
  expect_config_error_mentioning(json{{"bogus", 1}}, "bogus");
  expect_config_error_mentioning(json{{"kappa", json::array({1, 2})}}, "kappa");
  expect_config_error_mentioning(json{{"kappa", "three"}}, "kappa");
}

TEST(Config, MalformedFileRejected) {
  const auto path = write_temp("kt_bad.json", "{\"kappa\": 3,,}");
  EXPECT_THROW(parse_config(path, json::object()), ConfigError);
  EXPECT_THROW(parse_config(std::filesystem::path("/nonexistent/kt.json"), json::object()),
               Error);
}

TEST(Config, EmptyFileIsDefaults) {
  const auto path = write_temp("kt_empty.json", "  \n");
  EXPECT_TRUE(parse_config(path, json::object()) == parse_config(std::nullopt, json::object()));
}

TEST(Config, FlagsOverrideFile) {
  const auto path = write_temp("kt_file.json", R"({"kappa": 2.5, "j2": 12, "log-base": "e"})");
  const auto c = parse_config(path, json{{"kappa", "1.25"}});
  EXPECT_EQ(c.kappa, 1.25);
  EXPECT_EQ(c.j2, 12);
  EXPECT_EQ(c.log_base, LogBase::e);
}

TEST(Config, JsonRoundTrip) {
  auto c = parse_config(std::nullopt, json{{"kappa", 4.5}, {"out", "x/y.csv"}, {"seed", 7},
                                           {"p", 1.2345678901234567}});
  c.experiment = Experiment::avg_map;
  const auto path = write_temp("kt_round.json", to_json(c).dump(2));
  const auto back = parse_config(path, json::object());
  EXPECT_TRUE(back == c);
  EXPECT_EQ(back.p, c.p);
}

TEST(Config, ExperimentNames) {
  for (auto e : {Experiment::classical_map, Experiment::time_series, Experiment::avg_map,
                 Experiment::phi_slice, Experiment::compare}) {
    EXPECT_EQ(parse_experiment(to_string(e)), e);
  }
  EXPECT_FALSE(parse_experiment("nope").has_value());
}
