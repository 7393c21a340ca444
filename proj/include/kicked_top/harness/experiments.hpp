#pragma once

// The five experiments behind the CLI. Each run_* function is pure: it
// returns plot-ready rows and never touches the filesystem. Writers below
// render them as CSV with 17 significant digits.

#include <kicked_top/classical.hpp>
#include <kicked_top/harness/analysis.hpp>
#include <kicked_top/harness/config.hpp>
#include <kicked_top/harness/parallel.hpp>
#include <kicked_top/measures.hpp>
#include <kicked_top/reduction.hpp>
#include <kicked_top/spin.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace kicked_top::harness {

struct TimeSeriesRecord {
  int kick_index = 0;
  double discord = 0.0;
  double concurrence = 0.0;
  double two_qubit_entropy = 0.0;
  double mutual_information = 0.0;
};

struct AvgMapRow {
  double theta, phi, avg_discord;
};

struct SliceRow {
  double phi, avg_discord;
};

struct ClassicalRow {
  int trajectory_id, kick;
  double theta, phi;
};

struct CompareSummary {
  int first_kick = 1;
  int last_kick = 0;
  double corr_discord_entropy = 0.0;
  double corr_discord_concurrence = 0.0;
  double mean_discord = 0.0;
  // Kicks (>= 1) with zero concurrence but discord above 0.01.
  std::vector<int> sudden_death_kicks;
};

struct CompareResult {
  std::vector<TimeSeriesRecord> series;
  CompareSummary summary;
};

namespace detail {

// Points of a lattice over [lo, hi] with both endpoints; a single-point
// lattice sits at `fallback`.
inline std::vector<double> lattice(int points, double lo, double hi, double fallback) {
  if (points == 1) return {fallback};
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[i] = lo + (hi - lo) * i / (points - 1);
  out.back() = hi;
  return out;
}

inline std::string with_context(const std::string& where, const std::exception& e) {
  return where + ": " + e.what();
}

}  // namespace detail

// Measures of a single Dicke state, with the per-kick physicality checks.
inline TimeSeriesRecord measure_state(const DickeState& state, const CollectiveOperators& ops,
                                      const OptimizerParams& optimizer, LogBase base,
                                      int kick) {
  try {
    const TwoQubitState rho = two_qubit_rdm(state, ops);
    if (swap_asymmetry(rho) > 1e-12) {
      throw ContractViolation("reduced state is not swap symmetric");
    }
    if (std::abs(singlet_population(rho)) > 1e-10) {
      throw ContractViolation("reduced state has singlet population " +
                              std::to_string(singlet_population(rho)));
    }
    const DiscordResult d = quantum_discord(rho, optimizer, base);
    return {kick, d.discord, concurrence(rho), von_neumann_entropy(rho, base),
            d.mutual_information};
  } catch (const ContractViolation& e) {
    throw ContractViolation(detail::with_context("kick " + std::to_string(kick), e));
  }
}

inline Matrix config_floquet(const ExperimentConfig& c) {
  return floquet_operator(KickedTopParams(SpinQuantumNumber(c.j2), c.kappa, c.p));
}

// Measures at kicks 0..n_kicks of a coherent state started at `start`.
// Evolution is sequential; the measurements are spread over the workers.
inline std::vector<TimeSeriesRecord> trajectory_measures(const ExperimentConfig& c,
                                                         SphericalPoint start, int n_kicks,
                                                         int workers) {
  const SpinQuantumNumber spin(c.j2);
  const auto ops = build_collective_operators(spin);
  const auto states = evolve(spin_coherent_state(ops, start), config_floquet(c), n_kicks);
  const auto optimizer = c.optimizer();
  return parallel_map(states.size(), workers, [&](std::size_t k) {
    return measure_state(states[k], ops, optimizer, c.log_base, static_cast<int>(k));
  });
}

inline std::vector<TimeSeriesRecord> run_time_series(const ExperimentConfig& c) {
  return trajectory_measures(c, SphericalPoint(c.theta, c.phi), c.kicks, c.workers);
}

// Mean discord over kicks 1..avg_kicks of the coherent state at `start`,
// evaluated on the calling thread.
inline double time_averaged_discord(const ExperimentConfig& c, const CollectiveOperators& ops,
                                    const Matrix& floquet, SphericalPoint start) {
  const auto states = evolve(spin_coherent_state(ops, start), floquet, c.avg_kicks);
  const auto optimizer = c.optimizer();
  double sum = 0.0;
  for (int k = 1; k <= c.avg_kicks; ++k) {
    sum += measure_state(states[k], ops, optimizer, c.log_base, k).discord;
  }
  return sum / c.avg_kicks;
}

inline std::vector<AvgMapRow> run_avg_map(const ExperimentConfig& c) {
  const auto thetas = detail::lattice(c.grid_theta, 0.0, pi, c.theta);
  const auto phis = detail::lattice(c.grid_phi, -pi, pi, c.phi);
  const auto ops = build_collective_operators(SpinQuantumNumber(c.j2));
  const Matrix floquet = config_floquet(c);
  const std::size_t n = thetas.size() * phis.size();
  return parallel_map(n, c.workers, [&](std::size_t i) {
    const double theta = thetas[i / phis.size()];
    const double phi = phis[i % phis.size()];
    try {
      return AvgMapRow{theta, phi,
                       time_averaged_discord(c, ops, floquet, SphericalPoint(theta, phi))};
    } catch (const ContractViolation& e) {
      throw ContractViolation(detail::with_context(
          "initial point (" + std::to_string(theta) + ", " + std::to_string(phi) + ")", e));
    }
  });
}

inline std::vector<SliceRow> run_phi_slice(const ExperimentConfig& c) {
  const auto phis = detail::lattice(c.grid_phi, -pi, pi, c.phi);
  const auto ops = build_collective_operators(SpinQuantumNumber(c.j2));
  const Matrix floquet = config_floquet(c);
  return parallel_map(phis.size(), c.workers, [&](std::size_t i) {
    try {
      return SliceRow{phis[i], time_averaged_discord(c, ops, floquet,
                                                     SphericalPoint(c.slice_theta, phis[i]))};
    } catch (const ContractViolation& e) {
      throw ContractViolation(
          detail::with_context("slice point phi = " + std::to_string(phis[i]), e));
    }
  });
}

inline CompareSummary summarize(const std::vector<TimeSeriesRecord>& series) {
  CompareSummary s;
  std::vector<double> discord, entropy, conc;
  for (const auto& r : series) {
    if (r.kick_index < 1) continue;
    discord.push_back(r.discord);
    entropy.push_back(r.two_qubit_entropy);
    conc.push_back(r.concurrence);
    if (r.concurrence == 0.0 && r.discord > 0.01) s.sudden_death_kicks.push_back(r.kick_index);
  }
  if (discord.size() < 2) throw InvalidParameter("compare needs at least two kicks");
  s.last_kick = series.back().kick_index;
  s.corr_discord_entropy = pearson(discord, entropy);
  s.corr_discord_concurrence = pearson(discord, conc);
  s.mean_discord = mean(discord);
  return s;
}

inline CompareResult run_compare(const ExperimentConfig& c) {
  CompareResult r;
  r.series = run_time_series(c);
  r.summary = summarize(r.series);
  return r;
}

inline std::vector<ClassicalRow> run_classical_map(const ExperimentConfig& c) {
  const auto thetas = detail::lattice(c.grid_theta, 0.0, pi, c.theta);
  const auto phis = detail::lattice(c.grid_phi, -pi, pi, c.phi);
  std::vector<SphericalPoint> initial;
  initial.reserve(thetas.size() * phis.size());
  for (double t : thetas) {
    for (double f : phis) initial.emplace_back(t, f);
  }
  const auto trajectories = parallel_map(initial.size(), c.workers, [&](std::size_t i) {
    return classical_trajectory(initial[i], c.kappa, c.p, c.kicks);
  });
  std::vector<ClassicalRow> rows;
  rows.reserve(initial.size() * (static_cast<std::size_t>(c.kicks) + 1));
  for (std::size_t t = 0; t < trajectories.size(); ++t) {
    for (std::size_t k = 0; k < trajectories[t].size(); ++k) {
      rows.push_back({static_cast<int>(t), static_cast<int>(k), trajectories[t][k].theta(),
                      trajectories[t][k].phi()});
    }
  }
  return rows;
}

// --- CSV -----------------------------------------------------------------

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv(std::ostream& out, const std::vector<TimeSeriesRecord>& rows) {
  out << "kick,discord,concurrence,entropy,mutual_information\n";
  for (const auto& r : rows) {
    out << r.kick_index << ',' << format_double(r.discord) << ','
        << format_double(r.concurrence) << ',' << format_double(r.two_qubit_entropy) << ','
        << format_double(r.mutual_information) << '\n';
  }
}

inline void write_csv(std::ostream& out, const std::vector<AvgMapRow>& rows) {
  out << "theta,phi,avg_discord\n";
  for (const auto& r : rows) {
    out << format_double(r.theta) << ',' << format_double(r.phi) << ','
        << format_double(r.avg_discord) << '\n';
  }
}

inline void write_csv(std::ostream& out, const std::vector<SliceRow>& rows) {
  out << "phi,avg_discord\n";
  for (const auto& r : rows) {
    out << format_double(r.phi) << ',' << format_double(r.avg_discord) << '\n';
  }
}

inline void write_csv(std::ostream& out, const std::vector<ClassicalRow>& rows) {
  out << "trajectory_id,kick,theta,phi\n";
  for (const auto& r : rows) {
    out << r.trajectory_id << ',' << r.kick << ',' << format_double(r.theta) << ','
        << format_double(r.phi) << '\n';
  }
}

inline nlohmann::json to_json(const CompareSummary& s) {
  return {{"first_kick", s.first_kick},
          {"last_kick", s.last_kick},
          {"pearson_discord_entropy", s.corr_discord_entropy},
          {"pearson_discord_concurrence", s.corr_discord_concurrence},
          {"mean_discord", s.mean_discord},
          {"sudden_death_kicks", s.sudden_death_kicks}};
}

}  // namespace kicked_top::harness
