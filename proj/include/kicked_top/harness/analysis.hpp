#pragma once

// Small statistics used to summarize discord traces.

#include <kicked_top/errors.hpp>

#include <cmath>
#include <numeric>
#include <span>
#include <vector>

namespace kicked_top::harness {

inline double mean(std::span<const double> x) {
  if (x.empty()) throw InvalidParameter("mean of an empty series");
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

// Population coefficient of variation, stddev / mean.
inline double coefficient_of_variation(std::span<const double> x) {
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size())) / m;
}

inline double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidParameter("pearson needs two series of equal length >= 2");
  }
  const double mx = mean(x), my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

// Residual of a least-squares line through (t, x_t), t = 0, 1, ...
inline std::vector<double> detrend(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  const double tm = 0.5 * (n - 1.0);
  const double xm = mean(x);
  double stx = 0.0, stt = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    stx += (t - tm) * (x[t] - xm);
    stt += (t - tm) * (t - tm);
  }
  const double slope = stt > 0.0 ? stx / stt : 0.0;
  std::vector<double> out(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) out[t] = x[t] - xm - slope * (t - tm);
  return out;
}

// Normalized autocorrelation r(lag) = sum x_t x_{t+lag} / sum x_t^2 of a
// zero-mean series.
inline double autocorrelation(std::span<const double> x, std::size_t lag) {
  double num = 0.0, den = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    den += x[t] * x[t];
    if (t + lag < x.size()) num += x[t] * x[t + lag];
  }
  return den > 0.0 ? num / den : 0.0;
}

struct DominantPeriod {
  std::size_t lag = 0;
  double autocorrelation = 0.0;
};

// Lag in [min_lag, max_lag] with the largest autocorrelation of the detrended
// series.
inline DominantPeriod dominant_period(std::span<const double> x, std::size_t min_lag,
                                      std::size_t max_lag) {
  const auto d = detrend(x);
  DominantPeriod best{min_lag, -2.0};
  for (std::size_t lag = min_lag; lag <= max_lag && lag < d.size(); ++lag) {
    const double r = autocorrelation(d, lag);
    if (r > best.autocorrelation) best = {lag, r};
  }
  return best;
}

}  // namespace kicked_top::harness
