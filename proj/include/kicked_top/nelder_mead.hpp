#pragma once

// Deterministic Nelder-Mead simplex minimizer with the standard coefficients
// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace kicked_top {

struct NelderMeadOptions {
  // Stop once the largest vertex-to-vertex distance drops below this.
  double diameter_tolerance = 1e-8;
  int max_iterations = 500;
};

template <std::size_t Dim>
struct NelderMeadResult {
  std::array<double, Dim> argmin{};
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

template <std::size_t Dim>
double simplex_diameter(const std::array<std::array<double, Dim>, Dim + 1>& s) {
  double best = 0.0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      double d2 = 0.0;
      for (std::size_t i = 0; i < Dim; ++i) {
        const double d = s[a][i] - s[b][i];
        d2 += d * d;
      }
      best = std::max(best, d2);
    }
  }
  return std::sqrt(best);
}

template <std::size_t Dim, typename F>
NelderMeadResult<Dim> nelder_mead(
    F&& f, std::array<std::array<double, Dim>, Dim + 1> simplex,
    const NelderMeadOptions& options = {}) {
  using Point = std::array<double, Dim>;
  constexpr std::size_t n_vertices = Dim + 1;

  NelderMeadResult<Dim> result;
  std::array<double, n_vertices> values{};
  for (std::size_t v = 0; v < n_vertices; ++v) values[v] = f(simplex[v]);
  result.evaluations = static_cast<int>(n_vertices);

  auto affine = [](const Point& from, const Point& to, double t) {
    Point out;
    for (std::size_t i = 0; i < Dim; ++i) out[i] = from[i] + t * (to[i] - from[i]);
    return out;
  };

  std::array<std::size_t, n_vertices> order{};
  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Stable sort keeps tie-breaking deterministic.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    if (simplex_diameter<Dim>(simplex) < options.diameter_tolerance) {
      result.converged = true;
      break;
    }
    if (result.iterations >= options.max_iterations) break;
    ++result.iterations;

    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n_vertices - 2];

    Point centroid{};
    for (std::size_t v = 0; v < n_vertices; ++v) {
      if (v == worst) continue;
      for (std::size_t i = 0; i < Dim; ++i) centroid[i] += simplex[v][i] / Dim;
    }

    const Point reflected = affine(centroid, simplex[worst], -1.0);
    const double f_reflected = f(reflected);
    ++result.evaluations;

    if (f_reflected < values[best]) {
      const Point expanded = affine(centroid, simplex[worst], -2.0);
      const double f_expanded = f(expanded);
      ++result.evaluations;
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    // Contraction: outside if the reflection improved on the worst vertex.
    const bool outside = f_reflected < values[worst];
    const Point contracted =
        outside ? affine(centroid, reflected, 0.5) : affine(centroid, simplex[worst], 0.5);
    const double f_contracted = f(contracted);
    ++result.evaluations;
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }

    for (std::size_t v = 0; v < n_vertices; ++v) {
      if (v == best) continue;
      simplex[v] = affine(simplex[best], simplex[v], 0.5);
      values[v] = f(simplex[v]);
      ++result.evaluations;
    }
  }

  result.argmin = simplex[order.front()];
  result.value = values[order.front()];
  return result;
}

}  // namespace kicked_top
