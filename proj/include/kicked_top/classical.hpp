#pragma once

// Classical limit of the kicked top: a unit vector on the sphere, rotated by
// p about y and then twisted about z by kappa * Z.
//
// Sign conventions match the quantum map exp(-i kappa Jz^2 / 2j) exp(-i p Jy)
// acting on <J>/j at large j:
//   rotation:  X' =  X cos p + Z sin p,  Y' = Y,  Z' = -X sin p + Z cos p
//   twist:     X'' = X' cos(kappa Z') - Y' sin(kappa Z')
//              Y'' = X' sin(kappa Z') + Y' cos(kappa Z'),  Z'' = Z'

#include <kicked_top/spin.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

namespace kicked_top {

struct ClassicalSpin {
  double x = 0.0, y = 0.0, z = 1.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  ClassicalSpin normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
};

inline ClassicalSpin from_spherical(SphericalPoint point) {
  const double s = std::sin(point.theta());
  return {s * std::cos(point.phi()), s * std::sin(point.phi()), std::cos(point.theta())};
}

// At the poles phi is reported as 0.
inline SphericalPoint to_spherical(const ClassicalSpin& spin) {
  const ClassicalSpin u = spin.normalized();
  const double theta = std::acos(std::clamp(u.z, -1.0, 1.0));
  const double phi = (u.x == 0.0 && u.y == 0.0) ? 0.0 : std::atan2(u.y, u.x);
  return SphericalPoint(theta, phi);
}

inline ClassicalSpin classical_kick(const ClassicalSpin& s, double kappa, double p) {
  const double cp = std::cos(p), sp = std::sin(p);
  const double x1 = s.x * cp + s.z * sp;
  const double y1 = s.y;
  const double z1 = -s.x * sp + s.z * cp;
  const double angle = kappa * z1;
  const double ca = std::cos(angle), sa = std::sin(angle);
  return ClassicalSpin{x1 * ca - y1 * sa, x1 * sa + y1 * ca, z1}.normalized();
}

// Directions after kicks 0..n_kicks.
inline std::vector<SphericalPoint> classical_trajectory(SphericalPoint initial,
                                                        double kappa, double p,
                                                        int n_kicks) {
  if (n_kicks < 0) throw InvalidParameter("n_kicks must be non-negative");
  std::vector<SphericalPoint> out;
  out.reserve(static_cast<std::size_t>(n_kicks) + 1);
  out.push_back(initial);
  ClassicalSpin s = from_spherical(initial);
  for (int k = 0; k < n_kicks; ++k) {
    s = classical_kick(s, kappa, p);
    out.push_back(to_spherical(s));
  }
  return out;
}

struct StroboscopicPoint {
  int trajectory_id;
  int kick;
  SphericalPoint direction;
};

// Points ordered by trajectory (input order), then by kick.
inline std::vector<StroboscopicPoint> stroboscopic_scan(
    const std::vector<SphericalPoint>& initial, double kappa, double p, int n_kicks) {
  std::vector<StroboscopicPoint> cloud;
  cloud.reserve(initial.size() * (static_cast<std::size_t>(n_kicks) + 1));
  for (std::size_t t = 0; t < initial.size(); ++t) {
    const auto traj = classical_trajectory(initial[t], kappa, p, n_kicks);
    for (std::size_t k = 0; k < traj.size(); ++k) {
      cloud.push_back({static_cast<int>(t), static_cast<int>(k), traj[k]});
    }
  }
  return cloud;
}

// Fraction of an equal-area (cos theta, phi) partition of the sphere with
// `bands` x 2*bands cells visited by the orbit within n_kicks. Regular orbits
// trace closed curves and visit few cells; chaotic orbits fill their region.
inline double orbit_coverage(SphericalPoint initial, double kappa, double p,
                             int n_kicks, int bands = 40) {
  std::set<std::pair<int, int>> cells;
  ClassicalSpin s = from_spherical(initial);
  for (int k = 0; k < n_kicks; ++k) {
    s = classical_kick(s, kappa, p);
    int zc = static_cast<int>((s.z + 1.0) * 0.5 * bands);
    int pc = static_cast<int>((std::atan2(s.y, s.x) + pi) / (2.0 * pi) * 2 * bands);
    zc = std::clamp(zc, 0, bands - 1);
    pc = std::clamp(pc, 0, 2 * bands - 1);
    cells.emplace(zc, pc);
  }
  return static_cast<double>(cells.size()) / (2.0 * bands * bands);
}

}  // namespace kicked_top
