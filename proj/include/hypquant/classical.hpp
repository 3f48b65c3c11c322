#pragma once

#include <utility>

namespace hypquant::classical {

/// Two same-energy oscillator solutions u = A cos(wt + delta1),
/// v = A cos(wt + delta2), with time eliminated.
struct OscillatorOrbit {
  double amplitude = 1.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double omega = 1.0;

  void validate() const;
  /// delta1 - delta2 normalized to (-pi, pi].
  double phase_difference() const;
  /// E = m omega^2 A^2 / 2.
  double energy(double mass) const;
};

/// Free-particle path through (u0, v0) with slope `sign`.
struct LinePath {
  int sign = 1;
  double u0 = 0.0;
  double v0 = 0.0;

  void validate() const;
};

/// Free motion inside the box (-L/2, L/2) with elastic reflection at the
/// walls, starting at u0 when v = 0 and moving with slope `direction`.
struct BoxReflectedPath {
  double L = 1.0;
  double u0 = 0.0;
  int direction = 1;

  void validate() const;
};

struct OscillatorBranches {
  double u_plus;
  double u_minus;
};

/// u = cos(D) v +/- sin(D) sqrt(A^2 - v^2). Throws DomainError for |v| > A.
OscillatorBranches oscillator_curve(const OscillatorOrbit& orbit, double v);

/// u = sign*v + u0 - sign*v0.
double free_path(const LinePath& path, double v);

/// Triangle wave of period 2L bounded by the walls.
double box_path(const BoxReflectedPath& path, double v);

/// Perpendicular distance from (u, v) to the nearest of the four lines
/// u = +/-v +/- d.
double distance_to_free_paths(double u, double v, double d);

}  // namespace hypquant::classical
