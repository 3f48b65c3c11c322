#include "hypquant/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypquant/numerics.hpp"

namespace hypquant::classical {

void OscillatorOrbit::validate() const {
  if (!(amplitude > 0.0)) throw InvalidParameter("OscillatorOrbit: amplitude > 0 required");
}

double OscillatorOrbit::phase_difference() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double d = std::remainder(delta1 - delta2, two_pi);  // [-pi, pi]
  if (d <= -std::numbers::pi) d += two_pi;
  return d;
}

double OscillatorOrbit::energy(double mass) const {
  return 0.5 * mass * omega * omega * amplitude * amplitude;
}

void LinePath::validate() const {
  if (sign != 1 && sign != -1) throw InvalidParameter("LinePath: sign must be +1 or -1");
}

void BoxReflectedPath::validate() const {
  if (!(L > 0.0)) throw InvalidParameter("BoxReflectedPath: L > 0 required");
  if (!(std::abs(u0) < 0.5 * L)) {
    throw InvalidParameter("BoxReflectedPath: -L/2 < u0 < L/2 required");
  }
  if (direction != 1 && direction != -1) {
    throw InvalidParameter("BoxReflectedPath: direction must be +1 or -1");
  }
}

OscillatorBranches oscillator_curve(const OscillatorOrbit& orbit, double v) {
  orbit.validate();
  const double a = orbit.amplitude;
  if (std::abs(v) > a) throw DomainError("oscillator_curve: |v| <= A required");
  const double delta = orbit.phase_difference();
  const double root = std::sqrt((a - v) * (a + v));
  const double c = std::cos(delta) * v;
  const double s = std::sin(delta) * root;
  return {c + s, c - s};
}

double free_path(const LinePath& path, double v) {
  path.validate();
  return path.sign * v + path.u0 - path.sign * path.v0;
}

double box_path(const BoxReflectedPath& path, double v) {
  path.validate();
  const double L = path.L;
  // Unfold: position along an unbounded line measured from the left wall,
  // folded back into [0, L] by a triangle wave of period 2L.
  const double s = path.u0 + 0.5 * L + path.direction * v;
  double m = std::fmod(s, 2.0 * L);
  if (m < 0.0) m += 2.0 * L;
  const double folded = m <= L ? m : 2.0 * L - m;
  return std::clamp(folded - 0.5 * L, -0.5 * L, 0.5 * L);
}

double distance_to_free_paths(double u, double v, double d) {
  if (!(d >= 0.0)) throw InvalidParameter("distance_to_free_paths: d >= 0 required");
  const double a = std::min(std::abs(u - v - d), std::abs(u - v + d));
  const double b = std::min(std::abs(u + v - d), std::abs(u + v + d));
  return std::min(a, b) / std::numbers::sqrt2;
}

}  // namespace hypquant::classical
