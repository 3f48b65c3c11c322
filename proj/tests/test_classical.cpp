#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypquant/classical.hpp"
#include "hypquant/numerics.hpp"

using namespace hypquant::classical;
using std::numbers::pi;

namespace {

// Independent triangle-wave oracle: march in small steps and reflect.
double marched_box_path(double L, double u0, int dir, double v) {
  const int steps = 200000;
  const double h = std::abs(v) / steps;
  double u = u0;
  double s = (v >= 0 ? dir : -dir);
  for (int k = 0; k < steps; ++k) {
    u += s * h;
    if (u > L / 2) {
      u = L - u;
      s = -s;
    } else if (u < -L / 2) {
      u = -L - u;
      s = -s;
    }
  }
  return u;
}

}  // namespace

TEST_CASE("oscillator curve") {
  const auto flat = oscillator_curve({1.7, 0.4, 0.4, 1.0}, 0.3);
  CHECK(flat.u_plus == doctest::Approx(0.3));
  CHECK(flat.u_minus == doctest::Approx(0.3));
  const auto circle = oscillator_curve({1.0, pi / 2, 0.0, 1.0}, 0.0);
  CHECK(circle.u_plus == doctest::Approx(1.0));
  CHECK(circle.u_minus == doctest::Approx(-1.0));
  const auto tilted = oscillator_curve({2.0, pi / 3, 0.0, 1.0}, 1.0);
  CHECK(tilted.u_plus == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(tilted.u_minus == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK_THROWS_AS(oscillator_curve({1.0, 0.0, 0.0, 1.0}, 1.5), hypquant::DomainError);
  CHECK_THROWS_WITH_AS(oscillator_curve({-1.0, 0.0, 0.0, 1.0}, 0.0), doctest::Contains("amplitude"),
                       hypquant::InvalidParameter);
}

TEST_CASE("oscillator curve lies on the time-parametrized orbit") {
  const OscillatorOrbit orbit{1.4, 0.9, -0.3, 2.0};
  for (double t = 0.0; t < 3.0; t += 0.37) {
    const double u = orbit.amplitude * std::cos(orbit.omega * t + orbit.delta1);
    const double v = orbit.amplitude * std::cos(orbit.omega * t + orbit.delta2);
    const auto br = oscillator_curve(orbit, v);
    CHECK(std::min(std::abs(br.u_plus - u), std::abs(br.u_minus - u)) < 1e-12);
  }
  CHECK(orbit.phase_difference() == doctest::Approx(1.2));
  CHECK(OscillatorOrbit{1.0, 3.0, -3.0, 1.0}.phase_difference() == doctest::Approx(6.0 - 2.0 * pi));
  CHECK(orbit.energy(3.0) == doctest::Approx(0.5 * 3.0 * 4.0 * 1.96));
}

TEST_CASE("free paths") {
  CHECK(free_path({1, 2.0, 0.0}, 0.0) == 2.0);
  CHECK(free_path({1, 2.0, 0.0}, 3.0) == 5.0);
  CHECK(free_path({-1, 2.0, 0.0}, 3.0) == -1.0);
  CHECK(free_path({-1, 1.0, 1.0}, 1.0) == 1.0);
  CHECK_THROWS_AS(free_path({0, 1.0, 0.0}, 1.0), hypquant::InvalidParameter);
}

TEST_CASE("box paths reflect at the walls") {
  CHECK(box_path({4.0, 0.0, 1}, 1.0) == doctest::Approx(1.0));
  CHECK(box_path({4.0, 0.0, 1}, 3.0) == doctest::Approx(1.0));
  CHECK(box_path({4.0, 0.0, 1}, 4.0) == doctest::Approx(0.0).epsilon(1e-15));
  for (double v : {-7.3, -2.2, 0.0, 0.5, 1.9, 6.1, 11.0}) {
    for (int dir : {1, -1}) {
      const double got = box_path({4.0, 1.5, dir}, v);
      CHECK(std::abs(got) <= 2.0);
      CHECK(std::abs(got - marched_box_path(4.0, 1.5, dir, v)) < 1e-6);
    }
  }
  // period 2L
  CHECK(box_path({3.0, -0.4, -1}, 1.1) == doctest::Approx(box_path({3.0, -0.4, -1}, 7.1)));
  CHECK_THROWS_AS(box_path({4.0, 2.5, 1}, 0.0), hypquant::InvalidParameter);
  CHECK_THROWS_AS(box_path({4.0, 0.0, 0}, 0.0), hypquant::InvalidParameter);
}

TEST_CASE("unit slope away from reflections") {
  const double h = 1e-6;
  for (double v : {0.2, 1.0, 2.7}) {
    const double slope = (box_path({5.0, 0.3, 1}, v + h) - box_path({5.0, 0.3, 1}, v - h)) / (2 * h);
    CHECK(std::abs(std::abs(slope) - 1.0) < 1e-6);
  }
}

TEST_CASE("distance to the free paths") {
  CHECK(distance_to_free_paths(2.0, 0.0, 2.0) == doctest::Approx(0.0));
  CHECK(distance_to_free_paths(0.0, 0.0, 2.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(distance_to_free_paths(3.0, 1.0, 2.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(distance_to_free_paths(0.0, 0.0, -1.0), hypquant::InvalidParameter);
}
