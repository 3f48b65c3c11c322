#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypquant/freepacket.hpp"
#include "hypquant/validate.hpp"

using namespace hypquant;
using namespace hypquant::validate;
using std::numbers::pi;

namespace {

Field2D packet_field(const Grid2D& g, const freepacket::FreePacketParams& p) {
  return sample(g, [&](double u, double v) { return freepacket::packet_closed(u, v, p); });
}

Grid2D square(double lo, double hi, std::size_t n) { return {lo, hi, lo, hi, n, n}; }

double half_normal_var(double alpha) { return (1.0 - 2.0 / pi) / (4.0 * alpha); }

}  // namespace

TEST_CASE("potential spec") {
  CHECK(PotentialSpec::free().value(100.0) == 0.0);
  CHECK(PotentialSpec::box(4.0).value(1.9) == 0.0);
  CHECK_THROWS_AS(PotentialSpec::box(4.0).value(2.1), DomainError);
  CHECK_THROWS_WITH_AS(PotentialSpec::box(0.0), doctest::Contains("L > 0"), InvalidParameter);
}

TEST_CASE("residual of exact solutions") {
  const Grid2D g = square(-3.0, 3.0, 121);
  const double k = 1.7;
  const Field2D standing =
      sample(g, [k](double u, double v) { return ComplexValue{std::cos(k * u) * std::cos(k * v), 0.0}; });
  CHECK(pde_residual(standing, PotentialSpec::free(), {}).interior_max_abs() < 1e-12);
  const Field2D packet = packet_field(g, {1.0, 2.0});
  CHECK(pde_residual(packet, PotentialSpec::free(), {}).interior_max_abs() < 1e-12);
}

TEST_CASE("residual of a v-independent Gaussian") {
  for (std::size_t n : {201u, 401u}) {
    const Grid2D g = square(-1.0, 1.0, n);
    const Field2D f = sample(g, [](double u, double) { return ComplexValue{std::exp(-u * u), 0.0}; });
    const Field2D r = pde_residual(f, PotentialSpec::free(), {});
    const std::size_t mid = (n - 1) / 2;
    CHECK(std::abs(r(mid, mid) - 1.0) < 2.0 * g.h_u() * g.h_u());
  }
  const Grid2D g = square(-1.0, 1.0, 201);
  const Field2D f = sample(g, [](double u, double) { return ComplexValue{std::exp(-u * u), 0.0}; });
  const Field2D scaled = pde_residual(f, PotentialSpec::free(), {2.0, 2.0});
  CHECK(std::abs(scaled(100, 100) - 2.0) < 1e-3);
}

TEST_CASE("residual converges at second order on unequal spacings") {
  const freepacket::FreePacketParams p{1.0, 2.0};
  auto residual = [&](std::size_t nu, std::size_t nv) {
    return pde_residual(packet_field({-6.0, 6.0, -6.0, 6.0, nu, nv}, p), PotentialSpec::free(), {})
        .interior_max_abs();
  };
  const double ratio = residual(301, 241) / residual(601, 481);
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
}

TEST_CASE("residual rejects grids outside the box") {
  const Field2D f(square(-3.0, 3.0, 5));
  CHECK_THROWS_AS(pde_residual(f, PotentialSpec::box(4.0), {}), DomainError);
  CHECK_NOTHROW(pde_residual(f, PotentialSpec::box(6.0), {}));
}

TEST_CASE("current of real and plane-wave fields") {
  const Grid2D g = square(-2.0, 2.0, 81);
  const Field2D real = sample(g, [](double u, double v) {
    return ComplexValue{freepacket::initial_condition(u, {1.0, 2.0}) * std::cos(v), 0.0};
  });
  const auto j0 = probability_current(real, {});
  CHECK(j0.j_u.max_abs() == 0.0);
  CHECK(j0.j_v.max_abs() == 0.0);

  const double k = 1.3;
  const Field2D wave = sample(g, [k](double u, double) { return std::exp(ComplexValue{0.0, k * u}); });
  const auto j = probability_current(wave, {});
  const auto obs = observable_current(wave, {});
  const std::size_t mid = 40;
  // first differences: sin(kh)/h
  const double kh = std::sin(k * g.h_u()) / g.h_u();
  CHECK(std::abs(j.j_u(mid, mid) - ComplexValue(0.0, kh)) < 1e-12);
  CHECK(std::abs(j.j_u(mid, mid) - ComplexValue(0.0, k)) < 1e-3);
  CHECK(std::abs(obs.j_u(mid, mid) - ComplexValue(k, 0.0)) < 1e-3);
  CHECK(j.j_v.max_abs() < 1e-12);
}

TEST_CASE("current of the packet is purely imaginary and conserved") {
  const freepacket::FreePacketParams p{1.0, 2.0};
  auto divergences = [&](std::size_t n) {
    const auto j = probability_current(packet_field(square(-6.0, 6.0, n), p), {});
    double sup_real = 0.0;
    for (const auto& z : j.j_u.values()) sup_real = std::max(sup_real, std::abs(z.real()));
    CHECK(sup_real == 0.0);
    return std::pair{current_divergence(j).interior_max_abs(), euclidean_divergence(j).interior_max_abs()};
  };
  const auto [lor_c, euc_c] = divergences(301);
  const auto [lor_f, euc_f] = divergences(601);
  CHECK(lor_c / lor_f >= 3.5);
  CHECK(lor_c / lor_f <= 4.5);
  // the Euclidean combination does not vanish for this solution
  CHECK(euc_f > 1.0);
  CHECK(euc_c / euc_f < 1.1);
}

TEST_CASE("divergence of simple currents") {
  const Grid2D g = square(-1.0, 1.0, 41);
  const Field2D c = sample(g, [](double, double) { return ComplexValue{0.0, 2.5}; });
  CHECK(current_divergence({c, c}).max_abs() == 0.0);
  const double k = 2.0;
  const Field2D wave = sample(g, [k](double u, double v) { return std::exp(ComplexValue{0.0, k * (u + v)}); });
  const auto j = probability_current(wave, {});
  // the outer ring of j uses one-sided stencils; look two cells in
  const Field2D div = current_divergence(j);
  double worst = 0.0;
  for (std::size_t jv = 2; jv + 2 < g.n_v; ++jv) {
    for (std::size_t iu = 2; iu + 2 < g.n_u; ++iu) worst = std::max(worst, std::abs(div(iu, jv)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("polar decomposition") {
  const Grid2D g = square(-1.0, 1.0, 5);
  const auto one = polar_decompose(sample(g, [](double, double) { return ComplexValue{1.0, 0.0}; }));
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(one.r[k] == 1.0);
    CHECK(one.s[k] == 0.0);
    CHECK(one.valid[k]);
  }
  const ComplexValue c = ComplexValue{1.0, -1.0} / std::sqrt(2.0);
  const auto tilted = polar_decompose(sample(g, [c](double, double) { return c; }));
  CHECK(tilted.r[7] == doctest::Approx(1.0));
  CHECK(tilted.s[7] == doctest::Approx(-pi / 4));

  const auto zero = polar_decompose(Field2D(g));
  CHECK_FALSE(zero.valid[3]);
  CHECK(zero.s[3] == 0.0);
}

TEST_CASE("polar round trip and row unwrapping") {
  const Grid2D g = square(-6.0, 6.0, 121);
  const Field2D f = packet_field(g, {1.0, 2.0});
  const auto polar = polar_decompose(f);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (polar.r[k] > kPhaseThreshold) {
      worst = std::max(worst, std::abs(std::polar(polar.r[k], polar.s[k]) - f.values()[k]));
    }
  }
  CHECK(worst < 1e-12);

  const Grid2D line = square(0.0, 20.0, 401);
  const auto wound = polar_decompose(sample(line, [](double u, double) { return std::exp(ComplexValue{0.0, u}); }));
  CHECK(wound.s[line.index(400, 0)] == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("Bohmian momentum") {
  const Grid2D g = square(-2.0, 2.0, 81);
  const auto flat = bohmian_momentum(polar_decompose(sample(g, [](double, double) { return ComplexValue{0.0, 3.0}; })), {});
  CHECK(flat.j_u.max_abs() == 0.0);
  CHECK(flat.j_v.max_abs() == 0.0);

  const double k = 1.1;
  const Field2D wave = sample(g, [k](double u, double) { return std::exp(ComplexValue{0.0, k * u}); });
  const auto p = bohmian_momentum(polar_decompose(wave), {});
  CHECK(std::abs(p.j_u(40, 40).real() - k) < 1e-12);
  CHECK(p.j_v.max_abs() < 1e-12);
  const auto p2 = bohmian_momentum(polar_decompose(wave), {2.0, 1.0});
  CHECK(p2.j_u(40, 40).real() == doctest::Approx(2.0 * k));

  // scale covariance: a constant complex factor leaves the momentum unchanged
  const ComplexValue c{-0.3, 1.7};
  const Field2D packet = packet_field(g, {1.0, 1.0});
  Field2D scaled = packet;
  for (auto& z : scaled.values()) z *= c;
  const auto a = bohmian_momentum(polar_decompose(packet), {});
  const auto b = bohmian_momentum(polar_decompose(scaled), {});
  double gap = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    gap = std::max({gap, std::abs(a.j_u.values()[n] - b.j_u.values()[n]),
                    std::abs(a.j_v.values()[n] - b.j_v.values()[n])});
  }
  CHECK(gap < 1e-12);
  const auto ja = probability_current(packet, {});
  const auto jb = probability_current(scaled, {});
  CHECK(std::abs(jb.j_u(30, 50) - std::norm(c) * ja.j_u(30, 50)) < 1e-12);
}

TEST_CASE("momentum deep inside one branch is locked") {
  const freepacket::FreePacketParams p{5.0, 2.0};
  const double h = 0.01;
  const Grid2D g{4.0 - 2 * h, 4.0 + 2 * h, 2.0 - 2 * h, 2.0 + 2 * h, 5, 5};
  const auto m = bohmian_momentum(polar_decompose(packet_field(g, p)), {});
  CHECK(std::abs(m.j_u(2, 2)) < 1e-3);
  CHECK(std::abs(m.j_v(2, 2)) < 1e-3);
}

TEST_CASE("half-line moments") {
  const PhysicalConstants c;
  auto moments = [&](double alpha, double d) {
    const freepacket::FreePacketParams p{alpha, d};
    return halfline_moments(p, c, moments_quadrature(p));
  };
  const auto a = moments(1.0, 4.0);
  CHECK(a.var_u == doctest::Approx(0.25).epsilon(0.05));
  CHECK(a.var_p == doctest::Approx(1.0).epsilon(0.05));
  CHECK(a.product == doctest::Approx(0.25).epsilon(0.05));
  CHECK(a.product == doctest::Approx(a.var_u * a.var_p));
  const auto b = moments(2.0, 3.0);
  CHECK(b.var_u == doctest::Approx(0.125).epsilon(0.05));
  CHECK(b.var_p == doctest::Approx(2.0).epsilon(0.05));
  // half-normal: var = (1 - 2/pi) / (4 alpha), <p^2> = alpha
  for (double alpha : {1.0, 3.0}) {
    const auto z = moments(alpha, 0.0);
    CHECK(std::abs(z.var_u - half_normal_var(alpha)) < 1e-10);
    CHECK(z.var_p == doctest::Approx(alpha).epsilon(1e-10));
    CHECK(z.mean_u == doctest::Approx(1.0 / std::sqrt(2.0 * pi * alpha)).epsilon(1e-10));
  }
  const auto h = halfline_moments({1.0, 4.0}, {0.5, 1.0}, moments_quadrature({1.0, 4.0}));
  CHECK(h.var_p == doctest::Approx(0.25 * a.var_p));
  CHECK(h.product == doctest::Approx(0.25 * 0.25).epsilon(1e-6));
}

TEST_CASE("uncertainty product approaches hbar^2/4 from the classical side") {
  const PhysicalConstants c;
  double previous = INFINITY;
  for (double d : {2.0, 4.0, 8.0}) {
    const freepacket::FreePacketParams p{1.0, d};
    const auto m = halfline_moments(p, c, moments_quadrature(p));
    CHECK(m.product >= 0.25 * (1.0 - 5e-2));
    const double dev = std::abs(m.product - 0.25);
    CHECK(dev <= previous + 1e-10);
    previous = dev;
  }
}

TEST_CASE("published moment formulas as printed") {
  const PhysicalConstants c;
  // var_u evaluates negative in the classical regime; see the erratum report
  CHECK(published_var_u({1.0, 4.0}) == doctest::Approx(-239.75).epsilon(1e-9));
  CHECK(published_var_u({1.0, 0.0}) == doctest::Approx(half_normal_var(1.0)).epsilon(1e-12));
  CHECK(published_var_p({1.0, 0.0}, c) == doctest::Approx(1.0 + 2.0 / pi).epsilon(1e-12));
}

TEST_CASE("ridge tracing") {
  CHECK(ridge_trace(Field2D(square(-1.0, 1.0, 11)), {}).empty());

  const freepacket::FreePacketParams p{5.0, 1.5};
  const Grid2D g = square(-4.0, 4.0, 161);
  const auto pts = ridge_trace(packet_field(g, p), {});
  std::vector<double> at0;
  std::vector<double> at05;
  for (const auto& pt : pts) {
    if (std::abs(pt.v) < 1e-12) at0.push_back(pt.u);
    if (std::abs(pt.v - 0.5) < 1e-12) at05.push_back(pt.u);
  }
  REQUIRE(at0.size() == 2);
  CHECK(std::abs(at0[0] + 1.5) <= g.h_u());
  CHECK(std::abs(at0[1] - 1.5) <= g.h_u());
  REQUIRE(at05.size() == 4);
  const double want[] = {-2.0, -1.0, 1.0, 2.0};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(at05[k] - want[k]) <= g.h_u());

  const auto cut = ridge_trace(packet_field(g, p), {{1.5, 0.0, 0.3}});
  CHECK(cut.size() < pts.size());
}
