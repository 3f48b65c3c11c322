#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "hypquant/report.hpp"
#include "hypquant/validate.hpp"

using namespace hypquant;
using namespace hypquant::report;

TEST_CASE("finding layout") {
  const Finding f{"claim", "1", "2", "MISMATCH"};
  CHECK(format_finding(f) == "claim | 1 | 2 | MISMATCH");
  CHECK(render_findings({f, f}) == "claim | 1 | 2 | MISMATCH\nclaim | 1 | 2 | MISMATCH\n");
  CHECK(format_number(0.123456789012345, 4) == "0.1235");
  CHECK(format_check({3, "t", false, "x"}) == "criterion 3 FAIL t: x");
}

TEST_CASE("amended moment formulas match the quadrature") {
  const PhysicalConstants c;
  const std::array<freepacket::FreePacketParams, 5> sets{
      {{1.0, 0.5}, {1.0, 2.0}, {2.0, 3.0}, {3.0, 0.7}, {0.5, 1.3}}};
  for (const auto& p : sets) {
    const auto m = validate::halfline_moments(p, c, validate::moments_quadrature(p));
    CHECK(amended_var_u(p) == doctest::Approx(m.var_u).epsilon(1e-10));
    // <p> = -i hbar int Psi Psi' / N = i hbar Psi(0)^2 / (2N)
    const double im_mean = std::pow(freepacket::initial_condition(0.0, p), 2) / (2.0 * m.norm);
    CHECK(amended_var_p(p, c) == doctest::Approx(m.var_p + im_mean * im_mean).epsilon(1e-10));
  }
}

TEST_CASE("moment findings flag the printed formulas") {
  const std::array<freepacket::FreePacketParams, 1> sets{{{1.0, 4.0}}};
  const auto f = moment_findings(sets);
  REQUIRE(f.size() == 6);
  CHECK(f[0].verdict == "MISMATCH");
  CHECK(f[1].verdict == "AGREE");
  CHECK(f[4].claim.find("hbar^2/4") != std::string::npos);
  CHECK(f[4].verdict == "AGREE");
}

TEST_CASE("box coefficient findings") {
  const auto f = box_coefficient_findings({6.0, 5.0, 1.5, 200}, 6);
  REQUIRE(f.size() == 10);
  CHECK(f[0].verdict == "MISMATCH (quadrature normative)");
  CHECK(f[6].verdict == "MISMATCH (quadrature normative)");
  CHECK(f[7].verdict == "AGREE");
  CHECK(f[8].verdict.rfind("EXPLAINS", 0) == 0);
  for (const auto& line : f) CHECK(format_finding(line).find(" | ") != std::string::npos);
}

TEST_CASE("parity finding") {
  const auto f = box_parity_finding({6.0, 5.0, 1.5, 40});
  CHECK(f.verdict.rfind("MISMATCH", 0) == 0);
  CHECK(f.claim.find("d=0") != std::string::npos);
}

TEST_CASE("wide cosine projection magnitude matches the published formula") {
  const boxpacket::BoxPacketParams p{4.0, 5.0, 1.5, 40};
  for (int n = 1; n <= 12; ++n) {
    const double scaled = std::abs(boxpacket::coefficient_closed(n, p)) *
                          std::exp(-std::pow(n * std::numbers::pi, 2) / (2.0 * p.alpha * p.L * p.L));
    CHECK(std::abs(scaled - std::abs(wide_cosine_projection(n, p))) < 1e-12);
  }
}

TEST_CASE("current findings") {
  const auto f = current_findings();
  REQUIRE(f.size() == 3);
  CHECK(f[0].verdict.rfind("CONVENTION", 0) == 0);
  CHECK(f[1].verdict.rfind("MISMATCH", 0) == 0);
  CHECK(f[2].verdict.rfind("HOLDS", 0) == 0);
}

TEST_CASE("cheap checks run standalone") {
  CHECK(check_initial_data().pass);
  CHECK(check_special_functions().pass);
  CHECK(check_special_functions().id == 10);
}
