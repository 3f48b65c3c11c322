#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypquant/boxpacket.hpp"
#include "hypquant/fields.hpp"
#include "hypquant/freepacket.hpp"

namespace hypquant::report {

/// One erratum line: `CLAIM | PUBLISHED | COMPUTED | VERDICT`.
struct Finding {
  std::string claim;
  std::string published_value;
  std::string computed_value;
  std::string verdict;
};

std::string format_finding(const Finding& f);
/// One line per finding, LF terminated.
std::string render_findings(const std::vector<Finding>& findings);

/// `x` rounded to `digits` significant digits.
std::string format_number(double x, int digits = 10);

/// (2/L) int_{-L}^{L} Psi(u,0) cos(n pi u / L) du: a projection over twice
/// the box with the cosine used for every n. The published coefficient
/// formula reproduces the magnitude of this integral once its exponential
/// prefactor exp(+n^2 pi^2 / (4 alpha L^2)) is replaced by
/// exp(-n^2 pi^2 / (4 alpha L^2)).
double wide_cosine_projection(int n, const boxpacket::BoxPacketParams& p);

/// Published A(n) against the quadrature projection for n = 1..n_last,
/// followed by summary lines for the erf form and the magnitude diagnostic.
std::vector<Finding> box_coefficient_findings(const boxpacket::BoxPacketParams& p, int n_last);

/// Published A(2) for centered (even) initial data, which must vanish by
/// parity, against the projection.
Finding box_parity_finding(const boxpacket::BoxPacketParams& p);

/// Position variance with d Erf(sqrt(2 alpha) d) in place of the printed
/// d^2 Erf(sqrt(2 alpha) d^2). Matches the half-line quadrature.
double amended_var_u(const freepacket::FreePacketParams& p);

/// Momentum variance with 4/E in place of the printed 4 alpha/E. Equals
/// <p^2> - <p>^2 where <p> = -i hbar int Psi Psi' / N is imaginary on the
/// half line.
double amended_var_p(const freepacket::FreePacketParams& p, const PhysicalConstants& c);

/// Printed moment formulas against the quadrature for each parameter set.
std::vector<Finding> moment_findings(std::span<const freepacket::FreePacketParams> sets);

/// Current convention and the sign of the conservation law.
std::vector<Finding> current_findings();

/// All findings: box coefficients (L=6, alpha=5, d=1.5, n=1..40), moments,
/// currents.
std::vector<Finding> erratum_report();

struct CheckResult {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

/// `criterion <id> PASS|FAIL <title>: <detail>`
std::string format_check(const CheckResult& r);

CheckResult check_spectral_equivalence();
CheckResult check_initial_data();
CheckResult check_pde_annihilation();
CheckResult check_conservation();
CheckResult check_uncertainty();
CheckResult check_box_coefficients();
CheckResult check_box_series();
CheckResult check_ridges();
CheckResult check_classical_limit();
CheckResult check_special_functions();
CheckResult check_symmetry();

/// The eleven checks in order.
std::vector<CheckResult> run_checks();

}  // namespace hypquant::report
