#pragma once

#include <vector>

#include "hypquant/fields.hpp"
#include "hypquant/numerics.hpp"

namespace hypquant::boxpacket {

/// Packet in the infinite well (-L/2, L/2) built from the two-Gaussian
/// initial data, truncated after n_max modes.
struct BoxPacketParams {
  double L = 4.0;
  double alpha = 5.0;
  double d = 1.5;
  int n_max = 200;

  void validate() const;
};

enum class Parity {
  Even,  // odd n: cosine eigenfunction
  Odd,   // even n: sine eigenfunction
};

struct ModeCoefficient {
  int n;
  Parity parity;
  ComplexValue value;
};

Parity parity_of(int n);

/// Orthonormal well eigenfunction: sqrt(2/L) cos(n pi q / L) for odd n,
/// sqrt(2/L) sin(n pi q / L) for even n. Throws DomainError for |q| > L/2.
double eigenfunction(int n, double q, double L);

/// The four-Erfi coefficient expression exactly as published. Kept as a
/// cross-check only; see report::box_coefficient_findings for how it
/// relates to the projection.
ComplexValue coefficient_closed(int n, const BoxPacketParams& p);

/// Projection (2/L) int_{-L/2}^{L/2} Psi(u,0) trig(n pi u / L) du in closed
/// form via complex erf. Agrees with coefficient_numeric; throws
/// OverflowError once n pi / (2 sqrt(alpha) L) is too large for erf.
ComplexValue coefficient_erf(int n, const BoxPacketParams& p);

/// Normative coefficient: the projection integral evaluated by adaptive
/// quadrature (trig = cos for odd n, sin for even n).
double coefficient_numeric(int n, const BoxPacketParams& p,
                           const numerics::QuadratureSpec& quad);

/// Default settings for coefficient_numeric.
numerics::QuadratureSpec coefficient_quadrature();

/// coefficient_numeric for n = 1..n_max.
std::vector<ModeCoefficient> coefficients_numeric(const BoxPacketParams& p,
                                                  const numerics::QuadratureSpec& quad);

/// sum_{odd n} A cos cos + i sum_{even n} A sin sin. Throws DomainError
/// outside the box and InvalidParameter if coeffs do not cover 1..n_max.
ComplexValue packet_series(double u, double v, const BoxPacketParams& p,
                           const std::vector<ModeCoefficient>& coeffs);

/// packet_series on every node of `grid` (which must lie inside the box),
/// using separable trig tables.
Field2D sample_series(const Grid2D& grid, const BoxPacketParams& p,
                      const std::vector<ModeCoefficient>& coeffs);

/// cos(pi x) and sin(pi x) with exact zeros at the half-integers and
/// integers respectively, and exact symmetry in x.
double cos_pi(double x);
double sin_pi(double x);

}  // namespace hypquant::boxpacket
