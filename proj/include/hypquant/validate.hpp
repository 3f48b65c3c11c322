#pragma once

#include <vector>

#include "hypquant/fields.hpp"
#include "hypquant/freepacket.hpp"
#include "hypquant/numerics.hpp"

namespace hypquant::validate {

/// Potential of the hyperbolic equation. Both kinds vanish inside their
/// domain; the box only restricts the domain to (-L/2, L/2)^2.
struct PotentialSpec {
  enum class Kind { Free, Box };
  Kind kind = Kind::Free;
  double L = 0.0;

  static PotentialSpec free() { return {}; }
  static PotentialSpec box(double L);
  void validate() const;
  double value(double q) const;
};

/// Psi = R exp(iS). `valid[k]` is false where R is below the branch
/// threshold; S is 0 there.
struct PolarField {
  Grid2D grid;
  std::vector<double> r;
  std::vector<double> s;
  std::vector<bool> valid;
};

struct CurrentField {
  Field2D j_u;
  Field2D j_v;
};

struct MomentReport {
  double mean_u;
  double var_u;
  double var_p;
  double product;
  double hbar;
  /// int_0^inf Psi(u,0)^2 du
  double norm;
};

inline constexpr double kPhaseThreshold = 1e-12;

/// [-(hbar^2/2m) d2/du2 + (hbar^2/2m) d2/dv2 + V(u) - V(v)] Psi on every
/// node; only interior nodes are meaningful (Field2D::interior_max_abs).
Field2D pde_residual(const Field2D& field, const PotentialSpec& pot, const PhysicalConstants& c);

/// J_mu = (hbar^2/2m)(Psi* d_mu Psi - Psi d_mu Psi*), transcribed literally;
/// the result is purely imaginary.
CurrentField probability_current(const Field2D& field, const PhysicalConstants& c);

/// Real observable (hbar^2/m) Im(Psi* d_mu Psi) = -i J_mu.
CurrentField observable_current(const Field2D& field, const PhysicalConstants& c);

/// d_u j_u - d_v j_v by first differences. The v term enters with a minus
/// sign because v plays the role of time in the wave operator; this is the
/// combination that vanishes for solutions.
Field2D current_divergence(const CurrentField& j);

/// d_u j_u + d_v j_v. Not conserved for solutions; kept for comparison.
Field2D euclidean_divergence(const CurrentField& j);

/// Modulus and row-wise unwrapped argument.
PolarField polar_decompose(const Field2D& field);

/// p_mu = hbar d_mu S with phase differences taken modulo 2 pi. Nodes whose
/// stencil touches a below-threshold node are set to 0.
CurrentField bohmian_momentum(const PolarField& polar, const PhysicalConstants& c);

/// Default quadrature for halfline_moments: tail_cutoff is the distance
/// beyond u = d at which integration stops.
numerics::QuadratureSpec moments_quadrature(const freepacket::FreePacketParams& p);

/// Position and momentum variances of Psi(u, 0) on the half line u > 0.
MomentReport halfline_moments(const freepacket::FreePacketParams& p, const PhysicalConstants& c,
                              const numerics::QuadratureSpec& quad);

/// The published closed-form expressions for the same two variances.
/// They are evaluated as printed for comparison in the erratum report.
double published_var_u(const freepacket::FreePacketParams& p);
double published_var_p(const freepacket::FreePacketParams& p, const PhysicalConstants& c);

struct Disc {
  double u;
  double v;
  double radius;
};

struct RidgePoint {
  double u;
  double v;
};

/// Per v-row local maxima of |Psi|^2 above 10% of the global maximum, with
/// parabolic sub-cell refinement, excluding points inside any disc.
std::vector<RidgePoint> ridge_trace(const Field2D& field, const std::vector<Disc>& exclusions);

}  // namespace hypquant::validate
