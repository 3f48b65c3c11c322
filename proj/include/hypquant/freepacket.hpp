#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hypquant/numerics.hpp"

namespace hypquant::freepacket {

/// Initial data: two Gaussians of inverse squared width alpha at u = +/-d.
struct FreePacketParams {
  double alpha = 1.0;
  double d = 0.0;

  void validate() const;
  /// alpha d^2 > 1: the two Gaussians are well separated.
  bool classical_regime() const { return alpha * d * d > 1.0; }
};

/// Cosine and sine spectral densities A(k), B(k) of the general V = 0
/// solution.
struct SpectralDensity {
  std::function<double(double)> a_of_k;
  std::function<double(double)> b_of_k;

  /// The normative choice B(k) = A(k) with A(k) from coefficient_A.
  static SpectralDensity prescribed(const FreePacketParams& p);
};

/// Psi(u, 0) = exp(-alpha (u-d)^2) + exp(-alpha (u+d)^2).
double initial_condition(double u, const FreePacketParams& p);

/// A(k) = sqrt(2/alpha) exp(-k^2 / (4 alpha)) cos(k d).
double coefficient_A(double k, const FreePacketParams& p);

/// Closed-form packet
///   (1-i)/2 [e(u+v+d) + e(u+v-d) + i e(u-v+d) + i e(u-v-d)],
/// with e(x) = exp(-alpha x^2).
ComplexValue packet_closed(double u, double v, const FreePacketParams& p);

/// |packet_closed|^2 = (P^2 + Q^2) / 2 with P, Q the (u+v) and (u-v) pairs.
double packet_abs2(double u, double v, const FreePacketParams& p);

/// dPsi/dv at v = 0; purely imaginary and odd in u.
ComplexValue initial_slope(double u, const FreePacketParams& p);

/// Quadrature settings for packet_spectral: tail cutoff from
/// numerics::gaussian_tail_cutoff and tolerances tight enough for a 1e-8
/// match with the closed form.
numerics::QuadratureSpec spectral_quadrature(const FreePacketParams& p);

/// (1/sqrt(2 pi)) int [A cos(ku) cos(kv) + i B sin(ku) sin(kv)] dk over
/// [-tail_cutoff, tail_cutoff].
ComplexValue packet_spectral(double u, double v, const SpectralDensity& density,
                             const numerics::QuadratureSpec& quad);

/// packet_spectral with the prescribed density B = A.
ComplexValue packet_spectral(double u, double v, const FreePacketParams& p,
                             const numerics::QuadratureSpec& quad);

struct CrestWidth {
  double alpha;
  double fwhm;
  double crest;
};

/// For each alpha, the full width at half maximum of |Psi(u, v_probe)|^2
/// around its largest peak (linear interpolation between samples) and the
/// peak value. `alphas` must be strictly increasing and positive.
std::vector<CrestWidth> classical_limit_scan(std::span<const double> alphas, double d,
                                             double v_probe);

}  // namespace hypquant::freepacket
