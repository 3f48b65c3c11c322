#include "hypquant/freepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypquant::freepacket {

void FreePacketParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameter("FreePacketParams: alpha > 0 required");
  }
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw InvalidParameter("FreePacketParams: d >= 0 required");
  }
}

SpectralDensity SpectralDensity::prescribed(const FreePacketParams& p) {
  p.validate();
  auto a = [p](double k) { return coefficient_A(k, p); };
  return {a, a};
}

namespace {

double gauss(double x, double alpha) { return std::exp(-alpha * x * x); }

}  // namespace

double initial_condition(double u, const FreePacketParams& p) {
  return gauss(u - p.d, p.alpha) + gauss(u + p.d, p.alpha);
}

double coefficient_A(double k, const FreePacketParams& p) {
  return std::sqrt(2.0 / p.alpha) * std::exp(-k * k / (4.0 * p.alpha)) * std::cos(k * p.d);
}

ComplexValue packet_closed(double u, double v, const FreePacketParams& p) {
  const double s = u + v;
  const double t = u - v;
  const double pp = gauss(s + p.d, p.alpha) + gauss(s - p.d, p.alpha);
  const double qq = gauss(t + p.d, p.alpha) + gauss(t - p.d, p.alpha);
  // (1-i)/2 (P + iQ) = ((P+Q) + i(Q-P)) / 2
  return {0.5 * (pp + qq), 0.5 * (qq - pp)};
}

double packet_abs2(double u, double v, const FreePacketParams& p) {
  const double s = u + v;
  const double t = u - v;
  const double pp = gauss(s + p.d, p.alpha) + gauss(s - p.d, p.alpha);
  const double qq = gauss(t + p.d, p.alpha) + gauss(t - p.d, p.alpha);
  return 0.5 * (pp * pp + qq * qq);
}

ComplexValue initial_slope(double u, const FreePacketParams& p) {
  const double a = p.alpha;
  const double im = 2.0 * a * ((u + p.d) * gauss(u + p.d, a) + (u - p.d) * gauss(u - p.d, a));
  return {0.0, im};
}

numerics::QuadratureSpec spectral_quadrature(const FreePacketParams& p) {
  p.validate();
  numerics::QuadratureSpec q;
  q.abs_tol = 1e-12;
  q.rel_tol = 1e-12;
  q.max_subdivisions = 4000;
  q.tail_cutoff = numerics::gaussian_tail_cutoff(p.alpha);
  return q;
}

ComplexValue packet_spectral(double u, double v, const SpectralDensity& density,
                             const numerics::QuadratureSpec& quad) {
  quad.validate();
  const auto& a = density.a_of_k;
  const auto& b = density.b_of_k;
  auto integrand = [&](double k) -> ComplexValue {
    const double cc = std::cos(k * u) * std::cos(k * v);
    const double ss = std::sin(k * u) * std::sin(k * v);
    return {a ? a(k) * cc : 0.0, b ? b(k) * ss : 0.0};
  };
  const double cutoff = quad.tail_cutoff;
  const double breaks[] = {0.0};
  const ComplexValue integral =
      numerics::integrate_adaptive(integrand, -cutoff, cutoff, quad, breaks);
  return integral / std::sqrt(2.0 * std::numbers::pi);
}

ComplexValue packet_spectral(double u, double v, const FreePacketParams& p,
                             const numerics::QuadratureSpec& quad) {
  return packet_spectral(u, v, SpectralDensity::prescribed(p), quad);
}

namespace {

constexpr std::size_t kScanSamples = 8001;

CrestWidth measure(double alpha, double d, double v) {
  const FreePacketParams p{alpha, d};
  const double reach = std::abs(v) + d + 8.0 / std::sqrt(alpha);
  const double h = 2.0 * reach / static_cast<double>(kScanSamples - 1);
  std::vector<double> f(kScanSamples);
  for (std::size_t i = 0; i < kScanSamples; ++i) {
    f[i] = packet_abs2(-reach + static_cast<double>(i) * h, v, p);
  }
  const auto peak_it = std::max_element(f.begin(), f.end());
  const std::size_t peak = static_cast<std::size_t>(peak_it - f.begin());
  const double crest = *peak_it;
  const double half = 0.5 * crest;

  auto u_at = [&](std::size_t i) { return -reach + static_cast<double>(i) * h; };
  // Linear interpolation of the half-maximum crossing between i and i+1.
  auto cross = [&](std::size_t i) {
    return u_at(i) + (half - f[i]) / (f[i + 1] - f[i]) * h;
  };

  std::size_t l = peak;
  while (l > 0 && f[l] > half) --l;
  std::size_t r = peak;
  while (r + 1 < kScanSamples && f[r] > half) ++r;
  const double u_left = f[l] > half ? u_at(l) : cross(l);
  const double u_right = f[r] > half ? u_at(r) : cross(r - 1);
  return {alpha, u_right - u_left, crest};
}

}  // namespace

std::vector<CrestWidth> classical_limit_scan(std::span<const double> alphas, double d,
                                             double v_probe) {
  if (!(d >= 0.0)) throw InvalidParameter("classical_limit_scan: d >= 0 required");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0)) {
      throw InvalidParameter("classical_limit_scan: alphas must be positive");
    }
    if (i > 0 && !(alphas[i] > alphas[i - 1])) {
      throw InvalidParameter("classical_limit_scan: alphas must be increasing");
    }
  }
  std::vector<CrestWidth> out;
  out.reserve(alphas.size());
  for (double a : alphas) out.push_back(measure(a, d, v_probe));
  return out;
}

}  // namespace hypquant::freepacket
