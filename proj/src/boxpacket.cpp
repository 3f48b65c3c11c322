#include "hypquant/boxpacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hypquant::boxpacket {

using std::numbers::pi;

void BoxPacketParams::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) throw InvalidParameter("BoxPacketParams: L > 0 required");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameter("BoxPacketParams: alpha > 0 required");
  }
  if (!(std::abs(d) < 0.5 * L)) throw InvalidParameter("BoxPacketParams: |d| < L/2 required");
  if (n_max < 1) throw InvalidParameter("BoxPacketParams: n_max >= 1 required");
}

Parity parity_of(int n) { return n % 2 == 1 ? Parity::Even : Parity::Odd; }

double cos_pi(double x) {
  double r = std::fmod(std::abs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  if (r <= 0.25) return std::cos(pi * r);
  if (r < 0.75) return std::sin(pi * (0.5 - r));
  return -std::cos(pi * (1.0 - r));
}

double sin_pi(double x) {
  double r = std::fmod(std::abs(x), 2.0);
  double sign = std::signbit(x) ? -1.0 : 1.0;
  if (r >= 1.0) {
    r -= 1.0;
    sign = -sign;
  }
  double s;
  if (r <= 0.25) {
    s = std::sin(pi * r);
  } else if (r <= 0.75) {
    s = std::cos(pi * (0.5 - r));
  } else {
    s = std::sin(pi * (1.0 - r));
  }
  return sign * s;
}

namespace {

// n pi q / L, expressed in units of pi.
double phase_over_pi(int n, double q, double L) { return static_cast<double>(n) * (q / L); }

double mode_trig(int n, double q, double L) {
  const double x = phase_over_pi(n, q, L);
  return n % 2 == 1 ? cos_pi(x) : sin_pi(x);
}

void check_mode(int n) {
  if (n < 1) throw InvalidParameter("mode index n >= 1 required");
}

double initial_value(double u, const BoxPacketParams& p) {
  return std::exp(-p.alpha * (u - p.d) * (u - p.d)) +
         std::exp(-p.alpha * (u + p.d) * (u + p.d));
}

}  // namespace

double eigenfunction(int n, double q, double L) {
  check_mode(n);
  if (!(L > 0.0)) throw InvalidParameter("eigenfunction: L > 0 required");
  if (!(std::abs(q) <= 0.5 * L)) throw DomainError("eigenfunction: |q| <= L/2 required");
  return std::sqrt(2.0 / L) * mode_trig(n, q, L);
}

ComplexValue coefficient_closed(int n, const BoxPacketParams& p) {
  check_mode(n);
  p.validate();
  using numerics::erfi;
  const ComplexValue i{0.0, 1.0};
  const double a = p.alpha;
  const double L = p.L;
  const double d = p.d;
  const double npi = n * pi;
  const double s = 2.0 * std::sqrt(a) * L;

  const ComplexValue prefactor =
      -i * std::exp(npi * (npi + 4.0 * i * a * d * L) / (4.0 * a * L * L)) /
      (L * std::sqrt(a / pi));
  const ComplexValue bracket =
      -erfi((npi + 2.0 * i * a * L * (d - L)) / s) +
      std::exp(2.0 * i * d * npi / L) *
          (erfi((npi - 2.0 * i * a * L * (d - L)) / s) -
           erfi((npi - 2.0 * i * a * L * (d + L)) / s)) +
      erfi((npi + 2.0 * i * a * L * (d + L)) / s);
  return prefactor * bracket;
}

ComplexValue coefficient_erf(int n, const BoxPacketParams& p) {
  check_mode(n);
  p.validate();
  using numerics::erf_complex;
  const double a = p.alpha;
  const double sa = std::sqrt(a);
  const double k = n * pi / p.L;
  const double half = 0.5 * p.L;
  const ComplexValue shift{0.0, k / (2.0 * sa)};

  // int_{-L/2}^{L/2} exp(-a (u-c)^2 + i k u) du
  auto piece = [&](double c) {
    const ComplexValue upper = erf_complex(sa * (half - c) - shift);
    const ComplexValue lower = erf_complex(sa * (-half - c) - shift);
    const ComplexValue factor =
        std::exp(ComplexValue{-k * k / (4.0 * a), k * c}) * (0.5 / (std::numbers::inv_sqrtpi * sa));
    return factor * (upper - lower);
  };
  const ComplexValue j = piece(p.d) + piece(-p.d);
  const double proj = n % 2 == 1 ? j.real() : j.imag();
  return {2.0 / p.L * proj, 0.0};
}

numerics::QuadratureSpec coefficient_quadrature() {
  numerics::QuadratureSpec q;
  q.abs_tol = 1e-14;
  q.rel_tol = 1e-12;
  q.max_subdivisions = 4000;
  return q;
}

double coefficient_numeric(int n, const BoxPacketParams& p,
                           const numerics::QuadratureSpec& quad) {
  check_mode(n);
  p.validate();
  const double half = 0.5 * p.L;
  auto integrand = [&](double u) -> ComplexValue {
    return {initial_value(u, p) * mode_trig(n, u, p.L), 0.0};
  };
  std::vector<double> breaks;
  for (double b : {-std::abs(p.d), 0.0, std::abs(p.d)}) {
    if (b > -half && b < half && (breaks.empty() || b > breaks.back())) breaks.push_back(b);
  }
  const ComplexValue integral = numerics::integrate_adaptive(integrand, -half, half, quad, breaks);
  return 2.0 / p.L * integral.real();
}

std::vector<ModeCoefficient> coefficients_numeric(const BoxPacketParams& p,
                                                  const numerics::QuadratureSpec& quad) {
  p.validate();
  std::vector<ModeCoefficient> out;
  out.reserve(static_cast<std::size_t>(p.n_max));
  for (int n = 1; n <= p.n_max; ++n) {
    out.push_back({n, parity_of(n), {coefficient_numeric(n, p, quad), 0.0}});
  }
  return out;
}

namespace {

void check_coefficients(const BoxPacketParams& p, const std::vector<ModeCoefficient>& coeffs) {
  if (coeffs.size() < static_cast<std::size_t>(p.n_max)) {
    throw InvalidParameter("packet_series: coefficients must cover n = 1..n_max");
  }
  for (int n = 1; n <= p.n_max; ++n) {
    if (coeffs[static_cast<std::size_t>(n - 1)].n != n) {
      throw InvalidParameter("packet_series: coefficient list must be ordered n = 1..n_max");
    }
  }
}

}  // namespace

ComplexValue packet_series(double u, double v, const BoxPacketParams& p,
                           const std::vector<ModeCoefficient>& coeffs) {
  p.validate();
  check_coefficients(p, coeffs);
  const double half = 0.5 * p.L;
  if (!(std::abs(u) <= half) || !(std::abs(v) <= half)) {
    throw DomainError("packet_series: |u| <= L/2 and |v| <= L/2 required");
  }
  double re = 0.0;
  double im = 0.0;
  for (int n = 1; n <= p.n_max; ++n) {
    const ComplexValue a = coeffs[static_cast<std::size_t>(n - 1)].value;
    const double prod = mode_trig(n, u, p.L) * mode_trig(n, v, p.L);
    if (n % 2 == 1) {
      re += a.real() * prod;
      im += a.imag() * prod;
    } else {
      // i A sin sin
      re -= a.imag() * prod;
      im += a.real() * prod;
    }
  }
  return {re, im};
}

Field2D sample_series(const Grid2D& grid, const BoxPacketParams& p,
                      const std::vector<ModeCoefficient>& coeffs) {
  grid.validate();
  p.validate();
  check_coefficients(p, coeffs);
  const double half = 0.5 * p.L;
  const double slack = 1e-12 * p.L;
  auto node = [&](double q) {
    if (!(std::abs(q) <= half + slack)) {
      throw DomainError("sample_series: grid must lie inside [-L/2, L/2]^2");
    }
    return std::clamp(q, -half, half);
  };

  const auto n_modes = static_cast<std::size_t>(p.n_max);
  // table[n-1][i] = trig(n pi q_i / L)
  auto table = [&](std::size_t count, auto coord) {
    std::vector<double> t(n_modes * count);
    for (std::size_t m = 0; m < n_modes; ++m) {
      for (std::size_t i = 0; i < count; ++i) {
        t[m * count + i] = mode_trig(static_cast<int>(m + 1), node(coord(i)), p.L);
      }
    }
    return t;
  };
  const auto tu = table(grid.n_u, [&](std::size_t i) { return grid.u(i); });
  const auto tv = table(grid.n_v, [&](std::size_t j) { return grid.v(j); });

  Field2D out(grid);
  std::vector<double> re(grid.n_u);
  std::vector<double> im(grid.n_u);
  for (std::size_t j = 0; j < grid.n_v; ++j) {
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    for (std::size_t m = 0; m < n_modes; ++m) {
      const ComplexValue a = coeffs[m].value;
      const double cv = tv[m * grid.n_v + j];
      // odd n (m even): A; even n: i A
      const double wr = (m % 2 == 0 ? a.real() : -a.imag()) * cv;
      const double wi = (m % 2 == 0 ? a.imag() : a.real()) * cv;
      if (wr == 0.0 && wi == 0.0) continue;
      const double* row = &tu[m * grid.n_u];
      for (std::size_t i = 0; i < grid.n_u; ++i) {
        re[i] += wr * row[i];
        im[i] += wi * row[i];
      }
    }
    for (std::size_t i = 0; i < grid.n_u; ++i) out(i, j) = {re[i], im[i]};
  }
  return out;
}

}  // namespace hypquant::boxpacket
