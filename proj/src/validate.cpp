#include "hypquant/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypquant::validate {

using std::numbers::pi;

PotentialSpec PotentialSpec::box(double L) {
  PotentialSpec p{Kind::Box, L};
  p.validate();
  return p;
}

void PotentialSpec::validate() const {
  if (kind == Kind::Box && !(L > 0.0)) throw InvalidParameter("PotentialSpec: box requires L > 0");
}

double PotentialSpec::value(double q) const {
  if (kind == Kind::Box && std::abs(q) > 0.5 * L) {
    throw DomainError("PotentialSpec: node outside the box");
  }
  return 0.0;
}

Field2D pde_residual(const Field2D& field, const PotentialSpec& pot, const PhysicalConstants& c) {
  pot.validate();
  c.validate();
  const Grid2D& g = field.grid();
  if (pot.kind == PotentialSpec::Kind::Box) {
    const double edge = 0.5 * pot.L * (1.0 + 1e-12);
    if (std::max({std::abs(g.u_min), std::abs(g.u_max), std::abs(g.v_min), std::abs(g.v_max)}) >
        edge) {
      throw DomainError("pde_residual: grid must lie inside the box");
    }
  }
  const Field2D duu = diff2(field, Axis::U);
  const Field2D dvv = diff2(field, Axis::V);
  const double k = c.hbar * c.hbar / (2.0 * c.mass);
  // Nodes within rounding of a wall count as inside.
  auto potential = [&pot](double q) {
    if (pot.kind == PotentialSpec::Kind::Box) q = std::clamp(q, -0.5 * pot.L, 0.5 * pot.L);
    return pot.value(q);
  };
  Field2D out(g);
  for (std::size_t j = 0; j < g.n_v; ++j) {
    const double vv = potential(g.v(j));
    for (std::size_t i = 0; i < g.n_u; ++i) {
      const double vu = potential(g.u(i));
      out(i, j) = -k * duu(i, j) + k * dvv(i, j) + (vu - vv) * field(i, j);
    }
  }
  return out;
}

namespace {

CurrentField current_impl(const Field2D& field, double scale, bool literal) {
  const Field2D du = diff1(field, Axis::U);
  const Field2D dv = diff1(field, Axis::V);
  Field2D ju(field.grid());
  Field2D jv(field.grid());
  const auto& psi = field.values();
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const ComplexValue p = psi[k];
    const ComplexValue a = du.values()[k];
    const ComplexValue b = dv.values()[k];
    if (literal) {
      ju.values()[k] = scale * (std::conj(p) * a - p * std::conj(a));
      jv.values()[k] = scale * (std::conj(p) * b - p * std::conj(b));
    } else {
      ju.values()[k] = scale * (std::conj(p) * a).imag();
      jv.values()[k] = scale * (std::conj(p) * b).imag();
    }
  }
  return {std::move(ju), std::move(jv)};
}

}  // namespace

CurrentField probability_current(const Field2D& field, const PhysicalConstants& c) {
  c.validate();
  return current_impl(field, c.hbar * c.hbar / (2.0 * c.mass), true);
}

CurrentField observable_current(const Field2D& field, const PhysicalConstants& c) {
  c.validate();
  return current_impl(field, c.hbar * c.hbar / c.mass, false);
}

namespace {

Field2D divergence(const CurrentField& j, double sign_v) {
  const Field2D a = diff1(j.j_u, Axis::U);
  const Field2D b = diff1(j.j_v, Axis::V);
  Field2D out(j.j_u.grid());
  for (std::size_t k = 0; k < out.values().size(); ++k) {
    out.values()[k] = a.values()[k] + sign_v * b.values()[k];
  }
  return out;
}

}  // namespace

Field2D current_divergence(const CurrentField& j) { return divergence(j, -1.0); }

Field2D euclidean_divergence(const CurrentField& j) { return divergence(j, 1.0); }

namespace {

// Wraps a phase difference into (-pi, pi].
double wrap(double x) {
  double r = std::remainder(x, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

}  // namespace

PolarField polar_decompose(const Field2D& field) {
  const Grid2D& g = field.grid();
  PolarField out{g, std::vector<double>(g.size()), std::vector<double>(g.size(), 0.0),
                 std::vector<bool>(g.size(), false)};
  for (std::size_t j = 0; j < g.n_v; ++j) {
    bool have_prev = false;
    double prev = 0.0;
    for (std::size_t i = 0; i < g.n_u; ++i) {
      const std::size_t k = g.index(i, j);
      const ComplexValue z = field.values()[k];
      out.r[k] = std::abs(z);
      if (!(out.r[k] > kPhaseThreshold)) continue;
      double s = std::arg(z);
      if (have_prev) s = prev + wrap(s - prev);
      out.s[k] = s;
      out.valid[k] = true;
      prev = s;
      have_prev = true;
    }
  }
  return out;
}

CurrentField bohmian_momentum(const PolarField& polar, const PhysicalConstants& c) {
  c.validate();
  const Grid2D& g = polar.grid;
  Field2D pu(g);
  Field2D pv(g);

  // Derivative of S along a line of `n` nodes addressed by `at`; 0 where
  // the stencil touches an invalid node.
  auto line = [&](auto at, std::size_t n, double h, auto&& store) {
    auto ok = [&](std::size_t k) { return polar.valid[at(k)]; };
    auto s = [&](std::size_t k) { return polar.s[at(k)]; };
    for (std::size_t k = 0; k < n; ++k) {
      double d = 0.0;
      if (k == 0) {
        if (ok(0) && ok(1) && ok(2)) {
          d = (4.0 * wrap(s(1) - s(0)) - wrap(s(2) - s(0))) / (2.0 * h);
        }
      } else if (k + 1 == n) {
        if (ok(n - 1) && ok(n - 2) && ok(n - 3)) {
          d = (wrap(s(n - 3) - s(n - 1)) - 4.0 * wrap(s(n - 2) - s(n - 1))) / (2.0 * h);
        }
      } else if (ok(k - 1) && ok(k) && ok(k + 1)) {
        d = wrap(s(k + 1) - s(k - 1)) / (2.0 * h);
      }
      store(at(k), c.hbar * d);
    }
  };

  for (std::size_t j = 0; j < g.n_v; ++j) {
    line([&](std::size_t i) { return g.index(i, j); }, g.n_u, g.h_u(),
         [&](std::size_t k, double val) { pu.values()[k] = val; });
  }
  for (std::size_t i = 0; i < g.n_u; ++i) {
    line([&](std::size_t j) { return g.index(i, j); }, g.n_v, g.h_v(),
         [&](std::size_t k, double val) { pv.values()[k] = val; });
  }
  return {std::move(pu), std::move(pv)};
}

numerics::QuadratureSpec moments_quadrature(const freepacket::FreePacketParams& p) {
  p.validate();
  numerics::QuadratureSpec q;
  q.abs_tol = 1e-14;
  q.rel_tol = 1e-12;
  q.max_subdivisions = 4000;
  // exp(-2 alpha x^2) < 1e-70 beyond this distance
  q.tail_cutoff = 9.1 / std::sqrt(p.alpha);
  return q;
}

MomentReport halfline_moments(const freepacket::FreePacketParams& p, const PhysicalConstants& c,
                              const numerics::QuadratureSpec& quad) {
  p.validate();
  c.validate();
  quad.validate();
  const double a = p.alpha;
  const double d = p.d;
  const double upper = d + quad.tail_cutoff;
  auto psi = [&](double u) { return freepacket::initial_condition(u, p); };
  auto dpsi = [&](double u) {
    return -2.0 * a * ((u - d) * std::exp(-a * (u - d) * (u - d)) +
                       (u + d) * std::exp(-a * (u + d) * (u + d)));
  };
  std::vector<double> breaks;
  if (d > 0.0 && d < upper) breaks.push_back(d);

  auto integrate = [&](auto f) {
    return numerics::integrate_adaptive(
               [&](double u) { return ComplexValue{f(u), 0.0}; }, 0.0, upper, quad, breaks)
        .real();
  };
  const double norm = integrate([&](double u) { return psi(u) * psi(u); });
  const double mean = integrate([&](double u) { return u * psi(u) * psi(u); }) / norm;
  const double var_u =
      integrate([&](double u) { return (u - mean) * (u - mean) * psi(u) * psi(u); }) / norm;
  const double var_p =
      c.hbar * c.hbar * integrate([&](double u) { return dpsi(u) * dpsi(u); }) / norm;
  return {mean, var_u, var_p, var_u * var_p, c.hbar, norm};
}

double published_var_u(const freepacket::FreePacketParams& p) {
  const double a = p.alpha;
  const double d = p.d;
  const double e = std::exp(2.0 * d * d * a);
  const double inner =
      (std::sqrt(2.0 / (pi * a)) + d * d * e * std::erf(std::sqrt(2.0 * a) * d * d)) / (1.0 + e);
  return 1.0 / (4.0 * a) + 0.5 * d * d * (1.0 + std::tanh(d * d * a)) - inner * inner;
}

double published_var_p(const freepacket::FreePacketParams& p, const PhysicalConstants& c) {
  const double a = p.alpha;
  const double d = p.d;
  const double e = 1.0 + std::exp(2.0 * d * d * a);
  return a * c.hbar * c.hbar * (1.0 - 4.0 * a / e * (d * d * a - (2.0 / pi) / e));
}

std::vector<RidgePoint> ridge_trace(const Field2D& field, const std::vector<Disc>& exclusions) {
  const Grid2D& g = field.grid();
  std::vector<double> f(g.size());
  double global = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    f[k] = std::norm(field.values()[k]);
    global = std::max(global, f[k]);
  }
  std::vector<RidgePoint> out;
  if (!(global > 0.0)) return out;
  const double floor = 0.1 * global;
  const double h = g.h_u();
  for (std::size_t j = 0; j < g.n_v; ++j) {
    const double v = g.v(j);
    const double* row = &f[j * g.n_u];
    for (std::size_t i = 1; i + 1 < g.n_u; ++i) {
      if (!(row[i] > floor && row[i] > row[i - 1] && row[i] >= row[i + 1])) continue;
      const double curv = row[i - 1] - 2.0 * row[i] + row[i + 1];
      const double shift = curv < 0.0 ? 0.5 * (row[i - 1] - row[i + 1]) / curv : 0.0;
      const double u = g.u(i) + std::clamp(shift, -0.5, 0.5) * h;
      const bool excluded = std::any_of(exclusions.begin(), exclusions.end(), [&](const Disc& e) {
        return std::hypot(u - e.u, v - e.v) < e.radius;
      });
      if (!excluded) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace hypquant::validate
