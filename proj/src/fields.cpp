#include "hypquant/fields.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypquant {

void PhysicalConstants::validate() const {
  if (!(hbar > 0.0)) throw InvalidParameter("PhysicalConstants: hbar > 0 required");
  if (!(mass > 0.0)) throw InvalidParameter("PhysicalConstants: mass > 0 required");
}

void Grid2D::validate() const {
  if (!std::isfinite(u_min) || !std::isfinite(u_max) || !std::isfinite(v_min) ||
      !std::isfinite(v_max)) {
    throw InvalidParameter("Grid2D: bounds must be finite");
  }
  if (!(u_min < u_max)) throw InvalidParameter("Grid2D: u_min < u_max required");
  if (!(v_min < v_max)) throw InvalidParameter("Grid2D: v_min < v_max required");
  if (n_u < 3) throw InvalidParameter("Grid2D: n_u >= 3 required");
  if (n_v < 3) throw InvalidParameter("Grid2D: n_v >= 3 required");
}

Field2D::Field2D(const Grid2D& grid) : grid_(grid), values_(grid.size()) {
  grid_.validate();
}

Field2D::Field2D(const Grid2D& grid, std::vector<ComplexValue> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size()) {
    throw InvalidParameter("Field2D: values length must equal n_u * n_v");
  }
}

double Field2D::max_abs() const {
  double m = 0.0;
  for (const auto& z : values_) m = std::max(m, std::abs(z));
  return m;
}

double Field2D::interior_max_abs() const {
  double m = 0.0;
  for (std::size_t j = 1; j + 1 < grid_.n_v; ++j) {
    for (std::size_t i = 1; i + 1 < grid_.n_u; ++i) {
      m = std::max(m, std::abs((*this)(i, j)));
    }
  }
  return m;
}

Field2D sample(const Grid2D& grid, const FieldFunction& f) {
  Field2D out(grid);
  for (std::size_t j = 0; j < grid.n_v; ++j) {
    const double v = grid.v(j);
    for (std::size_t i = 0; i < grid.n_u; ++i) {
      out(i, j) = f(grid.u(i), v);
    }
  }
  return out;
}

namespace {

// Applies a 1D line operator to every line of the field along `axis`.
// `op(in, out, n, h)` reads and writes strided lines through the accessors.
template <typename LineOp>
Field2D apply_along(const Field2D& field, Axis axis, LineOp op) {
  const Grid2D& g = field.grid();
  Field2D out(g);
  const auto& in = field.values();
  auto& res = out.values();
  if (axis == Axis::U) {
    const double h = g.h_u();
    for (std::size_t j = 0; j < g.n_v; ++j) {
      const std::size_t base = j * g.n_u;
      op([&](std::size_t k) { return in[base + k]; },
         [&](std::size_t k) -> ComplexValue& { return res[base + k]; }, g.n_u, h);
    }
  } else {
    const double h = g.h_v();
    for (std::size_t i = 0; i < g.n_u; ++i) {
      op([&](std::size_t k) { return in[k * g.n_u + i]; },
         [&](std::size_t k) -> ComplexValue& { return res[k * g.n_u + i]; }, g.n_v,
         h);
    }
  }
  return out;
}

}  // namespace

Field2D diff1(const Field2D& field, Axis axis) {
  return apply_along(field, axis, [](auto f, auto out, std::size_t n, double h) {
    const double inv2h = 1.0 / (2.0 * h);
    for (std::size_t k = 1; k + 1 < n; ++k) out(k) = (f(k + 1) - f(k - 1)) * inv2h;
    out(0) = (-3.0 * f(0) + 4.0 * f(1) - f(2)) * inv2h;
    out(n - 1) = (3.0 * f(n - 1) - 4.0 * f(n - 2) + f(n - 3)) * inv2h;
  });
}

Field2D diff2(const Field2D& field, Axis axis) {
  return apply_along(field, axis, [](auto f, auto out, std::size_t n, double h) {
    const double invh2 = 1.0 / (h * h);
    for (std::size_t k = 1; k + 1 < n; ++k) {
      out(k) = (f(k + 1) - 2.0 * f(k) + f(k - 1)) * invh2;
    }
    out(0) = out(1);
    out(n - 1) = out(n - 2);
  });
}

}  // namespace hypquant
