#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hypquant/numerics.hpp"

namespace hypquant {

/// hbar and m; both must be positive.
struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const;
};

enum class Axis { U, V };

/// Uniform rectangular lattice over [u_min, u_max] x [v_min, v_max] with
/// n_u x n_v nodes (endpoints included).
struct Grid2D {
  double u_min = 0.0;
  double u_max = 1.0;
  double v_min = 0.0;
  double v_max = 1.0;
  std::size_t n_u = 3;
  std::size_t n_v = 3;

  /// Throws InvalidParameter naming the violated invariant.
  void validate() const;

  double h_u() const { return (u_max - u_min) / static_cast<double>(n_u - 1); }
  double h_v() const { return (v_max - v_min) / static_cast<double>(n_v - 1); }
  double u(std::size_t i) const { return u_min + static_cast<double>(i) * h_u(); }
  double v(std::size_t j) const { return v_min + static_cast<double>(j) * h_v(); }
  std::size_t size() const { return n_u * n_v; }
  std::size_t index(std::size_t i, std::size_t j) const { return j * n_u + i; }
};

/// Complex samples on a Grid2D, row-major with v as the outer index.
class Field2D {
 public:
  Field2D() = default;
  /// Zero field on `grid`.
  explicit Field2D(const Grid2D& grid);
  Field2D(const Grid2D& grid, std::vector<ComplexValue> values);

  const Grid2D& grid() const { return grid_; }
  const std::vector<ComplexValue>& values() const { return values_; }
  std::vector<ComplexValue>& values() { return values_; }

  ComplexValue operator()(std::size_t i, std::size_t j) const {
    return values_[grid_.index(i, j)];
  }
  ComplexValue& operator()(std::size_t i, std::size_t j) {
    return values_[grid_.index(i, j)];
  }

  /// Largest modulus over all nodes.
  double max_abs() const;
  /// Largest modulus over nodes with 1 <= i <= n_u-2 and 1 <= j <= n_v-2.
  double interior_max_abs() const;

 private:
  Grid2D grid_;
  std::vector<ComplexValue> values_;
};

using FieldFunction = std::function<ComplexValue(double u, double v)>;

/// values[j*n_u + i] = f(u_i, v_j).
Field2D sample(const Grid2D& grid, const FieldFunction& f);

/// First derivative along `axis`: central differences in the interior,
/// second-order one-sided stencils on the two edge lines.
Field2D diff1(const Field2D& field, Axis axis);

/// Second derivative along `axis` by the 3-point stencil. Edge nodes along
/// `axis` carry a copy of the nearest interior value and must be excluded
/// from norms (see Field2D::interior_max_abs).
Field2D diff2(const Field2D& field, Axis axis);

}  // namespace hypquant
