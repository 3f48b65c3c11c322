#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypquant/fields.hpp"

namespace hypquant::output {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real-valued reductions of a complex sample.
enum class Quantity { Abs2, Re2, Im2, Re, Im, Phase };

Quantity parse_quantity(std::string_view name);
std::string_view quantity_name(Quantity q);
double reduce(ComplexValue z, Quantity q);
/// Abs2, Re2 and Im2 are never negative.
bool is_nonnegative(Quantity q);

/// Shortest decimal string that reads back to exactly `x`.
std::string format_double(double x);

/// Header `u,v,value`, then one row per node, v outer and u inner.
std::string render_csv(const Field2D& field, Quantity q);

/// Header `name0,name1,...`, then one row per index. All columns must have
/// the same length.
std::string render_columns(std::span<const std::string> names,
                           std::span<const std::vector<double>> columns);

/// Plain PGM (P2): width n_u, height n_v, maxval 255, first image row at
/// v_min. Pixel = floor(255 * value / max), all zero for an all-zero field.
/// Throws InvalidParameter unless `q` is non-negative.
std::string render_pgm(const Field2D& field, Quantity q);

/// Writes `contents` verbatim (LF line endings as rendered). Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

inline void write_csv(const Field2D& field, Quantity q, const std::filesystem::path& path) {
  write_file(path, render_csv(field, q));
}

/// 1D series as `u,value`.
void write_csv(std::span<const double> u, std::span<const double> values,
               const std::filesystem::path& path);

inline void write_pgm(const Field2D& field, Quantity q, const std::filesystem::path& path) {
  write_file(path, render_pgm(field, q));
}

}  // namespace hypquant::output
