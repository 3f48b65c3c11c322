#include "hypquant/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

namespace hypquant::output {

Quantity parse_quantity(std::string_view name) {
  if (name == "abs2") return Quantity::Abs2;
  if (name == "re2") return Quantity::Re2;
  if (name == "im2") return Quantity::Im2;
  if (name == "re") return Quantity::Re;
  if (name == "im") return Quantity::Im;
  if (name == "phase") return Quantity::Phase;
  throw InvalidParameter("quantity must be one of abs2, re2, im2, re, im, phase");
}

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Abs2: return "abs2";
    case Quantity::Re2: return "re2";
    case Quantity::Im2: return "im2";
    case Quantity::Re: return "re";
    case Quantity::Im: return "im";
    case Quantity::Phase: return "phase";
  }
  return "";
}

double reduce(ComplexValue z, Quantity q) {
  switch (q) {
    case Quantity::Abs2: return std::norm(z);
    case Quantity::Re2: return z.real() * z.real();
    case Quantity::Im2: return z.imag() * z.imag();
    case Quantity::Re: return z.real();
    case Quantity::Im: return z.imag();
    case Quantity::Phase: return std::arg(z);
  }
  return 0.0;
}

bool is_nonnegative(Quantity q) {
  return q == Quantity::Abs2 || q == Quantity::Re2 || q == Quantity::Im2;
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string render_csv(const Field2D& field, Quantity q) {
  const Grid2D& g = field.grid();
  std::string out = "u,v,value\n";
  out.reserve(g.size() * 48);
  for (std::size_t j = 0; j < g.n_v; ++j) {
    const std::string v = format_double(g.v(j));
    for (std::size_t i = 0; i < g.n_u; ++i) {
      out += format_double(g.u(i));
      out += ',';
      out += v;
      out += ',';
      out += format_double(reduce(field(i, j), q));
      out += '\n';
    }
  }
  return out;
}

std::string render_columns(std::span<const std::string> names,
                           std::span<const std::vector<double>> columns) {
  if (names.size() != columns.size() || columns.empty()) {
    throw InvalidParameter("render_columns: one name per column required");
  }
  const std::size_t rows = columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != rows) throw InvalidParameter("render_columns: columns must have equal length");
  }
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) out += ',';
    out += names[k];
  }
  out += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (k) out += ',';
      out += format_double(columns[k][r]);
    }
    out += '\n';
  }
  return out;
}

std::string render_pgm(const Field2D& field, Quantity q) {
  if (!is_nonnegative(q)) {
    throw InvalidParameter("pgm output requires a non-negative quantity (abs2, re2 or im2)");
  }
  const Grid2D& g = field.grid();
  std::vector<double> vals(g.size());
  double max = 0.0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    vals[k] = reduce(field.values()[k], q);
    max = std::max(max, vals[k]);
  }
  std::string out = "P2\n" + std::to_string(g.n_u) + " " + std::to_string(g.n_v) + "\n255\n";
  for (std::size_t j = 0; j < g.n_v; ++j) {
    for (std::size_t i = 0; i < g.n_u; ++i) {
      int pixel = 0;
      if (max > 0.0) {
        pixel = static_cast<int>(std::floor(255.0 * (vals[g.index(i, j)] / max)));
        pixel = std::clamp(pixel, 0, 255);
      }
      if (i) out += ' ';
      out += std::to_string(pixel);
    }
    out += '\n';
  }
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  os.close();
  if (!os) throw IoError("failed writing " + path.string());
}

void write_csv(std::span<const double> u, std::span<const double> values,
               const std::filesystem::path& path) {
  const std::array<std::string, 2> names{"u", "value"};
  const std::array<std::vector<double>, 2> cols{std::vector<double>(u.begin(), u.end()),
                                                std::vector<double>(values.begin(), values.end())};
  write_file(path, render_columns(names, cols));
}

}  // namespace hypquant::output
