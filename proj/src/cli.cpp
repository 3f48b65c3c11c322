#include "hypquant/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "hypquant/classical.hpp"
#include "hypquant/report.hpp"
#include "hypquant/validate.hpp"

namespace hypquant::cli {

namespace {

struct GridFlags {
  std::optional<double> u_min, u_max, v_min, v_max;
  std::optional<std::size_t> n_u, n_v;
};

struct Flags {
  double alpha = 0.0;
  double d = 0.0;
  double L = 4.0;
  int n_max = 400;
  bool alpha_set = false;
  bool d_set = false;
  GridFlags grid;
  std::string quantity = "abs2";
  std::string format = "csv";
  std::string path = "free";
};

void add_grid(CLI::App* sub, GridFlags& g, bool two_d) {
  sub->add_option("--umin", g.u_min, "lower u bound");
  sub->add_option("--umax", g.u_max, "upper u bound");
  sub->add_option("--nu", g.n_u, "u nodes");
  if (two_d) {
    sub->add_option("--vmin", g.v_min, "lower v bound");
    sub->add_option("--vmax", g.v_max, "upper v bound");
    sub->add_option("--nv", g.n_v, "v nodes");
  }
}

void add_packet(CLI::App* sub, Flags& f, RunConfig& c) {
  sub->add_option("--alpha", f.alpha, "Gaussian inverse squared width");
  sub->add_option("--d", f.d, "Gaussian centers at +/- d");
  sub->add_option("--hbar", c.constants.hbar, "reduced Planck constant");
  sub->add_option("--mass", c.constants.mass, "particle mass");
}

void add_output(CLI::App* sub, RunConfig& c) {
  sub->add_option("--out", c.out_path, "output file (stdout when omitted)");
}

Grid2D resolve_grid(const GridFlags& g, Grid2D fallback) {
  fallback.u_min = g.u_min.value_or(fallback.u_min);
  fallback.u_max = g.u_max.value_or(fallback.u_max);
  fallback.v_min = g.v_min.value_or(fallback.v_min);
  fallback.v_max = g.v_max.value_or(fallback.v_max);
  fallback.n_u = g.n_u.value_or(fallback.n_u);
  fallback.n_v = g.n_v.value_or(fallback.n_v);
  return fallback;
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "pgm") return Format::Pgm;
  throw InvalidParameter("format must be csv or pgm");
}

PathKind parse_path(const std::string& s) {
  if (s == "free") return PathKind::Free;
  if (s == "box") return PathKind::Box;
  if (s == "oscillator") return PathKind::Oscillator;
  throw InvalidParameter("path must be free, box or oscillator");
}

void emit(const RunConfig& config, std::string_view text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    if (!out) throw output::IoError("failed writing to standard output");
  } else {
    output::write_file(config.out_path, text);
  }
}

std::string render_field(const RunConfig& config, const Field2D& field) {
  return config.format == Format::Pgm ? output::render_pgm(field, config.quantity)
                                      : output::render_csv(field, config.quantity);
}

std::vector<double> nodes(double lo, double hi, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = lo + static_cast<double>(i) * ((hi - lo) / static_cast<double>(n - 1));
  }
  return x;
}

std::string moments_text(const RunConfig& config) {
  const auto m = validate::halfline_moments(config.free, config.constants,
                                            validate::moments_quadrature(config.free));
  const double floor = 0.25 * m.hbar * m.hbar;
  std::ostringstream os;
  os << "alpha " << output::format_double(config.free.alpha) << "\n"
     << "d " << output::format_double(config.free.d) << "\n"
     << "hbar " << output::format_double(m.hbar) << "\n"
     << "mean_u " << output::format_double(m.mean_u) << "\n"
     << "var_u " << output::format_double(m.var_u) << "\n"
     << "var_p " << output::format_double(m.var_p) << "\n"
     << "product " << output::format_double(m.product) << "\n"
     << "product_over_hbar2_quarter " << output::format_double(m.product / floor) << "\n";
  return os.str();
}

std::string classical_text(const RunConfig& config) {
  const Grid2D& g = config.grid;
  std::vector<double> v;
  std::vector<std::string> names{"v"};
  std::vector<std::vector<double>> cols;
  switch (config.path) {
    case PathKind::Free:
    case PathKind::Box: {
      v = nodes(g.v_min, g.v_max, g.n_v);
      const double d = config.path == PathKind::Free ? config.free.d : config.box.d;
      for (int a : {1, -1}) {
        for (int b : {1, -1}) {
          std::vector<double> u(v.size());
          for (std::size_t k = 0; k < v.size(); ++k) {
            u[k] = config.path == PathKind::Free
                       ? classical::free_path({a, b * d, 0.0}, v[k])
                       : classical::box_path({config.box.L, b * d, a}, v[k]);
          }
          const std::string tag = config.path == PathKind::Free
                                      ? std::string(a > 0 ? "slope_pos" : "slope_neg")
                                      : std::string(a > 0 ? "dir_pos" : "dir_neg");
          names.push_back("u_" + tag + (b > 0 ? "_start_pos" : "_start_neg"));
          cols.push_back(std::move(u));
        }
      }
      break;
    }
    case PathKind::Oscillator: {
      const classical::OscillatorOrbit orbit{config.amplitude, config.delta, 0.0, 1.0};
      v = nodes(-config.amplitude, config.amplitude, g.n_v);
      std::vector<double> up(v.size());
      std::vector<double> um(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) {
        const auto br = classical::oscillator_curve(orbit, v[k]);
        up[k] = br.u_plus;
        um[k] = br.u_minus;
      }
      names.push_back("u_plus");
      names.push_back("u_minus");
      cols.push_back(std::move(up));
      cols.push_back(std::move(um));
      break;
    }
  }
  cols.insert(cols.begin(), v);
  return output::render_columns(names, cols);
}

std::string slope_text(const RunConfig& config) {
  const auto u = nodes(config.grid.u_min, config.grid.u_max, config.grid.n_u);
  std::vector<double> psi(u.size());
  std::vector<double> slope(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    psi[k] = freepacket::initial_condition(u[k], config.free);
    slope[k] = freepacket::initial_slope(u[k], config.free).imag();
  }
  const std::vector<std::string> names{"u", "psi", "dpsi_dv_im"};
  const std::vector<std::vector<double>> cols{u, psi, slope};
  return output::render_columns(names, cols);
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args) {
  ParseResult result;
  RunConfig& c = result.config;
  Flags f;

  CLI::App app{"Wave packets of the hyperbolic quantization equation", "hypquant"};
  app.require_subcommand(1);

  auto* free = app.add_subcommand("free", "closed-form free packet on a grid");
  add_packet(free, f, c);
  add_grid(free, f.grid, true);
  free->add_option("--quantity", f.quantity, "abs2, re2, im2, re, im or phase");
  free->add_option("--format", f.format, "csv or pgm");
  add_output(free, c);

  auto* box = app.add_subcommand("box", "mode-series packet in the infinite well");
  box->add_option("--alpha", f.alpha, "Gaussian inverse squared width");
  box->add_option("--d", f.d, "Gaussian centers at +/- d");
  box->add_option("--L", f.L, "box width");
  box->add_option("--nmax", f.n_max, "number of modes");
  add_grid(box, f.grid, true);
  box->add_option("--quantity", f.quantity, "abs2, re2, im2, re, im or phase");
  box->add_option("--format", f.format, "csv or pgm");
  add_output(box, c);

  auto* slope = app.add_subcommand("slope", "initial data and initial v-derivative");
  add_packet(slope, f, c);
  add_grid(slope, f.grid, false);
  add_output(slope, c);

  auto* val = app.add_subcommand("validate", "erratum report and acceptance checks");
  add_output(val, c);

  auto* mom = app.add_subcommand("moments", "half-line uncertainty moments");
  add_packet(mom, f, c);
  add_output(mom, c);

  auto* cls = app.add_subcommand("classical", "classical paths in the (u, v) plane");
  cls->add_option("--path", f.path, "free, box or oscillator");
  cls->add_option("--d", f.d, "path offset at v = 0");
  cls->add_option("--L", f.L, "box width");
  cls->add_option("--amplitude", c.amplitude, "oscillator amplitude");
  cls->add_option("--delta", c.delta, "oscillator phase difference");
  cls->add_option("--vmin", f.grid.v_min, "lower v bound");
  cls->add_option("--vmax", f.grid.v_max, "upper v bound");
  cls->add_option("--nv", f.grid.n_v, "v nodes");
  add_output(cls, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.help = true;
    result.help_text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    throw InvalidParameter(e.what());
  }
  const CLI::App* chosen = app.get_subcommands().front();
  auto given = [&](const char* flag) {
    const CLI::Option* o = chosen->get_option_no_throw(flag);
    return o != nullptr && o->count() > 0;
  };
  f.alpha_set = given("--alpha");
  f.d_set = given("--d");
  const std::string name = chosen->get_name();
  c.quantity = output::parse_quantity(f.quantity);
  c.format = parse_format(f.format);
  if (name == "free" || name == "slope" || name == "moments") {
    c.command = name == "free" ? Command::Free : name == "slope" ? Command::Slope : Command::Moments;
    c.free = {f.alpha_set ? f.alpha : 1.0, f.d_set ? f.d : 2.0};
    c.grid = resolve_grid(f.grid, {-6.0, 6.0, -6.0, 6.0, 241, 241});
  } else if (name == "box") {
    c.command = Command::Box;
    c.box = {f.L, f.alpha_set ? f.alpha : 5.0, f.d_set ? f.d : 1.5, f.n_max};
    const double half = 0.5 * f.L;
    c.grid = resolve_grid(f.grid, {-half, half, -half, half, 241, 241});
  } else if (name == "validate") {
    c.command = Command::Validate;
  } else {
    c.command = Command::Classical;
    c.path = parse_path(f.path);
    c.free = {1.0, f.d_set ? f.d : 1.5};
    c.box = {f.L, 5.0, f.d_set ? f.d : 1.5, 1};
    const double reach = c.path == PathKind::Box ? 2.0 * f.L : 6.0;
    c.grid = resolve_grid(f.grid, {-6.0, 6.0, -reach, reach, 3, 241});
  }
  return result;
}

void validate_config(const RunConfig& config) {
  config.constants.validate();
  switch (config.command) {
    case Command::Free:
      config.free.validate();
      config.grid.validate();
      break;
    case Command::Box: {
      config.box.validate();
      config.grid.validate();
      const double half = 0.5 * config.box.L;
      if (std::max({std::abs(config.grid.u_min), std::abs(config.grid.u_max),
                    std::abs(config.grid.v_min), std::abs(config.grid.v_max)}) > half) {
        throw InvalidParameter("box grid must lie inside [-L/2, L/2]^2");
      }
      break;
    }
    case Command::Slope:
      config.free.validate();
      if (!(config.grid.n_u >= 2)) throw InvalidParameter("slope requires nu >= 2");
      if (!(config.grid.u_min < config.grid.u_max)) {
        throw InvalidParameter("slope requires umin < umax");
      }
      break;
    case Command::Moments:
      config.free.validate();
      break;
    case Command::Validate:
      break;
    case Command::Classical:
      if (!(config.grid.n_v >= 2)) throw InvalidParameter("classical requires nv >= 2");
      if (config.path == PathKind::Oscillator) {
        classical::OscillatorOrbit{config.amplitude, config.delta, 0.0, 1.0}.validate();
      } else {
        if (!(config.grid.v_min < config.grid.v_max)) {
          throw InvalidParameter("classical requires vmin < vmax");
        }
        if (!std::isfinite(config.free.d)) throw InvalidParameter("d must be finite");
        if (config.path == PathKind::Box) {
          classical::BoxReflectedPath{config.box.L, config.box.d, 1}.validate();
        }
      }
      break;
  }
  const bool grid_output = config.command == Command::Free || config.command == Command::Box;
  if (config.format == Format::Pgm) {
    if (!grid_output) throw InvalidParameter("pgm format is only available for free and box");
    if (!output::is_nonnegative(config.quantity)) {
      throw InvalidParameter("pgm output requires a non-negative quantity (abs2, re2 or im2)");
    }
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    switch (config.command) {
      case Command::Free: {
        const Field2D field = sample(config.grid, [&](double u, double v) {
          return freepacket::packet_closed(u, v, config.free);
        });
        emit(config, render_field(config, field), out);
        return kExitOk;
      }
      case Command::Box: {
        const auto coeffs =
            boxpacket::coefficients_numeric(config.box, boxpacket::coefficient_quadrature());
        emit(config, render_field(config, boxpacket::sample_series(config.grid, config.box, coeffs)),
             out);
        return kExitOk;
      }
      case Command::Slope:
        emit(config, slope_text(config), out);
        return kExitOk;
      case Command::Moments:
        emit(config, moments_text(config), out);
        return kExitOk;
      case Command::Classical:
        emit(config, classical_text(config), out);
        return kExitOk;
      case Command::Validate: {
        std::string text = report::render_findings(report::erratum_report());
        bool all = true;
        for (const auto& r : report::run_checks()) {
          text += report::format_check(r) + "\n";
          all = all && r.pass;
        }
        emit(config, text, out);
        return all ? kExitOk : kExitValidationFailure;
      }
    }
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitBadParameters;
  } catch (const DomainError& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitBadParameters;
  } catch (const output::IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParseResult parsed;
  try {
    parsed = parse_args(args);
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitBadParameters;
  }
  if (parsed.help) {
    out << parsed.help_text;
    return kExitOk;
  }
  return run(parsed.config, out, err);
}

}  // namespace hypquant::cli
