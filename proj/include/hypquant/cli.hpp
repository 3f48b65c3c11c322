#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypquant/boxpacket.hpp"
#include "hypquant/fields.hpp"
#include "hypquant/freepacket.hpp"
#include "hypquant/output.hpp"

namespace hypquant::cli {

enum class Command { Free, Box, Slope, Validate, Moments, Classical };
enum class Format { Csv, Pgm };
/// Which classical curves the `classical` command tabulates.
enum class PathKind { Free, Box, Oscillator };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitBadParameters = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  Command command = Command::Free;
  freepacket::FreePacketParams free{1.0, 2.0};
  boxpacket::BoxPacketParams box{4.0, 5.0, 1.5, 400};
  Grid2D grid{-6.0, 6.0, -6.0, 6.0, 241, 241};
  output::Quantity quantity = output::Quantity::Abs2;
  Format format = Format::Csv;
  PathKind path = PathKind::Free;
  /// Oscillator amplitude and phase difference delta1 - delta2.
  double amplitude = 1.0;
  double delta = 0.0;
  PhysicalConstants constants;
  /// Empty: write to the output stream passed to run().
  std::string out_path;
};

/// Parses `hypquant <command> [flags]`. Throws InvalidParameter for
/// malformed or unknown arguments. `help` is set (and the usage text
/// stored in `help_text`) when --help was requested.
struct ParseResult {
  RunConfig config;
  bool help = false;
  std::string help_text;
};
ParseResult parse_args(const std::vector<std::string>& args);

/// Checks every parameter invariant the command depends on. Throws
/// InvalidParameter naming the first violated invariant.
void validate_config(const RunConfig& config);

/// Executes the command, writing exactly one artifact to config.out_path
/// (or to `out`). Returns one of the kExit codes; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run, with parse errors mapped to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypquant::cli
