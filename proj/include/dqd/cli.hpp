#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dqd/model.hpp"
#include "dqd/quantifiers.hpp"
#include "dqd/sweep.hpp"

namespace dqd::cli {

enum class Command { Point, Sweep, SuddenDeath, Crossing };
enum class OutputFormat { Csv, Json };

enum ExitStatus : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by parse_args for --help; what() is the usage text.
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

struct RunConfig {
  Command command = Command::Point;
  ModelParams params;
  SweepSpec sweep;     // Command::Sweep
  double lo = 0.0;     // tc: t-lo, crossing: v-lo
  double hi = 0.0;     // tc: t-hi, crossing: v-hi
  double tol = 0.0;
  std::string output;  // empty or "-" means the data stream
  OutputFormat format = OutputFormat::Csv;
};

inline constexpr std::string_view kCsvHeader =
    "variable,omega,delta_a,delta_b,coulomb,temperature,p1,p2,p3,p4,"
    "c_total,c_local,c_correlated,concurrence";

// args excludes the program name. Throws UsageError naming the offending
// flag; validates every parameter before returning.
RunConfig parse_args(const std::vector<std::string>& args);

// `variable` fills the first CSV column / JSON field: the swept quantity's
// name for sweeps, otherwise the command name.
void write_csv(std::ostream& out, std::span<const QuantifierRecord> records, std::string_view variable);
void write_json(std::ostream& out, std::span<const QuantifierRecord> records, std::string_view variable,
                bool as_array);

// Serializes to `sink` (a path, or empty/"-" for `data`). Returns kExitIo if
// the sink cannot be written.
int emit_records(std::span<const QuantifierRecord> records, std::string_view variable, bool as_array,
                 OutputFormat format, const std::string& sink, std::ostream& data, std::ostream& diag);

int run(const RunConfig& config, std::ostream& data, std::ostream& diag);

// Full front end: parse, run, map failures onto ExitStatus.
int run_cli(const std::vector<std::string>& args, std::ostream& data, std::ostream& diag);

}  // namespace dqd::cli
