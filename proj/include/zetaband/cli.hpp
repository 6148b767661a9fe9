#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace zetaband::cli {

enum class Command { Constants, Coeffs, Verify, Mass, Bounds, Gw, Compare, Envelope };
enum class Format { Csv, Json };

const char* command_name(Command c);

// "lo:hi:step" or a single value. Values are lo + i * step for i >= 0 up to hi.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;

  static Range single(double v) { return {v, v, 1.0}; }
  // Throws DomainError on malformed text, hi < lo, or step <= 0.
  static Range parse(const std::string& text);
  std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::Constants;
  Range sigma = Range::single(0.75);
  Range t = Range::single(1e4);
  Range a = Range::single(0.25);
  Range delta = Range::single(1.0);
  double window = 20.0;           // verify: grid covers [-window, window]
  std::size_t points = 100001;    // verify: grid points
  std::optional<std::string> zeros_path;
  Format format = Format::Csv;
  double tol = 1e-10;
  double c = 0.01;
  std::string kind = "both";      // verify/gw: minorant, majorant or both
  bool compare_empirical = false; // bounds: add |zeta'/zeta| and its ratio to the main term
  unsigned threads = 0;           // 0: ZETA_TOOLKIT_THREADS or hardware concurrency
};

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Computes the table for a validated config. Throws zetaband::Error subclasses.
Table compute(const RunConfig& config);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, Command command, std::ostream& out);

// Exit codes: 0 success, 1 domain/range/convergence error, 2 I/O or parse error.
// In json mode the error is written to `out` as {"error": {...}}.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line entry point.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace zetaband::cli
