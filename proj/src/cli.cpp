#include "zetaband/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

#include "zetaband/errors.hpp"
#include "zetaband/explicit_formula.hpp"
#include "zetaband/extremal.hpp"
#include "zetaband/interp.hpp"
#include "zetaband/special.hpp"
#include "zetaband/zero_sums.hpp"

namespace zetaband::cli {

namespace {

namespace ex = zetaband::extremal;
namespace ef = zetaband::explicit_formula;
namespace zs = zetaband::zero_sums;

unsigned thread_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("ZETA_TOOLKIT_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) n = static_cast<unsigned>(v);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

// Runs task(i) for i < n on up to `threads` workers; results land in index order.
// The exception of the lowest failing index is rethrown.
template <class Row>
std::vector<Row> parallel_rows(std::size_t n, unsigned threads, const std::function<Row(std::size_t)>& task) {
  std::vector<Row> out(n);
  std::vector<std::exception_ptr> errors(n);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        out[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct Pair {
  double x, y;
};

std::vector<Pair> grid2(const Range& r1, const Range& r2) {
  std::vector<Pair> g;
  for (double u : r1.values())
    for (double v : r2.values()) g.push_back({u, v});
  return g;
}

std::vector<ex::Side> sides(const std::string& kind) {
  if (kind == "minorant") return {ex::Side::Minorant};
  if (kind == "majorant") return {ex::Side::Majorant};
  if (kind == "both") return {ex::Side::Minorant, ex::Side::Majorant};
  throw DomainError("--kind must be minorant, majorant or both");
}

const char* side_name(ex::Side s) { return s == ex::Side::Minorant ? "minorant" : "majorant"; }

using Row = std::vector<Cell>;

Table constants_table(const RunConfig& cfg, bool with_masses) {
  Table t;
  if (with_masses) t.columns = {"lambda0"};
  for (const char* c : {"a", "delta", "lambda", "A", "B", "C", "D", "E", "branch"}) t.columns.push_back(c);
  if (with_masses) {
    t.columns.push_back("minorant_mass");
    t.columns.push_back("majorant_mass");
  }
  const double l0 = special::solve_lambda0();
  for (const auto& [a, d] : grid2(cfg.a, cfg.delta)) {
    const auto p = ex::ApproxParams::make(a, d);
    const auto m = ex::minorant_coeffs(p);
    const auto u = ex::majorant_coeffs(p);
    Row r;
    if (with_masses) r.push_back(l0);
    for (double v : {p.a, p.delta, p.lambda, m.A, m.B, u.C, u.D, u.E}) r.push_back(v);
    r.push_back(std::string(ex::branch_name(u.branch)));
    if (with_masses) {
      r.push_back(ex::minorant_mass(p));
      r.push_back(ex::majorant_mass(p));
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table verify_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"kind", "a", "delta", "lambda", "window", "points", "max_violation", "argmax", "ok"};
  struct Job {
    ex::Side side;
    double a, d;
  };
  std::vector<Job> jobs;
  for (const auto& [a, d] : grid2(cfg.a, cfg.delta))
    for (auto s : sides(cfg.kind)) jobs.push_back({s, a, d});
  const auto rows = parallel_rows<Row>(jobs.size(), thread_count(cfg.threads), [&](std::size_t i) {
    const auto& j = jobs[i];
    const auto p = ex::ApproxParams::make(j.a, j.d);
    const auto rep = ex::verify_extremal(p, j.side, {cfg.window, cfg.points});
    return Row{std::string(side_name(j.side)), p.a, p.delta, p.lambda, cfg.window,
               static_cast<long long>(rep.points), rep.max_violation, rep.argmax, rep.max_violation <= 1e-12};
  });
  t.rows = rows;
  return t;
}

Table mass_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"a", "delta", "lambda", "minorant_mass", "minorant_hat0", "lattice_sum", "lattice_tail",
               "majorant_mass", "majorant_hat0", "node_kind", "node_sum", "node_tail"};
  const auto g = grid2(cfg.a, cfg.delta);
  t.rows = parallel_rows<Row>(g.size(), thread_count(cfg.threads), [&](std::size_t i) {
    const auto p = ex::ApproxParams::make(g[i].x, g[i].y);
    const auto ls = ex::minorant_node_sum(p, cfg.tol);
    const auto us = ex::majorant_node_sum(p, cfg.tol);
    const auto kind = ex::majorant_coeffs(p).E > 0.0 ? ex::NodeKind::BFunctionZeros : ex::NodeKind::HalfLattice;
    return Row{p.a, p.delta, p.lambda, ex::minorant_mass(p), ex::minorant_hat(p, 0.0), ls.value, ls.tail_bound,
               ex::majorant_mass(p), ex::majorant_hat(p, 0.0), std::string(ex::node_kind_name(kind)), us.value,
               us.tail_bound};
  });
  return t;
}

Table bounds_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"sigma", "t", "B_sigma", "C_sigma", "realpart_coeff", "thm1_main", "thm1_error_shape", "thm2_main",
               "thm2_error_shape", "thm12_range_ok", "thm3_upper_main", "thm3_lower_main", "thm3_error_shape",
               "thm3_range_ok"};
  if (cfg.compare_empirical) {
    t.columns.push_back("abs_log_deriv");
    t.columns.push_back("ratio_to_thm1_main");
  }
  const auto g = grid2(cfg.sigma, cfg.t);
  const RangeOptions lenient{cfg.c, false};
  t.rows = parallel_rows<Row>(g.size(), thread_count(cfg.threads), [&](std::size_t i) {
    const double sigma = g[i].x, tv = g[i].y;
    const auto h = Height::from_t(tv);
    const auto b1 = interp::theorem1_bound(sigma, h, lenient);
    const auto b2 = interp::theorem2_bound(sigma, h, lenient);
    const auto up = ef::theorem3_upper(sigma, h, lenient);
    const auto lo = ef::theorem3_lower(sigma, h, lenient);
    Row r{sigma, tv, interp::b_sigma(sigma), interp::c_sigma(sigma), interp::realpart_coeff(sigma), b1.main_value,
          b1.error_shape_value, b2.main_value, b2.error_shape_value, b1.range_ok, up.main_value, lo.main_value,
          up.error_shape_value, up.range_ok};
    if (cfg.compare_empirical) {
      const double v = std::abs(special::log_deriv(Complex(sigma, tv)));
      r.push_back(v);
      r.push_back(v / b1.main_value);
    }
    return r;
  });
  return t;
}

Table gw_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"sigma", "t", "kind", "a", "delta", "lambda", "archimedean", "pole", "log_pi", "prime_sum", "total",
               "certificate", "correction", "correction_half_width", "implied_bound"};
  struct Job {
    double sigma, t;
    ex::Side side;
  };
  std::vector<Job> jobs;
  for (const auto& [s, tv] : grid2(cfg.sigma, cfg.t))
    for (auto side : sides(cfg.kind)) jobs.push_back({s, tv, side});
  t.rows = parallel_rows<Row>(jobs.size(), thread_count(cfg.threads), [&](std::size_t i) {
    const auto& j = jobs[i];
    const auto bs = j.side == ex::Side::Minorant ? ef::BoundSide::Lower : ef::BoundSide::Upper;
    const auto ab = ef::assemble_bound_numeric(j.sigma, j.t, bs);
    const auto corr = zs::zero_sum_correction(j.sigma, j.t, nullptr);
    return Row{j.sigma, j.t, std::string(side_name(j.side)), ab.params.a, ab.params.delta, ab.params.lambda,
               ab.rhs.archimedean, ab.rhs.pole, ab.rhs.log_pi, ab.rhs.prime_sum, ab.rhs.total, ab.rhs.certificate,
               corr.value, corr.half_width, ab.value - corr.value};
  });
  return t;
}

Table compare_table(const RunConfig& cfg) {
  if (!cfg.zeros_path) throw DomainError("compare requires --zeros PATH");
  const auto zeros = zs::load_zeros(*cfg.zeros_path);
  Table t;
  t.columns = {"sigma", "t", "re_log_deriv_prime", "repr_residual", "repr_tail_bound",
               "lower_lhs", "lower_rhs", "lower_tolerance", "upper_lhs", "upper_rhs", "upper_tolerance",
               "correction", "correction_half_width", "gw_ok"};
  const auto g = grid2(cfg.sigma, cfg.t);
  // Coverage is checked up front so no row is silently truncated.
  for (const auto& [s, tv] : g)
    if (tv + zs::SumOptions{}.window > zeros.height)
      throw RangeError("t = " + std::to_string(tv) + " lies outside the zero table coverage");
  t.rows = parallel_rows<Row>(g.size(), thread_count(cfg.threads), [&](std::size_t i) {
    const double sigma = g[i].x, tv = g[i].y;
    const auto rep = zs::representation_residual(sigma, tv, zeros);
    const auto p = ef::bandwidth_choice(sigma, tv);
    const auto hl = ef::minorant_bundle(p), hu = ef::majorant_bundle(p);
    const auto ll = zs::gw_lhs(hl, tv, zeros), lu = zs::gw_lhs(hu, tv, zeros);
    const auto rl = ef::gw_rhs(hl, tv), ru = ef::gw_rhs(hu, tv);
    const auto corr = zs::zero_sum_correction(sigma, tv, &zeros);
    const double tol_l = ll.tail_bound + rl.certificate, tol_u = lu.tail_bound + ru.certificate;
    const bool ok = std::fabs(ll.value - rl.total) <= tol_l && std::fabs(lu.value - ru.total) <= tol_u;
    return Row{sigma, tv, rep.lhs, rep.residual, rep.tail_bound, ll.value, rl.total, tol_l, lu.value, ru.total, tol_u,
               corr.value, corr.half_width, ok};
  });
  return t;
}

Table envelope_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"sigma", "t", "nu", "A", "main_term", "leading_coefficient", "c_sigma_coefficient", "range_ok"};
  const auto g = grid2(cfg.sigma, cfg.t);
  for (const auto& [sigma, tv] : g) {
    const auto h = Height::from_t(tv);
    const auto c = interp::zeta_envelope_coefficients(sigma);
    const double ll = h.loglog_t();
    // nu carries l_1 / l_{-1} under the square root, i.e. 1 / log log t.
    const double nu = std::sqrt(2.0 * (c.alpha2 + c.beta2) * (c.alpha0 + c.beta0) / (c.alpha2 * c.beta2)) / ll;
    const double A = c.beta2 / (c.alpha2 + c.beta2);
    const double main = std::exp(interp::zeta_derivative_main_log(sigma, h));
    t.rows.push_back(Row{sigma, tv, nu, A, main, interp::zeta_leading_coefficient(sigma, h),
                         interp::c_sigma(sigma) / (sigma * (1.0 - sigma)),
                         interp::theorem12_range_violation(sigma, h, cfg.c).empty()});
  }
  return t;
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          char buf[40];
          std::snprintf(buf, sizeof buf, "%.17g", v);
          return buf;
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string q = "\"";
          for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return q + "\"";
        }
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v) || (v != 0.0 && std::fabs(std::log10(std::fabs(v))) > 300.0)) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return std::string(buf);
          }
          return v;
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::Constants: return "constants";
    case Command::Coeffs: return "coeffs";
    case Command::Verify: return "verify";
    case Command::Mass: return "mass";
    case Command::Bounds: return "bounds";
    case Command::Gw: return "gw";
    case Command::Compare: return "compare";
    case Command::Envelope: return "envelope";
  }
  return "?";
}

Range Range::parse(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed range '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw DomainError("malformed range '" + text + "'");
    return v;
  };
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() == 1) return single(number(parts[0]));
  if (parts.size() != 3) throw DomainError("range must be 'lo:hi:step' or a single value: '" + text + "'");
  Range r{number(parts[0]), number(parts[1]), number(parts[2])};
  if (!(r.step > 0.0)) throw DomainError("range step must be positive");
  if (r.hi < r.lo) throw DomainError("range is empty (hi < lo)");
  return r;
}

std::vector<double> Range::values() const {
  // Counted rather than accumulated: lo + step may round back to lo at huge magnitudes.
  const double span = (hi - lo) / step;
  if (!(span < 1e7)) throw DomainError("range has too many points");
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + static_cast<double>(i) * step;
  return v;
}

Table compute(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw DomainError("--tol must be positive");
  if (!(cfg.c > 0.0)) throw DomainError("--c must be positive");
  switch (cfg.command) {
    case Command::Constants: return constants_table(cfg, true);
    case Command::Coeffs: return constants_table(cfg, false);
    case Command::Verify: return verify_table(cfg);
    case Command::Mass: return mass_table(cfg);
    case Command::Bounds: return bounds_table(cfg);
    case Command::Gw: return gw_table(cfg);
    case Command::Compare: return compare_table(cfg);
    case Command::Envelope: return envelope_table(cfg);
  }
  throw DomainError("unknown command");
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_json(const Table& table, Command command, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = command_name(command);
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto fail = [&](const char* kind, const std::string& msg, int code) {
    if (config.format == Format::Json) {
      nlohmann::ordered_json e;
      e["error"] = {{"kind", kind}, {"message", msg}, {"exit_code", code}};
      out << e.dump(2) << '\n';
    } else {
      err << "error (" << kind << "): " << msg << '\n';
    }
    return code;
  };
  try {
    const Table table = compute(config);
    if (config.format == Format::Json)
      write_json(table, config.command, out);
    else
      write_csv(table, out);
    return 0;
  } catch (const IoError& e) {
    return fail(e.kind(), e.what(), 2);
  } catch (const ParseError& e) {
    return fail(e.kind(), e.what(), 2);
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), 1);
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal bandlimited approximation and explicit-formula bounds for zeta'/zeta"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string sigma, t, a, delta, format = "csv";
  std::string zeros;

  struct Spec {
    Command command;
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {Command::Constants, "constants", "lambda0 and, per (a, delta), coefficients and masses"},
      {Command::Coeffs, "coeffs", "minorant and majorant coefficients per (a, delta)"},
      {Command::Verify, "verify", "grid check of L <= f_a <= U"},
      {Command::Mass, "mass", "closed-form masses against transforms at 0 and node sums"},
      {Command::Bounds, "bounds", "bound constants, main terms and error shapes per (sigma, t)"},
      {Command::Gw, "gw", "explicit-formula right-hand side for M_t L and M_t U"},
      {Command::Compare, "compare", "zero-table checks of the explicit formula and representation identity"},
      {Command::Envelope, "envelope", "derivative-bound parameters for the zeta envelopes"},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&cfg, c = s.command] { cfg.command = c; });
    sub->add_option("--sigma", sigma, "sigma value or lo:hi:step");
    sub->add_option("--t", t, "height value or lo:hi:step");
    sub->add_option("--a", a, "a value or lo:hi:step");
    sub->add_option("--delta", delta, "bandwidth value or lo:hi:step");
    sub->add_option("--window", cfg.window, "verify grid half-width");
    sub->add_option("--points", cfg.points, "verify grid points");
    sub->add_option("--zeros", zeros, "zero-ordinate table");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--c", cfg.c, "range constant c");
    sub->add_option("--tol", cfg.tol, "tolerance for node sums");
    sub->add_option("--kind", cfg.kind, "minorant, majorant or both")->check(CLI::IsMember({"minorant", "majorant", "both"}));
    sub->add_option("--threads", cfg.threads, "worker threads (default: ZETA_TOOLKIT_THREADS)");
    sub->add_flag("--compare-empirical", cfg.compare_empirical, "bounds: add |zeta'/zeta| and its ratio to the main term");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  try {
    if (!sigma.empty()) cfg.sigma = Range::parse(sigma);
    if (!t.empty()) cfg.t = Range::parse(t);
    if (!a.empty()) cfg.a = Range::parse(a);
    if (!delta.empty()) cfg.delta = Range::parse(delta);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }
  if (!zeros.empty()) cfg.zeros_path = zeros;
  return run(cfg, out, err);
}

}  // namespace zetaband::cli
