#include "xifeq/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "xifeq/feq_solver.hpp"
#include "xifeq/suite.hpp"
#include "xifeq/theta_kernel.hpp"

namespace xifeq {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const field_value& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  const std::string& s = std::get<std::string>(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

class stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

quadrature_spec g_quad;
std::string g_format = "csv";
std::string g_out_path;

// Shared result sink; records are buffered and emitted in grid order.
struct sink {
  std::vector<record> records;
  bool any_failed = false;
  bool any_error = false;

  // Runs one grid cell; a numerical failure is flagged on the record and
  // the sweep continues.
  template <class Fn>
  void cell(Fn&& fn) {
    record rec;
    const stopwatch timer;
    try {
      const bool ok = fn(rec);
      if (!ok) any_failed = true;
      rec.add("wall_ms", timer.ms());
      rec.add("status", std::string("ok"));
    } catch (const std::exception& e) {
      any_error = true;
      rec.add("wall_ms", timer.ms());
      rec.add("status", std::string("error: ") + e.what());
    }
    records.push_back(std::move(rec));
  }

  int exit_code() const {
    if (any_error || any_failed) return 1;
    return 0;
  }
};

void emit(const sink& s) {
  auto write = [&](std::ostream& os) {
    if (g_format == "jsonl")
      write_jsonl(os, s.records);
    else
      write_csv(os, s.records);
  };
  if (g_out_path.empty() || g_out_path == "-") {
    write(std::cout);
  } else {
    std::ofstream os(g_out_path);
    if (!os) throw std::runtime_error("cannot open output file " + g_out_path);
    write(os);
  }
}

void add_solver_fields(record& rec, const solver_params& p) {
  rec.add("z", p.z);
  rec.add("y", p.y);
  rec.add("x", p.x);
  rec.add("a", p.a);
}

void add_report_fields(record& rec, const residual_report& r) {
  rec.add("residual", r.residual);
  rec.add("tolerance", r.tolerance);
  rec.add("evaluations", static_cast<long long>(r.evaluations));
  rec.add("passed", r.passed);
}

int run_eval_xi(const std::vector<cplx>& ss, sink& out) {
  for (cplx s : ss) {
    out.cell([&](record& rec) {
      rec.add("s", s);
      const cplx v = xi(s);
      rec.add("xi", v);
      return true;
    });
  }
  emit(out);
  return out.exit_code();
}

int run_eval_kernel(const std::vector<double>& ts, sink& out) {
  for (double t : ts) {
    out.cell([&](record& rec) {
      rec.add("t", t);
      rec.add("hbar", hbar(t));
      return true;
    });
  }
  emit(out);
  return out.exit_code();
}

int run_verify_grid(const std::vector<cplx>& zs, const std::vector<cplx>& ys,
                    const std::vector<double>& xs, double a, bool residue,
                    sink& out) {
  for (cplx z : zs) {
    for (cplx y : ys) {
      for (double x : xs) {
        out.cell([&](record& rec) {
          solver_params p;
          p.z = z;
          p.y = y;
          p.x = x;
          p.a = a;
          add_solver_fields(rec, p);
          const residual_report r = residue
                                        ? contour_shift_residue_check(p, g_quad)
                                        : feq_residual(p, g_quad);
          add_report_fields(rec, r);
          return r.passed;
        });
      }
    }
  }
  emit(out);
  return out.exit_code();
}

int run_verify_rh(int zero_count, const std::vector<cplx>& zs,
                  const std::vector<double>& xs, sink& out) {
  if (zero_count < 1) throw CLI::ValidationError("--zeros must be >= 1");
  // Zeros above t = 100 are out of range for this build.
  const zero_scan_result scan = find_zeta_zeros(0.0, 100.0, 0.05);
  if (static_cast<int>(scan.zeros.size()) < zero_count) {
    std::ostringstream msg;
    msg << "only " << scan.zeros.size() << " zeros available below t = 100";
    throw CLI::ValidationError(msg.str());
  }
  for (int i = 0; i < zero_count; ++i) {
    for (cplx z : zs) {
      for (double x : xs) {
        out.cell([&](record& rec) {
          rec.add("gamma", scan.zeros[i].gamma);
          rec.add("z", z);
          rec.add("x", x);
          const residual_report r = rh_residual(z, scan.zeros[i], x, g_quad);
          rec.add("residual", r.residual);
          rec.add("tolerance", r.tolerance);
          rec.add("evaluations", static_cast<long long>(r.evaluations));
          rec.add("passed", r.passed);
          return r.passed;
        });
      }
    }
  }
  emit(out);
  return out.exit_code();
}

int run_find_zeros(std::pair<double, double> range, double step, sink& out) {
  const zero_scan_result scan =
      find_zeta_zeros(range.first, range.second, step);
  for (const auto& [lo, hi] : scan.suspected)
    std::cerr << "warning: step may be too coarse; possible zero pair in ["
              << lo << ", " << hi << "]\n";
  long long index = 0;
  for (const zeta_zero& z : scan.zeros) {
    out.cell([&](record& rec) {
      rec.add("index", ++index);
      rec.add("gamma", z.gamma);
      rec.add("bracket_lo", z.bracket_lo);
      rec.add("bracket_hi", z.bracket_hi);
      rec.add("xi_residual", z.xi_residual);
      return true;
    });
  }
  emit(out);
  return out.exit_code();
}

int run_fit_growth(const std::vector<double>& radii, int samples, sink& out) {
  const growth_envelope env = fit_growth_envelope(radii, samples);
  for (double radius : radii) {
    out.cell([&](record& rec) {
      rec.add("radius", radius);
      rec.add("circle_max", xi_circle_max(radius, samples));
      rec.add("envelope", env.A * std::exp((env.r + env.delta) * radius));
      rec.add("A", env.A);
      rec.add("r", env.r);
      rec.add("delta", env.delta);
      rec.add("violation_radius",
              env.max_violation_radius ? *env.max_violation_radius : -1.0);
      return true;
    });
  }
  emit(out);
  return out.exit_code();
}

int run_suite(sink& out) {
  for (const suite_check& c : run_acceptance_suite(g_quad)) {
    out.cell([&](record& rec) {
      rec.add("criterion", static_cast<long long>(c.criterion));
      rec.add("name", c.name);
      rec.add("observed", c.observed);
      rec.add("bound", c.bound);
      rec.add("mode", std::string(c.require_at_least ? "at-least" : "at-most"));
      rec.add("passed", c.passed);
      return c.passed;
    });
  }
  emit(out);
  return out.exit_code();
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<record>& records) {
  if (records.empty()) return;
  const record& head = records.front();
  for (std::size_t i = 0; i < head.fields.size(); ++i)
    os << (i ? "," : "") << head.fields[i].first;
  os << "\n";
  for (const record& rec : records) {
    if (rec.fields.size() != head.fields.size())
      throw std::logic_error("write_csv: records with mismatched schemas");
    for (std::size_t i = 0; i < rec.fields.size(); ++i)
      os << (i ? "," : "") << csv_field(rec.fields[i].second);
    os << "\n";
  }
}

void write_jsonl(std::ostream& os, const std::vector<record>& records) {
  for (const record& rec : records) {
    nlohmann::ordered_json obj;
    for (const auto& [key, value] : rec.fields) {
      if (const auto* d = std::get_if<double>(&value)) {
        // match the CSV text exactly so parsed values agree bit for bit
        obj[key] = std::isfinite(*d)
                       ? nlohmann::ordered_json::parse(format_double(*d))
                       : nlohmann::ordered_json();
      } else if (const auto* i = std::get_if<long long>(&value)) {
        obj[key] = *i;
      } else if (const auto* b = std::get_if<bool>(&value)) {
        obj[key] = *b;
      } else {
        obj[key] = std::get<std::string>(value);
      }
    }
    os << obj.dump() << "\n";
  }
}

cplx parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) {
    std::size_t used = 0;
    const double re = std::stod(s, &used);
    if (used != s.size())
      throw std::invalid_argument("malformed complex literal: " + s);
    return {re, 0.0};
  }
  s.pop_back();  // drop the trailing i

  // Split at the last +/- that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] != '+' && s[k] != '-') continue;
    const char prev = s[k - 1];
    if (prev == 'e' || prev == 'E') continue;
    split = k;
    break;
  }

  auto parse_part = [](const std::string& part, bool imag_unit) -> double {
    if (imag_unit && (part.empty() || part == "+")) return 1.0;
    if (imag_unit && part == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(part, &used);
    if (used != part.size())
      throw std::invalid_argument("malformed complex literal part: " + part);
    return v;
  };

  if (split == std::string::npos) return {0.0, parse_part(s, true)};
  return {parse_part(s.substr(0, split), false),
          parse_part(s.substr(split), true)};
}

std::vector<cplx> parse_complex_list(std::string_view text) {
  std::vector<cplx> out;
  std::string item;
  std::istringstream is{std::string(text)};
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(parse_complex(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::string item;
  std::istringstream is{std::string(text)};
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size())
      throw std::invalid_argument("malformed number: " + item);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::pair<double, double> parse_range(std::string_view text) {
  const std::string s(text);
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("range must look like LO:HI");
  return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Numerical solution of f(z,y+x) + z f(z,y) = z g(y) through Mellin "
      "transforms, with the Riemann xi function as g.\n"
      "Complex flag values use re+imi literals, e.g. --z 1+2i. z^{-s} is "
      "taken on the principal branch of log z."};
  app.require_subcommand(1);

  g_quad = quadrature_spec{};
  g_format = "csv";
  g_out_path.clear();

  app.add_option("--abs-tol", g_quad.abs_tol, "quadrature absolute tolerance")
      ->capture_default_str();
  app.add_option("--rel-tol", g_quad.rel_tol, "quadrature relative tolerance")
      ->capture_default_str();
  app.add_option("--T", g_quad.line_halfheight, "contour truncation height")
      ->capture_default_str();
  app.add_option("--max-levels", g_quad.max_levels, "refinement depth cap")
      ->capture_default_str();
  app.add_option("--format", g_format, "output encoding")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--out", g_out_path, "output path (default: stdout)");

  std::string s_list = "0";
  std::string t_list = "1";
  std::string z_list = "1";
  std::string y_list = "2";
  std::string x_list = "0.5";
  std::string radii_list = "5,10,15";
  std::string t_range = "0:50";
  double abscissa = -0.5;
  double step = 0.05;
  int zero_count = 5;
  int samples = 64;

  CLI::App* eval_xi_cmd =
      app.add_subcommand("eval-xi", "evaluate xi(s) over a list of s");
  eval_xi_cmd->add_option("--s", s_list, "comma-separated complex list");

  CLI::App* eval_kernel_cmd = app.add_subcommand(
      "eval-kernel", "evaluate the theta kernel over a list of t");
  eval_kernel_cmd->add_option("--t", t_list, "comma-separated real list");

  CLI::App* verify_feq_cmd = app.add_subcommand(
      "verify-feq", "residual of the functional equation over a grid");
  CLI::App* verify_residue_cmd = app.add_subcommand(
      "verify-residue", "residue-shift identity over a grid");
  for (CLI::App* cmd : {verify_feq_cmd, verify_residue_cmd}) {
    cmd->add_option("--z", z_list, "comma-separated complex list");
    cmd->add_option("--y", y_list, "comma-separated complex list");
    cmd->add_option("--x", x_list, "comma-separated real list");
    cmd->add_option("--a", abscissa, "contour abscissa in (-1,0)")
        ->capture_default_str();
  }

  CLI::App* verify_rh_cmd = app.add_subcommand(
      "verify-rh", "zero criterion at the first N located zeros");
  verify_rh_cmd->add_option("--zeros", zero_count, "number of zeros")
      ->capture_default_str();
  verify_rh_cmd->add_option("--z", z_list, "comma-separated complex list");
  verify_rh_cmd->add_option("--x", x_list, "comma-separated real list");

  CLI::App* find_zeros_cmd = app.add_subcommand(
      "find-zeros", "locate critical-line zeros by sign-change scan");
  find_zeros_cmd->add_option("--t-range", t_range, "scan range LO:HI")
      ->capture_default_str();
  find_zeros_cmd->add_option("--step", step, "scan step")->capture_default_str();

  CLI::App* fit_growth_cmd = app.add_subcommand(
      "fit-growth", "fit the exponential growth envelope of |xi|");
  fit_growth_cmd->add_option("--radii", radii_list, "comma-separated radii");
  fit_growth_cmd->add_option("--samples-per-circle", samples, "samples per circle")
      ->capture_default_str();

  CLI::App* suite_cmd =
      app.add_subcommand("suite", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sink out;
    if (*eval_xi_cmd) return run_eval_xi(parse_complex_list(s_list), out);
    if (*eval_kernel_cmd) return run_eval_kernel(parse_real_list(t_list), out);
    if (*verify_feq_cmd)
      return run_verify_grid(parse_complex_list(z_list),
                             parse_complex_list(y_list),
                             parse_real_list(x_list), abscissa, false, out);
    if (*verify_residue_cmd)
      return run_verify_grid(parse_complex_list(z_list),
                             parse_complex_list(y_list),
                             parse_real_list(x_list), abscissa, true, out);
    if (*verify_rh_cmd)
      return run_verify_rh(zero_count, parse_complex_list(z_list),
                           parse_real_list(x_list), out);
    if (*find_zeros_cmd)
      return run_find_zeros(parse_range(t_range), step, out);
    if (*fit_growth_cmd)
      return run_fit_growth(parse_real_list(radii_list), samples, out);
    if (*suite_cmd) return run_suite(out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace xifeq
