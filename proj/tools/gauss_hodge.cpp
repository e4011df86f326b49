// Command-line driver: verify | solve | lelong | report.
//
// Exit status: 0 success, 1 a check or solve failed, 2 bad usage or input.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "gauss_hodge/errors.hpp"
#include "gauss_hodge/io.hpp"
#include "gauss_hodge/potential.hpp"
#include "gauss_hodge/suite.hpp"

namespace gh = gauss_hodge;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gh::Json read_json(const std::string& path) {
  try {
    return gh::Json::parse(read_file(path));
  } catch (const gh::Json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

struct Common {
  std::string mode = "exact";
  double tolerance = 1e-10;
  std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--mode", c.mode, "Arithmetic: exact rationals or float doubles")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--tolerance", c.tolerance, "Relative tolerance in float mode")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output", c.output, "Output path (default: stdout)");
}

template <class S>
gh::PForm<S> widen(const gh::PForm<S>& f, int cap) {
  gh::PForm<S> out(f.dim(), f.degree(), cap);
  for (const auto& [I, field] : f.components()) out.set_component(I, field.with_capacity(cap));
  return out;
}

template <class R>
gh::ComplexForm<R> widen(const gh::ComplexForm<R>& f, int cap) {
  gh::ComplexForm<R> out(f.n(), f.p(), f.q(), cap);
  for (const auto& [key, field] : f.components())
    out.add_to_component(key.first, key.second, field.with_capacity(cap));
  return out;
}

// --- verify --------------------------------------------------------------

int cmd_verify(const Common& c, gh::RunConfig cfg) {
  cfg.mode = c.mode == "exact" ? gh::Mode::exact : gh::Mode::floating;
  cfg.tolerance = c.tolerance;
  try {
    gh::validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto result = gh::run_verify(cfg);
  std::string text;
  for (const auto& r : result.records) text += r.dump() + "\n";
  text += result.summary.dump() + "\n";
  write_text(c.output, text);
  if (!result.all_pass) {
    std::cerr << "check failed: " << result.first_failure.dump() << "\n";
    return 1;
  }
  return 0;
}

// --- solve ---------------------------------------------------------------

template <class R>
bool residual_ok(const gh::SolveReport<R>& rep, double tol) {
  if constexpr (std::is_same_v<R, gh::Rational>) {
    (void)tol;
    return sgn(rep.residual_sq) == 0;
  } else {
    return std::sqrt(rep.residual_sq) <= tol * std::sqrt(rep.input_norm_sq);
  }
}

template <class R>
int solve_as(const Common& c, const std::string& equation, const gh::Json& input, int degree) {
  const gh::SolveOptions opts{c.tolerance};
  gh::Json out;
  bool ok = false;
  if (equation == "d") {
    auto f = gh::form_from_json<R>(input);
    if (degree > f.capacity()) f = widen(f, degree);
    const auto sol = gh::solve_d_min_norm(f, gh::Weight(f.dim()), opts);
    out = gh::Json{{"solution", gh::form_to_json(sol.u)}, {"report", gh::report_to_json(sol.report)}};
    ok = sol.report.bound_satisfied && residual_ok(sol.report, c.tolerance);
  } else {
    auto g = gh::complex_form_from_json<R>(input);
    if (g.p() != 0 || g.q() != 1) throw UsageError("dbar solve needs a (0,1)-form");
    if (degree > g.capacity()) g = widen(g, degree);
    const auto sol = gh::solve_dbar_min_norm(g, gh::Weight(2 * g.n()), opts);
    out = gh::Json{{"solution", gh::field_to_json(sol.u)}, {"report", gh::report_to_json(sol.report)}};
    ok = sol.report.bound_satisfied && residual_ok(sol.report, c.tolerance);
  }
  write_text(c.output, out.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_solve(const Common& c, const std::string& equation, const std::string& input_path,
              int degree) {
  const auto input = read_json(input_path);
  try {
    return c.mode == "exact" ? solve_as<gh::Rational>(c, equation, input, degree)
                             : solve_as<double>(c, equation, input, degree);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed input: ") + e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("malformed input: ") + e.what());
  }
}

// --- lelong --------------------------------------------------------------

template <class R>
int lelong_as(const Common& c, const std::string& input_path, const std::string& potential, int n,
              int degree) {
  gh::ComplexForm<R> f;
  gh::Json out = gh::Json::object();
  if (!potential.empty()) {
    std::string text = potential;
    if (std::filesystem::is_regular_file(potential)) text = read_file(potential);
    // Parse wide first to learn the degree, then settle the capacity.
    gh::ComplexField<R> w;
    try {
      w = gh::parse_potential<R>(text, n, 64);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const int cap = std::max({2, degree, w.total_degree()});
    w = w.with_capacity(cap);
    f = gh::ddbar(w);
    out["potential"] = gh::field_to_json(w);
  } else {
    try {
      f = gh::complex_form_from_json<R>(read_json(input_path));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("malformed input: ") + e.what());
    } catch (const std::domain_error& e) {
      throw UsageError(std::string("malformed input: ") + e.what());
    }
    if (f.p() != 1 || f.q() != 1) throw UsageError("lelong needs a (1,1)-form");
    if (degree > f.capacity()) f = widen(f, degree);
  }
  const auto sol = gh::solve_poincare_lelong(f, gh::SolveOptions{c.tolerance});
  out["solution"] = gh::field_to_json(sol.u);
  out["report"] = gh::lelong_report_to_json(sol.report);
  write_text(c.output, out.dump(2) + "\n");
  bool ok = sol.report.summary.bound_satisfied;
  for (const auto& s : sol.report.stages) ok = ok && s.pass;
  return ok ? 0 : 1;
}

// --- report --------------------------------------------------------------

void flatten(const gh::Json& j, const std::string& prefix, std::vector<std::string>& order,
             std::map<std::string, std::string>& row) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, order, row);
    return;
  }
  if (std::find(order.begin(), order.end(), prefix) == order.end()) order.push_back(prefix);
  row[prefix] = j.is_string() ? j.get<std::string>() : j.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

int cmd_report(const std::string& input_path, const std::string& output) {
  std::istringstream in(read_file(input_path));
  std::vector<std::string> order;
  std::vector<std::map<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    gh::Json j;
    try {
      j = gh::Json::parse(line);
    } catch (const gh::Json::exception& e) {
      throw UsageError("bad JSON line in '" + input_path + "': " + e.what());
    }
    rows.emplace_back();
    flatten(j, "", order, rows.back());
  }
  std::string text;
  for (std::size_t i = 0; i < order.size(); ++i) text += (i ? "," : "") + csv_cell(order[i]);
  text += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) text += ",";
      auto it = row.find(order[i]);
      if (it != row.end()) text += csv_cell(it->second);
    }
    text += "\n";
  }
  write_text(output, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian-weighted exterior calculus: identity checks and minimum-norm solves"};
  app.require_subcommand(1);

  Common verify_common, solve_common, lelong_common;
  gh::RunConfig cfg;
  auto* verify = app.add_subcommand("verify", "Run the seeded invariant suite");
  add_common(verify, verify_common);
  verify->add_option("--n", cfg.n, "Real dimension (real checks) and complex dimension (complex checks)");
  verify->add_option("--degree", cfg.degree, "Field capacity (maximum total Hermite degree)");
  verify->add_option("--trials", cfg.trials, "Random trials");
  verify->add_option("--seed", cfg.seed, "RNG seed");

  std::string equation, solve_input;
  int solve_degree = 0;
  auto* solve = app.add_subcommand("solve", "Minimum-norm solve of du = f or dbar u = g");
  add_common(solve, solve_common);
  solve->add_option("--equation", equation, "d or dbar")
      ->required()
      ->check(CLI::IsMember({"d", "dbar"}));
  solve->add_option("--input", solve_input, "Form JSON")->required();
  solve->add_option("--degree", solve_degree, "Raise the capacity to at least this degree");

  std::string lelong_input, potential;
  int lelong_n = 1, lelong_degree = 0;
  auto* lelong = app.add_subcommand("lelong", "Solve ddbar u = f through the staged pipeline");
  add_common(lelong, lelong_common);
  auto* in_opt = lelong->add_option("--input", lelong_input, "(1,1)-form JSON");
  auto* pot_opt = lelong->add_option("--from-potential", potential,
                                     "Potential w (expression or file); f = ddbar w");
  in_opt->excludes(pot_opt);
  lelong->add_option("--n", lelong_n, "Complex dimension for --from-potential")
      ->check(CLI::PositiveNumber);
  lelong->add_option("--degree", lelong_degree, "Raise the capacity to at least this degree");

  std::string report_input, report_output;
  auto* report = app.add_subcommand("report", "Convert a JSON-lines report to CSV");
  report->add_option("--input", report_input, "JSON-lines report")->required();
  report->add_option("--output", report_output, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(verify_common, cfg);
    if (*solve) return cmd_solve(solve_common, equation, solve_input, solve_degree);
    if (*lelong) {
      if (lelong_input.empty() && potential.empty())
        throw UsageError("lelong needs --input or --from-potential");
      return lelong_common.mode == "exact"
                 ? lelong_as<gh::Rational>(lelong_common, lelong_input, potential, lelong_n,
                                           lelong_degree)
                 : lelong_as<double>(lelong_common, lelong_input, potential, lelong_n,
                                     lelong_degree);
    }
    if (*report) return cmd_report(report_input, report_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gh::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const gh::DegreeOverflow& e) {
    std::cerr << e.what() << "; rerun with --degree " << e.required_capacity() << "\n";
    return 1;
  } catch (const gh::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const gh::InvariantViolation& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
