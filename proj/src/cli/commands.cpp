// Copyright 2026 The fairctl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fairctl/cli.hpp"
#include "fairctl/geometry.hpp"

namespace fairctl::cli {
namespace {

struct Options {
  std::string input;
  std::string objective;
  std::string out;
  std::string p_list = "2";
  std::string eps_grid = "0:1:0.05";
  std::string emit_csv;
  std::string suites = "all";
  std::string n_values = "2,3,5,10";
  std::optional<std::string> seed;
  std::optional<double> step;
  std::optional<std::size_t> n;
  double eps = 0.0;
  double tol = 0.0;
  int max_iter = 0;
  std::size_t samples = 10000;
  unsigned threads = 1;
};

void require_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw InputError("--eps must lie in [0, 1]");
}

PExponent single_p(const std::string& list) {
  const auto ps = parse_p_list(list);
  if (ps.size() != 1) throw InputError("--p: this command takes exactly one exponent");
  return ps.front();
}

void require_dimension(const Options& opt, std::size_t n, const char* what) {
  if (opt.n && *opt.n != n) {
    throw InputError(std::string(what) + " has dimension " + std::to_string(n) +
                     " but --n is " + std::to_string(*opt.n));
  }
  if (n < 2) throw InputError(std::string(what) + ": dimension must be >= 2");
}

NonNegVector nonneg_row(const VectorRow& row) {
  try {
    return NonNegVector(row.values);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what(), row.line);
  }
}

LinearObjective read_objective(const Options& opt) {
  if (opt.objective.empty()) throw InputError("--objective is required");
  const auto rows = read_vector_file(opt.objective, /*allow_negative=*/true);
  if (rows.size() != 1) throw InputError("objective file must contain exactly one vector", rows[1].line);
  require_dimension(opt, rows.front().values.size(), "objective");
  return LinearObjective(rows.front().values);
}

Json p_list_json(const std::vector<PExponent>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(to_json(p));
  return j;
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("seed must be an unsigned 64-bit integer, got '" + text + "'");
  }
  return v;
}

std::vector<std::size_t> parse_n_values(std::string_view list) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = list.find(',');
    const std::string_view tok = list.substr(0, comma);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 2) {
      throw InputError("--n-values: entries must be integers >= 2");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

struct Outcome {
  Json document;
  int code = kExitOk;
};

Outcome cmd_check(const Options& opt) {
  require_eps(opt.eps);
  const auto ps = parse_p_list(opt.p_list);
  const auto rows = read_vector_file(opt.input);
  Json vectors = Json::array();
  bool all_members = true;
  for (const auto& row : rows) {
    const DispersionReport rep = dispersion_report(nonneg_row(row), ps, opt.eps);
    for (const auto& e : rep.entries) all_members = all_members && e.member;
    Json j;
    j["line"] = row.line;
    j["x"] = row.values;
    j.update(to_json(rep));
    vectors.push_back(std::move(j));
  }
  Json inputs;
  inputs["input"] = opt.input;
  inputs["eps"] = opt.eps;
  inputs["p"] = p_list_json(ps);
  inputs["tol"] = kDefaultMembershipTolerance;
  Json results;
  results["all_members"] = all_members;
  results["vectors"] = std::move(vectors);
  return {make_document("check", std::move(inputs), std::move(results)),
          all_members ? kExitOk : kExitNegative};
}

Outcome cmd_epsmax(const Options& opt) {
  const auto ps = parse_p_list(opt.p_list);
  const auto rows = read_vector_file(opt.input);
  Json vectors = Json::array();
  for (const auto& row : rows) {
    const SimplexVector x = normalize(nonneg_row(row));
    Json values = Json::array();
    for (const auto& p : ps) {
      Json e;
      e["p"] = to_json(p);
      e["eps_max"] = eps_max(x, p);
      values.push_back(std::move(e));
    }
    Json j;
    j["line"] = row.line;
    j["x"] = row.values;
    j["eps_max"] = std::move(values);
    vectors.push_back(std::move(j));
  }
  Json inputs;
  inputs["input"] = opt.input;
  inputs["p"] = p_list_json(ps);
  Json results;
  results["vectors"] = std::move(vectors);
  return {make_document("epsmax", std::move(inputs), std::move(results))};
}

Outcome cmd_project(const Options& opt) {
  require_eps(opt.eps);
  const PExponent p = single_p(opt.p_list);
  const FairnessSpec spec(opt.eps, p);
  RegionProjectionOptions popt;
  if (opt.tol > 0.0) popt.tol = opt.tol;
  if (opt.max_iter > 0) popt.max_iter = opt.max_iter;
  const auto rows = read_vector_file(opt.input, /*allow_negative=*/true);
  require_dimension(opt, rows.front().values.size(), "input");

  Json points = Json::array();
  bool all_converged = true;
  for (const auto& row : rows) {
    const RegionProjection r = project_fair_region(row.values, spec, popt);
    all_converged = all_converged && r.converged;
    Json j;
    j["line"] = row.line;
    j["y"] = row.values;
    j["point"] = std::vector<double>(r.point.values().begin(), r.point.values().end());
    j["iterations"] = r.iterations;
    j["residual"] = r.residual;
    j["converged"] = r.converged;
    points.push_back(std::move(j));
  }
  Json inputs;
  inputs["input"] = opt.input;
  inputs["eps"] = opt.eps;
  inputs["p"] = to_json(p);
  inputs["tol"] = popt.tol;
  inputs["max_iter"] = popt.max_iter;
  Json results;
  results["all_converged"] = all_converged;
  results["points"] = std::move(points);
  return {make_document("project", std::move(inputs), std::move(results)),
          all_converged ? kExitOk : kExitNegative};
}

SolveOptions solve_options(const Options& opt) {
  SolveOptions s;
  s.step = opt.step;
  if (opt.tol > 0.0) s.tol = opt.tol;
  if (opt.max_iter > 0) s.max_iter = opt.max_iter;
  return s;
}

Outcome cmd_solve(const Options& opt) {
  require_eps(opt.eps);
  const PExponent p = single_p(opt.p_list);
  const LinearObjective obj = read_objective(opt);
  const SolveOptions sopt = solve_options(opt);
  const SolveResult r = solve(obj, FairnessSpec(opt.eps, p), sopt);
  Json inputs;
  inputs["objective"] = opt.objective;
  inputs["c"] = std::vector<double>(obj.coefficients().begin(), obj.coefficients().end());
  inputs["eps"] = opt.eps;
  inputs["p"] = to_json(p);
  inputs["tol"] = sopt.tol;
  inputs["max_iter"] = sopt.max_iter;
  return {make_document("solve", std::move(inputs), to_json(r)),
          r.converged ? kExitOk : kExitNegative};
}

Outcome cmd_sweep(const Options& opt) {
  const PExponent p = single_p(opt.p_list);
  const auto grid = parse_eps_grid(opt.eps_grid);
  const LinearObjective obj = read_objective(opt);
  SweepOptions sw;
  sw.solve = solve_options(opt);
  sw.threads = std::max(1u, opt.threads);
  const auto points = pareto_sweep(obj, p, grid, sw);

  bool all_converged = true;
  Json rows = Json::array();
  for (const auto& pt : points) {
    all_converged = all_converged && pt.converged;
    rows.push_back(to_json(pt));
  }
  if (!opt.emit_csv.empty()) {
    std::ofstream csv(opt.emit_csv);
    if (!csv) throw InputError("cannot write '" + opt.emit_csv + "'");
    csv << "epsilon,objective,cv,cv_bound\n";
    for (const auto& pt : points) {
      csv << format_double(pt.epsilon) << ',' << format_double(pt.objective_value) << ','
          << format_double(pt.cv) << ',' << format_double(pt.cv_bound) << '\n';
    }
  }
  Json inputs;
  inputs["objective"] = opt.objective;
  inputs["c"] = std::vector<double>(obj.coefficients().begin(), obj.coefficients().end());
  inputs["p"] = to_json(p);
  inputs["eps_grid"] = grid;
  Json results;
  results["all_converged"] = all_converged;
  results["points"] = std::move(rows);
  return {make_document("sweep", std::move(inputs), std::move(results)),
          all_converged ? kExitOk : kExitNegative};
}

Outcome cmd_verify(const Options& opt) {
  VerifyConfig cfg;
  try {
    cfg.suites = parse_suite_list(opt.suites);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--suite: ") + e.what());
  }
  cfg.samples = opt.samples;
  cfg.n_values = parse_n_values(opt.n_values);
  if (opt.p_list != "default") cfg.p_values = parse_p_list(opt.p_list);
  if (opt.seed) {
    cfg.seed = parse_seed(*opt.seed);
  } else if (const char* env = std::getenv("FAIRCTL_SEED"); env != nullptr && *env != '\0') {
    cfg.seed = parse_seed(env);
  }
  if (opt.tol > 0.0) cfg.tol = opt.tol;
  cfg.threads = std::max(1u, opt.threads);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  const VerificationReport report = run_suite(cfg);
  Json inputs;
  Json names = Json::array();
  for (Suite s : cfg.suites) names.push_back(suite_name(s));
  inputs["suites"] = std::move(names);
  inputs["samples"] = cfg.samples;
  inputs["n_values"] = cfg.n_values;
  inputs["p"] = p_list_json(cfg.p_values);
  inputs["tol"] = cfg.tol;
  inputs["slack"] = cfg.slack;
  inputs["strict_margin"] = cfg.strict_margin;
  inputs["exclusion_radius"] = cfg.exclusion_radius;
  inputs["generator"] = "mt19937_64";
  return {make_document("verify", std::move(inputs), to_json(report), &cfg.seed),
          report.passed() ? kExitOk : kExitNegative};
}

void add_out(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.out, "Write the JSON report to this path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fairctl: (eps,p)-fairness constraints, projections, solver and verifier", "fairctl"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Membership of each vector in X(eps,p)");
  check->add_option("--input", opt.input, "Vector CSV file")->required();
  check->add_option("--eps", opt.eps, "Fairness level in [0,1]")->required();
  check->add_option("--p", opt.p_list, "Comma-separated exponents (reals >= 2 or inf)");
  add_out(check, opt);

  auto* epsmax = app.add_subcommand("epsmax", "Largest eps each vector satisfies");
  epsmax->add_option("--input", opt.input, "Vector CSV file")->required();
  epsmax->add_option("--p", opt.p_list, "Comma-separated exponents (reals >= 2 or inf)");
  add_out(epsmax, opt);

  auto* project = app.add_subcommand("project", "Euclidean projection onto Y(eps,p)");
  project->add_option("--input", opt.input, "CSV of query points (signed values allowed)")->required();
  project->add_option("--eps", opt.eps, "Fairness level in [0,1]")->required();
  project->add_option("--p", opt.p_list, "Exponent (real >= 2 or inf)");
  project->add_option("--n", opt.n, "Expected dimension");
  project->add_option("--tol", opt.tol, "Stopping tolerance");
  project->add_option("--max-iter", opt.max_iter, "Iteration cap");
  add_out(project, opt);

  auto* solve_cmd = app.add_subcommand("solve", "Maximize c^T x over Y(eps,p)");
  solve_cmd->add_option("--objective", opt.objective, "CSV with one coefficient row")->required();
  solve_cmd->add_option("--eps", opt.eps, "Fairness level in [0,1]")->required();
  solve_cmd->add_option("--p", opt.p_list, "Exponent (real >= 2 or inf)");
  solve_cmd->add_option("--n", opt.n, "Expected dimension");
  solve_cmd->add_option("--step", opt.step, "Fixed ascent step (default 1/(1+||c||))");
  solve_cmd->add_option("--tol", opt.tol, "Stopping tolerance");
  solve_cmd->add_option("--max-iter", opt.max_iter, "Iteration cap");
  add_out(solve_cmd, opt);

  auto* sweep = app.add_subcommand("sweep", "Objective vs eps frontier");
  sweep->add_option("--objective", opt.objective, "CSV with one coefficient row")->required();
  sweep->add_option("--p", opt.p_list, "Exponent (real >= 2 or inf)");
  sweep->add_option("--n", opt.n, "Expected dimension");
  sweep->add_option("--eps-grid", opt.eps_grid, "start:stop:step");
  sweep->add_option("--emit-csv", opt.emit_csv, "Also write epsilon,objective,cv,cv_bound CSV");
  sweep->add_option("--step", opt.step, "Fixed ascent step");
  sweep->add_option("--tol", opt.tol, "Stopping tolerance");
  sweep->add_option("--max-iter", opt.max_iter, "Iteration cap");
  sweep->add_option("--threads", opt.threads, "Worker threads");
  add_out(sweep, opt);

  auto* verify = app.add_subcommand("verify", "Sampling checks of the structural results");
  verify->add_option("--suite", opt.suites, "all or comma-separated suite names");
  verify->add_option("--samples", opt.samples, "Samples per suite and dimension");
  verify->add_option("--seed", opt.seed, "Seed (default: $FAIRCTL_SEED, else 42)");
  verify->add_option("--n-values", opt.n_values, "Comma-separated dimensions");
  verify->add_option("--p", opt.p_list, "Exponent chain (default 2,3,4,6,10,20,50,inf)")
      ->default_str("default");
  verify->add_option("--tol", opt.tol, "Identity tolerance");
  verify->add_option("--threads", opt.threads, "Worker threads");
  add_out(verify, opt);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("fairctl");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (verify->parsed() && verify->count("--p") == 0) opt.p_list = "default";

  try {
    Outcome outcome;
    if (check->parsed()) {
      outcome = cmd_check(opt);
    } else if (epsmax->parsed()) {
      outcome = cmd_epsmax(opt);
    } else if (project->parsed()) {
      outcome = cmd_project(opt);
    } else if (solve_cmd->parsed()) {
      outcome = cmd_solve(opt);
    } else if (sweep->parsed()) {
      outcome = cmd_sweep(opt);
    } else {
      outcome = cmd_verify(opt);
    }
    const std::string text = outcome.document.dump(2) + "\n";
    if (opt.out.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.out);
      if (!file) throw InputError("cannot write '" + opt.out + "'");
      file << text;
    }
    return outcome.code;
  } catch (const InputError& e) {
    err << "error: ";
    if (e.line() > 0) err << "line " << e.line() << ": ";
    err << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace fairctl::cli
