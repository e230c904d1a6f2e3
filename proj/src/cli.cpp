#include "glasser/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <variant>

#include "CLI11.hpp"

#include "glasser/catalog.hpp"
#include "glasser/expr.hpp"
#include "glasser/kernel.hpp"
#include "glasser/report.hpp"

namespace glasser::cli {
namespace {

struct Failure {
  int exit_code;
  std::string message;
};

using Outcome = std::variant<VerificationReport, Failure>;
using Job = std::function<VerificationReport()>;

Outcome run_job(const std::string& label, const Job& job) {
  try {
    return job();
  } catch (const InputError& e) {
    return Failure{kExitUsage, label + ": " + e.what()};
  } catch (const QuadratureError& e) {
    std::string message = label + ": " + e.what();
    if (e.kind() == QuadratureError::Kind::kNonConvergence) {
      message += "; a larger --max-truncation or looser --abs-tol/--rel-tol may help";
    }
    return Failure{kExitNumeric, message};
  } catch (const NumericError& e) {
    return Failure{kExitNumeric, label + ": " + e.what()};
  }
}

std::optional<Complex> find_param(const RunConfig& config, std::string_view name) {
  std::optional<Complex> found;
  for (const auto& [n, v] : config.params) {
    if (n == name) found = v;
  }
  return found;
}

std::vector<std::pair<std::string, Job>> plan(const RunConfig& config) {
  std::vector<std::pair<std::string, Job>> jobs;
  const QuadratureOptions opts = config.quadrature;
  const double tol = config.tolerance;

  switch (config.command) {
    case Command::kVerifyAll:
      for (const CaseDefinition& c : list_cases()) {
        jobs.emplace_back(c.id, [id = c.id, opts, tol] {
          return run_case(id, {}, opts, tol);
        });
      }
      break;
    case Command::kVerify: {
      ParamMap params;
      for (const auto& [n, v] : config.params) params.insert_or_assign(n, v);
      jobs.emplace_back(config.case_id, [id = config.case_id, params, opts, tol] {
        return run_case(id, params, opts, tol);
      });
      break;
    }
    case Command::kCustom: {
      jobs.emplace_back("custom", [config, opts, tol] {
        expr::Bindings bindings;
        KernelParams kernel{{1.0, 0.0}};
        for (const auto& [n, v] : config.params) {
          if (n == "a") {
            kernel.a = v;
          } else if (n == "k") {
            throw InputError("'k' is the integration variable and cannot be bound");
          } else {
            bindings.insert_or_assign(n, v);
          }
        }
        const TransformFunction f =
            expr::to_transform(expr::parse(config.expression), bindings);
        VerificationReport r = verify_master(f, kernel, opts, tol);
        for (const auto& [n, v] : bindings) r.params.emplace_back(n, v);
        r.notes.insert(r.notes.begin(), "F(k) = " + config.expression);
        return r;
      });
      break;
    }
    case Command::kKernelCheck: {
      const auto a = find_param(config, "a");
      const auto t = find_param(config, "t");
      std::vector<std::pair<Complex, double>> points;
      if (a && t) {
        if (t->imag() != 0.0) {
          jobs.emplace_back("kernel", []() -> VerificationReport {
            throw InputError("t must be real");
          });
          break;
        }
        points.emplace_back(*a, t->real());
      } else {
        for (int i = 0; i < 5; ++i) {
          for (int j = 0; j < 5; ++j) {
            points.emplace_back(Complex{0.3 + 0.675 * i, 0.0}, 0.2 + 0.45 * j);
          }
        }
      }
      for (const auto& [pa, pt] : points) {
        jobs.emplace_back("kernel", [pa, pt, opts, tol] {
          return verify_ramanujan(KernelParams{pa}, pt, opts, tol);
        });
      }
      break;
    }
  }
  return jobs;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.quadrature.validate();
    if (!(config.tolerance > 0.0)) throw InputError("--tol must be positive");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto jobs = plan(config);
  // Cases are independent and pure; run them concurrently and collect in
  // catalog order.
  std::vector<std::future<Outcome>> futures;
  futures.reserve(jobs.size());
  for (const auto& [label, job] : jobs) {
    futures.push_back(std::async(std::launch::async, run_job, label, job));
  }

  std::vector<VerificationReport> reports;
  int worst_error = kExitPass;
  for (auto& fut : futures) {
    Outcome o = fut.get();
    if (auto* f = std::get_if<Failure>(&o)) {
      err << "error: " << f->message << "\n";
      // Usage errors outrank numerical ones.
      if (worst_error != kExitUsage) worst_error = f->exit_code;
    } else {
      reports.push_back(std::move(std::get<VerificationReport>(o)));
    }
  }

  if (config.format == OutputFormat::kJson) {
    out << to_json(reports).dump(2) << "\n";
  } else {
    write_table(out, reports);
  }
  if (config.json_path) {
    std::ofstream file(*config.json_path);
    if (!file) {
      err << "error: cannot write " << *config.json_path << "\n";
      return kExitUsage;
    }
    file << to_json(reports).dump(2) << "\n";
  }

  if (worst_error != kExitPass) return worst_error;
  const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                    [](const VerificationReport& r) { return r.pass; });
  return all_pass ? kExitPass : kExitMismatch;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Numerical verification of the Glasser master integral and its "
               "worked instances"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "table";
  std::string json_path;
  std::vector<std::string> raw_params;
  std::string raw_a;
  std::string raw_t;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", config.tolerance,
                    "Relative (or absolute) agreement required between sides")
        ->capture_default_str();
    sub->add_option("--abs-tol", config.quadrature.abs_tol, "Quadrature absolute tolerance")
        ->capture_default_str();
    sub->add_option("--rel-tol", config.quadrature.rel_tol, "Quadrature relative tolerance")
        ->capture_default_str();
    sub->add_option("--max-subdivisions", config.quadrature.max_subdivisions,
                    "Interval budget per window")
        ->capture_default_str();
    sub->add_option("--initial-truncation", config.quadrature.initial_truncation,
                    "First window half-width L0")
        ->capture_default_str();
    sub->add_option("--max-truncation", config.quadrature.max_truncation,
                    "Largest window half-width")
        ->capture_default_str();
    sub->add_option("--window-growth", config.quadrature.window_growth,
                    "Window growth factor")
        ->capture_default_str();
    sub->add_option("--json", json_path, "Also write the JSON records to this file");
    sub->add_option("--format", format, "Output on stdout")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  };

  CLI::App* verify_all = app.add_subcommand("verify-all", "Run every built-in case");
  add_common(verify_all);

  CLI::App* verify = app.add_subcommand("verify", "Run one built-in case");
  verify->add_option("case", config.case_id, "Case id")->required();
  verify->add_option("--param", raw_params, "name=value (complex literal), repeatable");
  add_common(verify);

  CLI::App* custom =
      app.add_subcommand("custom", "Check the master formula for a user F(k)");
  custom->add_option("--F", config.expression, "Expression in k")->required();
  custom->add_option("--a", raw_a, "Kernel parameter (complex literal, default 1)");
  custom->add_option("--param", raw_params, "Extra binding name=value, repeatable");
  add_common(custom);

  CLI::App* kernel = app.add_subcommand(
      "kernel-check", "Check the seed integral at (a, t), or on a 5x5 grid");
  kernel->add_option("--a", raw_a, "Kernel parameter a");
  kernel->add_option("--t", raw_t, "t > 0");
  add_common(kernel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify_all->parsed()) {
      config.command = Command::kVerifyAll;
    } else if (verify->parsed()) {
      config.command = Command::kVerify;
    } else if (custom->parsed()) {
      config.command = Command::kCustom;
    } else {
      config.command = Command::kKernelCheck;
    }
    for (const std::string& p : raw_params) {
      const auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw InputError("--param expects name=value, got '" + p + "'");
      }
      config.params.emplace_back(p.substr(0, eq),
                                 parse_complex_literal(p.substr(eq + 1)));
    }
    if (!raw_a.empty()) config.params.emplace_back("a", parse_complex_literal(raw_a));
    if (!raw_t.empty()) config.params.emplace_back("t", parse_complex_literal(raw_t));
    if (config.command == Command::kKernelCheck &&
        (raw_a.empty() != raw_t.empty())) {
      throw InputError("kernel-check needs both --a and --t, or neither");
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kTable;
  if (!json_path.empty()) config.json_path = json_path;
  return run(config, out, err);
}

}  // namespace glasser::cli
