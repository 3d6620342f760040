#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "csplit/coeffs.hpp"
#include "csplit/experiments.hpp"
#include "csplit/linstab.hpp"
#include "csplit/models.hpp"
#include "csplit/order.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergence = 3;

csplit::CompositionScheme find_method(const std::string& name) {
  if (name == "leapfrog") return csplit::leapfrog();
  const auto& cat = csplit::catalog();
  const auto it = cat.find(name);
  if (it == cat.end()) {
    std::string names = "leapfrog";
    for (const auto& [key, scheme] : cat) names += ", " + key;
    throw CLI::ValidationError("method", "unknown method '" + name + "' (available: " + names + ")");
  }
  return it->second;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw CLI::ValidationError("out", "cannot open '" + path + "' for writing");
  return os;
}

int required_order_level(int declared_order) {
  return declared_order >= 6 ? 6 : declared_order >= 3 ? 3 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting and composition integrators with complex coefficients"};
  app.require_subcommand(1);
  // Long-only help so that subcommands can expose an --h step option.
  app.set_help_flag("--help", "print help and exit");

  std::string method = "s23", system_name = "harmonic", out_path, project = "never";
  double h = 0.1, h_min = 0.05, h_max = 1.0, h0 = 0.2, horizon_periods = -1.0, tol = 1e-12;
  long steps = 100, observe_every = 1;
  int samples = 100, levels = 5;
  bool with_state = false;

  auto* coeffs = app.add_subcommand("coeffs", "export catalog coefficients as JSON");
  std::string coeffs_method;
  coeffs->add_option("--method", coeffs_method, "method label; omit for the whole catalog");
  coeffs->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "order-condition residual report");
  verify->add_option("--method", method)->required();
  verify->add_option("--tol", tol, "residual tolerance");

  auto* stability = app.add_subcommand("stability", "stability sweep over an h grid");
  stability->add_option("--method", method)->required();
  stability->add_option("--hmin", h_min);
  stability->add_option("--hmax", h_max);
  stability->add_option("--samples", samples);
  stability->add_option("--out", out_path);

  auto* run = app.add_subcommand("run", "integrate a system and emit a trajectory CSV");
  run->set_help_flag("--help", "print help and exit");
  run->add_option("--method", method)->required();
  run->add_option("--system", system_name, "harmonic or vl");
  run->add_option("--h", h)->required();
  run->add_option("--steps", steps)->required();
  run->add_option("--project", project, "never, step or output");
  run->add_option("--observe-every", observe_every);
  run->add_flag("--state", with_state, "include re_i,im_i state columns");
  run->add_option("--out", out_path);

  auto* experiment = app.add_subcommand("experiment", "long-time benchmark harnesses");
  experiment->set_help_flag("--help", "print help and exit");
  std::string experiment_id;
  experiment->add_option("id", experiment_id, "fig1 or fig3")->required();
  experiment->add_option("--out", out_path, "output directory")->required();
  experiment->add_option("--horizon-periods", horizon_periods,
                         "defaults: 1000 (fig1), 100 (fig3)");
  std::string experiment_method;
  experiment->add_option("--method", experiment_method, "restrict to one method");
  auto* h_opt = experiment->add_option("--h", h, "override the default step size");

  auto* order_cmd = app.add_subcommand("order", "empirical convergence order by step halving");
  order_cmd->add_option("--method", method)->required();
  order_cmd->add_option("--system", system_name);
  order_cmd->add_option("--h0", h0, "coarsest step");
  order_cmd->add_option("--levels", levels);
  order_cmd->add_option("--horizon", horizon_periods, "integration horizon (time units)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeffs->parsed()) {
      std::string json;
      if (!coeffs_method.empty()) {
        json = csplit::to_json(find_method(coeffs_method));
      } else {
        json = "[";
        bool first = true;
        for (const auto& [name, scheme] : csplit::catalog()) {
          if (!first) json += ',';
          first = false;
          json += csplit::to_json(scheme);
        }
        json += "]";
      }
      if (out_path.empty())
        std::cout << json << '\n';
      else
        open_out(out_path) << json << '\n';
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto scheme = find_method(method);
      const auto report = csplit::order6_report(scheme.alphas, tol);
      std::cout << csplit::to_json(report) << '\n';
      return report.passes_at >= required_order_level(scheme.declared_order)
                 ? kExitOk
                 : kExitVerificationFailure;
    }

    if (stability->parsed()) {
      const auto ab = csplit::ab_from_alpha(find_method(method));
      if (out_path.empty())
        csplit::stability_sweep_csv(ab, h_min, h_max, samples, std::cout);
      else {
        auto os = open_out(out_path);
        csplit::stability_sweep_csv(ab, h_min, h_max, samples, os);
      }
      return kExitOk;
    }

    if (run->parsed()) {
      const auto scheme = find_method(method);
      const auto sys = csplit::find_system(system_name);
      const auto traj = csplit::integrate(scheme, sys, sys.default_initial, h, steps,
                                          csplit::parse_projection(project), observe_every);
      if (out_path.empty())
        csplit::write_csv(traj, std::cout, with_state);
      else {
        auto os = open_out(out_path);
        csplit::write_csv(traj, os, with_state);
      }
      return traj.diverged ? kExitDivergence : kExitOk;
    }

    if (experiment->parsed()) {
      const std::filesystem::path dir{out_path};
      std::filesystem::create_directories(dir);
      std::vector<std::string> methods;
      if (!experiment_method.empty())
        methods.push_back(experiment_method);
      bool any_diverged = false;

      const bool h_override = h_opt->count() > 0;
      if (experiment_id == "fig1") {
        const double periods = horizon_periods > 0 ? horizon_periods : 1000.0;
        if (methods.empty()) methods = {"s23", "s34", "s76", "s7c6"};
        for (const auto& name : methods) {
          const auto scheme = find_method(name);
          const double step =
              h_override ? h : csplit::harmonic_benchmark_step(scheme.label);
          const auto result = csplit::run_harmonic_benchmark(scheme, step, periods);
          auto os = open_out((dir / ("fig1_" + name + ".csv")).string());
          csplit::write_csv(result, os);
          any_diverged |= result.diverged;
        }
      } else if (experiment_id == "fig3") {
        const double periods = horizon_periods > 0 ? horizon_periods : 100.0;
        if (methods.empty()) methods = {"s23", "s34", "s44", "s76", "s7c6"};
        for (const auto& name : methods) {
          const auto scheme = find_method(name);
          const double m = static_cast<double>(scheme.stages());
          for (const double step : {4.0 * m * M_PI / 210.0, m * M_PI / 210.0}) {
            for (const auto policy :
                 {csplit::ProjectionPolicy::Never, csplit::ProjectionPolicy::EachStep}) {
              const double used = h_override ? h : step;
              const auto cell = csplit::run_vl_benchmark(scheme, used, policy, periods);
              char tag[64];
              std::snprintf(tag, sizeof tag, "fig3_%s_h%.4f_%s.csv", name.c_str(), used,
                            csplit::to_string(policy).c_str());
              auto os = open_out((dir / tag).string());
              csplit::write_csv(cell, os);
              any_diverged |= cell.diverged;
              if (h_override) break;
            }
            if (h_override) break;
          }
        }
      } else {
        std::cerr << "unknown experiment '" << experiment_id << "' (available: fig1, fig3)\n";
        return kExitUsage;
      }
      return any_diverged ? kExitDivergence : kExitOk;
    }

    if (order_cmd->parsed()) {
      const auto scheme = find_method(method);
      const auto sys = csplit::find_system(system_name);
      const double horizon =
          horizon_periods > 0 ? horizon_periods : (system_name == "harmonic" ? 7.3 : 2.0 * M_PI);
      const auto est = csplit::empirical_order(scheme, sys, h0, levels, horizon);
      std::printf("{\"method\":\"%s\",\"system\":\"%s\",\"slope\":%.6g,\"levels_used\":%d,"
                  "\"declared_order\":%d}\n",
                  scheme.label.c_str(), sys.name.c_str(), est.slope, est.levels_used,
                  scheme.declared_order);
      return std::abs(est.slope - scheme.declared_order) <= 0.3 ? kExitOk
                                                               : kExitVerificationFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
