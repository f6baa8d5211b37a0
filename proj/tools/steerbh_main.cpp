// Command-line front end: single-point evaluation, temperature sweeps,
// transition finding and oracle verification with CSV/JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical failure, 4 I/O failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "steerbh/steerbh.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

// Writes to --output when given, standard output otherwise.
int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return std::cout ? 0 : kExitIo;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "error: cannot open output file '" << output_path << "'\n";
    return kExitIo;
  }
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing to '" << output_path << "'\n";
    return kExitIo;
  }
  return 0;
}

struct Options {
  double s = 1.0;
  double omega = 1.0;
  double temperature = 1.0;
  double t_min = 0.05;
  double t_max = 3.0;
  int points = 60;
  double tolerance = 1e-9;
  std::string format = "csv";
  std::string output;
  bool check = false;
};

steerbh::SweepConfig to_config(const Options& opt) {
  steerbh::SweepConfig config;
  config.s = opt.s;
  config.omega = opt.omega;
  config.t_min = opt.t_min;
  config.t_max = opt.t_max;
  config.n_points = opt.points;
  config.tolerance = opt.tolerance;
  return config;
}

int run_point(const Options& opt) {
  const steerbh::SweepRow row = steerbh::evaluate_point(opt.s, opt.omega, opt.temperature);
  if (opt.format == "json") return emit(steerbh::json_point(opt.s, opt.omega, row), opt.output);
  return emit(steerbh::csv_header() + steerbh::csv_row(row), opt.output);
}

int run_sweep(const Options& opt) {
  const steerbh::SweepConfig config = to_config(opt);
  const std::vector<steerbh::SweepRow> rows = steerbh::run_sweep(config);
  const std::string text =
      opt.format == "json" ? steerbh::json_sweep(config, rows) : steerbh::csv_document(rows);
  const int code = emit(text, opt.output);
  if (code != 0) return code;
  if (opt.check) {
    const steerbh::OracleReport report = steerbh::verify_oracle(config);
    double worst = report.collective_symmetry_gap;
    for (const auto& check : report.checks) worst = std::max(worst, check.max_abs_deviation);
    std::cerr << "oracle check: " << (report.pass ? "pass" : "FAIL")
              << " (max deviation " << steerbh::format_number(worst) << ", tolerance "
              << steerbh::format_number(report.tolerance) << ")\n";
    if (!report.pass) return kExitVerifyFailed;
  }
  return 0;
}

int run_transitions(const Options& opt) {
  const steerbh::TransitionReport report = steerbh::transition_report(opt.s, opt.omega);
  return emit(steerbh::json_transitions(report), opt.output);
}

int run_verify(const Options& opt) {
  const steerbh::SweepConfig config = to_config(opt);
  const steerbh::OracleReport report = steerbh::verify_oracle(config);
  const int code = emit(steerbh::json_verify(config, report), opt.output);
  if (code != 0) return code;
  return report.pass ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian EPR-steering monogamy of a two-mode squeezed state under the "
               "Hawking two-mode-squeezing channel"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&opt](CLI::App* cmd, bool with_grid) {
    cmd->add_option("--s", opt.s, "initial squeezing of the A-B state")->capture_default_str();
    cmd->add_option("--omega", opt.omega, "field-mode frequency")->capture_default_str();
    cmd->add_option("--output", opt.output, "output file (default: stdout)");
    if (with_grid) {
      cmd->add_option("--tmin", opt.t_min, "lowest Hawking temperature")->capture_default_str();
      cmd->add_option("--tmax", opt.t_max, "highest Hawking temperature")->capture_default_str();
      cmd->add_option("--points", opt.points, "number of grid points")->capture_default_str();
      cmd->add_option("--tolerance", opt.tolerance, "oracle verification tolerance")
          ->capture_default_str();
    }
  };

  CLI::App* point = app.add_subcommand("point", "evaluate the steering report at one point");
  add_common(point, false);
  point->add_option("--temp", opt.temperature, "Hawking temperature")->capture_default_str();
  point->add_option("--format", opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "sweep the Hawking temperature");
  add_common(sweep, true);
  sweep->add_option("--format", opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_flag("--check", opt.check, "also verify against the closed forms; exit 1 on breach");

  CLI::App* transitions =
      app.add_subcommand("transitions", "locate the A->B death / Bbar->B birth temperature");
  add_common(transitions, false);

  CLI::App* verify = app.add_subcommand("verify", "compare the pipeline against the closed forms");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (point->parsed()) {
      if (!(opt.s >= 0.0) || !(opt.omega > 0.0) || !(opt.temperature >= 0.0)) {
        std::cerr << "error: need --s >= 0, --omega > 0, --temp >= 0\n";
        return kExitUsage;
      }
      return run_point(opt);
    }
    if (sweep->parsed()) {
      try {
        to_config(opt).validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      return run_sweep(opt);
    }
    if (transitions->parsed()) {
      if (!(opt.s > 0.0) || !(opt.omega > 0.0)) {
        std::cerr << "error: transitions needs --s > 0 and --omega > 0\n";
        return kExitUsage;
      }
      return run_transitions(opt);
    }
    if (verify->parsed()) {
      try {
        to_config(opt).validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      return run_verify(opt);
    }
  } catch (const steerbh::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const steerbh::bracket_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
