// faststray command-line tool: simplify, sweep and bench subcommands.

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "faststray/core.hpp"
#include "faststray/io.hpp"
#include "faststray/metrics.hpp"
#include "faststray/synthetic.hpp"

namespace fs = faststray;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

struct RunConfig {
  std::string input;
  std::string format = "csv";
  std::string columns = "0:1:2";
  bool header = false;
  bool dedupe = false;
  fs::SimplifyParams params;
  std::string coefficient = "correlation";
  std::string output;
  std::string plot;
  std::string sweep;
  std::optional<double> baseline_epsilon;
  std::size_t samples = 0;
  std::string bench_sizes;
  int repeats = 5;
  std::uint64_t seed = 1;
  bool beta_set = false;
};

/// Exit-code carrying failure raised inside a command.
struct CommandError {
  int code;
  std::string message;
};

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long long> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long v = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (item.empty() || ec != std::errc() || ptr != end) {
      throw CommandError{kExitUsage, std::string("invalid ") + what + " entry '" + item + "'"};
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw CommandError{kExitUsage, std::string(what) + " list is empty"};
  }
  return values;
}

fs::Trajectory load_input(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw CommandError{kExitIo, "cannot open input '" + cfg.input + "'"};
  if (cfg.format == "plt") {
    auto geo = fs::parse_plt(in);
    if (cfg.dedupe) geo = fs::drop_repeated_timestamps(geo);
    return fs::project_to_local(geo);
  }
  fs::CsvOptions options;
  options.columns = fs::parse_column_spec(cfg.columns);
  options.has_header = cfg.header;
  return fs::parse_csv(in, options);
}

fs::SimplifyParams resolved_params(const RunConfig& cfg) {
  auto params = cfg.params;
  params.coefficient = fs::parse_coefficient_kind(cfg.coefficient);
  fs::validate(params);
  for (const auto& w : fs::advisory_warnings(params)) {
    std::cerr << "warning: " << w << '\n';
  }
  if (cfg.beta_set && params.coefficient == fs::CoefficientKind::Direction) {
    std::cerr << "warning: --beta is ignored by the direction coefficient\n";
  }
  return params;
}

/// Runs `write` against the output file, or stdout when no path is set.
template <typename Write>
void emit(const std::string& path, Write&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw CommandError{kExitIo, "cannot open output '" + path + "'"};
  write(out);
}

int cmd_simplify(const RunConfig& cfg) {
  const auto params = resolved_params(cfg);
  const auto input = load_input(cfg);
  const auto run = fs::run_pipeline(input, params);
  const auto samples = fs::sample_uniform(run.spline, cfg.samples);
  emit(cfg.output, [&](std::ostream& out) {
    fs::write_result(out, run.result, &samples, run.report);
  });
  if (!cfg.plot.empty()) {
    emit(cfg.plot, [&](std::ostream& out) {
      fs::write_plot_data(out, input, run.spline);
    });
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  const auto params = resolved_params(cfg);
  std::vector<int> gammas;
  for (long long g : parse_int_list(cfg.sweep, "gamma")) {
    if (g < 1 || g > 1000000) {
      throw CommandError{kExitUsage, "gamma values must be >= 1"};
    }
    gammas.push_back(static_cast<int>(g));
  }
  const auto input = load_input(cfg);
  const auto reports = fs::sweep_gamma(input, params, gammas);
  std::optional<fs::BaselineReport> baseline;
  if (cfg.baseline_epsilon) {
    baseline = fs::evaluate_rdp(input, *cfg.baseline_epsilon);
  }
  emit(cfg.output, [&](std::ostream& out) {
    fs::write_sweep_table(out, reports, baseline);
  });
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg) {
  auto params = resolved_params(cfg);
  if (cfg.repeats < 1) throw CommandError{kExitUsage, "--repeats must be >= 1"};
#if defined(__GLIBC__)
  // same allocator treatment for every size being timed
  mallopt(M_MMAP_THRESHOLD, 32 << 20);
  mallopt(M_TRIM_THRESHOLD, 256 << 20);
#endif

  if (cfg.bench_sizes.empty()) {
    if (cfg.input.empty()) {
      throw CommandError{kExitUsage, "bench needs --bench-sizes or --input"};
    }
    const auto input = load_input(cfg);
    const double seconds = fs::time_simplify(input, params, cfg.repeats);
    emit(cfg.output, [&](std::ostream& out) {
      out << "n,coefficient,seconds\n"
          << input.size() << ',' << fs::to_string(params.coefficient) << ','
          << fs::format_number(seconds) << '\n';
    });
    return kExitOk;
  }

  std::vector<std::size_t> sizes;
  for (long long n : parse_int_list(cfg.bench_sizes, "size")) {
    if (n < 3) throw CommandError{kExitUsage, "bench sizes must be >= 3"};
    sizes.push_back(static_cast<std::size_t>(n));
  }
  std::vector<fs::Trajectory> inputs;
  for (std::size_t n : sizes) inputs.push_back(fs::synthetic::smooth_trajectory(cfg.seed, n));
  params.coefficient = fs::CoefficientKind::Correlation;
  const auto correlation = fs::measure_scaling(inputs, params, cfg.repeats);
  params.coefficient = fs::CoefficientKind::Direction;
  const auto direction = fs::measure_scaling(inputs, params, cfg.repeats);
  emit(cfg.output, [&](std::ostream& out) {
    out << "n,correlation_seconds,direction_seconds\n";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      out << sizes[i] << ',' << fs::format_number(correlation[i].seconds) << ','
          << fs::format_number(direction[i].seconds) << '\n';
    }
    bool distinct = false;
    for (std::size_t n : sizes) distinct = distinct || n != sizes.front();
    if (distinct) {
      out << "# growth_exponent correlation="
          << fs::format_number(fs::growth_exponent(correlation))
          << " direction=" << fs::format_number(fs::growth_exponent(direction))
          << '\n';
    }
  });
  return kExitOk;
}

void add_common_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--input", cfg.input, "Trajectory file");
  cmd.add_option("--format", cfg.format, "Input format")
      ->check(CLI::IsMember({"csv", "plt"}));
  cmd.add_option("--columns", cfg.columns, "CSV column indices t:x:y[:z]");
  cmd.add_flag("--header", cfg.header, "CSV input has a header row");
  cmd.add_flag("--dedupe", cfg.dedupe,
               "Drop PLT records whose timestamp does not increase");
  cmd.add_option("--alpha", cfg.params.alpha, "Moving-average half-width");
  cmd.add_option_function<int>(
      "--beta",
      [&cfg](const int& v) {
        cfg.params.beta = v;
        cfg.beta_set = true;
      },
      "Correlation half-width");
  cmd.add_option("--gamma", cfg.params.gamma, "Non-maxima suppression half-width");
  cmd.add_option("--coefficient", cfg.coefficient, "Information coefficient")
      ->check(CLI::IsMember({"correlation", "direction"}));
  cmd.add_option("--output", cfg.output, "Output path (stdout by default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-time trajectory simplification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* simplify = app.add_subcommand("simplify", "Simplify one trajectory");
  add_common_options(*simplify, cfg);
  simplify->add_option("--samples", cfg.samples,
                       "Dense spline samples in the result document");
  simplify->add_option("--plot", cfg.plot,
                       "Write columnar original/spline overlay to this path");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a list of gamma values");
  add_common_options(*sweep, cfg);
  sweep->add_option("--sweep", cfg.sweep, "Comma-separated gamma list")->required();
  sweep->add_option("--baseline-epsilon", cfg.baseline_epsilon,
                    "Add RDP baseline columns with this tolerance");

  auto* bench = app.add_subcommand("bench", "Time simplification against N");
  add_common_options(*bench, cfg);
  bench->add_option("--bench-sizes", cfg.bench_sizes,
                    "Comma-separated synthetic trajectory sizes");
  bench->add_option("--repeats", cfg.repeats, "Timing repeats (minimum is kept)");
  bench->add_option("--seed", cfg.seed, "Synthetic trajectory seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if ((simplify->parsed() || sweep->parsed()) && cfg.input.empty()) {
      throw CommandError{kExitUsage, "--input is required"};
    }
    if (simplify->parsed()) return cmd_simplify(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    return cmd_bench(cfg);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const fs::Error& e) {
    std::cerr << "error: " << fs::to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == fs::ErrorKind::IoError ? kExitIo : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
