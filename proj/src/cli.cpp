#include "sojourn/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sojourn/golden.hpp"
#include "sojourn/measures.hpp"
#include "sojourn/serialize.hpp"
#include "sojourn/theorems.hpp"

namespace sojourn {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

void check_bound(const RunConfig& cfg, int value, const char* what) {
  require(value <= cfg.max_order, std::string(what) + " " + std::to_string(value) + " exceeds --max-order " +
                                      std::to_string(cfg.max_order));
}

std::vector<std::string> csv_columns(const RunConfig& cfg) {
  if (cfg.subcommand == "expand") {
    if (cfg.theorem == 1) return {"z", "t", "p", "q", "r", "s"};
    return {"z", "t", "matrix"};
  }
  if (cfg.subcommand == "dp") return {"n", "y", "k", "matrix"};
  if (cfg.subcommand == "measure") return {"k", "weight", "probability"};
  return {"n", "a"};
}

void emit(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  std::string text = cfg.format == OutputFormat::json ? doc.dump(2) + "\n" : rows_to_csv(doc["rows"], csv_columns(cfg));
  if (cfg.output) {
    std::ofstream file(*cfg.output);
    require(static_cast<bool>(file), "cannot open output file " + cfg.output->string());
    file << text;
  } else {
    out << text;
  }
}

}  // namespace

int run_verify(int order, const std::filesystem::path& golden_dir, std::ostream& out) {
  auto started = std::chrono::steady_clock::now();
  std::vector<CheckReport> reports;
  SojournTable table = SojournTable::evolve(0, order);
  GammaTable dp_gammas = GammaTable::from_dp(table);
  Theorem1Series t1 = theorem1_series(order);
  Theorem2Series t2 = theorem2_series(order);

  reports.push_back(compare_theorem1_with_dp(t1, table, order));
  reports.push_back(check_theorem1_division_free(order));
  reports.push_back(compare_theorem2_with_gammas(t2, dp_gammas, order, "DP"));
  reports.push_back(compare_theorem2_with_gammas(t2, gamma_via_convolution(order), order, "convolution"));
  reports.push_back(check_theorem2_division_free(order));
  reports.push_back(x_matrix_check(order));
  reports.push_back(check_fourn_subseries(t2, order));
  reports.push_back(check_first_step_equations(-5, 5, order));
  reports.push_back(check_three_term_recurrences(-5, 5, order));
  CheckReport uniform{"uniform bridge measure at multiples of 4", 0, {}};
  for (int n = 1; 4 * n <= order; ++n) uniform.merge(uniform_bridge_check(table, n));
  reports.push_back(uniform);
  reports.push_back(classical_gf_check(order / 2));
  reports.push_back(compare_goldens(golden_dir));

  bool ok = true;
  for (const auto& r : reports) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.summary() << '\n';
    ok = ok && r.ok();
  }
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out << (ok ? "verify: all checks agree exactly" : "verify: MISMATCH") << " (order " << order << ", "
      << elapsed << " s)\n";
  return ok ? kExitOk : kExitMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact sojourn-time distributions of the Hadamard walk", "sojourn"};
  app.require_subcommand(1);
  app.add_option("--max-order", cfg.max_order, "Upper bound on --order / --n / --n-max")->capture_default_str();

  std::string format = "json";
  std::string output;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--output", output, "Write to this file instead of stdout");
  };

  auto* expand = app.add_subcommand("expand", "Expand a closed-form generating function");
  expand->add_option("--theorem", cfg.theorem, "1: PQRS series from the origin, 2: bridge matrix series")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  expand->add_option("--order", cfg.order, "Highest power of z")->capture_default_str();
  add_io(expand);

  auto* dp = app.add_subcommand("dp", "Emit the operator path-sum table");
  dp->add_option("--start", cfg.start, "Starting position")->capture_default_str();
  dp->add_option("--n-max", cfg.n, "Number of steps")->required();
  add_io(dp);

  auto* measure = app.add_subcommand("measure", "Sojourn-time measure at an even time");
  measure->add_option("--kind", cfg.kind, "A, B, classical-arcsine or classical-uniform")
      ->check(CLI::IsMember({"A", "B", "classical-arcsine", "classical-uniform"}))
      ->capture_default_str();
  measure->add_option("--n", cfg.n, "Even time")->required();
  measure->add_option("--state", cfg.state, "Initial state a_re,a_im,b_re,b_im (default T[1/sqrt2, i/sqrt2])");
  add_io(measure);

  auto* verify = app.add_subcommand("verify", "Run every exact cross-check");
  verify->add_option("--order", cfg.order, "Even z-order of the checks")->capture_default_str();
  std::string golden_dir;
  verify->add_option("--golden-dir", golden_dir, "Directory holding the golden files");

  auto* first_return = app.add_subcommand("first-return", "First-return amplitudes a_n");
  first_return->add_option("--n-max", cfg.n, "Largest index")->required();
  add_io(first_return);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (!output.empty()) cfg.output = output;
  if (!golden_dir.empty()) cfg.golden_dir = golden_dir;

  try {
    if (cfg.subcommand == "expand") {
      require(cfg.order >= 2, "--order must be at least 2");
      check_bound(cfg, cfg.order, "--order");
      emit(cfg, expand_document(cfg.theorem, cfg.order), out);
    } else if (cfg.subcommand == "dp") {
      require(cfg.n >= 1, "--n-max must be at least 1");
      check_bound(cfg, cfg.n, "--n-max");
      emit(cfg, dp_document(cfg.start, cfg.n), out);
    } else if (cfg.subcommand == "measure") {
      MeasureKind kind = parse_measure_kind(cfg.kind);
      require(cfg.n >= 0 && cfg.n % 2 == 0, "--n must be even and non-negative");
      require(kind != MeasureKind::classical_uniform || cfg.n >= 2, "classical-uniform needs --n >= 2");
      check_bound(cfg, cfg.n, "--n");
      QubitState phi = QubitState::phi_star();
      if (!cfg.state.empty()) {
        try {
          phi = parse_state(cfg.state);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--state: ") + e.what());
        }
      }
      emit(cfg, measure_document(kind, cfg.n, phi), out);
    } else if (cfg.subcommand == "verify") {
      require(cfg.order >= 2 && cfg.order % 2 == 0, "--order must be even and at least 2");
      check_bound(cfg, cfg.order, "--order");
      return run_verify(cfg.order, cfg.golden_dir.value_or(default_golden_dir()), out);
    } else {
      require(cfg.n >= 1, "--n-max must be at least 1");
      check_bound(cfg, cfg.n, "--n-max");
      emit(cfg, first_return_document(cfg.n), out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace sojourn
