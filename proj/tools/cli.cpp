#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mahh/bounds.hpp"
#include "mahh/fitness.hpp"
#include "mahh/harness.hpp"
#include "mahh/level_chain.hpp"
#include "mahh/rational.hpp"
#include "mahh/run_io.hpp"
#include "mahh/search.hpp"
#include "mahh/stats.hpp"

namespace mahh::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[48];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value,
                                    std::chars_format::general, 10);
  return std::string(buffer, result.ptr);
}

std::string exact_text(const ExtRational& value, int precision) {
  if (value.is_infinite()) return "inf";
  return value.to_string() + " (" + value.to_decimal(precision) + ")";
}

unsigned default_jobs() {
  if (const char* env = std::getenv("MAHH_JOBS")) {
    unsigned jobs = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), jobs);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return jobs;
  }
  return 1;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw UsageError("expected a comma-separated integer list, got '" + text + "'");
    }
    values.push_back(v);
  }
  return values;
}

bool is_one_bit(const AlgorithmConfig& cfg) { return cfg.mutation.kind == MutationKind::OneBit; }

// Simulation parameters shared by simulate, phases, compare and scaling.
struct SimOptions {
  std::string algo = "mahh-onebit";
  int n = 0;
  int m = 0;
  std::string p = "0";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t cap = 1'000'000'000;
  std::string start = "uniform-random";
  unsigned jobs = 1;
};

void add_problem_options(CLI::App& cmd, SimOptions& o) {
  cmd.add_option("--n", o.n, "Dimension")->required()->check(CLI::Range(2, 1 << 20));
  cmd.add_option("--m", o.m, "Jump gap width")->required()->check(CLI::PositiveNumber);
}

void add_sim_options(CLI::App& cmd, SimOptions& o, bool with_n = true) {
  cmd.add_option("--algo", o.algo, "mahh-onebit | mahh-global | opo-ea | rls")
      ->capture_default_str();
  if (with_n) add_problem_options(cmd, o);
  cmd.add_option("--p", o.p, "AllMoves probability, rational or decimal (scaling also takes c/n)")->capture_default_str();
  cmd.add_option("--trials", o.trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
  cmd.add_option("--seed", o.seed, "Base seed")->capture_default_str();
  cmd.add_option("--cap", o.cap, "Step cap per trial")->capture_default_str()->check(CLI::PositiveNumber);
  cmd.add_option("--start", o.start, "uniform-random | level=K | local-optimum | 0/1 string")
      ->capture_default_str();
  cmd.add_option("--jobs", o.jobs, "Worker threads (default $MAHH_JOBS or 1)");
}

Rational parse_p(const std::string& text) {
  Rational p = Rational::parse(text);
  if (p < Rational(0) || p > Rational(1)) throw UsageError("--p must lie in [0,1]");
  return p;
}

void check_problem(int n, int m) {
  if (m < 1 || m > n - 1) throw UsageError("--m must lie in [1..n-1]");
}

AlgorithmConfig make_config(const SimOptions& o) {
  return baseline_config(o.algo, o.n, parse_p(o.p).to_double());
}

// Exact level chain for one-bit configurations, following the config's
// elitist rule.
LevelChain exact_chain(const AlgorithmConfig& cfg, int n, int m, const Rational& p) {
  if (!is_one_bit(cfg)) {
    throw UsageError("no exact reference for '" + cfg.name + "' (bit-wise mutation)");
  }
  const Rational chain_p = cfg.p == 0.0 ? Rational(0) : p;
  return build_unitation_chain(FitnessFunction::jump(n, m), chain_p, cfg.elitist_rule);
}

ExtRational exact_runtime(const LevelChain& chain, const StartPolicy& start, int m) {
  if (std::holds_alternative<UniformStart>(start)) return expected_runtime_uniform(chain);
  if (const auto* level = std::get_if<LevelStart>(&start)) return expected_runtime(chain, level->level);
  if (std::holds_alternative<LocalOptimumStart>(start)) return expected_runtime(chain, chain.n - m);
  const auto& x = std::get<BitString>(start);
  return expected_runtime(chain, static_cast<int>(x.one_count()));
}

std::vector<TrialResult> simulate(const AlgorithmConfig& cfg, const SimOptions& o) {
  BatchOptions batch;
  batch.trials = o.trials;
  batch.base_seed = o.seed;
  batch.cap = o.cap;
  batch.start = parse_start_policy(o.start);
  batch.jobs = o.jobs;
  return run_batch(cfg, FitnessFunction::jump(o.n, o.m), batch);
}

struct Completed {
  std::vector<double> T, T1, N;
  std::size_t censored = 0;
};

Completed completed_runs(const std::vector<TrialResult>& results) {
  Completed c;
  for (const auto& r : results) {
    if (r.record.censored) {
      ++c.censored;
      continue;
    }
    c.T.push_back(static_cast<double>(r.record.T));
    c.T1.push_back(static_cast<double>(*r.record.T1));
    c.N.push_back(static_cast<double>(*r.record.N));
  }
  return c;
}

void print_summary(std::ostream& out, const std::string& label, const std::vector<double>& v) {
  if (v.empty()) {
    out << label << " (no samples)\n";
    return;
  }
  const Summary s = summarize(std::span<const double>(v));
  out << label << " mean " << format_real(s.mean) << " se " << format_real(s.se) << " sd "
      << format_real(s.sd) << " count " << s.count << '\n';
}

int cmd_exact(int n, int m, const std::string& p_text, const std::string& start_text,
              int precision, bool levels, std::ostream& out) {
  check_problem(n, m);
  const Rational p = parse_p(p_text);
  const StartPolicy start = parse_start_policy(start_text);
  const LevelChain chain = build_level_chain(n, m, p);

  out << "# one-bit MAHH on jump(n=" << n << ",m=" << m << "), p=" << p.to_string() << '\n';
  out << "closed_form_last_uphill " << exact_text(closed_form_last_uphill(n, m, p), precision) << '\n';
  out << "recurrence_last_uphill " << exact_text(uphill_time_recurrence(chain, n - 1), precision) << '\n';
  const auto h = hitting_times_linear_solve(chain);
  out << "linear_solve_last_uphill " << exact_text(h[n - 1], precision) << '\n';
  out << "expected_runtime[" << to_string(start) << "] "
      << exact_text(exact_runtime(chain, start, m), precision) << '\n';

  const PhaseStatistics phases = phase_statistics(chain);
  out << "phase_expected_length " << exact_text(phases.expected_length, precision) << '\n';
  out << "phase_success_probability " << exact_text(phases.success_probability, precision) << '\n';
  out << "phase_expected_count " << exact_text(phases.expected_phases, precision) << '\n';

  if (levels) {
    out << "level,up,down,uphill_time,hitting_time\n";
    for (int k = 0; k <= n; ++k) {
      out << k << ',' << chain.up_at(k).to_string() << ',' << chain.down_at(k).to_string() << ','
          << (k < n ? uphill_time_recurrence(chain, k).to_string() : std::string("0")) << ','
          << h[k].to_string() << '\n';
    }
  }
  return kExitOk;
}

int cmd_bounds(int n, int m, const std::optional<std::string>& p_text, std::ostream& out) {
  if (m < 1 || m > n) throw UsageError("--m must lie in [1..n]");
  const double p = p_text ? parse_p(*p_text).to_double() : static_cast<double>(m) / n;
  const BoundReport report = make_bound_report(n, m, p);
  out << "# bounds n=" << n << " m=" << m << " p=" << format_real(p) << '\n';
  for (const auto& entry : report.entries) {
    out << entry.id << ' ' << (entry.exact ? *entry.exact : entry.value.to_string());
    if (entry.up_to_constants) out << " [up to constants]";
    out << '\n';
  }
  if (report.optimal_k) out << "global_optimal_k " << *report.optimal_k << '\n';
  if (report.argmin_k) out << "global_argmin_k " << *report.argmin_k << '\n';
  return kExitOk;
}

int cmd_simulate(const SimOptions& o, const std::string& out_path, const std::string& format_text,
                 const std::string& phases_path, std::ostream& out) {
  check_problem(o.n, o.m);
  const RunFormat format = parse_run_format(format_text);
  const AlgorithmConfig cfg = make_config(o);
  const auto results = simulate(cfg, o);
  const auto records = records_of(results);
  if (out_path.empty()) {
    write_runs(out, records, format);
  } else {
    write_runs(std::filesystem::path(out_path), records, format);
    out << "wrote " << records.size() << " runs to " << out_path << '\n';
  }
  if (!phases_path.empty()) write_phases(std::filesystem::path(phases_path), results);
  return kExitOk;
}

int cmd_drift(const SimOptions& o, std::size_t samples, const std::string& levels_text,
              std::ostream& out) {
  check_problem(o.n, o.m);
  const AlgorithmConfig cfg = make_config(o);
  const FitnessFunction f = FitnessFunction::jump(o.n, o.m);
  std::vector<int> levels;
  if (levels_text.empty()) {
    for (int k = 0; k < o.n; ++k) levels.push_back(k);
  } else {
    levels = parse_int_list(levels_text);
  }
  out << "level,d,samples,mean,se\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const DriftEstimate e = estimate_drift(cfg, f, levels[i], samples, derive_seed(o.seed, i));
    out << e.level << ',' << e.potential << ',' << e.samples << ',' << format_real(e.mean) << ','
        << format_real(e.se) << '\n';
  }
  return kExitOk;
}

int cmd_phases(const SimOptions& o, std::ostream& out) {
  check_problem(o.n, o.m);
  const AlgorithmConfig cfg = make_config(o);
  const auto results = simulate(cfg, o);
  const Completed c = completed_runs(results);

  std::vector<double> lengths;
  std::vector<std::uint64_t> phase_counts;
  for (const auto& r : results) {
    if (!r.phases.complete()) continue;
    for (auto len : r.phases.lengths) lengths.push_back(static_cast<double>(len));
    if (*r.phases.N >= 1) phase_counts.push_back(*r.phases.N);
  }

  out << "# " << cfg.name << " on jump(n=" << o.n << ",m=" << o.m << "), p=" << o.p << '\n';
  out << "runs " << results.size() << " completed " << c.T.size() << " censored " << c.censored << '\n';
  print_summary(out, "T", c.T);
  print_summary(out, "T1", c.T1);
  print_summary(out, "N", c.N);
  print_summary(out, "phase_length", lengths);
  if (!phase_counts.empty()) {
    const GeometricFit fit = fit_geometric(phase_counts);
    out << "geometric_fit p_hat " << format_real(fit.p_hat) << " chi2 " << format_real(fit.test.statistic)
        << " dof " << fit.test.dof << " p_value " << format_real(fit.test.p_value) << " runs "
        << phase_counts.size() << '\n';
  }
  if (is_one_bit(cfg)) {
    const LevelChain chain = exact_chain(cfg, o.n, o.m, parse_p(o.p));
    const PhaseStatistics stats = phase_statistics(chain);
    out << "exact phase_length " << stats.expected_length.to_decimal(10) << '\n';
    out << "exact phase_count " << stats.expected_phases.to_decimal(10) << '\n';
  }
  return kExitOk;
}

int cmd_compare(const SimOptions& o, double z_max, std::ostream& out) {
  check_problem(o.n, o.m);
  const AlgorithmConfig cfg = make_config(o);
  const LevelChain chain = exact_chain(cfg, o.n, o.m, parse_p(o.p));
  const ExtRational reference = exact_runtime(chain, parse_start_policy(o.start), o.m);
  if (reference.is_infinite()) throw UsageError("exact expected runtime is infinite");

  const auto results = simulate(cfg, o);
  const Completed c = completed_runs(results);
  out << "reference " << reference.to_string() << " (" << reference.to_decimal(10) << ")\n";
  if (c.censored > 0) {
    out << "censored " << c.censored << " of " << results.size() << " runs\nFAIL\n";
    return kExitGateFailed;
  }
  const Summary s = summarize(std::span<const double>(c.T));
  const ZResult z = z_compare(s, reference.to_double(), z_max);
  out << "mean " << format_real(s.mean) << " se " << format_real(s.se) << " z " << format_real(z.z)
      << " z_max " << format_real(z_max) << '\n';
  out << (z.pass ? "PASS" : "FAIL") << '\n';
  return z.pass ? kExitOk : kExitGateFailed;
}

Rational resolve_p_rule(const std::string& rule, int n, int m) {
  // "c/n" scales with n; "m/n" uses the gap width as c.
  if (rule.size() > 2 && rule.ends_with("/n")) {
    const std::string c = rule.substr(0, rule.size() - 2);
    const Rational scale = c == "m" ? Rational(m) : Rational::parse(c);
    return parse_p((scale / Rational(n)).to_string());
  }
  return parse_p(rule);
}

int cmd_scaling(SimOptions o, const std::string& ns_text, const std::string& mode,
                std::ostream& out) {
  const auto ns = parse_int_list(ns_text);
  if (ns.size() < 2) throw UsageError("--ns needs at least two values");
  if (mode != "exact" && mode != "simulate") throw UsageError("--mode must be exact or simulate");
  const std::string rule = o.p;

  std::vector<std::pair<double, double>> points;
  out << "n,p,mean,se\n";
  for (int n : ns) {
    o.n = n;
    check_problem(n, o.m);
    const Rational p = resolve_p_rule(rule, n, o.m);
    o.p = p.to_string();
    const AlgorithmConfig cfg = make_config(o);
    double mean = 0.0, se = 0.0;
    if (mode == "exact") {
      const auto value = exact_runtime(exact_chain(cfg, n, o.m, p), parse_start_policy(o.start), o.m);
      if (value.is_infinite()) throw UsageError("exact expected runtime is infinite at n=" + std::to_string(n));
      mean = value.to_double();
    } else {
      const Completed c = completed_runs(simulate(cfg, o));
      if (c.T.empty()) throw std::runtime_error("all runs censored at n=" + std::to_string(n));
      const Summary s = summarize(std::span<const double>(c.T));
      mean = s.mean;
      se = s.se;
    }
    points.emplace_back(n, mean);
    out << n << ',' << p.to_string() << ',' << format_real(mean) << ',' << format_real(se) << '\n';
  }
  const LogLogFit fit = loglog_slope(points);
  out << "slope " << format_real(fit.slope) << " intercept " << format_real(fit.intercept)
      << " residual " << format_real(fit.residual) << '\n';
  return kExitOk;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Runtime laboratory for the move-acceptance hyper-heuristic on Jump", "mahh-lab"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI experiment file ([subcommand] sections)");

  int exact_n = 0, exact_m = 0, precision = 6;
  std::string exact_p, exact_start = "uniform-random";
  bool exact_levels = false;
  auto* exact = app.add_subcommand("exact", "Exact one-bit level-chain expectations");
  exact->add_option("--n", exact_n, "Dimension")->required()->check(CLI::Range(2, 1 << 16));
  exact->add_option("--m", exact_m, "Jump gap width")->required()->check(CLI::PositiveNumber);
  exact->add_option("--p", exact_p, "AllMoves probability (rational literal preferred)")->required();
  exact->add_option("--start", exact_start, "uniform-random | level=K | local-optimum")->capture_default_str();
  exact->add_option("--precision", precision, "Fractional digits of decimal renderings")
      ->capture_default_str()->check(CLI::Range(0, 100));
  exact->add_flag("--levels", exact_levels, "Print the per-level chain table");

  int bounds_n = 0, bounds_m = 0;
  std::optional<std::string> bounds_p;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the runtime bounds");
  bounds->add_option("--n", bounds_n, "Dimension")->required()->check(CLI::Range(2, 1 << 30));
  bounds->add_option("--m", bounds_m, "Jump gap width")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--p", bounds_p, "AllMoves probability (default m/n)");

  SimOptions sim_o;
  std::string sim_out, sim_format = "csv", sim_phases;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run a batch of trials and write per-run records");
  add_sim_options(*simulate_cmd, sim_o);
  simulate_cmd->add_option("--out", sim_out, "Output path (default stdout)");
  simulate_cmd->add_option("--format", sim_format, "csv | jsonl")->capture_default_str();
  simulate_cmd->add_option("--phases-out", sim_phases, "Also write per-phase CSV to this path");

  SimOptions drift_o;
  std::size_t drift_samples = 100000;
  std::string drift_levels;
  auto* drift = app.add_subcommand("drift", "Estimate the one-step drift of d per level");
  add_sim_options(*drift, drift_o);
  drift->add_option("--samples", drift_samples, "Samples per level")->capture_default_str()->check(CLI::PositiveNumber);
  drift->add_option("--levels", drift_levels, "Comma-separated levels (default 0..n-1)");

  SimOptions phases_o;
  auto* phases = app.add_subcommand("phases", "Phase statistics and geometric fit of N");
  add_sim_options(*phases, phases_o);

  SimOptions compare_o;
  double z_max = 3.0;
  auto* compare = app.add_subcommand("compare", "Gate the empirical mean runtime against the exact value");
  add_sim_options(*compare, compare_o);
  compare->add_option("--z-max", z_max, "Largest accepted |z|")->capture_default_str();

  SimOptions scaling_o;
  std::string scaling_ns = "8,12,16,20", scaling_mode = "exact";
  auto* scaling = app.add_subcommand("scaling", "Sweep n and fit a log-log slope");
  add_sim_options(*scaling, scaling_o, false);
  scaling->add_option("--m", scaling_o.m, "Jump gap width")->required()->check(CLI::PositiveNumber);
  scaling->add_option("--ns", scaling_ns, "Comma-separated dimensions")->capture_default_str();
  scaling->add_option("--mode", scaling_mode, "exact | simulate")->capture_default_str();

  const unsigned jobs = default_jobs();
  for (SimOptions* o : {&sim_o, &drift_o, &phases_o, &compare_o, &scaling_o}) o->jobs = jobs;
  scaling_o.p = "m/n";

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (exact->parsed()) return cmd_exact(exact_n, exact_m, exact_p, exact_start, precision, exact_levels, out);
    if (bounds->parsed()) return cmd_bounds(bounds_n, bounds_m, bounds_p, out);
    if (simulate_cmd->parsed()) return cmd_simulate(sim_o, sim_out, sim_format, sim_phases, out);
    if (drift->parsed()) return cmd_drift(drift_o, drift_samples, drift_levels, out);
    if (phases->parsed()) return cmd_phases(phases_o, out);
    if (compare->parsed()) return cmd_compare(compare_o, z_max, out);
    if (scaling->parsed()) return cmd_scaling(scaling_o, scaling_ns, scaling_mode, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace mahh::cli
