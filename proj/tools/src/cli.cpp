#include "tropdyn_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tropdyn/errors.hpp"
#include "tropdyn/ergodic.hpp"
#include "tropdyn/graph.hpp"
#include "tropdyn/json_io.hpp"
#include "tropdyn/reference.hpp"
#include "tropdyn/zerotemp.hpp"

namespace tropdyn::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxMapAttempts = 1'000'000;
constexpr std::size_t kOracleMaxStates = 10;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Integer in [lo, hi].
  long long uniform(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(engine_() % span);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

bool strongly_connected(std::size_t n, const Adjacency& out) {
  return strongly_connected_components(out).size() == 1 &&
         (n > 1 || !out[0].empty());
}

struct Config {
  std::string input;
  std::string output;
  std::vector<double> grid = kDefaultGrid;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double tol = kDefaultTol;
  bool strict = false;
  bool force = false;
  std::optional<std::size_t> n;
  bool deterministic = false;
  std::string format;
  std::vector<std::vector<double>> probes;
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

TransitionSystem load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return system_from_json(j);
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidInput("cannot write " + cfg.output);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return;
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw InvalidInput("unsupported --format " + cfg.format + " for this command");
}

std::vector<std::vector<double>> probes_for(const Config& cfg, std::size_t n) {
  if (cfg.probes.empty()) return default_probes(n, cfg.seed);
  for (const auto& f : cfg.probes) {
    if (f.size() != n)
      throw InvalidInput("--probe has " + std::to_string(f.size()) +
                         " entries, the system has " + std::to_string(n) + " states");
  }
  return cfg.probes;
}

ErgodicReport analyzed(const TransitionSystem& sys, const Config& cfg) {
  return analyze(sys, AnalysisOptions{cfg.tol, cfg.strict});
}

int cmd_analyze(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const ErgodicReport report = analyzed(load_system(cfg.input), cfg);
  emit(cfg, dump(report_to_json(report)), out);
  return kOk;
}

int cmd_sweep(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"csv", "json"});
  const TransitionSystem sys = load_system(cfg.input);
  const ErgodicReport report = analyzed(sys, cfg);
  if (!report.uniquely_calibrated && !cfg.force) {
    throw MultipleClassesError(
        "sweep: " + std::to_string(report.mane.critical_classes.size()) +
            " critical classes; pass --force to sweep anyway",
        report.mane.critical_classes.size());
  }
  const Sweep sweep = beta_sweep(sys, cfg.grid);
  const auto probes = probes_for(cfg, sys.size());

  std::vector<LimitDiagnostics> diags;
  std::vector<std::vector<double>> residuals(sweep.records.size());
  if (report.uniquely_calibrated) {
    diags = limit_diagnostics(sweep, report);
    const RateFunction rate = rate_function(report);
    for (std::size_t i = 0; i < sweep.records.size(); ++i)
      for (const auto& f : probes)
        residuals[i].push_back(ldp_residual(sweep.records[i], f, rate));
  }

  const double nan = std::nan("");
  if (cfg.format == "json") {
    json records = json::array();
    for (std::size_t i = 0; i < sweep.records.size(); ++i) {
      const SweepRecord& r = sweep.records[i];
      json rec{{"beta", r.beta},
               {"pressure_over_beta", r.pressure_over_beta},
               {"scaled_log_u", r.scaled_log_u},
               {"scaled_log_m", r.scaled_log_m},
               {"scaled_g", r.scaled_g}};
      if (!diags.empty()) {
        rec["d_u"] = diags[i].d_u;
        rec["d_b"] = diags[i].d_b;
        rec["b_divergence_ok"] = diags[i].b_divergence_ok;
        rec["d_g"] = diags[i].d_g;
        rec["d_D"] = diags[i].d_D;
        rec["ldp_residual"] = residuals[i];
      }
      records.push_back(std::move(rec));
    }
    emit(cfg,
         dump(json{{"reference_state", sweep.reference_state},
                   {"uniquely_calibrated", report.uniquely_calibrated},
                   {"probes", probes},
                   {"records", std::move(records)}}),
         out);
    return kOk;
  }

  std::ostringstream csv;
  csv << "beta,pressure_over_beta,d_u,d_b,d_g,d_D";
  for (std::size_t k = 0; k < probes.size(); ++k) csv << ",ldp_residual_" << k;
  csv << '\n';
  for (std::size_t i = 0; i < sweep.records.size(); ++i) {
    const SweepRecord& r = sweep.records[i];
    const bool have = !diags.empty();
    csv << format_double(r.beta) << ',' << format_double(r.pressure_over_beta);
    for (double d : {have ? diags[i].d_u : nan, have ? diags[i].d_b : nan,
                     have ? diags[i].d_g : nan, have ? diags[i].d_D : nan})
      csv << ',' << format_double(d);
    for (std::size_t k = 0; k < probes.size(); ++k)
      csv << ',' << format_double(have ? residuals[i][k] : nan);
    csv << '\n';
  }
  emit(cfg, csv.str(), out);
  return kOk;
}

int cmd_ldp(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv"});
  const TransitionSystem sys = load_system(cfg.input);
  const ErgodicReport report = analyzed(sys, cfg);
  const RateFunction rate = rate_function(report);
  const auto probes = probes_for(cfg, sys.size());
  const Sweep sweep = beta_sweep(sys, cfg.grid);

  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "beta";
    for (std::size_t k = 0; k < probes.size(); ++k) csv << ",ldp_residual_" << k;
    csv << '\n';
    for (const SweepRecord& r : sweep.records) {
      csv << format_double(r.beta);
      for (const auto& f : probes) csv << ',' << format_double(ldp_residual(r, f, rate));
      csv << '\n';
    }
    emit(cfg, csv.str(), out);
    return kOk;
  }

  json rows = json::array();
  for (const SweepRecord& r : sweep.records) {
    std::vector<double> values;
    for (const auto& f : probes) values.push_back(ldp_residual(r, f, rate));
    rows.push_back(json{{"beta", r.beta}, {"ldp_residual", values}});
  }
  json doc = rate_to_json(rate);
  doc["probes"] = probes;
  doc["residuals"] = std::move(rows);
  emit(cfg, dump(doc), out);
  return kOk;
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (cfg.n && *cfg.n == 0) throw InvalidInput("--n must be at least 1");
  emit(cfg, dump(system_to_json(random_system(cfg.seed, cfg.n, cfg.deterministic))),
       out);
  return kOk;
}

int cmd_oracle(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  TransitionSystem sys;
  if (!cfg.input.empty()) {
    sys = load_system(cfg.input);
  } else if (cfg.seed_given) {
    sys = random_system(cfg.seed, cfg.n, cfg.deterministic, kOracleMaxStates);
  } else {
    throw InvalidInput("oracle needs --input or --seed");
  }
  const std::size_t n = sys.size();
  if (n > kOracleMaxStates)
    throw InvalidInput("oracle: " + std::to_string(n) + " states; the limit is " +
                       std::to_string(kOracleMaxStates));

  const ErgodicReport report = analyzed(sys, cfg);
  const TropValue q_brute = reference::max_cycle_mean(sys.weight_matrix());
  const double dev_q =
      q_brute.is_finite() ? std::abs(report.q - q_brute.value())
                          : std::numeric_limits<double>::infinity();

  const TropMatrix phi_brute =
      reference::max_walk_weights(report.normalized_system.weight_matrix(), 2 * n);
  const double dev_phi = sup_distance(report.mane.phi, phi_brute);

  std::set<std::size_t> aubry_brute;
  for (std::size_t x = 0; x < n; ++x) {
    const TropValue d = phi_brute(x, x);
    if (d.is_finite() && std::abs(d.value()) <= cfg.tol) aubry_brute.insert(x);
  }
  const std::set<std::size_t> aubry_fast(report.mane.aubry.begin(),
                                         report.mane.aubry.end());
  std::vector<std::size_t> diff;
  std::set_symmetric_difference(aubry_fast.begin(), aubry_fast.end(),
                                aubry_brute.begin(), aubry_brute.end(),
                                std::back_inserter(diff));
  const double dev_aubry = static_cast<double>(diff.size());

  const bool pass = dev_q <= cfg.tol && dev_phi <= cfg.tol && dev_aubry == 0.0;
  json doc{{"n", n},
           {"tol", cfg.tol},
           {"Q", report.q},
           {"Q_enumerated", q_brute},
           {"deviation", {{"Q", TropValue{dev_q}},
                          {"phi", TropValue{dev_phi}},
                          {"aubry", dev_aubry}}},
           {"aubry", report.mane.aubry},
           {"aubry_enumerated", aubry_brute},
           {"pass", pass}};
  emit(cfg, dump(doc), out);
  return pass ? kOk : kOracleMismatch;
}

}  // namespace

TransitionSystem random_system(std::uint64_t seed, std::optional<std::size_t> n,
                               bool deterministic, std::size_t max_states) {
  Rng rng(seed);
  const std::size_t size =
      n ? *n : static_cast<std::size_t>(rng.uniform(2, static_cast<long long>(max_states)));
  if (size == 0) throw InvalidInput("random_system: n must be at least 1");

  if (deterministic) {
    for (std::size_t attempt = 0; attempt < kMaxMapAttempts; ++attempt) {
      std::vector<std::size_t> image(size);
      std::vector<int> indegree(size, 0);
      for (std::size_t x = 0; x < size; ++x) {
        image[x] = rng.index(size);
        ++indegree[image[x]];
      }
      if (std::find(indegree.begin(), indegree.end(), 0) != indegree.end()) continue;
      std::vector<double> potential(size);
      for (double& a : potential) a = static_cast<double>(rng.uniform(-5, 5));
      return TransitionSystem::from_map(image, potential);
    }
    throw InvalidInput("random_system: no map with full image found for n = " +
                       std::to_string(size));
  }

  Adjacency out(size);
  std::vector<Arc> arcs;
  while (!strongly_connected(size, out)) {
    const std::size_t s = rng.index(size);
    const std::size_t t = rng.index(size);
    if (std::find(out[s].begin(), out[s].end(), t) != out[s].end()) continue;
    out[s].push_back(t);
    arcs.push_back({s, t, static_cast<double>(rng.uniform(-5, 5))});
  }
  return TransitionSystem::from_arcs(size, std::move(arcs));
}

std::vector<std::vector<double>> default_probes(std::size_t n, std::uint64_t seed,
                                                std::size_t extra) {
  std::vector<std::vector<double>> probes{std::vector<double>(n, 0.0)};
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<double> f(n);
    for (double& x : f) x = static_cast<double>(rng.uniform(-5, 5));
    probes.push_back(std::move(f));
  }
  return probes;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical thermodynamic formalism on finite transition systems", "tropdyn"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&cfg](CLI::App* sub, bool needs_input) {
    auto* input = sub->add_option("--input", cfg.input, "System JSON file");
    if (needs_input) input->required();
    sub->add_option("--output", cfg.output, "Output file (default: stdout)");
    sub->add_option("--tol", cfg.tol, "Comparison tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--strict", cfg.strict, "Reject states without a predecessor");
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_seed = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "64-bit seed")
        ->each([&cfg](const std::string&) { cfg.seed_given = true; });
  };
  auto add_sweep = [&cfg](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid, "Comma-separated beta grid")->delimiter(',');
    sub->add_option("--probe", cfg.probes,
                    "Comma-separated probe vector (repeatable)")
        ->delimiter(',');
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Tropical analysis report");
  add_common(analyze_cmd, true);

  auto* sweep_cmd = app.add_subcommand("sweep", "Zero-temperature sweep as CSV");
  add_common(sweep_cmd, true);
  add_sweep(sweep_cmd);
  add_seed(sweep_cmd);
  sweep_cmd->add_flag("--force", cfg.force, "Sweep even with several critical classes");

  auto* ldp_cmd = app.add_subcommand("ldp", "Rate function and LDP residuals");
  add_common(ldp_cmd, true);
  add_sweep(ldp_cmd);
  add_seed(ldp_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Random irreducible system");
  gen_cmd->add_option("--output", cfg.output, "Output file (default: stdout)");
  gen_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();
  gen_cmd->add_option("--n", cfg.n, "Number of states");
  gen_cmd->add_flag("--deterministic", cfg.deterministic, "Generate a map");
  gen_cmd->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-check");
  add_common(oracle_cmd, false);
  add_seed(oracle_cmd);
  oracle_cmd->add_option("--n", cfg.n, "States of the generated system");
  oracle_cmd->add_flag("--deterministic", cfg.deterministic, "Generate a map");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
    if (ldp_cmd->parsed()) return cmd_ldp(cfg, out);
    if (gen_cmd->parsed()) return cmd_gen(cfg, out);
    if (oracle_cmd->parsed()) return cmd_oracle(cfg, out);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const MultipleClassesError& e) {
    err << "refused: " << e.what() << '\n';
    return kMultipleClasses;
  } catch (const AssumptionViolation& e) {
    err << "assumption violated: " << e.what() << '\n';
    return kAssumptionViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kInvalidInput;
}

}  // namespace tropdyn::cli
