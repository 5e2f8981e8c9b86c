#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cliffshadow/bounds.hpp"
#include "cliffshadow/channel.hpp"
#include "cliffshadow/experiment.hpp"
#include "cliffshadow/verify.hpp"

using namespace cliffshadow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerifyFailure = 2;

// flat key = value config file; '#' starts a comment
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t\r");
      std::size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

std::vector<std::size_t> parse_schedule(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoul(tok));
  }
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

int cmd_simulate(const std::string& config_path, ExperimentConfig cfg, const std::string& out_path,
                 const std::set<std::string>& overridden) {
  if (!config_path.empty()) {
    auto kv = read_config_file(config_path);
    // flags win over file values
    auto take = [&](const char* key, auto setter) {
      if (kv.count(key) && !overridden.count(key)) setter(kv.at(key));
    };
    take("n", [&](const std::string& v) { cfg.n = std::stoul(v); });
    take("k", [&](const std::string& v) { cfg.k = std::stoul(v); });
    take("rank", [&](const std::string& v) { cfg.rank = std::stoul(v); });
    take("ensemble", [&](const std::string& v) { cfg.ensemble = ensemble_kind_from_string(v); });
    take("estimator", [&](const std::string& v) { cfg.estimator = estimator_kind_from_string(v); });
    take("schedule", [&](const std::string& v) { cfg.schedule = parse_schedule(v); });
    take("num_unitaries", [&](const std::string& v) { cfg.num_unitaries = std::stoul(v); });
    take("shots_per_unitary", [&](const std::string& v) { cfg.shots_per_unitary = std::stoul(v); });
    take("trials", [&](const std::string& v) { cfg.trials = std::stoul(v); });
    take("seed", [&](const std::string& v) { cfg.seed = std::stoull(v); });
    take("threads", [&](const std::string& v) { cfg.threads = std::stoul(v); });
    take("dense_limit", [&](const std::string& v) { cfg.dense_limit = std::stoul(v); });
    take("timing", [&](const std::string& v) { cfg.timing = (v == "1" || v == "true"); });
  }
  auto rows = run_experiment(cfg);
  write_output(out_path, experiment_csv(cfg, rows));
  return kExitOk;
}

int cmd_bounds(const std::string& theorem, std::size_t n, std::size_t k, std::size_t r, double eps,
               double delta, const std::string& out_path) {
  SampleComplexity sc = sample_complexity(theorem_kind_from_string(theorem), n, k, r, eps, delta);
  std::ostringstream os;
  os << "# cliffshadow-csv-v1 bounds\n";
  os << "theorem,n,k,r,eps_tr,delta,T,T_ceil,lambda_plus,lambda_minus,sigma_sq,R,eps_op,"
        "A,M,bases,L,N_U,N_S,assume_k2k2_ge_n,assume_k2k_ge_n\n";
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%s,%zu,%zu,%zu,%.17g,%.17g,%.17g,%llu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                "%.17g,%.17g,%.17g,%.17g,%d,%d\n",
                to_string(sc.theorem).c_str(), sc.n, sc.k, sc.r, sc.eps_tr, sc.delta, sc.samples,
                static_cast<unsigned long long>(sc.samples_ceil), sc.lambda_plus, sc.lambda_minus,
                sc.sigma_sq, sc.op_norm_R, sc.eps_op, sc.amplification, sc.shots_per_basis,
                sc.basis_count, sc.max_inv_eigenvalue, sc.num_unitaries, sc.shots_per_unitary,
                sc.assumption_rankr ? 1 : 0, sc.assumption_fullrank ? 1 : 0);
  os << buf;
  write_output(out_path, os.str());
  return kExitOk;
}

int cmd_mp(const std::string& ensemble, std::size_t n, std::size_t k, const std::string& pauli,
           std::size_t mc_samples, std::uint64_t seed) {
  EnsembleSpec spec(ensemble_kind_from_string(ensemble), n, k);
  PauliString p = PauliString::parse(pauli);
  Rational m = channel_eigenvalue(p, spec);
  std::cout << "m_P exact   : " << m.to_string() << "\n";
  std::cout << "m_P float   : " << m.to_double() << "\n";
  if (!m.is_zero()) std::cout << "1/m_P float : " << m.inverse().to_double() << "\n";
  if (mc_samples > 0) {
    RngStream rng(seed);
    auto est = monte_carlo_m(spec, p, mc_samples, rng);
    std::cout << "monte carlo : " << est.estimate << " +- " << est.std_error << " (" << est.samples
              << " samples)\n";
  }
  return kExitOk;
}

int cmd_tau(const std::string& group, std::size_t k, const std::string& pauli_a,
            const std::string& pauli_b, std::size_t mc_samples, std::uint64_t seed) {
  PauliString a = PauliString::parse(pauli_a);
  PauliString b = PauliString::parse(pauli_b);
  Rational t(0);
  BlockPartition part(a.n_qubits(), group == "full" ? a.n_qubits() : k);
  t = tau_block(a, b, part);
  std::cout << "tau exact   : " << t.to_string() << "\n";
  std::cout << "tau float   : " << t.to_double() << "\n";
  if (mc_samples > 0) {
    RngStream rng(seed);
    auto est = monte_carlo_tau(part, a, b, mc_samples, rng);
    std::cout << "monte carlo : " << est.estimate << " +- " << est.std_error << " (" << est.samples
              << " samples)\n";
  }
  return kExitOk;
}

int cmd_bias_demo(std::size_t n, std::size_t k, std::size_t samples, std::uint64_t seed) {
  BiasDemoReport rep = run_bias_demo(n, k, samples, seed);
  std::cout << rep.to_text();
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out_path) {
  auto checks = run_verify(suite, seed);
  write_output(out_path, verify_report(checks));
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
  }
  std::cerr << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shallow-circuit classical-shadow tomography toolkit"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a seeded tomography experiment and emit CSV");
  std::string config_path, out_path, ensemble_s = "brickwork-pbc", estimator_s = "shadow",
                           schedule_s;
  ExperimentConfig cfg;
  sim->add_option("--config", config_path, "flat key=value config file");
  sim->add_option("--n", cfg.n, "number of qubits");
  sim->add_option("--k", cfg.k, "block size");
  sim->add_option("--rank", cfg.rank, "state rank");
  sim->add_option("--ensemble", ensemble_s,
                  "block | brickwork-pbc | brickwork-obc-u2split | brickwork-obc-u1split | mub-product");
  sim->add_option("--estimator", estimator_s, "shadow | mub | two-layer");
  sim->add_option("--schedule", schedule_s, "comma-separated sample checkpoints");
  sim->add_option("--num-unitaries", cfg.num_unitaries, "two-layer: unitaries");
  sim->add_option("--shots-per-unitary", cfg.shots_per_unitary, "two-layer: shots per unitary");
  sim->add_option("--trials", cfg.trials, "independent trials");
  sim->add_option("--seed", cfg.seed, "master seed");
  sim->add_option("--threads", cfg.threads, "worker threads");
  sim->add_option("--dense-limit", cfg.dense_limit, "max qubits for dense simulation");
  sim->add_option("--out", out_path, "output CSV path (default stdout)");
  sim->add_flag("--timing", cfg.timing, "append a wall-clock column (not byte-stable)");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "evaluate a sample-complexity bound as one CSV row");
  std::string theorem = "thm2";
  std::size_t bn = 4, bk = 2, br = 1;
  double beps = 0.1, bdelta = 0.05;
  std::string bounds_out;
  bnd->add_option("--theorem", theorem, "thm1 | thm2 | appf");
  bnd->add_option("--n", bn, "qubits")->required();
  bnd->add_option("--k", bk, "block size")->required();
  bnd->add_option("--r", br, "rank (thm1)");
  bnd->add_option("--eps", beps, "trace-distance target");
  bnd->add_option("--delta", bdelta, "failure probability");
  bnd->add_option("--out", bounds_out, "output path (default stdout)");

  // mp
  auto* mp = app.add_subcommand("mp", "channel eigenvalue of a Pauli under an ensemble");
  std::string mp_ensemble = "block", mp_pauli;
  std::size_t mp_n = 0, mp_k = 1, mp_mc = 0;
  std::uint64_t mp_seed = 1;
  mp->add_option("--ensemble", mp_ensemble, "ensemble kind");
  mp->add_option("--n", mp_n, "qubits (default: Pauli length)");
  mp->add_option("--k", mp_k, "block size")->required();
  mp->add_option("--pauli", mp_pauli, "Pauli text, e.g. -XZIY")->required();
  mp->add_option("--mc", mp_mc, "optional Monte Carlo sample count");
  mp->add_option("--seed", mp_seed, "Monte Carlo seed");

  // tau
  auto* tau = app.add_subcommand("tau", "pair correlation of two Paulis");
  std::string tau_group = "full", tau_a, tau_b;
  std::size_t tau_k = 1, tau_mc = 0;
  std::uint64_t tau_seed = 1;
  tau->add_option("--group", tau_group, "full | block");
  tau->add_option("--k", tau_k, "block size (for block)");
  tau->add_option("--pauli-a", tau_a, "first Pauli")->required();
  tau->add_option("--pauli-b", tau_b, "second Pauli")->required();
  tau->add_option("--mc", tau_mc, "optional Monte Carlo sample count");
  tau->add_option("--seed", tau_seed, "Monte Carlo seed");

  // bias-demo
  auto* bias = app.add_subcommand("bias-demo", "compare the exact channel inverse with the global one");
  std::size_t bias_n = 4, bias_k = 2, bias_samples = 100000;
  std::uint64_t bias_seed = 7;
  bias->add_option("--n", bias_n, "qubits");
  bias->add_option("--k", bias_k, "block size");
  bias->add_option("--samples", bias_samples, "snapshot count");
  bias->add_option("--seed", bias_seed, "seed");

  // verify
  auto* ver = app.add_subcommand("verify", "run an oracle suite and report pass/fail per check");
  std::string suite = "all", verify_out;
  std::uint64_t verify_seed = 20240817;
  ver->add_option("suite", suite, "all | transfer | channel | bounds | estimators");
  ver->add_option("--seed", verify_seed, "Monte Carlo seed");
  ver->add_option("--out", verify_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      std::set<std::string> overridden;
      for (const auto* opt : sim->get_options()) {
        if (opt->count() > 0) {
          std::string name = opt->get_name();
          if (name.rfind("--", 0) == 0) name = name.substr(2);
          for (auto& ch : name) {
            if (ch == '-') ch = '_';
          }
          overridden.insert(name);
        }
      }
      if (!schedule_s.empty()) cfg.schedule = parse_schedule(schedule_s);
      cfg.ensemble = ensemble_kind_from_string(ensemble_s);
      cfg.estimator = estimator_kind_from_string(estimator_s);
      return cmd_simulate(config_path, cfg, out_path, overridden);
    }
    if (bnd->parsed()) return cmd_bounds(theorem, bn, bk, br, beps, bdelta, bounds_out);
    if (mp->parsed()) {
      if (mp_n == 0) mp_n = mp_pauli.size() - (mp_pauli[0] == '-' ? 1 : 0);
      return cmd_mp(mp_ensemble, mp_n, mp_k, mp_pauli, mp_mc, mp_seed);
    }
    if (tau->parsed()) return cmd_tau(tau_group, tau_k, tau_a, tau_b, tau_mc, tau_seed);
    if (bias->parsed()) return cmd_bias_demo(bias_n, bias_k, bias_samples, bias_seed);
    if (ver->parsed()) return cmd_verify(suite, verify_seed, verify_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
