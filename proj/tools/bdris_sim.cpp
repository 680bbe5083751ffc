// Command-line front end: runs Monte-Carlo sweeps of the downlink under
// adversarial surface reconfiguration, writes CSV, and hosts the built-in
// verification and benchmark modes.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bdris/channel.hpp"
#include "bdris/config.hpp"
#include "bdris/sim.hpp"

using namespace bdris;

namespace {

int run_verify();
int run_bench();

std::pair<SweepAxis, std::vector<double>> parse_sweep_flag(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw CLI::ValidationError("--sweep", "expected <axis>=<v1,v2,...>");
  const SweepAxis axis = parse_sweep_axis(text.substr(0, eq));
  std::vector<double> values;
  std::stringstream ss(text.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  if (values.empty())
    throw CLI::ValidationError("--sweep", "no sweep values given");
  return {axis, values};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo simulator for multi-user MISO downlink robustness "
               "under adversarial reconfigurable-surface attacks"};

  std::string config_path, sweep_text, out_path = "-";
  std::string attack_text, arch_text, scheme_text, mode_text, safe_text;
  int trials = -1;
  long long seed = -1;
  bool verify = false, bench = false;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--attack", attack_text, "none|random|aligned")
      ->check(CLI::IsMember({"none", "random", "aligned"}));
  app.add_option("--arch", arch_text, "single|group|fully")
      ->check(CLI::IsMember({"single", "group", "fully"}));
  app.add_option("--scheme", scheme_text, "rsma|sdma|both")
      ->check(CLI::IsMember({"rsma", "sdma", "both"}));
  app.add_option("--mode", mode_text, "uplink training mode: absorb|reflect")
      ->check(CLI::IsMember({"absorb", "reflect"}));
  app.add_option("--sweep", sweep_text, "<axis>=<v1,v2,...>");
  app.add_option("--trials", trials, "Monte-Carlo trials per sweep point");
  app.add_option("--seed", seed, "base seed for the trial streams");
  app.add_option("--safe-mode", safe_text, "baseline surface state: static-ris|no-ris")
      ->check(CLI::IsMember({"static-ris", "no-ris"}));
  app.add_option("--out", out_path, "CSV output path ('-' for stdout)");
  app.add_flag("--verify", verify, "run the invariant suites and exit");
  app.add_flag("--bench", bench,
               "time attack generation per architecture and check the scaling trend");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify) return run_verify();
    if (bench) return run_bench();

    ExperimentSpec spec;
    if (!config_path.empty()) spec = parse_config_file(config_path);
    if (!attack_text.empty()) spec.attack = parse_attack(attack_text);
    if (!arch_text.empty()) spec.architecture = parse_architecture(arch_text);
    if (!mode_text.empty()) spec.scenario.uplink_mode = parse_uplink_mode(mode_text);
    if (!safe_text.empty()) spec.safe_mode = parse_safe_mode(safe_text);
    if (trials >= 0) spec.trials = trials;
    if (seed >= 0) spec.seed = std::uint64_t(seed);
    if (!sweep_text.empty()) {
      auto [axis, values] = parse_sweep_flag(sweep_text);
      spec.sweep_axis = axis;
      spec.sweep_values = values;
    }

    std::vector<Scheme> schemes;
    if (scheme_text == "both")
      schemes = {Scheme::rsma, Scheme::sdma};
    else if (!scheme_text.empty())
      schemes = {parse_scheme(scheme_text)};
    else
      schemes = {spec.scheme};

    // one sweep per scheme over the same seeds, rows interleaved per value
    std::vector<std::vector<SweepRow>> per_scheme;
    for (Scheme s : schemes) {
      spec.scheme = s;
      per_scheme.push_back(run_sweep(spec));
    }
    std::vector<SweepRow> rows;
    for (size_t v = 0; v < per_scheme.front().size(); ++v)
      for (const auto& scheme_rows : per_scheme) rows.push_back(scheme_rows[v]);

    if (out_path == "-") {
      write_csv(std::cout, rows);
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 1;
      }
      write_csv(out, rows);
      if (!out.good()) {
        std::cerr << "error: short write to '" << out_path << "'\n";
        return 1;
      }
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

namespace {

struct SuiteRunner {
  int failures = 0;
  void check(const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  }
};

int run_verify() {
  SuiteRunner suite;
  auto rng = RngStream::derive(2024, 0, "verify");

  {  // structural constraints of every generator
    bool ok = true;
    try {
      for (int d : {1, 2, 5, 16}) {
        for (int rep = 0; rep < 25; ++rep) {
          for (auto arch :
               {Architecture::single, Architecture::group, Architecture::fully}) {
            const int dg = arch == Architecture::group ? (d % 2 == 0 ? 2 : 1) : 1;
            validate_reflection(random_reflection(arch, d, dg, rng));
            CMat g(d, 4);
            std::vector<CVec> gu;
            for (int u = 0; u < 2; ++u) {
              CVec v(d);
              for (int k = 0; k < d; ++k) v(k) = rng.next_cgauss();
              gu.push_back(v);
            }
            for (int j = 0; j < 4; ++j)
              for (int i = 0; i < d; ++i) g(i, j) = rng.next_cgauss();
            validate_reflection(aligned_attack(arch, g, gu, dg, {0.5, 0.5}));
          }
        }
      }
    } catch (const std::exception& e) {
      std::cerr << "  " << e.what() << '\n';
      ok = false;
    }
    suite.check("reflection constraints (random + aligned, all architectures)", ok);
  }

  {  // factorization and vectorization identities
    bool ok = true;
    for (int n : {2, 5, 16, 32}) {
      CMat a(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = rng.next_cgauss();
      CMat s = symmetrize(a);
      auto t = takagi(s);
      ok = ok && (s - t.takagi_vectors * t.takagi_values.asDiagonal() *
                          t.takagi_vectors.transpose())
                         .norm() < 1e-9 * s.norm();
      RMat dup = duplication_matrix(n);
      ok = ok && (vec(s) - dup.cast<Complex>() * vech(s)).norm() == 0.0;
    }
    suite.check("takagi reconstruction and vec = D vech identities", ok);
  }

  {  // relaxed attack optimum reaches the top singular value
    bool ok = true;
    for (int rep = 0; rep < 5; ++rep) {
      CMat g(16, 8);
      for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 16; ++i) g(i, j) = rng.next_cgauss();
      std::vector<CVec> gu;
      for (int u = 0; u < 3; ++u) {
        CVec v(16);
        for (int k = 0; k < 16; ++k) v(k) = rng.next_cgauss();
        gu.push_back(v);
      }
      CMat stack(3 * 8, 16 * 16);
      for (int u = 0; u < 3; ++u)
        stack.middleRows(u * 8, 8) =
            std::sqrt(1.0 / 3) * kron(g.transpose(), CMat(gu[u].adjoint()));
      CMat compressed = stack * duplication_matrix(16).cast<Complex>();
      auto [sigma, v] = dominant_singular_pair(compressed);
      ok = ok && std::abs((compressed * v).squaredNorm() - sigma * sigma) <
                     1e-9 * sigma * sigma;
    }
    suite.check("relaxed alignment attains the dominant singular value", ok);
  }

  {  // trial determinism and rate identities
    ExperimentSpec spec;
    spec.scenario.num_antennas = 8;
    spec.scenario.num_elements = 16;
    spec.scenario.group_size = 4;
    spec.trials = 8;
    spec.seed = 5;
    bool ok = true;
    for (auto attack : {AttackKind::none, AttackKind::random, AttackKind::aligned}) {
      spec.attack = attack;
      TrialResult a = run_trial(spec, 3);
      TrialResult b = run_trial(spec, 3);
      ok = ok && a.attacked.sum_rate == b.attacked.sum_rate;
      double total = a.attacked.common_rate;
      for (double r : a.attacked.private_rates) total += r;
      ok = ok && std::abs(a.attacked.sum_rate - total) < 1e-12;
      ok = ok && a.metrics.robustness_index >= 0.0 &&
           a.metrics.robustness_index <= 1.0;
    }
    spec.attack = AttackKind::none;
    ok = ok && run_trial(spec, 0).metrics.robustness_index == 1.0;
    suite.check("trial determinism, rate identity, index range", ok);
  }

  std::cout << (suite.failures == 0 ? "verify: all suites passed\n"
                                    : "verify: FAILURES present\n");
  return suite.failures == 0 ? 0 : 1;
}

int run_bench() {
  using Clock = std::chrono::steady_clock;
  auto rng = RngStream::derive(77, 0, "bench");
  const int m = 32, users = 3, reps = 5;
  bool trend_ok = true;

  std::cout << "attack generation wall time per architecture (best of " << reps
            << " runs, M=" << m << ", U=" << users << ")\n";
  std::cout << "   D      single        group        fully\n";
  for (int d : {50, 100, 200}) {
    CMat g(d, m);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < d; ++i) g(i, j) = rng.next_cgauss();
    std::vector<CVec> gu;
    for (int u = 0; u < users; ++u) {
      CVec v(d);
      for (int k = 0; k < d; ++k) v(k) = rng.next_cgauss();
      gu.push_back(v);
    }
    const std::vector<double> w(users, 1.0 / users);

    auto time_arch = [&](Architecture arch, int dg) {
      double best = 1e300;
      for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        aligned_attack(arch, g, gu, dg, w);
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
      }
      return best;
    };

    const double t_single = time_arch(Architecture::single, 1);
    const double t_group = time_arch(Architecture::group, 5);
    const double t_fully = time_arch(Architecture::fully, d);
    std::printf("%4d  %9.3f ms %9.3f ms %9.3f ms\n", d, 1e3 * t_single,
                1e3 * t_group, 1e3 * t_fully);
    if (t_group >= t_fully) trend_ok = false;
  }
  std::cout << (trend_ok ? "trend ok: group-connected generation is cheapest "
                           "and fully connected dominates\n"
                         : "trend VIOLATED: group-connected not faster than "
                           "fully connected\n");
  return trend_ok ? 0 : 1;
}

}  // namespace
