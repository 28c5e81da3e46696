// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "capflow/capflow.hpp"
#include "capflow/cli.hpp"

using namespace capflow;

namespace {

double rel_diff(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "capflow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + err.str()};
}

double plain_value(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string key, unit;
  double value = 0.0;
  while (in >> key >> value >> unit) {
    if (key == name) return value;
  }
  return std::nan("");
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

const Fluid kUnit(1.0);

// 1. Closed form vs quadrature oracle, 1000 random profiles per shape.
//    Also collects the Poiseuille-bracket check used by criterion 5.
bool g_bracket_strict = true;

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  ProfileSampler sampler(20240001);
  double worst = 0.0;
  std::size_t failures = 0;
  for (auto kind : kCorrugatedShapes) {
    for (int i = 0; i < 1000; ++i) {
      const auto p = sampler.corrugated(kind);
      const auto report = verify_analytic(p, 1e-9);
      worst = std::max(worst, report.relative_discrepancy);
      if (!report.converged || report.relative_discrepancy > 1e-9) ++failures;

      const double P = report.analytic_pressure_drop;
      if (!(poiseuille_pressure_drop(p.r_max(), p.length(), 1.0, kUnit) < P &&
            P < poiseuille_pressure_drop(p.r_min(), p.length(), 1.0, kUnit))) {
        g_bracket_strict = false;
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {failures == 0 && seconds < 30.0,
          fmt("5000 profiles, worst discrepancy %.3g (limit 1e-9), %.2f s (limit 30 s)", worst,
              seconds)};
}

// 2. r_min == r_max reproduces the straight-tube law.
Outcome degenerate_reduction() {
  ProfileSampler sampler(20240002);
  double worst = 0.0;
  for (auto kind : kCorrugatedShapes) {
    for (int i = 0; i < 100; ++i) {
      const auto p = sampler.degenerate(kind);
      worst = std::max(worst, rel_diff(pressure_drop(p, 1.0, kUnit),
                                       poiseuille_pressure_drop(p.r_min(), p.length(), 1.0, kUnit)));
    }
  }
  return {worst <= 1e-12, fmt("500 profiles, worst deviation %.3g (limit 1e-12)", worst)};
}

// 3. Relative gaps down to 1e-12 stay bracketed and agree with quadrature.
Outcome near_degenerate() {
  ProfileSampler sampler(20240003);
  double worst = 0.0;
  bool bracketed = true;
  for (auto kind : kCorrugatedShapes) {
    for (int base = 0; base < 4; ++base) {
      const double r_min = base == 0 ? 1e-3 : sampler.radius();
      const double length = base == 0 ? 0.1 : sampler.length();
      for (double gap : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
        const auto p = make_profile(kind, r_min, r_min * (1.0 + gap), length);
        const double P = pressure_drop(p, 1.0, kUnit);
        if (!(poiseuille_pressure_drop(p.r_max(), length, 1.0, kUnit) <= P &&
              P <= poiseuille_pressure_drop(p.r_min(), length, 1.0, kUnit))) {
          bracketed = false;
        }
        worst = std::max(worst, rel_diff(P, numeric_pressure_drop(p, 1.0, kUnit)));
      }
    }
  }
  return {bracketed && worst <= 1e-8,
          std::string(bracketed ? "bracketed" : "NOT bracketed") +
              fmt(", worst discrepancy %.3g (limit 1e-8)", worst)};
}

// 4. P(sR_min, sR_max, sL) = s⁻³ P; linear in Q and μ.
Outcome dimensional_scaling() {
  ProfileSampler sampler(20240004);
  double worst_scale = 0.0;
  double worst_linear = 0.0;
  for (auto kind : kCorrugatedShapes) {
    for (int i = 0; i < 100; ++i) {
      const auto p = sampler.corrugated(kind);
      const double P = pressure_drop(p, 1.0, kUnit);
      for (double s : {1e-3, 1.0, 1e3}) {
        const auto scaled = make_profile(kind, s * p.r_min(), s * p.r_max(), s * p.length());
        worst_scale = std::max(worst_scale, rel_diff(pressure_drop(scaled, 1.0, kUnit), P / (s * s * s)));
      }
      const double q = sampler.log_uniform(1e-12, 1e-3);
      const double mu = sampler.log_uniform(1e-5, 10.0);
      const double c = sampler.log_uniform(1e-6, 1e6);
      const double base = pressure_drop(p, q, Fluid(mu));
      worst_linear = std::max(worst_linear, rel_diff(pressure_drop(p, c * q, Fluid(mu)), c * base));
      worst_linear = std::max(worst_linear, rel_diff(pressure_drop(p, q, Fluid(c * mu)), c * base));
    }
  }
  return {worst_scale <= 1e-12 && worst_linear <= 1e-15,
          fmt("scaling %.3g (limit 1e-12), linearity %.3g (limit 1e-15)", worst_scale,
              worst_linear)};
}

// 5. Strict Poiseuille bracket (over criterion 1's trials) and monotonicity.
Outcome bounds_and_monotonicity() {
  ProfileSampler sampler(20240005);
  bool monotone = true;
  for (auto kind : kCorrugatedShapes) {
    const auto p = sampler.corrugated(kind);
    double previous = pressure_drop(p, 1.0, kUnit);
    for (int k = 1; k <= 10; ++k) {
      const double r_min = p.r_min() + (p.r_max() - p.r_min()) * k / 11.0;
      const double now = pressure_drop(make_profile(kind, r_min, p.r_max(), p.length()), 1.0, kUnit);
      monotone = monotone && now < previous;
      previous = now;
    }
    previous = pressure_drop(p, 1.0, kUnit);
    for (int k = 1; k <= 10; ++k) {
      const double r_max = p.r_max() * (1.0 + 0.1 * k);
      const double now = pressure_drop(make_profile(kind, p.r_min(), r_max, p.length()), 1.0, kUnit);
      monotone = monotone && now < previous;
      previous = now;
    }
  }
  return {g_bracket_strict && monotone,
          std::string("bracket ") + (g_bracket_strict ? "strict" : "VIOLATED") + ", monotone " +
              (monotone ? "yes" : "NO")};
}

// 6. Series splitting, parallel identity, and the five-tube network file.
Outcome network_algebra() {
  ProfileSampler sampler(20240006);
  double worst_split = 0.0;
  double worst_parallel = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double r = sampler.radius();
    const double L = sampler.length();
    const double whole = network_geometric_factor(NetworkElement::tube(RadiusProfile::straight(r, L)));
    for (std::size_t k : {2u, 10u, 1000u}) {
      std::vector<NetworkElement> parts(
          k, NetworkElement::tube(RadiusProfile::straight(r, L / static_cast<double>(k))));
      worst_split = std::max(
          worst_split, rel_diff(network_geometric_factor(NetworkElement::series(std::move(parts))), whole));
    }
    const auto leaf = NetworkElement::tube(sampler.corrugated(kCorrugatedShapes[i % 5]));
    const double single = network_geometric_factor(leaf);
    for (std::size_t n : {2u, 5u, 17u, 100u}) {
      std::vector<NetworkElement> copies(n, leaf);
      worst_parallel =
          std::max(worst_parallel,
                   rel_diff(network_geometric_factor(NetworkElement::parallel(std::move(copies))),
                            single / static_cast<double>(n)));
    }
  }
  const auto run = cli({"network", std::string(CAPFLOW_SAMPLES_DIR) + "/five_tubes_series.json",
                        "--viscosity", "1e-3", "--flow", "1e-9"});
  const double resistance = plain_value(run.out, "resistance");
  const double file_dev = rel_diff(resistance, 5.1817e8);
  return {worst_split <= 1e-12 && worst_parallel <= 1e-14 && run.code == 0 && file_dev <= 1e-4,
          fmt("split %.3g (limit 1e-12), parallel %.3g (limit 1e-14), ", worst_split,
              worst_parallel) +
              fmt("file resistance %.6g Pa s/m3, deviation %.3g (limit 1e-4)", resistance, file_dev)};
}

// 7. pdrop -> qflow round trip through the CLI, and the verify sweep.
Outcome cli_round_trip() {
  double worst = 0.0;
  bool ok = true;
  const std::string q = "1e-9";
  for (auto kind : kCorrugatedShapes) {
    const std::vector<std::string> tube{"--shape", std::string(to_token(kind)), "--rmin", "1e-3",
                                        "--rmax", "2e-3", "--length", "0.1", "--viscosity", "1e-3"};
    auto args = tube;
    args.insert(args.begin(), "pdrop");
    args.insert(args.end(), {"--flow", q});
    const auto p = cli(args);
    char pressure[40];
    std::snprintf(pressure, sizeof pressure, "%.17g", plain_value(p.out, "pressure_drop"));
    args = tube;
    args.insert(args.begin(), "qflow");
    args.insert(args.end(), {"--pressure", pressure});
    const auto back = cli(args);
    ok = ok && p.code == 0 && back.code == 0;
    worst = std::max(worst, rel_diff(plain_value(back.out, "flow_rate"), 1e-9));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto verify = cli({"verify", "--shapes", "all", "--trials", "100", "--tol", "1e-9", "--seed", "42"});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {ok && worst <= 1e-12 && verify.code == 0 && seconds < 10.0,
          fmt("round trip %.3g (limit 1e-12), ", worst) +
              fmt("verify exit %g in %.2f s (limit 10 s)", verify.code, seconds)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 oracle equivalence", oracle_equivalence},
      {"2 degenerate reduction", degenerate_reduction},
      {"3 near-degenerate stability", near_degenerate},
      {"4 dimensional scaling and linearity", dimensional_scaling},
      {"5 bounds and monotonicity", bounds_and_monotonicity},
      {"6 network algebra", network_algebra},
      {"7 CLI round trip and verify", cli_round_trip},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const Outcome outcome = check();
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str());
    if (!outcome.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
