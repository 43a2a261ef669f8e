// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "chaobell/cli.hpp"
#include "chaobell/inequality.hpp"
#include "chaobell/montecarlo.hpp"
#include "chaobell/oracle.hpp"
#include "chaobell/photon_stats.hpp"
#include "chaobell/polarizer.hpp"
#include "chaobell/rng.hpp"
#include "support/reference.hpp"

using namespace chaobell;
namespace ref = chaobell::reference;

namespace {

constexpr std::uint64_t kTrials = 1'000'000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

template <class F>
void criterion(int id, const char* name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  [%2d] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !o.pass;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double deg(double d) { return d / 180.0 * ref::kPi; }

SimConfig config(CountMode mode, double delta) {
  SimConfig c;
  c.trials = kTrials;
  c.mean_intensity = 1.0;
  c.theta1 = delta;
  c.theta2 = 0.0;
  c.count_mode = mode;
  return c;
}

Outcome oracle_exactness() {
  // Closed forms typed in directly, cross-checked against the moment algebra
  // on the linear port forms.
  double worst = 0.0;
  int points = 0;
  for (double m : {0.1, 0.5, 1.0, 3.0}) {
    for (double d : {0.0, 0.3, deg(45), 1.1, deg(90)}) {
      ++points;
      const double m2 = m * m;
      const double c2 = std::cos(d) * std::cos(d);
      const double s2 = std::sin(d) * std::sin(d);
      const std::array<double, 6> closed{m2 + m2 * c2, m2 + m2 * c2, m2 + m2 * s2, m2 + m2 * s2, m2, m2};
      const double theta2 = 0.25;
      const auto algebra = ref::expected_products(m, theta2 + d, theta2);
      const OracleParams p{m, d};
      for (const auto kind : kAllPortPairKinds) {
        const double got = raw_product_mean(kind, p);
        worst = std::max({worst, std::fabs(got - closed[index_of(kind)]), std::fabs(got - algebra[index_of(kind)])});
      }
      worst = std::max(worst, std::fabs(bell_correlation_raw(p) + 2 * m2 * std::cos(2 * d)));
      worst = std::max(worst, std::fabs(normalization_sum(p) - 2 * m2));
      worst = std::max(worst, std::fabs(normalized_correlation(d) + std::cos(2 * d)));
      const double bell_from_algebra = algebra[2] + algebra[3] - algebra[1] - algebra[0];
      worst = std::max(worst, std::fabs(bell_correlation_raw(p) - bell_from_algebra));
    }
  }
  return {worst < 1e-12, std::to_string(points) + " grid points, max |diff| " + fmt("%.3g", worst)};
}

std::array<EstimateSet, 5> intensity_runs;
const std::array<double, 5> kDeltas{0.0, deg(22.5), deg(45), deg(67.5), deg(90)};

Outcome intensity_vs_oracle() {
  double worst = 0.0, worst_sigma = 0.0;
  bool pass = true;
  for (std::size_t i = 0; i < kDeltas.size(); ++i) {
    intensity_runs[i] = run_intensity_experiment(config(CountMode::intensity_only, kDeltas[i]));
    const auto& est = intensity_runs[i];
    for (const auto kind : kAllPortPairKinds) {
      const double dev = std::fabs(est.raw(kind) - raw_product_mean(kind, {1.0, kDeltas[i]}));
      const double sigmas = dev / est.raw_error(kind);
      worst = std::max(worst, dev);
      worst_sigma = std::max(worst_sigma, sigmas);
      pass = pass && dev < 0.02 && sigmas < 4.0;
    }
  }
  return {pass, "30 means, max |diff| " + fmt("%.4f", worst) + ", max " + fmt("%.2f", worst_sigma) + " se"};
}

Outcome count_equivalence() {
  double worst_sigma = 0.0, worst_same = 0.0;
  bool pass = true;
  for (std::size_t i = 0; i < kDeltas.size(); ++i) {
    const auto counts = run_count_experiment(config(CountMode::independent_poisson, kDeltas[i]));
    const auto& inten = intensity_runs[i];
    for (const auto kind : kCrossPortPairKinds) {
      const double se = std::hypot(counts.raw_error(kind), inten.raw_error(kind));
      const double sigmas = std::fabs(counts.raw(kind) - inten.raw(kind)) / se;
      worst_sigma = std::max(worst_sigma, sigmas);
      pass = pass && sigmas < 3.0;
    }
    for (const auto kind : {PortPairKind::same_side_1, PortPairKind::same_side_2}) {
      const double dev = std::fabs(counts.raw(kind) - 1.0);
      worst_same = std::max(worst_same, dev);
      pass = pass && dev < 0.03;
    }
  }
  return {pass, "cross max " + fmt("%.2f", worst_sigma) + " combined se, same-side max |diff| " +
                    fmt("%.4f", worst_same)};
}

Outcome correlation_sweep() {
  std::vector<double> deltas;
  for (int i = 0; i < 13; ++i) deltas.push_back(i * (ref::kPi / 2) / 12);
  const auto rows = sweep_angles(config(CountMode::independent_poisson, 0.0), deltas);
  double worst = 0.0;
  for (const auto& row : rows) {
    worst = std::max(worst, std::fabs(row.measured.estimate + std::cos(2 * row.delta)));
  }
  return {worst < 0.02, "13 points, independent_poisson, max |diff| " + fmt("%.4f", worst)};
}

Outcome chsh() {
  const auto est =
      chsh_experiment(config(CountMode::independent_poisson, 0.0), 0.0, deg(45), deg(22.5), deg(67.5));
  const double dev = std::fabs(est.s - 2.828427);
  const double sigmas = (est.s - 2.0) / est.std_error;
  return {dev < 0.03 && sigmas >= 20.0,
          "S " + fmt("%.5f", est.s) + " +/- " + fmt("%.5f", est.std_error) + ", S-2 = " + fmt("%.1f", sigmas) + " se"};
}

Outcome bose_einstein() {
  bool pass = true;
  std::string detail;
  for (double m : {0.5, 1.0, 2.0}) {
    const auto check = check_count_marginal(m, kTrials, kDefaultSeed);
    const double sigmas = std::fabs(check.sample_mean - m) / check.mean_std_error;
    pass = pass && check.total_variation < 0.005 && sigmas < 3.0;
    detail += (detail.empty() ? "" : "; ") + fmt("mean %g: ", m) + "TV " + fmt("%.5f", check.total_variation) +
              ", mean off " + fmt("%.2f", sigmas) + " se";
  }
  return {pass, detail};
}

Outcome split_product() {
  bool pass = true;
  double worst_sigma = 0.0;
  double low_total_sum = 0.0;
  std::uint64_t stream = 0;
  for (double nbar : {0.1, 1.0, 2.0, 5.0}) {
    for (double p : {0.1, 0.5, 0.9}) {
      std::vector<double> products(kTrials);
      for (std::uint64_t i = 0; i < kTrials; ++i) {
        RandomStream rng(derived_seed(kDefaultSeed, stream), i);
        const auto split = binomial_split(sample_poisson(nbar, rng), p, rng);
        products[i] = static_cast<double>(split.n_transmit() * split.n_reflect());
        if (split.total() <= 1) low_total_sum += products[i];
      }
      ++stream;
      const auto s = ref::summarize(products);
      const double expected = p * (1 - p) * nbar * nbar;
      const double sigmas = std::fabs(s.mean - expected) / s.std_error;
      worst_sigma = std::max(worst_sigma, sigmas);
      pass = pass && sigmas < 3.0 && std::fabs(split_product_mean_poisson(nbar, p) - expected) < 1e-12;
    }
  }
  pass = pass && low_total_sum == 0.0;
  return {pass, "12 cases, max " + fmt("%.2f", worst_sigma) + " se, total<=1 contribution " + fmt("%g", low_total_sum)};
}

SignSequence random_sequence(RandomStream& rng, std::size_t n) {
  std::vector<int> v(n);
  for (auto& x : v) x = (rng() >> 63) ? 1 : -1;
  return SignSequence(std::move(v));
}

Outcome inequalities() {
  int violations = 0;
  RandomStream rng(kDefaultSeed, 0);
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto a = random_sequence(rng, 1000);
    const auto b = random_sequence(rng, 1000);
    const auto c = random_sequence(rng, 1000);
    violations += !bell_three_check(a, b, c).satisfied;
    const auto d = random_sequence(rng, 1000);
    const auto e = random_sequence(rng, 1000);
    const auto f = random_sequence(rng, 1000);
    const auto g = random_sequence(rng, 1000);
    violations += !chsh_four_check(d, e, f, g).satisfied;
  }
  // Per-item patterns as length-1 data sets.
  int patterns = 0;
  int pattern_failures = 0;
  for (int bits = 0; bits < 16; ++bits) {
    auto s = [&](int k) { return SignSequence({(bits >> k) & 1 ? 1 : -1}); };
    if (bits < 8) {
      ++patterns;
      const auto r = bell_three_check(s(0), s(1), s(2));
      const int a = (bits & 1) ? 1 : -1, b = (bits & 2) ? 1 : -1, c = (bits & 4) ? 1 : -1;
      pattern_failures += !(r.satisfied && r.margin == Rational(0) && std::abs(a * b - a * c) == 1 - b * c);
    }
    ++patterns;
    const auto r = chsh_four_check(s(0), s(1), s(2), s(3));
    pattern_failures += !(r.satisfied && r.lhs == Rational(2));
  }
  return {violations == 0 && pattern_failures == 0,
          "10000 triples + 10000 quadruples, " + std::to_string(violations) + " violations; " +
              std::to_string(patterns) + " patterns, " + std::to_string(pattern_failures) + " failures"};
}

std::string run_cli(std::vector<std::string> args, unsigned lanes) {
  args.insert(args.end(), {"--threads", std::to_string(lanes)});
  std::ostringstream out, err;
  if (cli::run(args, out, err) != cli::kExitOk) throw std::runtime_error("cli failed: " + err.str());
  return out.str();
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"sweep", "--trials", "200000", "--deltas", "0:90:7", "--mode", "intensity"},
      {"sweep", "--trials", "200000", "--deltas", "0:90:7", "--mode", "poisson", "--format", "json"},
      {"sweep", "--trials", "200000", "--deltas", "0:90:7", "--mode", "matched"},
      {"sweep", "--trials", "200000", "--deltas", "0:90:7", "--mode", "poisson", "--postselect"},
      {"sweep", "--trials", "200000", "--deltas", "0:90:7", "--mode", "matched", "--postselect"},
      {"chsh", "--trials", "200000", "--format", "json"},
  };
  int mismatches = 0;
  for (const auto& cmd : commands) {
    const auto one = run_cli(cmd, 1);
    mismatches += run_cli(cmd, 2) != one;
    mismatches += run_cli(cmd, 8) != one;
  }
  return {mismatches == 0, std::to_string(commands.size()) + " commands at 1/2/8 lanes, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome noncommute() {
  const std::array<double, 2> forward{deg(45), deg(90)};
  const std::array<double, 2> backward{deg(90), deg(45)};
  const double a = sequential_polarizers(0.0, 1.0, forward);
  const double b = sequential_polarizers(0.0, 1.0, backward);
  return {a == 0.25 && b == 0.0, "[45,90] -> " + fmt("%.17g", a) + ", [90,45] -> " + fmt("%.17g", b)};
}

}  // namespace

int main() {
  criterion(1, "oracle exactness", oracle_exactness);
  criterion(2, "intensity Monte Carlo vs oracle", intensity_vs_oracle);
  criterion(3, "count-mode equivalence", count_equivalence);
  criterion(4, "correlation sweep", correlation_sweep);
  criterion(5, "CHSH", chsh);
  criterion(6, "Bose-Einstein marginal", bose_einstein);
  criterion(7, "split-product identity", split_product);
  criterion(8, "inequality identities", inequalities);
  criterion(9, "determinism across lanes", determinism);
  criterion(10, "non-commutativity demo", noncommute);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
