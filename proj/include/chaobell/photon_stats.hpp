#pragma once

#include <cstdint>
#include <vector>

#include "chaobell/rng.hpp"

namespace chaobell {

/// Photon counts leaving one lossless analyzer; the two ports always sum to
/// the number of photons that entered.
class CountPair {
 public:
  CountPair() = default;
  CountPair(std::uint64_t n_transmit, std::uint64_t n_reflect)
      : n_transmit_(n_transmit), n_reflect_(n_reflect) {}

  std::uint64_t n_transmit() const { return n_transmit_; }
  std::uint64_t n_reflect() const { return n_reflect_; }
  std::uint64_t total() const { return n_transmit_ + n_reflect_; }

  friend bool operator==(const CountPair&, const CountPair&) = default;

 private:
  std::uint64_t n_transmit_ = 0;
  std::uint64_t n_reflect_ = 0;
};

/// Counts on both sides for one observation window.
struct TrialCounts {
  CountPair side1;
  CountPair side2;

  std::uint64_t n_total_1() const { return side1.total(); }
  std::uint64_t n_total_2() const { return side2.total(); }
};

/// e^-mean mean^n / n!. Throws std::domain_error for a negative mean.
double poisson_pmf(std::uint64_t n, double mean);

/// Poisson variate. Sequential-search inversion for mean < 10; above that,
/// Hoermann's transformed rejection (PTRS). Both consume only uniforms from
/// the stream, so results are platform independent up to libm.
std::uint64_t sample_poisson(double mean, RandomStream& rng);

/// n_total independent Bernoulli(p_transmit) routings.
/// Throws std::domain_error when p_transmit is outside [0, 1].
CountPair binomial_split(std::uint64_t n_total, double p_transmit, RandomStream& rng);

/// E[n_transmit * n_reflect | n_total] = p (1 - p) (n_total^2 - n_total).
double split_product_mean_conditional(std::uint64_t n_total, double p_transmit);

/// Poisson average of the conditional split product: p (1 - p) mean_total^2.
double split_product_mean_poisson(double mean_total, double p_transmit);

/// Bose-Einstein (geometric) count law of an exponential-Poisson mixture:
/// mean^n / (mean + 1)^(n + 1). Throws std::domain_error unless mean > 0.
double bose_einstein_pmf(std::uint64_t n, double mean_intensity);

/// Two-stage draw: I ~ Exp(mean_intensity), then n ~ Poisson(I).
std::uint64_t sample_count_marginal(double mean_intensity, RandomStream& rng);

/// Port routing probability i_port / total with 0/0 -> 0.
double transmit_probability(double port_intensity, double total_intensity);

struct CountLawRow {
  std::uint64_t n = 0;
  std::uint64_t observed = 0;
  double empirical = 0.0;
  double analytic = 0.0;
};

/// Empirical count histogram of the two-stage draw against bose_einstein_pmf.
struct CountLawCheck {
  std::vector<CountLawRow> rows;  // n = 0 .. max(last observed n, truncation point)
  double total_variation = 0.0;   // includes the analytic tail beyond the last row
  double sample_mean = 0.0;
  double mean_std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Draws `samples` counts (sample i from stream (seed, i)) and tabulates
/// them. Rows extend at least to the first n whose analytic tail mass
/// P(N > n) drops below 1e-9. Throws std::domain_error unless mean > 0 and
/// samples > 0.
CountLawCheck check_count_marginal(double mean_intensity, std::uint64_t samples, std::uint64_t seed);

}  // namespace chaobell
