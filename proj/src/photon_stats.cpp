#include "chaobell/photon_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chaobell/source_model.hpp"

namespace chaobell {
namespace {

constexpr std::uint64_t kDirectPmfLimit = 20;
constexpr double kInversionLimit = 10.0;

double factorial(std::uint64_t n) {
  double f = 1.0;
  for (std::uint64_t k = 2; k <= n; ++k) {
    f *= static_cast<double>(k);
  }
  return f;
}

std::uint64_t poisson_by_inversion(double mean, RandomStream& rng) {
  const double u = rng.uniform();
  double term = std::exp(-mean);
  double cdf = term;
  std::uint64_t k = 0;
  while (u >= cdf) {
    ++k;
    term *= mean / static_cast<double>(k);
    if (term == 0.0) {
      break;  // u fell into the rounding gap at the top of the CDF
    }
    cdf += term;
  }
  return k;
}

// W. Hoermann, "The transformed rejection method for generating Poisson
// random variables", Insurance: Mathematics and Economics 12 (1993).
std::uint64_t poisson_ptrs(double mean, RandomStream& rng) {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) {
      return static_cast<std::uint64_t>(k);
    }
    if (k < 0.0 || (us < 0.013 && v > us)) {
      continue;
    }
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

}  // namespace

double poisson_pmf(std::uint64_t n, double mean) {
  if (!(mean >= 0.0)) {
    throw std::domain_error("poisson_pmf: mean must be >= 0");
  }
  if (mean == 0.0) {
    return n == 0 ? 1.0 : 0.0;
  }
  if (n <= kDirectPmfLimit) {
    return std::exp(-mean) * std::pow(mean, static_cast<double>(n)) / factorial(n);
  }
  const double nd = static_cast<double>(n);
  return std::exp(-mean + nd * std::log(mean) - std::lgamma(nd + 1.0));
}

std::uint64_t sample_poisson(double mean, RandomStream& rng) {
  if (mean <= 0.0) {
    return 0;
  }
  if (mean < kInversionLimit) {
    return poisson_by_inversion(mean, rng);
  }
  return poisson_ptrs(mean, rng);
}

CountPair binomial_split(std::uint64_t n_total, double p_transmit, RandomStream& rng) {
  if (!(p_transmit >= 0.0 && p_transmit <= 1.0)) {
    throw std::domain_error("binomial_split: p_transmit must lie in [0, 1]");
  }
  std::uint64_t transmitted = 0;
  for (std::uint64_t i = 0; i < n_total; ++i) {
    if (rng.uniform() < p_transmit) {
      ++transmitted;
    }
  }
  return {transmitted, n_total - transmitted};
}

double split_product_mean_conditional(std::uint64_t n_total, double p_transmit) {
  const double n = static_cast<double>(n_total);
  return p_transmit * (1.0 - p_transmit) * (n * n - n);
}

double split_product_mean_poisson(double mean_total, double p_transmit) {
  return p_transmit * (1.0 - p_transmit) * mean_total * mean_total;
}

double bose_einstein_pmf(std::uint64_t n, double mean_intensity) {
  if (!(mean_intensity > 0.0)) {
    throw std::domain_error("bose_einstein_pmf: mean intensity must be > 0");
  }
  const double nd = static_cast<double>(n);
  if (n <= kDirectPmfLimit) {
    return std::pow(mean_intensity, nd) / std::pow(mean_intensity + 1.0, nd + 1.0);
  }
  return std::exp(nd * std::log(mean_intensity) - (nd + 1.0) * std::log1p(mean_intensity));
}

std::uint64_t sample_count_marginal(double mean_intensity, RandomStream& rng) {
  return sample_poisson(sample_exponential(mean_intensity, rng), rng);
}

double transmit_probability(double port_intensity, double total_intensity) {
  if (total_intensity <= 0.0) {
    return 0.0;
  }
  return std::clamp(port_intensity / total_intensity, 0.0, 1.0);
}

CountLawCheck check_count_marginal(double mean_intensity, std::uint64_t samples, std::uint64_t seed) {
  if (!(mean_intensity > 0.0) || samples == 0) {
    throw std::domain_error("check_count_marginal: need mean > 0 and samples > 0");
  }
  std::vector<std::uint64_t> histogram;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    RandomStream rng(seed, i);
    const std::uint64_t n = sample_count_marginal(mean_intensity, rng);
    if (n >= histogram.size()) {
      histogram.resize(n + 1, 0);
    }
    ++histogram[n];
    const double nd = static_cast<double>(n);
    sum += nd;
    sum_sq += nd * nd;
  }

  // P(N > n) = ratio^(n + 1) for the geometric law.
  const double ratio = mean_intensity / (mean_intensity + 1.0);
  std::uint64_t truncation = 0;
  while (std::pow(ratio, static_cast<double>(truncation + 1)) >= 1e-9) {
    ++truncation;
  }
  const std::uint64_t last = std::max<std::uint64_t>(truncation, histogram.size() - 1);

  CountLawCheck check;
  check.samples = samples;
  const double total = static_cast<double>(samples);
  double abs_diff = 0.0;
  for (std::uint64_t n = 0; n <= last; ++n) {
    const std::uint64_t observed = n < histogram.size() ? histogram[n] : 0;
    CountLawRow row{n, observed, static_cast<double>(observed) / total,
                    bose_einstein_pmf(n, mean_intensity)};
    abs_diff += std::fabs(row.empirical - row.analytic);
    check.rows.push_back(row);
  }
  abs_diff += std::pow(ratio, static_cast<double>(last + 1));
  check.total_variation = 0.5 * abs_diff;
  check.sample_mean = sum / total;
  const double var = samples > 1 ? (sum_sq - sum * sum / total) / (total - 1.0) : 0.0;
  check.mean_std_error = std::sqrt(std::max(0.0, var) / total);
  return check;
}

}  // namespace chaobell
