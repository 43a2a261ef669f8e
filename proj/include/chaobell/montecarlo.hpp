#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chaobell/oracle.hpp"

namespace chaobell {

/// How photon counts are generated from the port intensities.
enum class CountMode {
  intensity_only,       // no counts; average the intensity products directly
  independent_poisson,  // each side draws its own Poisson total from its intensity
  matched_pairs,        // side 2 reuses the side-1 total
};

std::string_view to_string(CountMode mode);

inline constexpr std::uint64_t kDefaultSeed = 20090701;

struct SimConfig {
  std::uint64_t trials = 1'000'000;
  double mean_intensity = 1.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::uint64_t seed = kDefaultSeed;
  CountMode count_mode = CountMode::independent_poisson;
  bool postselect_single_pairs = false;

  /// Throws ConfigError on trials == 0, a non-positive or non-finite mean
  /// intensity, or non-finite angles.
  void validate() const;
};

/// Per-kind product moments of one run, raw and offset-corrected.
struct EstimateSet {
  std::array<double, 6> raw_mean{};
  std::array<double, 6> std_error{};
  double offset_estimate = 0.0;  // mean of the two same-side product means
  double offset_std_error = 0.0;
  std::array<double, 4> corrected_mean{};  // cross kinds only, offset_estimate removed
  std::array<double, 4> corrected_std_error{};
  double normalized_correlation_estimate = 0.0;
  double normalized_correlation_std_error = 0.0;
  std::uint64_t trials_used = 0;
  /// Covariance of the six raw means (sample covariance / trials).
  std::array<std::array<double, 6>, 6> mean_covariance{};

  /// Standard error of sum_k weights[k] * raw_mean[k].
  double std_error_of(const std::array<double, 6>& weights) const;

  double raw(PortPairKind kind) const { return raw_mean[index_of(kind)]; }
  double raw_error(PortPairKind kind) const { return std_error[index_of(kind)]; }
  /// Requires a cross kind.
  double corrected(PortPairKind kind) const;
  double corrected_error(PortPairKind kind) const;

  friend bool operator==(const EstimateSet&, const EstimateSet&) = default;
};

/// Joint port outcomes of the windows with exactly one photon on each side.
struct PostselectedTally {
  std::uint64_t n1n_2n = 0;
  std::uint64_t n1n_2p = 0;
  std::uint64_t n1p_2n = 0;
  std::uint64_t n1p_2p = 0;
  std::uint64_t trials_selected = 0;
  std::uint64_t trials_total = 0;

  /// (nn + pp - np - pn) / selected; 0 when nothing was selected.
  double correlation() const;
  /// Standard error of correlation() treating selected windows as i.i.d.
  double correlation_std_error() const;

  friend bool operator==(const PostselectedTally&, const PostselectedTally&) = default;
};

/// Intensity products averaged over source draws. Requires intensity_only.
EstimateSet run_intensity_experiment(const SimConfig& config, unsigned lanes = 1);

/// Count products: Poisson totals routed binomially at each analyzer.
/// Requires independent_poisson or matched_pairs.
EstimateSet run_count_experiment(const SimConfig& config, unsigned lanes = 1);

/// Requires postselect_single_pairs and a counting mode.
PostselectedTally run_postselected_experiment(const SimConfig& config, unsigned lanes = 1);

/// A normalized-correlation measurement at one setting pair, dispatched on
/// the config: post-selected tally, count products or intensity products.
struct CorrelationPoint {
  double estimate = 0.0;
  double std_error = 0.0;
  std::optional<EstimateSet> estimates;
  std::optional<PostselectedTally> tally;

  friend bool operator==(const CorrelationPoint&, const CorrelationPoint&) = default;
};

CorrelationPoint measure_correlation(const SimConfig& config, unsigned lanes = 1);

struct SweepRow {
  double delta = 0.0;
  CorrelationPoint measured;
  double oracle = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Seed for sweep point / CHSH setting `index`: seed XOR mix64(index).
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index);

/// One run per delta with theta2 held at config.theta2 and
/// theta1 = theta2 + delta. Throws UsageError on an empty list.
std::vector<SweepRow> sweep_angles(const SimConfig& config, std::span<const double> deltas,
                                   unsigned lanes = 1);

struct ChshEstimate {
  double s = 0.0;
  double std_error = 0.0;
  /// Settings in the order (a,b), (a,b'), (a',b), (a',b').
  std::array<CorrelationPoint, 4> points{};
  std::array<double, 4> deltas{};
};

/// Four independent runs (derived seeds 0..3) combined with chsh_combine.
ChshEstimate chsh_experiment(const SimConfig& config, double a, double a_prime, double b,
                             double b_prime, unsigned lanes = 1);

}  // namespace chaobell
