#include "chaobell/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "chaobell/errors.hpp"
#include "chaobell/moments.hpp"
#include "chaobell/photon_stats.hpp"
#include "chaobell/polarizer.hpp"
#include "chaobell/rng.hpp"
#include "chaobell/source_model.hpp"

namespace chaobell {
namespace {

// Fixed partition of the trial range. Blocks are reduced in index order, so
// the lane count only changes who computes a block, never the arithmetic.
constexpr std::uint64_t kBlockSize = 1u << 14;

using Products = MomentAccumulator<6>;

template <class Acc, class BlockFn>
Acc run_blocks(std::uint64_t trials, unsigned lanes, BlockFn&& block_fn) {
  const std::uint64_t n_blocks = (trials + kBlockSize - 1) / kBlockSize;
  std::vector<Acc> partial(n_blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= n_blocks) {
        return;
      }
      partial[b] = block_fn(b * kBlockSize, std::min(trials, (b + 1) * kBlockSize));
    }
  };
  const auto n_lanes = static_cast<unsigned>(
      std::clamp<std::uint64_t>(lanes == 0 ? 1 : lanes, 1, std::max<std::uint64_t>(n_blocks, 1)));
  if (n_lanes == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_lanes);
    for (unsigned i = 0; i < n_lanes; ++i) {
      pool.emplace_back(worker);
    }
  }
  Acc total;
  for (const auto& p : partial) {
    total.merge(p);
  }
  return total;
}

Products::Vector products_of(double i1n, double i1p, double i2n, double i2p) {
  // Indexed by PortPairKind.
  return {i1n * i2p, i1p * i2n, i1n * i2n, i1p * i2p, i1n * i1p, i2n * i2p};
}

struct TrialSample {
  PortIntensities ports;
  TrialCounts counts;
};

TrialSample simulate_trial(const SimConfig& config, std::uint64_t trial, bool with_counts) {
  RandomStream rng(config.seed, trial);
  const SourceDraw draw = sample_draw(SourceParams{config.mean_intensity}, rng);
  TrialSample out;
  out.ports = port_intensities(draw, AnalyzerSettings{config.theta1, config.theta2});
  if (!with_counts) {
    return out;
  }
  const double total1 = draw.i1h + draw.i1v;
  const double total2 = draw.i2h + draw.i2v;
  const std::uint64_t n1 = sample_poisson(total1, rng);
  out.counts.side1 = binomial_split(n1, transmit_probability(out.ports.i1n, total1), rng);
  const std::uint64_t n2 =
      config.count_mode == CountMode::matched_pairs ? n1 : sample_poisson(total2, rng);
  out.counts.side2 = binomial_split(n2, transmit_probability(out.ports.i2n, total2), rng);
  return out;
}

EstimateSet summarize(const Products& acc) {
  EstimateSet est;
  const std::uint64_t n = acc.count();
  est.trials_used = n;
  const double nd = static_cast<double>(n);
  auto std_error_of = [&](const Products::Vector& w) { return std::sqrt(acc.variance_of(w) / nd); };
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      est.mean_covariance[i][j] = acc.covariance(i, j) / nd;
    }
  }

  for (const auto kind : kAllPortPairKinds) {
    Products::Vector w{};
    w[index_of(kind)] = 1.0;
    est.raw_mean[index_of(kind)] = acc.mean()[index_of(kind)];
    est.std_error[index_of(kind)] = std_error_of(w);
  }

  const std::size_t s1 = index_of(PortPairKind::same_side_1);
  const std::size_t s2 = index_of(PortPairKind::same_side_2);
  Products::Vector offset_w{};
  offset_w[s1] = 0.5;
  offset_w[s2] = 0.5;
  est.offset_estimate = acc.mean_of(offset_w);
  est.offset_std_error = std_error_of(offset_w);

  for (const auto kind : kCrossPortPairKinds) {
    Products::Vector w = offset_w;
    for (auto& x : w) {
      x = -x;
    }
    w[index_of(kind)] = 1.0;
    est.corrected_mean[index_of(kind)] = acc.mean_of(w);
    est.corrected_std_error[index_of(kind)] = std_error_of(w);
  }

  // Ratio of two per-trial linear combinations; delta-method error.
  const Products::Vector numerator_w{-1.0, -1.0, 1.0, 1.0, 0.0, 0.0};
  const Products::Vector denominator_w{1.0, 1.0, 1.0, 1.0, -2.0, -2.0};
  const double num = acc.mean_of(numerator_w);
  const double den = acc.mean_of(denominator_w);
  if (den != 0.0) {
    const double ratio = num / den;
    Products::Vector residual_w;
    for (std::size_t i = 0; i < 6; ++i) {
      residual_w[i] = numerator_w[i] - ratio * denominator_w[i];
    }
    est.normalized_correlation_estimate = ratio;
    est.normalized_correlation_std_error = std_error_of(residual_w) / std::fabs(den);
  } else {
    est.normalized_correlation_estimate = 0.0;
    est.normalized_correlation_std_error = INFINITY;
  }
  return est;
}

struct TallyAcc {
  PostselectedTally tally;
  void merge(const TallyAcc& o) {
    tally.n1n_2n += o.tally.n1n_2n;
    tally.n1n_2p += o.tally.n1n_2p;
    tally.n1p_2n += o.tally.n1p_2n;
    tally.n1p_2p += o.tally.n1p_2p;
    tally.trials_selected += o.tally.trials_selected;
    tally.trials_total += o.tally.trials_total;
  }
};

void require_counting(const SimConfig& config) {
  if (config.count_mode == CountMode::intensity_only) {
    throw ConfigError("count experiment requires independent_poisson or matched_pairs mode");
  }
}

}  // namespace

std::string_view to_string(CountMode mode) {
  switch (mode) {
    case CountMode::intensity_only: return "intensity_only";
    case CountMode::independent_poisson: return "independent_poisson";
    case CountMode::matched_pairs: return "matched_pairs";
  }
  return "unknown";
}

void SimConfig::validate() const {
  if (trials == 0) {
    throw ConfigError("trials must be >= 1");
  }
  if (!std::isfinite(mean_intensity) || mean_intensity <= 0.0) {
    throw ConfigError("mean_intensity must be finite and > 0");
  }
  if (!std::isfinite(theta1) || !std::isfinite(theta2)) {
    throw ConfigError("analyzer angles must be finite");
  }
}

double EstimateSet::std_error_of(const std::array<double, 6>& weights) const {
  double v = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      v += weights[i] * weights[j] * mean_covariance[i][j];
    }
  }
  return std::sqrt(std::max(0.0, v));
}

double EstimateSet::corrected(PortPairKind kind) const {
  if (!is_cross(kind)) {
    throw std::invalid_argument("corrected means exist for cross kinds only");
  }
  return corrected_mean[index_of(kind)];
}

double EstimateSet::corrected_error(PortPairKind kind) const {
  if (!is_cross(kind)) {
    throw std::invalid_argument("corrected means exist for cross kinds only");
  }
  return corrected_std_error[index_of(kind)];
}

double PostselectedTally::correlation() const {
  if (trials_selected == 0) {
    return 0.0;
  }
  const double agree = static_cast<double>(n1n_2n + n1p_2p);
  const double disagree = static_cast<double>(n1n_2p + n1p_2n);
  return (agree - disagree) / static_cast<double>(trials_selected);
}

double PostselectedTally::correlation_std_error() const {
  if (trials_selected == 0) {
    return INFINITY;
  }
  const double r = correlation();
  return std::sqrt(std::max(0.0, 1.0 - r * r) / static_cast<double>(trials_selected));
}

EstimateSet run_intensity_experiment(const SimConfig& config, unsigned lanes) {
  config.validate();
  if (config.count_mode != CountMode::intensity_only) {
    throw ConfigError("intensity experiment requires intensity_only mode");
  }
  const auto acc = run_blocks<Products>(config.trials, lanes, [&](std::uint64_t begin, std::uint64_t end) {
    Products block;
    for (std::uint64_t t = begin; t < end; ++t) {
      const auto p = simulate_trial(config, t, false).ports;
      block.add(products_of(p.i1n, p.i1p, p.i2n, p.i2p));
    }
    return block;
  });
  return summarize(acc);
}

EstimateSet run_count_experiment(const SimConfig& config, unsigned lanes) {
  config.validate();
  require_counting(config);
  const auto acc = run_blocks<Products>(config.trials, lanes, [&](std::uint64_t begin, std::uint64_t end) {
    Products block;
    for (std::uint64_t t = begin; t < end; ++t) {
      const auto c = simulate_trial(config, t, true).counts;
      block.add(products_of(static_cast<double>(c.side1.n_transmit()),
                            static_cast<double>(c.side1.n_reflect()),
                            static_cast<double>(c.side2.n_transmit()),
                            static_cast<double>(c.side2.n_reflect())));
    }
    return block;
  });
  return summarize(acc);
}

PostselectedTally run_postselected_experiment(const SimConfig& config, unsigned lanes) {
  config.validate();
  require_counting(config);
  if (!config.postselect_single_pairs) {
    throw ConfigError("post-selected experiment requires postselect_single_pairs");
  }
  const auto acc = run_blocks<TallyAcc>(config.trials, lanes, [&](std::uint64_t begin, std::uint64_t end) {
    TallyAcc block;
    auto& t = block.tally;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      ++t.trials_total;
      const auto c = simulate_trial(config, trial, true).counts;
      if (c.n_total_1() != 1 || c.n_total_2() != 1) {
        continue;
      }
      ++t.trials_selected;
      const bool first_n = c.side1.n_transmit() == 1;
      const bool second_n = c.side2.n_transmit() == 1;
      if (first_n && second_n) {
        ++t.n1n_2n;
      } else if (first_n) {
        ++t.n1n_2p;
      } else if (second_n) {
        ++t.n1p_2n;
      } else {
        ++t.n1p_2p;
      }
    }
    return block;
  });
  return acc.tally;
}

CorrelationPoint measure_correlation(const SimConfig& config, unsigned lanes) {
  CorrelationPoint point;
  if (config.postselect_single_pairs) {
    const auto tally = run_postselected_experiment(config, lanes);
    point.estimate = tally.correlation();
    point.std_error = tally.correlation_std_error();
    point.tally = tally;
    return point;
  }
  const auto est = config.count_mode == CountMode::intensity_only
                       ? run_intensity_experiment(config, lanes)
                       : run_count_experiment(config, lanes);
  point.estimate = est.normalized_correlation_estimate;
  point.std_error = est.normalized_correlation_std_error;
  point.estimates = est;
  return point;
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) { return seed ^ mix64(index); }

std::vector<SweepRow> sweep_angles(const SimConfig& config, std::span<const double> deltas,
                                   unsigned lanes) {
  if (deltas.empty()) {
    throw UsageError("sweep needs at least one angle difference");
  }
  std::vector<SweepRow> rows;
  rows.reserve(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    SimConfig point = config;
    point.theta1 = config.theta2 + deltas[i];
    point.seed = derived_seed(config.seed, i);
    rows.push_back({deltas[i], measure_correlation(point, lanes), normalized_correlation(deltas[i])});
  }
  return rows;
}

ChshEstimate chsh_experiment(const SimConfig& config, double a, double a_prime, double b,
                             double b_prime, unsigned lanes) {
  const std::array<std::pair<double, double>, 4> settings{
      {{a, b}, {a, b_prime}, {a_prime, b}, {a_prime, b_prime}}};
  ChshEstimate out;
  double variance = 0.0;
  for (std::size_t i = 0; i < settings.size(); ++i) {
    SimConfig point = config;
    point.theta1 = settings[i].first;
    point.theta2 = settings[i].second;
    point.seed = derived_seed(config.seed, i);
    out.points[i] = measure_correlation(point, lanes);
    out.deltas[i] = settings[i].first - settings[i].second;
    variance += out.points[i].std_error * out.points[i].std_error;
  }
  out.s = chsh_combine(out.points[0].estimate, out.points[1].estimate, out.points[2].estimate,
                       out.points[3].estimate);
  out.std_error = std::sqrt(variance);
  return out;
}

}  // namespace chaobell
