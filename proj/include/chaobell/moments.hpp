#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace chaobell {

/// Running mean and co-moment matrix of a fixed-width sample vector
/// (Welford update, Chan et al. merge). Merging in a fixed order gives
/// bit-identical results however the samples were partitioned into blocks
/// beforehand, as long as the blocks themselves are fixed.
template <std::size_t N>
class MomentAccumulator {
 public:
  using Vector = std::array<double, N>;
  using Matrix = std::array<std::array<double, N>, N>;

  void add(const Vector& x) {
    ++count_;
    const double n = static_cast<double>(count_);
    Vector delta;
    for (std::size_t i = 0; i < N; ++i) {
      delta[i] = x[i] - mean_[i];
      mean_[i] += delta[i] / n;
    }
    for (std::size_t i = 0; i < N; ++i) {
      const double post = x[i] - mean_[i];
      for (std::size_t j = 0; j < N; ++j) {
        comoment_[i][j] += post * delta[j];
      }
    }
  }

  void merge(const MomentAccumulator& other) {
    if (other.count_ == 0) {
      return;
    }
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double n = na + nb;
    Vector delta;
    for (std::size_t i = 0; i < N; ++i) {
      delta[i] = other.mean_[i] - mean_[i];
    }
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        comoment_[i][j] += other.comoment_[i][j] + delta[i] * delta[j] * na * nb / n;
      }
      mean_[i] += delta[i] * nb / n;
    }
    count_ += other.count_;
  }

  std::uint64_t count() const { return count_; }
  const Vector& mean() const { return mean_; }

  /// Unbiased sample covariance.
  double covariance(std::size_t i, std::size_t j) const {
    return count_ < 2 ? 0.0 : comoment_[i][j] / static_cast<double>(count_ - 1);
  }

  double mean_of(const Vector& weights) const {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      m += weights[i] * mean_[i];
    }
    return m;
  }

  /// Sample variance of the per-sample combination weights . x.
  double variance_of(const Vector& weights) const {
    double v = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        v += weights[i] * weights[j] * covariance(i, j);
      }
    }
    return v > 0.0 ? v : 0.0;
  }

 private:
  std::uint64_t count_ = 0;
  Vector mean_{};
  Matrix comoment_{};
};

}  // namespace chaobell
