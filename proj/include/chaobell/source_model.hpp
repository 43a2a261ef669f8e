#pragma once

#include "chaobell/rng.hpp"

namespace chaobell {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Statistics of the chaotic source. H and V intensities share one mean,
/// expressed in counts per observation window.
struct SourceParams {
  double mean_intensity = 1.0;

  /// Throws ConfigError unless mean_intensity is finite and positive.
  void validate() const;
};

/// One realization of the source hidden variables.
///
/// Side 2 is fully determined by side 1: the H/V intensities swap across the
/// ring (i2v == i1h, i2h == i1v) and the side-2 relative phase is the side-1
/// relative phase shifted by pi.
struct SourceDraw {
  double i1h = 0.0;
  double i1v = 0.0;
  double phase1h = 0.0;  // [0, 2pi)
  double phase1v = 0.0;  // [0, 2pi)
  double i2h = 0.0;
  double i2v = 0.0;
  double phase_diff2 = 0.0;  // theta_2H - theta_2V, reduced to [0, 2pi)

  /// cos(phase1h - phase1v), the only phase quantity the intensities see.
  double cos_relative_phase() const;
};

/// Reduces an angle to [0, 2pi).
double wrap_phase(double radians);

/// Exponential variate by inverse CDF on one uniform from the stream.
double sample_exponential(double mean, RandomStream& rng);

/// Draws i1h, i1v ~ Exp(mean) and two uniform phases, then completes side 2.
/// Consumes exactly four uniforms, in the order i1h, i1v, phase1h, phase1v.
SourceDraw sample_draw(const SourceParams& params, RandomStream& rng);

/// Completes the side-2 fields from side-1 values. Throws std::domain_error on
/// a negative intensity.
SourceDraw apply_pair_constraints(double i1h, double i1v, double phase1h, double phase1v);

}  // namespace chaobell
