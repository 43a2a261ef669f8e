#include "chaobell/source_model.hpp"

#include <cmath>
#include <stdexcept>

#include "chaobell/errors.hpp"

namespace chaobell {

void SourceParams::validate() const {
  if (!std::isfinite(mean_intensity) || mean_intensity <= 0.0) {
    throw ConfigError("mean_intensity must be finite and > 0");
  }
}

double SourceDraw::cos_relative_phase() const { return std::cos(phase1h - phase1v); }

double wrap_phase(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  // fmod of a tiny negative value can round back up to exactly 2pi.
  return r >= kTwoPi ? 0.0 : r;
}

double sample_exponential(double mean, RandomStream& rng) {
  // 1 - u lies in (0, 1], so the log is finite.
  return -mean * std::log1p(-rng.uniform());
}

SourceDraw sample_draw(const SourceParams& params, RandomStream& rng) {
  const double i1h = sample_exponential(params.mean_intensity, rng);
  const double i1v = sample_exponential(params.mean_intensity, rng);
  const double phase1h = kTwoPi * rng.uniform();
  const double phase1v = kTwoPi * rng.uniform();
  return apply_pair_constraints(i1h, i1v, wrap_phase(phase1h), wrap_phase(phase1v));
}

SourceDraw apply_pair_constraints(double i1h, double i1v, double phase1h, double phase1v) {
  if (!(i1h >= 0.0) || !(i1v >= 0.0)) {
    throw std::domain_error("source intensities must be >= 0");
  }
  SourceDraw d;
  d.i1h = i1h;
  d.i1v = i1v;
  d.phase1h = phase1h;
  d.phase1v = phase1v;
  d.i2v = i1h;
  d.i2h = i1v;
  d.phase_diff2 = wrap_phase(phase1h - phase1v + kPi);
  return d;
}

}  // namespace chaobell
