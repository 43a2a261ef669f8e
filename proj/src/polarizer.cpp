#include "chaobell/polarizer.hpp"

#include <cassert>
#include <cmath>

namespace chaobell {
namespace {

struct PortPair {
  double n;
  double p;
};

double clamp_residue(double value, double scale) {
  if (value >= 0.0) {
    return value;
  }
  assert(value > -1e-12 * (1.0 + scale));
  (void)scale;
  return 0.0;
}

// ih, iv: input H/V intensities; cross: sqrt(ih*iv) * cos(phase_h - phase_v).
PortPair project(double ih, double iv, double cross, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cc = c * c;
  const double ss = s * s;
  const double sin2 = std::sin(2.0 * theta);
  const double n = ih * cc + iv * ss + cross * sin2;
  const double p = ih * ss + iv * cc - cross * sin2;
  const double total = ih + iv;
  return {clamp_residue(n, total), clamp_residue(p, total)};
}

}  // namespace

PortAmplitudes amplitudes_at_ports(const SourceDraw& draw, const AnalyzerSettings& settings) {
  const auto u1h = std::polar(std::sqrt(draw.i1h), draw.phase1h);
  const auto u1v = std::polar(std::sqrt(draw.i1v), draw.phase1v);
  const auto u2h = std::polar(std::sqrt(draw.i2h), draw.phase_diff2);
  const auto u2v = std::complex<double>(std::sqrt(draw.i2v), 0.0);

  const double c1 = std::cos(settings.theta1);
  const double s1 = std::sin(settings.theta1);
  const double c2 = std::cos(settings.theta2);
  const double s2 = std::sin(settings.theta2);
  return {u1h * c1 + u1v * s1, -u1h * s1 + u1v * c1, u2h * c2 + u2v * s2, -u2h * s2 + u2v * c2};
}

PortIntensities port_intensities(const SourceDraw& draw, const AnalyzerSettings& settings) {
  const double cross1 = std::sqrt(draw.i1h * draw.i1v) * draw.cos_relative_phase();
  const auto side1 = project(draw.i1h, draw.i1v, cross1, settings.theta1);
  // i2h = i1v, i2v = i1h, cos(phase_diff2) = -cos(phase1h - phase1v).
  const auto side2 = project(draw.i2h, draw.i2v, -cross1, settings.theta2);
  return {side1.n, side1.p, side2.n, side2.p};
}

double sequential_polarizers(double input_polarization_angle, double input_intensity,
                             std::span<const double> analyzer_angles) {
  double intensity = input_intensity;
  double polarization = input_polarization_angle;
  for (const double axis : analyzer_angles) {
    // cos^2 via the double angle so that 45 and 90 degree steps come out exact.
    intensity *= 0.5 * (1.0 + std::cos(2.0 * (axis - polarization)));
    polarization = axis;
  }
  return intensity;
}

}  // namespace chaobell
