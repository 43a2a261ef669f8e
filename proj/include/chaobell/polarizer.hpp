#pragma once

#include <complex>
#include <span>

#include "chaobell/source_model.hpp"

namespace chaobell {

/// Transmit-axis angles of the two polarization beam splitters, in radians
/// counter-clockwise from H. Only the value modulo pi is observable.
struct AnalyzerSettings {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// Output intensities at the transmit (n) and reflect (p) ports of both
/// analyzers, in counts per window.
struct PortIntensities {
  double i1n = 0.0;
  double i1p = 0.0;
  double i2n = 0.0;
  double i2p = 0.0;
};

struct PortAmplitudes {
  std::complex<double> u1n;
  std::complex<double> u1p;
  std::complex<double> u2n;
  std::complex<double> u2p;
};

/// Projects the input fields onto each analyzer's transmit and reflect axes.
/// Side-2 fields use V phase 0 and H phase phase_diff2; the global phase
/// drops out of every intensity.
PortAmplitudes amplitudes_at_ports(const SourceDraw& draw, const AnalyzerSettings& settings);

/// Closed-form port intensities. Side 2 is evaluated in its substituted form
/// (intensities swapped, cross term negated), which makes
/// theta1 == theta2 imply i2n == i1p and i2p == i1n bit for bit.
/// Rounding residue below zero is clamped to 0.
PortIntensities port_intensities(const SourceDraw& draw, const AnalyzerSettings& settings);

/// Malus's law through ideal linear polarizers, applied in order.
double sequential_polarizers(double input_polarization_angle, double input_intensity,
                             std::span<const double> analyzer_angles);

}  // namespace chaobell
