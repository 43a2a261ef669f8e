#include "chaobell/oracle.hpp"

namespace chaobell {

std::string_view to_string(PortPairKind kind) {
  switch (kind) {
    case PortPairKind::cross_np: return "cross_np";
    case PortPairKind::cross_pn: return "cross_pn";
    case PortPairKind::cross_nn: return "cross_nn";
    case PortPairKind::cross_pp: return "cross_pp";
    case PortPairKind::same_side_1: return "same_side_1";
    case PortPairKind::same_side_2: return "same_side_2";
  }
  return "unknown";
}

double raw_product_mean(PortPairKind kind, const OracleParams& params) {
  const double offset = params.mean_intensity * params.mean_intensity;
  return offset + corrected_product_mean(kind, params);
}

double corrected_product_mean(PortPairKind kind, const OracleParams& params) {
  const double i0_sq = params.mean_intensity * params.mean_intensity;
  const double c = std::cos(params.delta_theta);
  const double s = std::sin(params.delta_theta);
  switch (kind) {
    case PortPairKind::cross_np:
    case PortPairKind::cross_pn:
      return i0_sq * c * c;
    case PortPairKind::cross_nn:
    case PortPairKind::cross_pp:
      return i0_sq * s * s;
    case PortPairKind::same_side_1:
    case PortPairKind::same_side_2:
      return 0.0;
  }
  return 0.0;
}

double bell_correlation_raw(const OracleParams& params) {
  return -2.0 * params.mean_intensity * params.mean_intensity * std::cos(2.0 * params.delta_theta);
}

double normalization_sum(const OracleParams& params) {
  return 2.0 * params.mean_intensity * params.mean_intensity;
}

double normalized_correlation(double delta_theta) { return -std::cos(2.0 * delta_theta); }

}  // namespace chaobell
