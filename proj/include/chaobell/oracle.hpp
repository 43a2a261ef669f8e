#pragma once

#include <array>
#include <cmath>
#include <string_view>

namespace chaobell {

/// The six port-pair products whose ensemble averages define the model.
/// Cross kinds pair a side-1 port with a side-2 port; "np" is 1n x 2p.
enum class PortPairKind { cross_np, cross_pn, cross_nn, cross_pp, same_side_1, same_side_2 };

inline constexpr std::array<PortPairKind, 6> kAllPortPairKinds{
    PortPairKind::cross_np, PortPairKind::cross_pn,    PortPairKind::cross_nn,
    PortPairKind::cross_pp, PortPairKind::same_side_1, PortPairKind::same_side_2};

inline constexpr std::array<PortPairKind, 4> kCrossPortPairKinds{
    PortPairKind::cross_np, PortPairKind::cross_pn, PortPairKind::cross_nn, PortPairKind::cross_pp};

constexpr std::size_t index_of(PortPairKind kind) { return static_cast<std::size_t>(kind); }
constexpr bool is_cross(PortPairKind kind) { return index_of(kind) < 4; }
std::string_view to_string(PortPairKind kind);

/// delta_theta is theta1 - theta2 throughout.
struct OracleParams {
  double mean_intensity = 1.0;
  double delta_theta = 0.0;
};

/// Ensemble average of the intensity product before any offset removal:
/// np, pn -> I0^2 (1 + cos^2 d); nn, pp -> I0^2 (1 + sin^2 d); same side -> I0^2.
double raw_product_mean(PortPairKind kind, const OracleParams& params);

/// raw_product_mean minus the multi-pair offset I0^2.
double corrected_product_mean(PortPairKind kind, const OracleParams& params);

/// <nn + pp - pn - np> = -2 I0^2 cos 2d.
double bell_correlation_raw(const OracleParams& params);

/// Sum of the four corrected cross products, 2 I0^2 for every d.
double normalization_sum(const OracleParams& params);

/// -cos 2d.
double normalized_correlation(double delta_theta);

/// |C(a,b) - C(a,b')| + |C(a',b) + C(a',b')| for already-evaluated correlations.
inline double chsh_combine(double c_ab, double c_abp, double c_apb, double c_apbp) {
  return std::fabs(c_ab - c_abp) + std::fabs(c_apb + c_apbp);
}

/// CHSH combination of a correlation function of the angle difference
/// (side-1 angle minus side-2 angle).
template <class Correlation>
double chsh_value(double a, double a_prime, double b, double b_prime, Correlation&& correlation) {
  return chsh_combine(correlation(a - b), correlation(a - b_prime), correlation(a_prime - b),
                      correlation(a_prime - b_prime));
}

}  // namespace chaobell
