#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace gmmrans {

/// Standard-normal CDF evaluation strategy. The byte values are part of
/// the stream header format and must not be reordered.
enum class ApproximatorKind : std::uint8_t {
  Exact = 0,            // 0.5 * erfc(-x / sqrt(2))
  Polya = 1,            // 0.5 * (1 + sqrt(1 - exp(-x^2))), reflected for x < 0
  AbramowitzStegun = 2, // 26.2.17 polynomial, reflected for x < 0
  Logistic = 3,         // 1 / (1 + exp(-1.702 x))
};

inline constexpr int kApproximatorKindCount = 4;

std::string_view approximator_name(ApproximatorKind kind);
std::optional<ApproximatorKind> approximator_from_name(std::string_view name);
std::optional<ApproximatorKind> approximator_from_code(std::uint8_t code);

/// Standard-normal CDF under the selected formula, clamped to [0, 1].
/// Negative arguments of the one-sided formulas are completed by
/// symmetry, Phi(-x) = 1 - Phi(x), which keeps each kind monotone and
/// makes Phi(x) + Phi(-x) == 1 hold exactly in floating point.
double std_normal_cdf(double x, ApproximatorKind kind);

/// High-precision reference CDF (extended-precision erfc). Measurement
/// yardstick for the accuracy grids; never used on a coding path.
long double std_normal_cdf_reference(long double x);

}  // namespace gmmrans
