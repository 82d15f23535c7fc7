#include "gmmrans/normal_cdf.hpp"

#include <cmath>

namespace gmmrans {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;
constexpr double kLogisticSlope = 1.702;

// Abramowitz & Stegun 26.2.17 constants.
constexpr double kAsP = 0.2316419;
constexpr double kAsB1 = 0.319381530;
constexpr double kAsB2 = -0.356563782;
constexpr double kAsB3 = 1.781477937;
constexpr double kAsB4 = -1.821255978;
constexpr double kAsB5 = 1.330274429;

inline double clamp01(double v) {
  // NaN-safe: a corrupt parameter block must not reach an undefined
  // float-to-int conversion downstream.
  if (!(v > 0.0)) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

// One-sided evaluations for x >= 0; all return values in [0.5, 1], so
// the reflected branch 1 - f(x) is exact (Sterbenz).

inline double polya_pos(double x) {
  return 0.5 * (1.0 + std::sqrt(1.0 - std::exp(-x * x)));
}

inline double abramowitz_stegun_pos(double x) {
  const double z = kInvSqrt2Pi * std::exp(-0.5 * x * x);
  const double t = 1.0 / (1.0 + kAsP * x);
  const double poly =
      t * (kAsB1 + t * (kAsB2 + t * (kAsB3 + t * (kAsB4 + t * kAsB5))));
  return 1.0 - z * poly;
}

inline double logistic_pos(double x) {
  return 1.0 / (1.0 + std::exp(-kLogisticSlope * x));
}

template <typename OneSided>
inline double reflect(double x, OneSided f) {
  return x >= 0.0 ? f(x) : 1.0 - f(-x);
}

}  // namespace

double std_normal_cdf(double x, ApproximatorKind kind) {
  double v;
  switch (kind) {
    case ApproximatorKind::Polya:
      v = reflect(x, polya_pos);
      break;
    case ApproximatorKind::AbramowitzStegun:
      v = reflect(x, abramowitz_stegun_pos);
      break;
    case ApproximatorKind::Logistic:
      v = reflect(x, logistic_pos);
      break;
    case ApproximatorKind::Exact:
    default:
      v = 0.5 * std::erfc(-x / kSqrt2);
      break;
  }
  return clamp01(v);
}

long double std_normal_cdf_reference(long double x) {
  const long double inv_sqrt2 = 0.70710678118654752440L;
  return 0.5L * erfcl(-x * inv_sqrt2);
}

std::string_view approximator_name(ApproximatorKind kind) {
  switch (kind) {
    case ApproximatorKind::Exact: return "exact";
    case ApproximatorKind::Polya: return "polya";
    case ApproximatorKind::AbramowitzStegun: return "as";
    case ApproximatorKind::Logistic: return "logistic";
  }
  return "unknown";
}

std::optional<ApproximatorKind> approximator_from_name(std::string_view name) {
  if (name == "exact") return ApproximatorKind::Exact;
  if (name == "polya") return ApproximatorKind::Polya;
  if (name == "as") return ApproximatorKind::AbramowitzStegun;
  if (name == "logistic") return ApproximatorKind::Logistic;
  return std::nullopt;
}

std::optional<ApproximatorKind> approximator_from_code(std::uint8_t code) {
  if (code >= kApproximatorKindCount) return std::nullopt;
  return static_cast<ApproximatorKind>(code);
}

}  // namespace gmmrans
