#include "gmmrans/mixture.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gmmrans/stats.hpp"

namespace gmmrans {

MixtureParams MixtureParams::make(std::span<const double> weights,
                                  std::span<const double> means,
                                  std::span<const double> stddevs) {
  const std::size_t k = weights.size();
  if (k < 1 || k > kMaxComponents) {
    throw std::invalid_argument("mixture component count must be 1..4, got " +
                                std::to_string(k));
  }
  if (means.size() != k || stddevs.size() != k) {
    throw std::invalid_argument("weights/means/stddevs length mismatch");
  }

  MixtureParams p;
  p.count_ = static_cast<int>(k);
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!std::isfinite(weights[i]) || !std::isfinite(means[i]) ||
        !std::isfinite(stddevs[i])) {
      throw std::invalid_argument("mixture parameters must be finite");
    }
    if (weights[i] < 0.0) {
      throw std::invalid_argument("mixture weights must be non-negative");
    }
    weight_sum += weights[i];
  }
  if (weight_sum <= 0.0) {
    throw std::invalid_argument("mixture weights must not all be zero");
  }
  for (std::size_t i = 0; i < k; ++i) {
    p.weights_[i] = weights[i] / weight_sum;
    p.means_[i] = means[i];
    p.stddevs_[i] = stddevs[i] < kMinStddev ? kMinStddev : stddevs[i];
  }
  return p;
}

MixtureParams MixtureParams::raw(int count,
                                 const std::array<double, kMaxComponents>& weights,
                                 const std::array<double, kMaxComponents>& means,
                                 const std::array<double, kMaxComponents>& stddevs) {
  assert(count >= 1 && count <= kMaxComponents);
  MixtureParams p;
  p.count_ = count;
  p.weights_ = weights;
  p.means_ = means;
  p.stddevs_ = stddevs;
  return p;
}

MixtureParams MixtureParams::quantized_for_coding() const {
  MixtureParams p;
  p.count_ = count_;
  for (int k = 0; k < count_; ++k) {
    p.weights_[k] = static_cast<double>(static_cast<float>(weights_[k]));
    p.means_[k] = static_cast<double>(static_cast<float>(means_[k]));
    p.stddevs_[k] = static_cast<double>(static_cast<float>(stddevs_[k]));
  }
  return p;
}

SymbolAlphabet::SymbolAlphabet(int y_min, int y_max, int precision_bits)
    : y_min_(y_min), y_max_(y_max), precision_bits_(precision_bits) {
  if (y_min >= y_max) {
    throw std::invalid_argument("alphabet requires y_min < y_max");
  }
  if (y_min < -32768 || y_max > 32767) {
    throw std::invalid_argument("alphabet bounds must fit a 16-bit integer");
  }
  const long long n = static_cast<long long>(y_max) - y_min + 1;
  if (n > (1 << 15)) {
    throw std::invalid_argument("alphabet size must be at most 2^15");
  }
  if (precision_bits < 8 || precision_bits > 16) {
    throw std::invalid_argument("precision_bits must be 8..16");
  }
  const long long m = 1ll << precision_bits;
  if (m <= 2 * n) {
    throw std::invalid_argument(
        "2^precision_bits must exceed twice the alphabet size (N=" +
        std::to_string(n) + ", P=" + std::to_string(precision_bits) + ")");
  }
  size_ = static_cast<std::uint32_t>(n);
}

SymbolAlphabet SymbolAlphabet::centered(int n, int precision_bits) {
  const int y_min = -(n / 2);
  return SymbolAlphabet(y_min, y_min + n - 1, precision_bits);
}

std::array<double, kMaxComponents> component_cdf_batch(double y,
                                                       const MixtureParams& params,
                                                       ApproximatorKind kind) {
  std::array<double, kMaxComponents> out{};
  const int k = params.count();
  stats::counters().component_evals += static_cast<std::uint64_t>(k);
  for (int i = 0; i < k; ++i) {
    out[i] = std_normal_cdf((y - params.mean(i)) / params.stddev(i), kind);
  }
  return out;
}

double mixture_cdf(double y, const MixtureParams& params, ApproximatorKind kind) {
  const auto cdfs = component_cdf_batch(y, params, kind);
  double sum = 0.0;
  for (int i = 0; i < params.count(); ++i) {
    sum += params.weight(i) * cdfs[i];
  }
  if (!(sum > 0.0)) return 0.0;
  if (sum > 1.0) return 1.0;
  return sum;
}

std::uint32_t boundary_from_cdf(double cdf_value, std::uint32_t j,
                                std::uint32_t n_symbols,
                                std::uint32_t total_freq) {
  if (j == 0) return 0;
  if (j >= n_symbols) return total_freq;
  double f = cdf_value;
  if (!(f > 0.0)) f = 0.0;
  if (f > 1.0) f = 1.0;
  const double scaled =
      std::floor(f * static_cast<double>(total_freq - n_symbols));
  return static_cast<std::uint32_t>(scaled) + j;
}

std::uint32_t quantized_boundary(const MixtureParams& params,
                                 const SymbolAlphabet& alphabet,
                                 std::uint32_t j, ApproximatorKind kind) {
  assert(j <= alphabet.size());
  stats::counters().boundary_evals += 1;
  if (j == 0) return 0;
  if (j >= alphabet.size()) return alphabet.total_freq();
  const double y = static_cast<double>(alphabet.y_min()) - 0.5 +
                   static_cast<double>(j);
  return boundary_from_cdf(mixture_cdf(y, params, kind), j, alphabet.size(),
                           alphabet.total_freq());
}

}  // namespace gmmrans
