#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "gmmrans/normal_cdf.hpp"

namespace gmmrans {

inline constexpr int kMaxComponents = 4;   // data-parallel lane width
inline constexpr double kMinStddev = 0.11; // scale floor, avoids degenerate spikes

/// Per-symbol Gaussian mixture: K weighted components (w, mu, sigma).
///
/// Construct through make(): weights are renormalized to sum to 1 and
/// stddevs clamped to kMinStddev. The codecs round parameters to the
/// 32-bit floats that travel in the stream before any CDF evaluation
/// (quantized_for_coding), so encoder and decoder always evaluate the
/// same numerical function.
class MixtureParams {
 public:
  static MixtureParams make(std::span<const double> weights,
                            std::span<const double> means,
                            std::span<const double> stddevs);

  /// Trusted raw constructor: no renormalization, no clamping. Used for
  /// float-rounded coding parameters and for values parsed back from a
  /// stream, which must be used exactly as transmitted.
  static MixtureParams raw(int count, const std::array<double, kMaxComponents>& weights,
                           const std::array<double, kMaxComponents>& means,
                           const std::array<double, kMaxComponents>& stddevs);

  /// Copy with every field passed through 32-bit float rounding.
  MixtureParams quantized_for_coding() const;

  int count() const { return count_; }
  double weight(int k) const { return weights_[k]; }
  double mean(int k) const { return means_[k]; }
  double stddev(int k) const { return stddevs_[k]; }

  const std::array<double, kMaxComponents>& weights() const { return weights_; }
  const std::array<double, kMaxComponents>& means() const { return means_; }
  const std::array<double, kMaxComponents>& stddevs() const { return stddevs_; }

 private:
  MixtureParams() = default;

  int count_ = 0;
  std::array<double, kMaxComponents> weights_{};
  std::array<double, kMaxComponents> means_{};
  std::array<double, kMaxComponents> stddevs_{};
};

/// Contiguous integer alphabet {y_min..y_max} with quantizer precision P.
/// Total frequency mass is m = 2^P; m > 2N keeps a frequency >= 1 per
/// symbol with headroom. Bounds must fit the stream header's int16.
class SymbolAlphabet {
 public:
  SymbolAlphabet(int y_min, int y_max, int precision_bits);

  int y_min() const { return y_min_; }
  int y_max() const { return y_max_; }
  int precision_bits() const { return precision_bits_; }
  std::uint32_t size() const { return size_; }                 // N
  std::uint32_t total_freq() const { return 1u << precision_bits_; } // m

  /// Centered alphabet of size n, e.g. n=256 -> {-128..127}.
  static SymbolAlphabet centered(int n, int precision_bits);

 private:
  int y_min_;
  int y_max_;
  int precision_bits_;
  std::uint32_t size_;
};

/// Per-component standard-normal CDFs Phi((y - mu_k) / sigma_k) for all
/// K components, evaluated through the library's single arithmetic path.
/// Every codec operation routes through this function, which is what
/// guarantees encoder/decoder determinism.
std::array<double, kMaxComponents> component_cdf_batch(double y,
                                                       const MixtureParams& params,
                                                       ApproximatorKind kind);

/// Mixture CDF: sum_k w_k * Phi((y - mu_k) / sigma_k), clamped to [0, 1].
/// Non-decreasing in y for fixed params and kind.
double mixture_cdf(double y, const MixtureParams& params, ApproximatorKind kind);

/// Quantization rule applied to a CDF value F at boundary index j:
/// floor(F * (m - N)) + j for interior j; pinned to 0 and m at the ends.
/// Strictly increasing in j whenever F is non-decreasing, so every
/// symbol keeps a frequency >= 1. Exposed on raw (N, m) so the rule can
/// be checked at any scale.
std::uint32_t boundary_from_cdf(double cdf_value, std::uint32_t j,
                                std::uint32_t n_symbols,
                                std::uint32_t total_freq);

/// Integer cumulative frequency at bin edge j (0..N), evaluating the
/// mixture CDF at y_min + j - 0.5. Deterministic: identical arguments
/// give identical integers on every call, encoder and decoder alike.
std::uint32_t quantized_boundary(const MixtureParams& params,
                                 const SymbolAlphabet& alphabet,
                                 std::uint32_t j, ApproximatorKind kind);

/// Largest symbol index j in [0, N) with boundary(j) <= slot; the
/// binary search the decoder runs against quantized_boundary. Boundary
/// must be strictly increasing with boundary(0) = 0.
template <typename BoundaryFn>
std::uint32_t search_slot(BoundaryFn&& boundary, std::uint32_t n_symbols,
                          std::uint32_t slot) {
  std::uint32_t lo = 0;
  std::uint32_t hi = n_symbols;
  while (hi - lo > 1) {
    const std::uint32_t mid = (lo + hi) / 2;
    if (boundary(mid) <= slot) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace gmmrans
