#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gmmrans/mixture.hpp"
#include "gmmrans/stream.hpp"

namespace gmmrans {

/// Scale grid and tail rule for the single-Gaussian codec's prebuilt
/// tables: `levels` scales logarithmically evenly spaced over
/// [sigma_lo, sigma_hi], each covering residuals up to the point where
/// the Gaussian tail drops below the quantizer resolution 2^-(P+1).
struct ScalePolicy {
  double sigma_lo = kMinStddev;
  double sigma_hi = 256.0;
  int levels = 64;
};

/// Prebuilt per-scale boundary rows for zero-mean Gaussians. Built once
/// at init (the only cost proportional to the scale-alphabet size);
/// encoding and decoding never construct rows.
class ScaleTable {
 public:
  ScaleTable(int precision_bits, ApproximatorKind kind,
             const ScalePolicy& policy = {});

  int precision_bits() const { return precision_bits_; }
  ApproximatorKind kind() const { return kind_; }
  int levels() const { return static_cast<int>(scales_.size()); }
  double scale(int i) const { return scales_[static_cast<std::size_t>(i)]; }

  /// Residual bound of scale i: the row covers {-bound..+bound}.
  std::int32_t residual_bound(int i) const {
    return bounds_[static_cast<std::size_t>(i)];
  }

  /// Smallest scale index with scale >= sigma (clamped to the grid).
  int scale_index(double sigma) const;

  std::span<const std::uint32_t> row(int i) const {
    return rows_[static_cast<std::size_t>(i)];
  }

 private:
  int precision_bits_;
  ApproximatorKind kind_;
  std::vector<double> scales_;
  std::vector<std::int32_t> bounds_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

/// Builds the prebuilt scale rows. The per-scale residual range is the
/// smallest covering the Gaussian tail down to 2^-(P+1), capped so the
/// per-scale alphabet stays valid for the quantizer precision.
ScaleTable gsm_init(int precision_bits,
                    ApproximatorKind kind = ApproximatorKind::Exact,
                    const ScalePolicy& policy = {});

/// Single-Gaussian codec: codes the residual y - round(mu) against the
/// prebuilt row of the smallest scale >= sigma. Parameters are rounded
/// to their serialized 32-bit floats before any lookup, mirroring the
/// mixture codecs. Throws SymbolOutOfAlphabet when a residual falls
/// outside the selected scale's range (there is no bypass path).
EncodedStream gsm_encode(std::span<const std::int32_t> symbols,
                         std::span<const double> means,
                         std::span<const double> sigmas,
                         const ScaleTable& table);

std::vector<std::int32_t> gsm_decode(const EncodedStream& stream,
                                     const ScaleTable& table);

/// Ideal code length of one symbol under the scale-table model.
double gsm_symbol_bits(const ScaleTable& table, double mean, double sigma,
                       std::int32_t symbol);

}  // namespace gmmrans
