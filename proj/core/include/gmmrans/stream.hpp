#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gmmrans/mixture.hpp"
#include "gmmrans/normal_cdf.hpp"

namespace gmmrans {

/// Fixed 16-byte stream header, little-endian throughout:
///   magic "FGMM" | version u8 | approximator u8 | precision u8 | K u8 |
///   y_min i16 | y_max i16 | symbol_count u32
struct StreamHeader {
  static constexpr std::uint8_t kVersion = 1;
  static constexpr std::size_t kSize = 16;
  static constexpr std::uint8_t kMagic[4] = {'F', 'G', 'M', 'M'};

  ApproximatorKind approximator = ApproximatorKind::Exact;
  std::uint8_t precision_bits = 16;
  std::uint8_t component_count = 1;
  std::int16_t y_min = 0;
  std::int16_t y_max = 0;
  std::uint32_t symbol_count = 0;

  SymbolAlphabet alphabet() const {
    return SymbolAlphabet(y_min, y_max, precision_bits);
  }
};

/// A self-contained coded stream: header, the per-symbol mixture
/// parameters as 32-bit floats (ordered w[0..K-1], mu[0..K-1],
/// sigma[0..K-1] per symbol), then the rANS payload. The stored
/// MixtureParams are already float-rounded, exactly as serialized.
struct EncodedStream {
  StreamHeader header;
  std::vector<MixtureParams> params;
  std::vector<std::uint8_t> payload;

  std::vector<std::uint8_t> serialize() const;
};

/// Parses a serialized stream. Throws HeaderMismatch on bad magic,
/// version, or inconsistent header fields, TruncatedStream if the
/// parameter block or payload is cut short.
EncodedStream parse_stream(std::span<const std::uint8_t> bytes);

}  // namespace gmmrans
