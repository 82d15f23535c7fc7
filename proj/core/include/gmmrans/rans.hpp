#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gmmrans {

/// Normalization interval lower bound. With byte renormalization and
/// P <= 16 the state always fits 32 bits.
inline constexpr std::uint32_t kRansLowerBound = 1u << 23;

/// One symbol's coding triple: cumulative frequency, frequency, and the
/// quantizer precision P (total mass m = 2^P). freq >= 1 and
/// cum + freq <= m. The coder never sees probabilities in any other form.
struct SymbolCoding {
  std::uint32_t cum;
  std::uint32_t freq;
  std::uint32_t precision_bits;
};

/// Raw state-transition map: x' = (x / freq) << P + (x % freq) + cum.
constexpr std::uint32_t rans_encode_step(std::uint32_t x, std::uint32_t cum,
                                         std::uint32_t freq,
                                         std::uint32_t precision_bits) {
  return ((x / freq) << precision_bits) + (x % freq) + cum;
}

/// Inverse map given the slot d = x & (m - 1).
constexpr std::uint32_t rans_decode_step(std::uint32_t x, std::uint32_t slot,
                                         std::uint32_t cum, std::uint32_t freq,
                                         std::uint32_t precision_bits) {
  return freq * (x >> precision_bits) + slot - cum;
}

/// Streaming rANS encoder. Symbols must be fed in reverse order (last
/// symbol first); the decoder then reads the payload forward.
class RansEncoder {
 public:
  RansEncoder() : state_(kRansLowerBound) {}

  std::uint32_t state() const { return state_; }

  /// Renormalize, then apply the state-transition map.
  void put(const SymbolCoding& s);

  /// Append the 4 state bytes and reverse the scratch buffer: the
  /// payload starts with the final state, most-significant byte first,
  /// followed by renormalization bytes in reverse emission order.
  std::vector<std::uint8_t> flush();

 private:
  std::uint32_t state_;
  std::vector<std::uint8_t> scratch_;
};

/// Streaming rANS decoder over a payload produced by RansEncoder.
class RansDecoder {
 public:
  /// Reads the initial state from the first 4 payload bytes
  /// (most-significant first). Throws TruncatedStream on short input.
  explicit RansDecoder(std::span<const std::uint8_t> payload);

  std::uint32_t state() const { return state_; }
  std::size_t cursor() const { return cursor_; }

  /// Slot d = x & (m - 1). Pure, does not advance.
  std::uint32_t peek(std::uint32_t precision_bits) const {
    return state_ & ((1u << precision_bits) - 1);
  }

  /// Pop the symbol occupying [cum, cum + freq) at the peeked slot,
  /// then pull renormalization bytes while the payload lasts.
  void advance(const SymbolCoding& s);

  /// True once the state has fallen below the normalization interval
  /// with no payload bytes left: decoding further symbols would read
  /// past the end of a truncated stream.
  bool underflowed() const {
    return state_ < kRansLowerBound && cursor_ >= payload_.size();
  }

  /// A fully consumed well-formed stream ends back at the encoder's
  /// initial state with every byte read.
  bool at_clean_end() const {
    return state_ == kRansLowerBound && cursor_ == payload_.size();
  }

 private:
  std::span<const std::uint8_t> payload_;
  std::uint32_t state_;
  std::size_t cursor_;
};

}  // namespace gmmrans
