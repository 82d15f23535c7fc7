#include "gmmrans/rans.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "gmmrans/errors.hpp"

namespace gmmrans {

void RansEncoder::put(const SymbolCoding& s) {
  if (s.freq == 0) {
    // A zero frequency means the quantizer upstream is broken; coding
    // would lose the symbol irrecoverably.
    throw std::logic_error("rANS: symbol with zero frequency");
  }
  assert(s.precision_bits >= 1 && s.precision_bits <= 16);
  assert(s.cum + s.freq <= (1u << s.precision_bits));

  const std::uint32_t x_max =
      ((kRansLowerBound >> s.precision_bits) << 8) * s.freq;
  while (state_ >= x_max) {
    scratch_.push_back(static_cast<std::uint8_t>(state_ & 0xFF));
    state_ >>= 8;
  }
  state_ = rans_encode_step(state_, s.cum, s.freq, s.precision_bits);
  // Standard interval argument: L <= x < ((L >> P) << 8) * m = 2^31.
  assert(state_ >= kRansLowerBound);
  assert(state_ < (1u << 31));
}

std::vector<std::uint8_t> RansEncoder::flush() {
  scratch_.push_back(static_cast<std::uint8_t>(state_ & 0xFF));
  scratch_.push_back(static_cast<std::uint8_t>((state_ >> 8) & 0xFF));
  scratch_.push_back(static_cast<std::uint8_t>((state_ >> 16) & 0xFF));
  scratch_.push_back(static_cast<std::uint8_t>((state_ >> 24) & 0xFF));
  std::vector<std::uint8_t> payload(std::move(scratch_));
  std::reverse(payload.begin(), payload.end());
  scratch_.clear();
  state_ = kRansLowerBound;
  return payload;
}

RansDecoder::RansDecoder(std::span<const std::uint8_t> payload)
    : payload_(payload) {
  if (payload.size() < 4) {
    throw TruncatedStream("rANS payload shorter than 4 bytes");
  }
  state_ = (static_cast<std::uint32_t>(payload[0]) << 24) |
           (static_cast<std::uint32_t>(payload[1]) << 16) |
           (static_cast<std::uint32_t>(payload[2]) << 8) |
           static_cast<std::uint32_t>(payload[3]);
  cursor_ = 4;
}

void RansDecoder::advance(const SymbolCoding& s) {
  const std::uint32_t slot = peek(s.precision_bits);
  state_ = rans_decode_step(state_, slot, s.cum, s.freq, s.precision_bits);
  while (state_ < kRansLowerBound && cursor_ < payload_.size()) {
    state_ = (state_ << 8) | payload_[cursor_];
    ++cursor_;
  }
  assert(state_ >= kRansLowerBound || cursor_ == payload_.size());
  assert(state_ < (1u << 31));
}

}  // namespace gmmrans
