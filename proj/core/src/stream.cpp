#include "gmmrans/stream.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

#include "gmmrans/errors.hpp"

namespace gmmrans {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

void put_f32(std::vector<std::uint8_t>& out, float v) {
  const std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
  put_u32(out, bits);
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

float get_f32(std::span<const std::uint8_t> b, std::size_t at) {
  return std::bit_cast<float>(get_u32(b, at));
}

}  // namespace

std::vector<std::uint8_t> EncodedStream::serialize() const {
  const std::size_t k = header.component_count;
  std::vector<std::uint8_t> out;
  out.reserve(StreamHeader::kSize + 12 * k * params.size() + payload.size());

  for (const std::uint8_t b : StreamHeader::kMagic) out.push_back(b);
  out.push_back(StreamHeader::kVersion);
  out.push_back(static_cast<std::uint8_t>(header.approximator));
  out.push_back(header.precision_bits);
  out.push_back(header.component_count);
  put_u16(out, static_cast<std::uint16_t>(header.y_min));
  put_u16(out, static_cast<std::uint16_t>(header.y_max));
  put_u32(out, header.symbol_count);

  for (const MixtureParams& p : params) {
    for (std::size_t i = 0; i < k; ++i) put_f32(out, static_cast<float>(p.weight(static_cast<int>(i))));
    for (std::size_t i = 0; i < k; ++i) put_f32(out, static_cast<float>(p.mean(static_cast<int>(i))));
    for (std::size_t i = 0; i < k; ++i) put_f32(out, static_cast<float>(p.stddev(static_cast<int>(i))));
  }

  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

EncodedStream parse_stream(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < StreamHeader::kSize) {
    throw TruncatedStream("stream shorter than the 16-byte header");
  }
  if (std::memcmp(bytes.data(), StreamHeader::kMagic, 4) != 0) {
    throw HeaderMismatch("bad magic, expected \"FGMM\"");
  }
  if (bytes[4] != StreamHeader::kVersion) {
    throw HeaderMismatch("unsupported stream version " +
                         std::to_string(bytes[4]));
  }
  const auto kind = approximator_from_code(bytes[5]);
  if (!kind) {
    throw HeaderMismatch("unknown approximator code " + std::to_string(bytes[5]));
  }

  EncodedStream stream;
  stream.header.approximator = *kind;
  stream.header.precision_bits = bytes[6];
  stream.header.component_count = bytes[7];
  stream.header.y_min = static_cast<std::int16_t>(get_u16(bytes, 8));
  stream.header.y_max = static_cast<std::int16_t>(get_u16(bytes, 10));
  stream.header.symbol_count = get_u32(bytes, 12);

  const std::size_t k = stream.header.component_count;
  if (k < 1 || k > kMaxComponents) {
    throw HeaderMismatch("component count must be 1..4, got " +
                         std::to_string(k));
  }
  try {
    (void)stream.header.alphabet();
  } catch (const std::invalid_argument& e) {
    throw HeaderMismatch(std::string("inconsistent alphabet fields: ") +
                         e.what());
  }

  const std::size_t n = stream.header.symbol_count;
  const std::size_t params_bytes = 12 * k * n;
  if (bytes.size() < StreamHeader::kSize + params_bytes + 4) {
    throw TruncatedStream("stream ends inside parameter block or payload");
  }

  stream.params.reserve(n);
  std::size_t at = StreamHeader::kSize;
  for (std::size_t i = 0; i < n; ++i) {
    std::array<double, kMaxComponents> w{}, mu{}, sigma{};
    for (std::size_t c = 0; c < k; ++c) { w[c] = get_f32(bytes, at); at += 4; }
    for (std::size_t c = 0; c < k; ++c) { mu[c] = get_f32(bytes, at); at += 4; }
    for (std::size_t c = 0; c < k; ++c) { sigma[c] = get_f32(bytes, at); at += 4; }
    stream.params.push_back(
        MixtureParams::raw(static_cast<int>(k), w, mu, sigma));
  }

  stream.payload.assign(bytes.begin() + static_cast<std::ptrdiff_t>(at),
                        bytes.end());
  return stream;
}

}  // namespace gmmrans
