#include "gmmrans/flash_codec.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "gmmrans/errors.hpp"
#include "gmmrans/rans.hpp"

namespace gmmrans {

namespace {

StreamHeader make_header(const SymbolAlphabet& alphabet, ApproximatorKind kind,
                         std::size_t k, std::size_t symbol_count) {
  StreamHeader h;
  h.approximator = kind;
  h.precision_bits = static_cast<std::uint8_t>(alphabet.precision_bits());
  h.component_count = static_cast<std::uint8_t>(k);
  h.y_min = static_cast<std::int16_t>(alphabet.y_min());
  h.y_max = static_cast<std::int16_t>(alphabet.y_max());
  h.symbol_count = static_cast<std::uint32_t>(symbol_count);
  return h;
}

}  // namespace

EncodedStream flash_encode(std::span<const std::int32_t> symbols,
                           std::span<const MixtureParams> params,
                           const SymbolAlphabet& alphabet,
                           ApproximatorKind kind) {
  if (symbols.size() != params.size()) {
    throw std::invalid_argument("one mixture per symbol required");
  }

  EncodedStream stream;
  stream.params.reserve(params.size());
  std::size_t k = params.empty() ? 1 : 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (symbols[i] < alphabet.y_min() || symbols[i] > alphabet.y_max()) {
      throw SymbolOutOfAlphabet(i, symbols[i]);
    }
    if (i == 0) {
      k = static_cast<std::size_t>(params[i].count());
    } else if (static_cast<std::size_t>(params[i].count()) != k) {
      throw std::invalid_argument("all mixtures in a stream share one K");
    }
    stream.params.push_back(params[i].quantized_for_coding());
  }

  const std::uint32_t precision =
      static_cast<std::uint32_t>(alphabet.precision_bits());
  RansEncoder encoder;
  // rANS is last-in first-out: consume symbols in reverse so the decoder
  // walks the stream forward.
  for (std::size_t r = symbols.size(); r-- > 0;) {
    const std::uint32_t j =
        static_cast<std::uint32_t>(symbols[r] - alphabet.y_min());
    const std::uint32_t lo = quantized_boundary(stream.params[r], alphabet, j, kind);
    const std::uint32_t hi =
        quantized_boundary(stream.params[r], alphabet, j + 1, kind);
    encoder.put(SymbolCoding{lo, hi - lo, precision});
  }

  stream.header = make_header(alphabet, kind, k, symbols.size());
  stream.payload = encoder.flush();
  return stream;
}

std::vector<std::int32_t> flash_decode(const EncodedStream& stream) {
  const SymbolAlphabet alphabet = stream.header.alphabet();
  const ApproximatorKind kind = stream.header.approximator;
  const std::uint32_t n = alphabet.size();
  const std::uint32_t precision =
      static_cast<std::uint32_t>(alphabet.precision_bits());
  if (stream.params.size() != stream.header.symbol_count) {
    throw HeaderMismatch("parameter block does not match symbol count");
  }

  std::vector<std::int32_t> symbols;
  symbols.reserve(stream.header.symbol_count);
  RansDecoder decoder(stream.payload);

  for (std::size_t i = 0; i < stream.header.symbol_count; ++i) {
    if (decoder.underflowed()) {
      throw TruncatedStream("payload exhausted after " + std::to_string(i) +
                            " of " + std::to_string(stream.header.symbol_count) +
                            " symbols");
    }
    const MixtureParams& p = stream.params[i];
    const std::uint32_t slot = decoder.peek(precision);
    const std::uint32_t j = search_slot(
        [&](std::uint32_t b) { return quantized_boundary(p, alphabet, b, kind); },
        n, slot);
    const std::uint32_t lo = quantized_boundary(p, alphabet, j, kind);
    const std::uint32_t hi = quantized_boundary(p, alphabet, j + 1, kind);
    decoder.advance(SymbolCoding{lo, hi - lo, precision});
    symbols.push_back(alphabet.y_min() + static_cast<std::int32_t>(j));
  }

  if (!decoder.at_clean_end()) {
    throw TruncatedStream("stream does not close on the initial coder state");
  }
  return symbols;
}

std::vector<std::int32_t> flash_decode(std::span<const std::uint8_t> bytes) {
  return flash_decode(parse_stream(bytes));
}

double symbol_bits(const MixtureParams& params, const SymbolAlphabet& alphabet,
                   ApproximatorKind kind, std::int32_t symbol) {
  if (symbol < alphabet.y_min() || symbol > alphabet.y_max()) {
    throw SymbolOutOfAlphabet(0, symbol);
  }
  const MixtureParams coding = params.quantized_for_coding();
  const std::uint32_t j = static_cast<std::uint32_t>(symbol - alphabet.y_min());
  const std::uint32_t lo = quantized_boundary(coding, alphabet, j, kind);
  const std::uint32_t hi = quantized_boundary(coding, alphabet, j + 1, kind);
  return -std::log2(static_cast<double>(hi - lo) /
                    static_cast<double>(alphabet.total_freq()));
}

}  // namespace gmmrans
