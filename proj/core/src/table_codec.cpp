#include "gmmrans/table_codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmmrans/errors.hpp"
#include "gmmrans/rans.hpp"
#include "gmmrans/stats.hpp"

namespace gmmrans {

CdfTable build_table(std::span<const MixtureParams> params,
                     const SymbolAlphabet& alphabet, ApproximatorKind kind) {
  const std::uint32_t n = alphabet.size();
  CdfTable table(params.size(), n);
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto row = table.row(i);
    for (std::uint32_t j = 0; j <= n; ++j) {
      row[j] = quantized_boundary(params[i], alphabet, j, kind);
    }
    stats::counters().table_rows_built += 1;
  }
  return table;
}

EncodedStream table_encode(std::span<const std::int32_t> symbols,
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

  const CdfTable table = build_table(stream.params, alphabet, kind);

  const std::uint32_t precision =
      static_cast<std::uint32_t>(alphabet.precision_bits());
  RansEncoder encoder;
  for (std::size_t r = symbols.size(); r-- > 0;) {
    const auto row = table.row(r);
    const std::uint32_t j =
        static_cast<std::uint32_t>(symbols[r] - alphabet.y_min());
    encoder.put(SymbolCoding{row[j], row[j + 1] - row[j], precision});
  }

  StreamHeader h;
  h.approximator = kind;
  h.precision_bits = static_cast<std::uint8_t>(alphabet.precision_bits());
  h.component_count = static_cast<std::uint8_t>(k);
  h.y_min = static_cast<std::int16_t>(alphabet.y_min());
  h.y_max = static_cast<std::int16_t>(alphabet.y_max());
  h.symbol_count = static_cast<std::uint32_t>(symbols.size());
  stream.header = h;
  stream.payload = encoder.flush();
  return stream;
}

std::vector<std::int32_t> table_decode(const EncodedStream& stream) {
  const SymbolAlphabet alphabet = stream.header.alphabet();
  if (stream.params.size() != stream.header.symbol_count) {
    throw HeaderMismatch("parameter block does not match symbol count");
  }

  // The decoder pays the same construction cost as the encoder: the
  // table cannot be reused across the channel, only rebuilt.
  const CdfTable table =
      build_table(stream.params, alphabet, stream.header.approximator);

  const std::uint32_t precision =
      static_cast<std::uint32_t>(alphabet.precision_bits());
  std::vector<std::int32_t> symbols;
  symbols.reserve(stream.header.symbol_count);
  RansDecoder decoder(stream.payload);

  for (std::size_t i = 0; i < stream.header.symbol_count; ++i) {
    if (decoder.underflowed()) {
      throw TruncatedStream("payload exhausted after " + std::to_string(i) +
                            " of " + std::to_string(stream.header.symbol_count) +
                            " symbols");
    }
    const auto row = table.row(i);
    const std::uint32_t slot = decoder.peek(precision);
    // Find the bin with row[j] <= slot < row[j+1].
    const auto it = std::upper_bound(row.begin() + 1, row.end(), slot);
    const std::uint32_t j =
        static_cast<std::uint32_t>(std::distance(row.begin(), it)) - 1;
    decoder.advance(SymbolCoding{row[j], row[j + 1] - row[j], precision});
    symbols.push_back(alphabet.y_min() + static_cast<std::int32_t>(j));
  }

  if (!decoder.at_clean_end()) {
    throw TruncatedStream("stream does not close on the initial coder state");
  }
  return symbols;
}

}  // namespace gmmrans
