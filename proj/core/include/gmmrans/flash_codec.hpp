#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gmmrans/mixture.hpp"
#include "gmmrans/stream.hpp"

namespace gmmrans {

/// Encodes a symbol sequence under per-symbol mixture models by direct
/// CDF evaluation: two boundary probes per symbol, no tables. Parameters
/// are rounded to the 32-bit floats that travel in the stream before any
/// evaluation, so the decoder reproduces the encoder's arithmetic
/// bit for bit. Throws SymbolOutOfAlphabet instead of clamping.
EncodedStream flash_encode(std::span<const std::int32_t> symbols,
                           std::span<const MixtureParams> params,
                           const SymbolAlphabet& alphabet,
                           ApproximatorKind kind);

/// Recovers the symbol sequence by binary search over the quantized
/// boundary function: the slot's bin is located in ceil(log2 N) probes
/// plus two evaluations for the pop. Throws TruncatedStream if the
/// payload starves or does not close back on the initial coder state.
std::vector<std::int32_t> flash_decode(const EncodedStream& stream);

/// Convenience: parse and decode serialized bytes.
std::vector<std::int32_t> flash_decode(std::span<const std::uint8_t> bytes);

/// Ideal code length of one symbol under the quantized model,
/// -log2(freq / m), using the same float-rounded arithmetic as the
/// codecs. Throws SymbolOutOfAlphabet.
double symbol_bits(const MixtureParams& params, const SymbolAlphabet& alphabet,
                   ApproximatorKind kind, std::int32_t symbol);

}  // namespace gmmrans
