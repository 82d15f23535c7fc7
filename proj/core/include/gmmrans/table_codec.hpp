#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gmmrans/mixture.hpp"
#include "gmmrans/stream.hpp"

namespace gmmrans {

/// Materialized quantized-CDF boundaries: one row of N+1 integers per
/// coded symbol position, each row strictly increasing from 0 to m.
/// Costs Theta(K * positions * N) CDF evaluations to build — the cost
/// the search-based codec avoids.
class CdfTable {
 public:
  CdfTable(std::size_t positions, std::uint32_t n_symbols)
      : n_symbols_(n_symbols),
        boundaries_(positions * (static_cast<std::size_t>(n_symbols) + 1)) {}

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {boundaries_.data() + i * (n_symbols_ + 1), n_symbols_ + 1};
  }
  std::span<std::uint32_t> row(std::size_t i) {
    return {boundaries_.data() + i * (n_symbols_ + 1), n_symbols_ + 1};
  }

  std::size_t positions() const {
    return boundaries_.size() / (n_symbols_ + 1);
  }

 private:
  std::size_t n_symbols_;
  std::vector<std::uint32_t> boundaries_;
};

/// Builds the full table: row i holds quantized_boundary(params[i], j)
/// for j = 0..N — by construction the identical integers the search
/// codec computes on demand. Parameters must already be float-rounded
/// if bit-equality with coded streams is required.
CdfTable build_table(std::span<const MixtureParams> params,
                     const SymbolAlphabet& alphabet, ApproximatorKind kind);

/// Table-based encoder/decoder. Same container format and identical
/// payload bytes as the search codec on identical inputs; the only
/// difference is that every (cum, freq) pair is read from the
/// materialized table, which both sides must construct first.
EncodedStream table_encode(std::span<const std::int32_t> symbols,
                           std::span<const MixtureParams> params,
                           const SymbolAlphabet& alphabet,
                           ApproximatorKind kind);

std::vector<std::int32_t> table_decode(const EncodedStream& stream);

}  // namespace gmmrans
