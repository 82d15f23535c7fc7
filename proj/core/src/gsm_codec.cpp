#include "gmmrans/gsm_codec.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "gmmrans/errors.hpp"
#include "gmmrans/rans.hpp"
#include "gmmrans/stats.hpp"

namespace gmmrans {

namespace {

double round_to_f32(double v) {
  return static_cast<double>(static_cast<float>(v));
}

/// Smallest z with Phi(-z) below the tail threshold, found by bisection
/// on the exact CDF. Deterministic, so encoder- and decoder-side table
/// construction agree.
double tail_z(int precision_bits) {
  const double threshold = std::ldexp(1.0, -(precision_bits + 1));
  double lo = 0.0;
  double hi = 40.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (std_normal_cdf(-mid, ApproximatorKind::Exact) < threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::int64_t rounded_mean(double mean) { return std::llround(mean); }

}  // namespace

ScaleTable::ScaleTable(int precision_bits, ApproximatorKind kind,
                       const ScalePolicy& policy)
    : precision_bits_(precision_bits), kind_(kind) {
  if (policy.levels < 2) {
    throw std::invalid_argument("scale table needs at least 2 levels");
  }
  const int levels = policy.levels;
  scales_.resize(static_cast<std::size_t>(levels));
  const double log_lo = std::log(policy.sigma_lo);
  const double log_hi = std::log(policy.sigma_hi);
  const double step = (log_hi - log_lo) / static_cast<double>(levels - 1);
  for (int i = 1; i + 1 < levels; ++i) {
    scales_[static_cast<std::size_t>(i)] = std::exp(log_lo + i * step);
  }
  // Pin the endpoints: the even-log-spacing rule forces them and the
  // exp/log round trip must not drift off the grid bounds.
  scales_.front() = policy.sigma_lo;
  scales_.back() = policy.sigma_hi;

  const double z = tail_z(precision_bits);
  // Residual bound cap keeping every per-scale alphabet valid: the
  // quantizer needs m > 2 * (2 * bound + 1).
  const std::int32_t cap =
      std::min((1 << 15) - 1, (1 << (precision_bits - 2)) - 1);

  bounds_.resize(scales_.size());
  rows_.resize(scales_.size());
  for (std::size_t s = 0; s < scales_.size(); ++s) {
    const std::int32_t bound = std::min(
        cap, static_cast<std::int32_t>(std::ceil(scales_[s] * z)));
    bounds_[s] = std::max(1, bound);

    const SymbolAlphabet alphabet(-bounds_[s], bounds_[s], precision_bits);
    const double w[1] = {1.0};
    const double mu[1] = {0.0};
    const double sigma[1] = {scales_[s]};
    const MixtureParams params = MixtureParams::make(w, mu, sigma);

    auto& row = rows_[s];
    row.resize(alphabet.size() + 1);
    for (std::uint32_t j = 0; j <= alphabet.size(); ++j) {
      row[j] = quantized_boundary(params, alphabet, j, kind_);
    }
    stats::counters().table_rows_built += 1;
  }
}

int ScaleTable::scale_index(double sigma) const {
  const auto it = std::lower_bound(scales_.begin(), scales_.end(), sigma);
  if (it == scales_.end()) return levels() - 1;
  return static_cast<int>(std::distance(scales_.begin(), it));
}

ScaleTable gsm_init(int precision_bits, ApproximatorKind kind,
                    const ScalePolicy& policy) {
  return ScaleTable(precision_bits, kind, policy);
}

EncodedStream gsm_encode(std::span<const std::int32_t> symbols,
                         std::span<const double> means,
                         std::span<const double> sigmas,
                         const ScaleTable& table) {
  if (symbols.size() != means.size() || symbols.size() != sigmas.size()) {
    throw std::invalid_argument("one (mean, sigma) pair per symbol required");
  }

  EncodedStream stream;
  stream.params.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::array<double, kMaxComponents> w{1.0};
    const std::array<double, kMaxComponents> mu{round_to_f32(means[i])};
    const std::array<double, kMaxComponents> sigma{round_to_f32(sigmas[i])};
    stream.params.push_back(MixtureParams::raw(1, w, mu, sigma));
  }

  const std::uint32_t precision =
      static_cast<std::uint32_t>(table.precision_bits());
  RansEncoder encoder;
  for (std::size_t r = symbols.size(); r-- > 0;) {
    const MixtureParams& p = stream.params[r];
    const int s = table.scale_index(p.stddev(0));
    const std::int32_t bound = table.residual_bound(s);
    const std::int64_t residual = symbols[r] - rounded_mean(p.mean(0));
    if (residual < -bound || residual > bound) {
      throw SymbolOutOfAlphabet(r, symbols[r]);
    }
    const auto row = table.row(s);
    const std::uint32_t j = static_cast<std::uint32_t>(residual + bound);
    encoder.put(SymbolCoding{row[j], row[j + 1] - row[j], precision});
  }

  const std::int32_t max_bound = table.residual_bound(table.levels() - 1);
  StreamHeader h;
  h.approximator = table.kind();
  h.precision_bits = static_cast<std::uint8_t>(table.precision_bits());
  h.component_count = 1;
  h.y_min = static_cast<std::int16_t>(-max_bound);
  h.y_max = static_cast<std::int16_t>(max_bound);
  h.symbol_count = static_cast<std::uint32_t>(symbols.size());
  stream.header = h;
  stream.payload = encoder.flush();
  return stream;
}

std::vector<std::int32_t> gsm_decode(const EncodedStream& stream,
                                     const ScaleTable& table) {
  if (stream.header.precision_bits != table.precision_bits() ||
      stream.header.approximator != table.kind()) {
    throw HeaderMismatch("stream was coded against a different scale table");
  }
  if (stream.params.size() != stream.header.symbol_count ||
      stream.header.component_count != 1) {
    throw HeaderMismatch("malformed single-Gaussian parameter block");
  }

  const std::uint32_t precision =
      static_cast<std::uint32_t>(table.precision_bits());
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
    const int s = table.scale_index(p.stddev(0));
    const std::int32_t bound = table.residual_bound(s);
    const auto row = table.row(s);
    const std::uint32_t slot = decoder.peek(precision);
    const auto it = std::upper_bound(row.begin() + 1, row.end(), slot);
    const std::uint32_t j =
        static_cast<std::uint32_t>(std::distance(row.begin(), it)) - 1;
    decoder.advance(SymbolCoding{row[j], row[j + 1] - row[j], precision});
    const std::int32_t residual = static_cast<std::int32_t>(j) - bound;
    symbols.push_back(
        static_cast<std::int32_t>(rounded_mean(p.mean(0)) + residual));
  }

  if (!decoder.at_clean_end()) {
    throw TruncatedStream("stream does not close on the initial coder state");
  }
  return symbols;
}

double gsm_symbol_bits(const ScaleTable& table, double mean, double sigma,
                       std::int32_t symbol) {
  const double mu = round_to_f32(mean);
  const int s = table.scale_index(round_to_f32(sigma));
  const std::int32_t bound = table.residual_bound(s);
  const std::int64_t residual = symbol - rounded_mean(mu);
  if (residual < -bound || residual > bound) {
    throw SymbolOutOfAlphabet(0, symbol);
  }
  const auto row = table.row(s);
  const std::uint32_t j = static_cast<std::uint32_t>(residual + bound);
  const double m = static_cast<double>(1u << table.precision_bits());
  return -std::log2(static_cast<double>(row[j + 1] - row[j]) / m);
}

}  // namespace gmmrans
