#include "gmmrans/workload.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace gmmrans {

namespace {

// Portable draws on top of mt19937_64 (whose output sequence is pinned
// by the standard). std::uniform_real_distribution and friends are
// implementation-defined, so they are hand-rolled here.

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Box-Muller; one value per call keeps the draw sequence simple.
double normal(std::mt19937_64& rng, double mean, double stddev) {
  double u = uniform01(rng);
  if (u <= 0.0) u = 0x1.0p-53;
  const double v = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u));
  return mean + stddev * r * std::cos(6.283185307179586 * v);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

MixtureParams draw_mixture(std::mt19937_64& rng, int k,
                           const SymbolAlphabet& alphabet) {
  std::array<double, kMaxComponents> w{}, mu{}, sigma{};
  for (int c = 0; c < k; ++c) {
    // Flat Dirichlet via normalized exponentials.
    w[c] = -std::log(std::max(uniform01(rng), 0x1.0p-53));
    mu[c] = std::clamp(normal(rng, 0.0, 4.0),
                       static_cast<double>(alphabet.y_min() + 1),
                       static_cast<double>(alphabet.y_max() - 1));
    sigma[c] = log_uniform(rng, kMinStddev, 16.0);
  }
  return MixtureParams::make({w.data(), static_cast<std::size_t>(k)},
                             {mu.data(), static_cast<std::size_t>(k)},
                             {sigma.data(), static_cast<std::size_t>(k)});
}

}  // namespace

Workload generate_workload(const WorkloadSpec& spec) {
  const SymbolAlphabet alphabet = spec.alphabet();
  std::mt19937_64 rng(spec.seed);

  Workload out;
  out.symbols.reserve(spec.symbol_count);
  out.params.reserve(spec.symbol_count);

  const std::uint32_t slot_mask = alphabet.total_freq() - 1;
  for (std::uint32_t i = 0; i < spec.symbol_count; ++i) {
    MixtureParams params = draw_mixture(rng, spec.components, alphabet);
    const MixtureParams coding = params.quantized_for_coding();

    // Inverse-transform over the quantized boundary function: a uniform
    // slot lands in bin j with probability freq_j / m, exactly the
    // distribution the codecs charge for.
    const std::uint32_t slot = static_cast<std::uint32_t>(rng()) & slot_mask;
    const std::uint32_t j = search_slot(
        [&](std::uint32_t b) {
          return quantized_boundary(coding, alphabet, b, spec.kind);
        },
        alphabet.size(), slot);

    out.symbols.push_back(alphabet.y_min() + static_cast<std::int32_t>(j));
    out.params.push_back(std::move(params));
  }
  return out;
}

GsmWorkload generate_gsm_workload(const WorkloadSpec& spec,
                                  const ScaleTable& table) {
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ull);

  GsmWorkload out;
  out.symbols.reserve(spec.symbol_count);
  out.means.reserve(spec.symbol_count);
  out.sigmas.reserve(spec.symbol_count);

  const std::uint32_t slot_mask =
      (1u << static_cast<unsigned>(table.precision_bits())) - 1;
  for (std::uint32_t i = 0; i < spec.symbol_count; ++i) {
    const double mu = normal(rng, 0.0, 4.0);
    const double sigma = log_uniform(rng, kMinStddev, 16.0);

    const double mu_coding = static_cast<double>(static_cast<float>(mu));
    const int s = table.scale_index(static_cast<double>(static_cast<float>(sigma)));
    const auto row = table.row(s);
    const std::int32_t bound = table.residual_bound(s);

    const std::uint32_t slot = static_cast<std::uint32_t>(rng()) & slot_mask;
    const std::uint32_t j = search_slot(
        [&](std::uint32_t b) { return row[b]; },
        static_cast<std::uint32_t>(row.size() - 1), slot);
    const std::int32_t residual = static_cast<std::int32_t>(j) - bound;

    out.symbols.push_back(static_cast<std::int32_t>(
        std::llround(mu_coding) + residual));
    out.means.push_back(mu);
    out.sigmas.push_back(sigma);
  }
  return out;
}

}  // namespace gmmrans
