#pragma once

#include <cstdint>
#include <vector>

#include "gmmrans/gsm_codec.hpp"
#include "gmmrans/mixture.hpp"
#include "gmmrans/normal_cdf.hpp"

namespace gmmrans {

/// Synthetic workload description. Identical spec and seed always
/// produce identical symbols and parameters; the generator uses its own
/// portable draws rather than standard-library distributions.
struct WorkloadSpec {
  std::uint32_t symbol_count = 1'000'000;
  int components = 3;
  int alphabet_size = 256;
  int precision_bits = 16;
  ApproximatorKind kind = ApproximatorKind::Logistic;
  std::uint64_t seed = 1;
  std::uint32_t chunk = 65'536; // symbols per independently coded stream

  SymbolAlphabet alphabet() const {
    return SymbolAlphabet::centered(alphabet_size, precision_bits);
  }
};

struct Workload {
  std::vector<std::int32_t> symbols;
  std::vector<MixtureParams> params;
};

/// Draws per-position mixtures (flat-Dirichlet weights, means normal
/// around the alphabet center, log-uniform scales) and then samples each
/// symbol from its own quantized model by inverse-transform over the
/// boundary function, so code length matches model entropy.
Workload generate_workload(const WorkloadSpec& spec);

/// Single-Gaussian companion workload: residuals are drawn from the
/// prebuilt scale rows themselves, so every sampled symbol is codeable
/// by the scale-table codec (which has no bypass path).
struct GsmWorkload {
  std::vector<std::int32_t> symbols;
  std::vector<double> means;
  std::vector<double> sigmas;
};

GsmWorkload generate_gsm_workload(const WorkloadSpec& spec,
                                  const ScaleTable& table);

}  // namespace gmmrans
