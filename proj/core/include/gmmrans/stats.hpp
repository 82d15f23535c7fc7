#pragma once

#include <cstdint>

namespace gmmrans::stats {

// Diagnostic counters for complexity measurements. Thread-local so
// concurrent streams count independently; they never influence coding
// results.
struct Counters {
  std::uint64_t boundary_evals = 0;   // quantized_boundary calls
  std::uint64_t component_evals = 0;  // per-component CDF evaluations
  std::uint64_t table_rows_built = 0; // materialized CDF table rows

  void reset() { *this = Counters{}; }
};

Counters& counters();

}  // namespace gmmrans::stats
