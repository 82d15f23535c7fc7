#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmmrans/workload.hpp"

namespace gmmrans {

enum class Codec { Flash, Table, Gsm };

std::string_view codec_name(Codec codec);
std::optional<Codec> codec_from_name(std::string_view name);

struct BenchOptions {
  std::vector<Codec> codecs = {Codec::Flash, Codec::Table, Codec::Gsm};
  int repeats = 10; // wall times are medians over this many runs
  int threads = 1;  // worker threads over independent chunks
};

struct CodecResult {
  std::string codec;
  double encode_ms = 0.0; // median over repeats
  double decode_ms = 0.0;
  double encode_symbols_per_sec = 0.0;
  double decode_symbols_per_sec = 0.0;
  std::uint64_t payload_bits = 0;
  double entropy_bits = 0.0;
  double bits_per_symbol_overhead = 0.0;
  double init_ms = 0.0; // scale-table construction; zero for table-free codecs
  bool round_trip_exact = false;
};

/// Machine-readable benchmark outcome. Every non-timing field is a pure
/// function of the workload spec; the equivalence flags are hard
/// pass/fail and a failed flag makes the whole report a failure.
struct BenchReport {
  WorkloadSpec spec;
  int repeats = 0;
  int threads = 1;
  std::size_t chunk_count = 0;
  std::vector<CodecResult> codecs;
  // Set only when both mixture codecs ran: their payloads must match
  // byte for byte.
  std::optional<bool> flash_table_payload_identical;
  std::string environment;

  bool passed() const;
  std::string to_json_string(int indent = 2) const;
};

/// Generates the workload, runs every requested codec on it, verifies
/// round-trips and cross-codec payload equality, and reports timing.
/// Timing covers entropy coding only; generation, verification, and
/// entropy accounting run outside the timed sections.
BenchReport run_bench(const WorkloadSpec& spec, const BenchOptions& options);

}  // namespace gmmrans
