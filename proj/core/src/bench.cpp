#include "gmmrans/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include <json.hpp>

#include "gmmrans/flash_codec.hpp"
#include "gmmrans/table_codec.hpp"

namespace gmmrans {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

struct ChunkRange {
  std::size_t begin;
  std::size_t end;
};

std::vector<ChunkRange> split_chunks(std::size_t total, std::uint32_t chunk) {
  std::vector<ChunkRange> ranges;
  const std::size_t step = chunk == 0 ? total : chunk;
  if (total == 0) {
    ranges.push_back({0, 0});
    return ranges;
  }
  for (std::size_t at = 0; at < total; at += step) {
    ranges.push_back({at, std::min(total, at + step)});
  }
  return ranges;
}

/// Runs fn(chunk_index) for every chunk, optionally across worker
/// threads (contiguous chunk groups per thread), and returns wall
/// milliseconds for the whole section.
double timed_over_chunks(std::size_t chunk_count, int threads,
                         const std::function<void(std::size_t)>& fn) {
  const auto start = Clock::now();
  if (threads <= 1 || chunk_count <= 1) {
    for (std::size_t c = 0; c < chunk_count; ++c) fn(c);
  } else {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), chunk_count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunk_count; c += workers) fn(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

double symbols_per_sec(std::size_t n, double ms) {
  return ms > 0.0 ? static_cast<double>(n) / (ms / 1000.0) : 0.0;
}

}  // namespace

std::string_view codec_name(Codec codec) {
  switch (codec) {
    case Codec::Flash: return "flash";
    case Codec::Table: return "table";
    case Codec::Gsm: return "gsm";
  }
  return "unknown";
}

std::optional<Codec> codec_from_name(std::string_view name) {
  if (name == "flash") return Codec::Flash;
  if (name == "table") return Codec::Table;
  if (name == "gsm") return Codec::Gsm;
  return std::nullopt;
}

bool BenchReport::passed() const {
  if (flash_table_payload_identical.has_value() &&
      !*flash_table_payload_identical) {
    return false;
  }
  return std::all_of(codecs.begin(), codecs.end(),
                     [](const CodecResult& r) { return r.round_trip_exact; });
}

std::string BenchReport::to_json_string(int indent) const {
  nlohmann::json j;
  j["spec"] = {
      {"symbol_count", spec.symbol_count},
      {"k", spec.components},
      {"alphabet", spec.alphabet_size},
      {"precision", spec.precision_bits},
      {"approx", std::string(approximator_name(spec.kind))},
      {"seed", spec.seed},
      {"chunk", spec.chunk},
  };
  j["repeats"] = repeats;
  j["threads"] = threads;
  j["chunk_count"] = chunk_count;
  j["environment"] = environment;
  for (const CodecResult& r : codecs) {
    j["codecs"][r.codec] = {
        {"encode_ms", r.encode_ms},
        {"decode_ms", r.decode_ms},
        {"encode_symbols_per_sec", r.encode_symbols_per_sec},
        {"decode_symbols_per_sec", r.decode_symbols_per_sec},
        {"payload_bits", r.payload_bits},
        {"entropy_bits", r.entropy_bits},
        {"bits_per_symbol_overhead", r.bits_per_symbol_overhead},
        {"init_ms", r.init_ms},
        {"round_trip_exact", r.round_trip_exact},
    };
  }
  if (flash_table_payload_identical.has_value()) {
    j["equivalence"]["flash_table_payload_identical"] =
        *flash_table_payload_identical;
  }
  j["passed"] = passed();
  return j.dump(indent);
}

BenchReport run_bench(const WorkloadSpec& spec, const BenchOptions& options) {
  BenchReport report;
  report.spec = spec;
  report.repeats = options.repeats;
  report.threads = options.threads;
  report.environment =
      std::string("compiler ") + __VERSION__ +
      "; timing covers entropy coding only; workload is a synthetic "
      "surrogate sized like one latent tensor (order of magnitude only)";

  const bool want_flash =
      std::find(options.codecs.begin(), options.codecs.end(), Codec::Flash) !=
      options.codecs.end();
  const bool want_table =
      std::find(options.codecs.begin(), options.codecs.end(), Codec::Table) !=
      options.codecs.end();
  const bool want_gsm =
      std::find(options.codecs.begin(), options.codecs.end(), Codec::Gsm) !=
      options.codecs.end();

  const SymbolAlphabet alphabet = spec.alphabet();
  const int repeats = std::max(1, options.repeats);

  Workload workload;
  std::vector<ChunkRange> chunks;
  if (want_flash || want_table) {
    workload = generate_workload(spec);
    chunks = split_chunks(workload.symbols.size(), spec.chunk);
    report.chunk_count = chunks.size();
  }

  std::vector<EncodedStream> flash_streams;
  std::vector<EncodedStream> table_streams;

  const auto bench_mixture_codec = [&](Codec codec) {
    auto encode_chunk = codec == Codec::Flash ? flash_encode : table_encode;
    auto decode_chunk = codec == Codec::Flash
                            ? static_cast<std::vector<std::int32_t> (*)(
                                  const EncodedStream&)>(flash_decode)
                            : table_decode;

    std::vector<EncodedStream> streams(chunks.size());
    std::vector<double> encode_times;
    for (int rep = 0; rep < repeats; ++rep) {
      encode_times.push_back(timed_over_chunks(
          chunks.size(), options.threads, [&](std::size_t c) {
            const auto [b, e] = chunks[c];
            streams[c] = encode_chunk(
                {workload.symbols.data() + b, e - b},
                {workload.params.data() + b, e - b}, alphabet, spec.kind);
          }));
    }

    std::vector<std::vector<std::int32_t>> decoded(chunks.size());
    std::vector<double> decode_times;
    for (int rep = 0; rep < repeats; ++rep) {
      decode_times.push_back(timed_over_chunks(
          chunks.size(), options.threads,
          [&](std::size_t c) { decoded[c] = decode_chunk(streams[c]); }));
    }

    CodecResult result;
    result.codec = std::string(codec_name(codec));
    result.encode_ms = median(encode_times);
    result.decode_ms = median(decode_times);
    result.encode_symbols_per_sec =
        symbols_per_sec(workload.symbols.size(), result.encode_ms);
    result.decode_symbols_per_sec =
        symbols_per_sec(workload.symbols.size(), result.decode_ms);

    result.round_trip_exact = true;
    std::size_t at = 0;
    for (std::size_t c = 0; c < chunks.size(); ++c) {
      for (const std::int32_t v : decoded[c]) {
        if (v != workload.symbols[at++]) {
          result.round_trip_exact = false;
          break;
        }
      }
    }

    for (const auto& s : streams) {
      result.payload_bits += 8 * s.payload.size();
    }
    for (std::size_t i = 0; i < workload.symbols.size(); ++i) {
      result.entropy_bits += symbol_bits(workload.params[i], alphabet,
                                         spec.kind, workload.symbols[i]);
    }
    result.bits_per_symbol_overhead =
        workload.symbols.empty()
            ? 0.0
            : (static_cast<double>(result.payload_bits) - result.entropy_bits) /
                  static_cast<double>(workload.symbols.size());

    (codec == Codec::Flash ? flash_streams : table_streams) =
        std::move(streams);
    report.codecs.push_back(std::move(result));
  };

  if (want_flash) bench_mixture_codec(Codec::Flash);
  if (want_table) bench_mixture_codec(Codec::Table);

  if (want_flash && want_table) {
    bool identical = flash_streams.size() == table_streams.size();
    for (std::size_t c = 0; identical && c < flash_streams.size(); ++c) {
      identical = flash_streams[c].payload == table_streams[c].payload;
    }
    report.flash_table_payload_identical = identical;
  }

  if (want_gsm) {
    const auto init_start = Clock::now();
    const ScaleTable table = gsm_init(spec.precision_bits, spec.kind);
    const double init_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - init_start)
            .count();

    const GsmWorkload gsm = generate_gsm_workload(spec, table);
    const auto gsm_chunks = split_chunks(gsm.symbols.size(), spec.chunk);
    if (report.chunk_count == 0) report.chunk_count = gsm_chunks.size();

    std::vector<EncodedStream> streams(gsm_chunks.size());
    std::vector<double> encode_times;
    for (int rep = 0; rep < repeats; ++rep) {
      encode_times.push_back(timed_over_chunks(
          gsm_chunks.size(), options.threads, [&](std::size_t c) {
            const auto [b, e] = gsm_chunks[c];
            streams[c] = gsm_encode({gsm.symbols.data() + b, e - b},
                                    {gsm.means.data() + b, e - b},
                                    {gsm.sigmas.data() + b, e - b}, table);
          }));
    }

    std::vector<std::vector<std::int32_t>> decoded(gsm_chunks.size());
    std::vector<double> decode_times;
    for (int rep = 0; rep < repeats; ++rep) {
      decode_times.push_back(timed_over_chunks(
          gsm_chunks.size(), options.threads,
          [&](std::size_t c) { decoded[c] = gsm_decode(streams[c], table); }));
    }

    CodecResult result;
    result.codec = std::string(codec_name(Codec::Gsm));
    result.init_ms = init_ms;
    result.encode_ms = median(encode_times);
    result.decode_ms = median(decode_times);
    result.encode_symbols_per_sec =
        symbols_per_sec(gsm.symbols.size(), result.encode_ms);
    result.decode_symbols_per_sec =
        symbols_per_sec(gsm.symbols.size(), result.decode_ms);

    result.round_trip_exact = true;
    std::size_t at = 0;
    for (std::size_t c = 0; c < gsm_chunks.size(); ++c) {
      for (const std::int32_t v : decoded[c]) {
        if (v != gsm.symbols[at++]) {
          result.round_trip_exact = false;
          break;
        }
      }
    }

    for (const auto& s : streams) {
      result.payload_bits += 8 * s.payload.size();
    }
    for (std::size_t i = 0; i < gsm.symbols.size(); ++i) {
      result.entropy_bits +=
          gsm_symbol_bits(table, gsm.means[i], gsm.sigmas[i], gsm.symbols[i]);
    }
    result.bits_per_symbol_overhead =
        gsm.symbols.empty()
            ? 0.0
            : (static_cast<double>(result.payload_bits) - result.entropy_bits) /
                  static_cast<double>(gsm.symbols.size());

    report.codecs.push_back(std::move(result));
  }

  return report;
}

}  // namespace gmmrans
