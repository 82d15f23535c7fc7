#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmmrans/bench.hpp"
#include "gmmrans/errors.hpp"
#include "gmmrans/flash_codec.hpp"
#include "gmmrans/table_codec.hpp"

namespace gmmrans::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

ApproximatorKind parse_kind(const std::string& name) {
  const auto kind = approximator_from_name(name);
  if (!kind) {
    throw CLI::ValidationError("--approx",
                               "expected one of exact|polya|as|logistic");
  }
  return *kind;
}

struct EncodeInput {
  SymbolAlphabet alphabet;
  ApproximatorKind kind;
  std::vector<std::int32_t> symbols;
  std::vector<MixtureParams> params;
};

EncodeInput load_encode_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;

  const auto& a = j.at("alphabet");
  SymbolAlphabet alphabet(a.at("y_min").get<int>(), a.at("y_max").get<int>(),
                          a.at("precision_bits").get<int>());
  const auto kind = approximator_from_name(j.value("approx", "logistic"));
  if (!kind) throw std::runtime_error("unknown approx name in input");

  EncodeInput input{alphabet, *kind, {}, {}};
  input.symbols = j.at("symbols").get<std::vector<std::int32_t>>();
  for (const auto& p : j.at("params")) {
    const auto w = p.at("w").get<std::vector<double>>();
    const auto mu = p.at("mu").get<std::vector<double>>();
    const auto sigma = p.at("sigma").get<std::vector<double>>();
    input.params.push_back(MixtureParams::make(w, mu, sigma));
  }
  if (input.params.size() != input.symbols.size()) {
    throw std::runtime_error("params/symbols length mismatch in input");
  }
  return input;
}

int cmd_bench(const WorkloadSpec& spec, const std::string& codec_sel,
              int repeats, int threads, const std::string& out_path) {
  BenchOptions options;
  options.repeats = repeats;
  options.threads = threads;
  if (codec_sel == "all") {
    options.codecs = {Codec::Flash, Codec::Table, Codec::Gsm};
  } else {
    const auto codec = codec_from_name(codec_sel);
    if (!codec) {
      throw CLI::ValidationError("--codec",
                                 "expected one of flash|table|gsm|all");
    }
    options.codecs = {*codec};
  }

  const BenchReport report = run_bench(spec, options);
  write_text(out_path, report.to_json_string() + "\n");
  if (!report.passed()) {
    std::cerr << "bench: verification failed, report is not trustworthy\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

int cmd_encode(const std::string& in_path, const std::string& out_path,
               const std::string& codec_sel) {
  const EncodeInput input = load_encode_input(in_path);
  EncodedStream stream;
  if (codec_sel == "table") {
    stream = table_encode(input.symbols, input.params, input.alphabet,
                          input.kind);
  } else {
    stream = flash_encode(input.symbols, input.params, input.alphabet,
                          input.kind);
  }
  write_file(out_path, stream.serialize());
  return kExitOk;
}

int cmd_decode(const std::string& in_path, const std::string& out_path,
               const std::string& codec_sel) {
  const auto bytes = read_file(in_path);
  const EncodedStream stream = parse_stream(bytes);
  const std::vector<std::int32_t> symbols =
      codec_sel == "table" ? table_decode(stream) : flash_decode(stream);
  nlohmann::json j;
  j["symbols"] = symbols;
  write_text(out_path, j.dump() + "\n");
  return kExitOk;
}

int cmd_verify(const std::string& in_path) {
  const auto bytes = read_file(in_path);
  const EncodedStream stream = parse_stream(bytes);
  const std::vector<std::int32_t> symbols = flash_decode(stream);

  const EncodedStream reencoded = flash_encode(
      symbols, stream.params, stream.header.alphabet(),
      stream.header.approximator);
  if (reencoded.serialize() != bytes) {
    std::cerr << "verify: re-encoded stream differs from input\n";
    return kExitVerifyFailure;
  }
  std::cout << "verify: ok (" << symbols.size() << " symbols, "
            << stream.payload.size() << " payload bytes)\n";
  return kExitOk;
}

int cmd_accuracy(const std::string& out_path, double x_min, double x_max,
                 double step) {
  std::ostringstream csv;
  csv << "kind,x_min,x_max,step,max_abs_err,mean_abs_err\n";
  for (int code = 0; code < kApproximatorKindCount; ++code) {
    const auto kind = static_cast<ApproximatorKind>(code);
    long double max_err = 0.0L;
    long double sum_err = 0.0L;
    std::uint64_t count = 0;
    for (double x = x_min; x <= x_max + 0.5 * step; x += step) {
      const long double got = std_normal_cdf(x, kind);
      const long double want = std_normal_cdf_reference(x);
      const long double err = got >= want ? got - want : want - got;
      if (err > max_err) max_err = err;
      sum_err += err;
      ++count;
    }
    csv << approximator_name(kind) << ',' << x_min << ',' << x_max << ','
        << step << ',' << static_cast<double>(max_err) << ','
        << static_cast<double>(sum_err / static_cast<long double>(count))
        << '\n';
  }
  write_text(out_path, csv.str());
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Gaussian-mixture rANS coder: search-based codec, "
               "table baselines, and measurement harness"};
  app.require_subcommand(1);

  // bench
  auto* bench = app.add_subcommand("bench", "Run codecs on a synthetic "
                                            "workload and report JSON");
  std::string codec_sel = "all";
  std::string approx = "logistic";
  WorkloadSpec spec;
  int repeats = 10;
  int threads = 1;
  std::string bench_out;
  bench->add_option("--codec", codec_sel, "flash|table|gsm|all");
  bench->add_option("--approx", approx, "exact|polya|as|logistic");
  bench->add_option("--k", spec.components, "mixture components (1..4)");
  bench->add_option("--alphabet", spec.alphabet_size, "alphabet size N");
  bench->add_option("--precision", spec.precision_bits, "quantizer bits P (8..16)");
  bench->add_option("--symbols", spec.symbol_count, "workload symbol count");
  bench->add_option("--seed", spec.seed, "workload seed");
  bench->add_option("--repeats", repeats, "timing repeats (median)");
  bench->add_option("--chunk", spec.chunk, "symbols per coded chunk");
  bench->add_option("--threads", threads, "worker threads over chunks");
  bench->add_option("--out", bench_out, "report path (default stdout)");

  // encode
  auto* encode = app.add_subcommand("encode", "Encode a params+symbols JSON "
                                              "file into a stream");
  std::string enc_in, enc_out, enc_codec = "flash";
  encode->add_option("--in", enc_in, "input JSON")->required();
  encode->add_option("--out", enc_out, "output stream path")->required();
  encode->add_option("--codec", enc_codec, "flash|table (same bytes)");

  // decode
  auto* decode = app.add_subcommand("decode", "Decode a stream back to "
                                              "symbols JSON");
  std::string dec_in, dec_out, dec_codec = "flash";
  decode->add_option("--in", dec_in, "input stream")->required();
  decode->add_option("--out", dec_out, "output JSON (default stdout)");
  decode->add_option("--codec", dec_codec, "flash|table");

  // verify
  auto* verify = app.add_subcommand("verify", "Decode, re-encode, and compare "
                                              "a stream byte for byte");
  std::string ver_in;
  verify->add_option("--in", ver_in, "stream to verify")->required();

  // accuracy
  auto* accuracy = app.add_subcommand("accuracy", "CDF approximation error "
                                                  "grid as CSV");
  std::string acc_out;
  double acc_xmin = -8.0, acc_xmax = 8.0, acc_step = 1e-3;
  accuracy->add_option("--out", acc_out, "CSV path (default stdout)");
  accuracy->add_option("--xmin", acc_xmin, "grid start");
  accuracy->add_option("--xmax", acc_xmax, "grid end");
  accuracy->add_option("--step", acc_step, "grid step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e);
      return kExitOk;
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bench->parsed()) {
      spec.kind = parse_kind(approx);
      return cmd_bench(spec, codec_sel, repeats, threads, bench_out);
    }
    if (encode->parsed()) return cmd_encode(enc_in, enc_out, enc_codec);
    if (decode->parsed()) return cmd_decode(dec_in, dec_out, dec_codec);
    if (verify->parsed()) return cmd_verify(ver_in);
    if (accuracy->parsed()) {
      return cmd_accuracy(acc_out, acc_xmin, acc_xmax, acc_step);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TruncatedStream& e) {
    std::cerr << "TruncatedStream: " << e.what() << "\n";
    return kExitVerifyFailure;
  } catch (const HeaderMismatch& e) {
    std::cerr << "HeaderMismatch: " << e.what() << "\n";
    return kExitVerifyFailure;
  } catch (const SymbolOutOfAlphabet& e) {
    std::cerr << "SymbolOutOfAlphabet: " << e.what() << "\n";
    return kExitVerifyFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad input file: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}

}  // namespace gmmrans::cli
