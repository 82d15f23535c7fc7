#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gmmrans/mixture.hpp"
#include "gmmrans/stats.hpp"
#include "gmmrans/workload.hpp"
#include "oracle.hpp"

using namespace gmmrans;

namespace {

constexpr ApproximatorKind kAllKinds[] = {
    ApproximatorKind::Exact, ApproximatorKind::Polya,
    ApproximatorKind::AbramowitzStegun, ApproximatorKind::Logistic};

MixtureParams make1(double w, double mu, double sigma) {
  const double ws[] = {w};
  const double mus[] = {mu};
  const double sigmas[] = {sigma};
  return MixtureParams::make(ws, mus, sigmas);
}

}  // namespace

TEST_CASE("MixtureParams validation and normalization") {
  const double w[] = {2.0, 6.0};
  const double mu[] = {-1.0, 1.0};
  const double sigma[] = {1.0, 0.01};
  const MixtureParams p = MixtureParams::make(w, mu, sigma);
  CHECK(p.count() == 2);
  CHECK(std::abs(p.weight(0) + p.weight(1) - 1.0) <= 1e-6);
  CHECK(p.weight(0) == doctest::Approx(0.25));
  CHECK(p.stddev(1) == kMinStddev); // clamped up from 0.01

  const double w5[] = {1, 1, 1, 1, 1};
  const double m5[] = {0, 0, 0, 0, 0};
  const double s5[] = {1, 1, 1, 1, 1};
  CHECK_THROWS_AS(MixtureParams::make(w5, m5, s5), std::invalid_argument);
  const double wneg[] = {-0.5, 1.5};
  CHECK_THROWS_AS(MixtureParams::make(wneg, mu, sigma), std::invalid_argument);
  const double wnan[] = {std::nan(""), 1.0};
  CHECK_THROWS_AS(MixtureParams::make(wnan, mu, sigma), std::invalid_argument);
}

TEST_CASE("SymbolAlphabet invariants") {
  const SymbolAlphabet a(-128, 127, 16);
  CHECK(a.size() == 256);
  CHECK(a.total_freq() == 65536);
  CHECK_THROWS_AS(SymbolAlphabet(5, 5, 16), std::invalid_argument);
  CHECK_THROWS_AS(SymbolAlphabet(-128, 127, 7), std::invalid_argument);
  CHECK_THROWS_AS(SymbolAlphabet(-128, 127, 17), std::invalid_argument);
  // m > 2N violated: N=4096 needs P >= 14.
  CHECK_THROWS_AS(SymbolAlphabet(-2048, 2047, 12), std::invalid_argument);
  CHECK_NOTHROW(SymbolAlphabet(-2048, 2047, 14));
  const SymbolAlphabet c = SymbolAlphabet::centered(5, 8);
  CHECK(c.y_min() == -2);
  CHECK(c.y_max() == 2);
}

TEST_CASE("mixture_cdf reduces to the standard normal for K=1") {
  const MixtureParams p = make1(1.0, 0.0, 1.0);
  CHECK(mixture_cdf(0.0, p, ApproximatorKind::Exact) == 0.5);
}

TEST_CASE("mixture_cdf symmetric two-component example") {
  const double w[] = {0.5, 0.5};
  const double mu[] = {-1.0, 1.0};
  const double sigma[] = {1.0, 1.0};
  const MixtureParams p = MixtureParams::make(w, mu, sigma);
  for (const auto kind : kAllKinds) {
    CHECK(mixture_cdf(0.0, p, kind) == 0.5);
  }
}

TEST_CASE("mixture_cdf frozen two-component value") {
  // 0.25 * Phi(1) + 0.75 * Phi(-2), oracle-derived.
  const double w[] = {0.25, 0.75};
  const double mu[] = {0.0, 2.0};
  const double sigma[] = {1.0, 0.5};
  const MixtureParams p = MixtureParams::make(w, mu, sigma);
  CHECK(std::abs(mixture_cdf(1.0, p, ApproximatorKind::Exact) -
                 0.22739878547827014) <= 1e-12);
}

TEST_CASE("component_cdf_batch matches the scalar kernel lane by lane") {
  const double w[] = {0.2, 0.3, 0.5};
  const double mu[] = {-1.0, 0.0, 1.0};
  const double sigma[] = {1.0, 1.0, 1.0};
  const MixtureParams p = MixtureParams::make(w, mu, sigma);
  const auto batch = component_cdf_batch(0.0, p, ApproximatorKind::Exact);
  CHECK(std::abs(batch[0] - 0.8413447460685429) <= 1e-6);
  CHECK(batch[1] == 0.5);
  CHECK(std::abs(batch[2] - 0.15865525393145707) <= 1e-6);

  // Bit-equality with the scalar path on the same normalized input.
  for (const auto kind : kAllKinds) {
    for (double y : {-3.25, -0.5, 0.0, 1.75, 6.0}) {
      const auto got = component_cdf_batch(y, p, kind);
      for (int k = 0; k < p.count(); ++k) {
        CHECK(got[k] ==
              std_normal_cdf((y - p.mean(k)) / p.stddev(k), kind));
      }
    }
  }

  const double w4[] = {0.25, 0.25, 0.25, 0.25};
  const double mu4[] = {0, 0, 0, 0};
  const double s4[] = {1, 1, 1, 1};
  const auto four = component_cdf_batch(
      0.0, MixtureParams::make(w4, mu4, s4), ApproximatorKind::Logistic);
  for (int k = 0; k < 4; ++k) CHECK(four[k] == 0.5);

  // Degenerate width: the K=1 batch equals the scalar CDF bit for bit.
  const MixtureParams one = make1(1.0, 0.7, 2.3);
  for (const auto kind : kAllKinds) {
    CHECK(component_cdf_batch(1.9, one, kind)[0] ==
          std_normal_cdf((1.9 - 0.7) / 2.3, kind));
  }
}

TEST_CASE("mixture_cdf monotonicity over random grids") {
  std::mt19937_64 rng(23);
  WorkloadSpec spec;
  spec.symbol_count = 5;
  spec.alphabet_size = 64;
  spec.precision_bits = 14;
  for (const auto kind : kAllKinds) {
    spec.kind = kind;
    for (int k = 1; k <= 4; ++k) {
      spec.components = k;
      spec.seed = 100 + static_cast<std::uint64_t>(k);
      const Workload w = generate_workload(spec);
      for (const MixtureParams& p : w.params) {
        // 10^4 sorted random points across and beyond the alphabet.
        std::vector<double> ys(10'000);
        for (auto& y : ys) {
          y = (static_cast<double>(rng() >> 11) * 0x1.0p-53) * 96.0 - 48.0;
        }
        std::sort(ys.begin(), ys.end());
        double prev = -1.0;
        for (const double y : ys) {
          const double v = mixture_cdf(y, p, kind);
          CHECK(v >= prev);
          prev = v;
        }
      }
    }
  }
}

TEST_CASE("boundary quantization rule on stated CDF values") {
  // N=5 over {-2..2}, m=64.
  const double cdf_at[] = {0.1, 0.4, 0.6, 0.9};
  const std::uint32_t want[] = {0, 6, 25, 38, 57, 64};
  CHECK(boundary_from_cdf(0.0, 0, 5, 64) == want[0]);
  for (std::uint32_t j = 1; j <= 4; ++j) {
    CHECK(boundary_from_cdf(cdf_at[j - 1], j, 5, 64) == want[j]);
  }
  CHECK(boundary_from_cdf(1.0, 5, 5, 64) == want[5]);
  // Frequencies (6, 19, 13, 19, 7): all >= 1, summing to m.
  std::uint32_t sum = 0;
  const std::uint32_t freqs[] = {6, 19, 13, 19, 7};
  for (std::uint32_t j = 0; j < 5; ++j) {
    CHECK(want[j + 1] - want[j] == freqs[j]);
    sum += freqs[j];
  }
  CHECK(sum == 64);
}

TEST_CASE("quantized_boundary pins the ends for any params") {
  const SymbolAlphabet alphabet(-8, 8, 12);
  const MixtureParams p = make1(1.0, 2.0, 0.5);
  for (const auto kind : kAllKinds) {
    CHECK(quantized_boundary(p, alphabet, 0, kind) == 0);
    CHECK(quantized_boundary(p, alphabet, alphabet.size(), kind) ==
          alphabet.total_freq());
  }
}

TEST_CASE("a tight spike concentrates nearly all mass in one bin") {
  // K=1, mu=0, sigma at the floor, alphabet {-8..8}, m=2^16.
  const SymbolAlphabet alphabet(-8, 8, 16);
  const MixtureParams p = make1(1.0, 0.0, 0.11);
  const std::uint32_t n = alphabet.size();
  const std::uint32_t m = alphabet.total_freq();
  const std::uint32_t j0 = 8; // bin of symbol 0
  const std::uint32_t freq0 =
      quantized_boundary(p, alphabet, j0 + 1, ApproximatorKind::Exact) -
      quantized_boundary(p, alphabet, j0, ApproximatorKind::Exact);
  CHECK(freq0 >= m - (n - 1) - 2);
  CHECK(freq0 <= m - (n - 1));
}

TEST_CASE("quantized_boundary is strictly increasing for random models") {
  // The load-bearing invariant behind binary-search decoding.
  int pairs = 0;
  for (const auto kind : kAllKinds) {
    for (const auto& [n, p_bits] :
         std::vector<std::pair<int, int>>{{5, 8}, {16, 12}, {100, 9},
                                          {256, 16}, {1000, 12}, {4096, 16}}) {
      WorkloadSpec spec;
      spec.symbol_count = 42;
      spec.components = 1 + (pairs % 4);
      spec.alphabet_size = n;
      spec.precision_bits = p_bits;
      spec.kind = kind;
      spec.seed = 7'000 + static_cast<std::uint64_t>(pairs);
      const SymbolAlphabet alphabet = spec.alphabet();
      const Workload w = generate_workload(spec);
      for (const MixtureParams& raw : w.params) {
        const MixtureParams p = raw.quantized_for_coding();
        std::uint32_t prev = quantized_boundary(p, alphabet, 0, kind);
        for (std::uint32_t j = 1; j <= alphabet.size(); ++j) {
          const std::uint32_t b = quantized_boundary(p, alphabet, j, kind);
          CHECK(b > prev);
          prev = b;
        }
        ++pairs;
      }
    }
  }
  CHECK(pairs >= 1000);
}

TEST_CASE("quantized_boundary is deterministic") {
  WorkloadSpec spec;
  spec.symbol_count = 64;
  spec.components = 3;
  spec.alphabet_size = 64;
  spec.precision_bits = 14;
  spec.seed = 99;
  const SymbolAlphabet alphabet = spec.alphabet();
  const Workload w = generate_workload(spec);
  for (const auto kind : kAllKinds) {
    for (const MixtureParams& raw : w.params) {
      const MixtureParams p = raw.quantized_for_coding();
      for (std::uint32_t j = 0; j <= alphabet.size(); ++j) {
        CHECK(quantized_boundary(p, alphabet, j, kind) ==
              quantized_boundary(p, alphabet, j, kind));
      }
    }
  }
}

TEST_CASE("float rounding of parameters is idempotent") {
  const double w[] = {0.3333333333333333, 0.6666666666666667};
  const double mu[] = {0.1, -7.3};
  const double sigma[] = {0.11, 2.7182818284590452};
  const MixtureParams p = MixtureParams::make(w, mu, sigma);
  const MixtureParams q = p.quantized_for_coding();
  const MixtureParams q2 = q.quantized_for_coding();
  // Rounding is monotone, so the floor survives as its own f32 image.
  const double f32_floor = static_cast<double>(static_cast<float>(kMinStddev));
  for (int k = 0; k < p.count(); ++k) {
    CHECK(q.weight(k) == q2.weight(k));
    CHECK(q.mean(k) == q2.mean(k));
    CHECK(q.stddev(k) == q2.stddev(k));
    CHECK(q.stddev(k) >= f32_floor);
  }
}
