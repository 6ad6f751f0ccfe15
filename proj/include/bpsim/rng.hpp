#pragma once

#include <cstdint>
#include <random>

namespace bpsim {

/// Seeded random stream. Identical (seed, stream_id) pairs reproduce the
/// identical draw sequence; distinct stream_ids give streams suitable for
/// parallel replicates. Every sampler below consumes the underlying engine
/// in a fixed, platform-independent order (mt19937_64 is fully specified by
/// the standard and no std::*_distribution is used), so results are
/// bit-reproducible everywhere.
///
/// Sampler algorithms:
///   uniform01          53-bit mantissa scaling, open interval (0,1)
///   normal             inverse CDF, Acklam's rational approximation plus
///                      one Halley correction step (~1e-15 relative)
///   exponential        inverse CDF, -ln(U)/rate
///   beta_one           Beta(1,b) by inverse CDF, 1 - U^(1/b)
///   gamma              Marsaglia & Tsang (2000) squeeze method; shape < 1
///                      via Gamma(shape+1) * U^(1/shape)
///   beta               Gamma ratio; log-space path for tiny shapes
///   poisson            Knuth product-of-uniforms; large means split
///                      additively into chunks of mean <= 30
///   negative_binomial  gamma-Poisson mixture (see likelihood module for
///                      the pi-parameterization convention)
class RngStream {
public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id & 0xffffffffu),
                      static_cast<std::uint32_t>(stream_id >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Uniform draw in the open interval (0,1).
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
  }

  double normal();
  double exponential(double rate);
  double beta_one(double b);
  double gamma(double shape, double rate = 1.0);
  double beta(double a, double b);
  bool bernoulli(double p) { return uniform01() < p; }
  long poisson(double mean);
  long negative_binomial(double r, double pi);

private:
  double gamma_unit_rate(double shape);

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// Standard normal quantile (Acklam rational approximation with one Halley
/// refinement). Exposed for direct testing.
double normal_quantile(double p);

}  // namespace bpsim
