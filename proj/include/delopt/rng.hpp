#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace delopt {

/// Seeded random source with independent, addressable streams.
///
/// Every logical worker owns exactly one stream; the (seed, stream,
/// draw-index) triple determines each draw, independent of platform.
/// All derived draws (uniforms, gaussians, bounded indices) are built
/// directly on the mt19937_64 output so no implementation-defined
/// distribution code is involved.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream), eng_(mix(seed, stream)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Fresh generator for a derived stream (same seed, shifted stream id).
  SampleRng substream(std::uint64_t offset) const {
    return SampleRng(seed_, stream_ + offset);
  }

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1); never returns an exact endpoint.
  double uniform01_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (pair cached).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01_open();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  /// Uniform integer in [0, n). Multiply-shift; slight modulo bias is
  /// below 2^-64 and irrelevant for sampling datasets.
  std::int64_t uniform_index(std::int64_t n) {
    return static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(next_u64()) *
         static_cast<unsigned __int128>(n)) >>
        64);
  }

  /// Stateless 64-bit mix (splitmix64 finalizer), usable for counter-based
  /// draws such as per-t delay samples.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace delopt
