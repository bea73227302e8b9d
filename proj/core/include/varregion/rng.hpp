#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "varregion/types.hpp"

namespace varregion {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a of a stream name.
std::uint64_t stream_id(std::string_view name);

/// Seed for trial `trial` of stream `name` under campaign seed `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view name, std::uint64_t trial);

/// mt19937_64 with distributions computed from raw 64-bit draws, so a seed
/// produces the same sequence on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  /// Integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Modulus uniform in [rmin, rmax], argument uniform in [-pi, pi).
  Cx polar(double rmin, double rmax);

 private:
  std::mt19937_64 engine_;
};

}  // namespace varregion
