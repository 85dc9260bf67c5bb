#pragma once

// Deterministic pseudorandom helpers. Distribution code lives here rather than
// in <random> so that seeded output is identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "toricfan/endo.hpp"
#include "toricfan/exact.hpp"

namespace toricfan {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform on [0, 1).
  double uniform_real();
  /// Modulus uniform in [0.5, 2], phase uniform in [-pi, pi).
  Complex unit_scale_complex();
  std::vector<Complex> unit_scale_point(std::size_t length);

 private:
  std::mt19937_64 engine_;
};

}  // namespace toricfan
