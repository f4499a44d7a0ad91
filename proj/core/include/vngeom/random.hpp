#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace vngeom {

/// Seeded generator used by every randomized routine. Uniform draws are derived
/// from raw engine output so that a given seed reproduces the same stream on any
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

  /// Standard normal via Box-Muller.
  double normal();
  std::complex<double> complex_normal() { return {normal(), normal()}; }

  /// Exponential(1); Dirichlet weights are normalized exponentials.
  double exponential();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace vngeom
