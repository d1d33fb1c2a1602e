#pragma once

#include <cstdint>
#include <random>

#include "lorentz/rearrange.hpp"

namespace lorentz {

// Deterministic corpus generator.  Distributions are hand-rolled on top of
// mt19937_64 so outputs are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::uint64_t uniform_index(std::uint64_t n) { return gen_() % n; }

  // Pareto with the given tail index (heavy-tailed moduli), min value 1
  double pareto(double index) {
    double u = uniform01();
    if (u >= 1.0) u = 0.999999;
    return std::pow(1.0 - u, -1.0 / index);
  }

  Complex unit_phase() {
    double ang = 6.283185307179586477 * uniform01();
    return {std::cos(ang), std::sin(ang)};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lorentz
