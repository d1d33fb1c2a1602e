#pragma once

#include <cstddef>

// Hot inner loops behind a runtime-dispatched table: a scalar reference
// implementation (always present) and an AVX2+FMA variant selected when the
// CPU supports it.  LORENTZ_KERNEL=scalar|avx2 in the environment forces a
// lane.  The two lanes are equivalence-tested; results agree to ~1e-14
// relative but are not bit-identical across lanes.

namespace lorentz::kern {

struct Ops {
  const char* name;
  // sum_i w[i] * exp(s * x[i]); w == nullptr means unit weights.
  // Neumaier-compensated in a fixed order per lane.
  double (*weighted_exp_sum)(const double* w, const double* x, std::size_t n,
                             double s);
  // max_i w[i] * exp(s * x[i]) for nonnegative w (0 when n == 0).
  double (*max_weighted_exp)(const double* w, const double* x, std::size_t n,
                             double s);
  // compensated plain sum
  double (*sum)(const double* v, std::size_t n);
};

const Ops& scalar_ops();
const Ops* avx2_ops();   // nullptr when unsupported on this CPU
const Ops& active_ops();

inline double weighted_exp_sum(const double* w, const double* x, std::size_t n,
                               double s) {
  return active_ops().weighted_exp_sum(w, x, n, s);
}
inline double max_weighted_exp(const double* w, const double* x, std::size_t n,
                               double s) {
  return active_ops().max_weighted_exp(w, x, n, s);
}
inline double sum(const double* v, std::size_t n) {
  return active_ops().sum(v, n);
}

}  // namespace lorentz::kern
