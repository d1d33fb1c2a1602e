#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace lorentz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Two-sided enclosure [lo, hi] of a nonnegative scalar.  All quantities the
// toolkit certifies (norms, tail sums, inequality sides) are nonnegative, so
// the arithmetic below only covers the monotone operations that appear.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval exact(double v) { return {v, v}; }
  static Interval infinite() { return {kInf, kInf}; }

  double mid() const {
    if (std::isinf(lo) || std::isinf(hi)) return kInf;
    return 0.5 * (lo + hi);
  }
  double width() const { return hi - lo; }
  double rel_width() const {
    double m = mid();
    return m > 0 ? width() / m : width();
  }
  bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
  bool divergent() const { return std::isinf(hi) && std::isinf(lo); }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator+(double c) const { return {lo + c, hi + c}; }
  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  // scale by a nonnegative constant
  Interval scaled(double c) const { return {lo * c, hi * c}; }
  // x -> x^e for e > 0 (monotone on [0,inf))
  Interval pow(double e) const { return {std::pow(lo, e), std::pow(hi, e)}; }
  // widen both ends by a relative slack (absorbs libm rounding)
  Interval inflated(double rel) const {
    return {lo - std::abs(lo) * rel, hi + std::abs(hi) * rel};
  }
};

inline Interval max(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Neumaier-compensated accumulation; deterministic for a fixed add order.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Certified tail of an arithmetic-progression power sum,
//     sum_{j>=0} (first + j*stride)^s,   s < -1, first > 0, stride > 0.
// Explicit terms are accumulated until the Euler-Maclaurin bracket at the
// cut point is below rel_tol relative to (partial + tail + ext_scale);
// ext_scale lets callers express "relative to a larger total".
// The returned interval is certified regardless of whether the tolerance was
// reached (the bracket is always two-sided).
Interval arith_power_tail(double s, double first, double stride,
                          double rel_tol = 1e-12, double ext_scale = 0.0);

// sum_{k>=from} k^s over integers, s < -1.
inline Interval power_tail(double s, double from, double rel_tol = 1e-12,
                           double ext_scale = 0.0) {
  return arith_power_tail(s, from, 1.0, rel_tol, ext_scale);
}

// ---------------------------------------------------------------------------
// 1-d maximization / minimization over a bounded interval: logarithmically
// spaced grid plus golden-section refinement around the incumbent.  The grid
// guards against refinement settling on a local optimum; the profile is kept
// for diagnostics and plotting.
struct SupSearchOptions {
  int grid = 2048;
  double lo = 1e-9;
  double hi = 1.0 - 1e-9;
  double refine_xtol = 1e-8;  // relative x-tolerance of the refinement
  bool minimize = false;
};

struct SupSearchResult {
  std::vector<double> grid_x;
  std::vector<double> grid_value;
  double arg = 0.0;
  double value = 0.0;
  bool at_lower = false;
  bool at_upper = false;
};

SupSearchResult sup_search(const std::function<double(double)>& f,
                           const SupSearchOptions& opt);

std::vector<double> log_grid(double lo, double hi, int n);

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod 7-15 quadrature with bisection.  rel_tol applies to
// the running estimate of each node; abs_floor stops the recursion on
// segments whose contribution is negligible.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double rel_tol = 1e-12, double abs_floor = 0.0,
                    int max_depth = 48);

}  // namespace lorentz
