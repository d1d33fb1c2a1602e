#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace lorentz {

using Complex = std::complex<double>;

// Finite complex sequence with its non-increasing rearrangement of moduli
// precomputed.  Immutable after construction.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<Complex> entries);
  static Sequence from_reals(const std::vector<double>& reals);

  std::size_t size() const { return entries_.size(); }
  bool zero() const;
  const std::vector<Complex>& entries() const { return entries_; }
  // a*: moduli sorted non-increasingly (stable sort on the input order)
  const std::vector<double>& rearranged() const { return rearranged_; }

 private:
  std::vector<Complex> entries_;
  std::vector<double> rearranged_;
};

Sequence decreasing_rearrangement(const Sequence& a);

// Piecewise-constant function on the 2^level equal cells of [0,1); value i is
// held on [i/N, (i+1)/N).  Immutable after construction.
class DyadicStepFunction {
 public:
  DyadicStepFunction(int level, std::vector<Complex> values);
  static DyadicStepFunction constant(int level, Complex c);

  int level() const { return level_; }
  std::size_t cells() const { return values_.size(); }
  bool zero() const;
  const std::vector<Complex>& values() const { return values_; }
  // f* cell values, non-increasing
  const std::vector<double>& rearranged() const { return rearranged_; }

  // f*(t) = inf{ lambda : D_f(lambda) <= t }; t in [0,1], f*(1) = 0.
  double rearranged_at(double t) const;
  // cut level at tau = 2^-k: the (N*tau)-th largest cell value, i.e. the
  // value of f* on the cell ending at tau.  k = 0 cuts at the smallest
  // modulus, so constant functions shed nothing at any cut.
  double cut_value(int k) const;

  // D_f(lambda) = (cells with modulus > lambda) / N; rejects lambda < 0.
  double distribution(double lambda) const;

  double lp_norm(double p) const;  // exact; p = inf gives the sup
  double l2_norm_sq() const;

 private:
  int level_ = 0;
  std::vector<Complex> values_;
  std::vector<double> rearranged_;
};

DyadicStepFunction step_rearrangement(const DyadicStepFunction& f);

double distribution_function(const DyadicStepFunction& f, double lambda);

// Cut measure tau = 2^-k; requires 0 <= k <= level of the function it cuts.
struct LevelCut {
  int k = 1;
};

// Level-cut decomposition f = f0 + f1 (phase preserving): on cells where
// |f| >= f*(tau) the excess above f*(tau) goes to f0; elsewhere f0 = 0.
// f1 = f - f0 exactly.
std::pair<DyadicStepFunction, DyadicStepFunction> split_at_level(
    const DyadicStepFunction& f, LevelCut cut);

// ((1/k) * sum_{m<=min(k,n)} (a*_m)^alpha)^(1/alpha); rejects k = 0, alpha < 1.
double cesaro_mean(const Sequence& a, double alpha, std::uint64_t k);

}  // namespace lorentz
