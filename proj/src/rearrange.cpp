#include "lorentz/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lorentz/numerics.hpp"

namespace lorentz {

namespace {

std::vector<double> sorted_moduli(const std::vector<Complex>& v) {
  std::vector<double> m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    m[i] = std::abs(v[i]);
    if (!std::isfinite(m[i]))
      throw std::invalid_argument("non-finite entry modulus");
  }
  std::stable_sort(m.begin(), m.end(), std::greater<double>());
  return m;
}

}  // namespace

Sequence::Sequence(std::vector<Complex> entries)
    : entries_(std::move(entries)), rearranged_(sorted_moduli(entries_)) {}

Sequence Sequence::from_reals(const std::vector<double>& reals) {
  std::vector<Complex> e(reals.size());
  for (std::size_t i = 0; i < reals.size(); ++i) e[i] = reals[i];
  return Sequence(std::move(e));
}

bool Sequence::zero() const {
  return rearranged_.empty() || rearranged_.front() == 0.0;
}

Sequence decreasing_rearrangement(const Sequence& a) {
  std::vector<Complex> e(a.rearranged().begin(), a.rearranged().end());
  return Sequence(std::move(e));
}

DyadicStepFunction::DyadicStepFunction(int level, std::vector<Complex> values)
    : level_(level), values_(std::move(values)) {
  if (level < 0 || level > 26)
    throw std::invalid_argument("level out of range [0, 26]");
  if (values_.size() != (std::size_t{1} << level))
    throw std::invalid_argument("value count must be 2^level");
  rearranged_ = sorted_moduli(values_);
}

DyadicStepFunction DyadicStepFunction::constant(int level, Complex c) {
  return DyadicStepFunction(level,
                            std::vector<Complex>(std::size_t{1} << level, c));
}

bool DyadicStepFunction::zero() const { return rearranged_.front() == 0.0; }

double DyadicStepFunction::rearranged_at(double t) const {
  if (t < 0.0) throw std::invalid_argument("rearranged_at: t < 0");
  if (t >= 1.0) return 0.0;
  auto idx = static_cast<std::size_t>(t * static_cast<double>(cells()));
  if (idx >= cells()) idx = cells() - 1;
  return rearranged_[idx];
}

double DyadicStepFunction::cut_value(int k) const {
  if (k < 0 || k > level_)
    throw std::invalid_argument("cut finer than grid (need 0 <= k <= level)");
  return rearranged_[(cells() >> k) - 1];
}

double DyadicStepFunction::distribution(double lambda) const {
  if (lambda < 0.0 || std::isnan(lambda))
    throw std::invalid_argument("distribution: lambda < 0");
  // rearranged_ is sorted descending; entries > lambda form a prefix
  auto it = std::lower_bound(rearranged_.begin(), rearranged_.end(), lambda,
                             std::greater<double>());
  return static_cast<double>(it - rearranged_.begin()) /
         static_cast<double>(cells());
}

double DyadicStepFunction::lp_norm(double p) const {
  if (std::isinf(p)) return rearranged_.front();
  if (!(p > 0)) throw std::invalid_argument("lp_norm: p <= 0");
  CompensatedSum s;
  for (double v : rearranged_) s.add(std::pow(v, p));
  return std::pow(s.value() / static_cast<double>(cells()), 1.0 / p);
}

double DyadicStepFunction::l2_norm_sq() const {
  CompensatedSum s;
  for (const Complex& v : values_) s.add(std::norm(v));
  return s.value() / static_cast<double>(cells());
}

DyadicStepFunction step_rearrangement(const DyadicStepFunction& f) {
  std::vector<Complex> v(f.rearranged().begin(), f.rearranged().end());
  return DyadicStepFunction(f.level(), std::move(v));
}

double distribution_function(const DyadicStepFunction& f, double lambda) {
  return f.distribution(lambda);
}

std::pair<DyadicStepFunction, DyadicStepFunction> split_at_level(
    const DyadicStepFunction& f, LevelCut cut) {
  double c = f.cut_value(cut.k);
  std::vector<Complex> f0(f.cells()), f1(f.cells());
  const auto& vals = f.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double m = std::abs(vals[i]);
    if (m >= c && m > 0.0) {
      Complex phase = vals[i] / m;
      f0[i] = phase * (m - c);
      f1[i] = vals[i] - f0[i];
    } else {
      f0[i] = 0.0;
      f1[i] = vals[i];
    }
  }
  return {DyadicStepFunction(f.level(), std::move(f0)),
          DyadicStepFunction(f.level(), std::move(f1))};
}

double cesaro_mean(const Sequence& a, double alpha, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("cesaro_mean: k = 0");
  if (!(alpha >= 1.0)) throw std::invalid_argument("cesaro_mean: alpha < 1");
  const auto& star = a.rearranged();
  std::uint64_t m = std::min<std::uint64_t>(k, star.size());
  CompensatedSum s;
  for (std::uint64_t i = 0; i < m; ++i) s.add(std::pow(star[i], alpha));
  return std::pow(s.value() / static_cast<double>(k), 1.0 / alpha);
}

}  // namespace lorentz
