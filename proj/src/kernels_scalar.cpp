#include <cmath>

#include "lorentz/kernels.hpp"

namespace lorentz::kern {
namespace {

double weighted_exp_sum_scalar(const double* w, const double* x, std::size_t n,
                               double s) {
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double term = std::exp(s * x[i]);
    if (w) term *= w[i];
    double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double max_weighted_exp_scalar(const double* w, const double* x, std::size_t n,
                               double s) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::exp(s * x[i]);
    if (w) v *= w[i];
    if (v > best) best = v;
  }
  return best;
}

double sum_scalar(const double* v, std::size_t n) {
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double t = sum + v[i];
    if (std::fabs(sum) >= std::fabs(v[i]))
      comp += (sum - t) + v[i];
    else
      comp += (v[i] - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", weighted_exp_sum_scalar,
                       max_weighted_exp_scalar, sum_scalar};
  return ops;
}

}  // namespace lorentz::kern
