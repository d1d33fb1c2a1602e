#pragma once

#include <vector>

#include "lorentz/numerics.hpp"
#include "lorentz/rearrange.hpp"

namespace lorentz {

// Parameter tuple selecting a quasi-norm.  Infinity sentinels are the IEEE
// infinity.  inner_alpha is the Cesaro exponent of the starred norms.
struct NormParams {
  double p = 2.0;
  double q = 2.0;
  double tau = kInf;
  double inner_alpha = 2.0;
  double tail_rel_tol = 1e-9;  // certified-tail effort for infinite sums

  double conjugate() const;  // p' = p/(p-1), requires p > 1
};

// l_{p,q}: (sum_k (k^{1/p} a*_k)^q / k)^{1/q}; sup_k k^{1/p} a*_k for q = inf.
double lorentz_seq_norm(const Sequence& a, const NormParams& pr);

// Starred form with Cesaro means of (a*)^alpha.  The sum over k beyond the
// sequence length has closed-form terms S^{q/alpha} k^{(1/p-1/alpha)q - 1};
// it converges iff p > alpha (for q < inf), else the norm is infinite on
// nonzero input and the infinite interval is returned.
Interval lorentz_seq_star_norm(const Sequence& a, const NormParams& pr);

// L_{p,q} of a step function; exact closed form.  p = inf with q < inf
// diverges on nonzero input (returns the infinite interval's hi = inf as a
// plain double).
double lorentz_fun_norm(const DyadicStepFunction& f, const NormParams& pr);

// (int_0^1 (t^beta f*(t))^q dt/t)^{1/q}, exact piecewise power integration;
// q = inf gives sup_t t^beta f*(t).  Returns inf when the exponent makes the
// first cell divergent.  Shared by the Lorentz, grand and Hardy right sides.
double weighted_rearranged_norm(const DyadicStepFunction& f, double beta,
                                double q);

// xi_m = (int_{2^-m-1}^{2^-m} (f*)^p dt)^{1/p} for m = 0..L-1, with the
// leftover mass on [0, 2^-L] appended as one extra entry so that
// sum xi^p equals the exact L_p mass.
std::vector<double> xi_coefficients(const DyadicStepFunction& f, double p);

// l_{q,tau} quasi-norm (with the 1/k weight) of the xi sequence.
double lpqtau_fun_norm(const DyadicStepFunction& f, const NormParams& pr);

// Lambda_{p,q,tau}: (sum_k (k^{1/q} sup_{m>=k} ((1/m) sum_{l<=2^m}
// (a*_l)^p)^{1/p})^tau / k)^{1/tau}.  Finite on nonzero sequences only for
// p < q (tau < inf); the infinite interval is returned otherwise.
Interval lambda_norm(const Sequence& a, const NormParams& pr);

// The inner sup of the Lambda norm at block index k (exposed for the dyadic
// chain checks): sup_{m>=k} ((1/m) sum_{l<=2^m} (a*_l)^p)^{1/p}.
double lambda_block_sup(const std::vector<double>& prefix_pow, std::size_t n,
                        double p, std::uint64_t k);

}  // namespace lorentz
