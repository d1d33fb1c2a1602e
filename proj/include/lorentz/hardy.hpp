#pragma once

#include "lorentz/norms.hpp"
#include "lorentz/report.hpp"
#include "lorentz/rearrange.hpp"

namespace lorentz {

struct HardyParams {
  double alpha = 0.5;
  double r = 1.0;
  double q = 1.0;
};

// LHS integrals of the two Hardy inequalities, by exact first-cell power
// integration plus adaptive Gauss-Kronrod on the remaining cells.
// head: (int_0^1 (t^-alpha (int_0^t f*^r)^{1/r})^q dt/t)^{1/q}, inf when
// alpha >= 1/r on nonzero f.  tail: always finite; q = inf gives the sup
// form with per-cell closed-form maximization.
double hardy_head_lhs(const DyadicStepFunction& f, double r, double q,
                      double alpha);
double hardy_tail_lhs(const DyadicStepFunction& f, double r, double q,
                      double alpha);

// Proposition-level checks with constant (r*alpha)^{-1/r}.
CheckReport hardy_head_check(const DyadicStepFunction& f,
                             const HardyParams& hp, double tol = 1e-10);
CheckReport hardy_tail_check(const DyadicStepFunction& f,
                             const HardyParams& hp, double tol = 1e-10);

struct GrandHardyOptions {
  int eps_grid = 65;
  double refine_tol = 1e-8;
  double eps_min = 1e-9;
  double tol = 1e-10;
};

// Grand forms of the two Hardy inequalities over the eps window (0, 1/r),
// obtained by letting alpha = eps range over the window and weighting by
// powers of eps.  Both sides range over the same window, keeping each check
// a consequence of the per-eps inequality:
//   head: inf_eps eps^-theta * HeadLHS(eps)
//           <= r^{-1/r} * inf_eps eps^-theta1 * ||t^{1/r-eps} f*||_q,
//   tail: sup_eps eps^theta1 * TailLHS(eps)
//           <= r^{-1/r} * sup_eps eps^theta  * ||t^{1/r+eps} f*||_q,
// with theta1 = theta + 1/r.
CheckReport hardy_grand_head_check(const DyadicStepFunction& f, double r,
                                   double q, double theta,
                                   const GrandHardyOptions& opt = {});
CheckReport hardy_grand_tail_check(const DyadicStepFunction& f, double r,
                                   double q, double theta,
                                   const GrandHardyOptions& opt = {});

}  // namespace lorentz
