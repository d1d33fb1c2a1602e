#pragma once

#include <string>
#include <vector>

#include "lorentz/norms.hpp"
#include "lorentz/numerics.hpp"
#include "lorentz/rearrange.hpp"

namespace lorentz {

struct GrandParams {
  double theta = 0.0;
  NormParams base;
  int eps_grid = 2048;       // logarithmically spaced samples of (0,1)
  double refine_tol = 1e-8;  // relative x-tolerance of the sup refinement
  double eps_min = 1e-9;
  double eps_max = 1.0 - 1e-9;
};

struct EpsProfile {
  std::vector<double> eps;
  std::vector<double> phi;
  double argmax = 0.0;
  double sup = 0.0;
  bool at_lower = false;
  bool at_upper = false;
};

struct GrandResult {
  Interval value;  // infinite when the eps-sup diverges
  EpsProfile profile;
  std::string note;
};

// Per-eps evaluator for the grand sequence star norm: precomputes the Cesaro
// weights once, then each phi(eps) costs one kernel reduction plus a
// certified tail bracket.
class GrandSeqStarEval {
 public:
  GrandSeqStarEval(const Sequence& a, const NormParams& base);

  // inner sums diverge on eps <= gap, making the eps-sup infinite
  bool divergent() const { return divergent_; }
  double gap() const { return gap_; }

  Interval inner(double eps) const;  // the eps-shifted norm
  Interval phi(double theta, double eps) const {
    return inner(eps).scaled(std::pow(eps, theta));
  }

 private:
  std::size_t n_ = 0;
  double q_ = 2.0, invp_ = 0.5, alpha_ = 2.0, gap_ = 0.0, big_ = 0.0;
  double tail_tol_ = 1e-9;
  bool zero_ = true, divergent_ = false;
  std::vector<double> w_, lnk_;
};

// Per-eps evaluator for the grand function norm (exact closed form per eps).
class GrandFunEval {
 public:
  GrandFunEval(const DyadicStepFunction& f, const NormParams& base);
  Interval inner(double eps) const;
  Interval phi(double theta, double eps) const {
    return inner(eps).scaled(std::pow(eps, theta));
  }

 private:
  std::size_t n_ = 0;
  double q_ = 2.0, invp_ = 0.5;
  bool zero_ = true;
  std::vector<double> w_, lnt_;
};

GrandResult grand_fun_norm(const DyadicStepFunction& f, const GrandParams& gp);
GrandResult grand_seq_star_norm(const Sequence& a, const GrandParams& gp);

// Stationary point (1/p - 1/q)/ln n of eps^{1/p-1/q} n^-eps, clamped into
// (0,1); rejects n < 2.
double eps_argmax_analytic(std::uint64_t n, double p, double q);

// Shared driver: sup of phi over the eps window with grid + refinement.
GrandResult grand_sup(const std::function<Interval(double)>& phi,
                      const GrandParams& gp);

}  // namespace lorentz
