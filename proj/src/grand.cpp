#include "lorentz/grand.hpp"

#include <cmath>
#include <stdexcept>

#include "lorentz/kernels.hpp"

namespace lorentz {

GrandSeqStarEval::GrandSeqStarEval(const Sequence& a, const NormParams& base) {
  if (!(base.p > 0.0) || !(base.q > 0.0) || !(base.inner_alpha >= 1.0))
    throw std::invalid_argument("invalid grand norm parameters");
  n_ = a.size();
  q_ = base.q;
  invp_ = 1.0 / base.p;
  alpha_ = base.inner_alpha;
  gap_ = invp_ - 1.0 / alpha_;
  tail_tol_ = base.tail_rel_tol;
  zero_ = a.zero();
  if (zero_) return;
  divergent_ = gap_ > 0.0;

  const auto& star = a.rearranged();
  w_.resize(n_);
  lnk_.resize(n_);
  CompensatedSum ps;
  for (std::size_t k = 1; k <= n_; ++k) {
    ps.add(std::pow(star[k - 1], alpha_));
    double ces = std::pow(ps.value() / static_cast<double>(k), 1.0 / alpha_);
    double lk = std::log(static_cast<double>(k));
    lnk_[k - 1] = lk;
    if (std::isinf(q_))
      w_[k - 1] = ces * std::pow(static_cast<double>(k), invp_);
    else
      w_[k - 1] = std::pow(ces, q_) *
                  std::pow(static_cast<double>(k), q_ * invp_ - 1.0);
  }
  big_ = ps.value();
}

Interval GrandSeqStarEval::inner(double eps) const {
  if (zero_) return Interval::exact(0.0);
  if (eps <= gap_) return Interval::infinite();
  if (std::isinf(q_)) {
    // head attains the sup: the tail values S^{1/alpha} k^{gap-eps} are
    // non-increasing past k = n and match the head at k = n
    double m = kern::max_weighted_exp(w_.data(), lnk_.data(), n_, -eps);
    return Interval::exact(m).inflated(4e-15);
  }
  double head = kern::weighted_exp_sum(w_.data(), lnk_.data(), n_, -q_ * eps);
  double s = (gap_ - eps) * q_ - 1.0;
  double w = std::pow(big_, q_ / alpha_);
  Interval tail = power_tail(s, static_cast<double>(n_ + 1), tail_tol_,
                             w > 0 ? head / w : 0.0)
                      .scaled(w);
  return (tail + head).pow(1.0 / q_).inflated(4e-15);
}

GrandFunEval::GrandFunEval(const DyadicStepFunction& f,
                           const NormParams& base) {
  if (!(base.p > 0.0) || !(base.q > 0.0))
    throw std::invalid_argument("invalid grand norm parameters");
  n_ = f.cells();
  q_ = base.q;
  invp_ = 1.0 / base.p;
  zero_ = f.zero();
  if (zero_) return;

  const auto& v = f.rearranged();
  double n = static_cast<double>(n_);
  w_.resize(n_);
  lnt_.resize(n_);
  for (std::size_t i = 1; i <= n_; ++i) {
    lnt_[i - 1] = std::log(static_cast<double>(i) / n);
    if (std::isinf(q_)) {
      w_[i - 1] = v[i - 1];
    } else {
      double next = (i < n_) ? std::pow(v[i], q_) : 0.0;
      w_[i - 1] = std::pow(v[i - 1], q_) - next;  // Abel weights, >= 0
    }
  }
}

Interval GrandFunEval::inner(double eps) const {
  if (zero_) return Interval::exact(0.0);
  if (std::isinf(q_)) {
    double m = kern::max_weighted_exp(w_.data(), lnt_.data(), n_, invp_ + eps);
    return Interval::exact(m).inflated(4e-15);
  }
  double c = (invp_ + eps) * q_;
  double raw = kern::weighted_exp_sum(w_.data(), lnt_.data(), n_, c) / c;
  return Interval::exact(std::pow(raw, 1.0 / q_)).inflated(4e-15);
}

GrandResult grand_sup(const std::function<Interval(double)>& phi,
                      const GrandParams& gp) {
  SupSearchOptions opt;
  opt.grid = gp.eps_grid;
  opt.lo = gp.eps_min;
  opt.hi = gp.eps_max;
  opt.refine_xtol = gp.refine_tol;
  SupSearchResult sr = sup_search([&](double e) { return phi(e).mid(); }, opt);

  GrandResult out;
  out.value = phi(sr.arg);
  out.profile.eps = std::move(sr.grid_x);
  out.profile.phi = std::move(sr.grid_value);
  out.profile.argmax = sr.arg;
  out.profile.sup = out.value.mid();
  out.profile.at_lower = sr.at_lower;
  out.profile.at_upper = sr.at_upper;
  if (sr.at_lower || sr.at_upper)
    out.note = "sup attained at the eps search boundary";
  return out;
}

GrandResult grand_fun_norm(const DyadicStepFunction& f, const GrandParams& gp) {
  GrandFunEval ev(f, gp.base);
  return grand_sup([&](double e) { return ev.phi(gp.theta, e); }, gp);
}

GrandResult grand_seq_star_norm(const Sequence& a, const GrandParams& gp) {
  GrandSeqStarEval ev(a, gp.base);
  if (ev.divergent()) {
    GrandResult out;
    out.value = Interval::infinite();
    out.note = "inner sum diverges for eps <= 1/p - 1/alpha = " +
               std::to_string(ev.gap()) + "; the eps-sup is infinite";
    return out;
  }
  return grand_sup([&](double e) { return ev.phi(gp.theta, e); }, gp);
}

double eps_argmax_analytic(std::uint64_t n, double p, double q) {
  if (n < 2) throw std::invalid_argument("eps_argmax_analytic: n < 2");
  if (!(p >= 1.0) || !(q > p))
    throw std::invalid_argument("eps_argmax_analytic: need 1 <= p < q");
  double eps = (1.0 / p - 1.0 / q) / std::log(static_cast<double>(n));
  return std::min(std::max(eps, 1e-12), 1.0 - 1e-12);
}

}  // namespace lorentz
