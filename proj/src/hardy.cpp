#include "lorentz/hardy.hpp"

#include <cmath>
#include <stdexcept>

namespace lorentz {

namespace {

void validate(double r, double q, double alpha, bool allow_qinf) {
  if (!(alpha > 0.0)) throw std::invalid_argument("hardy: alpha <= 0");
  if (!(r > 0.0) || !(q >= r))
    throw std::invalid_argument("hardy: need 0 < r <= q");
  if (!allow_qinf && std::isinf(q))
    throw std::invalid_argument("hardy: q = inf not admitted here");
}

struct CellGeometry {
  std::size_t n;
  double inv_n;
  double t(std::size_t i) const { return static_cast<double>(i) * inv_n; }
};

}  // namespace

double hardy_head_lhs(const DyadicStepFunction& f, double r, double q,
                      double alpha) {
  if (f.zero()) return 0.0;
  const auto& v = f.rearranged();
  CellGeometry g{f.cells(), 1.0 / static_cast<double>(f.cells())};

  double e1 = q * (1.0 / r - alpha);
  if (e1 <= 0.0) return kInf;

  // first cell: H(t) = v_1^r t exactly
  double total = std::pow(v[0], q) * std::pow(g.t(1), e1) / e1;

  double aq1 = -alpha * q - 1.0;
  double h_prev = std::pow(v[0], r) * g.inv_n;  // H(t_1)
  for (std::size_t i = 2; i <= g.n; ++i) {
    double b = std::pow(v[i - 1], r);
    double t0 = g.t(i - 1), t1 = g.t(i);
    double h0 = h_prev;
    auto integrand = [&](double t) {
      return std::pow(t, aq1) * std::pow(h0 + b * (t - t0), q / r);
    };
    total += integrate_gk(integrand, t0, t1, 1e-12, 1e-16 * total);
    h_prev = h0 + b * g.inv_n;
  }
  return std::pow(total, 1.0 / q);
}

double hardy_tail_lhs(const DyadicStepFunction& f, double r, double q,
                      double alpha) {
  if (f.zero()) return 0.0;
  const auto& v = f.rearranged();
  CellGeometry g{f.cells(), 1.0 / static_cast<double>(f.cells())};

  // suffix integrals T(t_i) = int_{t_i}^1 (f*)^r
  std::vector<double> suffix(g.n + 1, 0.0);
  for (std::size_t i = g.n; i >= 1; --i)
    suffix[i - 1] = suffix[i] + std::pow(v[i - 1], r) * g.inv_n;

  if (std::isinf(q)) {
    double best = 0.0;
    for (std::size_t i = 1; i <= g.n; ++i) {
      double d = std::pow(v[i - 1], r);
      double c = suffix[i] + d * g.t(i);  // T(t) = c - d t on the cell
      auto phi = [&](double t) {
        double x = std::max(c - d * t, 0.0);
        return std::pow(t, alpha) * std::pow(x, 1.0 / r);
      };
      best = std::max(best, phi(g.t(i)));
      if (i > 1) best = std::max(best, phi(g.t(i - 1)));
      if (d > 0.0) {
        double ts = alpha * c / (d * (alpha + 1.0 / r));
        if (ts > g.t(i - 1) && ts < g.t(i)) best = std::max(best, phi(ts));
      }
    }
    return best;
  }

  double aq = alpha * q;
  double total = 0.0;
  {
    // first cell via u = t^{aq}: (1/aq) int_0^{t1^aq} (c - d u^{1/aq})^{q/r} du
    double d = std::pow(v[0], r);
    double c = suffix[1] + d * g.t(1);
    double umax = std::pow(g.t(1), aq);
    auto integrand = [&](double u) {
      double x = std::max(c - d * std::pow(u, 1.0 / aq), 0.0);
      return std::pow(x, q / r);
    };
    total += integrate_gk(integrand, 0.0, umax, 1e-12,
                          1e-16 * std::pow(c, q / r) * umax, 52) /
             aq;
  }
  for (std::size_t i = 2; i <= g.n; ++i) {
    if (suffix[i - 1] == 0.0) break;  // T vanishes from here on
    double d = std::pow(v[i - 1], r);
    double c = suffix[i] + d * g.t(i);
    auto integrand = [&](double t) {
      double x = std::max(c - d * t, 0.0);
      return std::pow(t, aq - 1.0) * std::pow(x, q / r);
    };
    total += integrate_gk(integrand, g.t(i - 1), g.t(i), 1e-12, 1e-16 * total);
  }
  return std::pow(total, 1.0 / q);
}

CheckReport hardy_head_check(const DyadicStepFunction& f,
                             const HardyParams& hp, double tol) {
  validate(hp.r, hp.q, hp.alpha, false);
  CheckReport rep;
  rep.check = "hardy_head";
  rep.param("r", hp.r);
  rep.param("alpha", hp.alpha);
  rep.param("q", hp.q);
  rep.param("level", static_cast<std::uint64_t>(f.level()));
  rep.has_constant = true;
  rep.constant = std::pow(hp.r * hp.alpha, -1.0 / hp.r);

  if (f.zero()) {
    rep.status = CheckStatus::Trivial;
    rep.has_margin = true;
    return rep;
  }
  if (hp.alpha >= 1.0 / hp.r) {
    rep.status = CheckStatus::Divergent;
    rep.lhs = rep.rhs = kInf;
    rep.notes = "alpha >= 1/r on nonzero f: both sides diverge";
    return rep;
  }
  rep.lhs = hardy_head_lhs(f, hp.r, hp.q, hp.alpha);
  rep.rhs =
      rep.constant * weighted_rearranged_norm(f, 1.0 / hp.r - hp.alpha, hp.q);
  rep.has_margin = true;
  rep.margin = rep.rhs - rep.lhs;
  rep.status = rep.lhs <= rep.rhs * (1.0 + tol) ? CheckStatus::Pass
                                                : CheckStatus::Fail;
  return rep;
}

CheckReport hardy_tail_check(const DyadicStepFunction& f,
                             const HardyParams& hp, double tol) {
  validate(hp.r, hp.q, hp.alpha, true);
  CheckReport rep;
  rep.check = "hardy_tail";
  rep.param("r", hp.r);
  rep.param("alpha", hp.alpha);
  rep.param("q", std::isinf(hp.q) ? "inf" : format_g17(hp.q));
  rep.param("level", static_cast<std::uint64_t>(f.level()));
  rep.has_constant = true;
  rep.constant = std::pow(hp.r * hp.alpha, -1.0 / hp.r);

  if (f.zero()) {
    rep.status = CheckStatus::Trivial;
    rep.has_margin = true;
    return rep;
  }
  rep.lhs = hardy_tail_lhs(f, hp.r, hp.q, hp.alpha);
  rep.rhs =
      rep.constant * weighted_rearranged_norm(f, 1.0 / hp.r + hp.alpha, hp.q);
  rep.has_margin = true;
  rep.margin = rep.rhs - rep.lhs;
  rep.status = rep.lhs <= rep.rhs * (1.0 + tol) ? CheckStatus::Pass
                                                : CheckStatus::Fail;
  return rep;
}

namespace {

SupSearchOptions grand_window(const GrandHardyOptions& opt, double r) {
  SupSearchOptions s;
  s.grid = opt.eps_grid;
  s.lo = opt.eps_min;
  s.hi = (1.0 - 1e-9) / r;
  s.refine_xtol = opt.refine_tol;
  return s;
}

}  // namespace

CheckReport hardy_grand_head_check(const DyadicStepFunction& f, double r,
                                   double q, double theta,
                                   const GrandHardyOptions& opt) {
  validate(r, q, 1.0, false);
  if (!(theta >= 0.0)) throw std::invalid_argument("hardy: theta < 0");
  CheckReport rep;
  rep.check = "hardy_grand_head";
  rep.param("r", r);
  rep.param("q", q);
  rep.param("theta", theta);
  rep.param("level", static_cast<std::uint64_t>(f.level()));
  double theta1 = theta + 1.0 / r;
  rep.has_constant = true;
  rep.constant = std::pow(r, -1.0 / r);
  rep.notes =
      "inf-form with the inner q-th power, dt/t measure and a matched eps "
      "window; constant r^{-1/r}";

  if (f.zero()) {
    rep.status = CheckStatus::Trivial;
    rep.has_margin = true;
    return rep;
  }

  SupSearchOptions win = grand_window(opt, r);
  win.minimize = true;
  auto rhs_phi = [&](double e) {
    return std::pow(e, -theta1) * weighted_rearranged_norm(f, 1.0 / r - e, q);
  };
  SupSearchResult rs = sup_search(rhs_phi, win);
  rep.rhs = rep.constant * rs.value;

  auto lhs_phi = [&](double e) {
    return std::pow(e, -theta) * hardy_head_lhs(f, r, q, e);
  };
  SupSearchResult ls = sup_search(lhs_phi, win);
  rep.lhs = std::min(ls.value, lhs_phi(rs.arg));

  rep.has_margin = true;
  rep.margin = rep.rhs - rep.lhs;
  rep.status = rep.lhs <= rep.rhs * (1.0 + opt.tol) ? CheckStatus::Pass
                                                    : CheckStatus::Fail;
  return rep;
}

CheckReport hardy_grand_tail_check(const DyadicStepFunction& f, double r,
                                   double q, double theta,
                                   const GrandHardyOptions& opt) {
  validate(r, q, 1.0, false);
  if (!(theta >= 0.0)) throw std::invalid_argument("hardy: theta < 0");
  CheckReport rep;
  rep.check = "hardy_grand_tail";
  rep.param("r", r);
  rep.param("q", q);
  rep.param("theta", theta);
  rep.param("level", static_cast<std::uint64_t>(f.level()));
  double theta1 = theta + 1.0 / r;
  rep.has_constant = true;
  rep.constant = std::pow(r, -1.0 / r);
  rep.notes = "sup-form with a matched eps window and explicit constant "
              "r^{-1/r}";

  if (f.zero()) {
    rep.status = CheckStatus::Trivial;
    rep.has_margin = true;
    return rep;
  }

  SupSearchOptions win = grand_window(opt, r);
  auto lhs_phi = [&](double e) {
    return std::pow(e, theta1) * hardy_tail_lhs(f, r, q, e);
  };
  SupSearchResult ls = sup_search(lhs_phi, win);
  rep.lhs = ls.value;

  auto rhs_phi = [&](double e) {
    return std::pow(e, theta) * weighted_rearranged_norm(f, 1.0 / r + e, q);
  };
  SupSearchResult rs = sup_search(rhs_phi, win);
  rep.rhs = rep.constant * std::max(rs.value, rhs_phi(ls.arg));

  rep.has_margin = true;
  rep.margin = rep.rhs - rep.lhs;
  rep.status = rep.lhs <= rep.rhs * (1.0 + opt.tol) ? CheckStatus::Pass
                                                    : CheckStatus::Fail;
  return rep;
}

}  // namespace lorentz
