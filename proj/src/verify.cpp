#include "lorentz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lorentz {

namespace family {

DyadicStepFunction power(int level, double beta) {
  if (!(beta < 1.0))
    throw std::invalid_argument("power family: need beta < 1");
  std::size_t n = std::size_t{1} << level;
  double nd = static_cast<double>(n);
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    double lo = static_cast<double>(i) / nd;
    double hi = static_cast<double>(i + 1) / nd;
    v[i] = nd * (std::pow(hi, 1.0 - beta) - std::pow(lo, 1.0 - beta)) /
           (1.0 - beta);
  }
  return DyadicStepFunction(level, std::move(v));
}

DyadicStepFunction spike(int level) {
  std::vector<Complex> v(std::size_t{1} << level, 0.0);
  v[0] = 1.0;
  return DyadicStepFunction(level, std::move(v));
}

DyadicStepFunction flat(int level, double value) {
  return DyadicStepFunction::constant(level, value);
}

DyadicStepFunction random_step(Rng& rng, int level, double pareto_index) {
  std::size_t n = std::size_t{1} << level;
  std::vector<Complex> v(n);
  for (auto& x : v) x = rng.pareto(pareto_index) * rng.unit_phase();
  return DyadicStepFunction(level, std::move(v));
}

Sequence spike_seq(std::size_t n) {
  std::vector<Complex> v(n, 0.0);
  if (n) v[0] = 1.0;
  return Sequence(std::move(v));
}

Sequence flat_seq(std::size_t n) {
  return Sequence(std::vector<Complex>(n, 1.0));
}

Sequence lacunary_seq(double gamma, int blocks) {
  std::vector<Complex> v;
  for (int k = 0; k < blocks; ++k) {
    double val = std::pow(2.0, -gamma * k);
    for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) v.push_back(val);
  }
  return Sequence(std::move(v));
}

Sequence random_seq(Rng& rng, std::size_t len, double pareto_index) {
  std::vector<Complex> v(len);
  for (auto& x : v) x = rng.pareto(pareto_index) * rng.unit_phase();
  return Sequence(std::move(v));
}

}  // namespace family

// ---------------------------------------------------------------------------

CheckReport hy_classical_check(const DyadicStepFunction& f, double p,
                               double tol) {
  if (!(p > 1.0) || !(p <= 2.0))
    throw std::invalid_argument("hy_classical: need 1 < p <= 2");
  CheckReport rep;
  rep.check = "hy_classical";
  rep.param("p", p);
  rep.param("level", static_cast<std::uint64_t>(f.level()));
  rep.has_constant = true;
  rep.constant = 1.0;
  if (f.zero()) {
    rep.status = CheckStatus::Trivial;
    rep.has_margin = true;
    return rep;
  }
  double pprime = p / (p - 1.0);
  Interval lhs = trig_coeff_power_norm(f, pprime);
  rep.lhs = lhs.mid();
  rep.rhs = f.lp_norm(p);
  rep.has_margin = true;
  rep.margin = rep.rhs - rep.lhs;
  rep.status = lhs.lo <= rep.rhs * (1.0 + tol) ? CheckStatus::Pass
                                               : CheckStatus::Fail;
  rep.notes = "lhs certified halfwidth " + format_g17(0.5 * lhs.width());
  return rep;
}

CheckReport hy_lorentz_ratio(const DyadicStepFunction& f, double p, double q,
                             const OrthonormalSystem& sys) {
  if (!(p > 1.0) || !(p < 2.0))
    throw std::invalid_argument("hy_lorentz_ratio: need 1 < p < 2");
  CheckReport rep;
  rep.check = "hy_lorentz_ratio";
  rep.param("p", p);
  rep.param("q", std::isinf(q) ? "inf" : format_g17(q));
  rep.param("sys", sys.label());
  rep.param("level", static_cast<std::uint64_t>(f.level()));
  if (f.zero()) {
    rep.status = CheckStatus::Trivial;
    return rep;
  }
  Sequence a = ons_coefficients(f, sys);
  NormParams star;
  star.p = p / (p - 1.0);
  star.q = q;
  star.inner_alpha = 2.0;
  Interval lhs = lorentz_seq_star_norm(a, star);
  if (lhs.divergent()) {
    rep.status = CheckStatus::Divergent;
    rep.notes = "starred sequence norm diverges";
    rep.lhs = kInf;
    return rep;
  }
  double eq = (q >= 2.0 || std::isinf(q)) ? 0.5 : 1.0 / q;
  NormParams fp;
  fp.p = p;
  fp.q = q;
  double denom = std::pow(1.0 / p - 0.5, -eq) * lorentz_fun_norm(f, fp);
  rep.lhs = lhs.mid();
  rep.rhs = denom;
  rep.has_ratio = true;
  rep.ratio = denom > 0 ? lhs.mid() / denom : 0.0;
  rep.status = CheckStatus::ReportOnly;
  if (sys.kind == OrthonormalSystem::Kind::Trig)
    rep.notes = "trig truncation K=" + std::to_string(sys.trig_K);
  return rep;
}

BlowupResult blowup_sweep(BlowupFamily fam, const std::vector<double>& p_grid,
                          double q, int level) {
  if (p_grid.empty()) throw std::invalid_argument("blowup_sweep: empty grid");
  BlowupResult out;
  double eq = (q >= 2.0 || std::isinf(q)) ? 0.5 : 1.0 / q;
  std::vector<double> xs, ys;
  for (double p : p_grid) {
    if (!(p > 1.0) || !(p < 2.0))
      throw std::invalid_argument("blowup_sweep: p outside (1,2)");
    DyadicStepFunction f = fam == BlowupFamily::Power
                               ? family::power(level, 1.0 / p - 0.02)
                               : family::flat(level);
    Sequence a = walsh_coefficients(f);
    NormParams seq;
    seq.p = p / (p - 1.0);
    seq.q = q;
    NormParams fun;
    fun.p = p;
    fun.q = q;
    double c_emp = lorentz_seq_norm(a, seq) / lorentz_fun_norm(f, fun);
    double delta = 1.0 / p - 0.5;
    out.rows.push_back({p, c_emp, c_emp * std::pow(delta, eq)});
    xs.push_back(std::log(delta));
    ys.push_back(std::log(c_emp));
    out.max_scaled = std::max(out.max_scaled, out.rows.back().scaled);
  }
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(xs.size());
  ybar /= static_cast<double>(xs.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - xbar) * (ys[i] - ybar);
    den += (xs[i] - xbar) * (xs[i] - xbar);
  }
  out.slope = den > 0 ? num / den : 0.0;
  return out;
}

CheckReport grand_hy_check(const DyadicStepFunction& f, double theta, double q,
                           const GrandParams& opts) {
  if (!(theta >= 0.0)) throw std::invalid_argument("grand_hy: theta < 0");
  CheckReport rep;
  rep.check = "grand_hy";
  rep.param("theta", theta);
  rep.param("q", std::isinf(q) ? "inf" : format_g17(q));
  rep.param("level", static_cast<std::uint64_t>(f.level()));
  if (f.zero()) {
    rep.status = CheckStatus::Trivial;
    return rep;
  }
  double theta1 =
      theta + ((q >= 2.0 || std::isinf(q)) ? 0.5 : 1.0 / q);
  Sequence a = walsh_coefficients(f);

  GrandParams gl = opts;
  gl.theta = theta1;
  gl.base.p = 2.0;
  gl.base.q = q;
  gl.base.inner_alpha = 2.0;
  GrandResult lhs = grand_seq_star_norm(a, gl);

  GrandParams gr = opts;
  gr.theta = theta;
  gr.base.p = 2.0;
  gr.base.q = q;
  GrandResult rhs = grand_fun_norm(f, gr);

  rep.lhs = lhs.value.mid();
  rep.rhs = rhs.value.mid();
  rep.has_ratio = true;
  rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : 0.0;
  rep.param("theta1", theta1);
  rep.status = CheckStatus::ReportOnly;
  return rep;
}

CheckReport bochkarev_chain_check(const Sequence& a, double q, std::uint64_t n,
                                  const GrandParams& opts,
                                  const GrandResult* rhs_hint) {
  if (!(q > 2.0)) throw std::invalid_argument("bochkarev: need q > 2");
  if (n < 1 || n > a.size())
    throw std::invalid_argument("bochkarev: need 1 <= n <= len");
  CheckReport rep;
  rep.check = "bochkarev_chain";
  rep.param("q", std::isinf(q) ? "inf" : format_g17(q));
  rep.param("n", n);
  rep.param("len", static_cast<std::uint64_t>(a.size()));
  rep.has_constant = true;
  rep.constant = std::exp(-1.0);
  if (a.zero()) {
    rep.status = CheckStatus::Trivial;
    rep.has_margin = true;
    return rep;
  }

  const auto& star = a.rearranged();
  CompensatedSum p2;
  for (std::uint64_t m = 0; m < n; ++m) p2.add(star[m] * star[m]);
  double expo = 0.5 - (std::isinf(q) ? 0.0 : 1.0 / q);
  double lnn1 = std::log(static_cast<double>(n) + 1.0);
  double lhs = std::exp(-1.0) * std::pow(lnn1, -expo) * std::sqrt(p2.value());
  rep.lhs = lhs;

  NormParams base;
  base.p = 2.0;
  base.q = q;
  base.inner_alpha = 2.0;
  GrandSeqStarEval ev(a, base);
  double eps0 = std::min(1.0 / lnn1, 1.0 - 1e-9);
  Interval at_eps0 = ev.phi(0.5, eps0);

  Interval rhs;
  if (rhs_hint) {
    rhs = rhs_hint->value;
  } else {
    GrandParams gp = opts;
    gp.theta = 0.5;
    gp.base = base;
    rhs = grand_seq_star_norm(a, gp).value;
  }
  Interval rhs_eff = max(rhs, at_eps0);
  rep.rhs = rhs_eff.mid();
  rep.has_margin = true;
  rep.margin = rep.rhs - rep.lhs;
  bool pass = lhs <= rhs_eff.hi * (1.0 + 1e-10);

  if (!std::isinf(q)) {
    // integral-test step at the remark's eps
    double s = -q * eps0 - 1.0;
    Interval tail = power_tail(s, static_cast<double>(n), 1e-10);
    double claim =
        std::pow(static_cast<double>(n) + 1.0, -q * eps0) / (q * eps0);
    if (!(tail.lo >= claim * (1.0 - 1e-10))) {
      pass = false;
      rep.notes = "integral-test sub-assertion failed";
    }
  }
  rep.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

CheckReport imboch_check(const Sequence& a, double p, double q,
                         std::uint64_t n, const GrandParams& opts,
                         const GrandResult* rhs_hint) {
  if (!(p >= 1.0) || !(q > p) || std::isinf(q))
    throw std::invalid_argument("imboch: need 1 <= p < q < inf");
  if (n < 1) throw std::invalid_argument("imboch: n < 1");
  CheckReport rep;
  rep.check = "imboch";
  rep.param("p", p);
  rep.param("q", q);
  rep.param("n", n);
  rep.param("len", static_cast<std::uint64_t>(a.size()));
  rep.has_constant = true;
  rep.constant = 1.0;
  if (a.zero()) {
    rep.status = CheckStatus::Trivial;
    rep.has_margin = true;
    return rep;
  }

  const auto& star = a.rearranged();
  CompensatedSum pp;
  for (std::uint64_t m = 0; m < std::min<std::uint64_t>(n, star.size()); ++m)
    pp.add(std::pow(star[m], p));
  double amp = std::pow(pp.value(), 1.0 / p);

  auto lhs_phi = [&](double e) -> Interval {
    Interval t = power_tail(-q * e - 1.0, static_cast<double>(n), 1e-10);
    return t.pow(1.0 / q).scaled(std::pow(e, 1.0 / p) * amp);
  };
  GrandParams sp = opts;
  GrandResult lhs = grand_sup(lhs_phi, sp);
  double eps_l = lhs.profile.argmax;

  NormParams base;
  base.p = p;
  base.q = q;
  base.inner_alpha = p;
  GrandSeqStarEval ev(a, base);
  Interval rhs;
  if (rhs_hint) {
    rhs = rhs_hint->value;
  } else {
    GrandParams gp = opts;
    gp.theta = 1.0 / p;
    gp.base = base;
    rhs = grand_seq_star_norm(a, gp).value;
  }
  Interval rhs_eff = max(rhs, ev.phi(1.0 / p, eps_l));

  rep.lhs = lhs.value.mid();
  rep.rhs = rhs_eff.mid();
  rep.has_margin = true;
  rep.margin = rep.rhs - rep.lhs;
  rep.status = lhs.value.lo <= rhs_eff.hi * (1.0 + 1e-10) ? CheckStatus::Pass
                                                          : CheckStatus::Fail;
  return rep;
}

CheckReport remark38_check(const Sequence& a, double q) {
  if (!(q > 2.0) || std::isinf(q))
    throw std::invalid_argument("remark38: need 2 < q < inf");
  CheckReport rep;
  rep.check = "remark38";
  rep.param("q", q);
  rep.param("len", static_cast<std::uint64_t>(a.size()));
  rep.has_constant = true;
  rep.constant = 1.0;
  if (a.zero()) {
    rep.status = CheckStatus::Trivial;
    rep.has_margin = true;
    return rep;
  }

  const auto& star = a.rearranged();
  std::size_t n = star.size();
  std::vector<double> prefix(n + 1, 0.0);
  {
    CompensatedSum s;
    for (std::size_t i = 0; i < n; ++i) {
      s.add(star[i] * star[i]);
      prefix[i + 1] = s.value();
    }
  }
  std::uint64_t m0 = 1;
  while ((std::uint64_t{1} << m0) < n && m0 < 62) ++m0;
  std::uint64_t head_k = std::max<std::uint64_t>(m0, 1);

  bool pass = true;
  double worst = kInf;
  CompensatedSum lhs_head, rhs_head;
  for (std::uint64_t k = 1; k <= head_k + 4; ++k) {
    double kd = static_cast<double>(k);
    std::size_t cap =
        (k >= 63) ? n : std::min<std::size_t>(n, std::size_t{1} << k);
    double lhs_k = std::pow(prefix[cap] / kd, 0.5);
    double g_k = lambda_block_sup(prefix, n, 2.0, k);
    double margin = g_k - lhs_k;
    worst = std::min(worst, margin);
    if (lhs_k > g_k * (1.0 + 1e-12)) pass = false;
    if (k <= head_k) {
      lhs_head.add(std::pow(prefix[cap] / kd, 0.5 * q));
      rhs_head.add(std::pow(g_k, q));
    }
  }

  // shared certified tail: terms S^{q/2} k^{-q/2} on both sides
  Interval tail = power_tail(-0.5 * q, static_cast<double>(head_k + 1), 1e-13,
                             rhs_head.value() / std::pow(prefix[n], 0.5 * q))
                      .scaled(std::pow(prefix[n], 0.5 * q));
  Interval lhs_tot = (tail + lhs_head.value()).pow(1.0 / q);
  Interval rhs_tot = (tail + rhs_head.value()).pow(1.0 / q);
  rep.lhs = lhs_tot.mid();
  rep.rhs = rhs_tot.mid();
  rep.has_margin = true;
  rep.margin = rep.rhs - rep.lhs;
  if (rep.lhs > rep.rhs * (1.0 + 1e-12)) pass = false;
  rep.notes = "worst termwise margin " + format_g17(worst);
  rep.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

CheckReport theorem16_check(const DyadicStepFunction& f, double q, double tau,
                            const OrthonormalSystem& sys) {
  if (!(q > 2.0)) throw std::invalid_argument("theorem16: need q > 2");
  if (!(tau > 0.0)) throw std::invalid_argument("theorem16: tau <= 0");
  CheckReport rep;
  rep.check = "theorem16";
  rep.param("q", std::isinf(q) ? "inf" : format_g17(q));
  rep.param("tau", std::isinf(tau) ? "inf" : format_g17(tau));
  rep.param("sys", sys.label());
  rep.param("level", static_cast<std::uint64_t>(f.level()));
  if (f.zero()) {
    rep.status = CheckStatus::Trivial;
    return rep;
  }
  Sequence a = ons_coefficients(f, sys);
  NormParams np;
  np.p = 2.0;
  np.q = q;
  np.tau = tau;
  Interval lam = lambda_norm(a, np);
  double den = lpqtau_fun_norm(f, np);
  if (lam.divergent()) {
    rep.status = CheckStatus::Divergent;
    rep.lhs = kInf;
    rep.rhs = den;
    return rep;
  }
  rep.lhs = lam.mid();
  rep.rhs = den;
  rep.has_ratio = true;
  rep.ratio = den > 0 ? lam.mid() / den : 0.0;
  rep.status = CheckStatus::ReportOnly;
  return rep;
}

}  // namespace lorentz
