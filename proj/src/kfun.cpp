#include "lorentz/kfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lorentz {

double KCouple::b() const { return std::pow(2.0, 1.0 / q0 - 1.0 / q1); }

void KCouple::validate() const {
  if (!(p >= 1.0) || !(q0 > p) || !(q1 > q0))
    throw std::invalid_argument("KCouple: need 1 <= p < q0 < q1 <= inf");
}

namespace {

std::vector<double> prefix_powers(const std::vector<double>& vals, double p) {
  std::vector<double> pre(vals.size() + 1, 0.0);
  CompensatedSum s;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    s.add(std::pow(vals[i], p));
    pre[i + 1] = s.value();
  }
  return pre;
}

double member_norm(const std::vector<double>& sorted_moduli, double p,
                   double q, const GrandParams& opts) {
  Sequence s = Sequence::from_reals(sorted_moduli);
  NormParams base;
  base.p = p;
  base.q = q;
  base.inner_alpha = p;
  GrandParams gp = opts;
  gp.theta = 1.0 / p;
  gp.base = base;
  GrandResult r = grand_seq_star_norm(s, gp);
  return r.value.hi;  // upper end keeps k_upper a true upper bound
}

}  // namespace

Decomposition truncation_split(const Sequence& a, std::size_t cut,
                               double shift) {
  const auto& star = a.rearranged();
  std::size_t n = star.size();
  if (cut > n) throw std::invalid_argument("truncation_split: cut > length");
  std::vector<Complex> a0(n, 0.0), a1(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    if (m < cut) {
      double head = star[m] - shift;
      a0[m] = head;
      a1[m] = star[m] - head;  // shift up to rounding; sum reconstructs a*
    } else {
      a1[m] = star[m];
    }
  }
  return {Sequence(std::move(a0)), Sequence(std::move(a1))};
}

DecompositionFamily build_decomposition_family(const Sequence& a,
                                               const KCouple& c,
                                               const GrandParams& opts) {
  c.validate();
  const auto& star = a.rearranged();
  std::size_t n = star.size();
  DecompositionFamily fam;

  auto push = [&](std::size_t j, double lambda) {
    Decomposition d = truncation_split(a, j, lambda);
    const std::vector<double>& a0 = d.a0.rearranged();
    const std::vector<double>& a1 = d.a1.rearranged();
    DecompositionFamily::Member mem;
    mem.cut = j;
    mem.shift = lambda;
    mem.x0 = d.a0.zero() ? 0.0 : member_norm(a0, c.p, c.q0, opts);
    mem.x1 = d.a1.zero() ? 0.0 : member_norm(a1, c.p, c.q1, opts);
    mem.prefix0 = prefix_powers(a0, c.p);
    mem.prefix1 = prefix_powers(a1, c.p);
    fam.members.push_back(std::move(mem));
  };

  push(0, 0.0);  // a0 = 0
  for (std::size_t j = 1; j <= n; ++j) {
    double next = (j < n) ? star[j] : 0.0;
    push(j, 0.0);
    if (next > 0.0) push(j, next);
  }

  fam.a_x0 = fam.members.back().shift == 0.0 && fam.members.back().cut == n
                 ? fam.members.back().x0
                 : member_norm(star, c.p, c.q0, opts);
  fam.a_x1 = member_norm(star, c.p, c.q1, opts);
  return fam;
}

double k_upper(double t, const DecompositionFamily& fam) {
  if (!(t > 0.0)) throw std::invalid_argument("k_upper: t <= 0");
  double best = kInf;
  for (const auto& m : fam.members) best = std::min(best, m.x0 + t * m.x1);
  return best;
}

double k_upper(double t, const Sequence& a, const KCouple& c,
               const GrandParams& opts) {
  return k_upper(t, build_decomposition_family(a, c, opts));
}

Interval interp_norm_upper(const DecompositionFamily& fam, const KCouple& c,
                           double eta, double tau) {
  if (!(eta > 0.0) || !(eta < 1.0))
    throw std::invalid_argument("interp_norm_upper: eta outside (0,1)");
  double b = c.b();
  if (fam.a_x0 == 0.0) return Interval::exact(0.0);

  if (std::isinf(tau)) {
    double best = 0.0;
    double t = 1.0;
    for (int k = 0; k < 4000; ++k) {
      double w = std::pow(b, -eta * static_cast<double>(k));
      if (w * fam.a_x0 <= best) break;  // terms only shrink from here
      best = std::max(best, w * k_upper(t, fam));
      t *= b;
    }
    return Interval::exact(best).inflated(4e-15);
  }

  CompensatedSum head;
  double t = 1.0;
  int k = 0;
  for (; k < 100000; ++k) {
    double w = std::pow(b, -eta * static_cast<double>(k));
    double term = std::pow(w * k_upper(t, fam), tau);
    head.add(term);
    t *= b;
    if (std::pow(w * fam.a_x0, tau) < 1e-12 * head.value() && k > 4) break;
  }
  // geometric bound on the remainder using k_upper <= ||a||_{X0}
  double rho = std::pow(b, -eta * tau);
  double rem = std::pow(fam.a_x0, tau) *
               std::pow(rho, static_cast<double>(k + 1)) / (1.0 - rho);
  return Interval{head.value(), head.value() + rem}
      .pow(1.0 / tau)
      .inflated(4e-15);
}

CheckReport gor_chain_check(const Sequence& a, const KCouple& c, double eta,
                            double tau, const GrandParams& opts) {
  c.validate();
  CheckReport rep;
  rep.check = "gor_chain";
  rep.param("p", c.p);
  rep.param("q0", c.q0);
  rep.param("q1", std::isinf(c.q1) ? "inf" : format_g17(c.q1));
  rep.param("eta", eta);
  rep.param("tau", std::isinf(tau) ? "inf" : format_g17(tau));
  rep.param("len", static_cast<std::uint64_t>(a.size()));

  double q = 1.0 / ((1.0 - eta) / c.q0 + eta / c.q1);
  rep.param("q", q);

  if (a.zero()) {
    rep.status = CheckStatus::Trivial;
    return rep;
  }

  DecompositionFamily fam = build_decomposition_family(a, c, opts);
  const auto& star = a.rearranged();
  std::size_t n = star.size();
  std::vector<double> prefix = prefix_powers(star, c.p);

  std::uint64_t m0 = 1;
  while ((std::uint64_t{1} << m0) < n && m0 < 62) ++m0;
  std::uint64_t k_hi = m0 + 4;

  // (a) constant-1 decomposition step, per dyadic index k:
  //   k^{1/q} G_k(a) <= k^{1/q-1/q0} min_j [ U0_j(k) + k^{1/q0-1/q1} U1_j(k) ]
  // with U_i the blockwise sup of the member's Cesaro means.
  bool all_pass = true;
  double worst_margin = kInf;
  std::uint64_t worst_k = 0;
  double max_per_k_ratio = 0.0;
  double b = c.b();
  for (std::uint64_t k = 1; k <= k_hi; ++k) {
    double kd = static_cast<double>(k);
    double lhs_k = std::pow(kd, 1.0 / q) * lambda_block_sup(prefix, n, c.p, k);
    double best_mid = kInf;
    for (const auto& mem : fam.members) {
      // U_i(k) = sup_{s>=k} s^{1/qi} ((1/s) sum_{m<=2^s} (a_i*)^p)^{1/p};
      // past max(k, m0) the prefix saturates and the terms are
      // s^{1/qi - 1/p} S^{1/p}, decreasing since qi > p.
      double u0w = 0.0, u1w = 0.0;
      std::uint64_t scan_hi = std::max<std::uint64_t>(k, m0);
      for (std::uint64_t s = k; s <= scan_hi; ++s) {
        double sd = static_cast<double>(s);
        std::size_t cap0 = (s >= 63) ? mem.prefix0.size() - 1
                                     : std::min<std::size_t>(
                                           mem.prefix0.size() - 1,
                                           std::size_t{1} << s);
        std::size_t cap1 = (s >= 63) ? mem.prefix1.size() - 1
                                     : std::min<std::size_t>(
                                           mem.prefix1.size() - 1,
                                           std::size_t{1} << s);
        u0w = std::max(u0w, std::pow(sd, 1.0 / c.q0) *
                                std::pow(mem.prefix0[cap0] / sd, 1.0 / c.p));
        u1w = std::max(u1w, std::pow(sd, 1.0 / c.q1) *
                                std::pow(mem.prefix1[cap1] / sd, 1.0 / c.p));
      }
      double mid = u0w + std::pow(kd, 1.0 / c.q0 - 1.0 / c.q1) * u1w;
      best_mid = std::min(best_mid, mid);
    }
    double rhs_k = std::pow(kd, 1.0 / q - 1.0 / c.q0) * best_mid;
    double margin = rhs_k - lhs_k;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_k = k;
    }
    if (lhs_k > rhs_k * (1.0 + 1e-10)) all_pass = false;

    // (b) report-only per-k ratio against the K upper envelope
    double tk = std::pow(b, static_cast<double>(k));
    double rhs_env =
        std::pow(b, -eta * static_cast<double>(k)) * k_upper(tk, fam);
    if (rhs_env > 0.0) max_per_k_ratio = std::max(max_per_k_ratio, lhs_k / rhs_env);
  }

  // (c) aggregate ratio Lambda_{p,q,tau} / interp-upper (report-only; the
  // upper envelope only weakens the chain, stated in the notes)
  NormParams lp;
  lp.p = c.p;
  lp.q = q;
  lp.tau = tau;
  Interval lam = lambda_norm(a, lp);
  Interval interp = interp_norm_upper(fam, c, eta, tau);
  rep.lhs = lam.mid();
  rep.rhs = interp.mid();
  rep.has_ratio = true;
  rep.ratio = interp.mid() > 0 ? lam.mid() / interp.mid() : 0.0;
  rep.param("worst_k", worst_k);
  rep.has_margin = true;
  rep.margin = worst_margin;
  rep.notes = "margin: worst constant-1 decomposition step; ratio: Lambda / "
              "interp upper envelope (K replaced by its upper bound, "
              "conservative); max per-k envelope ratio " +
              format_g17(max_per_k_ratio);
  rep.status = all_pass ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

}  // namespace lorentz
