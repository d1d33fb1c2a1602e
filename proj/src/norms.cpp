#include "lorentz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lorentz {

namespace {

void validate_pq(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0))
    throw std::invalid_argument("norm parameters must be positive");
}

std::uint64_t block_ceil_log2(std::size_t n) {
  std::uint64_t m = 0;
  while ((std::uint64_t{1} << m) < n && m < 63) ++m;
  return m;
}

}  // namespace

double NormParams::conjugate() const {
  if (!(p > 1.0)) throw std::invalid_argument("conjugate needs p > 1");
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double lorentz_seq_norm(const Sequence& a, const NormParams& pr) {
  validate_pq(pr.p, pr.q);
  const auto& star = a.rearranged();
  double invp = 1.0 / pr.p;
  if (std::isinf(pr.q)) {
    double best = 0.0;
    for (std::size_t k = 1; k <= star.size(); ++k) {
      if (star[k - 1] == 0.0) break;
      best = std::max(best, std::pow(static_cast<double>(k), invp) * star[k - 1]);
    }
    return best;
  }
  double q = pr.q;
  CompensatedSum s;
  for (std::size_t k = 1; k <= star.size(); ++k) {
    if (star[k - 1] == 0.0) break;
    s.add(std::pow(star[k - 1], q) *
          std::pow(static_cast<double>(k), invp * q - 1.0));
  }
  return std::pow(s.value(), 1.0 / q);
}

Interval lorentz_seq_star_norm(const Sequence& a, const NormParams& pr) {
  validate_pq(pr.p, pr.q);
  if (!(pr.inner_alpha >= 1.0))
    throw std::invalid_argument("inner_alpha must be >= 1");
  if (a.zero()) return Interval::exact(0.0);

  const auto& star = a.rearranged();
  std::size_t n = star.size();
  double p = pr.p, q = pr.q, alpha = pr.inner_alpha;
  double invp = 1.0 / p;
  double gap = invp - 1.0 / alpha;

  // prefix sums of (a*)^alpha and the Cesaro means
  std::vector<double> cesaro(n);
  double big = 0.0;
  {
    CompensatedSum ps;
    for (std::size_t k = 1; k <= n; ++k) {
      ps.add(std::pow(star[k - 1], alpha));
      cesaro[k - 1] = std::pow(ps.value() / static_cast<double>(k), 1.0 / alpha);
    }
    big = ps.value();  // S = sum (a*)^alpha
  }

  if (std::isinf(q)) {
    if (gap > 0.0) return Interval::infinite();
    double best = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
      best = std::max(best,
                      std::pow(static_cast<double>(k), invp) * cesaro[k - 1]);
    return Interval::exact(best).inflated(4e-15);
  }

  if (gap >= 0.0) return Interval::infinite();

  CompensatedSum head;
  for (std::size_t k = 1; k <= n; ++k)
    head.add(std::pow(cesaro[k - 1], q) *
             std::pow(static_cast<double>(k), q * invp - 1.0));

  double s = gap * q - 1.0;
  double w = std::pow(big, q / alpha);
  Interval tail = power_tail(s, static_cast<double>(n + 1), pr.tail_rel_tol,
                             w > 0 ? head.value() / w : 0.0)
                      .scaled(w);
  Interval total = tail + head.value();
  return total.pow(1.0 / q).inflated(4e-15);
}

double weighted_rearranged_norm(const DyadicStepFunction& f, double beta,
                                double q) {
  const auto& v = f.rearranged();
  double n = static_cast<double>(f.cells());
  if (std::isinf(q)) {
    if (beta < 0.0) return f.zero() ? 0.0 : kInf;
    double best = 0.0;
    for (std::size_t i = 1; i <= v.size(); ++i)
      best = std::max(best, std::pow(static_cast<double>(i) / n, beta) * v[i - 1]);
    return best;
  }
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  double c = beta * q;
  if (c <= 0.0) return f.zero() ? 0.0 : kInf;
  CompensatedSum s;
  double prev = 0.0;  // ((i-1)/N)^c
  for (std::size_t i = 1; i <= v.size(); ++i) {
    double cur = std::pow(static_cast<double>(i) / n, c);
    if (v[i - 1] > 0.0) s.add(std::pow(v[i - 1], q) * (cur - prev));
    prev = cur;
  }
  return std::pow(s.value() / c, 1.0 / q);
}

double lorentz_fun_norm(const DyadicStepFunction& f, const NormParams& pr) {
  validate_pq(pr.p, pr.q);
  return weighted_rearranged_norm(f, 1.0 / pr.p, pr.q);
}

std::vector<double> xi_coefficients(const DyadicStepFunction& f, double p) {
  if (!(p > 0.0) || std::isinf(p))
    throw std::invalid_argument("xi_coefficients: need 0 < p < inf");
  int level = f.level();
  const auto& v = f.rearranged();
  double n = static_cast<double>(f.cells());
  std::vector<double> xi;
  xi.reserve(static_cast<std::size_t>(level) + 1);
  for (int m = 0; m < level; ++m) {
    std::size_t first = std::size_t{1} << (level - m - 1);
    std::size_t last = std::size_t{1} << (level - m);
    CompensatedSum s;
    for (std::size_t j = first; j < last; ++j) s.add(std::pow(v[j], p));
    xi.push_back(std::pow(s.value() / n, 1.0 / p));
  }
  xi.push_back(v[0] * std::pow(n, -1.0 / p));  // residual cell [0, 2^-L]
  return xi;
}

double lpqtau_fun_norm(const DyadicStepFunction& f, const NormParams& pr) {
  validate_pq(pr.q, pr.tau);
  Sequence xi = Sequence::from_reals(xi_coefficients(f, pr.p));
  NormParams outer;
  outer.p = pr.q;
  outer.q = pr.tau;
  return lorentz_seq_norm(xi, outer);
}

double lambda_block_sup(const std::vector<double>& prefix_pow, std::size_t n,
                        double p, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("lambda_block_sup: k = 0");
  std::uint64_t m0 = block_ceil_log2(std::max<std::size_t>(n, 1));
  double best = 0.0;
  for (std::uint64_t m = k; m <= std::max(k, m0); ++m) {
    std::size_t cap = (m >= 63) ? n
                                : std::min<std::size_t>(
                                      n, std::size_t{1} << m);
    double val =
        std::pow(prefix_pow[cap] / static_cast<double>(m), 1.0 / p);
    best = std::max(best, val);
  }
  return best;
}

Interval lambda_norm(const Sequence& a, const NormParams& pr) {
  validate_pq(pr.p, pr.q);
  if (!(pr.tau > 0.0)) throw std::invalid_argument("tau must be positive");
  if (a.zero()) return Interval::exact(0.0);

  double p = pr.p, q = pr.q, tau = pr.tau;
  const auto& star = a.rearranged();
  std::size_t n = star.size();

  bool q_dominates = 1.0 / q < 1.0 / p;  // q > p, handles q = inf
  if (!q_dominates) {
    // p >= q: the dyadic tail does not decay except for tau = inf, p = q.
    if (!(std::isinf(tau) && p == q)) return Interval::infinite();
  }

  std::vector<double> prefix(n + 1, 0.0);
  {
    CompensatedSum ps;
    for (std::size_t i = 0; i < n; ++i) {
      ps.add(std::pow(star[i], p));
      prefix[i + 1] = ps.value();
    }
  }
  double big = prefix[n];
  std::uint64_t m0 = block_ceil_log2(n);
  std::uint64_t head_k = std::max<std::uint64_t>(m0, 1);

  if (std::isinf(tau)) {
    double best = 0.0;
    for (std::uint64_t k = 1; k <= head_k; ++k)
      best = std::max(best, std::pow(static_cast<double>(k), 1.0 / q) *
                                lambda_block_sup(prefix, n, p, k));
    // beyond head_k the terms are S^{1/p} k^{1/q - 1/p}, non-increasing
    double edge = std::pow(big, 1.0 / p) *
                  std::pow(static_cast<double>(head_k + 1), 1.0 / q - 1.0 / p);
    best = std::max(best, edge);
    return Interval::exact(best).inflated(4e-15);
  }

  CompensatedSum head;
  for (std::uint64_t k = 1; k <= head_k; ++k) {
    double g = lambda_block_sup(prefix, n, p, k);
    head.add(std::pow(g, tau) *
             std::pow(static_cast<double>(k), tau / q - 1.0));
  }
  double s = (1.0 / q - 1.0 / p) * tau - 1.0;
  double w = std::pow(big, tau / p);
  Interval tail = power_tail(s, static_cast<double>(head_k + 1),
                             pr.tail_rel_tol, w > 0 ? head.value() / w : 0.0)
                      .scaled(w);
  Interval total = tail + head.value();
  return total.pow(1.0 / tau).inflated(4e-15);
}

}  // namespace lorentz
