#include "lorentz/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace lorentz {

namespace {

// Euler-Maclaurin enclosure of sum_{j>=0} (x0 + j)^s for s < -1.
// x^s is completely monotone, so consecutive Euler-Maclaurin partial sums
// bracket the true value: with
//   E = x0^{s+1}/(-1-s) + x0^s/2 - s x0^{s-1}/12 + s(s-1)(s-2) x0^{s-3}/720
// the tail lies in [E, E + |s(s-1)(s-2)(s-3)(s-4)| x0^{s-5}/30240].
// Validity is verified against long partial sums in the unit tests.
struct EmBracket {
  double lo, hi;
};

EmBracket em_tail(double s, double x0) {
  double integral = std::pow(x0, s + 1.0) / (-1.0 - s);
  double f0 = std::pow(x0, s);
  double f1 = s * std::pow(x0, s - 1.0);
  double f3 = s * (s - 1.0) * (s - 2.0) * std::pow(x0, s - 3.0);
  double e = integral + 0.5 * f0 - f1 / 12.0 + f3 / 720.0;
  double next = std::abs(s * (s - 1.0) * (s - 2.0) * (s - 3.0) * (s - 4.0)) *
                std::pow(x0, s - 5.0) / 30240.0;
  return {e, e + next};
}

}  // namespace

Interval arith_power_tail(double s, double first, double stride,
                          double rel_tol, double ext_scale) {
  if (!(s < -1.0)) throw std::invalid_argument("arith_power_tail: need s < -1");
  if (!(first > 0.0) || !(stride > 0.0))
    throw std::invalid_argument("arith_power_tail: need first, stride > 0");

  // Rescale to unit stride: sum (first + j*stride)^s = stride^s sum (x0+j)^s.
  double scale = std::pow(stride, s);
  double x = first / stride;

  // The EM bracket needs x comfortably past the size of |s| so that the
  // Bernoulli terms decrease; peel explicit terms until the bracket is both
  // valid and tight enough.
  double floor_x = std::max(10.0, 1.25 * std::abs(s));
  CompensatedSum head;
  long long guard = 0;
  for (;;) {
    if (x >= floor_x) {
      EmBracket b = em_tail(s, x);
      double total_est = head.value() + b.lo + ext_scale / std::max(scale, 1e-300);
      if (b.hi - b.lo <= rel_tol * std::max(total_est, 1e-300) ||
          guard > 2'000'000)
        break;
    }
    head.add(std::pow(x, s));
    x += 1.0;
    ++guard;
  }
  EmBracket b = em_tail(s, x);
  double lo = (head.value() + b.lo) * scale;
  double hi = (head.value() + b.hi) * scale;
  // a few ulps of slack for the pow/accumulation rounding
  return Interval{lo, hi}.inflated(4e-15);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  if (n <= 0 || !(lo > 0.0) || !(hi > lo)) return g;
  g.reserve(static_cast<size_t>(n));
  if (n == 1) {
    g.push_back(lo);
    return g;
  }
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / (n - 1);
    g.push_back(std::exp(llo + t * (lhi - llo)));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

SupSearchResult sup_search(const std::function<double(double)>& f,
                           const SupSearchOptions& opt) {
  SupSearchResult r;
  r.grid_x = log_grid(opt.lo, opt.hi, std::max(opt.grid, 3));
  r.grid_value.reserve(r.grid_x.size());
  double sign = opt.minimize ? -1.0 : 1.0;

  size_t best = 0;
  double best_v = -kInf;
  for (size_t i = 0; i < r.grid_x.size(); ++i) {
    double v = f(r.grid_x[i]);
    r.grid_value.push_back(v);
    double sv = sign * v;
    if (std::isnan(sv)) sv = -kInf;
    if (sv > best_v) {
      best_v = sv;
      best = i;
    }
  }

  double a = r.grid_x[best == 0 ? 0 : best - 1];
  double b = r.grid_x[std::min(best + 1, r.grid_x.size() - 1)];
  double arg = r.grid_x[best];
  double val = best_v;

  if (std::isfinite(best_v) && b > a) {
    // golden-section on [a,b]
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = sign * f(x1), f2 = sign * f(x2);
    for (int it = 0; it < 200 && (b - a) > opt.refine_xtol * std::max(std::abs(a), 1e-12);
         ++it) {
      if (f1 >= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - invphi * (b - a);
        f1 = sign * f(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + invphi * (b - a);
        f2 = sign * f(x2);
      }
    }
    double xm = 0.5 * (a + b);
    double fm = sign * f(xm);
    if (fm > val) {
      val = fm;
      arg = xm;
    }
    if (f1 > val) {
      val = f1;
      arg = x1;
    }
    if (f2 > val) {
      val = f2;
      arg = x2;
    }
  }

  r.arg = arg;
  r.value = sign * val;
  r.at_lower = best == 0;
  r.at_upper = best + 1 == r.grid_x.size();
  return r;
}

namespace {

// Gauss-Kronrod 7-15 nodes/weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

void gk15(const std::function<double(double)>& f, double a, double b,
          double* result, double* err) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int j = 0; j < 3; ++j) {
    double x = h * kXgk[2 * j + 1];
    double f1 = f(c - x), f2 = f(c + x);
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[2 * j + 1] * (f1 + f2);
  }
  for (int j = 0; j < 4; ++j) {
    double x = h * kXgk[2 * j];
    double f1 = f(c - x), f2 = f(c + x);
    resk += kWgk[2 * j] * (f1 + f2);
  }
  *result = resk * h;
  *err = std::abs((resk - resg) * h);
}

double gk_adaptive(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_floor, int depth) {
  double res, err;
  gk15(f, a, b, &res, &err);
  if (depth <= 0 || err <= rel_tol * std::abs(res) + abs_floor) return res;
  double c = 0.5 * (a + b);
  return gk_adaptive(f, a, c, rel_tol, abs_floor * 0.5, depth - 1) +
         gk_adaptive(f, c, b, rel_tol, abs_floor * 0.5, depth - 1);
}

}  // namespace

double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double rel_tol, double abs_floor, int max_depth) {
  if (!(b > a)) return 0.0;
  return gk_adaptive(f, a, b, rel_tol, abs_floor, max_depth);
}

}  // namespace lorentz
