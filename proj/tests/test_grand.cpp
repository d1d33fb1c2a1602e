#include <doctest.h>

#include <cmath>

#include "lorentz/grand.hpp"
#include "lorentz/rng.hpp"

using namespace lorentz;

namespace {

GrandParams gparams(double theta, double p, double q, double alpha = 2.0,
                    int grid = 513) {
  GrandParams gp;
  gp.theta = theta;
  gp.base.p = p;
  gp.base.q = q;
  gp.base.inner_alpha = alpha;
  gp.eps_grid = grid;
  return gp;
}

}  // namespace

TEST_CASE("grand function norm closed forms on the constant function") {
  DyadicStepFunction one = DyadicStepFunction::constant(6, 1.0);
  // theta = 0, p = q = 1: sup_eps 1/(1+eps) -> 1 at eps -> 0
  GrandResult a = grand_fun_norm(one, gparams(0.0, 1.0, 1.0));
  CHECK(a.value.mid() == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(a.profile.at_lower);

  // theta = 1, p = q = 1: sup_eps eps/(1+eps) = 1/2 at eps -> 1
  GrandResult b = grand_fun_norm(one, gparams(1.0, 1.0, 1.0));
  CHECK(b.value.mid() == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(b.profile.at_upper);
}

TEST_CASE("grand function norm with theta = 0 is dominated by the Lorentz norm") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> v(64);
    for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
    DyadicStepFunction f(6, v);
    for (double q : {1.0, 2.0, kInf}) {
      GrandResult g = grand_fun_norm(f, gparams(0.0, 2.0, q));
      NormParams np;
      np.p = 2.0;
      np.q = q;
      CHECK(g.value.mid() <= lorentz_fun_norm(f, np) * (1 + 1e-9));
    }
  }
}

TEST_CASE("per-eps closed form equals the weighted norm") {
  Rng rng(4);
  std::vector<Complex> v(32);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  DyadicStepFunction f(5, v);
  NormParams base;
  base.p = 2.0;
  base.q = 3.0;
  GrandFunEval ev(f, base);
  for (double eps : {1e-6, 0.01, 0.3, 0.9}) {
    double want = weighted_rearranged_norm(f, 0.5 + eps, 3.0);
    CHECK(ev.inner(eps).mid() == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("grand sequence star norm examples") {
  Sequence one(std::vector<Complex>{1.0});
  // p = 2, q = inf, alpha = 2: k = 1 dominates, sup_eps eps^theta = 1
  GrandResult a = grand_seq_star_norm(one, gparams(0.7, 2.0, kInf));
  CHECK(a.value.mid() == doctest::Approx(1.0).epsilon(1e-7));

  // homogeneity
  Rng rng(5);
  std::vector<Complex> v(24);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  Sequence s(v);
  std::vector<Complex> w;
  for (auto& c : v) w.push_back(3.0 * c);
  Sequence s3{w};
  GrandParams gp = gparams(0.5, 2.0, 4.0);
  CHECK(grand_seq_star_norm(s3, gp).value.mid() ==
        doctest::Approx(3.0 * grand_seq_star_norm(s, gp).value.mid())
            .epsilon(1e-9));
}

TEST_CASE("grand sequence star norm against a dense-grid oracle") {
  // a = (1), theta = 1/q, p = 2, alpha = 2, q = 4: inner sum is
  // sum_k k^{-4 eps - 1}; oracle: dense eps grid with certified tails
  Sequence one(std::vector<Complex>{1.0});
  GrandResult got = grand_seq_star_norm(one, gparams(0.25, 2.0, 4.0));
  double best = 0.0;
  for (int i = 0; i <= 40000; ++i) {
    double eps = 1e-9 + (1.0 - 2e-9) * i / 40000.0;
    Interval inner = power_tail(-4.0 * eps - 1.0, 1.0, 1e-10);
    best = std::max(best, std::pow(eps, 0.25) * std::pow(inner.mid(), 0.25));
  }
  CHECK(got.value.mid() == doctest::Approx(best).epsilon(1e-6));
  CHECK(got.value.rel_width() < 1e-8);
}

TEST_CASE("grand sequence star norm divergence region is reported") {
  Sequence one(std::vector<Complex>{1.0});
  // 1/p - 1/alpha > 0: infinite for every theta
  GrandResult r = grand_seq_star_norm(one, gparams(1.0, 1.0, 2.0));
  CHECK(r.value.divergent());
  CHECK(!r.note.empty());
}

TEST_CASE("grand norms are monotone in theta and in q") {
  Rng rng(6);
  std::vector<Complex> v(64);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  DyadicStepFunction f(6, v);
  GrandResult t0 = grand_fun_norm(f, gparams(0.0, 2.0, 2.0));
  GrandResult t1 = grand_fun_norm(f, gparams(0.5, 2.0, 2.0));
  GrandResult t2 = grand_fun_norm(f, gparams(1.5, 2.0, 2.0));
  CHECK(t1.value.mid() <= t0.value.mid() * (1 + 1e-9));
  CHECK(t2.value.mid() <= t1.value.mid() * (1 + 1e-9));

  // second-index monotonicity, exact against the q = inf member
  Sequence a(v);
  for (double q : {1.0, 2.0, 4.0}) {
    GrandResult fin = grand_seq_star_norm(a, gparams(0.5, 2.0, q));
    GrandResult inf = grand_seq_star_norm(a, gparams(0.5, 2.0, kInf));
    CHECK(inf.value.mid() <= fin.value.mid() * (1 + 1e-9));
  }
}

TEST_CASE("every reported grand value carries a tight certified bracket") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> v(16 + rng.uniform_index(48));
    for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
    Sequence a(v);
    for (double q : {1.0, 2.0, 4.0}) {
      GrandResult r = grand_seq_star_norm(a, gparams(0.5, 2.0, q, 2.0, 129));
      REQUIRE(r.value.is_finite());
      CHECK(r.value.rel_width() < 1e-8);
    }
  }
}

TEST_CASE("analytic eps maximizer") {
  CHECK(eps_argmax_analytic(55, 2.0, 4.0) ==
        doctest::Approx(0.25 / std::log(55.0)));
  CHECK(eps_argmax_analytic(3, 1.0, 2.0) ==
        doctest::Approx(0.5 / std::log(3.0)));
  CHECK_THROWS_AS(eps_argmax_analytic(1, 2.0, 4.0), std::invalid_argument);

  // stationarity: Phi(eps*) beats neighbours for random parameters
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    double p = rng.uniform(1.0, 3.0);
    double q = p + rng.uniform(0.2, 4.0);
    std::uint64_t n = 2 + rng.uniform_index(1000);
    double es = eps_argmax_analytic(n, p, q);
    auto phi = [&](double e) {
      return std::pow(e, 1.0 / p - 1.0 / q) *
             std::pow(static_cast<double>(n), -e);
    };
    if (es > 2e-4 && es < 1.0 - 2e-4) {
      CHECK(phi(es) >= phi(es - 1e-4) * (1 - 1e-12));
      CHECK(phi(es) >= phi(es + 1e-4) * (1 - 1e-12));
    }
  }
}

TEST_CASE("grid plus refinement reaches the analytic value") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    double p = rng.uniform(1.0, 2.5);
    double q = p + rng.uniform(0.3, 3.0);
    std::uint64_t n = 3 + rng.uniform_index(500);
    auto phi = [&](double e) {
      return Interval::exact(std::pow(e, 1.0 / p - 1.0 / q) *
                             std::pow(static_cast<double>(n), -e));
    };
    GrandParams gp = gparams(0, 2, 2);
    GrandResult r = grand_sup(phi, gp);
    double want = phi(eps_argmax_analytic(n, p, q)).mid();
    CHECK(r.value.mid() >= want * (1 - 1e-6));
    CHECK(r.value.mid() <= want * (1 + 1e-9));
  }
}
