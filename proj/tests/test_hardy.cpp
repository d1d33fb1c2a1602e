#include <doctest.h>

#include <cmath>

#include "lorentz/hardy.hpp"
#include "lorentz/rng.hpp"

using namespace lorentz;

namespace {

DyadicStepFunction random_step(std::uint64_t seed, int level) {
  Rng rng(seed);
  std::vector<Complex> v(std::size_t{1} << level);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  return DyadicStepFunction(level, std::move(v));
}

}  // namespace

TEST_CASE("head inequality closed form: f = 1, r = 1, alpha = 1/2, q = 1") {
  DyadicStepFunction one = DyadicStepFunction::constant(5, 1.0);
  CheckReport r = hardy_head_check(one, {0.5, 1.0, 1.0});
  CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(r.rhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.margin == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r.status == CheckStatus::Pass);
}

TEST_CASE("head inequality: zero function and divergence report") {
  DyadicStepFunction zero = DyadicStepFunction::constant(4, 0.0);
  CHECK(hardy_head_check(zero, {0.5, 1.0, 1.0}).status ==
        CheckStatus::Trivial);
  DyadicStepFunction one = DyadicStepFunction::constant(4, 1.0);
  CHECK(hardy_head_check(one, {1.2, 1.0, 2.0}).status ==
        CheckStatus::Divergent);
  CHECK_THROWS_AS(hardy_head_check(one, {0.5, 1.0, kInf}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hardy_head_check(one, {0.5, 2.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("head inequality on a random corpus with the convergent grid") {
  for (int trial = 0; trial < 100; ++trial) {
    DyadicStepFunction f = random_step(200 + trial, 5);
    for (double r : {0.5, 1.0, 2.0})
      for (double alpha : {0.1, 0.25, 0.4})
        for (double q : {r, 2.0, 4.0}) {
          if (q < r) continue;
          CheckReport rep = hardy_head_check(f, {alpha, r, q});
          CAPTURE(trial);
          CAPTURE(r);
          CAPTURE(alpha);
          CAPTURE(q);
          REQUIRE(rep.status == CheckStatus::Pass);
          CHECK(rep.margin >= -1e-12 * rep.rhs);
        }
  }
}

TEST_CASE("tail inequality equality instance: f = 1, r = 1, alpha = 1, q = 1") {
  DyadicStepFunction one = DyadicStepFunction::constant(6, 1.0);
  CheckReport r = hardy_tail_check(one, {1.0, 1.0, 1.0});
  CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(r.margin) <= 1e-12);
  CHECK(r.status == CheckStatus::Pass);
}

TEST_CASE("tail inequality sup form: f = 1, r = 1, alpha = 1, q = inf") {
  DyadicStepFunction one = DyadicStepFunction::constant(6, 1.0);
  CheckReport r = hardy_tail_check(one, {1.0, 1.0, kInf});
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.status == CheckStatus::Pass);
}

TEST_CASE("tail inequality on a random corpus incl. q = inf") {
  for (int trial = 0; trial < 60; ++trial) {
    DyadicStepFunction f = random_step(300 + trial, 5);
    for (double r : {0.5, 1.0, 2.0})
      for (double alpha : {0.1, 0.5, 1.0})
        for (double q : {r, 2.0, 4.0, kInf}) {
          if (q < r) continue;
          CheckReport rep = hardy_tail_check(f, {alpha, r, q});
          CAPTURE(trial);
          CAPTURE(r);
          CAPTURE(alpha);
          CAPTURE(q);
          REQUIRE(rep.status == CheckStatus::Pass);
          CHECK(rep.margin >= -1e-10 * rep.rhs);
        }
  }
}

TEST_CASE("hardy margins scale linearly in f") {
  DyadicStepFunction f = random_step(400, 5);
  std::vector<Complex> scaled;
  for (auto& c : f.values()) scaled.push_back(5.0 * c);
  DyadicStepFunction g(5, scaled);
  CheckReport rf = hardy_tail_check(f, {0.5, 1.0, 2.0});
  CheckReport rg = hardy_tail_check(g, {0.5, 1.0, 2.0});
  CHECK(rg.margin == doctest::Approx(5.0 * rf.margin).epsilon(1e-9));
  CheckReport hf = hardy_head_check(f, {0.25, 1.0, 2.0});
  CheckReport hg = hardy_head_check(g, {0.25, 1.0, 2.0});
  CHECK(hg.margin == doctest::Approx(5.0 * hf.margin).epsilon(1e-9));
}

TEST_CASE("grand head corollary: trivial, closed-form, and random instances") {
  DyadicStepFunction zero = DyadicStepFunction::constant(4, 0.0);
  CHECK(hardy_grand_head_check(zero, 1.0, 1.0, 0.0).status ==
        CheckStatus::Trivial);

  DyadicStepFunction one = DyadicStepFunction::constant(5, 1.0);
  CheckReport r = hardy_grand_head_check(one, 1.0, 1.0, 0.0);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.margin >= -1e-10 * r.rhs);

  for (int trial = 0; trial < 25; ++trial) {
    DyadicStepFunction f = random_step(500 + trial, 5);
    for (auto [rr, qq] : {std::pair{0.5, 1.0}, {1.0, 2.0}, {2.0, 4.0}})
      for (double theta : {0.0, 0.5}) {
        CheckReport rep = hardy_grand_head_check(f, rr, qq, theta);
        CAPTURE(trial);
        CAPTURE(rr);
        CAPTURE(qq);
        CAPTURE(theta);
        REQUIRE(rep.status == CheckStatus::Pass);
        CHECK(rep.margin >= -1e-10 * rep.rhs);
      }
  }
}

TEST_CASE("grand tail corollary passes on random corpora") {
  DyadicStepFunction zero = DyadicStepFunction::constant(4, 0.0);
  CHECK(hardy_grand_tail_check(zero, 1.0, 2.0, 0.0).status ==
        CheckStatus::Trivial);
  DyadicStepFunction one = DyadicStepFunction::constant(5, 1.0);
  CheckReport r = hardy_grand_tail_check(one, 1.0, 2.0, 0.0);
  CHECK(r.status == CheckStatus::Pass);

  for (int trial = 0; trial < 25; ++trial) {
    DyadicStepFunction f = random_step(600 + trial, 5);
    for (auto [rr, qq] : {std::pair{0.5, 1.0}, {1.0, 2.0}, {2.0, 4.0}})
      for (double theta : {0.0, 0.5}) {
        CheckReport rep = hardy_grand_tail_check(f, rr, qq, theta);
        CAPTURE(trial);
        CAPTURE(rr);
        CAPTURE(qq);
        CAPTURE(theta);
        REQUIRE(rep.status == CheckStatus::Pass);
        CHECK(rep.margin >= -1e-10 * rep.rhs);
      }
  }
}
