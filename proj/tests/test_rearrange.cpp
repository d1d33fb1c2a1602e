#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lorentz/rearrange.hpp"
#include "lorentz/rng.hpp"

using namespace lorentz;

TEST_CASE("decreasing rearrangement sorts moduli") {
  Sequence a(std::vector<Complex>{1.0, 3.0, 2.0});
  auto r = decreasing_rearrangement(a);
  CHECK(r.entries()[0] == Complex(3.0));
  CHECK(r.entries()[1] == Complex(2.0));
  CHECK(r.entries()[2] == Complex(1.0));

  Sequence b(std::vector<Complex>{-2.0, 1.0});
  CHECK(b.rearranged()[0] == 2.0);
  CHECK(b.rearranged()[1] == 1.0);

  CHECK(decreasing_rearrangement(Sequence{}).size() == 0);
}

TEST_CASE("rearrangement matches a full-sort oracle on random complex input") {
  Rng rng(5);
  std::vector<Complex> v(50);
  for (auto& x : v) x = rng.uniform(-4, 4) * rng.unit_phase();
  Sequence a(v);
  std::vector<double> oracle(v.size());
  std::transform(v.begin(), v.end(), oracle.begin(),
                 [](Complex c) { return std::abs(c); });
  std::sort(oracle.begin(), oracle.end(), std::greater<double>());
  for (std::size_t i = 0; i < v.size(); ++i)
    CHECK(a.rearranged()[i] == oracle[i]);
}

TEST_CASE("permutation invariance of the rearrangement") {
  Rng rng(6);
  std::vector<Complex> v(32);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  Sequence a(v);
  std::vector<Complex> w = v;
  std::reverse(w.begin(), w.end());
  std::swap(w[3], w[17]);
  Sequence b(w);
  for (std::size_t i = 0; i < v.size(); ++i)
    CHECK(a.rearranged()[i] == b.rearranged()[i]);
}

TEST_CASE("step rearrangement basics") {
  DyadicStepFunction c = DyadicStepFunction::constant(3, Complex(0, -2));
  auto cr = step_rearrangement(c);
  for (auto v : cr.values()) CHECK(v == Complex(2.0));

  DyadicStepFunction f(2, {Complex(0), Complex(5), Complex(1), Complex(5)});
  auto fr = step_rearrangement(f);
  CHECK(fr.values()[0] == Complex(5.0));
  CHECK(fr.values()[1] == Complex(5.0));
  CHECK(fr.values()[2] == Complex(1.0));
  CHECK(fr.values()[3] == Complex(0.0));
}

TEST_CASE("distribution function basics and equimeasurability") {
  DyadicStepFunction one = DyadicStepFunction::constant(2, 1.0);
  CHECK(one.distribution(0.5) == 1.0);
  CHECK(one.distribution(1.0) == 0.0);  // strict inequality at the boundary
  CHECK_THROWS_AS(one.distribution(-0.1), std::invalid_argument);

  DyadicStepFunction f(2, {Complex(3), Complex(2), Complex(1), Complex(0)});
  CHECK(f.distribution(1.5) == 0.5);

  Rng rng(7);
  std::vector<Complex> v(256);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  DyadicStepFunction g(8, v);
  DyadicStepFunction gr = step_rearrangement(g);
  for (int i = 0; i < 100; ++i) {
    double lam = rng.uniform(0.0, 5.0);
    CHECK(g.distribution(lam) == gr.distribution(lam));
  }
}

TEST_CASE("rearranged_at matches the inf definition") {
  DyadicStepFunction f(2, {Complex(3), Complex(2), Complex(1), Complex(0)});
  CHECK(f.rearranged_at(0.0) == 3.0);
  CHECK(f.rearranged_at(0.2) == 3.0);
  CHECK(f.rearranged_at(0.25) == 2.0);
  CHECK(f.rearranged_at(0.9) == 0.0);
  CHECK(f.rearranged_at(1.0) == 0.0);
}

TEST_CASE("split at level: constant function sheds nothing") {
  DyadicStepFunction c = DyadicStepFunction::constant(3, Complex(2, 1));
  for (int k = 0; k <= 3; ++k) {
    auto [f0, f1] = split_at_level(c, {k});
    for (std::size_t i = 0; i < c.cells(); ++i) {
      CHECK(std::abs(f0.values()[i]) < 1e-15);
      CHECK(std::abs(f1.values()[i] - c.values()[i]) < 1e-15);
    }
  }
}

TEST_CASE("split at level follows the rearranged formula") {
  // f* = (4,3,2,1), k = 1 -> tau = 1/2, cut value is the 2nd largest = 3
  DyadicStepFunction f(2, {Complex(4), Complex(3), Complex(2), Complex(1)});
  auto [f0, f1] = split_at_level(f, {1});
  CHECK(f0.rearranged()[0] == doctest::Approx(1.0));  // 4 - 3
  CHECK(f0.rearranged()[1] == doctest::Approx(0.0));
  CHECK(f0.rearranged()[2] == doctest::Approx(0.0));
  // f1* = (3, 3, 2, 1): values at or above the cut are clamped to it
  CHECK(f1.rearranged()[0] == doctest::Approx(3.0));
  CHECK(f1.rearranged()[1] == doctest::Approx(3.0));
  CHECK(f1.rearranged()[2] == doctest::Approx(2.0));
  CHECK(f1.rearranged()[3] == doctest::Approx(1.0));

  CHECK_THROWS_AS(split_at_level(f, {4}), std::invalid_argument);
}

TEST_CASE("split reconstructs f exactly and contracts the rearrangement") {
  Rng rng(8);
  std::vector<Complex> v(64);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  DyadicStepFunction f(6, v);
  for (int k : {1, 2, 5}) {
    auto [f0, f1] = split_at_level(f, {k});
    for (std::size_t i = 0; i < f.cells(); ++i) {
      Complex back = f0.values()[i] + f1.values()[i];
      CHECK(std::abs(back - f.values()[i]) <=
            1e-14 * std::max(1.0, std::abs(f.values()[i])));
    }
    for (std::size_t i = 0; i < f.cells(); ++i) {
      CHECK(f1.rearranged()[i] <= f.rearranged()[i] * (1 + 1e-14));
      CHECK(f0.rearranged()[i] <= f.rearranged()[i] * (1 + 1e-14));
    }
  }
}

TEST_CASE("split satisfies the L2 identity of the truncated part") {
  Rng rng(9);
  std::vector<Complex> v(128);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  DyadicStepFunction f(7, v);
  for (int k : {1, 3, 6}) {
    auto [f0, f1] = split_at_level(f, {k});
    double tau = std::pow(2.0, -k);
    double cut = f.cut_value(k);
    // ||f1||_2^2 = tau * f*(tau)^2 + int_tau^1 f*(t)^2 dt
    double cellw = 1.0 / static_cast<double>(f.cells());
    double rhs = tau * cut * cut;
    for (std::size_t i = static_cast<std::size_t>(tau * f.cells());
         i < f.cells(); ++i)
      rhs += f.rearranged()[i] * f.rearranged()[i] * cellw;
    CHECK(f1.l2_norm_sq() == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("cesaro mean closed forms") {
  Sequence one(std::vector<Complex>{1.0});
  CHECK(cesaro_mean(one, 2.0, 1) == doctest::Approx(1.0));
  CHECK(cesaro_mean(one, 2.0, 4) == doctest::Approx(0.5));
  Sequence ab(std::vector<Complex>{3.0, 1.0});
  CHECK(cesaro_mean(ab, 2.0, 2) == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS_AS(cesaro_mean(one, 2.0, 0), std::invalid_argument);

  // alpha = 2, k = n: equals l2 norm / sqrt(n)
  Rng rng(10);
  std::vector<Complex> v(40);
  for (auto& x : v) x = rng.pareto(1.5) * rng.unit_phase();
  Sequence a(v);
  double l2 = 0;
  for (auto& x : v) l2 += std::norm(x);
  l2 = std::sqrt(l2);
  CHECK(cesaro_mean(a, 2.0, v.size()) ==
        doctest::Approx(l2 / std::sqrt(double(v.size()))).epsilon(1e-13));
}
