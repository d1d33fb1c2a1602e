#include <doctest.h>

#include <cmath>

#include "lorentz/kfun.hpp"
#include "lorentz/verify.hpp"

using namespace lorentz;

namespace {

GrandParams quick_grand() {
  GrandParams gp;
  gp.eps_grid = 129;
  return gp;
}

}  // namespace

TEST_CASE("couple validation and the b constant") {
  KCouple c{2.0, 3.0, kInf};
  c.validate();
  CHECK(c.b() == doctest::Approx(std::pow(2.0, 1.0 / 3.0)));
  CHECK(c.theta() == doctest::Approx(0.5));
  CHECK_THROWS_AS((KCouple{2.0, 2.0, 4.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((KCouple{0.5, 2.0, 4.0}).validate(), std::invalid_argument);
}

TEST_CASE("truncation splits reconstruct the rearranged sequence exactly") {
  Rng rng(10);
  Sequence a = family::random_seq(rng, 33);
  const auto& star = a.rearranged();
  for (std::size_t cut : {0ul, 1ul, 7ul, 33ul}) {
    double shift = cut < star.size() ? star[cut] : 0.0;
    for (double lambda : {0.0, shift}) {
      Decomposition d = truncation_split(a, cut, lambda);
      for (std::size_t m = 0; m < star.size(); ++m) {
        double back = d.a0.entries()[m].real() + d.a1.entries()[m].real();
        CHECK(back == doctest::Approx(star[m]).epsilon(1e-15));
      }
    }
  }
  CHECK_THROWS_AS(truncation_split(a, 99, 0.0), std::invalid_argument);
}

TEST_CASE("k_upper contains the trivial splits and matches their envelope") {
  GrandParams gp = quick_grand();
  Sequence spike = family::spike_seq(6);
  KCouple c{2.0, 3.0, kInf};
  DecompositionFamily fam = build_decomposition_family(spike, c, gp);

  // t -> 0 and t -> inf behave like the one-sided splits
  CHECK(k_upper(1e9, fam) <= fam.a_x0 * (1 + 1e-12));
  CHECK(k_upper(1e-9, fam) <= 1e-9 * fam.a_x1 * (1 + 1e-12));
  for (double t : {0.1, 1.0, 7.0})
    CHECK(k_upper(t, fam) <=
          std::min(fam.a_x0, t * fam.a_x1) * (1 + 1e-12));
  CHECK_THROWS_AS(k_upper(0.0, fam), std::invalid_argument);

  // reproducibility of the convenience overload
  CHECK(k_upper(1.0, spike, c, gp) ==
        doctest::Approx(k_upper(1.0, fam)).epsilon(1e-10));
}

TEST_CASE("k_upper envelope properties on random sequences") {
  GrandParams gp = quick_grand();
  Rng rng(11);
  KCouple c{2.0, 3.0, kInf};
  for (int trial = 0; trial < 20; ++trial) {
    Sequence a = family::random_seq(rng, 8 + rng.uniform_index(40));
    DecompositionFamily fam = build_decomposition_family(a, c, gp);
    double b = c.b();
    double prev = 0.0, prev_ratio = kInf;
    double t = std::pow(b, -8.0);
    for (int j = 0; j < 16; ++j) {
      double k = k_upper(t, fam);
      for (const auto& m : fam.members)
        CHECK(k <= (m.x0 + t * m.x1) * (1 + 1e-12));
      CHECK(k >= prev * (1 - 1e-12));            // nondecreasing
      CHECK(k / t <= prev_ratio * (1 + 1e-12));  // K(t)/t nonincreasing
      prev = k;
      prev_ratio = k / t;
      t *= b;
    }
  }
}

TEST_CASE("interpolation norm: zero, homogeneity, and the spike baseline") {
  GrandParams gp = quick_grand();
  KCouple c{2.0, 3.0, kInf};
  double eta = 1.0 / 3.0;
  double q = 1.0 / ((1.0 - eta) / c.q0 + eta / c.q1);
  double tau = q;

  CHECK(interp_norm_upper(build_decomposition_family(Sequence{}, c, gp), c,
                          eta, tau)
            .mid() == 0.0);

  Sequence spike = family::spike_seq(8);
  Interval base = interp_norm_upper(build_decomposition_family(spike, c, gp),
                                    c, eta, tau);
  CHECK(base.mid() > 0);
  CHECK(base.rel_width() < 1e-6);

  std::vector<Complex> scaled(8, 0.0);
  scaled[0] = 4.0;
  Interval big = interp_norm_upper(
      build_decomposition_family(Sequence(scaled), c, gp), c, eta, tau);
  CHECK(big.mid() == doctest::Approx(4.0 * base.mid()).epsilon(1e-8));
}

TEST_CASE("gor chain: constant-1 steps gate, ratios are stable") {
  GrandParams gp = quick_grand();
  KCouple c{2.0, 3.0, kInf};
  double eta = 1.0 / 3.0;
  double q = 1.0 / ((1.0 - eta) / c.q0 + eta / c.q1);

  CHECK(gor_chain_check(Sequence{}, c, eta, q, gp).status ==
        CheckStatus::Trivial);

  Sequence spike = family::spike_seq(8);
  CheckReport r = gor_chain_check(spike, c, eta, q, gp);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.ratio > 0);

  // flat sequences of growing length: aggregate ratios drift slowly
  double rmin = kInf, rmax = 0.0;
  for (std::size_t n : {4, 16, 64}) {
    CheckReport fr = gor_chain_check(family::flat_seq(n), c, eta, q, gp);
    REQUIRE(fr.status == CheckStatus::Pass);
    rmin = std::min(rmin, fr.ratio);
    rmax = std::max(rmax, fr.ratio);
  }
  CHECK(rmax / rmin <= 10.0);

  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Sequence a = family::random_seq(rng, 8 + rng.uniform_index(24));
    for (double tau : {q, 2.0}) {
      CheckReport rr = gor_chain_check(a, c, eta, tau, gp);
      CAPTURE(trial);
      REQUIRE(rr.status == CheckStatus::Pass);
      CHECK(std::isfinite(rr.ratio));
    }
  }
}

TEST_CASE("frozen regression baselines for the spike couple") {
  GrandParams gp = quick_grand();
  KCouple c{2.0, 3.0, kInf};
  double eta = 1.0 / 3.0;
  double q = 1.0 / ((1.0 - eta) / c.q0 + eta / c.q1);
  DecompositionFamily fam =
      build_decomposition_family(family::spike_seq(8), c, gp);
  CHECK(k_upper(1.0, fam) ==
        doctest::Approx(0.99999999950000396).epsilon(1e-8));
  Interval interp = interp_norm_upper(fam, c, eta, q);
  CHECK(interp.mid() == doctest::Approx(1.3388916809522053).epsilon(1e-6));
  CheckReport gor = gor_chain_check(family::spike_seq(8), c, eta, q, gp);
  CHECK(gor.ratio == doctest::Approx(0.81244022465620502).epsilon(1e-6));
}

TEST_CASE("gor chain on the second couple") {
  GrandParams gp = quick_grand();
  KCouple c{1.0, 2.0, 4.0};
  double eta = 0.5;
  double q = 1.0 / ((1.0 - eta) / c.q0 + eta / c.q1);
  Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    Sequence a = family::random_seq(rng, 8 + rng.uniform_index(16));
    CheckReport r = gor_chain_check(a, c, eta, q, gp);
    REQUIRE(r.status == CheckStatus::Pass);
  }
}
