#pragma once

#include <vector>

#include "lorentz/grand.hpp"
#include "lorentz/report.hpp"

namespace lorentz {

// Compatible couple (G^{1/p} l*_{p,q0}, G^{1/p} l*_{p,q1}) with p < q0 < q1.
struct KCouple {
  double p = 2.0;
  double q0 = 3.0;
  double q1 = kInf;

  double b() const;      // 2^{1/q0 - 1/q1} > 1
  double theta() const { return 1.0 / p; }
  void validate() const;
};

// One decomposition a = a0 + a1 on the rearranged moduli: a0 takes the head
// excess above the shift, a1 = a - a0 entrywise.  Both member norms are
// rearrangement invariant, so working on the sorted moduli loses nothing.
struct Decomposition {
  Sequence a0, a1;
};
Decomposition truncation_split(const Sequence& a, std::size_t cut,
                               double shift);

// The one-parameter truncation family of decompositions: for each cut index
// j and level shift lambda in {0, a*_{j+1}}, a0 takes the head excess and a1
// the rest.  Member norms are evaluated once; K upper bounds for any t are
// then the lower envelope of the lines x0 + t*x1.
struct DecompositionFamily {
  struct Member {
    std::size_t cut = 0;    // head length j
    double shift = 0.0;     // lambda
    double x0 = 0.0;        // ||a0||_{X0} (certified upper end)
    double x1 = 0.0;        // ||a1||_{X1}
    std::vector<double> prefix0, prefix1;  // prefix sums of (a_i*)^p
  };
  std::vector<Member> members;
  double a_x0 = 0.0;  // ||a||_{X0} (the trivial split)
  double a_x1 = 0.0;  // ||a||_{X1}
};

DecompositionFamily build_decomposition_family(const Sequence& a,
                                               const KCouple& c,
                                               const GrandParams& opts);

// min over the family of x0 + t*x1: an upper bound on K(t, a; X0, X1),
// nondecreasing and concave in t by construction.
double k_upper(double t, const DecompositionFamily& fam);
// convenience form (builds the family each call)
double k_upper(double t, const Sequence& a, const KCouple& c,
               const GrandParams& opts);

// Dyadic discretization of the real-interpolation norm with K replaced by
// its upper envelope: (sum_k (b^{-eta k} k_upper(b^k))^tau)^{1/tau}; the
// geometric tail is added to the upper end of the bracket.
Interval interp_norm_upper(const DecompositionFamily& fam, const KCouple& c,
                           double eta, double tau);

// Per-dyadic-index checks of the interpolation chain: the constant-1
// decomposition step gates, the steps whose constants the source absorbs are
// reported as ratios, and the aggregate Lambda / interp ratio is recorded.
CheckReport gor_chain_check(const Sequence& a, const KCouple& c, double eta,
                            double tau, const GrandParams& opts);

}  // namespace lorentz
