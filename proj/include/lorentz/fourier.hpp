#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz/numerics.hpp"
#include "lorentz/rearrange.hpp"

namespace lorentz {

// Trigonometric coefficients a_k = int_0^1 f(x) e^{-2 pi i k x} dx for
// k = -K..K, exact per cell.  Order: k = 0, 1, -1, 2, -2, ...
Sequence trig_coefficients(const DyadicStepFunction& f, std::uint64_t K);

// |a_k| along a fixed residue k mod N is c/|k|; these are the per-residue
// constants, enabling closed-form sums over all of Z.
struct TrigResidueData {
  double a0_mod = 0.0;
  std::vector<double> pos;  // index m = 1..N-1: |a_k| = pos[m]/k for k>0, k=m mod N
  std::vector<double> neg;  // |a_{-j}| = neg[m]/j for j>0, j=m mod N
};
TrigResidueData trig_residue_data(const DyadicStepFunction& f);

// (sum_{k in Z} |a_k|^s)^{1/s} over the full trig system, certified (s > 1).
Interval trig_coeff_power_norm(const DyadicStepFunction& f, double s);

// certified enclosure of sum_{|k|>K} |a_k|^2
Interval trig_parseval_defect(const DyadicStepFunction& f, std::uint64_t K);

// smallest power-of-two-ish K with defect < share * ||f||_2^2
std::uint64_t trig_auto_K(const DyadicStepFunction& f, double share);

// All 2^L Walsh coefficients (Paley order); Parseval holds with equality.
Sequence walsh_coefficients(const DyadicStepFunction& f);

// Paley-ordered Walsh row value on cell i (level L), +-1.
int walsh_row_value(int level, std::uint64_t j, std::uint64_t cell);

struct OrthonormalSystem {
  enum class Kind { Trig, Walsh, Custom };
  Kind kind = Kind::Walsh;
  std::uint64_t trig_K = 0;                  // Trig only
  std::vector<std::vector<Complex>> rows;    // Custom only, N x N
  std::string label() const;

  static OrthonormalSystem trig(std::uint64_t K);
  static OrthonormalSystem walsh();
  // validates pairwise orthonormality in (1/N) sum u conj(v) to 1e-10
  static OrthonormalSystem custom(std::vector<std::vector<Complex>> rows);
  // plain-text numeric file, row-major, whitespace separated, N*N reals
  static OrthonormalSystem custom_from_file(const std::string& path,
                                            std::size_t n);
};

// Coefficients of f against the system; delegates to the exact routines for
// trig/walsh.  Custom systems require f.cells() == matrix size.
Sequence ons_coefficients(const DyadicStepFunction& f,
                          const OrthonormalSystem& sys);

}  // namespace lorentz
