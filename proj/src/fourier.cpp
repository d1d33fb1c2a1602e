#include "lorentz/fourier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace lorentz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t bit_reverse(std::uint64_t x, int bits) {
  std::uint64_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

// in-place forward DFT, X_m = sum_j a_j e^{-2 pi i j m / N}; N a power of two
void fft(std::vector<Complex>& a) {
  std::size_t n = a.size();
  if (n <= 1) return;
  int bits = std::countr_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = bit_reverse(i, bits);
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<Complex> tw(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = -kTwoPi / static_cast<double>(len);
    for (std::size_t j = 0; j < len / 2; ++j)
      tw[j] = std::polar(1.0, ang * static_cast<double>(j));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        Complex u = a[i + j];
        Complex v = a[i + j + len / 2] * tw[j];
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

}  // namespace

Sequence trig_coefficients(const DyadicStepFunction& f, std::uint64_t K) {
  std::size_t n = f.cells();
  std::vector<Complex> dft = f.values();
  fft(dft);
  std::vector<Complex> unit(n);
  for (std::size_t m = 0; m < n; ++m)
    unit[m] = std::polar(1.0, -kTwoPi * static_cast<double>(m) /
                                  static_cast<double>(n));

  std::vector<Complex> out;
  out.reserve(2 * K + 1);
  out.push_back(dft[0] / static_cast<double>(n));  // a_0 = mean
  for (std::uint64_t k = 1; k <= K; ++k) {
    std::uint64_t mp = k % n;
    std::uint64_t mn = (n - mp) % n;
    Complex denom_p(0.0, kTwoPi * static_cast<double>(k));
    // a_k = D_{k mod N} (1 - e^{-2 pi i k/N}) / (2 pi i k)
    out.push_back(dft[mp] * (1.0 - unit[mp]) / denom_p);
    // a_{-k}: conjugate twiddle, index -k mod N
    Complex denom_n(0.0, -kTwoPi * static_cast<double>(k));
    out.push_back(dft[mn] * (1.0 - std::conj(unit[mp])) / denom_n);
  }
  return Sequence(std::move(out));
}

TrigResidueData trig_residue_data(const DyadicStepFunction& f) {
  std::size_t n = f.cells();
  std::vector<Complex> dft = f.values();
  fft(dft);
  TrigResidueData rd;
  rd.a0_mod = std::abs(dft[0]) / static_cast<double>(n);
  rd.pos.assign(n, 0.0);
  rd.neg.assign(n, 0.0);
  for (std::size_t m = 1; m < n; ++m) {
    double s = std::abs(std::sin(std::numbers::pi * static_cast<double>(m) /
                                 static_cast<double>(n))) /
               std::numbers::pi;
    rd.pos[m] = std::abs(dft[m]) * s;
    rd.neg[m] = std::abs(dft[n - m]) * s;
  }
  return rd;
}

Interval trig_coeff_power_norm(const DyadicStepFunction& f, double s) {
  if (!(s > 1.0))
    throw std::invalid_argument("trig_coeff_power_norm: need s > 1");
  TrigResidueData rd = trig_residue_data(f);
  std::size_t n = f.cells();
  Interval total = Interval::exact(std::pow(rd.a0_mod, s));
  for (std::size_t m = 1; m < n; ++m) {
    double w = std::pow(rd.pos[m], s) + std::pow(rd.neg[m], s);
    if (w == 0.0) continue;
    // sum over k = m, m+N, m+2N, ... of k^{-s}
    Interval block = arith_power_tail(-s, static_cast<double>(m),
                                      static_cast<double>(n), 1e-12);
    total += block.scaled(w);
  }
  return total.pow(1.0 / s).inflated(4e-15);
}

Interval trig_parseval_defect(const DyadicStepFunction& f, std::uint64_t K) {
  TrigResidueData rd = trig_residue_data(f);
  std::size_t n = f.cells();
  Interval total = Interval::exact(0.0);
  for (std::size_t m = 1; m < n; ++m) {
    // positive side: first k > K with k = m (mod N)
    auto first_after = [&](std::uint64_t K0) {
      std::uint64_t q = (K0 >= m) ? (K0 - m) / n + 1 : 0;
      return m + q * n;
    };
    if (rd.pos[m] > 0.0) {
      Interval t = arith_power_tail(-2.0, static_cast<double>(first_after(K)),
                                    static_cast<double>(n), 1e-10);
      total += t.scaled(rd.pos[m] * rd.pos[m]);
    }
    if (rd.neg[m] > 0.0) {
      Interval t = arith_power_tail(-2.0, static_cast<double>(first_after(K)),
                                    static_cast<double>(n), 1e-10);
      total += t.scaled(rd.neg[m] * rd.neg[m]);
    }
  }
  return total;
}

std::uint64_t trig_auto_K(const DyadicStepFunction& f, double share) {
  if (!(share > 0.0)) throw std::invalid_argument("share must be positive");
  double l2sq = f.l2_norm_sq();
  if (l2sq == 0.0) return f.cells();
  std::uint64_t K = f.cells();
  while (trig_parseval_defect(f, K).hi > share * l2sq) {
    K *= 2;
    if (K > (std::uint64_t{1} << 40))
      throw std::runtime_error("trig_auto_K: K exceeded 2^40");
  }
  return K;
}

int walsh_row_value(int level, std::uint64_t j, std::uint64_t cell) {
  std::uint64_t rev = bit_reverse(cell, level);
  return (std::popcount(j & rev) & 1) ? -1 : 1;
}

Sequence walsh_coefficients(const DyadicStepFunction& f) {
  std::size_t n = f.cells();
  int level = f.level();
  // Paley order = Hadamard transform of the bit-reversed cell values
  std::vector<Complex> a(n);
  for (std::size_t i = 0; i < n; ++i) a[bit_reverse(i, level)] = f.values()[i];
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        Complex u = a[j], v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
    }
  }
  for (auto& c : a) c /= static_cast<double>(n);
  return Sequence(std::move(a));
}

std::string OrthonormalSystem::label() const {
  switch (kind) {
    case Kind::Trig:
      return "trig";
    case Kind::Walsh:
      return "walsh";
    default:
      return "custom";
  }
}

OrthonormalSystem OrthonormalSystem::trig(std::uint64_t K) {
  OrthonormalSystem s;
  s.kind = Kind::Trig;
  s.trig_K = K;
  return s;
}

OrthonormalSystem OrthonormalSystem::walsh() {
  OrthonormalSystem s;
  s.kind = Kind::Walsh;
  return s;
}

OrthonormalSystem OrthonormalSystem::custom(
    std::vector<std::vector<Complex>> rows) {
  std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("custom system: empty matrix");
  for (const auto& r : rows)
    if (r.size() != n)
      throw std::invalid_argument("custom system: matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex ip = 0.0;
      for (std::size_t k = 0; k < n; ++k) ip += rows[i][k] * std::conj(rows[j][k]);
      ip /= static_cast<double>(n);
      double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(ip - want) > 1e-10)
        throw std::invalid_argument("custom system: rows not orthonormal");
    }
  }
  OrthonormalSystem s;
  s.kind = Kind::Custom;
  s.rows = std::move(rows);
  return s;
}

OrthonormalSystem OrthonormalSystem::custom_from_file(const std::string& path,
                                                      std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double v;
      if (!(in >> v))
        throw std::invalid_argument("matrix file too short: " + path);
      rows[i][j] = v;
    }
  return custom(std::move(rows));
}

Sequence ons_coefficients(const DyadicStepFunction& f,
                          const OrthonormalSystem& sys) {
  switch (sys.kind) {
    case OrthonormalSystem::Kind::Trig:
      return trig_coefficients(f, sys.trig_K);
    case OrthonormalSystem::Kind::Walsh:
      return walsh_coefficients(f);
    case OrthonormalSystem::Kind::Custom: {
      if (sys.rows.size() != f.cells())
        throw std::invalid_argument(
            "custom system dimension does not match the function grid");
      std::size_t n = f.cells();
      std::vector<Complex> out(n);
      for (std::size_t j = 0; j < n; ++j) {
        Complex ip = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          ip += f.values()[i] * std::conj(sys.rows[j][i]);
        out[j] = ip / static_cast<double>(n);
      }
      return Sequence(std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace lorentz
