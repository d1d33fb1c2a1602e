// AVX2+FMA lane.  Compiled into the library unconditionally on x86 via
// function target attributes; only executed when cpuid reports support.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

#include "lorentz/kernels.hpp"

namespace lorentz::kern {
namespace {

#define LZ_AVX2 __attribute__((target("avx2,fma")))

// Cephes-style double exp: range reduction by ln2, rational approximation of
// e^r on |r| <= ln2/2, reconstruction via exponent bits.  Accurate to a few
// ulp; equivalence vs std::exp is asserted in the unit tests.
LZ_AVX2 inline __m256d exp4(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
  const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
  const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
  const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
  const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
  const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
  const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d hi_bound = _mm256_set1_pd(709.0);
  const __m256d lo_bound = _mm256_set1_pd(-708.0);

  __m256d under = _mm256_cmp_pd(x, lo_bound, _CMP_LT_OQ);
  __m256d over = _mm256_cmp_pd(x, hi_bound, _CMP_GT_OQ);
  x = _mm256_min_pd(x, hi_bound);
  x = _mm256_max_pd(x, lo_bound);

  __m256d nf = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                               _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(nf, c1, x);
  r = _mm256_fnmadd_pd(nf, c2, r);
  __m256d r2 = _mm256_mul_pd(r, r);

  __m256d px = _mm256_fmadd_pd(p0, r2, p1);
  px = _mm256_fmadd_pd(px, r2, p2);
  px = _mm256_mul_pd(px, r);
  __m256d qx = _mm256_fmadd_pd(q0, r2, q1);
  qx = _mm256_fmadd_pd(qx, r2, q2);
  qx = _mm256_fmadd_pd(qx, r2, q3);

  __m256d e = _mm256_add_pd(
      one, _mm256_div_pd(_mm256_mul_pd(two, px), _mm256_sub_pd(qx, px)));

  __m128i n32 = _mm256_cvtpd_epi32(nf);
  __m256i n64 = _mm256_cvtepi32_epi64(n32);
  n64 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
  n64 = _mm256_slli_epi64(n64, 52);
  e = _mm256_mul_pd(e, _mm256_castsi256_pd(n64));
  e = _mm256_blendv_pd(e, _mm256_set1_pd(__builtin_inf()), over);
  return _mm256_andnot_pd(under, e);
}

struct VecAccum {
  __m256d sum, comp;
};

LZ_AVX2 inline void two_sum(VecAccum& acc, __m256d term) {
  const __m256d absmask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d t = _mm256_add_pd(acc.sum, term);
  __m256d big_sum = _mm256_cmp_pd(_mm256_and_pd(acc.sum, absmask),
                                  _mm256_and_pd(term, absmask), _CMP_GE_OQ);
  __m256d corr1 = _mm256_add_pd(_mm256_sub_pd(acc.sum, t), term);
  __m256d corr2 = _mm256_add_pd(_mm256_sub_pd(term, t), acc.sum);
  acc.comp = _mm256_add_pd(acc.comp, _mm256_blendv_pd(corr2, corr1, big_sum));
  acc.sum = t;
}

// fixed-order horizontal Neumaier merge of the 4 sums and 4 compensations
LZ_AVX2 inline double merge(const VecAccum& acc) {
  alignas(32) double sl[4], cl[4];
  _mm256_store_pd(sl, acc.sum);
  _mm256_store_pd(cl, acc.comp);
  double sum = 0.0, comp = 0.0;
  auto add = [&](double v) {
    double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  };
  for (int k = 0; k < 4; ++k) add(sl[k]);
  for (int k = 0; k < 4; ++k) add(cl[k]);
  return sum + comp;
}

LZ_AVX2 double weighted_exp_sum_avx2(const double* w, const double* x,
                                     std::size_t n, double s) {
  const __m256d vs = _mm256_set1_pd(s);
  VecAccum acc{_mm256_setzero_pd(), _mm256_setzero_pd()};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d term = exp4(_mm256_mul_pd(vs, _mm256_loadu_pd(x + i)));
    if (w) term = _mm256_mul_pd(term, _mm256_loadu_pd(w + i));
    two_sum(acc, term);
  }
  if (i < n) {
    alignas(32) double xb[4] = {0, 0, 0, 0};
    alignas(32) double wb[4] = {0, 0, 0, 0};
    for (std::size_t j = i; j < n; ++j) {
      xb[j - i] = x[j];
      wb[j - i] = w ? w[j] : 1.0;
    }
    __m256d term = _mm256_mul_pd(exp4(_mm256_mul_pd(vs, _mm256_load_pd(xb))),
                                 _mm256_load_pd(wb));
    two_sum(acc, term);
  }
  return merge(acc);
}

LZ_AVX2 double max_weighted_exp_avx2(const double* w, const double* x,
                                     std::size_t n, double s) {
  const __m256d vs = _mm256_set1_pd(s);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = exp4(_mm256_mul_pd(vs, _mm256_loadu_pd(x + i)));
    if (w) v = _mm256_mul_pd(v, _mm256_loadu_pd(w + i));
    best = _mm256_max_pd(best, v);
  }
  alignas(32) double bl[4];
  _mm256_store_pd(bl, best);
  double m = std::max(std::max(bl[0], bl[1]), std::max(bl[2], bl[3]));
  for (; i < n; ++i) {
    double term = std::exp(s * x[i]);
    if (w) term *= w[i];
    if (term > m) m = term;
  }
  return m;
}

LZ_AVX2 double sum_avx2(const double* v, std::size_t n) {
  VecAccum acc{_mm256_setzero_pd(), _mm256_setzero_pd()};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) two_sum(acc, _mm256_loadu_pd(v + i));
  if (i < n) {
    alignas(32) double vb[4] = {0, 0, 0, 0};
    for (std::size_t j = i; j < n; ++j) vb[j - i] = v[j];
    two_sum(acc, _mm256_load_pd(vb));
  }
  return merge(acc);
}

}  // namespace

namespace detail {

const Ops* avx2_ops_impl() {
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (!supported) return nullptr;
  static const Ops ops{"avx2", weighted_exp_sum_avx2, max_weighted_exp_avx2,
                       sum_avx2};
  return &ops;
}

}  // namespace detail
}  // namespace lorentz::kern

#endif  // x86
