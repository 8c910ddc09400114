// AVX2 variants of the error-function batch kernels.  Translation unit is
// compiled with -mavx2 -mfma; the dispatcher only routes here after a
// runtime cpuid check.  Each kernel evaluates the same Cody approximants as
// the scalar reference, computing every region on all lanes and blending by
// region mask; the equivalence suite pins the lane-for-lane agreement.

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <limits>

#include "backend.hpp"
#include "cody_constants.hpp"
#include "signprior/specfun.hpp"

namespace signprior::specfun::detail {

namespace {

using namespace cody;

inline __m256d vset(double v) { return _mm256_set1_pd(v); }

inline __m256d vabs(__m256d x) {
  return _mm256_andnot_pd(vset(-0.0), x);
}

inline __m256d vblend(__m256d if_false, __m256d if_true, __m256d mask) {
  return _mm256_blendv_pd(if_false, if_true, mask);
}

// ----------------------------------------------------------------------
// exp(x) for 4 doubles: Cody-Waite argument reduction + Cephes rational,
// two-factor 2^n scaling so the full double range survives the shift.
// ----------------------------------------------------------------------
constexpr double kExpHi = 709.782712893384;
constexpr double kExpLo = -745.133219101941;
constexpr double kLog2E = 1.4426950408889634074;
constexpr double kC1 = 6.93145751953125e-1;
constexpr double kC2 = 1.42860682030941723212e-6;
constexpr double kExpP[3] = {1.26177193074810590878e-4,
                             3.02994407707441961300e-2,
                             9.99999999999999999910e-1};
constexpr double kExpQ[4] = {3.00198505138664455042e-6,
                             2.52448340349684104192e-3,
                             2.27265548208155028766e-1,
                             2.00000000000000000005e0};

inline __m256d vexp(__m256d x) {
  const __m256d hi_mask = _mm256_cmp_pd(x, vset(kExpHi), _CMP_GT_OQ);
  const __m256d lo_mask = _mm256_cmp_pd(x, vset(kExpLo), _CMP_LT_OQ);
  const __m256d xc = _mm256_min_pd(_mm256_max_pd(x, vset(-746.0)), vset(710.0));

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, vset(kLog2E)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, vset(kC1), xc);
  r = _mm256_fnmadd_pd(n, vset(kC2), r);

  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d px = _mm256_fmadd_pd(vset(kExpP[0]), rr, vset(kExpP[1]));
  px = _mm256_fmadd_pd(px, rr, vset(kExpP[2]));
  px = _mm256_mul_pd(px, r);
  __m256d qx = _mm256_fmadd_pd(vset(kExpQ[0]), rr, vset(kExpQ[1]));
  qx = _mm256_fmadd_pd(qx, rr, vset(kExpQ[2]));
  qx = _mm256_fmadd_pd(qx, rr, vset(kExpQ[3]));
  const __m256d e =
      _mm256_fmadd_pd(vset(2.0), _mm256_div_pd(px, _mm256_sub_pd(qx, px)),
                      vset(1.0));

  // 2^n = 2^n1 * 2^n2 with n1 = n >> 1 (AVX2 has no 64-bit arithmetic
  // shift, so split while the exponents are still 32-bit).
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  const __m128i n1 = _mm_srai_epi32(n32, 1);
  const __m128i n2 = _mm_sub_epi32(n32, n1);
  const __m256i bias = _mm256_set1_epi64x(1023);
  const __m256d f1 = _mm256_castsi256_pd(_mm256_slli_epi64(
      _mm256_add_epi64(_mm256_cvtepi32_epi64(n1), bias), 52));
  const __m256d f2 = _mm256_castsi256_pd(_mm256_slli_epi64(
      _mm256_add_epi64(_mm256_cvtepi32_epi64(n2), bias), 52));

  __m256d res = _mm256_mul_pd(_mm256_mul_pd(e, f1), f2);
  res = vblend(res, vset(std::numeric_limits<double>::infinity()), hi_mask);
  res = _mm256_andnot_pd(lo_mask, res);
  return res;
}

// exp(-y^2), y >= 0, via the 1/16-grid split (h*h exact).
inline __m256d vexp_neg_sq(__m256d y) {
  const __m256d h = _mm256_mul_pd(
      _mm256_round_pd(_mm256_mul_pd(y, vset(16.0)),
                      _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC),
      vset(0.0625));
  const __m256d del = _mm256_mul_pd(_mm256_sub_pd(y, h), _mm256_add_pd(y, h));
  return _mm256_mul_pd(vexp(_mm256_mul_pd(_mm256_sub_pd(vset(0.0), h), h)),
                       vexp(_mm256_sub_pd(vset(0.0), del)));
}

// exp(+y^2), y >= 0, same split; caller guarantees y < 26.641.
inline __m256d vexp_pos_sq(__m256d y) {
  const __m256d h = _mm256_mul_pd(
      _mm256_round_pd(_mm256_mul_pd(y, vset(16.0)),
                      _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC),
      vset(0.0625));
  const __m256d del = _mm256_mul_pd(_mm256_sub_pd(y, h), _mm256_add_pd(y, h));
  return _mm256_mul_pd(vexp(_mm256_mul_pd(h, h)), vexp(del));
}

// erf(x) for the |x| <= kThresh region (valid garbage elsewhere, blended out).
inline __m256d region_a_erf(__m256d x, __m256d y) {
  __m256d ysq = _mm256_mul_pd(x, x);
  ysq = _mm256_and_pd(ysq, _mm256_cmp_pd(y, vset(kXSmall), _CMP_GT_OQ));
  __m256d num = _mm256_mul_pd(vset(kA[4]), ysq);
  __m256d den = ysq;
  for (int i = 0; i < 3; ++i) {
    num = _mm256_mul_pd(_mm256_add_pd(num, vset(kA[i])), ysq);
    den = _mm256_mul_pd(_mm256_add_pd(den, vset(kB[i])), ysq);
  }
  num = _mm256_add_pd(num, vset(kA[3]));
  den = _mm256_add_pd(den, vset(kB[3]));
  return _mm256_div_pd(_mm256_mul_pd(x, num), den);
}

// erfcx(y) for kThresh <= y <= 4.
inline __m256d region_b_erfcx(__m256d y) {
  __m256d num = _mm256_mul_pd(vset(kC[8]), y);
  __m256d den = y;
  for (int i = 0; i < 7; ++i) {
    num = _mm256_mul_pd(_mm256_add_pd(num, vset(kC[i])), y);
    den = _mm256_mul_pd(_mm256_add_pd(den, vset(kD[i])), y);
  }
  num = _mm256_add_pd(num, vset(kC[7]));
  den = _mm256_add_pd(den, vset(kD[7]));
  return _mm256_div_pd(num, den);
}

// erfcx(y) for y > 4 (input clamped below at 4 to keep 1/y^2 sane).
inline __m256d region_c_erfcx(__m256d y) {
  const __m256d yc = _mm256_max_pd(y, vset(4.0));
  const __m256d z = _mm256_div_pd(vset(1.0), _mm256_mul_pd(yc, yc));
  __m256d num = _mm256_mul_pd(vset(kP[5]), z);
  __m256d den = z;
  for (int i = 0; i < 4; ++i) {
    num = _mm256_mul_pd(_mm256_add_pd(num, vset(kP[i])), z);
    den = _mm256_mul_pd(_mm256_add_pd(den, vset(kQ[i])), z);
  }
  num = _mm256_add_pd(num, vset(kP[4]));
  den = _mm256_add_pd(den, vset(kQ[4]));
  const __m256d r = _mm256_div_pd(_mm256_mul_pd(z, num), den);
  __m256d res = _mm256_div_pd(_mm256_sub_pd(vset(kSqrPi), r), yc);
  const __m256d huge = _mm256_cmp_pd(yc, vset(kXHuge), _CMP_GE_OQ);
  res = vblend(res, _mm256_div_pd(vset(kSqrPi), yc), huge);
  const __m256d too_big = _mm256_cmp_pd(yc, vset(kXMax), _CMP_GE_OQ);
  return _mm256_andnot_pd(too_big, res);
}

// erfcx(y) for y >= kThresh.
inline __m256d erfcx_positive(__m256d y) {
  const __m256d far_mask = _mm256_cmp_pd(y, vset(4.0), _CMP_GT_OQ);
  return vblend(region_b_erfcx(y), region_c_erfcx(y), far_mask);
}

// erfc(y) for y >= kThresh (0 beyond kXBig, matching the scalar cutoff).
inline __m256d erfc_positive(__m256d y) {
  __m256d r = _mm256_mul_pd(vexp_neg_sq(y), erfcx_positive(y));
  return _mm256_andnot_pd(_mm256_cmp_pd(y, vset(kXBig), _CMP_GE_OQ), r);
}

inline __m256d erf_pd(__m256d x) {
  const __m256d y = vabs(x);
  const __m256d small_mask = _mm256_cmp_pd(y, vset(kThresh), _CMP_LE_OQ);
  const __m256d ra = region_a_erf(x, y);
  const __m256d c = erfc_positive(y);
  __m256d rbc = _mm256_add_pd(_mm256_sub_pd(vset(0.5), c), vset(0.5));
  const __m256d neg = _mm256_cmp_pd(x, vset(0.0), _CMP_LT_OQ);
  rbc = vblend(rbc, _mm256_sub_pd(vset(0.0), rbc), neg);
  return vblend(rbc, ra, small_mask);
}

inline __m256d erfc_pd(__m256d x) {
  const __m256d y = vabs(x);
  const __m256d small_mask = _mm256_cmp_pd(y, vset(kThresh), _CMP_LE_OQ);
  const __m256d ra = _mm256_sub_pd(vset(1.0), region_a_erf(x, y));
  __m256d rbc = erfc_positive(y);
  const __m256d neg = _mm256_cmp_pd(x, vset(0.0), _CMP_LT_OQ);
  rbc = vblend(rbc, _mm256_sub_pd(vset(2.0), rbc), neg);
  return vblend(rbc, ra, small_mask);
}

inline __m256d erfcx_pd(__m256d x) {
  const __m256d y = vabs(x);
  const __m256d small_mask = _mm256_cmp_pd(y, vset(kThresh), _CMP_LE_OQ);

  __m256d ysq = _mm256_mul_pd(x, x);
  ysq = _mm256_and_pd(ysq, _mm256_cmp_pd(y, vset(kXSmall), _CMP_GT_OQ));
  const __m256d ra = _mm256_mul_pd(
      vexp(ysq), _mm256_sub_pd(vset(1.0), region_a_erf(x, y)));

  const __m256d pos = erfcx_positive(y);
  // reflection for x < -kThresh; overflowing lanes (x > 0 with huge y)
  // produce inf here and are blended away below
  const __m256d refl = _mm256_fmsub_pd(vset(2.0), vexp_pos_sq(y), pos);
  const __m256d neg = _mm256_cmp_pd(x, vset(0.0), _CMP_LT_OQ);

  __m256d r = vblend(pos, refl, neg);
  return vblend(r, ra, small_mask);
}

inline __m256d gaussian_pdf_pd(__m256d x) {
  constexpr double kInvSqrt2Pi = 0.3989422804014326779399;
  const __m256d y = vabs(x);
  const __m256d y1 = _mm256_mul_pd(
      _mm256_round_pd(_mm256_mul_pd(y, vset(0x1.0p16)),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC),
      vset(0x1.0p-16));
  const __m256d y2 = _mm256_sub_pd(y, y1);
  const __m256d e1 = vexp(_mm256_mul_pd(_mm256_mul_pd(y1, y1), vset(-0.5)));
  const __m256d arg2 = _mm256_mul_pd(
      _mm256_fmsub_pd(y2, vset(-0.5), y1), y2);
  const __m256d e2 = vexp(arg2);
  return _mm256_mul_pd(vset(kInvSqrt2Pi), _mm256_mul_pd(e1, e2));
}

template <__m256d (*Kernel)(__m256d), double (*Tail)(double)>
void run_batch(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, Kernel(_mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) out[i] = Tail(x[i]);
}

}  // namespace

void erf_batch_avx2(const double* x, double* out, std::size_t n) {
  run_batch<erf_pd, specfun::erf>(x, out, n);
}

void erfc_batch_avx2(const double* x, double* out, std::size_t n) {
  run_batch<erfc_pd, specfun::erfc>(x, out, n);
}

void erfcx_batch_avx2(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < kXNeg) throw_erfcx_overflow(x[i]);
  }
  run_batch<erfcx_pd, specfun::erfcx>(x, out, n);
}

void gaussian_pdf_batch_avx2(const double* x, double* out, std::size_t n) {
  run_batch<gaussian_pdf_pd, specfun::gaussian_pdf>(x, out, n);
}

}  // namespace signprior::specfun::detail
