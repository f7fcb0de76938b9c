#include "cleanroom/kernels.hpp"

// AVX2 variants. Four lanes of double / 64-bit integer work per step, tail
// handled scalar. Compiled only on x86-64 (this TU gets -mavx2; selection
// still checks the CPU at runtime).

#if defined(CLEANROOM_HAVE_AVX2)

#include <immintrin.h>

namespace cleanroom::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += x[i];
  return total;
}

double abs_diff_sum_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign_mask, d));
  }
  double total = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    total += d < 0 ? -d : d;
  }
  return total;
}

double masked_sum_avx2(const double* x, const std::uint8_t* mask, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // Widen 4 mask bytes to 64-bit lanes, then keep x where mask != 0.
    __m128i bytes = _mm_cvtsi32_si128(*reinterpret_cast<const int*>(mask + i));
    __m256i lanes = _mm256_cvtepu8_epi64(bytes);
    __m256i keep = _mm256_cmpgt_epi64(lanes, _mm256_setzero_si256());
    __m256d vals = _mm256_and_pd(_mm256_loadu_pd(x + i), _mm256_castsi256_pd(keep));
    acc = _mm256_add_pd(acc, vals);
  }
  double total = hsum(acc);
  for (; i < n; ++i) {
    if (mask[i]) total += x[i];
  }
  return total;
}

std::size_t count_below_avx2(const std::uint64_t* x, std::size_t n,
                             std::uint64_t threshold) {
  // cmpgt is signed; flip the sign bit to compare unsigned.
  const __m256i flip = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ull));
  const __m256i thr =
      _mm256_set1_epi64x(static_cast<long long>(threshold ^ 0x8000000000000000ull));
  __m256i counts = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_xor_si256(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)), flip);
    __m256i lt = _mm256_cmpgt_epi64(thr, v);  // all-ones where x < threshold
    counts = _mm256_sub_epi64(counts, lt);
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), counts);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += x[i] < threshold;
  return total;
}

}  // namespace

namespace detail {
const Table kAvx2Table = {sum_avx2, abs_diff_sum_avx2, masked_sum_avx2,
                          count_below_avx2};
}  // namespace detail

}  // namespace cleanroom::kernels

#endif  // CLEANROOM_HAVE_AVX2
