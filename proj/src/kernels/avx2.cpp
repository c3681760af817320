#include <immintrin.h>

#include "vartin/kernels.hpp"

namespace vartin::kernels::detail {

namespace {

void compose_monomial(const std::int32_t* ta, const std::int32_t* xa,
                      const std::int32_t* ya, const std::int32_t* tb,
                      const std::int32_t* xb, const std::int32_t* yb,
                      std::int32_t* t, std::int32_t* x, std::int32_t* y,
                      std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i j = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tb + i));
    const __m256i gt = _mm256_i32gather_epi32(ta, j, 4);
    const __m256i gx = _mm256_i32gather_epi32(xa, j, 4);
    const __m256i gy = _mm256_i32gather_epi32(ya, j, 4);
    const __m256i bx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xb + i));
    const __m256i by = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(yb + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(t + i), gt);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), _mm256_add_epi32(bx, gx));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), _mm256_add_epi32(by, gy));
  }
  for (; i < n; ++i) {
    const std::int32_t j = tb[i];
    t[i] = ta[j];
    x[i] = xb[i] + xa[j];
    y[i] = yb[i] + ya[j];
  }
}

void gather_sub(const std::int64_t* a, const std::int64_t* b,
                const std::int32_t* idx, std::int64_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i j = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    const __m256i g = _mm256_i32gather_epi64(reinterpret_cast<const long long*>(b), j, 8);
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi64(va, g));
  }
  for (; i < n; ++i) out[i] = a[i] - b[idx[i]];
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", compose_monomial, gather_sub};
  return table;
}

}  // namespace vartin::kernels::detail
