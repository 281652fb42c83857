#include "tga/kernels.hpp"

#ifdef TGA_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace tga::kernels::avx2 {

namespace {

constexpr std::uint32_t kMaxLaneModulus = 256;

// x mod p for 16-bit lanes, x < 2^16, p < 256.  barrett = floor(2^16 / p)
// underestimates the quotient by at most one, so a single conditional
// subtraction finishes the reduction.
__attribute__((target("avx2"))) inline __m256i reduce(__m256i x, __m256i p, __m256i barrett) {
  const __m256i q = _mm256_mulhi_epu16(x, barrett);
  const __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, p));
  return _mm256_min_epu16(r, _mm256_sub_epi16(r, p));
}

}  // namespace

__attribute__((target("avx2"))) void axpy(std::span<Lane> dst, std::span<const Lane> src, Lane c,
                                          std::uint32_t p) {
  if (c == 0) return;
  if (p >= kMaxLaneModulus) return scalar::axpy(dst, src, c, p);
  const std::size_t n = dst.size();
  const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
  const __m256i vb = _mm256_set1_epi16(static_cast<short>(65536u / p));
  const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    d = _mm256_add_epi16(d, _mm256_mullo_epi16(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce(d, vp, vb));
  }
  if (i < n) scalar::axpy(dst.subspan(i), src.subspan(i), c, p);
}

__attribute__((target("avx2"))) void scale(std::span<Lane> dst, Lane c, std::uint32_t p) {
  if (p >= kMaxLaneModulus) return scalar::scale(dst, c, p);
  const std::size_t n = dst.size();
  const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
  const __m256i vb = _mm256_set1_epi16(static_cast<short>(65536u / p));
  const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce(_mm256_mullo_epi16(d, vc), vp, vb));
  }
  if (i < n) scalar::scale(dst.subspan(i), c, p);
}

__attribute__((target("avx2"))) bool is_zero(std::span<const Lane> v) {
  const std::size_t n = v.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  return scalar::is_zero(v.subspan(i));
}

}  // namespace tga::kernels::avx2

#endif
