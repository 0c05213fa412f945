// Built with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "h2orbits/kernels.hpp"

namespace h2orb::kernels::detail {

std::uint64_t cocycle_defects_avx2(const std::int32_t* c, const std::uint32_t* sum, std::size_t n, std::int32_t p,
                                   std::size_t x_begin, std::size_t x_end) {
  const __m256i vp = _mm256_set1_epi32(p), vnp = _mm256_set1_epi32(-p), zero = _mm256_setzero_si256();
  std::uint64_t bad = 0;
  const std::size_t n8 = n & ~std::size_t{7};
  for (std::size_t x = x_begin; x < x_end; ++x) {
    const std::int32_t* cx = c + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      const std::int32_t* cy = c + y * n;
      const std::int32_t* cxy = c + sum[x * n + y] * n;
      const std::uint32_t* sy = sum + y * n;
      const std::int32_t k = cx[y];
      const __m256i vk = _mm256_set1_epi32(k);
      std::size_t z = 0;
      for (; z < n8; z += 8) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cy + z));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cxy + z));
        const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sy + z));
        const __m256i g = _mm256_i32gather_epi32(cx, idx, 4);
        const __m256i v = _mm256_sub_epi32(_mm256_add_epi32(_mm256_sub_epi32(a, b), g), vk);
        const __m256i ok = _mm256_or_si256(_mm256_or_si256(_mm256_cmpeq_epi32(v, zero), _mm256_cmpeq_epi32(v, vp)),
                                           _mm256_cmpeq_epi32(v, vnp));
        const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(ok));
        bad += static_cast<std::uint64_t>(8 - __builtin_popcount(static_cast<unsigned>(mask)));
      }
      for (; z < n; ++z) {
        const std::int32_t v = cy[z] - cxy[z] + cx[sy[z]] - k;
        bad += (v != 0 && v != p && v != -p) ? 1 : 0;
      }
    }
  }
  return bad;
}

std::uint64_t mismatch_count_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t len) {
  std::uint64_t n = 0;
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, y)));
    n += static_cast<std::uint64_t>(8 - __builtin_popcount(static_cast<unsigned>(eq)));
  }
  for (; i < len; ++i) n += a[i] != b[i];
  return n;
}

}  // namespace h2orb::kernels::detail
