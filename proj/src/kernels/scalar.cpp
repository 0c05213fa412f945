#include "h2orbits/kernels.hpp"

namespace h2orb::kernels::detail {

std::uint64_t cocycle_defects_scalar(const std::int32_t* c, const std::uint32_t* sum, std::size_t n, std::int32_t p,
                                     std::size_t x_begin, std::size_t x_end) {
  std::uint64_t bad = 0;
  for (std::size_t x = x_begin; x < x_end; ++x) {
    const std::int32_t* cx = c + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      const std::int32_t* cy = c + y * n;
      const std::int32_t* cxy = c + sum[x * n + y] * n;
      const std::uint32_t* sy = sum + y * n;
      const std::int32_t k = cx[y];
      for (std::size_t z = 0; z < n; ++z) {
        const std::int32_t v = cy[z] - cxy[z] + cx[sy[z]] - k;
        bad += (v != 0 && v != p && v != -p) ? 1 : 0;
      }
    }
  }
  return bad;
}

std::uint64_t mismatch_count_scalar(const std::uint32_t* a, const std::uint32_t* b, std::size_t len) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < len; ++i) n += a[i] != b[i];
  return n;
}

}  // namespace h2orb::kernels::detail
