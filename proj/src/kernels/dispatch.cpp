#include <cstdlib>
#include <string_view>

#include "h2orbits/kernels.hpp"

namespace h2orb::kernels {

Isa best_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("H2ORBITS_ISA"); env && std::string_view(env) == "scalar") return Isa::scalar;
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
    return Isa::scalar;
  }();
  return chosen;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

std::uint64_t cocycle_defects(const std::int32_t* c, const std::uint32_t* sum, std::size_t n, std::int32_t p,
                              std::size_t x_begin, std::size_t x_end, Isa isa) {
  if (isa == Isa::avx2) return detail::cocycle_defects_avx2(c, sum, n, p, x_begin, x_end);
  return detail::cocycle_defects_scalar(c, sum, n, p, x_begin, x_end);
}

std::uint64_t mismatch_count(const std::uint32_t* a, const std::uint32_t* b, std::size_t len, Isa isa) {
  if (isa == Isa::avx2) return detail::mismatch_count_avx2(a, b, len);
  return detail::mismatch_count_scalar(a, b, len);
}

}  // namespace h2orb::kernels
