#pragma once
// Hot loops with a scalar and an AVX2 version, picked at runtime.

#include <cstddef>
#include <cstdint>

namespace h2orb::kernels {

enum class Isa { scalar, avx2 };

/// avx2 when the CPU has it, else scalar. H2ORBITS_ISA=scalar forces scalar.
Isa best_isa();
const char* isa_name(Isa isa);

/// Triples (x,y,z), x in [x_begin, x_end), y,z in [0,n), where
///   c[y][z] - c[x+y][z] + c[x][y+z] - c[x][y] != 0 mod p.
/// `c` is n*n row-major with entries in [0,p); `sum` is the n*n addition table.
std::uint64_t cocycle_defects(const std::int32_t* c, const std::uint32_t* sum, std::size_t n, std::int32_t p,
                              std::size_t x_begin, std::size_t x_end, Isa isa);

/// Number of positions where a[i] != b[i].
std::uint64_t mismatch_count(const std::uint32_t* a, const std::uint32_t* b, std::size_t len, Isa isa);

namespace detail {
std::uint64_t cocycle_defects_scalar(const std::int32_t* c, const std::uint32_t* sum, std::size_t n, std::int32_t p,
                                     std::size_t x_begin, std::size_t x_end);
std::uint64_t cocycle_defects_avx2(const std::int32_t* c, const std::uint32_t* sum, std::size_t n, std::int32_t p,
                                   std::size_t x_begin, std::size_t x_end);
std::uint64_t mismatch_count_scalar(const std::uint32_t* a, const std::uint32_t* b, std::size_t len);
std::uint64_t mismatch_count_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t len);
}  // namespace detail

}  // namespace h2orb::kernels
