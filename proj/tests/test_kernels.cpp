#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "h2orbits/extension.hpp"
#include "h2orbits/kernels.hpp"

using namespace h2orb;
using kernels::Isa;

namespace {

bool have_avx2() { return kernels::best_isa() == Isa::avx2; }

std::vector<std::uint32_t> addition(const GroupType& G) {
  const auto el = all_elements(G);
  std::vector<std::uint32_t> s(el.size() * el.size());
  for (std::size_t x = 0; x < el.size(); ++x)
    for (std::size_t y = 0; y < el.size(); ++y)
      s[x * el.size() + y] = static_cast<std::uint32_t>(element_index(G, add(G, el[x], el[y])));
  return s;
}

}  // namespace

TEST_CASE("cocycle defects: scalar and avx2 agree") {
  if (!have_avx2()) {
    MESSAGE("no AVX2 on this CPU; scalar only");
    return;
  }
  std::mt19937 rng(7);
  for (auto [p, e] : std::vector<std::pair<int, std::vector<int>>>{{3, {1, 2}}, {3, {1, 1, 1}}, {2, {2, 3}}, {5, {1, 1}}, {3, {2}}}) {
    auto G = make_group_type(p, e);
    const auto sum = addition(G);
    auto c = cocycle_from_class(make_hab(G, fp::Vec(static_cast<std::size_t>(G.d()), 1)),
                                make_wedge(G, fp::Vec(wedge_size(G.d()), 0)),
                                make_dual(G, std::vector<std::int64_t>(static_cast<std::size_t>(G.d()), 1)));
    const auto n = c.n;
    const auto pp = static_cast<std::int32_t>(p);
    CHECK(kernels::cocycle_defects(c.values.data(), sum.data(), n, pp, 0, n, Isa::scalar) == 0);
    CHECK(kernels::cocycle_defects(c.values.data(), sum.data(), n, pp, 0, n, Isa::avx2) == 0);
    // random tables: plenty of defects, counts must match, also on sub-ranges
    for (int trial = 0; trial < 4; ++trial) {
      for (auto& v : c.values) v = static_cast<std::int32_t>(rng() % static_cast<unsigned>(p));
      const auto s = kernels::cocycle_defects(c.values.data(), sum.data(), n, pp, 0, n, Isa::scalar);
      CHECK(s > 0);
      CHECK(kernels::cocycle_defects(c.values.data(), sum.data(), n, pp, 0, n, Isa::avx2) == s);
      const std::size_t mid = n / 3;
      CHECK(kernels::cocycle_defects(c.values.data(), sum.data(), n, pp, mid, n, Isa::avx2) ==
            kernels::cocycle_defects(c.values.data(), sum.data(), n, pp, mid, n, Isa::scalar));
    }
  }
}

TEST_CASE("mismatch count: scalar and avx2 agree") {
  std::mt19937 rng(11);
  for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 1001u}) {
    std::vector<std::uint32_t> a(len), b(len);
    for (std::size_t i = 0; i < len; ++i) {
      a[i] = rng() % 4;
      b[i] = rng() % 4;
    }
    const auto s = kernels::mismatch_count(a.data(), b.data(), len, Isa::scalar);
    std::uint64_t expect = 0;
    for (std::size_t i = 0; i < len; ++i) expect += a[i] != b[i];
    CHECK(s == expect);
    if (have_avx2()) CHECK(kernels::mismatch_count(a.data(), b.data(), len, Isa::avx2) == s);
  }
}

TEST_CASE("extensions built with either kernel are identical") {
  if (!have_avx2()) return;
  auto G = make_group_type(3, {1, 2});
  auto c = cocycle_from_class(make_hab(G, {1, 1}), make_wedge(G, {1}), make_dual(G, {1, 1}));
  auto a = build_extension(c, Isa::scalar);
  auto b = build_extension(c, Isa::avx2);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(a.check().defects == b.check().defects);
  CHECK(std::string(kernels::isa_name(Isa::avx2)) == "avx2");
}
