#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "h2orbits/cohomology.hpp"
#include "test_util.hpp"

using namespace h2orb;

namespace {

std::vector<fp::Vec> all_vectors(std::int64_t p, std::size_t len) {
  std::vector<fp::Vec> out{fp::Vec(len, 0)};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<fp::Vec> next;
    for (const auto& v : out)
      for (std::int64_t a = 0; a < p; ++a) {
        auto w = v;
        w[i] = a;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

// A few hand-made automorphisms of (p,[1,2]).
std::vector<AutElement> sample_auts_12(const GroupType& G) {
  return {make_aut(G, {{1, 0}, {0, 1}}, 2), make_aut(G, {{1, 1}, {0, 1}}, 1), make_aut(G, {{1, 0}, {3, 1}}, 1),
          make_aut(G, {{2, 0}, {0, 4}}, 2), make_aut(G, {{1, 2}, {6, 5}}, 1)};
}

}  // namespace

TEST_CASE("bockstein_reduce and bockquivalence") {
  auto G = make_group_type(3, {1, 2});
  CHECK(bockstein_reduce(dual_generator(G, 0)).functional == fp::Vec{1, 0});
  CHECK(bockstein_reduce(make_dual(G, {0, 3})).is_zero());
  CHECK(bockstein_reduce(make_dual(G, {0, 0})).is_zero());
  CHECK(bockquivalence_class(dual_generator(G, 0)) == 1);
  CHECK(bockquivalence_class(make_dual(G, {1, 1})) == 2);
  CHECK(bockquivalence_class(make_dual(G, {0, 3})) == 0);
  // fibers of the reduction all have size |G^|/p^d
  std::map<fp::Vec, int> fib;
  for (const auto& x : all_elements(G)) ++fib[bockstein_reduce(make_dual(G, x.coords)).functional];
  CHECK(fib.size() == 9);
  for (const auto& [k, v] : fib) CHECK(v == 3);
}

TEST_CASE("kernel_T") {
  auto G = make_group_type(3, {1, 2});
  CHECK(kernel_T(make_hab(G, {0, 0})) == whole_group(G));
  auto T1 = kernel_T(bockstein_reduce(dual_generator(G, 0)));
  CHECK(T1 == test::plus_pG(G, {{0, 1}}));
  CHECK(T1.index() == 3);
  CHECK(kernel_T(bockstein_reduce(dual_generator(G, 1))) == test::plus_pG(G, {{1, 0}}));

  // bijection between projective classes and maximal subgroups containing pG
  for (auto exps : {std::vector<int>{1, 2}, std::vector<int>{1, 1, 2}, std::vector<int>{2, 2, 3}}) {
    auto H = make_group_type(3, exps);
    std::map<std::vector<howell::Row>, int> hits;
    auto pG = p_power_multiple(H, 1);
    for (const auto& f : all_vectors(3, static_cast<std::size_t>(H.d()))) {
      auto h = make_hab(H, f);
      if (h.is_zero()) continue;
      auto T = kernel_T(h);
      CHECK(T.log_index() == 1);
      CHECK(subgroup_leq(pG, T));
      ++hits[T.rows()];
    }
    // (p^d - 1)/(p - 1) hyperplanes, each hit by p - 1 scalings
    const int d = H.d();
    CHECK(hits.size() == static_cast<std::size_t>((ipow(3, static_cast<unsigned>(d)) - 1) / 2));
    for (const auto& [k, v] : hits) CHECK(v == 2);
  }
}

TEST_CASE("wedge decomposability") {
  auto G3 = make_group_type(3, {1, 1, 1});
  CHECK(wedge_is_decomposable(make_wedge(G3, {0, 0, 0})));
  for (const auto& c : all_vectors(3, 3)) CHECK(wedge_is_decomposable(make_wedge(G3, c)));
  auto G4 = make_group_type(3, {1, 1, 1, 1});
  fp::Vec c(6, 0);
  c[wedge_slot(4, 0, 1)] = 1;
  c[wedge_slot(4, 2, 3)] = 1;
  auto w = make_wedge(G4, c);
  CHECK(!wedge_is_decomposable(w));
  CHECK_THROWS_AS(wedge_factorize(w), OutOfScope);
  CHECK_THROWS_AS(kernel_M(w), OutOfScope);
}

TEST_CASE("wedge_factorize") {
  auto G = make_group_type(3, {1, 1, 2});
  auto e12 = wedge_product(G, {1, 0, 0}, {0, 1, 0});
  auto [f, g] = wedge_factorize(e12);
  CHECK(f == fp::Vec{1, 0, 0});
  CHECK(g == fp::Vec{0, 1, 0});
  auto w2 = make_wedge(G, {2, 0, 0});
  auto [f2, g2] = wedge_factorize(w2);
  CHECK(wedge_product(G, f2, g2) == w2);
  CHECK(fp::rank({f2, g2, {1, 0, 0}, {0, 1, 0}}, 3) == 2);
  CHECK_THROWS_AS(wedge_factorize(make_wedge(G, {0, 0, 0})), std::invalid_argument);
  // every nonzero product factors back to the same span
  for (const auto& a : all_vectors(3, 3))
    for (const auto& b : all_vectors(3, 3)) {
      auto w = wedge_product(G, a, b);
      if (w.is_zero()) continue;
      auto [x, y] = wedge_factorize(w);
      CHECK(wedge_product(G, x, y) == w);
      CHECK(fp::rank({a, b, x, y}, 3) == 2);
    }
}

TEST_CASE("kernel_M") {
  auto G = make_group_type(3, {1, 2});
  CHECK(kernel_M(make_wedge(G, {0})) == whole_group(G));
  auto M = kernel_M(make_wedge(G, {1}));
  CHECK(M == p_power_multiple(G, 1));
  CHECK(M.index() == 9);
  auto H = make_group_type(3, {1, 1, 2});
  auto M2 = kernel_M(wedge_product(H, {1, 0, 0}, {0, 1, 0}));
  CHECK(M2 == test::plus_pG(H, {{0, 0, 1}}));
  CHECK(M2.index() == 9);
  CHECK(subgroup_contains(M2, generator(H, 2)));
}

TEST_CASE("decomposable wedges vs index p^2 subgroups containing pG") {
  for (int d = 2; d <= 4; ++d) {
    auto G = make_group_type(3, std::vector<int>(static_cast<std::size_t>(d), 1));
    int nonzero_dec = 0;
    std::map<std::vector<howell::Row>, int> hits;
    for (const auto& c : all_vectors(3, wedge_size(d))) {
      auto w = make_wedge(G, c);
      if (w.is_zero() || !wedge_is_decomposable(w)) continue;
      ++nonzero_dec;
      auto M = kernel_M(w);
      CHECK(M.log_index() == 2);
      ++hits[M.rows()];
    }
    int index_p2 = 0;
    auto pG = p_power_multiple(G, 1);
    for (const auto& S : test::all_subgroups(G))
      if (S.log_index() == 2 && subgroup_leq(pG, S)) ++index_p2;
    CHECK(nonzero_dec == 2 * index_p2);
    CHECK(hits.size() == static_cast<std::size_t>(index_p2));
  }
}

TEST_CASE("make_aut validation") {
  auto G = make_group_type(3, {1, 2});
  CHECK_THROWS_AS(make_aut(G, {{1, 0}, {1, 1}}, 1), std::invalid_argument);  // (1,0) must be divisible by 3
  CHECK_THROWS_AS(make_aut(G, {{1, 0}, {0, 3}}, 1), std::invalid_argument);  // not onto
  CHECK_THROWS_AS(make_aut(G, {{1, 0}, {0, 1}}, 3), std::invalid_argument);  // lambda = 0
  CHECK_NOTHROW(make_aut(G, {{1, 1}, {3, 1}}, 2));
}

TEST_CASE("act: formulas and action laws") {
  auto G = make_group_type(3, {1, 2});
  auto h = make_hab(G, {1, 2});
  auto w = make_wedge(G, {1});
  auto [h1, w1] = act(make_aut(G, {{1, 0}, {0, 1}}, 2), h, w);
  CHECK(h1.functional == fp::Vec{2, 1});
  CHECK(w1.coeffs == fp::Vec{2});
  // sigma = multiplication by 2, lambda = 2: h fixed, w scaled by 1/2 = 2
  auto [h2, w2] = act(make_aut(G, {{2, 0}, {0, 2}}, 2), h, w);
  CHECK(h2 == h);
  CHECK(w2.coeffs == fp::Vec{2});

  auto id = identity_aut(G);
  auto auts = sample_auts_12(G);
  auto habs = all_vectors(3, 2);
  for (const auto& hv : habs)
    for (std::int64_t wc = 0; wc < 3; ++wc) {
      auto hh = make_hab(G, hv);
      auto ww = make_wedge(G, {wc});
      CHECK(act(id, hh, ww) == std::make_pair(hh, ww));
      for (const auto& a : auts)
        for (const auto& b : auts) {
          auto [hb, wb] = act(b, hh, ww);
          CHECK(act(compose(a, b), hh, ww) == act(a, hb, wb));
        }
      for (const auto& a : auts) {
        auto [ha, wa] = act(a, hh, ww);
        CHECK(kernel_T(ha) == apply(a, kernel_T(hh)));
        CHECK(kernel_M(wa) == apply(a, kernel_M(ww)));
      }
    }
}

TEST_CASE("equivariance of kernels on a 3-generator group") {
  auto G = make_group_type(3, {1, 1, 2});
  std::vector<AutElement> auts = {make_aut(G, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, 1),
                                  make_aut(G, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}, 1),
                                  make_aut(G, {{1, 0, 0}, {0, 1, 0}, {3, 0, 1}}, 2),
                                  make_aut(G, {{1, 1, 0}, {0, 1, 1}, {3, 0, 4}}, 1)};
  for (const auto& hv : all_vectors(3, 3))
    for (const auto& wv : all_vectors(3, 3)) {
      auto h = make_hab(G, hv);
      auto w = make_wedge(G, wv);
      for (const auto& a : auts) {
        auto [ha, wa] = act(a, h, w);
        CHECK(kernel_T(ha) == apply(a, kernel_T(h)));
        CHECK(kernel_M(wa) == apply(a, kernel_M(w)));
      }
    }
}

TEST_CASE("scalar part acts freely on nonzero pairs") {
  for (std::int64_t p : {3, 5}) {
    auto G = make_group_type(p, {1, 2});
    for (const auto& hv : all_vectors(p, 2))
      for (std::int64_t wc = 0; wc < p; ++wc) {
        auto h = make_hab(G, hv);
        auto w = make_wedge(G, {wc});
        if (h.is_zero() && w.is_zero()) continue;
        for (std::int64_t l = 1; l < p; ++l) {
          auto a = make_aut(G, {{1, 0}, {0, 1}}, l);
          CHECK((act(a, h, w) == std::make_pair(h, w)) == (l == 1));
        }
      }
  }
}
