#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "h2orbits/group.hpp"
#include "test_util.hpp"

using namespace h2orb;

TEST_CASE("make_group_type") {
  auto G = make_group_type(3, {2, 1});
  CHECK(G.exponents() == std::vector<int>{1, 2});
  CHECK(G.d() == 2);
  CHECK(G.n() == 2);
  CHECK(G.log_order() == 3);
  CHECK(G.blocks() == std::vector<Block>{{1, 1}, {2, 1}});
  CHECK(G.block_of(0) == 1);
  CHECK(G.block_of(1) == 2);
  CHECK_THROWS_AS(make_group_type(2, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_group_type(4, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_group_type(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_group_type(3, {0, 1}), std::invalid_argument);
  CHECK_NOTHROW(make_group_type(2, {2, 3}));
}

TEST_CASE("element_order") {
  auto G = make_group_type(3, {1, 2});
  CHECK(element_order(G, make_element(G, {1, 0})) == 3);
  CHECK(element_order(G, make_element(G, {1, 3})) == 3);
  CHECK(element_order(G, make_element(G, {0, 0})) == 1);
  CHECK(element_order(G, make_element(G, {0, 1})) == 9);
  // brute force by repeated addition
  for (const auto& x : all_elements(G)) {
    Element acc = make_element(G, {0, 0});
    std::int64_t k = 0;
    do {
      acc = add(G, acc, x);
      ++k;
    } while (acc != make_element(G, {0, 0}));
    CHECK(element_order(G, x) == k);
  }
}

TEST_CASE("subgroup basics") {
  auto G = make_group_type(3, {1, 2});
  CHECK(zero_subgroup(G).order() == 1);
  CHECK(subgroup_from_generators(G, std::vector<Element>{}).order() == 1);
  CHECK(subgroup_from_generators(G, std::vector<Element>{make_element(G, {0, 0})}) == zero_subgroup(G));
  CHECK(whole_group(G).order() == 27);
  CHECK(whole_group(G).index() == 1);
  CHECK(p_power_multiple(G, 1).index() == 9);
  auto G3 = subgroup_torsion(whole_group(G), 1);
  CHECK(G3.order() == 9);
  CHECK(subgroup_contains(G3, make_element(G, {1, 3})));
  CHECK(!subgroup_contains(G3, make_element(G, {0, 1})));
  CHECK(subgroup_torsion(whole_group(G), 0) == zero_subgroup(G));
  CHECK(subgroup_torsion(whole_group(G), 2) == whole_group(G));
}

TEST_CASE("worked example subgroups, type 2,2,3,3") {
  auto G = make_group_type(3, {2, 2, 3, 3});
  auto T = test::plus_pG(G, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto M = test::plus_pG(G, {{0, 1, 0, 0}, {0, 0, 1, -1}});
  CHECK(M.index() == 9);
  CHECK(T.index() == 3);
  CHECK(!subgroup_contains(M, generator(G, 0)));
  CHECK(subgroup_contains(M, scalar_mul(G, 3, generator(G, 0))));
  CHECK(subgroup_sum(M, T) == T);
  CHECK(subgroup_intersect(M, T) == M);
  CHECK(subgroup_leq(subgroup_torsion(whole_group(G), 1), M));
  CHECK(!subgroup_leq(subgroup_torsion(whole_group(G), 2), M));
  // shuffled generating set of the same M
  auto M2 = test::plus_pG(G, {{0, 2, 1, -1}, {3, 1, 0, 0}, {0, 0, 2, 1}});
  CHECK(M2 == M);
}

TEST_CASE("worked example subgroups, type 1,2,3,4") {
  auto G = make_group_type(3, {1, 2, 3, 4});
  auto T = test::plus_pG(G, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto M = test::plus_pG(G, {{1, 0, -1, -1}, {0, 1, 0, 0}});
  CHECK(subgroup_sum(M, T) == whole_group(G));
  CHECK(subgroup_intersect(M, T) == test::plus_pG(G, {{0, 1, 0, 0}}));
}

TEST_CASE("iso_type") {
  auto G = make_group_type(3, {1, 2});
  CHECK(subgroup_iso_type(whole_group(G)) == G.exponents());
  CHECK(subgroup_iso_type(p_power_multiple(G, 1)) == std::vector<int>{1});
  auto H = make_group_type(3, {3, 3});
  CHECK(subgroup_iso_type(p_power_multiple(H, 1)) == std::vector<int>{2, 2});
  CHECK(subgroup_iso_type(zero_subgroup(H)).empty());
  auto K = make_group_type(2, {2, 3, 5});
  CHECK(subgroup_iso_type(whole_group(K)) == K.exponents());
}

// Exhaustive checks on every subgroup of small groups.
TEST_CASE("lattice laws and canonical form soundness") {
  for (auto exps : {std::vector<int>{1, 2}, std::vector<int>{1, 1, 1}, std::vector<int>{2, 2}, std::vector<int>{1, 3},
                    std::vector<int>{1, 1, 2}}) {
    auto G = make_group_type(3, exps);
    auto subs = test::all_subgroups(G);
    CAPTURE(G.to_string());
    // element set <-> canonical matrix
    std::map<std::set<Element>, std::size_t> seen;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto elems = test::expand(subs[i]);
      CHECK(elems.size() == subs[i].order());
      CHECK(seen.emplace(elems, i).second);
      // iso type from counting |p^k S|
      CHECK(subgroup_iso_type(subs[i]) == test::iso_type_by_counting(G, elems));
      // torsion chain
      for (int m = 0; m <= G.n(); ++m) {
        auto t = subgroup_torsion(subs[i], m);
        CHECK(t == subgroup_intersect(subs[i], subgroup_torsion(whole_group(G), m)));
        if (m > 0) CHECK(subgroup_leq(subgroup_torsion(subs[i], m - 1), t));
      }
      CHECK(subgroup_torsion(subs[i], G.n()) == subs[i]);
      // idempotent canonicalization
      CHECK(subgroup_from_generators(G, subs[i].generators()) == subs[i]);
    }
    for (const auto& S : subs)
      for (const auto& T : subs) {
        auto I = subgroup_intersect(S, T);
        auto U = subgroup_sum(S, T);
        CHECK(I == subgroup_intersect(T, S));
        CHECK(U == subgroup_sum(T, S));
        CHECK(subgroup_sum(S, I) == S);
        CHECK(subgroup_intersect(S, U) == S);
        CHECK(I.order() * U.order() == S.order() * T.order());
        auto se = test::expand(S), te = test::expand(T);
        std::set<Element> inter;
        for (const auto& x : se)
          if (te.count(x)) inter.insert(x);
        CHECK(test::expand(I) == inter);
        CHECK(subgroup_leq(S, T) == std::includes(te.begin(), te.end(), se.begin(), se.end()));
      }
  }
}

TEST_CASE("associativity on sampled triples") {
  auto G = make_group_type(3, {1, 1, 2});
  auto subs = test::all_subgroups(G);
  for (std::size_t a = 0; a < subs.size(); a += 3)
    for (std::size_t b = 1; b < subs.size(); b += 5)
      for (std::size_t c = 2; c < subs.size(); c += 7) {
        CHECK(subgroup_sum(subgroup_sum(subs[a], subs[b]), subs[c]) ==
              subgroup_sum(subs[a], subgroup_sum(subs[b], subs[c])));
        CHECK(subgroup_intersect(subgroup_intersect(subs[a], subs[b]), subs[c]) ==
              subgroup_intersect(subs[a], subgroup_intersect(subs[b], subs[c])));
      }
}

TEST_CASE("mismatched parents") {
  auto G = make_group_type(3, {1, 2});
  auto H = make_group_type(3, {1, 1});
  CHECK_THROWS_AS(subgroup_sum(whole_group(G), whole_group(H)), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_intersect(whole_group(G), whole_group(H)), std::invalid_argument);
}
