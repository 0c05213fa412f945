#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "h2orbits/extension.hpp"
#include "h2orbits/oracle.hpp"

using namespace h2orb;

namespace {

ExtensionGroup build(const HabClass& h, const WedgeClass& w) {
  return build_extension(cocycle_from_class(h, w, canonical_lift(h)));
}

WedgeClass zero_wedge(const GroupType& G) { return make_wedge(G, fp::Vec(wedge_size(G.d()), 0)); }

}  // namespace

TEST_CASE("split extension") {
  auto G = make_group_type(3, {1, 2});
  auto E = build(make_hab(G, {0, 0}), zero_wedge(G));
  CHECK(E.order() == 81);
  CHECK(E.is_abelian());
  CHECK(E.fingerprint().abelianization == std::vector<int>{1, 1, 2});
  CHECK(E.check().exhaustive);
  CHECK(E.check().defects == 0);
}

TEST_CASE("cyclic base: the lifted generator gives Z/p^2") {
  auto G = make_group_type(3, {1});
  auto E = build_extension(cocycle_from_class(make_hab(G, {1}), make_wedge(G, {}), dual_generator(G, 0)));
  CHECK(E.order() == 9);
  CHECK(E.fingerprint().order_histogram.at(9) == 6);
  CHECK(E.fingerprint().abelianization == std::vector<int>{2});
}

TEST_CASE("abelian class raising the exponent") {
  auto G = make_group_type(3, {1, 2});
  auto E = build(bockstein_reduce(dual_generator(G, 1)), zero_wedge(G));
  CHECK(E.is_abelian());
  CHECK(E.fingerprint().abelianization == std::vector<int>{1, 3});
}

TEST_CASE("cup class on (3,[1,1])") {
  auto G = make_group_type(3, {1, 1});
  auto w = wedge_product(G, {1, 0}, {0, 1});
  auto E = build(make_hab(G, {0, 0}), w);
  CHECK(E.order() == 27);
  CHECK(!E.is_abelian());
  CHECK(E.fingerprint().commutator_order == 3);
  CHECK(E.fingerprint().center_order == 3);
  CHECK(E.center_image() == kernel_M(w));
}

TEST_CASE("errors") {
  auto G = make_group_type(3, {1, 2});
  CHECK_THROWS_AS(cocycle_from_class(make_hab(G, {1, 0}), zero_wedge(G), dual_generator(G, 1)), std::invalid_argument);
  auto G4 = make_group_type(3, {1, 1, 1, 1});
  fp::Vec c(6, 0);
  c[wedge_slot(4, 0, 1)] = 1;
  c[wedge_slot(4, 2, 3)] = 1;
  CHECK_THROWS_AS(cocycle_from_class(make_hab(G4, {0, 0, 0, 0}), make_wedge(G4, c), make_dual(G4, {0, 0, 0, 0})),
                  OutOfScope);
  // a non-cocycle is rejected
  auto bad = cocycle_from_class(make_hab(G, {0, 0}), zero_wedge(G), make_dual(G, {0, 0}));
  bad.values[1 * bad.n + 2] = 1;
  CHECK_THROWS_AS(check_cocycle(bad), CocycleViolation);
  CHECK_THROWS_AS(build_extension(bad), CocycleViolation);
}

TEST_CASE("structure over every class of small groups") {
  for (auto [p, e] : std::vector<std::pair<int, std::vector<int>>>{
           {3, {1, 2}}, {3, {1, 1}}, {2, {2, 2}}, {3, {1, 1, 1}}, {2, {2, 3}}}) {
    auto G = make_group_type(p, e);
    for (const auto& h : enumerate_hab(G))
      for (const auto& w : enumerate_decomposable_wedges(G)) {
        auto E = build(h, w);
        CHECK(E.order() == static_cast<std::size_t>(p) * all_elements(G).size());
        CHECK(E.check().defects == 0);
        CHECK(E.is_abelian() == w.is_zero());
        const auto k = E.fingerprint().commutator_order;
        CHECK((k == 1 || k == static_cast<std::uint64_t>(p)));
        if (!E.is_abelian()) CHECK(E.center_image() == kernel_M(w));
      }
  }
}

TEST_CASE("any lift of the same class gives the same fingerprint") {
  auto G = make_group_type(3, {1, 2});
  auto w = zero_wedge(G);
  auto base = build_extension(cocycle_from_class(make_hab(G, {1, 1}), w, make_dual(G, {1, 1}))).fingerprint();
  for (std::int64_t t : {3, 6})
    CHECK(build_extension(cocycle_from_class(make_hab(G, {1, 1}), w, make_dual(G, {1, 1 + t}))).fingerprint() == base);
}

TEST_CASE("orbit fingerprints on homocyclic groups") {
  for (auto [p, e] : std::vector<std::pair<int, std::vector<int>>>{{3, {1, 1}}, {3, {2, 2}}, {2, {2, 2}}}) {
    auto G = make_group_type(p, e);
    auto P = orbit_partition_bruteforce(G);
    std::vector<Fingerprint> reps;
    for (const auto& b : P.blocks) {
      auto [h0, w0] = P.pair_at(b.front());
      const auto f0 = build(h0, w0).fingerprint();
      for (auto i : b) {
        auto [h, w] = P.pair_at(i);
        CHECK(build(h, w).fingerprint() == f0);
      }
      reps.push_back(f0);
    }
    std::sort(reps.begin(), reps.end());
    CHECK(std::unique(reps.begin(), reps.end()) == reps.end());  // distinct orbits, distinct fingerprints
  }
}

TEST_CASE("wedge part: orbit fingerprints on a non-homocyclic group") {
  auto G = make_group_type(3, {1, 2});
  auto P = orbit_partition_bruteforce(G);
  const auto zero = make_hab(G, {0, 0});
  for (const auto& b : P.blocks) {
    std::vector<Fingerprint> seen;
    for (auto i : b) {
      auto [h, w] = P.pair_at(i);
      if (h == zero) seen.push_back(build(h, w).fingerprint());
    }
    for (const auto& f : seen) CHECK(f == seen.front());
  }
}

TEST_CASE("pinned: the model moves Hab classes the dual action does not") {
  // sigma: g2 -> g2 + g1 sends e1 to e1 - e2 in the model, yet the extensions differ
  auto G = make_group_type(3, {1, 2});
  auto a = make_aut(G, {{1, 1}, {0, 1}}, 1);
  auto [h2, w2] = act(a, make_hab(G, {1, 0}), zero_wedge(G));
  CHECK(h2.functional == fp::Vec{1, 2});
  auto f1 = build(make_hab(G, {1, 0}), zero_wedge(G)).fingerprint();
  auto f2 = build(h2, w2).fingerprint();
  CHECK(f1.abelianization == std::vector<int>{2, 2});
  CHECK(f2.abelianization == std::vector<int>{1, 3});
}

TEST_CASE("multiplication table output") {
  auto G = make_group_type(3, {1});
  auto E = build(make_hab(G, {1}), make_wedge(G, {}));
  std::ostringstream os;
  E.write_table(os);
  const auto s = os.str();
  CHECK(s.find("order 9") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), '\n') == 2 + 9 + 81);
  CHECK(s.find("\n0 0 0\n") != std::string::npos);
}
