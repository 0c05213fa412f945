#pragma once
// Coordinates for Hab(G;F_p), the decomposable part of Lambda^2 V^, the dual
// group and the action of Aut(G) x F_p^*.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "h2orbits/fp_linalg.hpp"
#include "h2orbits/group.hpp"

namespace h2orb {

/// Raised for inputs the classification does not cover (non-decomposable wedges).
class OutOfScope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// c = sum a_i g*_i in Hom(G, C/p^n C), a_i mod p^{e_i}.
struct DualElement {
  GroupType parent;
  std::vector<std::int64_t> coords;
};
DualElement make_dual(const GroupType& G, std::vector<std::int64_t> coords);
DualElement dual_generator(const GroupType& G, int i);

/// Abelian class, held as a functional on V = G/pG.
struct HabClass {
  GroupType parent;
  fp::Vec functional;
  bool is_zero() const;
  bool operator==(const HabClass& o) const { return functional == o.functional && parent == o.parent; }
};
HabClass make_hab(const GroupType& G, fp::Vec functional);

/// Position of (i,j), i<j, in the packed upper triangle: (0,1),(0,2),...,(1,2),...
std::size_t wedge_slot(int d, int i, int j);
std::size_t wedge_size(int d);

/// w = sum_{i<j} w_ij v*_i ^ v*_j
struct WedgeClass {
  GroupType parent;
  fp::Vec coeffs;
  bool is_zero() const;
  /// antisymmetric entry, any i, j
  std::int64_t at(int i, int j) const;
  fp::Mat matrix() const;
  bool operator==(const WedgeClass& o) const { return coeffs == o.coeffs && parent == o.parent; }
};
WedgeClass make_wedge(const GroupType& G, fp::Vec coeffs);
WedgeClass wedge_from_matrix(const GroupType& G, const fp::Mat& W);
WedgeClass wedge_product(const GroupType& G, const fp::Vec& f, const fp::Vec& g);

/// (sigma, lambda). Column j of `matrix` is sigma(g_j).
struct AutElement {
  GroupType parent;
  std::vector<std::vector<std::int64_t>> matrix;
  std::int64_t lambda;
};
/// Validates divisibility, bijectivity and lambda != 0 mod p.
AutElement make_aut(const GroupType& G, std::vector<std::vector<std::int64_t>> matrix, std::int64_t lambda);
AutElement identity_aut(const GroupType& G);
/// a after b
AutElement compose(const AutElement& a, const AutElement& b);
Element apply(const AutElement& a, const Element& x);
Subgroup apply(const AutElement& a, const Subgroup& S);
/// sigma reduced mod p, acting on V
fp::Mat reduction_mod_p(const AutElement& a);

/// The mod-p linear data of an automorphism, precomputed for repeated use.
struct LinearAction {
  std::int64_t p;
  std::int64_t lambda;
  fp::Mat sinv;  // Sbar^{-1}
  fp::Vec on_hab(const fp::Vec& h) const;
  fp::Vec on_wedge(const fp::Vec& w) const;
};
LinearAction linear_action(const AutElement& a);

HabClass bockstein_reduce(const DualElement& c);
/// 0 if every coordinate is divisible by p, else the largest block with a unit coordinate.
int bockquivalence_class(const DualElement& c);

Subgroup kernel_T(const HabClass& h);
bool wedge_is_decomposable(const WedgeClass& w);
std::pair<fp::Vec, fp::Vec> wedge_factorize(const WedgeClass& w);
Subgroup kernel_M(const WedgeClass& w);

std::pair<HabClass, WedgeClass> act(const AutElement& a, const HabClass& h, const WedgeClass& w);

/// preimage in G of the common kernel of some functionals on V
Subgroup preimage_of_kernel(const GroupType& G, const fp::Mat& functionals);

}  // namespace h2orb
