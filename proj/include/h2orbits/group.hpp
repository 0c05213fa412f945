#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "h2orbits/howell.hpp"
#include "h2orbits/zmod.hpp"

namespace h2orb {

/// One block of equal exponents: `count` cyclic summands of order p^exponent.
struct Block {
  int exponent;
  int count;
  bool operator==(const Block&) const = default;
};

/// G = Z/p^{e_1} + ... + Z/p^{e_d} with e_1 <= ... <= e_d.
class GroupType {
 public:
  std::int64_t p() const { return p_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  int d() const { return static_cast<int>(exponents_.size()); }
  /// log_p exp(G)
  int n() const { return exponents_.back(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  int t() const { return static_cast<int>(blocks_.size()); }
  /// 1-based block index of summand i.
  int block_of(int i) const { return block_of_[static_cast<std::size_t>(i)]; }
  int log_order() const;
  const ZMod& ring() const { return ring_; }

  std::string to_string() const;

  bool operator==(const GroupType& o) const { return p_ == o.p_ && exponents_ == o.exponents_; }

 private:
  friend GroupType make_group_type(std::int64_t p, std::vector<int> exponents);
  GroupType(std::int64_t p, std::vector<int> exps);

  std::int64_t p_;
  std::vector<int> exponents_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
  ZMod ring_;
};

/// Validates and sorts. Rejects non-primes, empty types, non-positive exponents
/// and (for p = 2) cyclic summands of order 2.
GroupType make_group_type(std::int64_t p, std::vector<int> exponents);

/// An element of G; coordinate i is a residue modulo p^{e_i}.
struct Element {
  std::vector<std::int64_t> coords;
  auto operator<=>(const Element&) const = default;
};

Element make_element(const GroupType& G, std::vector<std::int64_t> coords);
Element add(const GroupType& G, const Element& x, const Element& y);
Element negate(const GroupType& G, const Element& x);
Element scalar_mul(const GroupType& G, std::int64_t k, const Element& x);
/// The i-th standard generator (0-based).
Element generator(const GroupType& G, int i);
/// Order of x as an integer power of p.
std::int64_t element_order(const GroupType& G, const Element& x);

/// Enumerates all |G| elements in mixed-radix order (coordinate 0 fastest).
std::vector<Element> all_elements(const GroupType& G);
std::size_t element_index(const GroupType& G, const Element& x);

/// A subgroup of G, held as the Howell form of its image under the embedding
/// G -> (Z/p^n)^d that multiplies coordinate i by p^{n - e_i}.
class Subgroup {
 public:
  const GroupType& parent() const { return parent_; }
  /// Canonical generator matrix (embedded coordinates).
  const std::vector<howell::Row>& rows() const { return rows_; }
  /// Canonical generators as elements of G.
  std::vector<Element> generators() const;
  int log_order() const { return log_order_; }
  std::uint64_t order() const;
  /// |G : S| as log_p.
  int log_index() const { return parent_.log_order() - log_order_; }
  std::uint64_t index() const;
  /// log_p exp(S); 0 for the trivial subgroup.
  int log_exponent() const;

  bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && rows_ == o.rows_; }

 private:
  friend class SubgroupAccess;
  Subgroup(const GroupType& G, std::vector<howell::Row> rows);

  GroupType parent_;
  std::vector<howell::Row> rows_;
  int log_order_;
};

Subgroup subgroup_from_generators(const GroupType& G, std::span<const Element> gens);
Subgroup whole_group(const GroupType& G);
Subgroup zero_subgroup(const GroupType& G);
/// p^k G
Subgroup p_power_multiple(const GroupType& G, int k);

bool subgroup_contains(const Subgroup& S, const Element& x);
/// S <= T
bool subgroup_leq(const Subgroup& S, const Subgroup& T);
Subgroup subgroup_sum(const Subgroup& S, const Subgroup& T);
Subgroup subgroup_intersect(const Subgroup& S, const Subgroup& T);
/// S[p^m] = { x in S : p^m x = 0 }
Subgroup subgroup_torsion(const Subgroup& S, int m);
std::uint64_t subgroup_index(const Subgroup& S);
/// Abelian invariants of S as a sorted list of p-exponents.
std::vector<int> subgroup_iso_type(const Subgroup& S);

/// Embedding coordinates of an element (used by the lattice engine).
howell::Row embed(const GroupType& G, const Element& x);
Element unembed(const GroupType& G, const howell::Row& r);

}  // namespace h2orb
