#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "h2orbits/cohomology.hpp"
#include "h2orbits/invariants.hpp"

namespace h2orb {

/// All p^d functionals, lexicographic (first coordinate most significant).
std::vector<HabClass> enumerate_hab(const GroupType& G);
/// All rank <= 2 wedges including 0, sorted by packed coefficients.
std::vector<WedgeClass> enumerate_decomposable_wedges(const GroupType& G);

/// base-p code of a coefficient vector; lexicographic order = code order
std::uint64_t vec_code(const fp::Vec& v, std::int64_t p);

struct OrbitRow {
  InvariantVector invariant;
  HabClass rep_hab;
  WedgeClass rep_wedge;
  std::uint64_t size = 0;
};

struct OrbitTable {
  GroupType group;
  std::vector<OrbitRow> rows;  // sorted by invariant
  std::uint64_t total = 0;     // |Hab x im cup|
  std::uint64_t h2_size = 0;   // p^{d + C(d,2)}
  std::size_t wedge_count = 0;
  /// row index of every pair h_index * wedge_count + w_index (only with keep_assignment)
  std::vector<std::uint32_t> assignment;
  std::vector<std::uint64_t> sizes() const;
};

struct OrbitOptions {
  unsigned threads = 1;
  /// empty: memoised built-in classification
  Classifier classifier;
  /// only pairs with w = 0
  bool hab_only = false;
  bool keep_assignment = false;
};

OrbitTable orbit_table(const GroupType& G, const OrbitOptions& opt = {});

struct ClosedForm {
  bool available = false;
  std::string label;  // which case of the closed form applies
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> hab_sizes;
};

/// Closed-form orbit sizes for d in {2, 3}; `available` is false otherwise.
ClosedForm closed_form_table(const GroupType& G);

/// Same multiset (order ignored).
bool same_multiset(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b);

}  // namespace h2orb
