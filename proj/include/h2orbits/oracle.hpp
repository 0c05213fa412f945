#pragma once
// Brute-force ground truth: Aut(G) generators, exhaustive enumeration, BFS orbits.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "h2orbits/cohomology.hpp"
#include "h2orbits/orbits.hpp"

namespace h2orb {

class CapExceeded : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// swaps inside blocks, unit scalings, p-power transvections, and the F_p^* scalar
std::vector<AutElement> aut_generators(const GroupType& G);

/// prod_{i,j} p^{min(e_i, e_j)}
std::uint64_t endomorphism_count(const GroupType& G);

/// Every automorphism (lambda = 1). Throws CapExceeded if the endomorphism count exceeds cap.
std::vector<AutElement> enumerate_aut(const GroupType& G, std::uint64_t cap);

/// Order of the group generated by the sigma parts of `gens`; throws CapExceeded past `limit`.
std::uint64_t generated_order(const GroupType& G, const std::vector<AutElement>& gens, std::uint64_t limit);

/// How Aut(G) moves the abelian coordinate.
enum class HabAction {
  model,       // h -> lambda h Sbar^{-1} on V^
  pontryagin,  // precomposition on G^ reduced mod ker(beta)
};

/// lambda * h * P(sigma)^{-1}, P the matrix of c -> c o sigma on G^/ker(beta)
fp::Vec pontryagin_on_hab(const AutElement& a, const fp::Vec& h);

/// Pairs are indexed h_index * |wedges| + w_index, both in enumeration order.
struct OrbitPartition {
  GroupType group;
  std::string provenance;  // "oracle" or "invariant"
  std::vector<HabClass> habs;
  std::vector<WedgeClass> wedges;
  std::vector<std::vector<std::uint64_t>> blocks;
  std::vector<std::uint32_t> block_of;
  std::pair<HabClass, WedgeClass> pair_at(std::uint64_t idx) const;
  std::vector<std::uint64_t> sizes() const;
};

struct OracleOptions {
  std::uint64_t max_pairs = 10'000'000;
  HabAction action = HabAction::model;
  bool hab_only = false;
};

OrbitPartition orbit_partition_bruteforce(const GroupType& G, const OracleOptions& opt = {});
/// Partition induced by a table built with keep_assignment.
OrbitPartition invariant_partition(const OrbitTable& table);

struct Witness {
  std::uint64_t a = 0, b = 0;
  bool together_in_oracle = false;  // else together in the table
};

struct CompareReport {
  bool identical = false;
  std::size_t oracle_blocks = 0;
  std::size_t table_blocks = 0;
  std::optional<Witness> witness;
  std::string describe(const OrbitPartition& oracle) const;
};

CompareReport compare(const OrbitPartition& oracle, const OrbitTable& table);
CompareReport compare(const OrbitPartition& oracle, const OrbitPartition& other);

}  // namespace h2orb
