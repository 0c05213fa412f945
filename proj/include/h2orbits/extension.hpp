#pragma once
// Central extensions 1 -> F_p -> E -> G -> 1 from a class in Hab x im(cup).

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "h2orbits/cohomology.hpp"
#include "h2orbits/kernels.hpp"

namespace h2orb {

class CocycleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c(x, y) for x, y indexed by element_index; values in [0, p).
struct Cocycle {
  GroupType group;
  std::size_t n = 0;  // |G|
  std::vector<std::int32_t> values;
  std::int32_t at(std::size_t x, std::size_t y) const { return values[x * n + y]; }
};

/// The dual element whose coordinates are the functional's, read as integers.
DualElement canonical_lift(const HabClass& h);

/// carry(x, y) + f(x) g(y), where the carry comes from lifting dual_lift to
/// the next power of p and f ^ g = w. Throws std::invalid_argument when
/// dual_lift does not reduce to h, OutOfScope for a non-decomposable w.
Cocycle cocycle_from_class(const HabClass& h, const WedgeClass& w, const DualElement& dual_lift);

struct Fingerprint {
  std::map<std::uint64_t, std::uint64_t> order_histogram;  // element order -> count
  std::uint64_t commutator_order = 0;
  std::uint64_t center_order = 0;
  std::vector<int> abelianization;  // p-exponents, sorted
  auto operator<=>(const Fingerprint&) const = default;
  bool operator==(const Fingerprint&) const = default;
};

struct CocycleCheck {
  bool exhaustive = false;
  std::uint64_t triples = 0;
  std::uint64_t defects = 0;
};

/// Elements are (g, m) with index element_index(g) * p + m.
class ExtensionGroup {
 public:
  const GroupType& base() const { return G_; }
  std::int64_t p() const { return G_.p(); }
  std::size_t order() const { return size_; }
  std::size_t index_of(std::size_t g, std::int64_t m) const { return g * static_cast<std::size_t>(p()) + static_cast<std::size_t>(m); }
  std::uint32_t mul(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }
  std::uint32_t identity() const { return identity_; }
  const CocycleCheck& check() const { return check_; }
  const Fingerprint& fingerprint() const { return fp_; }
  bool is_abelian() const { return fp_.commutator_order == 1; }
  /// image of Z(E) in G
  Subgroup center_image() const;
  /// "i j k" lines under a legend header
  void write_table(std::ostream& os) const;

 private:
  friend ExtensionGroup build_extension(const Cocycle& c, kernels::Isa isa);
  explicit ExtensionGroup(GroupType G) : G_(std::move(G)) {}
  void compute_fingerprint(kernels::Isa isa);

  GroupType G_;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> table_, transposed_;
  std::uint32_t identity_ = 0;
  std::vector<bool> central_;
  CocycleCheck check_;
  Fingerprint fp_;
};

/// Exhaustive cocycle check for |G| <= 729, 10^6 seeded random triples above.
/// Throws CocycleViolation on any defect.
CocycleCheck check_cocycle(const Cocycle& c, kernels::Isa isa = kernels::best_isa());
ExtensionGroup build_extension(const Cocycle& c, kernels::Isa isa = kernels::best_isa());

}  // namespace h2orb
