#pragma once

#include <compare>
#include <functional>
#include <string>

#include "h2orbits/cohomology.hpp"
#include "h2orbits/group.hpp"

namespace h2orb {

/// (l_T(M), L_T(M))
struct LevelPair {
  int lo = 0;
  int hi = 0;
  auto operator<=>(const LevelPair&) const = default;
};

/// (lL([c]), lL([w]), lL_c([w]), i_c([w]))
struct InvariantVector {
  LevelPair lL_c;
  LevelPair lL_w;
  LevelPair lL_cw;
  int idx = 0;
  auto operator<=>(const InvariantVector&) const = default;
  std::string to_string() const;
};

/// T-levels of M. With T = G these are the levels of M.
LevelPair levels(const Subgroup& T, const Subgroup& M);
/// 0 if M is inside T, else 1
int c_index(const Subgroup& T, const Subgroup& M);
/// Throws OutOfScope for a non-decomposable wedge.
InvariantVector classify(const HabClass& h, const WedgeClass& w);
/// Same, from the kernels directly.
InvariantVector classify_kernels(const Subgroup& T, const Subgroup& M);

using Classifier = std::function<InvariantVector(const HabClass&, const WedgeClass&)>;

}  // namespace h2orb
