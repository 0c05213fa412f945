#include "h2orbits/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace h2orb {

std::string InvariantVector::to_string() const {
  std::ostringstream os;
  os << "(" << lL_c.lo << "," << lL_c.hi << " | " << lL_w.lo << "," << lL_w.hi << " | " << lL_cw.lo << ","
     << lL_cw.hi << " | " << idx << ")";
  return os.str();
}

LevelPair levels(const Subgroup& T, const Subgroup& M) {
  if (!(T.parent() == M.parent())) throw std::invalid_argument("levels: subgroups of different groups");
  const int e = T.log_exponent();
  const Subgroup MT = subgroup_intersect(M, T);
  LevelPair out;
  int best = 0;
  for (int i = 0; i <= e; ++i)
    if (subgroup_leq(subgroup_torsion(T, i), MT)) best = i;
  out.lo = best + 1;
  out.hi = e;
  for (int j = 0; j <= e; ++j)
    if (subgroup_sum(subgroup_torsion(T, j), MT).log_order() == T.log_order()) {
      out.hi = j;
      break;
    }
  return out;
}

int c_index(const Subgroup& T, const Subgroup& M) {
  if (!(T.parent() == M.parent())) throw std::invalid_argument("c_index: subgroups of different groups");
  const auto& G = T.parent();
  if (T.log_index() > 1) throw std::invalid_argument("c_index: T must have index at most p");
  if (M.log_index() > 2) throw std::invalid_argument("c_index: M must have index at most p^2");
  if (!subgroup_leq(p_power_multiple(G, 1), M)) throw std::invalid_argument("c_index: M must contain pG");
  return subgroup_sum(M, T).log_order() - T.log_order();
}

InvariantVector classify_kernels(const Subgroup& T, const Subgroup& M) {
  const auto G = whole_group(T.parent());
  return InvariantVector{levels(G, T), levels(G, M), levels(T, M), c_index(T, M)};
}

InvariantVector classify(const HabClass& h, const WedgeClass& w) {
  if (!(h.parent == w.parent)) throw std::invalid_argument("classify: classes over different groups");
  if (!wedge_is_decomposable(w)) throw OutOfScope("classify: wedge is not decomposable; only rank <= 2 wedges are classified");
  return classify_kernels(kernel_T(h), kernel_M(w));
}

}  // namespace h2orb
