#include "h2orbits/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace h2orb {

class SubgroupAccess {
 public:
  static Subgroup make(const GroupType& G, std::vector<howell::Row> howell_rows) {
    return Subgroup(G, std::move(howell_rows));
  }
};

namespace {

void require_same_parent(const Subgroup& S, const Subgroup& T, const char* what) {
  if (!(S.parent() == T.parent()))
    throw std::invalid_argument(std::string(what) + ": subgroups of different groups");
}

Subgroup from_rows(const GroupType& G, std::vector<howell::Row> rows) {
  const auto d = static_cast<std::size_t>(G.d());
  return SubgroupAccess::make(G, howell::howell_form(std::move(rows), d, G.ring()));
}

}  // namespace

GroupType::GroupType(std::int64_t p, std::vector<int> exps)
    : p_(p), exponents_(std::move(exps)), ring_(p, exponents_.back()) {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (blocks_.empty() || blocks_.back().exponent != exponents_[i])
      blocks_.push_back({exponents_[i], 0});
    ++blocks_.back().count;
    block_of_.push_back(static_cast<int>(blocks_.size()));
  }
}

int GroupType::log_order() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

std::string GroupType::to_string() const {
  std::ostringstream os;
  os << "p=" << p_ << " type=[";
  for (std::size_t i = 0; i < exponents_.size(); ++i) os << (i ? "," : "") << exponents_[i];
  os << "]";
  return os.str();
}

GroupType make_group_type(std::int64_t p, std::vector<int> exponents) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (exponents.empty()) throw std::invalid_argument("group type needs at least one summand");
  for (int e : exponents)
    if (e < 1) throw std::invalid_argument("exponents must be positive");
  std::sort(exponents.begin(), exponents.end());
  if (p == 2 && exponents.front() < 2)
    throw std::invalid_argument("p = 2 requires every exponent >= 2 (no Z/2 summands)");
  return GroupType(p, std::move(exponents));
}

Element make_element(const GroupType& G, std::vector<std::int64_t> coords) {
  if (static_cast<int>(coords.size()) != G.d())
    throw std::invalid_argument("element has wrong number of coordinates");
  for (int i = 0; i < G.d(); ++i) {
    const std::int64_t m = ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(G.exponent(i)));
    auto& c = coords[static_cast<std::size_t>(i)];
    c %= m;
    if (c < 0) c += m;
  }
  return Element{std::move(coords)};
}

Element add(const GroupType& G, const Element& x, const Element& y) {
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + y.coords[i];
  return make_element(G, std::move(c));
}

Element negate(const GroupType& G, const Element& x) {
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -x.coords[i];
  return make_element(G, std::move(c));
}

Element scalar_mul(const GroupType& G, std::int64_t k, const Element& x) {
  std::vector<std::int64_t> c(x.coords.size());
  const std::int64_t q = G.ring().modulus();
  k %= q;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (k * x.coords[i]) % q;
  return make_element(G, std::move(c));
}

Element generator(const GroupType& G, int i) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(G.d()), 0);
  c.at(static_cast<std::size_t>(i)) = 1;
  return Element{std::move(c)};
}

std::int64_t element_order(const GroupType& G, const Element& x) {
  int best = 0;
  for (int i = 0; i < G.d(); ++i) {
    std::int64_t c = x.coords[static_cast<std::size_t>(i)];
    int v = 0;
    if (c == 0) {
      v = G.exponent(i);
    } else {
      while (c % G.p() == 0) {
        c /= G.p();
        ++v;
      }
    }
    best = std::max(best, G.exponent(i) - v);
  }
  return static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(best)));
}

std::vector<Element> all_elements(const GroupType& G) {
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(G.log_order()));
  if (total > (1u << 24)) throw std::length_error("all_elements: group too large to enumerate");
  std::vector<Element> out;
  out.reserve(total);
  std::vector<std::int64_t> c(static_cast<std::size_t>(G.d()), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.push_back(Element{c});
    for (int i = 0; i < G.d(); ++i) {
      auto& ci = c[static_cast<std::size_t>(i)];
      if (++ci < static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(G.exponent(i)))))
        break;
      ci = 0;
    }
  }
  return out;
}

std::size_t element_index(const GroupType& G, const Element& x) {
  std::size_t idx = 0, radix = 1;
  for (int i = 0; i < G.d(); ++i) {
    idx += static_cast<std::size_t>(x.coords[static_cast<std::size_t>(i)]) * radix;
    radix *= static_cast<std::size_t>(ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(G.exponent(i))));
  }
  return idx;
}

howell::Row embed(const GroupType& G, const Element& x) {
  howell::Row r(static_cast<std::size_t>(G.d()));
  for (int i = 0; i < G.d(); ++i)
    r[static_cast<std::size_t>(i)] =
        G.ring().mul(x.coords[static_cast<std::size_t>(i)], G.ring().pow_p(G.n() - G.exponent(i)));
  return r;
}

Element unembed(const GroupType& G, const howell::Row& r) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(G.d()));
  for (int i = 0; i < G.d(); ++i) {
    const std::int64_t s = G.ring().pow_p(G.n() - G.exponent(i));
    const std::int64_t v = r[static_cast<std::size_t>(i)];
    if (v % s != 0) throw std::logic_error("unembed: vector is not in the image of G");
    c[static_cast<std::size_t>(i)] = v / s;
  }
  return Element{std::move(c)};
}

Subgroup::Subgroup(const GroupType& G, std::vector<howell::Row> rows)
    : parent_(G), rows_(std::move(rows)), log_order_(howell::log_order(rows_, G.ring())) {}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(unembed(parent_, r));
  return out;
}

std::uint64_t Subgroup::order() const {
  return ipow(static_cast<std::uint64_t>(parent_.p()), static_cast<unsigned>(log_order_));
}

std::uint64_t Subgroup::index() const {
  return ipow(static_cast<std::uint64_t>(parent_.p()), static_cast<unsigned>(log_index()));
}

int Subgroup::log_exponent() const {
  int best = 0;
  for (const auto& r : rows_) {
    int v = parent_.n();
    for (auto x : r) v = std::min(v, parent_.ring().val(x));
    best = std::max(best, parent_.n() - v);
  }
  return best;
}

Subgroup subgroup_from_generators(const GroupType& G, std::span<const Element> gens) {
  std::vector<howell::Row> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    if (static_cast<int>(g.coords.size()) != G.d())
      throw std::invalid_argument("generator has wrong number of coordinates");
    rows.push_back(embed(G, make_element(G, g.coords)));
  }
  return from_rows(G, std::move(rows));
}

Subgroup whole_group(const GroupType& G) { return p_power_multiple(G, 0); }

Subgroup zero_subgroup(const GroupType& G) { return SubgroupAccess::make(G, {}); }

Subgroup p_power_multiple(const GroupType& G, int k) {
  std::vector<Element> gens;
  for (int i = 0; i < G.d(); ++i) gens.push_back(scalar_mul(G, G.ring().pow_p(k), generator(G, i)));
  return subgroup_from_generators(G, gens);
}

bool subgroup_contains(const Subgroup& S, const Element& x) {
  const auto& G = S.parent();
  const auto r = howell::reduce(embed(G, make_element(G, x.coords)), S.rows(), G.ring());
  return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

bool subgroup_leq(const Subgroup& S, const Subgroup& T) {
  require_same_parent(S, T, "subgroup_leq");
  const auto& R = S.parent().ring();
  for (const auto& r : S.rows()) {
    const auto rem = howell::reduce(r, T.rows(), R);
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t v) { return v != 0; })) return false;
  }
  return true;
}

Subgroup subgroup_sum(const Subgroup& S, const Subgroup& T) {
  require_same_parent(S, T, "subgroup_sum");
  std::vector<howell::Row> rows = S.rows();
  rows.insert(rows.end(), T.rows().begin(), T.rows().end());
  return from_rows(S.parent(), std::move(rows));
}

Subgroup subgroup_intersect(const Subgroup& S, const Subgroup& T) {
  require_same_parent(S, T, "subgroup_intersect");
  const auto& G = S.parent();
  const auto d = static_cast<std::size_t>(G.d());
  // Rows [a | a] for a in S and [b | 0] for b in T. A combination with vanishing
  // left half has right half x*A with x*A = -y*B, i.e. an element of S and T.
  std::vector<howell::Row> aug;
  for (const auto& a : S.rows()) {
    howell::Row r(2 * d);
    std::copy(a.begin(), a.end(), r.begin());
    std::copy(a.begin(), a.end(), r.begin() + static_cast<std::ptrdiff_t>(d));
    aug.push_back(std::move(r));
  }
  for (const auto& b : T.rows()) {
    howell::Row r(2 * d, 0);
    std::copy(b.begin(), b.end(), r.begin());
    aug.push_back(std::move(r));
  }
  auto tail = howell::zero_prefix_tail(howell::howell_form(std::move(aug), 2 * d, G.ring()), d);
  return from_rows(G, std::move(tail));
}

Subgroup subgroup_torsion(const Subgroup& S, int m) {
  if (m < 0) throw std::invalid_argument("subgroup_torsion: m must be non-negative");
  const auto& G = S.parent();
  if (m >= G.n()) return S;
  const auto& R = G.ring();
  const auto d = static_cast<std::size_t>(G.d());
  const std::int64_t pm = R.pow_p(m);
  // Kernel of multiplication by p^m restricted to S: rows [p^m s | s].
  std::vector<howell::Row> aug;
  for (const auto& s : S.rows()) {
    howell::Row r(2 * d);
    for (std::size_t c = 0; c < d; ++c) {
      r[c] = R.mul(pm, s[c]);
      r[d + c] = s[c];
    }
    aug.push_back(std::move(r));
  }
  auto tail = howell::zero_prefix_tail(howell::howell_form(std::move(aug), 2 * d, R), d);
  return from_rows(G, std::move(tail));
}

std::uint64_t subgroup_index(const Subgroup& S) { return S.index(); }

std::vector<int> subgroup_iso_type(const Subgroup& S) {
  const auto& G = S.parent();
  const auto& R = G.ring();
  const auto k = S.rows().size();
  // S ~ R^k / N where N is the relation module of the canonical generators.
  const auto relations = howell::left_kernel(S.rows(), static_cast<std::size_t>(G.d()), R);
  auto diag = howell::smith_valuations(relations, k, R);
  diag.resize(k, R.n());
  std::vector<int> type;
  for (int v : diag)
    if (v > 0) type.push_back(v);
  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace h2orb
