#include "h2orbits/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace h2orb {
namespace {

using IntMat = std::vector<std::vector<std::int64_t>>;

std::int64_t pe(const GroupType& G, int i) { return G.ring().pow_p(G.exponent(i)); }

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::int64_t primitive_root_mod_p(std::int64_t p) {
  if (p == 2) return 1;
  std::vector<std::int64_t> qs;
  std::int64_t m = p - 1;
  for (std::int64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) qs.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;
}

IntMat identity_matrix(std::size_t d) {
  IntMat m(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

bool is_identity(const GroupType& G, const IntMat& m) {
  for (int i = 0; i < G.d(); ++i)
    for (int j = 0; j < G.d(); ++j)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % pe(G, i) != (i == j ? 1 % pe(G, i) : 0))
        return false;
  return true;
}

// Disjoint sets with path halving.
struct Dsu {
  std::vector<std::uint32_t> up;
  explicit Dsu(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    up[b] = a;
  }
};

std::string pair_string(const std::pair<HabClass, WedgeClass>& pr) {
  std::ostringstream os;
  os << "h=(";
  for (std::size_t i = 0; i < pr.first.functional.size(); ++i) os << (i ? "," : "") << pr.first.functional[i];
  os << ") w=(";
  for (std::size_t i = 0; i < pr.second.coeffs.size(); ++i) os << (i ? "," : "") << pr.second.coeffs[i];
  os << ")";
  return os.str();
}

// Blocks from a label per index, blocks ordered by smallest member.
void fill_blocks(OrbitPartition& P, const std::vector<std::uint32_t>& label) {
  std::unordered_map<std::uint32_t, std::uint32_t> renum;
  P.block_of.assign(label.size(), 0);
  P.blocks.clear();
  for (std::size_t i = 0; i < label.size(); ++i) {
    auto [it, fresh] = renum.emplace(label[i], static_cast<std::uint32_t>(P.blocks.size()));
    if (fresh) P.blocks.emplace_back();
    P.blocks[it->second].push_back(i);
    P.block_of[i] = it->second;
  }
}

fp::Mat pontryagin_matrix(const AutElement& a) {
  const auto& G = a.parent;
  const auto d = static_cast<std::size_t>(G.d());
  const std::int64_t p = G.p();
  fp::Mat P(d, fp::Vec(d, 0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      const int ek = G.exponent(static_cast<int>(k)), ei = G.exponent(static_cast<int>(i));
      if (ek == ei) P[k][i] = fp::norm(a.matrix[k][i], p);
      else if (ek > ei) P[k][i] = fp::norm(a.matrix[k][i] / G.ring().pow_p(ek - ei), p);
    }
  return P;
}

}  // namespace

std::vector<AutElement> aut_generators(const GroupType& G) {
  const auto d = static_cast<std::size_t>(G.d());
  const std::int64_t p = G.p();
  std::vector<AutElement> gens;
  auto push = [&](IntMat m, std::int64_t lambda) {
    if (lambda == 1 && is_identity(G, m)) return;
    gens.push_back(make_aut(G, std::move(m), lambda));
  };

  // swaps inside a block of equal exponents
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (G.exponent(static_cast<int>(i)) == G.exponent(static_cast<int>(j))) {
        auto m = identity_matrix(d);
        m[i][i] = m[j][j] = 0;
        m[i][j] = m[j][i] = 1;
        push(std::move(m), 1);
      }

  // unit scalings of one coordinate
  std::vector<std::int64_t> units;
  const std::int64_t g = primitive_root_mod_p(p);
  for (std::size_t i = 0; i < d; ++i) {
    const std::int64_t q = pe(G, static_cast<int>(i));
    units.clear();
    if (p == 2) {
      units = {q - 1, 5 % q};
    } else {
      // g generates (Z/p^e)^* unless g^{p-1} = 1 mod p^2
      std::int64_t u = g;
      if (G.exponent(static_cast<int>(i)) > 1 && powmod(u, p - 1, p * p) == 1) u += p;
      units = {u % q};
    }
    for (auto u : units) {
      auto m = identity_matrix(d);
      m[i][i] = u;
      push(std::move(m), 1);
    }
  }

  // transvections g_j -> g_j + p^{max(0, e_i - e_j)} g_i
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      auto m = identity_matrix(d);
      m[i][j] = G.ring().pow_p(std::max(0, G.exponent(static_cast<int>(i)) - G.exponent(static_cast<int>(j))));
      push(std::move(m), 1);
    }

  if (p > 2) push(identity_matrix(d), g);
  return gens;
}

std::uint64_t endomorphism_count(const GroupType& G) {
  unsigned e = 0;
  for (int i = 0; i < G.d(); ++i)
    for (int j = 0; j < G.d(); ++j) e += static_cast<unsigned>(std::min(G.exponent(i), G.exponent(j)));
  return ipow(static_cast<std::uint64_t>(G.p()), e);
}

std::vector<AutElement> enumerate_aut(const GroupType& G, std::uint64_t cap) {
  std::uint64_t total = 0;
  try {
    total = endomorphism_count(G);
  } catch (const std::overflow_error&) {
    throw CapExceeded("enumerate_aut: endomorphism count overflows");
  }
  if (total > cap)
    throw CapExceeded("enumerate_aut: " + std::to_string(total) + " endomorphisms exceed cap " + std::to_string(cap));
  const auto d = static_cast<std::size_t>(G.d());
  // entry (i,j) runs over multiples of p^{max(0,e_i-e_j)} mod p^{e_i}
  std::vector<std::int64_t> step(d * d), radix(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const int gap = std::max(0, G.exponent(static_cast<int>(i)) - G.exponent(static_cast<int>(j)));
      step[i * d + j] = G.ring().pow_p(gap);
      radix[i * d + j] = pe(G, static_cast<int>(i)) / step[i * d + j];
    }
  std::vector<std::int64_t> digit(d * d, 0);
  std::vector<AutElement> out;
  for (std::uint64_t k = 0; k < total; ++k) {
    IntMat m(d, std::vector<std::int64_t>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m[i][j] = digit[i * d + j] * step[i * d + j];
    AutElement a{G, std::move(m), 1};
    std::vector<Element> imgs;
    for (int j = 0; j < G.d(); ++j) imgs.push_back(apply(a, generator(G, j)));
    if (subgroup_from_generators(G, imgs).log_order() == G.log_order()) out.push_back(std::move(a));
    for (std::size_t t = d * d; t-- > 0;) {
      if (++digit[t] < radix[t]) break;
      digit[t] = 0;
    }
  }
  return out;
}

std::uint64_t generated_order(const GroupType& G, const std::vector<AutElement>& gens, std::uint64_t limit) {
  std::set<IntMat> seen{identity_aut(G).matrix};
  std::deque<AutElement> q{identity_aut(G)};
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    for (const auto& g : gens) {
      auto gs = g;
      gs.lambda = 1;
      auto y = compose(gs, x);
      if (seen.insert(y.matrix).second) {
        if (seen.size() > limit)
          throw CapExceeded("generated_order: more than " + std::to_string(limit) + " elements");
        q.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}


fp::Vec pontryagin_on_hab(const AutElement& a, const fp::Vec& h) {
  const std::int64_t p = a.parent.p();
  auto out = fp::vec_mul(h, fp::inverse(pontryagin_matrix(a), p), p);
  for (auto& v : out) v = v * a.lambda % p;
  return out;
}

std::pair<HabClass, WedgeClass> OrbitPartition::pair_at(std::uint64_t idx) const {
  return {habs.at(idx / wedges.size()), wedges.at(idx % wedges.size())};
}

std::vector<std::uint64_t> OrbitPartition::sizes() const {
  std::vector<std::uint64_t> s;
  for (const auto& b : blocks) s.push_back(b.size());
  return s;
}

OrbitPartition orbit_partition_bruteforce(const GroupType& G, const OracleOptions& opt) {
  OrbitPartition P{G, "oracle", enumerate_hab(G), enumerate_decomposable_wedges(G), {}, {}};
  if (opt.hab_only) P.wedges.erase(P.wedges.begin() + 1, P.wedges.end());
  const std::size_t H = P.habs.size(), W = P.wedges.size();
  if (H * W > opt.max_pairs)
    throw CapExceeded("oracle: " + std::to_string(H * W) + " pairs exceed cap " + std::to_string(opt.max_pairs));
  const std::int64_t p = G.p();
  std::unordered_map<std::uint64_t, std::uint32_t> w_index;
  for (std::size_t j = 0; j < W; ++j) w_index.emplace(vec_code(P.wedges[j].coeffs, p), static_cast<std::uint32_t>(j));

  Dsu dsu(H * W);
  for (const auto& a : aut_generators(G)) {
    const auto L = linear_action(a);
    std::vector<std::uint32_t> hmap(H), wmap(W);
    for (std::size_t i = 0; i < H; ++i) {
      const auto& f = P.habs[i].functional;
      hmap[i] = static_cast<std::uint32_t>(
          vec_code(opt.action == HabAction::model ? L.on_hab(f) : pontryagin_on_hab(a, f), p));
    }
    for (std::size_t j = 0; j < W; ++j) {
      auto it = w_index.find(vec_code(L.on_wedge(P.wedges[j].coeffs), p));
      if (it == w_index.end()) throw std::logic_error("oracle: image of a decomposable wedge is not decomposable");
      wmap[j] = it->second;
    }
    for (std::size_t i = 0; i < H; ++i)
      for (std::size_t j = 0; j < W; ++j)
        dsu.unite(static_cast<std::uint32_t>(i * W + j), static_cast<std::uint32_t>(hmap[i] * W + wmap[j]));
  }
  std::vector<std::uint32_t> label(H * W);
  for (std::size_t k = 0; k < label.size(); ++k) label[k] = dsu.find(static_cast<std::uint32_t>(k));
  fill_blocks(P, label);
  return P;
}

OrbitPartition invariant_partition(const OrbitTable& table) {
  OrbitPartition P{table.group, "invariant", enumerate_hab(table.group), enumerate_decomposable_wedges(table.group),
                   {}, {}};
  if (table.wedge_count < P.wedges.size()) P.wedges.erase(P.wedges.begin() + 1, P.wedges.end());
  if (table.assignment.size() != P.habs.size() * P.wedges.size())
    throw std::invalid_argument("invariant_partition: table was built without keep_assignment");
  fill_blocks(P, table.assignment);
  return P;
}

CompareReport compare(const OrbitPartition& oracle, const OrbitPartition& other) {
  if (oracle.block_of.size() != other.block_of.size())
    throw std::invalid_argument("compare: partitions of different sets");
  CompareReport rep;
  rep.oracle_blocks = oracle.blocks.size();
  rep.table_blocks = other.blocks.size();
  std::vector<std::int64_t> o2t(oracle.blocks.size(), -1), t2o(other.blocks.size(), -1);
  std::vector<std::uint64_t> o_first(oracle.blocks.size()), t_first(other.blocks.size());
  for (std::uint64_t i = 0; i < oracle.block_of.size(); ++i) {
    const auto a = oracle.block_of[i], b = other.block_of[i];
    if (o2t[a] < 0) {
      o2t[a] = b;
      o_first[a] = i;
    } else if (o2t[a] != b) {
      rep.witness = Witness{o_first[a], i, true};
      return rep;
    }
    if (t2o[b] < 0) {
      t2o[b] = a;
      t_first[b] = i;
    } else if (t2o[b] != a) {
      rep.witness = Witness{t_first[b], i, false};
      return rep;
    }
  }
  rep.identical = true;
  return rep;
}

CompareReport compare(const OrbitPartition& oracle, const OrbitTable& table) {
  return compare(oracle, invariant_partition(table));
}

std::string CompareReport::describe(const OrbitPartition& oracle) const {
  std::ostringstream os;
  if (identical) {
    os << "identical partitions, " << oracle_blocks << " orbits";
    return os.str();
  }
  os << "partitions differ (" << oracle_blocks << " orbits vs " << table_blocks << " invariant classes)";
  if (witness) {
    os << ": " << pair_string(oracle.pair_at(witness->a)) << " and " << pair_string(oracle.pair_at(witness->b))
       << (witness->together_in_oracle ? " share an orbit but get different invariants"
                                       : " get the same invariant but lie in different orbits");
  }
  return os.str();
}

}  // namespace h2orb
