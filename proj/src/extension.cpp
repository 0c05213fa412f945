#include "h2orbits/extension.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

namespace h2orb {
namespace {

constexpr std::size_t kMaxBase = 2187;       // |G| guard for materialised cocycles
constexpr std::size_t kMaxExtension = 6561;  // |E| guard for product tables
constexpr std::size_t kExhaustiveLimit = 729;
constexpr std::uint64_t kSampledTriples = 1'000'000;

std::vector<std::uint32_t> addition_table(const GroupType& G, const std::vector<Element>& elems) {
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> sum(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      sum[x * n + y] = static_cast<std::uint32_t>(element_index(G, add(G, elems[x], elems[y])));
  return sum;
}

// log_p of a count that is a power of p
int logp(std::uint64_t s, std::int64_t p) {
  int l = 0;
  for (; s > 1; s /= static_cast<std::uint64_t>(p)) ++l;
  return l;
}

}  // namespace

DualElement canonical_lift(const HabClass& h) { return make_dual(h.parent, h.functional); }

Cocycle cocycle_from_class(const HabClass& h, const WedgeClass& w, const DualElement& dual_lift) {
  const auto& G = h.parent;
  if (!(w.parent == G) || !(dual_lift.parent == G))
    throw std::invalid_argument("cocycle_from_class: classes over different groups");
  if (bockstein_reduce(dual_lift).functional != h.functional)
    throw std::invalid_argument("cocycle_from_class: dual lift does not reduce to the abelian class");
  fp::Vec f(static_cast<std::size_t>(G.d()), 0), g = f;
  if (!w.is_zero()) std::tie(f, g) = wedge_factorize(w);  // OutOfScope if not decomposable

  const auto elems = all_elements(G);
  const std::size_t n = elems.size();
  if (n > kMaxBase) throw std::length_error("cocycle_from_class: |G| too large to tabulate");
  const std::int64_t p = G.p(), q = G.ring().modulus();
  // value of the dual element in [0, p^n) and the functionals mod p
  std::vector<std::int64_t> val(n), fv(n), gv(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::int64_t s = 0, a = 0, b = 0;
    for (int i = 0; i < G.d(); ++i) {
      const auto xi = elems[x].coords[static_cast<std::size_t>(i)];
      s = (s + dual_lift.coords[static_cast<std::size_t>(i)] * xi % q * G.ring().pow_p(G.n() - G.exponent(i))) % q;
      a += f[static_cast<std::size_t>(i)] * xi;
      b += g[static_cast<std::size_t>(i)] * xi;
    }
    val[x] = s;
    fv[x] = a % p;
    gv[x] = b % p;
  }
  const auto sum = addition_table(G, elems);
  Cocycle c{G, n, std::vector<std::int32_t>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::int64_t carry = (val[x] + val[y] - val[sum[x * n + y]]) / q;
      c.values[x * n + y] = static_cast<std::int32_t>((carry + fv[x] * gv[y]) % p);
    }
  return c;
}

CocycleCheck check_cocycle(const Cocycle& c, kernels::Isa isa) {
  const auto& G = c.group;
  const auto elems = all_elements(G);
  const auto sum = addition_table(G, elems);
  const std::size_t n = c.n;
  const auto p = static_cast<std::int32_t>(G.p());
  CocycleCheck r;
  if (n <= kExhaustiveLimit) {
    r.exhaustive = true;
    r.triples = static_cast<std::uint64_t>(n) * n * n;
    r.defects = kernels::cocycle_defects(c.values.data(), sum.data(), n, p, 0, n, isa);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    r.triples = kSampledTriples;
    for (std::uint64_t t = 0; t < kSampledTriples; ++t) {
      const auto x = pick(rng), y = pick(rng), z = pick(rng);
      const auto v = c.at(y, z) - c.at(sum[x * n + y], z) + c.at(x, sum[y * n + z]) - c.at(x, y);
      if (v % p != 0) ++r.defects;
    }
  }
  if (r.defects != 0)
    throw CocycleViolation("cocycle identity fails on " + std::to_string(r.defects) + " of " +
                           std::to_string(r.triples) + " triples");
  return r;
}

ExtensionGroup build_extension(const Cocycle& c, kernels::Isa isa) {
  ExtensionGroup E(c.group);
  E.check_ = check_cocycle(c, isa);
  const auto& G = c.group;
  const std::size_t n = c.n, p = static_cast<std::size_t>(G.p());
  E.size_ = n * p;
  if (E.size_ > kMaxExtension) throw std::length_error("build_extension: extension too large to tabulate");
  const auto sum = addition_table(G, all_elements(G));
  const std::size_t N = E.size_;
  E.table_.resize(N * N);
  E.transposed_.resize(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      const std::size_t g1 = a / p, m1 = a % p, g2 = b / p, m2 = b % p;
      const std::size_t m = (m1 + m2 + static_cast<std::size_t>(c.at(g1, g2))) % p;
      const auto k = static_cast<std::uint32_t>(sum[g1 * n + g2] * p + m);
      E.table_[a * N + b] = k;
      E.transposed_[b * N + a] = k;
    }
  E.identity_ = static_cast<std::uint32_t>((p - static_cast<std::size_t>(c.at(0, 0))) % p);
  E.compute_fingerprint(isa);
  return E;
}

void ExtensionGroup::compute_fingerprint(kernels::Isa isa) {
  const std::size_t N = size_;
  const auto p = static_cast<std::uint64_t>(G_.p());
  std::vector<std::uint32_t> inv(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (table_[a * N + b] == identity_) {
        inv[a] = static_cast<std::uint32_t>(b);
        break;
      }

  fp_ = {};
  for (std::size_t a = 0; a < N; ++a) {
    std::uint64_t k = 1;
    for (std::uint32_t x = static_cast<std::uint32_t>(a); x != identity_; x = table_[x * N + a]) ++k;
    ++fp_.order_histogram[k];
  }

  central_.assign(N, false);
  for (std::size_t a = 0; a < N; ++a)
    if (kernels::mismatch_count(&table_[a * N], &transposed_[a * N], N, isa) == 0) {
      central_[a] = true;
      ++fp_.center_order;
    }

  // commutator subgroup: closure of the commutator set
  std::vector<char> in_k(N, 0);
  std::vector<std::uint32_t> K{identity_};
  in_k[identity_] = 1;
  for (std::size_t a = 0; a < N; ++a) {
    if (central_[a]) continue;
    for (std::size_t b = 0; b < N; ++b) {
      const auto z = table_[table_[a * N + b] * N + inv[table_[b * N + a]]];
      if (!in_k[z]) {
        in_k[z] = 1;
        K.push_back(z);
      }
    }
  }
  for (std::size_t i = 0; i < K.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto z : {table_[K[i] * N + K[j]], table_[K[j] * N + K[i]]})
        if (!in_k[z]) {
          in_k[z] = 1;
          K.push_back(z);
        }
  fp_.commutator_order = K.size();

  // E/[E,E]: coset label = least element of x K
  std::vector<std::uint32_t> coset(N);
  for (std::size_t a = 0; a < N; ++a) {
    std::uint32_t best = UINT32_MAX;
    for (auto k : K) best = std::min(best, table_[a * N + k]);
    coset[a] = best;
  }
  // log_p |p^k Q| for k = 0, 1, ...
  std::vector<int> logs;
  std::vector<std::uint32_t> pw(N);
  for (std::size_t a = 0; a < N; ++a) pw[a] = static_cast<std::uint32_t>(a);
  for (;;) {
    std::set<std::uint32_t> img;
    for (auto x : pw) img.insert(coset[x]);
    logs.push_back(logp(img.size(), G_.p()));
    if (img.size() == 1) break;
    for (auto& x : pw) {
      std::uint32_t y = x;
      for (std::uint64_t i = 1; i < p; ++i) y = table_[y * N + x];
      x = y;
    }
  }
  logs.push_back(0);
  for (std::size_t k = 0; k + 1 < logs.size(); ++k) {
    const int ge = logs[k] - logs[k + 1];
    const int ge_next = k + 2 < logs.size() ? logs[k + 1] - logs[k + 2] : 0;
    for (int i = 0; i < ge - ge_next; ++i) fp_.abelianization.push_back(static_cast<int>(k) + 1);
  }
  std::sort(fp_.abelianization.begin(), fp_.abelianization.end());
}

Subgroup ExtensionGroup::center_image() const {
  const auto elems = all_elements(G_);
  const auto p = static_cast<std::size_t>(G_.p());
  std::vector<Element> gens;
  for (std::size_t a = 0; a < size_; ++a)
    if (central_[a] && a % p == 0) gens.push_back(elems[a / p]);
  return subgroup_from_generators(G_, gens);
}

void ExtensionGroup::write_table(std::ostream& os) const {
  const auto elems = all_elements(G_);
  const auto p = static_cast<std::size_t>(G_.p());
  os << "# central extension of " << G_.to_string() << " by F_" << p << ", order " << size_ << "\n";
  os << "# legend: index: g_1 .. g_d | m\n";
  for (std::size_t a = 0; a < size_; ++a) {
    os << "# " << a << ":";
    for (auto x : elems[a / p].coords) os << " " << x;
    os << " | " << a % p << "\n";
  }
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b) os << a << " " << b << " " << table_[a * size_ + b] << "\n";
}

}  // namespace h2orb
