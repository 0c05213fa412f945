#include "h2orbits/cohomology.hpp"

#include <algorithm>

namespace h2orb {
namespace {

void require_len(const GroupType& G, std::size_t n, std::size_t want, const char* what) {
  (void)G;
  if (n != want) throw std::invalid_argument(std::string(what) + ": wrong length");
}

void require_same(const GroupType& a, const GroupType& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": different groups");
}

std::int64_t mod_pe(const GroupType& G, int i) {
  return static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(G.exponent(i))));
}

}  // namespace

DualElement make_dual(const GroupType& G, std::vector<std::int64_t> coords) {
  require_len(G, coords.size(), static_cast<std::size_t>(G.d()), "make_dual");
  for (int i = 0; i < G.d(); ++i) {
    auto& c = coords[static_cast<std::size_t>(i)];
    const auto m = mod_pe(G, i);
    c = ((c % m) + m) % m;
  }
  return DualElement{G, std::move(coords)};
}

DualElement dual_generator(const GroupType& G, int i) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(G.d()), 0);
  c.at(static_cast<std::size_t>(i)) = 1;
  return DualElement{G, std::move(c)};
}

bool HabClass::is_zero() const {
  return std::all_of(functional.begin(), functional.end(), [](std::int64_t v) { return v == 0; });
}

HabClass make_hab(const GroupType& G, fp::Vec functional) {
  require_len(G, functional.size(), static_cast<std::size_t>(G.d()), "make_hab");
  for (auto& v : functional) v = fp::norm(v, G.p());
  return HabClass{G, std::move(functional)};
}

std::size_t wedge_size(int d) { return static_cast<std::size_t>(d * (d - 1) / 2); }

std::size_t wedge_slot(int d, int i, int j) {
  if (!(0 <= i && i < j && j < d)) throw std::out_of_range("wedge_slot: need 0 <= i < j < d");
  // rows 0..i-1 contribute (d-1) + (d-2) + ... + (d-i)
  return static_cast<std::size_t>(i * d - i * (i + 1) / 2 + (j - i - 1));
}

bool WedgeClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t WedgeClass::at(int i, int j) const {
  if (i == j) return 0;
  if (i < j) return coeffs[wedge_slot(parent.d(), i, j)];
  return fp::norm(-coeffs[wedge_slot(parent.d(), j, i)], parent.p());
}

fp::Mat WedgeClass::matrix() const {
  const auto d = static_cast<std::size_t>(parent.d());
  fp::Mat W(d, fp::Vec(d, 0));
  for (int i = 0; i < parent.d(); ++i)
    for (int j = 0; j < parent.d(); ++j) W[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
  return W;
}

WedgeClass make_wedge(const GroupType& G, fp::Vec coeffs) {
  require_len(G, coeffs.size(), wedge_size(G.d()), "make_wedge");
  for (auto& v : coeffs) v = fp::norm(v, G.p());
  return WedgeClass{G, std::move(coeffs)};
}

WedgeClass wedge_from_matrix(const GroupType& G, const fp::Mat& W) {
  fp::Vec c(wedge_size(G.d()));
  for (int i = 0; i < G.d(); ++i)
    for (int j = i + 1; j < G.d(); ++j)
      c[wedge_slot(G.d(), i, j)] = W[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return make_wedge(G, std::move(c));
}

WedgeClass wedge_product(const GroupType& G, const fp::Vec& f, const fp::Vec& g) {
  fp::Vec c(wedge_size(G.d()));
  for (int i = 0; i < G.d(); ++i)
    for (int j = i + 1; j < G.d(); ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      c[wedge_slot(G.d(), i, j)] = f[ui] * g[uj] - f[uj] * g[ui];
    }
  return make_wedge(G, std::move(c));
}

AutElement make_aut(const GroupType& G, std::vector<std::vector<std::int64_t>> m, std::int64_t lambda) {
  const auto d = static_cast<std::size_t>(G.d());
  if (m.size() != d) throw std::invalid_argument("make_aut: matrix has wrong shape");
  for (std::size_t i = 0; i < d; ++i) {
    if (m[i].size() != d) throw std::invalid_argument("make_aut: matrix has wrong shape");
    const auto mi = mod_pe(G, static_cast<int>(i));
    for (std::size_t j = 0; j < d; ++j) {
      auto& v = m[i][j];
      v = ((v % mi) + mi) % mi;
      const int need = std::max(0, G.exponent(static_cast<int>(i)) - G.exponent(static_cast<int>(j)));
      if (v % G.ring().pow_p(need) != 0)
        throw std::invalid_argument("make_aut: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") breaks the divisibility constraint");
    }
  }
  lambda = fp::norm(lambda, G.p());
  if (lambda == 0) throw std::invalid_argument("make_aut: lambda must be nonzero mod p");
  AutElement a{G, std::move(m), lambda};
  // bijective iff the images of the generators generate G
  std::vector<Element> imgs;
  for (int j = 0; j < G.d(); ++j) imgs.push_back(apply(a, generator(G, j)));
  if (subgroup_from_generators(G, imgs).log_order() != G.log_order())
    throw std::invalid_argument("make_aut: endomorphism is not bijective");
  return a;
}

AutElement identity_aut(const GroupType& G) {
  const auto d = static_cast<std::size_t>(G.d());
  std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return AutElement{G, std::move(m), 1};
}

AutElement compose(const AutElement& a, const AutElement& b) {
  require_same(a.parent, b.parent, "compose");
  const auto& G = a.parent;
  const auto d = static_cast<std::size_t>(G.d());
  std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    const auto mi = mod_pe(G, static_cast<int>(i));
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s = (s + a.matrix[i][k] * b.matrix[k][j]) % mi;
      m[i][j] = s;
    }
  }
  return AutElement{G, std::move(m), a.lambda * b.lambda % G.p()};
}

Element apply(const AutElement& a, const Element& x) {
  const auto& G = a.parent;
  const auto d = static_cast<std::size_t>(G.d());
  std::vector<std::int64_t> y(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const auto mi = mod_pe(G, static_cast<int>(i));
    for (std::size_t j = 0; j < d; ++j) y[i] = (y[i] + a.matrix[i][j] * x.coords[j]) % mi;
  }
  return Element{std::move(y)};
}

Subgroup apply(const AutElement& a, const Subgroup& S) {
  require_same(a.parent, S.parent(), "apply");
  std::vector<Element> imgs;
  for (const auto& g : S.generators()) imgs.push_back(apply(a, g));
  return subgroup_from_generators(a.parent, imgs);
}

fp::Mat reduction_mod_p(const AutElement& a) {
  fp::Mat S = a.matrix;
  for (auto& r : S)
    for (auto& v : r) v = fp::norm(v, a.parent.p());
  return S;
}

fp::Vec LinearAction::on_hab(const fp::Vec& h) const {
  auto out = fp::vec_mul(h, sinv, p);
  for (auto& v : out) v = v * lambda % p;
  return out;
}

fp::Vec LinearAction::on_wedge(const fp::Vec& w) const {
  // W' = lambda * Sinv^T W Sinv, entry (a,b) = lambda * sum_{i,j} Sinv[i][a] W[i][j] Sinv[j][b]
  const std::size_t d = sinv.size();
  fp::Vec out(w.size(), 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      std::int64_t s = 0;
      std::size_t slot = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j, ++slot) {
          if (w[slot] == 0) continue;
          // v*_i ^ v*_j contributes Sinv[i][a]Sinv[j][b] - Sinv[j][a]Sinv[i][b]
          s += w[slot] * (sinv[i][a] * sinv[j][b] - sinv[j][a] * sinv[i][b]);
          s %= p;
        }
      out[wedge_slot(static_cast<int>(d), static_cast<int>(a), static_cast<int>(b))] = fp::norm(s * lambda, p);
    }
  return out;
}

LinearAction linear_action(const AutElement& a) {
  return LinearAction{a.parent.p(), a.lambda, fp::inverse(reduction_mod_p(a), a.parent.p())};
}

HabClass bockstein_reduce(const DualElement& c) {
  fp::Vec f(c.coords.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = fp::norm(c.coords[i], c.parent.p());
  return HabClass{c.parent, std::move(f)};
}

int bockquivalence_class(const DualElement& c) {
  int best = 0;
  for (int i = 0; i < c.parent.d(); ++i)
    if (c.coords[static_cast<std::size_t>(i)] % c.parent.p() != 0) best = std::max(best, c.parent.block_of(i));
  return best;
}

Subgroup preimage_of_kernel(const GroupType& G, const fp::Mat& functionals) {
  std::vector<Element> gens;
  for (int i = 0; i < G.d(); ++i) gens.push_back(scalar_mul(G, G.p(), generator(G, i)));
  for (const auto& x : fp::nullspace(functionals, static_cast<std::size_t>(G.d()), G.p()))
    gens.push_back(make_element(G, x));
  return subgroup_from_generators(G, gens);
}

Subgroup kernel_T(const HabClass& h) {
  if (h.is_zero()) return whole_group(h.parent);
  return preimage_of_kernel(h.parent, {h.functional});
}

bool wedge_is_decomposable(const WedgeClass& w) { return fp::rank(w.matrix(), w.parent.p()) <= 2; }

std::pair<fp::Vec, fp::Vec> wedge_factorize(const WedgeClass& w) {
  if (w.is_zero()) throw std::invalid_argument("wedge_factorize: zero wedge");
  const auto& G = w.parent;
  const std::int64_t p = G.p();
  const auto W = w.matrix();
  for (int i = 0; i < G.d(); ++i)
    for (int j = i + 1; j < G.d(); ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      if (W[ui][uj] == 0) continue;
      // for w = a^b the rows satisfy r_i ^ r_j = w_ij w
      const std::int64_t k = fp::inv(W[ui][uj], p);
      fp::Vec f(W[uj].size()), g = W[ui];
      for (std::size_t c = 0; c < f.size(); ++c) f[c] = fp::norm(-W[uj][c] * k, p);
      if (!(wedge_product(G, f, g) == w)) throw OutOfScope("wedge is not decomposable (rank > 2)");
      return {f, g};
    }
  throw std::logic_error("unreachable");
}

Subgroup kernel_M(const WedgeClass& w) {
  if (w.is_zero()) return whole_group(w.parent);
  auto [f, g] = wedge_factorize(w);
  return preimage_of_kernel(w.parent, {f, g});
}

std::pair<HabClass, WedgeClass> act(const AutElement& a, const HabClass& h, const WedgeClass& w) {
  require_same(a.parent, h.parent, "act");
  require_same(a.parent, w.parent, "act");
  const auto L = linear_action(a);
  return {HabClass{h.parent, L.on_hab(h.functional)}, WedgeClass{w.parent, L.on_wedge(w.coeffs)}};
}

}  // namespace h2orb
