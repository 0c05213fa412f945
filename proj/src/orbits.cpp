#include "h2orbits/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace h2orb {
namespace {

std::vector<fp::Vec> all_vectors(std::int64_t p, std::size_t len) {
  const auto total = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(len));
  std::vector<fp::Vec> out;
  out.reserve(total);
  fp::Vec v(len, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.push_back(v);
    for (std::size_t i = len; i-- > 0;) {
      if (++v[i] < p) break;
      v[i] = 0;
    }
  }
  return out;
}

struct Accum {
  InvariantVector inv;
  std::size_t first_h = 0, first_w = 0;
  std::uint64_t size = 0;
};

using Histogram = std::map<InvariantVector, Accum>;

void merge_into(Histogram& dst, const Histogram& src) {
  for (const auto& [k, a] : src) {
    auto [it, fresh] = dst.emplace(k, a);
    if (fresh) continue;
    auto& b = it->second;
    if (std::pair(a.first_h, a.first_w) < std::pair(b.first_h, b.first_w)) {
      b.first_h = a.first_h;
      b.first_w = a.first_w;
    }
    b.size += a.size;
  }
}

}  // namespace

std::uint64_t vec_code(const fp::Vec& v, std::int64_t p) {
  std::uint64_t c = 0;
  for (auto x : v) c = c * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(x);
  return c;
}

std::vector<HabClass> enumerate_hab(const GroupType& G) {
  std::vector<HabClass> out;
  for (auto& v : all_vectors(G.p(), static_cast<std::size_t>(G.d()))) out.push_back(HabClass{G, std::move(v)});
  return out;
}

std::vector<WedgeClass> enumerate_decomposable_wedges(const GroupType& G) {
  const auto vecs = all_vectors(G.p(), static_cast<std::size_t>(G.d()));
  std::set<fp::Vec> seen;
  // f ^ g over f < g covers every decomposable wedge (and 0)
  for (std::size_t a = 0; a < vecs.size(); ++a)
    for (std::size_t b = a; b < vecs.size(); ++b) seen.insert(wedge_product(G, vecs[a], vecs[b]).coeffs);
  std::vector<WedgeClass> out;
  out.reserve(seen.size());
  for (const auto& c : seen) out.push_back(WedgeClass{G, c});
  return out;
}

std::vector<std::uint64_t> OrbitTable::sizes() const {
  std::vector<std::uint64_t> s;
  for (const auto& r : rows) s.push_back(r.size);
  return s;
}

OrbitTable orbit_table(const GroupType& G, const OrbitOptions& opt) {
  const auto habs = enumerate_hab(G);
  auto wedges = enumerate_decomposable_wedges(G);
  if (opt.hab_only) wedges.erase(wedges.begin() + 1, wedges.end());  // the zero wedge sorts first

  // kernels, interned
  std::vector<Subgroup> Ts, Ms;
  std::vector<std::size_t> t_of(habs.size()), m_of(wedges.size());
  std::vector<LevelPair> lT, lM;
  const auto whole = whole_group(G);
  if (!opt.classifier) {
    std::map<std::vector<howell::Row>, std::size_t> ids;
    for (std::size_t i = 0; i < habs.size(); ++i) {
      auto T = kernel_T(habs[i]);
      auto [it, fresh] = ids.emplace(T.rows(), Ts.size());
      if (fresh) {
        Ts.push_back(T);
        lT.push_back(levels(whole, T));
      }
      t_of[i] = it->second;
    }
    ids.clear();
    for (std::size_t j = 0; j < wedges.size(); ++j) {
      auto M = kernel_M(wedges[j]);
      auto [it, fresh] = ids.emplace(M.rows(), Ms.size());
      if (fresh) {
        Ms.push_back(M);
        lM.push_back(levels(whole, M));
      }
      m_of[j] = it->second;
    }
  }

  std::vector<InvariantVector> per_pair(opt.keep_assignment ? habs.size() * wedges.size() : 0);
  auto work = [&](std::size_t h_begin, std::size_t h_end, Histogram& hist) {
    std::map<std::pair<std::size_t, std::size_t>, std::pair<LevelPair, int>> memo;
    for (std::size_t i = h_begin; i < h_end; ++i)
      for (std::size_t j = 0; j < wedges.size(); ++j) {
        InvariantVector v;
        if (opt.classifier) {
          v = opt.classifier(habs[i], wedges[j]);
        } else {
          const auto key = std::pair(t_of[i], m_of[j]);
          auto it = memo.find(key);
          if (it == memo.end()) {
            const auto& T = Ts[key.first];
            const auto& M = Ms[key.second];
            it = memo.emplace(key, std::pair(levels(T, M), c_index(T, M))).first;
          }
          v = InvariantVector{lT[key.first], lM[key.second], it->second.first, it->second.second};
        }
        if (opt.keep_assignment) per_pair[i * wedges.size() + j] = v;
        auto [slot, fresh] = hist.emplace(v, Accum{v, i, j, 0});
        (void)fresh;
        ++slot->second.size;
      }
  };

  const unsigned nthreads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(habs.size())));
  Histogram hist;
  if (nthreads == 1) {
    work(0, habs.size(), hist);
  } else {
    std::vector<Histogram> parts(nthreads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (habs.size() + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      const std::size_t b = std::min(habs.size(), t * chunk), e = std::min(habs.size(), b + chunk);
      pool.emplace_back([&, t, b, e] { work(b, e, parts[t]); });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) merge_into(hist, part);
  }

  OrbitTable tab{G, {}, 0, 0, wedges.size(), {}};
  std::map<InvariantVector, std::uint32_t> row_of;
  for (const auto& [k, a] : hist) {
    row_of[k] = static_cast<std::uint32_t>(tab.rows.size());
    tab.rows.push_back(OrbitRow{k, habs[a.first_h], wedges[a.first_w], a.size});
    tab.total += a.size;
  }
  for (const auto& v : per_pair) tab.assignment.push_back(row_of.at(v));
  const int d = G.d();
  tab.h2_size = ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(d + d * (d - 1) / 2));
  return tab;
}

ClosedForm closed_form_table(const GroupType& G) {
  ClosedForm cf;
  const std::int64_t p = G.p();
  const auto& e = G.exponents();
  auto u = [](std::int64_t x) { return static_cast<std::uint64_t>(x); };
  const std::int64_t p2 = p * p, p3 = p2 * p;
  if (G.d() == 2) {
    cf.available = true;
    if (e[0] == e[1]) {
      cf.label = "m1=m2";
      cf.hab_sizes = {1, u(p2 - 1)};
      cf.sizes = {1, u(p2 - 1), u(p - 1), u((p - 1) * (p2 - 1))};
    } else {
      cf.label = "m1<m2";
      cf.hab_sizes = {1, u(p - 1), u(p2 - p)};
      cf.sizes = {1, u(p - 1), u(p2 - p), u(p - 1), u((p - 1) * (p - 1)), u((p - 1) * (p2 - p))};
    }
  } else if (G.d() == 3) {
    cf.available = true;
    const bool eq12 = e[0] == e[1], eq23 = e[1] == e[2];
    if (eq12 && eq23) {
      cf.label = "m1=m2=m3";
      cf.hab_sizes = {1, u(p3 - 1)};
      cf.sizes = {1, u(p3 - 1), u(p3 - 1), u((p3 - 1) * (p2 - 1)), u((p3 - 1) * (p3 - p2))};
    } else if (!eq12 && eq23) {
      cf.label = "m1<m2=m3";
      cf.hab_sizes = {1, u(p - 1), u(p3 - p)};
      cf.sizes = {1,
                  u(p - 1),
                  u(p3 - p),
                  u(p3 - p),
                  u(p - 1),
                  u((p - 1) * (p2 - 1)),
                  u((p - 1) * (p - 1)),
                  u((p - 1) * (p3 - p2 - p + 1)),
                  u((p3 - p) * (p2 - p)),
                  u((p3 - p) * (p - 1)),
                  u((p3 - p) * (p3 - p2))};
    } else if (eq12 && !eq23) {
      cf.label = "m1=m2<m3";
      cf.hab_sizes = {1, u(p2 - 1), u(p3 - p2)};
      cf.sizes = {1,
                  u(p2 - 1),
                  u(p3 - p2),
                  u(p3 - p2),
                  u(p2 - 1),
                  u((p2 - 1) * (p2 - p)),
                  u((p2 - 1) * (p3 - 2 * p2 + p)),
                  u((p2 - 1) * (p - 1)),
                  u((p2 - 1) * (p2 - p)),
                  u((p3 - p2) * (p3 - p2)),
                  u((p3 - p2) * (p2 - 1))};
    } else {
      cf.label = "m1<m2<m3";
      cf.hab_sizes = {1, u(p - 1), u(p2 - p), u(p3 - p2)};
      const std::int64_t q = p - 1;
      cf.sizes = {1,
                  u(q),
                  u(p2 - p),
                  u(p3 - p2),
                  u(p3 - p2),
                  u(p2 - p),
                  u(q),
                  u(q * q * p),
                  u(q * q * q * p),
                  u(q * q),
                  u(q * q * q),
                  u(q * q),
                  u((p2 - p) * (p2 - p)),
                  u((p2 - p) * (p3 - 2 * p2 + p)),
                  u((p2 - p) * (p2 - p)),
                  u((p2 - p) * q),
                  u((p3 - p2) * (p3 - p2)),
                  u((p3 - p2) * (p2 - p)),
                  u((p3 - p2) * q)};
    }
  } else {
    cf.label = "no formula";
  }
  return cf;
}

bool same_multiset(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace h2orb
