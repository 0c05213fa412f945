#pragma once

#include <cstdint>
#include <stdexcept>

namespace h2orb {

/// Arithmetic in the chain ring Z/p^n. Residues are kept in [0, p^n).
class ZMod {
 public:
  ZMod(std::int64_t p, int n) : p_(p), n_(n), q_(1) {
    if (p < 2 || n < 1) throw std::invalid_argument("ZMod: need p >= 2, n >= 1");
    for (int i = 0; i < n; ++i) {
      if (q_ > (std::int64_t{1} << 31) / p) throw std::overflow_error("ZMod: p^n exceeds 2^31");
      q_ *= p;
    }
  }

  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  std::int64_t modulus() const { return q_; }

  std::int64_t norm(std::int64_t x) const {
    x %= q_;
    return x < 0 ? x + q_ : x;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return norm(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return norm(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return norm(norm(a) * norm(b)); }

  // p-adic valuation of a residue; the zero residue has valuation n.
  int val(std::int64_t x) const {
    x = norm(x);
    if (x == 0) return n_;
    int v = 0;
    while (x % p_ == 0) {
      x /= p_;
      ++v;
    }
    return v;
  }

  // p^min(k, n) as an integer (p^n itself is returned for k >= n).
  std::int64_t pow_p(int k) const {
    std::int64_t r = 1;
    for (int i = 0; i < k && i < n_; ++i) r *= p_;
    return r;
  }

  std::int64_t inv(std::int64_t u) const {
    std::int64_t a = norm(u), m = q_;
    std::int64_t x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t t = a / m;
      std::int64_t r = a - t * m;
      a = m;
      m = r;
      std::int64_t nx = x0 - t * x1;
      x0 = x1;
      x1 = nx;
    }
    if (a != 1) throw std::domain_error("ZMod::inv: not a unit");
    return norm(x0);
  }

 private:
  std::int64_t p_;
  int n_;
  std::int64_t q_;
};

// Integer power with overflow check; used for group orders and counts.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("ipow overflow");
    r *= base;
  }
  return r;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace h2orb
