#include "h2orbits/fp_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace h2orb::fp {

std::int64_t norm(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

std::int64_t inv(std::int64_t x, std::int64_t p) {
  x = norm(x, p);
  if (x == 0) throw std::domain_error("fp::inv of zero");
  // Fermat
  std::int64_t r = 1, b = x, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

int row_reduce(Mat& A, std::int64_t p) {
  if (A.empty()) return 0;
  const std::size_t m = A.size(), n = A[0].size();
  for (auto& r : A)
    for (auto& v : r) v = norm(v, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && A[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(A[rank], A[piv]);
    const std::int64_t k = inv(A[rank][c], p);
    for (auto& v : A[rank]) v = v * k % p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || A[i][c] == 0) continue;
      const std::int64_t f = A[i][c];
      for (std::size_t j = 0; j < n; ++j) A[i][j] = norm(A[i][j] - f * A[rank][j], p);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank(Mat A, std::int64_t p) { return row_reduce(A, p); }

Mat nullspace(Mat A, std::size_t ncols, std::int64_t p) {
  for (auto& r : A) r.resize(ncols, 0);
  const int r = row_reduce(A, p);
  std::vector<std::size_t> pivcol;
  std::vector<bool> is_piv(ncols, false);
  for (int i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (A[static_cast<std::size_t>(i)][c] == 0) ++c;
    pivcol.push_back(c);
    is_piv[c] = true;
  }
  Mat out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Vec x(ncols, 0);
    x[f] = 1;
    for (int i = 0; i < r; ++i) x[pivcol[static_cast<std::size_t>(i)]] = norm(-A[static_cast<std::size_t>(i)][f], p);
    out.push_back(std::move(x));
  }
  return out;
}

Mat inverse(const Mat& A, std::int64_t p) {
  const std::size_t d = A.size();
  Mat aug(d, Vec(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = A[i][j];
    aug[i][d + i] = 1;
  }
  row_reduce(aug, p);
  Mat out(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (aug[i][i] != 1) throw std::domain_error("fp::inverse: singular matrix");
    for (std::size_t j = 0; j < d; ++j) out[i][j] = aug[i][d + j];
  }
  return out;
}

Mat multiply(const Mat& A, const Mat& B, std::int64_t p) {
  const std::size_t m = A.size(), k = B.size(), n = k ? B[0].size() : 0;
  Mat C(m, Vec(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (A[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) C[i][j] = (C[i][j] + A[i][l] * B[l][j]) % p;
    }
  for (auto& r : C)
    for (auto& v : r) v = norm(v, p);
  return C;
}

Mat transpose(const Mat& A) {
  if (A.empty()) return {};
  Mat T(A[0].size(), Vec(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
  return T;
}

Mat identity(std::size_t d) {
  Mat I(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) I[i][i] = 1;
  return I;
}

Vec vec_mul(const Vec& v, const Mat& A, std::int64_t p) {
  const std::size_t n = A.empty() ? 0 : A[0].size();
  Vec out(n, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] = (out[j] + v[i] * A[i][j]) % p;
  }
  for (auto& x : out) x = norm(x, p);
  return out;
}

}  // namespace h2orb::fp
