#include "h2orbits/howell.hpp"

#include <algorithm>
#include <utility>

namespace h2orb::howell {
namespace {

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

// r -= k * s over Z/p^n
void axpy(Row& r, std::int64_t k, const Row& s, const ZMod& R) {
  k = R.norm(k);
  if (k == 0) return;
  for (std::size_t c = 0; c < r.size(); ++c)
    if (s[c] != 0) r[c] = R.sub(r[c], R.mul(k, s[c]));
}

void scale(Row& r, std::int64_t k, const ZMod& R) {
  for (auto& v : r) v = R.mul(v, k);
}

std::size_t pivot_col(const Row& r) {
  for (std::size_t c = 0; c < r.size(); ++c)
    if (r[c] != 0) return c;
  return r.size();
}

}  // namespace

std::vector<Row> howell_form(std::vector<Row> rows, std::size_t ncols, const ZMod& R) {
  std::vector<Row> pending;
  pending.reserve(rows.size());
  for (auto& r : rows) {
    r.resize(ncols, 0);
    for (auto& v : r) v = R.norm(v);
    if (!is_zero(r)) pending.push_back(std::move(r));
  }

  std::vector<Row> out;
  std::vector<std::pair<std::size_t, int>> pivots;  // (column, valuation)
  for (std::size_t col = 0; col < ncols && !pending.empty(); ++col) {
    std::size_t best = pending.size();
    int best_v = R.n();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      int v = R.val(pending[i][col]);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == pending.size()) continue;

    Row piv = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const std::int64_t pv = R.pow_p(best_v);
    scale(piv, R.inv(piv[col] / pv), R);

    for (auto& r : pending)
      if (r[col] != 0) axpy(r, r[col] / pv, piv, R);

    // Saturation: the annihilator multiple of the pivot row vanishes at `col`
    // but may carry information in later columns.
    Row ann = piv;
    scale(ann, R.pow_p(R.n() - best_v), R);
    if (!is_zero(ann)) pending.push_back(std::move(ann));

    std::erase_if(pending, is_zero);
    out.push_back(std::move(piv));
    pivots.emplace_back(col, best_v);
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto [col, v] = pivots[i];
    const std::int64_t pv = R.pow_p(v);
    for (std::size_t r = 0; r < i; ++r) {
      const std::int64_t k = out[r][col] / pv;
      if (k != 0) axpy(out[r], k, out[i], R);
    }
  }
  return out;
}

Row reduce(Row x, const std::vector<Row>& basis, const ZMod& R) {
  for (auto& v : x) v = R.norm(v);
  for (const auto& b : basis) {
    const std::size_t col = pivot_col(b);
    if (x[col] == 0) continue;
    const std::int64_t pv = b[col];
    if (x[col] % pv != 0) continue;
    axpy(x, x[col] / pv, b, R);
  }
  return x;
}

std::vector<Row> zero_prefix_tail(const std::vector<Row>& howell, std::size_t prefix) {
  std::vector<Row> out;
  for (const auto& r : howell) {
    if (pivot_col(r) < prefix) continue;
    out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(prefix), r.end());
  }
  return out;
}

std::vector<Row> left_kernel(const std::vector<Row>& rows, std::size_t ncols, const ZMod& R) {
  const std::size_t k = rows.size();
  std::vector<Row> aug;
  aug.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Row r(ncols + k, 0);
    std::copy(rows[i].begin(), rows[i].begin() + static_cast<std::ptrdiff_t>(ncols), r.begin());
    r[ncols + i] = 1;
    aug.push_back(std::move(r));
  }
  return zero_prefix_tail(howell_form(std::move(aug), ncols + k, R), ncols);
}

std::vector<int> smith_valuations(std::vector<Row> rows, std::size_t ncols, const ZMod& R) {
  for (auto& r : rows) {
    r.resize(ncols, 0);
    for (auto& v : r) v = R.norm(v);
  }
  std::vector<int> diag;
  const std::size_t m = rows.size();
  for (std::size_t t = 0; t < std::min(m, ncols); ++t) {
    int best_v = R.n();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < ncols; ++j) {
        int v = R.val(rows[i][j]);
        if (v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
        }
      }
    if (best_v == R.n()) break;
    std::swap(rows[t], rows[bi]);
    for (auto& r : rows) std::swap(r[t], r[bj]);
    const std::int64_t pv = R.pow_p(best_v);
    scale(rows[t], R.inv(rows[t][t] / pv), R);
    // Every remaining entry has valuation >= best_v, so both eliminations are exact.
    for (std::size_t i = t + 1; i < m; ++i)
      if (rows[i][t] != 0) axpy(rows[i], rows[i][t] / pv, rows[t], R);
    for (std::size_t j = t + 1; j < ncols; ++j) {
      const std::int64_t k = rows[t][j] / pv;
      if (k == 0) continue;
      for (std::size_t i = t; i < m; ++i) rows[i][j] = R.sub(rows[i][j], R.mul(k, rows[i][t]));
    }
    diag.push_back(best_v);
  }
  return diag;
}

int log_order(const std::vector<Row>& howell, const ZMod& R) {
  int total = 0;
  for (const auto& r : howell) {
    const std::size_t c = pivot_col(r);
    if (c < r.size()) total += R.n() - R.val(r[c]);
  }
  return total;
}

}  // namespace h2orb::howell
