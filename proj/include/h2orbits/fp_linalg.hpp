#pragma once
// Dense linear algebra over F_p for small matrices.

#include <cstdint>
#include <vector>

namespace h2orb::fp {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

std::int64_t norm(std::int64_t x, std::int64_t p);
std::int64_t inv(std::int64_t x, std::int64_t p);

/// Row echelon form in place; returns the rank.
int row_reduce(Mat& A, std::int64_t p);
int rank(Mat A, std::int64_t p);
/// Basis of { x : A x = 0 } (column vectors), A has `ncols` columns.
Mat nullspace(Mat A, std::size_t ncols, std::int64_t p);
/// Throws std::domain_error if singular.
Mat inverse(const Mat& A, std::int64_t p);
Mat multiply(const Mat& A, const Mat& B, std::int64_t p);
Mat transpose(const Mat& A);
Mat identity(std::size_t d);
/// row vector times matrix
Vec vec_mul(const Vec& v, const Mat& A, std::int64_t p);

}  // namespace h2orb::fp
