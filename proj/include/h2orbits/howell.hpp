#pragma once

#include <cstdint>
#include <vector>

#include "h2orbits/zmod.hpp"

namespace h2orb::howell {

using Row = std::vector<std::int64_t>;

/// Howell normal form of the row span of `rows` over Z/p^n.
///
/// Output rows are in echelon form, each pivot is a power of p, entries above
/// a pivot lie in [0, pivot), and every element of the span whose first j
/// entries vanish is a combination of the rows whose pivot column is >= j.
/// The form is unique for the submodule, so two generating sets of the same
/// submodule give identical output.
std::vector<Row> howell_form(std::vector<Row> rows, std::size_t ncols, const ZMod& R);

/// Reduces `x` against a Howell basis. The result is zero iff x lies in the span.
Row reduce(Row x, const std::vector<Row>& basis, const ZMod& R);

/// Rows whose first `prefix` entries vanish, with that prefix stripped.
/// Applied to a Howell form this yields a Howell form of the corresponding
/// sub-module.
std::vector<Row> zero_prefix_tail(const std::vector<Row>& howell, std::size_t prefix);

/// Howell form of { x : x * A = 0 }, where A has `rows.size()` rows.
std::vector<Row> left_kernel(const std::vector<Row>& rows, std::size_t ncols, const ZMod& R);

/// Diagonal valuations of the Smith normal form over Z/p^n. Zero diagonal
/// entries (beyond the rank) are not reported.
std::vector<int> smith_valuations(std::vector<Row> rows, std::size_t ncols, const ZMod& R);

/// log_p of the cardinality of the module spanned by a Howell basis.
int log_order(const std::vector<Row>& howell, const ZMod& R);

}  // namespace h2orb::howell
