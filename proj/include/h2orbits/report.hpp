#pragma once
// Text/JSON rendering of orbit tables and parsing of CLI class arguments.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "h2orbits/orbits.hpp"

namespace h2orb {

/// "1,2,3" -> {1,2,3}
std::vector<int> parse_type(const std::string& s);
/// "a1,...,ad" -> functional mod p
HabClass parse_hab(const GroupType& G, const std::string& s);
/// "i<j:coef,..." with 1-based indices; empty string is the zero wedge
WedgeClass parse_wedge(const GroupType& G, const std::string& s);
std::string format_hab(const HabClass& h);
std::string format_wedge(const WedgeClass& w);

/// "match", "mismatch" or "n/a"
std::string closed_form_verdict(const OrbitTable& t);

nlohmann::json to_json(const OrbitTable& t);
/// Inverse of to_json; validates the payload.
OrbitTable table_from_json(const nlohmann::json& j);
/// Field-by-field equality (group, rows, totals).
bool same_table(const OrbitTable& a, const OrbitTable& b);

void render_table(std::ostream& os, const OrbitTable& t);

}  // namespace h2orb
