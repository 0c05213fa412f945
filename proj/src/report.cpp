#include "h2orbits/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace h2orb {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::int64_t to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(std::string(what) + ": bad integer '" + s + "'");
  return v;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

nlohmann::json invariant_json(const InvariantVector& v) {
  return nlohmann::json::array({{v.lL_c.lo, v.lL_c.hi}, {v.lL_w.lo, v.lL_w.hi}, {v.lL_cw.lo, v.lL_cw.hi}, v.idx});
}

InvariantVector invariant_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("json: invariant must have 4 entries");
  auto pair = [](const nlohmann::json& x) { return LevelPair{x.at(0).get<int>(), x.at(1).get<int>()}; };
  return InvariantVector{pair(j[0]), pair(j[1]), pair(j[2]), j[3].get<int>()};
}

}  // namespace

std::vector<int> parse_type(const std::string& s) {
  std::vector<int> out;
  for (const auto& t : split(s, ',')) out.push_back(static_cast<int>(to_int(t, "type")));
  if (out.empty()) throw std::invalid_argument("type: empty exponent list");
  return out;
}

HabClass parse_hab(const GroupType& G, const std::string& s) {
  fp::Vec f;
  for (const auto& t : split(s, ',')) f.push_back(to_int(t, "hab"));
  if (f.size() != static_cast<std::size_t>(G.d()))
    throw std::invalid_argument("hab: expected " + std::to_string(G.d()) + " coefficients");
  return make_hab(G, std::move(f));
}

WedgeClass parse_wedge(const GroupType& G, const std::string& s) {
  fp::Vec c(wedge_size(G.d()), 0);
  for (const auto& item : split(s, ',')) {
    if (item.empty()) continue;
    const auto lt = item.find('<'), colon = item.find(':');
    if (lt == std::string::npos || colon == std::string::npos || colon < lt)
      throw std::invalid_argument("wedge: expected i<j:coef, got '" + item + "'");
    const auto i = to_int(item.substr(0, lt), "wedge");
    const auto j = to_int(item.substr(lt + 1, colon - lt - 1), "wedge");
    const auto v = to_int(item.substr(colon + 1), "wedge");
    if (i < 1 || j <= i || j > G.d()) throw std::invalid_argument("wedge: need 1 <= i < j <= d in '" + item + "'");
    auto& slot = c[wedge_slot(G.d(), static_cast<int>(i - 1), static_cast<int>(j - 1))];
    slot = fp::norm(slot + v, G.p());
  }
  return make_wedge(G, std::move(c));
}

std::string format_hab(const HabClass& h) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < h.functional.size(); ++i) os << (i ? "," : "") << h.functional[i];
  os << ")";
  return os.str();
}

std::string format_wedge(const WedgeClass& w) {
  const int d = w.parent.d();
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (auto v = w.at(i, j); v != 0) {
        os << (any ? "," : "") << i + 1 << "<" << j + 1 << ":" << v;
        any = true;
      }
  return any ? os.str() : "0";
}

std::string closed_form_verdict(const OrbitTable& t) {
  const auto cf = closed_form_table(t.group);
  if (!cf.available) return "n/a";
  return same_multiset(t.sizes(), cf.sizes) ? "match" : "mismatch";
}

nlohmann::json to_json(const OrbitTable& t) {
  nlohmann::json j;
  j["group"] = {{"p", t.group.p()}, {"exponents", t.group.exponents()}};
  j["orbits"] = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json wedge = nlohmann::json::array();
    const int d = t.group.d();
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (auto v = r.rep_wedge.at(a, b); v != 0) wedge.push_back({a + 1, b + 1, v});
    j["orbits"].push_back({{"invariant", invariant_json(r.invariant)},
                           {"size", r.size},
                           {"representative", {{"hab", r.rep_hab.functional}, {"wedge", wedge}}}});
  }
  j["total"] = t.total;
  const auto of = ipow(static_cast<std::uint64_t>(t.group.p()), static_cast<unsigned>(t.group.d())) * t.wedge_count;
  j["coverage"] = {{"covered", t.total}, {"of", of}};
  j["closed_form"] = closed_form_verdict(t);
  return j;
}

OrbitTable table_from_json(const nlohmann::json& j) {
  try {
    const auto& g = j.at("group");
    auto G = make_group_type(g.at("p").get<std::int64_t>(), g.at("exponents").get<std::vector<int>>());
    const int d = G.d();
    OrbitTable t{G, {}, 0, 0, 0, {}};
    for (const auto& o : j.at("orbits")) {
      const auto& rep = o.at("representative");
      auto h = make_hab(G, rep.at("hab").get<fp::Vec>());
      fp::Vec c(wedge_size(d), 0);
      for (const auto& e : rep.at("wedge")) {
        const int a = e.at(0).get<int>() - 1, b = e.at(1).get<int>() - 1;
        if (a < 0 || b <= a || b >= d) throw std::invalid_argument("json: bad wedge index");
        c[wedge_slot(d, a, b)] = e.at(2).get<std::int64_t>();
      }
      t.rows.push_back(OrbitRow{invariant_from(o.at("invariant")), h, make_wedge(G, c), o.at("size").get<std::uint64_t>()});
    }
    t.total = j.at("total").get<std::uint64_t>();
    const auto of = j.at("coverage").at("of").get<std::uint64_t>();
    const auto habs = ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(d));
    if (of % habs != 0) throw std::invalid_argument("json: coverage.of is not a multiple of |Hab|");
    t.wedge_count = of / habs;
    t.h2_size = ipow(static_cast<std::uint64_t>(G.p()), static_cast<unsigned>(d + d * (d - 1) / 2));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

bool same_table(const OrbitTable& a, const OrbitTable& b) {
  if (!(a.group == b.group) || a.total != b.total || a.h2_size != b.h2_size || a.wedge_count != b.wedge_count ||
      a.rows.size() != b.rows.size())
    return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.invariant != y.invariant || x.size != y.size || !(x.rep_hab == y.rep_hab) || !(x.rep_wedge == y.rep_wedge))
      return false;
  }
  return true;
}

void render_table(std::ostream& os, const OrbitTable& t) {
  const auto of = ipow(static_cast<std::uint64_t>(t.group.p()), static_cast<unsigned>(t.group.d())) * t.wedge_count;
  os << "G: " << t.group.to_string() << "  |Hab x im cup| = " << of << "  |H^2| = " << t.h2_size << "\n";
  os << std::left << std::setw(4) << "#" << std::setw(34) << "invariant" << std::right << std::setw(10) << "size"
     << "  representative\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    os << std::left << std::setw(4) << i + 1 << std::setw(34) << r.invariant.to_string() << std::right
       << std::setw(10) << r.size << "  h=" << format_hab(r.rep_hab) << " w=" << format_wedge(r.rep_wedge) << "\n";
  }
  os << "total: " << t.total << "/" << of << " covered, " << t.rows.size() << " orbits\n";
  const auto cf = closed_form_table(t.group);
  if (!cf.available) {
    os << "closed form: n/a\n";
    return;
  }
  const bool ok = same_multiset(t.sizes(), cf.sizes);
  os << "closed form (" << cf.label << "): " << (ok ? "MATCH" : "MISMATCH");
  if (!ok) os << "  expected " << cf.sizes.size() << " orbits {" << join(cf.sizes) << "}";
  os << "\n";
}

}  // namespace h2orb
