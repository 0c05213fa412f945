// h2orbits: orbit tables, oracle checks and extensions from the command line.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "h2orbits/extension.hpp"
#include "h2orbits/oracle.hpp"
#include "h2orbits/report.hpp"

using namespace h2orb;

namespace {

struct Config {
  std::int64_t p = 0;
  std::string type;
  std::string output = "table";
  std::uint64_t cap = 10'000'000;
  std::string hab, wedge, lift, out_path, action = "model";
  unsigned threads = 1;
  bool hab_only = false, roundtrip = false, fingerprint_only = false;
};

void add_group(CLI::App* sc, Config& c, bool type_required = true) {
  sc->add_option("--p", c.p, "prime")->required();
  auto* t = sc->add_option("--type", c.type, "exponents, e.g. 1,2,3");
  if (type_required) t->required();
}

void add_output(CLI::App* sc, Config& c) {
  sc->add_option("--output", c.output, "table or json")->check(CLI::IsMember({"table", "json"}));
}

GroupType group_of(const Config& c) { return make_group_type(c.p, parse_type(c.type)); }

int run_classify(const Config& c) {
  const auto G = group_of(c);
  const auto h = c.hab.empty() ? make_hab(G, fp::Vec(static_cast<std::size_t>(G.d()), 0)) : parse_hab(G, c.hab);
  const auto w = parse_wedge(G, c.wedge);
  const auto v = classify(h, w);
  if (c.output == "json") {
    nlohmann::json j;
    j["group"] = {{"p", G.p()}, {"exponents", G.exponents()}};
    j["invariant"] = nlohmann::json::array(
        {{v.lL_c.lo, v.lL_c.hi}, {v.lL_w.lo, v.lL_w.hi}, {v.lL_cw.lo, v.lL_cw.hi}, v.idx});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "G: " << G.to_string() << "  h=" << format_hab(h) << " w=" << format_wedge(w) << "\n";
    std::cout << "invariant: " << v.to_string() << "\n";
    std::cout << "|G:T| = " << kernel_T(h).index() << ", |G:M| = " << kernel_M(w).index() << "\n";
  }
  return 0;
}

int run_orbits(const Config& c) {
  const auto G = group_of(c);
  OrbitOptions o;
  o.threads = c.threads;
  o.hab_only = c.hab_only;
  const auto t = orbit_table(G, o);
  if (c.output == "json") {
    const auto j = to_json(t);
    const auto text = j.dump(2);
    std::cout << text << "\n";
    if (c.roundtrip) {
      const auto back = table_from_json(nlohmann::json::parse(text));
      if (!same_table(t, back)) {
        std::cerr << "roundtrip: FAIL\n";
        return 1;
      }
      std::cerr << "roundtrip: ok\n";
    }
  } else {
    render_table(std::cout, t);
  }
  return 0;
}

int run_verify(const Config& c) {
  const auto G = group_of(c);
  OracleOptions oo;
  oo.max_pairs = c.cap;
  oo.hab_only = c.hab_only;
  oo.action = c.action == "dual" ? HabAction::pontryagin : HabAction::model;
  const auto P = orbit_partition_bruteforce(G, oo);
  OrbitOptions o;
  o.keep_assignment = true;
  o.hab_only = c.hab_only;
  o.threads = c.threads;
  const auto rep = compare(P, orbit_table(G, o));
  if (c.output == "json") {
    nlohmann::json j{{"group", {{"p", G.p()}, {"exponents", G.exponents()}}},
                     {"result", rep.identical ? "PASS" : "FAIL"},
                     {"oracle_orbits", rep.oracle_blocks},
                     {"invariant_classes", rep.table_blocks},
                     {"detail", rep.describe(P)}};
    std::cout << j.dump(2) << "\n";
  } else if (rep.identical) {
    std::cout << "PASS " << G.to_string() << ": oracle and invariants agree, " << rep.oracle_blocks << " orbits\n";
  } else {
    std::cout << "FAIL " << G.to_string() << ": " << rep.describe(P) << "\n";
  }
  return rep.identical ? 0 : 1;
}

void print_closed_form(const GroupType& G) {
  const auto cf = closed_form_table(G);
  std::cout << G.to_string() << "  case " << cf.label;
  if (!cf.available) {
    std::cout << "\n";
    return;
  }
  std::uint64_t total = 0;
  for (auto x : cf.sizes) total += x;
  std::cout << "  " << cf.sizes.size() << " orbits, total " << total << "\n  sizes:";
  for (auto x : cf.sizes) std::cout << " " << x;
  std::cout << "\n  w = 0 part:";
  for (auto x : cf.hab_sizes) std::cout << " " << x;
  std::cout << "\n";
}

int run_tables(const Config& c) {
  if (!c.type.empty()) {
    print_closed_form(group_of(c));
    return 0;
  }
  for (const auto& e : std::vector<std::vector<int>>{{1, 2}, {1, 1}, {1, 1, 1}, {1, 2, 2}, {1, 1, 2}, {1, 2, 3}}) {
    auto shifted = e;
    if (c.p == 2)
      for (auto& x : shifted) ++x;  // Z/2 summands are excluded
    print_closed_form(make_group_type(c.p, shifted));
  }
  return 0;
}

int run_extension(const Config& c) {
  const auto G = group_of(c);
  const auto h = c.hab.empty() ? make_hab(G, fp::Vec(static_cast<std::size_t>(G.d()), 0)) : parse_hab(G, c.hab);
  const auto w = parse_wedge(G, c.wedge);
  DualElement lift = canonical_lift(h);
  if (!c.lift.empty()) {
    std::vector<std::int64_t> raw;
    for (int x : parse_type(c.lift)) raw.push_back(x);
    lift = make_dual(G, raw);
  }
  const auto E = build_extension(cocycle_from_class(h, w, lift));
  const auto& f = E.fingerprint();
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) throw std::runtime_error("cannot write " + c.out_path);
    os = &file;
  }
  auto& log = c.out_path.empty() && !c.fingerprint_only ? std::cerr : std::cout;
  log << "order " << E.order() << ", |[E,E]| = " << f.commutator_order << ", |Z(E)| = " << f.center_order
      << ", abelianization [";
  for (std::size_t i = 0; i < f.abelianization.size(); ++i) log << (i ? "," : "") << f.abelianization[i];
  log << "], element orders";
  for (const auto& [o, n] : f.order_histogram) log << " " << o << ":" << n;
  log << "\n";
  if (!c.fingerprint_only) E.write_table(*os);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of Aut(G) x F_p^* on Hab x im(cup) for finite abelian p-groups"};
  app.require_subcommand(1);
  Config c;

  auto* classify_cmd = app.add_subcommand("classify", "invariant vector of one class");
  add_group(classify_cmd, c);
  add_output(classify_cmd, c);
  classify_cmd->add_option("--hab", c.hab, "functional a1,...,ad (default 0)");
  classify_cmd->add_option("--wedge", c.wedge, "sparse wedge i<j:coef,... with 1-based indices (default 0)");

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit table by invariant histogram");
  add_group(orbits_cmd, c);
  add_output(orbits_cmd, c);
  orbits_cmd->add_option("--threads", c.threads, "worker threads");
  orbits_cmd->add_flag("--hab-only", c.hab_only, "only pairs with w = 0");
  orbits_cmd->add_flag("--check-roundtrip", c.roundtrip, "re-parse the JSON output and compare");

  auto* verify_cmd = app.add_subcommand("verify", "compare the BFS orbit partition with the invariant partition");
  add_group(verify_cmd, c);
  add_output(verify_cmd, c);
  verify_cmd->add_option("--cap", c.cap, "max pairs for the oracle")->envname("H2ORBITS_CAP");
  verify_cmd->add_option("--threads", c.threads, "worker threads for the table");
  verify_cmd->add_flag("--hab-only", c.hab_only, "only pairs with w = 0");
  verify_cmd->add_option("--action", c.action, "Hab action: model or dual")->check(CLI::IsMember({"model", "dual"}));

  auto* tables_cmd = app.add_subcommand("tables", "closed-form orbit sizes");
  add_group(tables_cmd, c, false);

  auto* ext_cmd = app.add_subcommand("extension", "multiplication table of the extension");
  add_group(ext_cmd, c);
  ext_cmd->add_option("--hab", c.hab, "functional a1,...,ad (default 0)");
  ext_cmd->add_option("--wedge", c.wedge, "sparse wedge i<j:coef,...");
  ext_cmd->add_option("--lift", c.lift, "dual element lifting --hab (default: same coordinates)");
  ext_cmd->add_option("--out", c.out_path, "write the table here instead of stdout");
  ext_cmd->add_flag("--fingerprint", c.fingerprint_only, "print only the fingerprint");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return run_classify(c);
    if (*orbits_cmd) return run_orbits(c);
    if (*verify_cmd) return run_verify(c);
    if (*tables_cmd) return run_tables(c);
    if (*ext_cmd) return run_extension(c);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cap)\n";
    return 3;
  } catch (const OutOfScope& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
