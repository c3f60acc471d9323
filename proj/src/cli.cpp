#include "dblock/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <optional>

#include "dblock/automorphisms.hpp"
#include "dblock/characters.hpp"
#include "dblock/conjectures.hpp"
#include "dblock/errors.hpp"
#include "dblock/fusion.hpp"
#include "dblock/invariants.hpp"
#include "dblock/subgroups.hpp"

namespace dblock {

namespace {

using json = nlohmann::json;

struct RunConfig {
  int n = 3;
  int m = 0;
  std::string case_label;
  std::string fix1 = "z";
  std::string fix2 = "z";
  std::string format = "text";
  std::size_t max_order = kDefaultMaxOrder;
  std::string verify = "all";
  std::optional<std::int64_t> s;
  std::int64_t l_min = 1;
  std::int64_t l_max = 3;
  std::optional<std::int64_t> target;
  std::optional<std::int64_t> cap;
};

const std::vector<std::string> kVerifyNames = {"aut",  "essential", "fixedpt", "subrep", "olsson",
                                               "main", "awc",       "owc",     "gluing"};

Params params_of(const RunConfig& cfg) {
  Params p(cfg.n, cfg.m, cfg.max_order);
  p.validate();
  return p;
}

FusionSystem fusion_of(const RunConfig& cfg) {
  if (cfg.case_label.empty()) throw ParamError("--case is required for this command");
  return FusionSystem(params_of(cfg), parse_fusion_case(cfg.case_label),
                      parse_fix_choice(cfg.fix1), parse_fix_choice(cfg.fix2));
}

json element_list(const std::vector<Element>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_string(e));
  return a;
}

json cyc_json(const Cyc& c) { return {{"level", c.level()}, {"coeffs", c.coeffs()}}; }

json invariants_json(const BlockInvariants& inv) {
  return {{"k", inv.k}, {"k0", inv.k0}, {"k1", inv.k1}, {"l", inv.l}};
}

// Representatives of the subsection classes under z-type choices, as listed for each case.
std::vector<Element> canonical_representatives(const Params& p, FusionCase c) {
  std::vector<Element> reps;
  for (std::int64_t j = 0; j < p.cyclic_order(); ++j) {
    for (std::int64_t i = 0; i <= (std::int64_t{1} << (p.n - 2)); ++i)
      reps.push_back(make_element(i, 0, j, p));
    if (c == FusionCase::ab || c == FusionCase::bb) reps.push_back(make_element(0, 1, j, p));
    if (c == FusionCase::ba || c == FusionCase::bb) reps.push_back(make_element(1, 1, j, p));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::int64_t expected_class_count(const Params& p, FusionCase c) {
  const std::int64_t base = (std::int64_t{1} << p.m) * ((std::int64_t{1} << (p.n - 2)) + 1);
  const std::int64_t extra = c == FusionCase::aa ? 0 : c == FusionCase::bb ? 2 : 1;
  return base + extra * (std::int64_t{1} << p.m);
}

bool run_check(const std::string& name, const FusionSystem& fs, json& details) {
  const auto& p = fs.params();
  if (name == "aut") {
    const auto r = verify_aut_two_group(p);
    details["aut"] = {{"order", r.order}, {"two_group", r.is_two_group}};
    return r.is_two_group;
  }
  if (name == "essential") {
    const auto found = essential_classes(fs);
    const auto c1 = d_class_of_subgroup(q1_subgroup(p), p);
    const auto c2 = d_class_of_subgroup(q2_subgroup(p), p);
    std::vector<std::vector<Subgroup>> want{c1, c2};
    std::sort(want.begin(), want.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    json cls = json::array();
    for (const auto& c : found) {
      json members = json::array();
      for (const auto& q : c) members.push_back(element_list(q.generators()));
      cls.push_back(members);
    }
    details["essential"] = {{"classes", cls}};
    return found == want && c1 != c2;
  }
  if (name == "fixedpt") {
    bool ok = true;
    json rows = json::object();
    for (auto which : {Essential::q1, Essential::q2}) {
      if (!fs.is_essential(which)) continue;
      const auto fixed = fixed_points(which, fs);
      const Element gen = *fs.fix(which) == FixChoice::z_type
                              ? gen_z()
                              : mul(central_involution(p), gen_z(), p);
      ok = ok && fixed == closure({gen}, p);
      rows[to_string(which)] = {{"fix", to_string(*fs.fix(which))},
                                {"order", fixed.order()},
                                {"generator", to_string(gen)}};
    }
    details["fixedpt"] = rows;
    return ok;
  }
  if (name == "subrep") {
    const auto reps = subsection_representatives(fs);
    const auto want = expected_class_count(p, fs.fusion_case());
    bool ok = static_cast<std::int64_t>(reps.size()) == want;
    const bool canonical = (!fs.fix(Essential::q1) || *fs.fix(Essential::q1) == FixChoice::z_type) &&
                           (!fs.fix(Essential::q2) || *fs.fix(Essential::q2) == FixChoice::z_type);
    if (canonical) ok = ok && reps == canonical_representatives(p, fs.fusion_case());
    details["subrep"] = {{"count", reps.size()},
                         {"expected", want},
                         {"literal_list_checked", canonical},
                         {"representatives", element_list(reps)}};
    return ok;
  }
  if (name == "olsson") {
    const auto inv = block_invariants(fs);
    const auto index = static_cast<std::int64_t>(p.group_order() / derived_subgroup(p).order());
    details["olsson"] = {{"k0", inv.k0}, {"index_D_Dprime", index}};
    return inv.k0 <= index && inv.k0 == index && index == expected_k0(p);
  }
  if (name == "main") {
    const auto inv = block_invariants(fs);
    const auto kl = k_minus_l(fs);
    details["main"] = {{"k_minus_l", kl},
                       {"closed_form", {{"k", expected_k(p)}, {"k0", expected_k0(p)},
                                        {"k1", expected_k1(p)},
                                        {"l", brauer_character_count(fs.fusion_case())}}},
                       {"computed", invariants_json(inv)}};
    return inv.k == expected_k(p) && inv.k0 == expected_k0(p) && inv.k1 == expected_k1(p) &&
           inv.l == brauer_character_count(fs.fusion_case()) && kl == inv.k - inv.l;
  }
  if (name == "awc") {
    const auto w = alperin_weight_count(fs);
    const auto inv = block_invariants(fs);
    details["awc"] = {{"weights", w}, {"l", inv.l}};
    return w == inv.l;
  }
  if (name == "owc") {
    const auto r = owc_check(fs);
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"defect", row.defect}, {"expected", row.expected}, {"total", row.total},
                      {"weights", row.weights}});
    details["owc"] = rows;
    return r.holds();
  }
  if (name == "gluing") {
    const auto r = gluing_check(fs);
    details["gluing"] = {{"chain_classes", r.classes.size()}, {"verdict", r.verdict}};
    return r.unique();
  }
  throw ParamError("unknown check '" + name + "'");
}

json params_json(const RunConfig& cfg) {
  return {{"n", cfg.n}, {"m", cfg.m}, {"case", cfg.case_label}, {"fix1", cfg.fix1},
          {"fix2", cfg.fix2}};
}

json command_invariants(const RunConfig& cfg) {
  const auto fs = fusion_of(cfg);
  const auto inv = block_invariants(fs);
  json r;
  r["invariants"] = invariants_json(inv);
  r["checks"] = inv.flags;
  r["details"] = {{"k_minus_l", k_minus_l(fs)}, {"l_lower_bound", l_lower_bound(fs)}};
  return r;
}

json command_classes(const RunConfig& cfg) {
  const auto fs = fusion_of(cfg);
  json classes = json::array();
  for (const auto& c : element_fusion_classes(fs)) classes.push_back(element_list(c));
  json r;
  r["details"] = {{"classes", classes},
                  {"representatives", element_list(subsection_representatives(fs))}};
  r["checks"] = json::object();
  return r;
}

json command_verify(const RunConfig& cfg) {
  const auto fs = fusion_of(cfg);
  std::vector<std::string> names;
  if (cfg.verify == "all") {
    names = kVerifyNames;
  } else {
    names = {cfg.verify};
  }
  json r;
  json details = json::object();
  for (const auto& name : names) {
    try {
      r["checks"][name] = run_check(name, fs, details);
    } catch (const DataError& e) {
      r["checks"][name] = false;
      details[name + "_error"] = e.what();
    } catch (const InternalError& e) {
      r["checks"][name] = false;
      details[name + "_error"] = e.what();
    }
  }
  r["details"] = details;
  return r;
}

json command_solve(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  std::int64_t s = 0;
  if (cfg.s) {
    s = *cfg.s;
  } else {
    s = k_minus_l(fusion_of(cfg));
  }
  const auto target = cfg.target.value_or(static_cast<std::int64_t>(p.group_order()));
  const auto cap = cfg.cap.value_or(expected_k0(p));
  json sols = json::array();
  for (const auto& sol : solve_height_distribution(s, cfg.l_min, cfg.l_max, target, cap)) {
    json profile = json::array();
    for (const auto& e : sol.profile)
      profile.push_back({{"height", e.height}, {"odd", e.odd}, {"count", e.count}});
    sols.push_back({{"l", sol.l}, {"k", sol.k}, {"k0", sol.k0}, {"k1", sol.k1()},
                    {"profile", profile}});
  }
  json r;
  r["checks"] = {{"unique", sols.size() == 1}};
  r["details"] = {{"S", s}, {"l_min", cfg.l_min}, {"l_max", cfg.l_max}, {"target", target},
                  {"cap", cap}, {"feasible_set", sols}};
  return r;
}

json command_chartable(const RunConfig& cfg) {
  const auto p = params_of(cfg);
  const auto t = char_table(p);
  json classes = json::array();
  for (const auto& c : t.classes)
    classes.push_back({{"representative", to_string(c.front())}, {"size", c.size()}});
  json chars = json::array();
  for (std::size_t r = 0; r < t.info.size(); ++r) {
    json values = json::array();
    for (const auto& v : t.values[r]) values.push_back(cyc_json(v));
    chars.push_back({{"label", t.info[r].label}, {"degree", t.info[r].degree},
                     {"height", t.info[r].height}, {"defect", t.info[r].defect},
                     {"values", values}});
  }
  json r;
  r["details"] = {{"level", t.level}, {"classes", classes}, {"characters", chars}};
  r["checks"] = json::object();
  return r;
}

json command_weights(const RunConfig& cfg) {
  const auto fs = fusion_of(cfg);
  json classes = json::array();
  for (const auto& c : centric_radical_classes(fs))
    classes.push_back({{"generators", element_list(c.q.generators())}, {"order", c.q.order()},
                       {"class_size", c.class_size}, {"outer", to_string(c.outer)},
                       {"weights", defect_zero_count(c.outer)}});
  const auto w = alperin_weight_count(fs);
  json r;
  r["details"] = {{"centric_radical", classes}, {"weights", w}};
  r["checks"] = {{"awc", w == block_invariants(fs).l}};
  return r;
}

json command_owc(const RunConfig& cfg) {
  const auto fs = fusion_of(cfg);
  const auto& p = fs.params();
  const auto report = owc_check(fs);
  json classes = json::array();
  for (const auto& c : report.classes) {
    json chains = json::array();
    for (const auto& ch : owc_weight_detail(fs, c.q, 2 + p.m).chains)
      chains.push_back({{"chain", ch.label}, {"sign", ch.sign}, {"orbits", ch.orbits},
                        {"contribution", ch.contribution}});
    classes.push_back({{"generators", element_list(c.q.generators())}, {"order", c.q.order()},
                       {"outer", to_string(c.outer)}, {"chains_at_defect_m_plus_2", chains}});
  }
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"defect", row.defect}, {"expected", row.expected}, {"weights", row.weights},
                    {"total", row.total}});
  json r;
  r["details"] = {{"classes", classes}, {"rows", rows}};
  r["checks"] = {{"owc", report.holds()}};
  return r;
}

json command_gluing(const RunConfig& cfg) {
  const auto fs = fusion_of(cfg);
  const auto report = gluing_check(fs);
  json classes = json::array();
  for (const auto& c : report.classes) {
    json chain = json::array();
    for (const auto& q : c.chain) chain.push_back(element_list(q.generators()));
    classes.push_back({{"chain", chain}, {"class_size", c.class_size},
                       {"kind", to_string(c.kind)}, {"group", c.group_label},
                       {"group_order", c.group_order}, {"vanishes", c.vanishes}});
  }
  json r;
  r["details"] = {{"chain_classes", classes}, {"verdict", report.verdict}};
  r["checks"] = {{"gluing", report.unique()}};
  return r;
}

void print_text(const json& report, std::ostream& out) {
  const auto& p = report["params"];
  out << "n=" << p["n"] << " m=" << p["m"];
  if (!p["case"].get<std::string>().empty())
    out << " case=" << p["case"].get<std::string>() << " fix1=" << p["fix1"].get<std::string>()
        << " fix2=" << p["fix2"].get<std::string>();
  out << "\n";
  if (report.contains("invariants")) {
    const auto& i = report["invariants"];
    out << "k=" << i["k"] << " k0=" << i["k0"] << " k1=" << i["k1"] << " l=" << i["l"] << "\n";
  }
  for (const auto& [name, ok] : report["checks"].items())
    out << (ok.get<bool>() ? "PASS " : "FAIL ") << name << "\n";
  if (report.contains("details")) out << report["details"].dump(2) << "\n";
}

bool all_checks_pass(const json& report) {
  for (const auto& [name, ok] : report["checks"].items())
    if (!ok.get<bool>()) return false;
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv(kMaxOrderEnv)) {
    try {
      cfg.max_order = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: " << kMaxOrderEnv << " is not a number\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Invariants of 2-blocks with defect group D_{2^n} x C_{2^m}", "dblock"};
  app.require_subcommand(1);
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "dihedral exponent, D_{2^n}")->required();
    sub->add_option("--m", cfg.m, "cyclic exponent, C_{2^m}");
    sub->add_option("--case", cfg.case_label, "fusion case")
        ->check(CLI::IsMember({"aa", "ab", "ba", "bb"}));
    sub->add_option("--fix1", cfg.fix1, "fixed points of alpha on Q1")
        ->check(CLI::IsMember({"z", "uz"}));
    sub->add_option("--fix2", cfg.fix2, "fixed points of alpha on Q2")
        ->check(CLI::IsMember({"z", "uz"}));
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-order", cfg.max_order, "largest |D| enumerated by brute force");
  };

  std::map<std::string, std::function<json(const RunConfig&)>> commands = {
      {"invariants", command_invariants}, {"classes", command_classes},
      {"verify", command_verify},         {"solve", command_solve},
      {"chartable", command_chartable},   {"weights", command_weights},
      {"owc", command_owc},               {"gluing", command_gluing}};
  std::map<std::string, CLI::App*> subs;
  subs["invariants"] = app.add_subcommand("invariants", "k, k0, k1, l and conjecture flags");
  subs["classes"] = app.add_subcommand("classes", "element fusion classes and representatives");
  subs["verify"] = app.add_subcommand("verify", "run lemma verifications");
  subs["solve"] = app.add_subcommand("solve", "raw height-distribution solver");
  subs["chartable"] = app.add_subcommand("chartable", "character table of D");
  subs["weights"] = app.add_subcommand("weights", "Alperin weight count");
  subs["owc"] = app.add_subcommand("owc", "ordinary weight conjecture table");
  subs["gluing"] = app.add_subcommand("gluing", "gluing problem chain classes");
  for (auto& [name, sub] : subs) add_common(sub);
  std::vector<std::string> checks = kVerifyNames;
  checks.push_back("all");
  subs["verify"]->add_option("check", cfg.verify, "which check")->check(CLI::IsMember(checks));
  auto* solve = subs["solve"];
  solve->add_option("--S", cfg.s, "k(B) - l(B); computed from the case when omitted");
  solve->add_option("--l-min", cfg.l_min, "smallest l");
  solve->add_option("--l-max", cfg.l_max, "largest l");
  solve->add_option("--target", cfg.target, "sum of squares, default 2^{n+m}");
  solve->add_option("--cap", cfg.cap, "bound on k0, default 2^{m+2}");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string command;
  for (auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    auto report = commands.at(command)(cfg);
    report["command"] = command;
    report["params"] = params_json(cfg);
    if (cfg.format == "json") {
      out << report.dump(2) << "\n";
    } else {
      print_text(report, out);
    }
    return all_checks_pass(report) ? kExitOk : kExitFailed;
  } catch (const ParamError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace dblock
