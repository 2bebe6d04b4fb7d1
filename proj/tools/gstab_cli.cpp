// Command line front end: gstab <command> <instance> [flags]
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <sstream>

#include "gstab/engine.hpp"
#include "gstab/error.hpp"
#include "gstab/instance.hpp"
#include "gstab/oracle.hpp"

using namespace gstab;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBudget = 3 };

std::string big(const BigInt& v) { return v.str(); }

Json int_list(const IntVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

// Nonzero values of a cochain as "(g,h) -> [a, b]" entries.
Json cochain_json(const Cochain& c) {
  Json out = Json::array();
  for (std::int64_t t = 0; t < c.tuple_count(); ++t) {
    const IntVec v = c.at(t);
    bool zero = true;
    for (auto x : v) zero &= x == 0;
    if (zero) continue;
    std::vector<Element> args(c.degree);
    std::int64_t rest = t;
    for (int i = c.degree - 1; i >= 0; --i) {
      args[i] = static_cast<Element>(rest % c.group_order);
      rest /= c.group_order;
    }
    std::ostringstream key;
    key << "(";
    for (int i = 0; i < c.degree; ++i) key << (i ? "," : "") << args[i];
    key << ")";
    out.push_back(Json{{"at", key.str()}, {"value", int_list(v)}});
  }
  return out;
}

Json table_json(const GroupTable& G, const std::vector<FqMatrix>& table) {
  Json out = Json::object();
  for (Element g : generating_set(G, whole_group(G))) out[std::to_string(g)] = matrix_to_text(table[g]);
  return out;
}

// Text rendering of the same document: "key: value", nested blocks indented.
void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
      if (e.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (!v.is_structured() || flat(v)) {
        os << pad << it.key() << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_structured() || flat(v)) {
        os << pad << "- " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

const Representation& require_theta(const Instance& inst) {
  if (!inst.theta) throw Error(ErrorCode::ParseError, "this command needs 'dim' (and optionally 'rep') lines");
  return *inst.theta;
}

const ActionModule& require_module(const Instance& inst) {
  if (!inst.module) throw Error(ErrorCode::ParseError, "this command needs a 'module' line");
  return *inst.module;
}

EngineOptions options_of(const Instance& inst) {
  EngineOptions o;
  o.series = inst.series;
  o.h_budget = inst.budget_H;
  o.cochain_budget = inst.budget_cochains;
  return o;
}

int cmd_validate(const Instance& inst, Json& out) {
  out["group_order"] = inst.G.order();
  out["subgroup_order"] = inst.L.order();
  out["normal"] = is_normal(inst.G, inst.L);
  out["instance"] = format_instance(inst);
  return kOk;
}

int cmd_stability(const Instance& inst, Json& out) {
  const ConjugationStability s = stable_by_conjugation(inst.G, require_theta(inst), options_of(inst));
  Json core = Json::array();
  for (Element p : s.core.elements()) core.push_back(p);
  out["core"] = core;
  out["stable"] = s.setup.has_value();
  if (!s.setup) {
    out["failing_twist"] = s.failing;
    return kNegative;
  }
  Json w = Json::object();
  for (Element g = 0; g < inst.G.order(); ++g) w[std::to_string(g)] = matrix_to_text(s.setup->witness[g]);
  out["witness"] = w;
  return kOk;
}

int cmd_aut_chain(const Instance& inst, Json& out) {
  const Representation& theta = require_theta(inst);
  const bool indecomposable = is_indecomposable(theta, inst.budget_H);
  Series series = inst.series;
  if (series == Series::Radical && !indecomposable) series = Series::Derived;
  const AutChain chain = aut_chain(theta, series, inst.budget_H);
  out["series"] = to_string(chain.series());
  out["series_fallback"] = series != inst.series;
  out["indecomposable"] = indecomposable;
  out["end_dim"] = chain.algebra().dim();
  out["aut_order"] = big(chain.order(0));
  if (chain.series() == Series::Radical) {
    out["residue_degree"] = chain.residue_degree();
    out["dim_J"] = chain.radical().dim_J;
    Json dims = Json::array();
    for (const auto& p : chain.radical().powers) dims.push_back(p.size());
    out["dim_J_powers"] = dims;
  }
  Json q = Json::array();
  for (int m = 1; m <= chain.length(); ++m) q.push_back(int_list(chain.quotient(m)));
  out["quotients"] = q;
  return kOk;
}

int cmd_cohomology(const Instance& inst, int n, Json& out) {
  const RelativeComplex C(inst.G, inst.L, require_module(inst), inst.budget_cochains);
  const CohomologyResult H = cohomology(n, C);
  out["degree"] = n;
  out["invariant_factors"] = int_list(H.invariant_factors());
  out["order"] = big(H.order());
  out["cocycles"] = big(H.cocycle_count());
  out["coboundaries"] = big(H.coboundary_count());
  Json reps = Json::array();
  for (const auto& r : H.representatives()) reps.push_back(cochain_json(r));
  out["representatives"] = reps;
  return kOk;
}

int cmd_extend(const Instance& inst, Json& out) {
  const Representation& theta = require_theta(inst);
  const ExtensionReport r = enumerate_extensions(inst.G, theta, options_of(inst));
  out["status"] = to_string(r.status);
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (r.failing_twist >= 0) out["failing_twist"] = r.failing_twist;
  out["series"] = to_string(r.series);
  out["series_fallback"] = r.series_fallback;
  Json core = Json::array();
  for (Element p : r.core.elements()) core.push_back(p);
  out["core"] = core;
  out["aut_order"] = big(r.aut_order);
  Json quotients = Json::array();
  for (const auto& q : r.quotients) quotients.push_back(int_list(q));
  out["quotients"] = quotients;
  Json nodes = Json::array();
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    const BranchNode& node = r.nodes[i];
    Json j{{"id", i}, {"level", node.level}, {"parent", node.parent}, {"choice", node.choice}};
    if (node.obstruction) {
      j["h1_order"] = big(node.h1_order);
      j["h2_order"] = big(node.h2_order);
      j["obstruction_zero"] = node.obstruction->is_zero;
      if (!node.obstruction->is_zero) j["obstruction"] = cochain_json(node.obstruction->cocycle);
    }
    j["terminated"] = node.terminated;
    j["leaf"] = node.leaf;
    nodes.push_back(j);
  }
  out["nodes"] = nodes;
  out["extension_count"] = r.extensions.size();
  Json ext = Json::array();
  for (size_t c = 0; c < r.extensions.size(); ++c)
    ext.push_back(Json{{"trace", r.traces[c]}, {"images", table_json(inst.G, r.extensions[c])}});
  out["extensions"] = ext;
  if (r.ok() && !r.extensions.empty()) {
    const UniquenessReport u = uniqueness_report(r);
    out["unique"] = u.unique;
    out["branching_levels"] = u.branching_levels;
    out["two_step_abelian"] = u.two_step_abelian;
  }
  if (r.status == ReportStatus::BudgetExceeded) return kBudget;
  if (!r.ok() || r.extensions.empty()) return kNegative;
  return kOk;
}

int cmd_verify(const Instance& inst, std::uint64_t seed, Json& out) {
  bool agree = true;
  if (inst.theta) {
    const Representation& theta = *inst.theta;
    const ExtensionReport r = enumerate_extensions(inst.G, theta, options_of(inst));
    if (r.status == ReportStatus::BudgetExceeded) throw Error(ErrorCode::BudgetExceeded, r.reason);
    OracleBudget budget;
    const auto tables = brute_extensions(inst.G, theta, budget);
    const auto autL = brute_automorphisms(theta, budget);
    const auto classes = conjugacy_dedup(tables, autL);
    // Every engine class must contain exactly one oracle class.
    bool match = r.extensions.size() == classes.size();
    std::vector<int> hit(classes.size(), 0);
    for (const auto& e : r.extensions) {
      bool found = false;
      for (size_t c = 0; c < classes.size() && !found; ++c)
        for (const FqMatrix& h : autL) {
          const FqMatrix hi = inv(h);
          bool same = true;
          for (Element g = 0; g < inst.G.order() && same; ++g) same = h * tables[classes[c][0]][g] * hi == e[g];
          if (same) {
            found = true;
            ++hit[c];
            break;
          }
        }
      match &= found;
    }
    for (int h : hit) match &= h == 1;
    // Spot-check that the raw oracle list is closed under Aut_L(V).
    std::mt19937_64 rng(seed);
    bool closed = true;
    for (int trial = 0; trial < 16 && !tables.empty() && !autL.empty(); ++trial) {
      const auto& t = tables[rng() % tables.size()];
      const FqMatrix& h = autL[rng() % autL.size()];
      const FqMatrix hi = inv(h);
      std::vector<FqMatrix> conj;
      for (const auto& m : t) conj.push_back(h * m * hi);
      closed &= std::find(tables.begin(), tables.end(), conj) != tables.end();
    }
    out["extensions"] = Json{{"engine_classes", r.extensions.size()},
                             {"oracle_tables", tables.size()},
                             {"oracle_classes", classes.size()},
                             {"agree", match},
                             {"oracle_closed_under_conjugation", closed}};
    agree &= match && closed;
  }
  if (inst.module) {
    for (int n : {1, 2}) {
      const CohomologyResult H = cohomology(n, inst.G, inst.L, *inst.module, inst.budget_cochains);
      const BruteCohomology B = brute_cohomology(n, inst.G, inst.L, *inst.module);
      const bool same = H.order() == B.order();
      out["H" + std::to_string(n)] = Json{{"backend", big(H.order())}, {"oracle", B.order()}, {"agree", same}};
      agree &= same;
    }
    const LesReport les = les_check(inst.G, inst.L, *inst.module, inst.budget_cochains);
    out["exact_sequence"] = les.passed() ? "pass" : les.failures();
    agree &= les.passed();
  }
  out["agree"] = agree;
  return agree ? kOk : kNegative;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return kBudget;
    case ErrorCode::NotSoluble:
    case ErrorCode::NotIndecomposable:
    case ErrorCode::NotNormal:
      return kNegative;
    default: return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extensions of subgroup representations via relative cohomology"};
  app.require_subcommand(1);
  std::string path;
  bool json = false;
  std::string series;
  std::int64_t budget_H = 0, budget_cochains = 0;
  std::uint64_t seed = 1;
  int degree = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", path, "instance file")->required();
    sub->add_flag("--json", json, "emit JSON");
    sub->add_option("--series", series, "radical or derived")->check(CLI::IsMember({"radical", "derived"}));
    sub->add_option("--budget-H", budget_H, "limit on enumerated automorphisms");
    sub->add_option("--budget-cochains", budget_cochains, "limit on cochain coordinates");
    sub->add_option("--seed", seed, "seed for randomized checks");
  };
  std::vector<CLI::App*> subs;
  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check an instance and print it in normal form"},
      {"stability", "decide G-stability of theta and print a witness"},
      {"aut-chain", "automorphism group of theta and its subnormal chain"},
      {"cohomology", "relative cohomology H^n(G, L; A)"},
      {"extend", "enumerate the G-module structures extending theta"},
      {"verify", "compare engine results with the brute-force oracle"},
  };
  for (const auto& [name, about] : commands) {
    subs.push_back(app.add_subcommand(name, about));
    add_common(subs.back());
  }
  subs[3]->add_option("--n", degree, "cohomological degree")->check(CLI::IsMember({1, 2}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Json out;
  out["command"] = command;
  int rc = kOk;
  try {
    Instance inst = parse_instance_file(path);
    if (!series.empty()) inst.series = series == "radical" ? Series::Radical : Series::Derived;
    if (budget_H > 0) inst.budget_H = budget_H;
    if (budget_cochains > 0) inst.budget_cochains = budget_cochains;
    if (command == "validate") rc = cmd_validate(inst, out);
    else if (command == "stability") rc = cmd_stability(inst, out);
    else if (command == "aut-chain") rc = cmd_aut_chain(inst, out);
    else if (command == "cohomology") rc = cmd_cohomology(inst, degree, out);
    else if (command == "extend") rc = cmd_extend(inst, out);
    else rc = cmd_verify(inst, seed, out);
  } catch (const Error& e) {
    rc = exit_for(e.code());
    out["error"] = to_string(e.code());
    out["message"] = e.what();
  }
  out["exit"] = rc;

  if (json) {
    std::cout << out.dump(2) << "\n";
  } else if (command == "validate" && rc == kOk) {
    std::cout << out["instance"].get<std::string>();
  } else {
    render(std::cout, out, 0);
  }
  return rc;
}
