#include "gstab/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gstab/error.hpp"

namespace gstab {

const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Ok: return "ok";
    case ReportStatus::NotStable: return "not-stable";
    case ReportStatus::NotSoluble: return "not-soluble";
    case ReportStatus::NotIndecomposable: return "not-indecomposable";
    case ReportStatus::UnstableSeries: return "unstable-series";
    case ReportStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

const char* to_string(Existence e) {
  switch (e) {
    case Existence::Exists: return "exists";
    case Existence::NotExists: return "not-exists";
    case Existence::Unknown: return "unknown";
  }
  return "?";
}

namespace {

ReportStatus status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSoluble: return ReportStatus::NotSoluble;
    case ErrorCode::NotIndecomposable: return ReportStatus::NotIndecomposable;
    case ErrorCode::BudgetExceeded: return ReportStatus::BudgetExceeded;
    case ErrorCode::IllDefinedAction: return ReportStatus::UnstableSeries;
    default: throw;
  }
}

std::pair<std::shared_ptr<const AutChain>, bool> build_chain(const Representation& theta_core, const EngineOptions& options) {
  const EndAlgebra E = endomorphism_algebra(theta_core);
  if (options.series == Series::Derived) return {std::make_shared<AutChain>(derived_series(E, options.h_budget)), false};
  try {
    return {std::make_shared<AutChain>(radical_series(E, options.h_budget)), false};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotIndecomposable) throw;
  }
  return {std::make_shared<AutChain>(derived_series(E, options.h_budget)), true};
}

// Depth-first exploration of the branching tree.
class Explorer {
 public:
  Explorer(const EngineSetup& setup, const EngineOptions& options, bool first_leaf_only)
      : setup_(setup), options_(options), first_leaf_only_(first_leaf_only) {
    auto ctx = std::make_shared<MorphContext>(*make_morph_context(setup.G, setup.theta, setup.chain));
    ctx->cochain_budget = options.cochain_budget;
    ctx->h_budget = options.h_budget;
    context_ = ctx;
  }

  std::vector<BranchNode> nodes;
  std::vector<int> leaves;

  void run() {
    BranchNode root;
    root.morph = WeakMorph{context_, 0, setup_.witness};
    nodes.push_back(std::move(root));
    explore(0);
  }

 private:
  bool done() const { return first_leaf_only_ && !leaves.empty(); }

  int add_child(int parent, int choice, WeakMorph morph) {
    if (static_cast<std::int64_t>(nodes.size()) >= options_.node_limit)
      throw Error(ErrorCode::BudgetExceeded, "branching tree exceeds " + std::to_string(options_.node_limit) + " nodes");
    BranchNode child;
    child.level = morph.level;
    child.parent = parent;
    child.choice = choice;
    child.morph = std::move(morph);
    nodes.push_back(std::move(child));
    const int idx = static_cast<int>(nodes.size()) - 1;
    nodes[parent].children.push_back(idx);
    return idx;
  }

  void explore(int i) {
    if (done()) return;
    const AutChain& chain = *setup_.chain;
    const int m = nodes[i].level;
    if (m == chain.length()) {
      if (!nodes[i].morph.is_homomorphism()) throw std::logic_error("branch reached the bottom of the chain without a homomorphism");
      nodes[i].leaf = true;
      leaves.push_back(i);
      return;
    }
    if (chain.quotient(m + 1).empty()) {
      WeakMorph next = nodes[i].morph;
      next.level = m + 1;
      explore(add_child(i, 0, std::move(next)));
      return;
    }
    ObstructionClass ob = obstruction(nodes[i].morph);
    const RelativeComplex C(setup_.G, setup_.theta.subgroup, ob.module, options_.cochain_budget);
    const CohomologyResult h1 = cohomology(1, C);
    nodes[i].h2_order = cohomology(2, C).order();
    nodes[i].h1_order = h1.order();
    nodes[i].action = ob.module;
    const bool zero = ob.is_zero;
    const Cochain certificate = zero ? *ob.certificate : Cochain{};
    nodes[i].obstruction = std::move(ob);
    if (!zero) {
      nodes[i].terminated = true;
      return;
    }
    const WeakMorph lifted = normalize(lift(nodes[i].morph, certificate));
    const auto classes = h1.all_classes(options_.node_limit);
    std::vector<int> kids;
    for (size_t c = 0; c < classes.size(); ++c)
      kids.push_back(add_child(i, static_cast<int>(c), c == 0 ? lifted : z1_act(classes[c], lifted)));
    for (int k : kids) explore(k);
  }

  const EngineSetup& setup_;
  const EngineOptions& options_;
  bool first_leaf_only_;
  std::shared_ptr<const MorphContext> context_;
};

std::vector<int> trace_of(const std::vector<BranchNode>& nodes, int leaf) {
  std::vector<int> path;
  for (int i = leaf; nodes[i].parent >= 0; i = nodes[i].parent) path.push_back(nodes[i].choice);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ConjugationStability stable_by_conjugation(const GroupTable& G, const Representation& theta, const EngineOptions& options) {
  ConjugationStability out;
  const Subgroup& L = theta.subgroup;
  out.core = core_subgroup(G, L);
  const CosetSystem cs = coset_system(G, L);
  std::vector<FqMatrix> at_rep;
  for (Element t : cs.transversal) {
    const Representation twisted = twist_restricted(G, theta, t);
    auto T = find_isomorphism(restrict_to(theta, twisted.subgroup), twisted);
    if (!T) {
      out.failing = t;
      return out;
    }
    at_rep.push_back(std::move(*T));
  }
  EngineSetup setup;
  setup.G = G;
  setup.P = out.core;
  setup.theta = theta;
  for (Element x = 0; x < G.order(); ++x) setup.witness.push_back(at_rep[cs.coset_of[x]] * theta(cs.subgroup_part(G, x)));
  auto [chain, fallback] = build_chain(restrict_to(theta, out.core), options);
  setup.chain = std::move(chain);
  setup.series_fallback = fallback;
  out.setup = std::move(setup);
  return out;
}

std::vector<FqMatrix> module_automorphisms(const AutChain& chain, const Representation& theta, std::int64_t budget) {
  if (chain.order(0) > budget) throw Error(ErrorCode::BudgetExceeded, "automorphism group has " + chain.order(0).str() + " elements");
  std::vector<FqMatrix> out;
  for (FqMatrix& h : chain.elements(0)) {
    bool commutes = true;
    for (const auto& t : theta.images)
      if (t * h != h * t) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(std::move(h));
  }
  return out;
}

std::vector<FqMatrix> canonical_conjugate(const GroupTable& G, const std::vector<FqMatrix>& table, const std::vector<FqMatrix>& group) {
  const auto gens = generating_set(G, whole_group(G));
  std::vector<FqMatrix> best_key;
  const FqMatrix* best = nullptr;
  for (const FqMatrix& h : group) {
    const FqMatrix h_inv = inv(h);
    std::vector<FqMatrix> key;
    for (Element g : gens) key.push_back(h * table[g] * h_inv);
    if (!best || key < best_key) {
      best_key = std::move(key);
      best = &h;
    }
  }
  if (!best) return table;
  const FqMatrix h_inv = inv(*best);
  std::vector<FqMatrix> out;
  for (const auto& v : table) out.push_back(*best * v * h_inv);
  return out;
}

ExtensionReport enumerate_extensions(const GroupTable& G, const Representation& theta, const EngineOptions& options) {
  ExtensionReport report;
  report.series = options.series;
  std::optional<EngineSetup> setup;
  try {
    ConjugationStability cbc = stable_by_conjugation(G, theta, options);
    report.core = cbc.core;
    if (!cbc.setup) {
      report.status = ReportStatus::NotStable;
      report.failing_twist = cbc.failing;
      report.reason = "twist by element " + std::to_string(cbc.failing) + " is not isomorphic to theta";
      return report;
    }
    setup = std::move(cbc.setup);
  } catch (const Error& e) {
    report.status = status_of(e.code());
    report.reason = e.what();
    return report;
  }
  const AutChain& chain = *setup->chain;
  report.series = chain.series();
  report.series_fallback = setup->series_fallback;
  report.aut_order = chain.order(0);
  for (int m = 1; m <= chain.length(); ++m) report.quotients.push_back(chain.quotient(m));
  for (Element x = 0; x < G.order(); ++x)
    if (!chain.stable_under(setup->witness[x])) {
      report.status = ReportStatus::UnstableSeries;
      report.reason = "conjugation by the witness value at " + std::to_string(x) + " does not preserve the series";
      return report;
    }

  Explorer explorer(*setup, options, false);
  try {
    explorer.run();
  } catch (const Error& e) {
    report.nodes = std::move(explorer.nodes);
    report.status = status_of(e.code());
    report.reason = e.what();
    return report;
  }
  report.nodes = std::move(explorer.nodes);
  report.leaves = std::move(explorer.leaves);

  for (int leaf : report.leaves) {
    const auto& f = report.nodes[leaf].morph.f;
    for (Element l : theta.subgroup.elements())
      if (f[l] != theta(l)) throw std::logic_error("extension does not restrict to theta");
  }
  std::vector<FqMatrix> autL;
  try {
    autL = module_automorphisms(chain, theta, options.h_budget);
  } catch (const Error& e) {
    report.status = status_of(e.code());
    report.reason = e.what();
    return report;
  }
  std::map<std::vector<FqMatrix>, std::vector<int>> classes;  // canonical table -> leaf positions
  for (size_t i = 0; i < report.leaves.size(); ++i)
    classes[canonical_conjugate(G, report.nodes[report.leaves[i]].morph.f, autL)].push_back(static_cast<int>(i));
  report.leaf_class.assign(report.leaves.size(), -1);
  for (auto& [table, members] : classes) {
    const int c = static_cast<int>(report.extensions.size());
    report.extensions.push_back(table);
    report.traces.push_back(trace_of(report.nodes, report.leaves[members.front()]));
    for (int i : members) report.leaf_class[i] = c;
  }
  const size_t n = report.leaves.size();
  report.equivalence.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) report.equivalence[i][j] = report.leaf_class[i] == report.leaf_class[j];
  return report;
}

ExistenceResult existence_test(const GroupTable& G, const Representation& theta, const EngineOptions& options) {
  ExistenceResult out;
  std::optional<EngineSetup> setup;
  try {
    ConjugationStability cbc = stable_by_conjugation(G, theta, options);
    if (!cbc.setup) {
      out.verdict = Existence::NotExists;
      out.fast_negative = true;
      out.reason = "theta is not stable under conjugation";
      return out;
    }
    setup = std::move(cbc.setup);
  } catch (const Error& e) {
    out.reason = e.what();
    return out;
  }
  Explorer explorer(*setup, options, true);
  try {
    explorer.run();
  } catch (const Error& e) {
    out.reason = e.what();
    return out;
  }
  const auto& nodes = explorer.nodes;
  if (explorer.leaves.empty()) {
    out.verdict = Existence::NotExists;
    for (const auto& node : nodes)
      if (node.obstruction) {
        out.fast_negative = node.terminated && node.parent == (node.level == 0 ? -1 : node.parent) &&
                            std::all_of(nodes.begin(), nodes.end(), [&](const BranchNode& other) { return !other.obstruction || &other == &node; });
        break;
      }
    out.reason = "every branch terminates with a nonzero obstruction";
    return out;
  }
  out.verdict = Existence::Exists;
  out.fast_positive = true;
  for (int i = explorer.leaves.front(); i >= 0; i = nodes[i].parent)
    if (nodes[i].h2_order != 1) out.fast_positive = false;
  out.reason = out.fast_positive ? "all second cohomology groups vanish along a branch" : "a branch reaches the bottom of the chain";
  return out;
}

UniquenessReport uniqueness_report(const ExtensionReport& report) {
  UniquenessReport u;
  u.classes = report.extensions.size();
  u.unique = report.ok() && u.classes == 1;
  for (const auto& node : report.nodes)
    if (!node.terminated && node.h1_order > 1) {
      const int m = node.level + 1;
      if (std::find(u.branching_levels.begin(), u.branching_levels.end(), m) == u.branching_levels.end())
        u.branching_levels.push_back(m);
    }
  std::sort(u.branching_levels.begin(), u.branching_levels.end());
  if (report.nodes.empty()) return u;
  const AutChain& chain = *report.nodes[0].morph.context->chain;
  for (int m = 1; m < chain.length(); ++m) {
    std::vector<FqMatrix> gens;
    for (int q : {m, m + 1}) {
      const int k = static_cast<int>(chain.quotient(q).size());
      for (int j = 0; j < k; ++j) {
        IntVec e(k, 0);
        e[j] = 1;
        gens.push_back(chain.section(q, e));
      }
    }
    bool abelian = true;
    for (size_t a = 0; a < gens.size() && abelian; ++a)
      for (size_t b = a + 1; b < gens.size(); ++b)
        if (!chain.contains(m + 1, gens[a] * gens[b] * inv(gens[a]) * inv(gens[b]))) {
          abelian = false;
          break;
        }
    if (!abelian) {
      u.two_step_abelian = false;
      u.nonabelian_two_step.push_back(m);
    }
  }
  return u;
}

}  // namespace gstab
