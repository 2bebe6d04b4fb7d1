#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gstab/chain.hpp"
#include "gstab/cohomology.hpp"
#include "gstab/morph.hpp"
#include "gstab/rep.hpp"

namespace gstab {

struct EngineOptions {
  Series series = Series::Radical;
  std::int64_t h_budget = kDefaultEnumerationBudget;
  std::int64_t cochain_budget = kDefaultCochainBudget;
  std::int64_t node_limit = 100000;
};

/// Input to the branching process: theta on L, the normal core P of L, the
/// chain of Aut_P(V), and a normalized witness f with f|_L = theta.
struct EngineSetup {
  GroupTable G;
  Subgroup P;
  Representation theta;
  std::shared_ptr<const AutChain> chain;
  std::vector<FqMatrix> witness;
  bool series_fallback = false;
};

struct ConjugationStability {
  Subgroup core;
  std::optional<EngineSetup> setup;
  Element failing = -1;  // some g where theta and theta^g differ on L cap L^g
};

/// Works for any subgroup; for normal L the core is L itself.
ConjugationStability stable_by_conjugation(const GroupTable& G, const Representation& theta,
                                           const EngineOptions& options = {});

enum class ReportStatus { Ok, NotStable, NotSoluble, NotIndecomposable, UnstableSeries, BudgetExceeded };
const char* to_string(ReportStatus s);

struct BranchNode {
  int level = 0;
  int parent = -1;
  int choice = 0;  // index of the H^1 class chosen at the parent
  WeakMorph morph;
  std::optional<ActionModule> action;
  std::optional<ObstructionClass> obstruction;
  BigInt h1_order = 1;
  BigInt h2_order = 1;
  std::vector<int> children;
  bool terminated = false;
  bool leaf = false;
};

struct ExtensionReport {
  ReportStatus status = ReportStatus::Ok;
  std::string reason;
  Element failing_twist = -1;
  Series series = Series::Radical;
  bool series_fallback = false;  // radical requested but theta decomposable
  Subgroup core;
  BigInt aut_order = 0;
  std::vector<IntVec> quotients;  // Q_1 .. Q_k
  std::vector<BranchNode> nodes;  // nodes[0] is the root
  /// Leaves in discovery order with their class index into extensions.
  std::vector<int> leaves;
  std::vector<int> leaf_class;
  /// One canonical homomorphism table per class, sorted canonically.
  std::vector<std::vector<FqMatrix>> extensions;
  /// For each class, the root-to-leaf H^1 choices of its first leaf.
  std::vector<std::vector<int>> traces;
  /// equivalence[i][j]: leaves i and j are conjugate under Aut_L(V).
  std::vector<std::vector<bool>> equivalence;
  bool ok() const { return status == ReportStatus::Ok; }
};

ExtensionReport enumerate_extensions(const GroupTable& G, const Representation& theta, const EngineOptions& options = {});

enum class Existence { Exists, NotExists, Unknown };
const char* to_string(Existence e);

struct ExistenceResult {
  Existence verdict = Existence::Unknown;
  bool fast_positive = false;  // every H^2 along the found branch vanished
  bool fast_negative = false;  // decided at the first nontrivial level
  std::string reason;
};

ExistenceResult existence_test(const GroupTable& G, const Representation& theta, const EngineOptions& options = {});

struct UniquenessReport {
  bool unique = false;
  std::size_t classes = 0;
  std::vector<int> branching_levels;  // levels where some node had nontrivial H^1
  bool two_step_abelian = true;       // every H_{m-1}/H_{m+1} abelian
  std::vector<int> nonabelian_two_step;
};

UniquenessReport uniqueness_report(const ExtensionReport& report);

/// Elements of Aut_L(V) (all of H in the normal case), BudgetExceeded above the limit.
std::vector<FqMatrix> module_automorphisms(const AutChain& chain, const Representation& theta, std::int64_t budget);
/// Lexicographically least conjugate of a homomorphism table under the given group.
std::vector<FqMatrix> canonical_conjugate(const GroupTable& G, const std::vector<FqMatrix>& table,
                                          const std::vector<FqMatrix>& group);

}  // namespace gstab
