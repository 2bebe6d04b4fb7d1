#include <doctest.h>

#include "gstab/engine.hpp"
#include "gstab/error.hpp"
#include "gstab/oracle.hpp"
#include "suite.hpp"

using namespace gstab;
using suite::mat;

namespace {

Representation rep(const GroupTable& G, std::vector<Element> L, int p, int dim,
                   std::vector<std::pair<Element, std::vector<std::vector<Fq>>>> gens) {
  const Field F(make_field_spec(p));
  const Subgroup S = make_subgroup(G, L);
  if (gens.empty()) return trivial_representation(S, F, dim);
  std::vector<std::pair<Element, FqMatrix>> g;
  for (auto& [x, rows] : gens) g.emplace_back(x, mat(F, rows));
  return representation_from_generators(G, S, F, dim, g);
}

std::size_t oracle_classes(const GroupTable& G, const Representation& theta) {
  return conjugacy_dedup(brute_extensions(G, theta), brute_automorphisms(theta)).size();
}

}  // namespace

TEST_CASE("C4 over C2, theta(g^2) = [2] over GF(3): no extension") {
  const GroupTable C4 = named_group("cyclic:4");
  const Representation theta = rep(C4, {0, 2}, 3, 1, {{2, {{2}}}});
  const ExtensionReport r = enumerate_extensions(C4, theta);
  CHECK(r.ok());
  CHECK(r.extensions.empty());
  REQUIRE(r.nodes.size() == 1);
  CHECK(r.nodes[0].terminated);
  CHECK(oracle_classes(C4, theta) == 0);
  const ExistenceResult e = existence_test(C4, theta);
  CHECK(e.verdict == Existence::NotExists);
  CHECK(e.fast_negative);
}

TEST_CASE("C2 x C2 over <a>, theta(a) = [2] over GF(3): two classes") {
  const GroupTable K = named_group("abelian:2,2");
  const Representation theta = rep(K, {0, 1}, 3, 1, {{1, {{2}}}});
  const ExtensionReport r = enumerate_extensions(K, theta);
  REQUIRE(r.ok());
  CHECK(r.extensions.size() == 2);
  CHECK(r.nodes[0].h1_order == 2);
  CHECK(oracle_classes(K, theta) == 2);
  const UniquenessReport u = uniqueness_report(r);
  CHECK_FALSE(u.unique);
  CHECK(u.branching_levels == std::vector<int>{1});
  CHECK(r.equivalence.size() == 2);
  CHECK_FALSE(r.equivalence[0][1]);
}

TEST_CASE("S3 over A3, diag(2,4) over GF(7): one class") {
  const GroupTable S3 = named_group("sym:3");
  const Representation theta = rep(S3, {0, 3, 4}, 7, 2, {{3, {{2, 0}, {0, 4}}}});
  const ExtensionReport r = enumerate_extensions(S3, theta);
  REQUIRE(r.ok());
  CHECK(r.series_fallback);  // decomposable, so the derived series is used
  CHECK(r.extensions.size() == 1);
  CHECK(brute_extensions(S3, theta).size() == 6);
  const UniquenessReport u = uniqueness_report(r);
  CHECK(u.unique);
  CHECK(u.branching_levels.empty());
}

TEST_CASE("L = G gives theta itself") {
  const GroupTable D4 = named_group("dihedral:4");
  const Field F3(make_field_spec(3));
  const Representation theta = rep(D4, {0, 1, 2, 3, 4, 5, 6, 7}, 3, 1, {{1, {{2}}}, {4, {{1}}}});
  const ExtensionReport r = enumerate_extensions(D4, theta);
  REQUIRE(r.ok());
  REQUIRE(r.extensions.size() == 1);
  CHECK(r.extensions[0] == theta.images);
  CHECK(uniqueness_report(r).unique);
}

TEST_CASE("existence shortcuts") {
  // G/L = C3 and q - 1 = 2 are coprime: H^2 vanishes, so an extension exists
  const GroupTable C6 = named_group("cyclic:6");
  const Representation theta = rep(C6, {0, 3}, 3, 1, {{3, {{2}}}});
  const ExistenceResult e = existence_test(C6, theta);
  CHECK(e.verdict == Existence::Exists);
  CHECK(e.fast_positive);
  const GroupTable Q8 = named_group("dicyclic:2");
  const ExistenceResult t = existence_test(Q8, rep(Q8, {0, 2}, 7, 2, {}));
  CHECK(t.verdict != Existence::NotExists);
}

TEST_CASE("non-normal subgroup: S3 over a transposition") {
  const GroupTable S3 = named_group("sym:3");
  const Representation theta = rep(S3, {0, 1}, 3, 1, {{1, {{2}}}});
  const ExtensionReport r = enumerate_extensions(S3, theta);
  REQUIRE(r.ok());
  CHECK(r.core.order() == 1);
  CHECK(r.extensions.size() == oracle_classes(S3, theta));
  CHECK(r.extensions.size() == 1);  // the sign representation
}

TEST_CASE("statuses are reported, not thrown") {
  const GroupTable S3 = named_group("sym:3");
  const ExtensionReport unstable = enumerate_extensions(S3, rep(S3, {0, 3, 4}, 7, 1, {{3, {{2}}}}));
  CHECK(unstable.status == ReportStatus::NotStable);
  CHECK(unstable.failing_twist >= 0);
  const GroupTable C4 = named_group("cyclic:4");
  const ExtensionReport big = enumerate_extensions(C4, rep(C4, {0, 2}, 7, 2, {}));
  CHECK(big.status == ReportStatus::NotSoluble);
  EngineOptions tiny;
  tiny.h_budget = 4;
  CHECK(enumerate_extensions(C4, rep(C4, {0, 2}, 7, 1, {}), tiny).status == ReportStatus::BudgetExceeded);
  EngineOptions few;
  few.node_limit = 2;
  const GroupTable K = named_group("abelian:2,2");
  CHECK(enumerate_extensions(K, rep(K, {0, 1}, 3, 1, {{1, {{2}}}}), few).status == ReportStatus::BudgetExceeded);
}

TEST_CASE("two-step quotients of the GL_2(3) derived series are flagged") {
  const GroupTable C4 = named_group("cyclic:4");
  EngineOptions o;
  o.series = Series::Derived;
  const ExtensionReport r = enumerate_extensions(C4, rep(C4, {0, 2}, 3, 2, {}), o);
  REQUIRE(r.ok());
  const UniquenessReport u = uniqueness_report(r);
  CHECK_FALSE(u.two_step_abelian);
  CHECK_FALSE(u.nonabelian_two_step.empty());
  CHECK(r.extensions.size() == oracle_classes(C4, rep(C4, {0, 2}, 3, 2, {})));
}

TEST_CASE("property: soundness, branch counts and determinism on the suite") {
  for (const auto& inst : suite::extension_suite()) {
    CAPTURE(inst.label);
    const ExtensionReport r = enumerate_extensions(inst.G, inst.theta);
    if (!r.ok()) continue;
    for (const auto& table : r.extensions) {
      for (Element x = 0; x < inst.G.order(); ++x)
        for (Element y = 0; y < inst.G.order(); ++y) CHECK(table[x] * table[y] == table[inst.G.mul(x, y)]);
      for (Element l : inst.theta.subgroup.elements()) CHECK(table[l] == inst.theta(l));
    }
    for (const BranchNode& node : r.nodes) {
      CHECK(node.terminated == (node.obstruction && !node.obstruction->is_zero));
      if (node.obstruction && !node.terminated) CHECK(BigInt(node.children.size()) == node.h1_order);
    }
    // brick case: depth one and a direct answer from the root obstruction
    if (endomorphism_algebra(inst.theta).dim() == 1) {
      for (const BranchNode& node : r.nodes) CHECK(node.level <= 1);
      CHECK(r.extensions.empty() == r.nodes[0].terminated);
    }
    const ExtensionReport again = enumerate_extensions(inst.G, inst.theta);
    CHECK(again.extensions == r.extensions);
    CHECK(again.traces == r.traces);
    const ExistenceResult e = existence_test(inst.G, inst.theta);
    CHECK((e.verdict == Existence::Exists) == !r.extensions.empty());
  }
}

TEST_CASE("property: radical and derived series agree") {
  for (const auto& inst : suite::extension_suite()) {
    if (!is_indecomposable(inst.theta)) continue;
    CAPTURE(inst.label);
    EngineOptions derived;
    derived.series = Series::Derived;
    const ExtensionReport a = enumerate_extensions(inst.G, inst.theta);
    const ExtensionReport b = enumerate_extensions(inst.G, inst.theta, derived);
    CHECK(a.status == b.status);
    CHECK(a.extensions == b.extensions);
  }
}
