#include <doctest.h>

#include "gstab/engine.hpp"
#include "gstab/error.hpp"
#include "gstab/morph.hpp"
#include "suite.hpp"

using namespace gstab;
using suite::mat;

namespace {

WeakMorph root_morph(const GroupTable& G, const Representation& theta, Series series = Series::Radical) {
  EngineOptions o;
  o.series = series;
  const ConjugationStability cs = stable_by_conjugation(G, theta, o);
  REQUIRE(cs.setup.has_value());
  return WeakMorph{make_morph_context(G, theta, cs.setup->chain), 0, cs.setup->witness};
}

Representation one_dim(const GroupTable& G, std::vector<Element> L, int p, std::vector<std::pair<Element, Fq>> gens) {
  const Field F(make_field_spec(p));
  std::vector<std::pair<Element, FqMatrix>> g;
  for (auto [x, v] : gens) g.emplace_back(x, mat(F, {{v}}));
  return representation_from_generators(G, make_subgroup(G, L), F, 1, g);
}

}  // namespace

TEST_CASE("the stability witness is a weak morph at level 0") {
  const GroupTable K = named_group("abelian:2,2");
  const WeakMorph f = root_morph(K, one_dim(K, {0, 1}, 3, {{1, 2}}));
  CHECK(check_weak_morph(f, true).ok);
  CHECK(is_normalized(f));
  CHECK(f.is_homomorphism());
  CHECK(defect(f, 2, 2).is_identity());
}

TEST_CASE("nonzero obstruction for C4 over C2 with theta(g^2) = -1 over GF(3)") {
  const GroupTable C4 = named_group("cyclic:4");
  const WeakMorph f = root_morph(C4, one_dim(C4, {0, 2}, 3, {{2, 2}}));
  const ObstructionClass ob = obstruction(f);
  CHECK(ob.quotient == 1);
  CHECK_FALSE(ob.is_zero);
  CHECK_FALSE(ob.certificate.has_value());
  CHECK(differential(C4, ob.module, ob.cocycle).is_zero());
  CHECK_THROWS_AS(lift(f, Cochain::zero(1, 4, 1)), Error);
}

TEST_CASE("lift and branching over C2 x C2") {
  const GroupTable K = named_group("abelian:2,2");
  const Representation theta = one_dim(K, {0, 1}, 3, {{1, 2}});
  const WeakMorph f = root_morph(K, theta);
  const ObstructionClass ob = obstruction(f);
  REQUIRE(ob.is_zero);
  const WeakMorph g = normalize(lift(f, *ob.certificate));
  CHECK(g.level == 1);
  CHECK(g.is_homomorphism());
  const RelativeComplex C(K, theta.subgroup, ob.module);
  const auto classes = cohomology(1, C).all_classes();
  REQUIRE(classes.size() == 2);
  const WeakMorph h = z1_act(classes[1], g);
  CHECK(h.is_homomorphism());
  CHECK_FALSE(equivalent_mod(g, h, 1));
  CHECK_FALSE(conjugacy_equiv(g, h, 1).has_value());
  CHECK(conjugacy_equiv(g, g, 1).has_value());
}

TEST_CASE("diagnostics name the failure") {
  const GroupTable K = named_group("abelian:2,2");
  const Representation theta = one_dim(K, {0, 1}, 3, {{1, 2}});
  WeakMorph f = root_morph(K, theta);
  f.f[1] = mat(theta.field, {{1}});
  const MorphDiagnostics d = check_weak_morph(f);
  CHECK_FALSE(d.ok);
  CHECK(d.x == 1);

  // over GF(7) a non-multiplicative table has a defect outside level 1
  const Representation t7 = one_dim(K, {0, 1}, 7, {{1, 6}});
  WeakMorph g = root_morph(K, t7);
  g.f[2] = mat(t7.field, {{3}});
  g.f[3] = g.f[2] * t7(1);
  g.level = 1;
  CHECK_FALSE(check_weak_morph(g).ok);
  CHECK_THROWS_AS(obstruction(g), Error);
}

TEST_CASE("normalize is idempotent and keeps the level-class") {
  for (const auto& inst : suite::extension_suite()) {
    if (inst.G.order() > 6) continue;
    ConjugationStability cs;
    try {
      cs = stable_by_conjugation(inst.G, inst.theta);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSoluble);
      continue;
    }
    if (!cs.setup) continue;
    WeakMorph f{make_morph_context(inst.G, inst.theta, cs.setup->chain), 0, cs.setup->witness};
    // scramble the values inside their H-cosets
    const auto H = cs.setup->chain->order(0) <= 64 ? cs.setup->chain->elements(0) : std::vector<FqMatrix>{};
    if (H.empty()) continue;
    for (Element x = 0; x < inst.G.order(); ++x)
      if (!inst.theta.subgroup.contains(x)) f.f[x] = H[(x * 5) % H.size()] * f.f[x];
    CHECK(check_weak_morph(f).ok);
    const WeakMorph n = normalize(f);
    CHECK(is_normalized(n));
    CHECK(normalize(n).f == n.f);
    CHECK(check_weak_morph(n).ok);
  }
}

TEST_CASE("induced action is a module and respects the level") {
  const GroupTable S3 = named_group("sym:3");
  const Field F7(make_field_spec(7));
  const Representation diag = representation_from_generators(S3, make_subgroup(S3, {0, 3, 4}), F7, 2, {{3, mat(F7, {{2, 0}, {0, 4}})}});
  const WeakMorph f = root_morph(S3, diag, Series::Derived);
  const ActionModule A = induced_action(f);
  validate_module(S3, A);
  CHECK(A.order() == 36);
  CHECK(acts_trivially_on(A, make_subgroup(S3, {0, 3, 4})));
  CHECK_FALSE(acts_trivially_on(A, whole_group(S3)));
}
