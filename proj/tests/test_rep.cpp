#include <doctest.h>

#include "gstab/engine.hpp"
#include "gstab/error.hpp"
#include "gstab/oracle.hpp"
#include "gstab/rep.hpp"
#include "suite.hpp"

using namespace gstab;
using suite::mat;

namespace {

struct S3Setup {
  GroupTable G = named_group("sym:3");
  Subgroup A3 = make_subgroup(G, {0, 3, 4});
  Field F7{make_field_spec(7)};
};

bool is_homomorphism_on(const GroupTable& G, const std::vector<FqMatrix>& f) {
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y)
      if (f[x] * f[y] != f[G.mul(x, y)]) return false;
  return true;
}

}  // namespace

TEST_CASE("representations from generators") {
  S3Setup s;
  const Representation theta = representation_from_generators(s.G, s.A3, s.F7, 2, {{3, mat(s.F7, {{2, 0}, {0, 4}})}});
  CHECK(theta(4) == mat(s.F7, {{4, 0}, {0, 2}}));
  CHECK(theta(0).is_identity());
  // [3] has order 6 in GF(7)^x, so it cannot be the image of a 3-cycle
  CHECK_THROWS_AS(representation_from_generators(s.G, s.A3, s.F7, 1, {{3, mat(s.F7, {{3}})}}), Error);
  CHECK_THROWS_AS(representation_from_generators(s.G, s.A3, s.F7, 1, {{1, mat(s.F7, {{1}})}}), Error);
  CHECK_THROWS_AS(make_representation(s.G, s.A3, s.F7, {mat(s.F7, {{1}}), mat(s.F7, {{2}}), mat(s.F7, {{2}})}), Error);
}

TEST_CASE("twists and stability over a normal subgroup") {
  S3Setup s;
  const Representation diag = representation_from_generators(s.G, s.A3, s.F7, 2, {{3, mat(s.F7, {{2, 0}, {0, 4}})}});
  // conjugating by a transposition inverts the 3-cycle, swapping the eigenvalues
  const Representation tw = twist(s.G, diag, 1);
  CHECK(tw(3) == diag(4));
  const auto T = find_isomorphism(diag, tw);
  REQUIRE(T.has_value());
  for (Element l : s.A3.elements()) CHECK(*T * diag(l) == tw(l) * *T);
  const Stability st = check_stability(s.G, diag);
  CHECK(st.stable());
  REQUIRE(st.witness.size() == 6);
  for (Element l : s.A3.elements()) CHECK(st.witness[l] == diag(l));

  // a character of order 3 is not stable: its twist is the inverse character
  const Representation chi = representation_from_generators(s.G, s.A3, s.F7, 1, {{3, mat(s.F7, {{2}})}});
  const Stability bad = check_stability(s.G, chi);
  CHECK_FALSE(bad.stable());
  CHECK(bad.failing >= 0);
  CHECK_FALSE(stability_witness(s.G, chi).has_value());
  CHECK_THROWS_AS(check_stability(s.G, trivial_representation(make_subgroup(s.G, {0, 1}), s.F7, 1)), Error);
}

TEST_CASE("stable by conjugation for a non-normal subgroup") {
  S3Setup s;
  const Field F3(make_field_spec(3));
  const Subgroup T = make_subgroup(s.G, {0, 1});
  const Representation sign = representation_from_generators(s.G, T, F3, 1, {{1, mat(F3, {{2}})}});
  const ConjugationStability cs = stable_by_conjugation(s.G, sign);
  CHECK(cs.core.order() == 1);
  REQUIRE(cs.setup.has_value());
  for (Element l : T.elements()) CHECK(cs.setup->witness[l] == sign(l));
  CHECK(cs.setup->chain->order(0) == 2);  // GL_1(3)
}

TEST_CASE("property: intertwiners and endomorphism algebras against brute force") {
  for (const auto& inst : suite::extension_suite()) {
    if (inst.theta.field.q() > 3 && inst.theta.dim > 1) continue;
    CAPTURE(inst.label);
    const EndAlgebra E = endomorphism_algebra(inst.theta);
    const auto brute_all = brute_general_linear(inst.theta.field, inst.theta.dim, 1 << 16);
    // every basis element commutes with theta
    for (const auto& b : E.basis)
      for (const auto& t : inst.theta.images) CHECK(b * t == t * b);
    const auto aut = brute_automorphisms(inst.theta);
    const RadicalData rd = radical_chain(E);
    CHECK(rd.unit_count == static_cast<std::int64_t>(aut.size()));
    // radical powers are nested, nilpotent and J^nilpotency = 0
    for (const auto& level : rd.powers)
      for (const auto& x : level) CHECK(is_nilpotent(x));
    for (size_t m = 1; m < rd.powers.size(); ++m) CHECK(rd.powers[m].size() < rd.powers[m - 1].size());
    CHECK(is_indecomposable(inst.theta) == rd.local);
  }
}

TEST_CASE("indecomposability examples") {
  S3Setup s;
  const Representation diag = representation_from_generators(s.G, s.A3, s.F7, 2, {{3, mat(s.F7, {{2, 0}, {0, 4}})}});
  CHECK_FALSE(is_indecomposable(diag));
  const GroupTable C4 = named_group("cyclic:4");
  const Field F2(make_field_spec(2));
  const Representation jordan = representation_from_generators(C4, make_subgroup(C4, {0, 2}), F2, 2, {{2, mat(F2, {{1, 1}, {0, 1}})}});
  CHECK(is_indecomposable(jordan));
  const RadicalData rd = radical_chain(endomorphism_algebra(jordan));
  CHECK(rd.local);
  CHECK(rd.dim_J == 1);
  CHECK(rd.residue_degree == 1);
  CHECK(rd.nilpotency == 2);
  // trivial 2-dim module is decomposable
  CHECK_FALSE(is_indecomposable(trivial_representation(make_subgroup(C4, {0, 2}), F2, 2)));
}

TEST_CASE("commutant of an irreducible companion matrix is a field") {
  const Field F3(make_field_spec(3));
  const FqMatrix C = mat(F3, {{0, 2}, {1, 0}});  // x^2 + 1, irreducible over GF(3)
  const EndAlgebra E = commutant(F3, 2, {C});
  CHECK(E.dim() == 2);
  const RadicalData rd = radical_chain(E);
  CHECK(rd.local);
  CHECK(rd.dim_J == 0);
  CHECK(rd.residue_degree == 2);
  CHECK(rd.unit_count == 8);
}

TEST_CASE("witness is normalized and intertwines") {
  for (const auto& inst : suite::extension_suite()) {
    const Stability st = check_stability(inst.G, inst.theta);
    if (!st.stable()) continue;
    const CosetSystem cs = coset_system(inst.G, inst.theta.subgroup);
    for (Element x = 0; x < inst.G.order(); ++x) {
      CHECK(st.witness[x] == st.witness[cs.representative(x)] * inst.theta(cs.subgroup_part(inst.G, x)));
      for (Element l : inst.theta.subgroup.elements())
        CHECK(st.witness[x] * inst.theta(l) == inst.theta(inst.G.conjugate(x, l)) * st.witness[x]);
    }
    if (inst.theta.subgroup.order() == inst.G.order()) CHECK(is_homomorphism_on(inst.G, st.witness));
  }
}
