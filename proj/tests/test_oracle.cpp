#include <doctest.h>

#include <algorithm>

#include "gstab/error.hpp"
#include "gstab/oracle.hpp"
#include "suite.hpp"

using namespace gstab;
using suite::mat;

TEST_CASE("brute extensions of the small examples") {
  const GroupTable K = named_group("abelian:2,2");
  const Field F3(make_field_spec(3));
  const Representation theta = representation_from_generators(K, make_subgroup(K, {0, 1}), F3, 1, {{1, mat(F3, {{2}})}});
  const auto tables = brute_extensions(K, theta);
  REQUIRE(tables.size() == 2);
  std::vector<FqMatrix> b_images{tables[0][2], tables[1][2]};
  std::sort(b_images.begin(), b_images.end());
  CHECK(b_images == std::vector<FqMatrix>{mat(F3, {{1}}), mat(F3, {{2}})});
  CHECK(conjugacy_dedup(tables, brute_automorphisms(theta)).size() == 2);

  const GroupTable C4 = named_group("cyclic:4");
  CHECK(brute_extensions(C4, representation_from_generators(C4, make_subgroup(C4, {0, 2}), F3, 1, {{2, mat(F3, {{2}})}})).empty());

  const Representation whole = representation_from_generators(K, whole_group(K), F3, 1, {{1, mat(F3, {{2}})}, {2, mat(F3, {{2}})}});
  const auto only = brute_extensions(K, whole);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == whole.images);
}

TEST_CASE("antidiagonal extensions of diag(2,4) form one class") {
  const GroupTable S3 = named_group("sym:3");
  const Field F7(make_field_spec(7));
  const Representation theta = representation_from_generators(S3, make_subgroup(S3, {0, 3, 4}), F7, 2, {{3, mat(F7, {{2, 0}, {0, 4}})}});
  const auto tables = brute_extensions(S3, theta);
  REQUIRE(tables.size() == 6);
  for (const auto& t : tables) CHECK(t[1](0, 0) == 0);
  const auto classes = conjugacy_dedup(tables, brute_automorphisms(theta));
  CHECK(classes.size() == 1);
  CHECK(conjugacy_dedup({tables[0]}, brute_automorphisms(theta)).size() == 1);
}

TEST_CASE("brute cohomology examples") {
  const GroupTable K = named_group("abelian:2,2");
  const BruteCohomology h = brute_cohomology(1, K, make_subgroup(K, {0, 1}), trivial_module({2}, 4));
  CHECK(h.order() == 2);
  CHECK(h.cocycle_count() == 2);
  CHECK(h.coboundary_count() == 1);
  CHECK(h.representatives().size() == 2);
  for (int n : {1, 2}) CHECK(brute_cohomology(n, K, whole_group(K), trivial_module({2}, 4)).order() == 1);
  // classical values: H^2(C2 x C2, Z/2) has order 8, H^2(Q8, Z/2) has order 4
  CHECK(brute_cohomology(2, K, trivial_subgroup(K), trivial_module({2}, 4)).order() == 8);
  const GroupTable Q8 = named_group("dicyclic:2");
  CHECK(brute_cohomology(2, Q8, trivial_subgroup(Q8), trivial_module({2}, 8)).order() == 4);
  CHECK_THROWS_AS(brute_cohomology(3, K, trivial_subgroup(K), trivial_module({2}, 4)), Error);
}

TEST_CASE("property: oracle representatives are distinct classes") {
  for (const auto& inst : suite::cohomology_suite(1)) {
    if (inst.G.order() > 6) continue;
    CAPTURE(inst.label);
    for (int n : {1, 2}) {
      const BruteCohomology B = brute_cohomology(n, inst.G, inst.L, inst.A);
      const auto& reps = B.representatives();
      CHECK(static_cast<std::int64_t>(reps.size()) == B.order());
      CHECK(B.cocycle_count() % B.coboundary_count() == 0);
      for (size_t i = 0; i < reps.size(); ++i) {
        CHECK(differential(inst.G, inst.A, reps[i]).is_zero());
        for (size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(B.is_coboundary(sub(inst.A, reps[i], reps[j])));
      }
    }
  }
}

TEST_CASE("property: brute extensions are homomorphisms closed under Aut_L(V)") {
  for (const auto& inst : suite::extension_suite()) {
    if (inst.theta.field.q() == 7 && inst.theta.dim == 2) continue;
    CAPTURE(inst.label);
    const auto tables = brute_extensions(inst.G, inst.theta);
    const auto H = brute_automorphisms(inst.theta);
    for (const auto& t : tables) {
      for (Element l : inst.theta.subgroup.elements()) CHECK(t[l] == inst.theta(l));
      const FqMatrix& h = H[H.size() / 2];
      const FqMatrix hi = inv(h);
      std::vector<FqMatrix> conj;
      for (const auto& m : t) conj.push_back(h * m * hi);
      CHECK(std::find(tables.begin(), tables.end(), conj) != tables.end());
    }
    std::size_t total = 0;
    for (const auto& c : conjugacy_dedup(tables, H)) total += c.size();
    CHECK(total == tables.size());
  }
}

TEST_CASE("oracle budgets") {
  const GroupTable C4 = named_group("cyclic:4");
  const Field F7(make_field_spec(7));
  OracleBudget small;
  small.max_H = 100;
  CHECK_THROWS_AS(brute_extensions(C4, trivial_representation(make_subgroup(C4, {0, 2}), F7, 2), small), Error);
  OracleBudget tiny;
  tiny.max_cochains = 10;
  CHECK_THROWS_AS(brute_cohomology(2, C4, trivial_subgroup(C4), trivial_module({4}, 4), tiny), Error);
  CHECK(brute_general_linear(Field(make_field_spec(2)), 2, 100).size() == 6);
  CHECK(brute_general_linear(Field(make_field_spec(3)), 2, 100).size() == 48);
}
