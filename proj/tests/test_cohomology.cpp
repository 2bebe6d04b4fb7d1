#include <doctest.h>

#include <random>

#include "gstab/cohomology.hpp"
#include "gstab/error.hpp"
#include "gstab/oracle.hpp"
#include "suite.hpp"

using namespace gstab;

namespace {

ActionModule sign_module(const GroupTable& G, const Subgroup& K, std::int64_t n) {
  ActionModule A = trivial_module({n}, G.order());
  for (Element g = 0; g < G.order(); ++g)
    if (!K.contains(g)) A.action[g] = {{n - 1}};
  return A;
}

Cochain random_cochain(int degree, const GroupTable& G, const ActionModule& A, std::mt19937& rng) {
  Cochain c = Cochain::zero(degree, G.order(), A.rank());
  for (std::int64_t t = 0; t < c.tuple_count(); ++t) {
    IntVec v(A.rank());
    for (int i = 0; i < A.rank(); ++i) v[i] = static_cast<std::int64_t>(rng() % A.factors[i]);
    c.set(t, v);
  }
  return c;
}

Cochain random_relative_cocycle(const RelativeComplex& C, int n, std::mt19937& rng) {
  const ModularLattice Z = C.cocycles(n);
  IntVec v(Z.dim(), 0);
  for (const auto& g : Z.generators()) {
    const auto k = static_cast<std::int64_t>(rng() % 5);
    for (int i = 0; i < Z.dim(); ++i) v[i] = mod(v[i] + k * g[i], Z.moduli()[i]);
  }
  return C.from_coordinates(n, v);
}

}  // namespace

TEST_CASE("classical absolute cohomology groups") {
  auto order = [](const std::string& g, int n, IntVec factors) {
    const GroupTable G = named_group(g);
    return cohomology(n, G, trivial_subgroup(G), trivial_module(factors, G.order())).order();
  };
  CHECK(order("cyclic:4", 1, {2}) == 2);
  CHECK(order("cyclic:4", 2, {2}) == 2);
  CHECK(order("abelian:2,2", 2, {2}) == 8);
  CHECK(order("dicyclic:2", 2, {2}) == 4);
  CHECK(order("cyclic:3", 2, {2}) == 1);
  CHECK(order("sym:3", 2, {3}) == 1);
  const GroupTable C4 = named_group("cyclic:4");
  const auto H = cohomology(2, C4, trivial_subgroup(C4), trivial_module({4}, 4));
  CHECK(H.invariant_factors() == IntVec{4});
}

TEST_CASE("relative examples") {
  const GroupTable K = named_group("abelian:2,2");
  const Subgroup a = make_subgroup(K, {0, 1});
  const ActionModule Z2 = trivial_module({2}, 4);
  CHECK(cohomology(1, K, a, Z2).order() == 2);
  CHECK(brute_cohomology(1, K, a, Z2).order() == 2);
  const GroupTable C4 = named_group("cyclic:4");
  const Subgroup C2 = make_subgroup(C4, {0, 2});
  CHECK(cohomology(2, C4, C2, trivial_module({2}, 4)).order() == brute_cohomology(2, C4, C2, trivial_module({2}, 4)).order());
  for (int n : {1, 2}) CHECK(cohomology(n, C4, whole_group(C4), trivial_module({2}, 4)).order() == 1);
  CHECK_THROWS_AS(cohomology(3, C4, C2, trivial_module({2}, 4)), Error);
}

TEST_CASE("modules are validated") {
  const GroupTable C2 = named_group("cyclic:2");
  ActionModule A = trivial_module({4}, 2);
  A.action[1] = {{2}};  // not invertible, not an action
  CHECK_THROWS_AS(validate_module(C2, A), Error);
  ActionModule B = trivial_module({2, 4}, 2);
  B.action[1] = {{1, 0}, {1, 1}};  // sends the order-2 generator to an element of order 4
  CHECK_THROWS_AS(validate_module(C2, B), Error);
  const GroupTable S3 = named_group("sym:3");
  validate_module(S3, sign_module(S3, make_subgroup(S3, {0, 3, 4}), 3));
}

TEST_CASE("property: d o d = 0 and differentials are additive") {
  std::mt19937 rng(1);
  for (const std::string name : {"sym:3", "dihedral:4", "dicyclic:2", "abelian:2,4"}) {
    const GroupTable G = named_group(name);
    const ActionModule A = sign_module(G, commutator_subgroup(G).order() * 2 == G.order() ? commutator_subgroup(G) : whole_group(G), 4);
    for (int trial = 0; trial < 5; ++trial)
      for (int n : {0, 1}) {
        const Cochain c = random_cochain(n, G, A, rng), e = random_cochain(n, G, A, rng);
        CHECK(differential(G, A, differential(G, A, c)).is_zero());
        CHECK(differential(G, A, add(A, c, e)) == add(A, differential(G, A, c), differential(G, A, e)));
      }
    CHECK_THROWS_AS(differential(G, A, Cochain::zero(3, G.order(), 1)), Error);
  }
}

TEST_CASE("property: classification is a homomorphism and element() inverts it") {
  std::mt19937 rng(2);
  for (const auto& inst : suite::cohomology_suite(1)) {
    if (inst.G.order() < 4 || inst.G.order() > 6) continue;
    CAPTURE(inst.label);
    const RelativeComplex C(inst.G, inst.L, inst.A);
    for (int n : {1, 2}) {
      const CohomologyResult H = cohomology(n, C);
      CHECK(static_cast<int>(H.representatives().size()) == static_cast<int>(H.invariant_factors().size()));
      for (int trial = 0; trial < 3; ++trial) {
        const Cochain z1 = random_relative_cocycle(C, n, rng), z2 = random_relative_cocycle(C, n, rng);
        CHECK(is_relative(inst.G, inst.L, inst.A, z1));
        CHECK(differential(inst.G, inst.A, z1).is_zero());
        const IntVec a = H.classify(z1), b = H.classify(z2), ab = H.classify(add(inst.A, z1, z2));
        for (size_t i = 0; i < a.size(); ++i) CHECK(ab[i] == mod(a[i] + b[i], H.invariant_factors()[i]));
        CHECK(H.is_coboundary(sub(inst.A, H.element(a), z1)));
        CHECK(H.classify(H.element(a)) == a);
        if (n == 2) {
          const auto alpha = solve_coboundary(C, z1);
          CHECK(alpha.has_value() == H.is_coboundary(z1));
          if (alpha) CHECK(differential(inst.G, inst.A, *alpha) == z1);
        }
      }
      const auto classes = H.all_classes();
      CHECK(static_cast<long long>(classes.size()) == H.order());
      CHECK(classes.front().is_zero());
    }
  }
}

TEST_CASE("non-cocycles are rejected") {
  const GroupTable C4 = named_group("cyclic:4");
  const Subgroup C2 = make_subgroup(C4, {0, 2});
  const ActionModule A = trivial_module({2}, 4);
  const RelativeComplex C(C4, C2, A);
  Cochain c = Cochain::zero(2, 4, 1);
  c.set(1 * 4 + 1, {1});
  const auto H = cohomology(2, C);
  CHECK_THROWS_AS(H.classify(c), Error);
  CHECK_THROWS_AS(solve_coboundary(C, c), Error);
  Cochain on_L = Cochain::zero(1, 4, 1);
  on_L.set(2, {1});
  CHECK_THROWS_AS(C.to_coordinates(on_L), Error);
}

TEST_CASE("restriction, extension by zero and inflation") {
  const GroupTable D4 = named_group("dihedral:4");
  const Subgroup Z = make_subgroup(D4, {0, 2});
  const ActionModule A = trivial_module({2}, 8);
  std::mt19937 rng(4);
  const Cochain c = random_cochain(2, D4, A, rng);
  const Cochain r = restrict_cochain(c, Z);
  CHECK(r.group_order == 2);
  const Cochain e = extend_by_zero(r, Z);
  CHECK(restrict_cochain(e, Z) == r);
  const QuotientGroup Q = quotient_group(D4, Z);
  const Cochain q = random_cochain(2, Q.group, trivial_module({2}, 4), rng);
  const Cochain inf = inflate(q, Q);
  for (Element g = 0; g < 8; ++g)
    for (Element h = 0; h < 8; ++h) CHECK(inf(g, h) == q(Q.projection[g], Q.projection[h]));
}

TEST_CASE("long exact sequence on a few instances") {
  const GroupTable S3 = named_group("sym:3");
  const Subgroup A3 = make_subgroup(S3, {0, 3, 4});
  const LesReport r = les_check(S3, A3, sign_module(S3, A3, 3));
  CHECK(r.passed());
  const GroupTable Q8 = named_group("dicyclic:2");
  for (const Subgroup& L : all_subgroups(Q8)) {
    const LesReport s = les_check(Q8, L, trivial_module({2, 2}, 8));
    CHECK_MESSAGE(s.passed(), s.failures());
  }
}

TEST_CASE("budgets are enforced") {
  const GroupTable S4 = named_group("sym:4");
  CHECK_THROWS_AS(RelativeComplex(S4, trivial_subgroup(S4), trivial_module({2}, 24), 100).cocycles(2), Error);
}
