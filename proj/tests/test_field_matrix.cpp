#include <doctest.h>

#include <random>

#include "gstab/error.hpp"
#include "gstab/matrix.hpp"

using namespace gstab;

namespace {

FqMatrix random_matrix(const Field& F, int n, std::mt19937& rng) {
  FqMatrix M(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = static_cast<Fq>(rng() % F.q());
  return M;
}

}  // namespace

TEST_CASE("prime fields") {
  const Field F(make_field_spec(7));
  CHECK(F.q() == 7);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.add(4, 5) == 2);
  CHECK(F.neg(2) == 5);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.from_int(-1) == 6);
  CHECK_THROWS_AS(F.inv(0), Error);
}

TEST_CASE("extension fields: GF(4), GF(8), GF(9)") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
    const Field F(make_field_spec(p, e));
    CAPTURE(F.q());
    int generators = 0;
    for (Fq a = 1; a < static_cast<Fq>(F.q()); ++a) {
      CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, F.q() - 1) == 1);
      int order = 1;
      for (Fq x = a; x != 1; x = F.mul(x, a)) ++order;
      generators += order == F.q() - 1;
    }
    CHECK(generators > 0);
    for (Fq a = 0; a < static_cast<Fq>(F.q()); ++a)
      for (Fq b = 0; b < static_cast<Fq>(F.q()); ++b)
        for (Fq c = 0; c < static_cast<Fq>(F.q()); c += 2) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
  }
  CHECK(is_irreducible(2, {1, 1, 1}));
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));
  CHECK_THROWS_AS(make_field_spec(2, 2, {1, 0, 1}), Error);
  CHECK_THROWS_AS(make_field_spec(6), Error);
}

TEST_CASE("matrix inverse, rank and determinant") {
  const Field F(make_field_spec(3));
  const FqMatrix A = FqMatrix::from_rows(F, {{1, 2}, {0, 1}});
  CHECK((A * inv(A)).is_identity());
  CHECK(determinant(A) == 1);
  const FqMatrix S = FqMatrix::from_rows(F, {{1, 2}, {2, 1}});
  CHECK(rank(S) == 1);
  CHECK_FALSE(inverse(S).has_value());
  CHECK(is_nilpotent(FqMatrix::from_rows(F, {{0, 1}, {0, 0}})));
  CHECK(power(A, 3).is_identity());
}

TEST_CASE("property: random matrices over GF(2), GF(5), GF(9)") {
  std::mt19937 rng(7);
  for (const FieldSpec spec : {make_field_spec(2), make_field_spec(5), make_field_spec(3, 2)}) {
    const Field F(spec);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + trial % 4;
      const FqMatrix A = random_matrix(F, n, rng), B = random_matrix(F, n, rng);
      CHECK(determinant(A * B) == F.mul(determinant(A), determinant(B)));
      CHECK(is_invertible(A) == (rank(A) == n));
      if (auto Ai = inverse(A)) CHECK((*Ai * A).is_identity());
      // nullspace vectors are killed and have the right count
      const auto ns = nullspace(A);
      CHECK(static_cast<int>(ns.size()) == n - rank(A));
      for (const auto& v : ns) CHECK((A * v).is_zero());
      // solve A X = A B recovers a solution
      const SolveResult s = mat_solve(A, A * B);
      REQUIRE(s.particular.has_value());
      CHECK(A * *s.particular == A * B);
    }
  }
}

TEST_CASE("linear spans track coordinates") {
  const Field F(make_field_spec(5));
  LinearSpan span(F, 3);
  CHECK(span.add({1, 2, 0}));
  CHECK(span.add({0, 1, 1}));
  CHECK_FALSE(span.add({1, 3, 1}));
  const auto c = span.coordinates({2, 2, 3});
  REQUIRE(c.has_value());
  std::vector<Fq> back(3, 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) back[j] = F.add(back[j], F.mul((*c)[i], span.basis()[i][j]));
  CHECK(back == std::vector<Fq>{2, 2, 3});
  CHECK_FALSE(span.contains({0, 0, 1}));
}

TEST_CASE("formatting is row-wise") {
  const Field F(make_field_spec(7));
  CHECK(format_matrix(FqMatrix::from_rows(F, {{1, 2}, {3, 4}})).find('3') != std::string::npos);
  const FqMatrix M = FqMatrix::from_rows(F, {{1, 2}, {3, 4}});
  CHECK(unflatten(F, 2, 2, flatten(M)) == M);
}
