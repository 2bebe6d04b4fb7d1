#include <doctest.h>

#include <random>
#include <set>

#include "gstab/integer.hpp"
#include "gstab/lattice.hpp"

using namespace gstab;

namespace {

IntMatrix random_int_matrix(int r, int c, std::mt19937& rng, int range) {
  IntMatrix M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = static_cast<int>(rng() % (2 * range + 1)) - range;
  return M;
}

// All elements of the subgroup generated by gens inside Z/m_1 + ... by closure.
std::set<IntVec> closure(const IntVec& moduli, const std::vector<IntVec>& gens) {
  std::set<IntVec> seen{IntVec(moduli.size(), 0)};
  std::vector<IntVec> frontier{IntVec(moduli.size(), 0)};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        IntVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = mod(v[i] + g[i], moduli[i]);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

IntVec random_vec(const IntVec& moduli, std::mt19937& rng) {
  IntVec v(moduli.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::int64_t>(rng() % moduli[i]);
  return v;
}

}  // namespace

TEST_CASE("Smith normal form of a known matrix") {
  const IntMatrix M = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith_normal_form(M);
  const auto d = s.diagonal();
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
  CHECK(determinant(M) == -144);
}

TEST_CASE("property: random Smith forms factor exactly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const IntMatrix M = random_int_matrix(r, c, rng, 9);
    const SmithForm s = smith_normal_form(M);
    CHECK(s.U * M * s.V == s.S);
    CHECK(s.V * s.V_inv == IntMatrix::identity(c));
    const BigInt du = determinant(s.U), dv = determinant(s.V);
    CHECK(abs(du) == 1);
    CHECK(abs(dv) == 1);
    const auto d = s.diagonal();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(s.S(i, j) == 0);
    for (size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
  }
}

TEST_CASE("property: modular Smith factors match the integer Smith form") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::int64_t e = std::vector<std::int64_t>{2, 4, 6, 8, 9, 12, 30}[trial % 7];
    const int n = 1 + trial % 4, r = trial % 5;
    std::vector<IntVec> rows;
    for (int i = 0; i < r; ++i) rows.push_back(random_vec(IntVec(n, e), rng));
    const ModularSmith ms = smith_mod(rows, n, e);
    // (Z/e)^n / rowspan from the integer Smith form of [rows; e I]
    IntMatrix big(r + n, n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) big(i, j) = rows[i][j];
    for (int j = 0; j < n; ++j) big(r + j, j) = e;
    IntVec expected;
    for (const auto& d : smith_normal_form(big).diagonal()) expected.push_back(static_cast<std::int64_t>(d));
    CHECK(invariant_factors_of(ms.factors) == invariant_factors_of(expected));
    // V is invertible mod e and the row space maps into the factor lattice
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < n; ++k) s = mod(s + ms.V[i][k] * ms.V_inv[k][j], e);
        CHECK(s == (i == j ? 1 % e : 0));
      }
    for (const auto& row : rows)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < n; ++k) s = mod(s + row[k] * ms.V[k][j], e);
        CHECK(s % ms.factors[j] == 0);
      }
  }
}

TEST_CASE("invariant factors and helpers") {
  CHECK(invariant_factors_of({2, 3}) == IntVec{6});
  CHECK(invariant_factors_of({2, 2, 4, 1}) == IntVec{2, 2, 4});
  CHECK(invariant_factors_of({6, 10}) == IntVec{2, 30});
  CHECK(mod(-3, 5) == 2);
  std::int64_t s = 0, t = 0;
  CHECK(ext_gcd(12, 18, s, t) == 6);
  CHECK(12 * s + 18 * t == 6);
  CHECK(lcm64(4, 6) == 12);
  CHECK(prime_factors(60) == std::vector<std::int64_t>{2, 3, 5});
}

TEST_CASE("property: lattices agree with brute-force closure") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const IntVec moduli = std::vector<IntVec>{{2, 4}, {6}, {4, 6, 2}, {3, 9}, {2, 2, 2}, {12, 8}}[trial % 6];
    std::vector<IntVec> gens;
    for (int i = 0; i < trial % 4; ++i) gens.push_back(random_vec(moduli, rng));
    ModularLattice lat(moduli);
    for (const auto& g : gens) lat.insert(g);
    const auto all = closure(moduli, gens);
    CHECK(lat.order() == static_cast<long long>(all.size()));
    for (int k = 0; k < 10; ++k) {
      const IntVec v = random_vec(moduli, rng);
      CHECK(lat.contains(v) == (all.count(v) > 0));
      // reduce is a class function
      for (const auto& g : gens) {
        IntVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] + 3 * g[i];
        CHECK(lat.reduce(w) == lat.reduce(v));
      }
    }
    ModularLattice again(moduli);
    for (const auto& g : lat.generators()) again.insert(g);
    CHECK(again == lat);
  }
}

TEST_CASE("property: kernels, images and preimages of modular maps") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const IntVec src = std::vector<IntVec>{{4, 2}, {6}, {2, 2, 2}, {4, 4}}[trial % 4];
    const IntVec tgt = std::vector<IntVec>{{2, 4}, {6, 2}, {4}}[trial % 3];
    // Well-defined columns: s_j * col_j == 0 in the target.
    std::vector<IntVec> cols;
    for (size_t j = 0; j < src.size(); ++j) {
      IntVec c(tgt.size());
      for (size_t i = 0; i < tgt.size(); ++i) {
        const std::int64_t step = tgt[i] / std::gcd(tgt[i], src[j]);
        c[i] = mod(static_cast<std::int64_t>(rng() % 7) * step, tgt[i]);
      }
      cols.push_back(c);
    }
    const ModularMap f(src, tgt, cols);
    auto apply = [&](const IntVec& x) {
      IntVec y(tgt.size(), 0);
      for (size_t j = 0; j < src.size(); ++j)
        for (size_t i = 0; i < tgt.size(); ++i) y[i] = mod(y[i] + x[j] * cols[j][i], tgt[i]);
      return y;
    };
    std::int64_t domain = 1;
    for (auto s : src) domain *= s;
    std::set<IntVec> image;
    std::int64_t kernel = 0;
    const ModularLattice K = f.kernel(), I = f.image();
    for (std::int64_t t = 0; t < domain; ++t) {
      IntVec x(src.size());
      std::int64_t r = t;
      for (size_t j = 0; j < src.size(); ++j) {
        x[j] = r % src[j];
        r /= src[j];
      }
      const IntVec y = apply(x);
      image.insert(y);
      const bool zero = std::all_of(y.begin(), y.end(), [](auto v) { return v == 0; });
      kernel += zero;
      CHECK(K.contains(x) == zero);
    }
    CHECK(K.order() == kernel);
    CHECK(I.order() == static_cast<long long>(image.size()));
    for (int k = 0; k < 8; ++k) {
      const IntVec b = random_vec(tgt, rng);
      const auto pre = f.preimage(b);
      CHECK(pre.has_value() == (image.count(b) > 0));
      if (pre) CHECK(apply(*pre) == b);
    }
  }
}

TEST_CASE("congruence systems") {
  // 2x + 3y = 1 mod 5, x - 2y = 0 mod 5 -> x = 1, y = 3
  const auto s = solve_congruence(IntMatrix::from_rows({{2, 3}, {1, -2}}), {1, 0}, {5, 5});
  REQUIRE(s.has_value());
  CHECK(mod(2 * s->particular[0] + 3 * s->particular[1], 5) == 1);
  CHECK(mod(s->particular[0] - 2 * s->particular[1], 5) == 0);
  CHECK_FALSE(solve_congruence(IntMatrix::from_rows({{2, 3}, {1, -1}}), {1, 0}, {5, 5}).has_value());
  // 2x = 1 mod 4 has no solution
  CHECK_FALSE(solve_congruence(IntMatrix::from_rows({{2}}), {1}, {4}).has_value());
}
