#include "gstab/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gstab/error.hpp"

namespace gstab {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::ShapeMismatch, "ragged integer matrix");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (int i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row a += k * row b
void add_row(IntMatrix& m, int a, int b, const BigInt& k) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) += k * m(b, j);
}
// col a += k * col b
void add_col(IntMatrix& m, int a, int b, const BigInt& k) {
  for (int i = 0; i < m.rows(); ++i) m(i, a) += k * m(i, b);
}
void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  const int r = M.rows(), c = M.cols();
  SmithForm sf{IntMatrix::identity(r), M, IntMatrix::identity(c), IntMatrix::identity(c)};
  IntMatrix& S = sf.S;
  // Column op "col a += k col b" is V <- V E; the inverse acts on V_inv as "row b -= k row a".
  auto col_add = [&](int a, int b, const BigInt& k) {
    add_col(S, a, b, k);
    add_col(sf.V, a, b, k);
    add_row(sf.V_inv, b, a, -k);
  };
  auto col_swap = [&](int a, int b) {
    swap_cols(S, a, b);
    swap_cols(sf.V, a, b);
    swap_rows(sf.V_inv, a, b);
  };
  auto row_add = [&](int a, int b, const BigInt& k) {
    add_row(S, a, b, k);
    add_row(sf.U, a, b, k);
  };
  auto row_swap = [&](int a, int b) {
    swap_rows(S, a, b);
    swap_rows(sf.U, a, b);
  };

  for (int t = 0; t < std::min(r, c); ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      int pr = -1, pc = -1;
      BigInt best;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j)
          if (S(i, j) != 0 && (pr < 0 || abs(S(i, j)) < best)) {
            best = abs(S(i, j));
            pr = i;
            pc = j;
          }
      if (pr < 0) goto done;
      if (pr != t) row_swap(pr, t);
      if (pc != t) col_swap(pc, t);

      bool clean = true;
      for (int i = t + 1; i < r; ++i)
        if (S(i, t) != 0) {
          row_add(i, t, -floor_div(S(i, t), S(t, t)));
          if (S(i, t) != 0) clean = false;
        }
      for (int j = t + 1; j < c; ++j)
        if (S(t, j) != 0) {
          col_add(j, t, -floor_div(S(t, j), S(t, t)));
          if (S(t, j) != 0) clean = false;
        }
      if (!clean) continue;

      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_add(t, bad, 1);
    }
    if (S(t, t) < 0) {
      negate_row(S, t);
      negate_row(sf.U, t);
    }
  }
done:
  return sf;
}

BigInt determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const int n = M.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = M;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) return 0;
      swap_rows(a, k, sel);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t tmp = a - q * b;
    a = b;
    b = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<std::int64_t> invariant_factors_of(const std::vector<std::int64_t>& orders) {
  // prime -> list of prime-power exponents
  std::map<std::int64_t, std::vector<std::int64_t>> powers;
  for (std::int64_t a : orders) {
    if (a <= 1) continue;
    for (std::int64_t p : prime_factors(a)) {
      std::int64_t pk = 1;
      while (a % p == 0) {
        a /= p;
        pk *= p;
      }
      powers[p].push_back(pk);
    }
  }
  size_t len = 0;
  for (auto& [p, v] : powers) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<std::int64_t> factors(len, 1);
  for (auto& [p, v] : powers)
    for (size_t i = 0; i < v.size(); ++i) factors[len - 1 - i] *= v[i];
  return factors;
}

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

// A unit u mod e with u * a == gcd(a, e) (mod e).
std::int64_t normalizing_unit(std::int64_t a, std::int64_t e) {
  const std::int64_t g = std::gcd(a, e);
  for (std::int64_t u = 1; u < e; ++u)
    if (std::gcd(u, e) == 1 && mulmod(u, a, e) == g) return u;
  return 1;
}

}  // namespace

ModularSmith smith_mod(std::vector<std::vector<std::int64_t>> A, int n, std::int64_t e) {
  ModularSmith out;
  out.modulus = e;
  const int r = static_cast<int>(A.size());
  auto& V = out.V;
  auto& Vi = out.V_inv;
  V.assign(n, std::vector<std::int64_t>(n, 0));
  Vi.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) V[i][i] = Vi[i][i] = (e == 1 ? 0 : 1);
  for (auto& row : A)
    for (auto& x : row) x = mod(x, e);

  // Column transform [[a, b], [c, d]] applied to columns (i, j): new col i = a*col_i + c*col_j,
  // new col j = b*col_i + d*col_j. Its inverse acts on rows i, j of V_inv.
  auto col_transform = [&](int i, int j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    auto apply = [&](std::vector<std::vector<std::int64_t>>& M) {
      for (auto& row : M) {
        const std::int64_t x = row[i], y = row[j];
        row[i] = mod(mulmod(a, x, e) + mulmod(c, y, e), e);
        row[j] = mod(mulmod(b, x, e) + mulmod(d, y, e), e);
      }
    };
    apply(A);
    apply(V);
    // det = a d - b c = +-1; inverse = det * [[d, -b], [-c, a]]
    const std::int64_t det = mod(mulmod(a, d, e) - mulmod(b, c, e), e);
    for (int k = 0; k < n; ++k) {
      const std::int64_t x = Vi[i][k], y = Vi[j][k];
      Vi[i][k] = mod(mulmod(det, mod(mulmod(d, x, e) - mulmod(b, y, e), e), e), e);
      Vi[j][k] = mod(mulmod(det, mod(mulmod(a, y, e) - mulmod(c, x, e), e), e), e);
    }
  };
  auto row_transform = [&](int i, int j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    for (int k = 0; k < n; ++k) {
      const std::int64_t x = A[i][k], y = A[j][k];
      A[i][k] = mod(mulmod(a, x, e) + mulmod(b, y, e), e);
      A[j][k] = mod(mulmod(c, x, e) + mulmod(d, y, e), e);
    }
  };

  std::vector<std::int64_t> diag;
  int t = 0;
  for (; t < std::min(r, n); ++t) {
    while (true) {
      int pr = -1, pc = -1;
      std::int64_t best = 0;
      for (int i = t; i < r; ++i)
        for (int j = t; j < n; ++j)
          if (A[i][j] != 0) {
            const std::int64_t g = std::gcd(A[i][j], e);
            if (pr < 0 || g < best) {
              best = g;
              pr = i;
              pc = j;
            }
          }
      if (pr < 0) goto finished;
      if (pr != t) std::swap(A[pr], A[t]);
      if (pc != t) col_transform(t, pc, 0, 1, 1, 0);
      // Make the pivot equal gcd(pivot, e).
      const std::int64_t u = normalizing_unit(A[t][t], e);
      for (auto& x : A[t]) x = mulmod(x, u, e);

      for (int i = t + 1; i < r; ++i) {
        if (A[i][t] == 0) continue;
        std::int64_t s, w;
        std::int64_t g = ext_gcd(A[t][t], A[i][t], s, w);
        if (A[i][t] % A[t][t] == 0) s = 1, w = 0, g = A[t][t];  // plain elimination, no swap
        const std::int64_t a1 = A[t][t] / g, b1 = A[i][t] / g;
        // [[s, w], [-b1, a1]] has determinant 1.
        row_transform(t, i, mod(s, e), mod(w, e), mod(-b1, e), mod(a1, e));
      }
      for (int j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        std::int64_t s, w;
        std::int64_t g = ext_gcd(A[t][t], A[t][j], s, w);
        if (A[t][j] % A[t][t] == 0) s = 1, w = 0, g = A[t][t];
        const std::int64_t a1 = A[t][t] / g, b1 = A[t][j] / g;
        // new col t = s col_t + w col_j ; new col j = -b1 col_t + a1 col_j
        col_transform(t, j, mod(s, e), mod(-b1, e), mod(w, e), mod(a1, e));
      }
      bool clean = true;
      for (int i = t + 1; i < r && clean; ++i)
        if (A[i][t] != 0) clean = false;
      for (int j = t + 1; j < n && clean; ++j)
        if (A[t][j] != 0) clean = false;
      if (!clean) continue;
      const std::int64_t g = std::gcd(A[t][t], e);
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (A[i][j] % g != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_transform(t, bad, 1, 1, 0, 1);
    }
    diag.push_back(std::gcd(A[t][t], e));
  }
finished:
  out.factors.assign(n, e);
  for (size_t i = 0; i < diag.size(); ++i) out.factors[i] = diag[i] == 0 ? e : diag[i];
  return out;
}

}  // namespace gstab
