#include "gstab/field.hpp"

#include <map>
#include <string>

#include "gstab/error.hpp"

namespace gstab {

namespace {

constexpr int kMaxFieldOrder = 1024;

// Conway polynomials, constant term first.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{3, 2}, {2, 2, 1}},  {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},    {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

int trim_degree(const std::vector<int>& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d] == 0) --d;
  return d;
}

// Remainder of a modulo a monic polynomial b over GF(p).
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = trim_degree(b);
  for (int d = trim_degree(a); d >= db; d = trim_degree(a)) {
    const int c = a[d];
    for (int i = 0; i <= db; ++i) a[d - db + i] = ((a[d - db + i] - c * b[i]) % p + p) % p;
  }
  a.resize(std::max(db, 1));
  return a;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  const int deg = trim_degree(poly);
  if (deg < 1) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> divisor(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = static_cast<int>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      const auto r = poly_mod(poly, divisor, p);
      if (trim_degree(r) < 0) return false;
    }
  }
  return true;
}

FieldSpec make_field_spec(int p, int e, std::vector<int> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::ParseError, "field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::ParseError, "field degree must be positive");
  if (static_cast<int>(modulus.size()) != e + 1 || modulus.back() != 1)
    throw Error(ErrorCode::ParseError, "modulus must be monic of degree e");
  for (int& c : modulus) c = ((c % p) + p) % p;
  if (!is_irreducible(p, modulus)) throw Error(ErrorCode::ParseError, "modulus is reducible");
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > kMaxFieldOrder) throw Error(ErrorCode::BudgetExceeded, "field order above " + std::to_string(kMaxFieldOrder));
  return FieldSpec{p, e, std::move(modulus)};
}

FieldSpec make_field_spec(int p, int e) {
  if (e == 1) return make_field_spec(p, 1, {0, 1});
  if (auto it = conway_table().find({p, e}); it != conway_table().end()) return make_field_spec(p, e, it->second);
  if (!is_prime(p)) throw Error(ErrorCode::ParseError, "field characteristic is not prime");
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> poly(e + 1, 0);
    long long c = code;
    for (int i = 0; i < e; ++i) {
      poly[i] = static_cast<int>(c % p);
      c /= p;
    }
    poly[e] = 1;
    if (is_irreducible(p, poly)) return make_field_spec(p, e, poly);
  }
  throw Error(ErrorCode::ParseError, "no irreducible polynomial found");
}

Field::Field(const FieldSpec& spec) {
  auto data = std::make_shared<Data>();
  data->spec = spec;
  const int p = spec.p, e = spec.e;
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  data->q = q;
  auto digits = [&](int v) {
    std::vector<int> c(e);
    for (int i = 0; i < e; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  };
  auto pack = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = e - 1; i >= 0; --i) v = v * p + c[i];
    return static_cast<Fq>(v);
  };
  data->add.resize(static_cast<size_t>(q) * q);
  data->mul.resize(static_cast<size_t>(q) * q);
  data->neg.resize(q);
  data->inv.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const auto ca = digits(a);
    std::vector<int> n(e);
    for (int i = 0; i < e; ++i) n[i] = (p - ca[i]) % p;
    data->neg[a] = pack(n);
    for (int b = 0; b < q; ++b) {
      const auto cb = digits(b);
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (ca[i] + cb[i]) % p;
      data->add[a * q + b] = pack(s);
      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      auto r = poly_mod(prod, spec.modulus, p);
      r.resize(e, 0);
      data->mul[a * q + b] = pack(r);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (data->mul[a * q + b] == 1) data->inv[a] = static_cast<Fq>(b);
  data_ = std::move(data);
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return data_->inv[a];
}

Fq Field::pow(Fq a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Fq r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Fq Field::from_int(long long n) const {
  const int p = this->p();
  return static_cast<Fq>(((n % p) + p) % p);
}

int Field::coefficient(Fq a, int i) const {
  for (int k = 0; k < i; ++k) a /= p();
  return static_cast<int>(a % p());
}

Fq Field::from_coefficients(const std::vector<int>& c) const {
  Fq v = 0;
  for (int i = e() - 1; i >= 0; --i) {
    const int ci = i < static_cast<int>(c.size()) ? ((c[i] % p()) + p()) % p() : 0;
    v = v * p() + ci;
  }
  return v;
}

}  // namespace gstab
