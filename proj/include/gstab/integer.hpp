#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gstab {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  BigInt& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  IntMatrix U;      // unimodular, rows x rows
  IntMatrix S;      // diagonal d1 | d2 | ..., d_i >= 0
  IntMatrix V;      // unimodular, cols x cols
  IntMatrix V_inv;  // V^{-1}
  std::vector<BigInt> diagonal() const;
};

/// S = U * M * V with exact arbitrary-precision arithmetic.
SmithForm smith_normal_form(const IntMatrix& M);

/// Determinant by fraction-free elimination (square matrices only).
BigInt determinant(const IntMatrix& M);

/// Smith form of a row-generated subgroup of (Z/e)^n, computed with all
/// arithmetic modulo e. `factors` lists the cyclic orders of
/// (Z/e)^n / rowspan, including 1s, with factors[i] | factors[i+1]; column
/// j of V maps coordinates c to (c V)_j mod factors[j].
struct ModularSmith {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> factors;  // length n
  std::vector<std::vector<std::int64_t>> V;      // n x n, mod e
  std::vector<std::vector<std::int64_t>> V_inv;  // n x n, mod e
};

ModularSmith smith_mod(std::vector<std::vector<std::int64_t>> rows, int n, std::int64_t e);

std::int64_t mod(std::int64_t a, std::int64_t m);
/// g = gcd(a, b) = s a + t b, g >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Canonical invariant factors (each > 1, divisibility chain) of the group
/// Z/a_1 + ... + Z/a_k.
std::vector<std::int64_t> invariant_factors_of(const std::vector<std::int64_t>& cyclic_orders);

}  // namespace gstab
