#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gstab/field.hpp"

namespace gstab {

/// Dense matrix over GF(q). Carries its field so products read naturally.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(Field field, int rows, int cols) : field_(std::move(field)), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

  static FqMatrix identity(const Field& field, int n);
  static FqMatrix from_rows(const Field& field, const std::vector<std::vector<Fq>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Field& field() const { return field_; }

  Fq operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Fq& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const std::vector<Fq>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  FqMatrix& operator+=(const FqMatrix& other);
  FqMatrix& operator-=(const FqMatrix& other);

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  /// Canonical ordering: shape, then entries in row-major order.
  friend std::strong_ordering operator<=>(const FqMatrix& a, const FqMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  Field field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fq> data_;
};

FqMatrix operator+(FqMatrix a, const FqMatrix& b);
FqMatrix operator-(FqMatrix a, const FqMatrix& b);
FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
FqMatrix operator*(Fq s, const FqMatrix& a);

FqMatrix transpose(const FqMatrix& a);
FqMatrix power(const FqMatrix& a, long long k);
int rank(const FqMatrix& a);
Fq determinant(const FqMatrix& a);
bool is_invertible(const FqMatrix& a);
/// Inverse, or nullopt when singular.
std::optional<FqMatrix> inverse(const FqMatrix& a);
/// Inverse of a matrix known to be invertible; throws DivisionByZero otherwise.
FqMatrix inv(const FqMatrix& a);
bool is_nilpotent(const FqMatrix& a);

struct SolveResult {
  std::optional<FqMatrix> particular;  // nullopt: the system is inconsistent
  std::vector<FqMatrix> nullspace;     // column vectors spanning ker M
};

/// Solves M X = B; the nullspace basis is returned either way.
SolveResult mat_solve(const FqMatrix& M, const FqMatrix& B);
std::vector<FqMatrix> nullspace(const FqMatrix& M);

struct FqMatrixHash {
  size_t operator()(const FqMatrix& m) const noexcept;
};

/// Incrementally built basis of a subspace of GF(q)^dim, with coordinates
/// relative to the accepted vectors in insertion order.
class LinearSpan {
 public:
  LinearSpan(Field field, int dim) : field_(std::move(field)), dim_(dim) {}

  /// Adds v if it is independent of the current span; returns whether it was added.
  bool add(const std::vector<Fq>& v);
  bool contains(const std::vector<Fq>& v) const { return coordinates(v).has_value(); }
  std::optional<std::vector<Fq>> coordinates(const std::vector<Fq>& v) const;
  int size() const { return static_cast<int>(basis_.size()); }
  int dim() const { return dim_; }
  const std::vector<std::vector<Fq>>& basis() const { return basis_; }

 private:
  Field field_;
  int dim_;
  std::vector<std::vector<Fq>> basis_;
  std::vector<std::vector<Fq>> echelon_;  // reduced rows, pivot normalized to 1
  std::vector<std::vector<Fq>> combo_;    // echelon_[i] = sum combo_[i][j] basis_[j]
  std::vector<int> pivot_;
};

/// Spans of matrices (flattened row-major).
LinearSpan matrix_span(const Field& field, int n, const std::vector<FqMatrix>& mats);
std::vector<Fq> flatten(const FqMatrix& m);
FqMatrix unflatten(const Field& field, int rows, int cols, const std::vector<Fq>& v);
FqMatrix linear_combination(const std::vector<FqMatrix>& basis, const std::vector<Fq>& coefficients);

std::string format_matrix(const FqMatrix& m);

}  // namespace gstab
