#include "gstab/matrix.hpp"

#include <sstream>

#include "gstab/error.hpp"

namespace gstab {

namespace {

void require_same_shape(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix shapes differ");
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(const Field& F, std::vector<std::vector<Fq>>& rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    const Fq s = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, s);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Fq f = rows[i][c];
      for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FqMatrix FqMatrix::identity(const Field& field, int n) {
  FqMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(const Field& field, const std::vector<std::vector<Fq>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  FqMatrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j] >= static_cast<Fq>(field.q()))
        throw Error(ErrorCode::ParseError, "entry " + std::to_string(rows[i][j]) + " is not a field element");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

bool FqMatrix::is_zero() const {
  for (Fq x : data_)
    if (x != 0) return false;
  return true;
}

bool FqMatrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

FqMatrix& FqMatrix::operator+=(const FqMatrix& other) {
  require_same_shape(*this, other);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], other.data_[i]);
  return *this;
}

FqMatrix& FqMatrix::operator-=(const FqMatrix& other) {
  require_same_shape(*this, other);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] = field_.sub(data_[i], other.data_[i]);
  return *this;
}

FqMatrix operator+(FqMatrix a, const FqMatrix& b) { return a += b; }
FqMatrix operator-(FqMatrix a, const FqMatrix& b) { return a -= b; }

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
  const Field& F = a.field();
  FqMatrix c(F, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Fq x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
    }
  return c;
}

FqMatrix operator*(Fq s, const FqMatrix& a) {
  FqMatrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(s, a(i, j));
  return c;
}

FqMatrix transpose(const FqMatrix& a) {
  FqMatrix t(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

FqMatrix power(const FqMatrix& a, long long k) {
  FqMatrix base = k < 0 ? inv(a) : a;
  if (k < 0) k = -k;
  FqMatrix r = FqMatrix::identity(a.field(), a.rows());
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

int rank(const FqMatrix& a) {
  std::vector<std::vector<Fq>> rows(a.rows(), std::vector<Fq>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return static_cast<int>(rref(a.field(), rows, a.cols()).size());
}

Fq determinant(const FqMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const Field& F = a.field();
  const int n = a.rows();
  FqMatrix m = a;
  Fq det = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return 0;
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    const Fq s = F.inv(m(c, c));
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Fq f = F.mul(m(r, c), s);
      for (int j = c; j < n; ++j) m(r, j) = F.sub(m(r, j), F.mul(f, m(c, j)));
    }
  }
  return det;
}

bool is_invertible(const FqMatrix& a) { return a.is_square() && determinant(a) != 0; }

std::optional<FqMatrix> inverse(const FqMatrix& a) {
  if (!a.is_square()) return std::nullopt;
  const int n = a.rows();
  const Field& F = a.field();
  std::vector<std::vector<Fq>> rows(n, std::vector<Fq>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = a(i, j);
    rows[i][n + i] = 1;
  }
  const auto piv = rref(F, rows, n);
  if (static_cast<int>(piv.size()) < n) return std::nullopt;
  FqMatrix r(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = rows[i][n + j];
  return r;
}

FqMatrix inv(const FqMatrix& a) {
  auto r = inverse(a);
  if (!r) throw Error(ErrorCode::DivisionByZero, "singular matrix");
  return *r;
}

bool is_nilpotent(const FqMatrix& a) { return power(a, a.rows()).is_zero(); }

SolveResult mat_solve(const FqMatrix& M, const FqMatrix& B) {
  if (M.rows() != B.rows()) throw Error(ErrorCode::ShapeMismatch, "row counts differ");
  const Field& F = M.field();
  const int r = M.rows(), c = M.cols(), k = B.cols();
  std::vector<std::vector<Fq>> rows(r, std::vector<Fq>(c + k));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) rows[i][j] = M(i, j);
    for (int j = 0; j < k; ++j) rows[i][c + j] = B(i, j);
  }
  const auto piv = rref(F, rows, c);
  SolveResult result;
  bool consistent = true;
  for (int i = static_cast<int>(piv.size()); i < r && consistent; ++i)
    for (int j = 0; j < k; ++j)
      if (rows[i][c + j] != 0) consistent = false;
  if (consistent) {
    FqMatrix X(F, c, k);
    for (size_t i = 0; i < piv.size(); ++i)
      for (int j = 0; j < k; ++j) X(piv[i], j) = rows[i][c + j];
    result.particular = std::move(X);
  }
  std::vector<char> is_pivot(c, 0);
  for (int p : piv) is_pivot[p] = 1;
  for (int free = 0; free < c; ++free) {
    if (is_pivot[free]) continue;
    FqMatrix v(F, c, 1);
    v(free, 0) = 1;
    for (size_t i = 0; i < piv.size(); ++i) v(piv[i], 0) = F.neg(rows[i][free]);
    result.nullspace.push_back(std::move(v));
  }
  return result;
}

std::vector<FqMatrix> nullspace(const FqMatrix& M) { return mat_solve(M, FqMatrix(M.field(), M.rows(), 0)).nullspace; }

size_t FqMatrixHash::operator()(const FqMatrix& m) const noexcept {
  size_t h = static_cast<size_t>(m.rows()) * 1000003u + static_cast<size_t>(m.cols());
  for (Fq x : m.data()) h = h * 1099511628211ull + x + 0x9e3779b97f4a7c15ull;
  return h;
}

bool LinearSpan::add(const std::vector<Fq>& v) {
  const Field& F = field_;
  std::vector<Fq> r = v;
  std::vector<Fq> combo(basis_.size() + 1, 0);
  for (size_t i = 0; i < echelon_.size(); ++i) {
    const Fq f = r[pivot_[i]];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) r[j] = F.sub(r[j], F.mul(f, echelon_[i][j]));
    for (size_t j = 0; j < combo_[i].size(); ++j) combo[j] = F.sub(combo[j], F.mul(f, combo_[i][j]));
  }
  int pc = -1;
  for (int j = 0; j < dim_; ++j)
    if (r[j] != 0) {
      pc = j;
      break;
    }
  if (pc < 0) return false;
  combo.back() = 1;
  const Fq s = F.inv(r[pc]);
  for (auto& x : r) x = F.mul(x, s);
  for (auto& x : combo) x = F.mul(x, s);
  for (auto& c : combo_) c.push_back(0);
  basis_.push_back(v);
  echelon_.push_back(std::move(r));
  combo_.push_back(std::move(combo));
  pivot_.push_back(pc);
  return true;
}

std::optional<std::vector<Fq>> LinearSpan::coordinates(const std::vector<Fq>& v) const {
  const Field& F = field_;
  std::vector<Fq> r = v;
  std::vector<Fq> coeff(basis_.size(), 0);
  for (size_t i = 0; i < echelon_.size(); ++i) {
    const Fq f = r[pivot_[i]];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) r[j] = F.sub(r[j], F.mul(f, echelon_[i][j]));
    for (size_t j = 0; j < coeff.size(); ++j) coeff[j] = F.add(coeff[j], F.mul(f, combo_[i][j]));
  }
  for (Fq x : r)
    if (x != 0) return std::nullopt;
  return coeff;
}

std::vector<Fq> flatten(const FqMatrix& m) { return m.data(); }

FqMatrix unflatten(const Field& field, int rows, int cols, const std::vector<Fq>& v) {
  FqMatrix m(field, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v[static_cast<size_t>(i) * cols + j];
  return m;
}

LinearSpan matrix_span(const Field& field, int n, const std::vector<FqMatrix>& mats) {
  LinearSpan span(field, n * n);
  for (const auto& m : mats) span.add(flatten(m));
  return span;
}

FqMatrix linear_combination(const std::vector<FqMatrix>& basis, const std::vector<Fq>& coefficients) {
  if (basis.empty()) throw Error(ErrorCode::ShapeMismatch, "empty basis");
  FqMatrix r(basis[0].field(), basis[0].rows(), basis[0].cols());
  for (size_t i = 0; i < basis.size(); ++i)
    if (coefficients[i] != 0) r += coefficients[i] * basis[i];
  return r;
}

std::string format_matrix(const FqMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace gstab
