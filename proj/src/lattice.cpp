#include "gstab/lattice.hpp"

#include "gstab/error.hpp"

namespace gstab {

ModularLattice::ModularLattice(IntVec moduli) : moduli_(std::move(moduli)) {
  for (std::int64_t m : moduli_)
    if (m < 1) throw Error(ErrorCode::DomainViolation, "modulus must be positive");
  rows_.resize(moduli_.size());
}

IntVec ModularLattice::row(int j) const {
  if (!rows_[j].empty()) return rows_[j];
  IntVec r(dim(), 0);
  r[j] = moduli_[j];
  return r;
}

IntVec& ModularLattice::materialize(int j) {
  if (rows_[j].empty()) {
    rows_[j].assign(dim(), 0);
    rows_[j][j] = moduli_[j];
  }
  return rows_[j];
}

ModularLattice ModularLattice::from_echelon(IntVec moduli, std::vector<IntVec> rows) {
  ModularLattice l;
  l.moduli_ = std::move(moduli);
  l.rows_ = std::move(rows);
  return l;
}

void ModularLattice::insert(IntVec v) {
  const int n = dim();
  if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::ShapeMismatch, "vector length differs from lattice rank");
  for (int c = 0; c < n; ++c) v[c] = mod(v[c], moduli_[c]);
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    const std::int64_t h = pivot(j);
    if (v[j] % h == 0) {
      const IntVec& r = rows_[j];
      const std::int64_t k = v[j] / h;
      v[j] = 0;
      for (int c = j + 1; c < n; ++c) v[c] = mod(v[c] - k * r[c], moduli_[c]);
      continue;
    }
    IntVec& r = materialize(j);
    std::int64_t s, t;
    const std::int64_t g = ext_gcd(h, v[j], s, t);
    const std::int64_t a = v[j] / g, b = h / g;
    for (int c = j + 1; c < n; ++c) {
      const std::int64_t m = moduli_[c];
      const std::int64_t rc = r[c], vc = v[c];
      r[c] = mod(mod(s, m) * rc % m + mod(t, m) * vc % m, m);
      v[c] = mod(mod(a, m) * rc % m - mod(b, m) * vc % m, m);
    }
    r[j] = g;
    v[j] = 0;
  }
}

IntVec ModularLattice::reduce(IntVec v) const {
  const int n = dim();
  if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::ShapeMismatch, "vector length differs from lattice rank");
  for (int c = 0; c < n; ++c) v[c] = mod(v[c], moduli_[c]);
  for (int j = 0; j < n; ++j) {
    if (rows_[j].empty()) continue;
    const IntVec& r = rows_[j];
    const std::int64_t k = v[j] / r[j];
    if (k == 0) continue;
    v[j] -= k * r[j];
    for (int c = j + 1; c < n; ++c) v[c] = mod(v[c] - k % moduli_[c] * r[c], moduli_[c]);
  }
  return v;
}

bool ModularLattice::contains(const IntVec& v) const {
  for (std::int64_t x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool ModularLattice::contains(const ModularLattice& other) const {
  for (int j = 0; j < other.dim(); ++j)
    if (!other.rows_[j].empty() && !contains(other.rows_[j])) return false;
  return true;
}

BigInt ModularLattice::order() const {
  BigInt o = 1;
  for (int j = 0; j < dim(); ++j) o *= moduli_[j] / pivot(j);
  return o;
}

std::vector<IntVec> ModularLattice::generators() const {
  std::vector<IntVec> gens;
  for (const IntVec& r : rows_) {
    if (r.empty()) continue;
    IntVec v(r.size());
    bool nonzero = false;
    for (size_t c = 0; c < r.size(); ++c) {
      v[c] = mod(r[c], moduli_[c]);
      nonzero |= v[c] != 0;
    }
    if (nonzero) gens.push_back(std::move(v));
  }
  return gens;
}

bool ModularLattice::operator==(const ModularLattice& other) const {
  return moduli_ == other.moduli_ && contains(other) && other.contains(*this);
}

ModularMap::ModularMap(IntVec source_moduli, IntVec target_moduli, const std::vector<IntVec>& columns)
    : ModularMap(std::move(source_moduli), std::move(target_moduli), [&columns](int j) { return columns.at(j); }) {
  if (columns.size() != source_.size()) throw Error(ErrorCode::ShapeMismatch, "one column per source coordinate");
}

ModularMap::ModularMap(IntVec source_moduli, IntVec target_moduli, const std::function<IntVec(int)>& column)
    : source_(std::move(source_moduli)), target_(std::move(target_moduli)) {
  const int n = static_cast<int>(source_.size()), k = static_cast<int>(target_.size());
  IntVec moduli = target_;
  moduli.insert(moduli.end(), source_.begin(), source_.end());
  graph_ = ModularLattice(moduli);
  for (int j = 0; j < n; ++j) {
    const IntVec col = column(j);
    if (static_cast<int>(col.size()) != k) throw Error(ErrorCode::ShapeMismatch, "column length differs from target rank");
    IntVec v(k + n, 0);
    for (int i = 0; i < k; ++i) v[i] = col[i];
    v[k + j] = 1;
    graph_.insert(std::move(v));
  }
}

ModularLattice ModularMap::kernel() const {
  const int n = static_cast<int>(source_.size()), k = static_cast<int>(target_.size());
  std::vector<IntVec> rows;
  for (int j = 0; j < n; ++j) {
    const IntVec r = graph_.row(k + j);
    rows.emplace_back(r.begin() + k, r.end());
  }
  return ModularLattice::from_echelon(source_, std::move(rows));
}

ModularLattice ModularMap::image() const {
  const int k = static_cast<int>(target_.size());
  std::vector<IntVec> rows;
  for (int i = 0; i < k; ++i) {
    const IntVec r = graph_.row(i);
    rows.emplace_back(r.begin(), r.begin() + k);
  }
  return ModularLattice::from_echelon(target_, std::move(rows));
}

std::optional<IntVec> ModularMap::preimage(const IntVec& b) const {
  const int n = static_cast<int>(source_.size()), k = static_cast<int>(target_.size());
  if (static_cast<int>(b.size()) != k) throw Error(ErrorCode::ShapeMismatch, "right-hand side length differs from target rank");
  IntVec v(k + n, 0);
  for (int i = 0; i < k; ++i) v[i] = b[i];
  v = graph_.reduce(std::move(v));
  for (int i = 0; i < k; ++i)
    if (v[i] != 0) return std::nullopt;
  IntVec x(n);
  for (int j = 0; j < n; ++j) x[j] = mod(-v[k + j], source_[j]);
  return x;
}

std::optional<CongruenceSolution> solve_congruence(const IntMatrix& M, const IntVec& b, const IntVec& moduli) {
  const int rows = M.rows(), cols = M.cols();
  if (static_cast<int>(b.size()) != rows || static_cast<int>(moduli.size()) != rows)
    throw Error(ErrorCode::ShapeMismatch, "right-hand side and moduli need one entry per row");
  std::int64_t e = 1;
  for (std::int64_t m : moduli) {
    if (m < 1) throw Error(ErrorCode::DomainViolation, "modulus must be positive");
    e = lcm64(e, m);
  }
  std::vector<IntVec> columns(cols, IntVec(rows));
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      BigInt r = M(i, j) % moduli[i];
      if (r < 0) r += moduli[i];
      columns[j][i] = static_cast<std::int64_t>(r);
    }
  ModularMap map(IntVec(cols, e), moduli, columns);
  auto x = map.preimage(b);
  if (!x) return std::nullopt;
  CongruenceSolution sol;
  sol.particular = *x;
  sol.modulus = e;
  sol.kernel = map.kernel().generators();
  return sol;
}

}  // namespace gstab
