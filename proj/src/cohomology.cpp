#include "gstab/cohomology.hpp"

#include <numeric>

#include "gstab/error.hpp"

namespace gstab {

IntVec ActionModule::act(Element g, const IntVec& a) const {
  const auto& M = action[g];
  IntVec out(rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < rank(); ++j) s = (s + mod(M[i][j], factors[i]) * mod(a[j], factors[i])) % factors[i];
    out[i] = s;
  }
  return out;
}

IntVec ActionModule::add(const IntVec& a, const IntVec& b) const {
  IntVec out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = mod(a[i] + b[i], factors[i]);
  return out;
}

IntVec ActionModule::sub(const IntVec& a, const IntVec& b) const {
  IntVec out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = mod(a[i] - b[i], factors[i]);
  return out;
}

IntVec ActionModule::neg(const IntVec& a) const {
  IntVec out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = mod(-a[i], factors[i]);
  return out;
}

IntVec ActionModule::reduce(IntVec a) const {
  for (int i = 0; i < rank(); ++i) a[i] = mod(a[i], factors[i]);
  return a;
}

bool ActionModule::is_zero(const IntVec& a) const {
  for (int i = 0; i < rank(); ++i)
    if (mod(a[i], factors[i]) != 0) return false;
  return true;
}

std::int64_t ActionModule::exponent() const {
  std::int64_t e = 1;
  for (std::int64_t d : factors) e = lcm64(e, d);
  return e;
}

BigInt ActionModule::order() const {
  BigInt o = 1;
  for (std::int64_t d : factors) o *= d;
  return o;
}

ActionModule trivial_module(IntVec factors, int group_order) {
  const int k = static_cast<int>(factors.size());
  std::vector<IntVec> I(k, IntVec(k, 0));
  for (int i = 0; i < k; ++i) I[i][i] = 1;
  return ActionModule{std::move(factors), std::vector<std::vector<IntVec>>(group_order, I)};
}

void validate_module(const GroupTable& G, const ActionModule& A) {
  const int k = A.rank();
  for (std::int64_t d : A.factors)
    if (d < 1) throw Error(ErrorCode::IllDefinedAction, "cyclic factors must be positive");
  if (static_cast<int>(A.action.size()) != G.order()) throw Error(ErrorCode::IllDefinedAction, "one action matrix per group element expected");
  for (Element g = 0; g < G.order(); ++g) {
    const auto& M = A.action[g];
    if (static_cast<int>(M.size()) != k) throw Error(ErrorCode::IllDefinedAction, "action matrix has the wrong shape");
    for (const auto& row : M)
      if (static_cast<int>(row.size()) != k) throw Error(ErrorCode::IllDefinedAction, "action matrix has the wrong shape");
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i)
        if (mod(static_cast<std::int64_t>((static_cast<__int128>(A.factors[j]) * M[i][j]) % A.factors[i]), A.factors[i]) != 0)
          throw Error(ErrorCode::IllDefinedAction, "matrix of element " + std::to_string(g) + " does not respect the cyclic orders");
  }
  std::vector<IntVec> unit(k, IntVec(k, 0));
  for (int j = 0; j < k; ++j) unit[j][j] = 1;
  for (int j = 0; j < k; ++j)
    if (A.act(G.identity(), unit[j]) != A.reduce(unit[j])) throw Error(ErrorCode::IllDefinedAction, "the identity must act trivially");
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h)
      for (int j = 0; j < k; ++j)
        if (A.act(g, A.act(h, unit[j])) != A.act(G.mul(g, h), unit[j]))
          throw Error(ErrorCode::IllDefinedAction, "action is not multiplicative at (" + std::to_string(g) + ", " + std::to_string(h) + ")");
}

bool acts_trivially_on(const ActionModule& A, const Subgroup& L) {
  const int k = A.rank();
  for (Element l : L.elements())
    for (int j = 0; j < k; ++j) {
      IntVec e(k, 0);
      e[j] = 1;
      if (A.act(l, e) != A.reduce(e)) return false;
    }
  return true;
}

ActionModule restrict_module(const ActionModule& A, const Subgroup& L) {
  ActionModule out{A.factors, {}};
  for (Element l : L.elements()) out.action.push_back(A.action[l]);
  return out;
}

ActionModule quotient_module(const ActionModule& A, const QuotientGroup& Q) {
  if (!acts_trivially_on(A, Q.cosets.subgroup)) throw Error(ErrorCode::DomainViolation, "the subgroup acts nontrivially, no quotient action");
  ActionModule out{A.factors, {}};
  for (Element t : Q.cosets.transversal) out.action.push_back(A.action[t]);
  // Quotient elements are numbered by coset index.
  std::vector<std::vector<IntVec>> by_element(Q.group.order());
  for (size_t c = 0; c < Q.cosets.transversal.size(); ++c) by_element[Q.projection[Q.cosets.transversal[c]]] = out.action[c];
  out.action = std::move(by_element);
  return out;
}

Cochain Cochain::zero(int degree, int group_order, int rank, bool relative) {
  Cochain c{degree, group_order, rank, relative, {}};
  c.values.assign(c.tuple_count() * rank, 0);
  return c;
}

std::int64_t Cochain::tuple_count() const {
  std::int64_t t = 1;
  for (int i = 0; i < degree; ++i) t *= group_order;
  return t;
}

std::int64_t Cochain::tuple_index(std::span<const Element> tuple) const {
  std::int64_t idx = 0;
  for (Element g : tuple) idx = idx * group_order + g;
  return idx;
}

IntVec Cochain::at(std::int64_t tuple) const {
  return IntVec(values.begin() + tuple * rank, values.begin() + (tuple + 1) * rank);
}

void Cochain::set(std::int64_t tuple, const IntVec& a) {
  for (int i = 0; i < rank; ++i) values[tuple * rank + i] = a[i];
}

bool Cochain::is_zero() const {
  for (auto v : values)
    if (v != 0) return false;
  return true;
}

namespace {

void decode(std::int64_t idx, int degree, int N, Element* out) {
  for (int i = degree - 1; i >= 0; --i) {
    out[i] = static_cast<Element>(idx % N);
    idx /= N;
  }
}

std::int64_t encode(const Element* t, int degree, int N) {
  std::int64_t idx = 0;
  for (int i = 0; i < degree; ++i) idx = idx * N + t[i];
  return idx;
}

void require_module_shape(const ActionModule& A, const Cochain& c) {
  if (c.rank != A.rank()) throw Error(ErrorCode::ShapeMismatch, "cochain values do not match the module rank");
}

}  // namespace

Cochain differential(const GroupTable& G, const ActionModule& A, const Cochain& c) {
  if (c.degree > 2) throw Error(ErrorCode::DegreeTooHigh, "differentials are implemented up to degree 2");
  require_module_shape(A, c);
  const int n = c.degree, N = G.order();
  Cochain out = Cochain::zero(n + 1, N, c.rank, c.relative);
  Element t[4], s[4];
  for (std::int64_t idx = 0; idx < out.tuple_count(); ++idx) {
    decode(idx, n + 1, N, t);
    IntVec v = A.act(t[0], c.at(encode(t + 1, n, N)));
    for (int i = 1; i <= n; ++i) {
      int w = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        s[w++] = j == i - 1 ? G.mul(t[i - 1], t[i]) : t[j];
      }
      const IntVec term = c.at(encode(s, n, N));
      v = (i % 2) ? A.sub(v, term) : A.add(v, term);
    }
    const IntVec last = c.at(encode(t, n, N));
    v = ((n + 1) % 2) ? A.sub(v, last) : A.add(v, last);
    out.set(idx, v);
  }
  return out;
}

Cochain add(const ActionModule& A, const Cochain& a, const Cochain& b) {
  Cochain out = a;
  for (std::int64_t t = 0; t < a.tuple_count(); ++t) out.set(t, A.add(a.at(t), b.at(t)));
  out.relative = a.relative && b.relative;
  return out;
}

Cochain sub(const ActionModule& A, const Cochain& a, const Cochain& b) {
  Cochain out = a;
  for (std::int64_t t = 0; t < a.tuple_count(); ++t) out.set(t, A.sub(a.at(t), b.at(t)));
  out.relative = a.relative && b.relative;
  return out;
}

Cochain scale(const ActionModule& A, const Cochain& a, std::int64_t k) {
  Cochain out = a;
  for (std::int64_t t = 0; t < a.tuple_count(); ++t) {
    IntVec v = a.at(t);
    for (auto& x : v) x *= k;
    out.set(t, A.reduce(v));
  }
  return out;
}

bool is_relative(const GroupTable& G, const Subgroup& L, const ActionModule& A, const Cochain& c) {
  if (c.degree == 0) {
    for (Element l : L.elements())
      if (A.act(l, c()) != A.reduce(c())) return false;
    return true;
  }
  Element t[4];
  for (std::int64_t idx = 0; idx < c.tuple_count(); ++idx) {
    decode(idx, c.degree, G.order(), t);
    bool inside = true;
    for (int i = 0; i < c.degree; ++i) inside = inside && L.contains(t[i]);
    if (inside && !A.is_zero(c.at(idx))) return false;
  }
  return true;
}

bool is_normalized(const GroupTable& G, const Cochain& c) {
  Element t[4];
  for (std::int64_t idx = 0; idx < c.tuple_count(); ++idx) {
    decode(idx, c.degree, G.order(), t);
    bool has_identity = false;
    for (int i = 0; i < c.degree; ++i) has_identity = has_identity || t[i] == G.identity();
    if (!has_identity) continue;
    for (auto v : c.at(idx))
      if (v != 0) return false;
  }
  return true;
}

Cochain restrict_cochain(const Cochain& c, const Subgroup& L) {
  const int M = L.order();
  Cochain out = Cochain::zero(c.degree, M, c.rank);
  Element t[4], s[4];
  for (std::int64_t idx = 0; idx < out.tuple_count(); ++idx) {
    decode(idx, c.degree, M, t);
    for (int i = 0; i < c.degree; ++i) s[i] = L.elements()[t[i]];
    out.set(idx, c.at(encode(s, c.degree, c.group_order)));
  }
  return out;
}

Cochain extend_by_zero(const Cochain& c, const Subgroup& L) {
  const int N = L.parent_order();
  Cochain out = Cochain::zero(c.degree, N, c.rank);
  Element t[4], s[4];
  for (std::int64_t idx = 0; idx < c.tuple_count(); ++idx) {
    decode(idx, c.degree, c.group_order, t);
    for (int i = 0; i < c.degree; ++i) s[i] = L.elements()[t[i]];
    out.set(encode(s, c.degree, N), c.at(idx));
  }
  return out;
}

Cochain inflate(const Cochain& c, const QuotientGroup& Q) {
  const int N = static_cast<int>(Q.projection.size());
  Cochain out = Cochain::zero(c.degree, N, c.rank, true);
  Element t[4], s[4];
  for (std::int64_t idx = 0; idx < out.tuple_count(); ++idx) {
    decode(idx, c.degree, N, t);
    for (int i = 0; i < c.degree; ++i) s[i] = Q.projection[t[i]];
    out.set(idx, c.at(encode(s, c.degree, c.group_order)));
  }
  return out;
}

RelativeComplex::RelativeComplex(const GroupTable& G, const Subgroup& L, ActionModule A, std::int64_t budget)
    : G_(G), L_(L), A_(std::move(A)), budget_(budget), free_(4) {
  if (L_.parent_order() != G_.order()) throw Error(ErrorCode::ShapeMismatch, "subgroup belongs to a different group");
  if (static_cast<int>(A_.action.size()) != G_.order()) throw Error(ErrorCode::ShapeMismatch, "module is for a different group");
}

void RelativeComplex::check_budget(int n) const {
  BigInt count = A_.rank();
  for (int i = 0; i < n; ++i) count *= G_.order();
  if (count > budget_)
    throw Error(ErrorCode::BudgetExceeded, "degree-" + std::to_string(n) + " cochain space has " + count.str() + " coordinates, over the budget of " + std::to_string(budget_));
}

const std::vector<std::int64_t>& RelativeComplex::free_tuples(int n) const {
  if (n < 1 || n > 3) throw Error(ErrorCode::DegreeTooHigh, "cochain coordinates exist for degrees 1 to 3");
  auto& self = const_cast<RelativeComplex&>(*this);
  if (free_[n].empty() && position_[n].empty()) {
    check_budget(n);
    const int N = G_.order();
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) count *= N;
    self.position_[n].assign(count, -1);
    Element t[4];
    for (std::int64_t idx = 0; idx < count; ++idx) {
      decode(idx, n, N, t);
      bool has_identity = false, inside = true;
      for (int i = 0; i < n; ++i) {
        has_identity = has_identity || t[i] == G_.identity();
        inside = inside && L_.contains(t[i]);
      }
      if (has_identity || inside) continue;
      self.position_[n][idx] = static_cast<std::int64_t>(free_[n].size());
      self.free_[n].push_back(idx);
    }
  }
  return free_[n];
}

IntVec RelativeComplex::coordinate_moduli(int n) const {
  IntVec m;
  const auto& ft = free_tuples(n);
  m.reserve(ft.size() * A_.rank());
  for (size_t i = 0; i < ft.size(); ++i) m.insert(m.end(), A_.factors.begin(), A_.factors.end());
  return m;
}

IntVec RelativeComplex::to_coordinates(const Cochain& c) const {
  const int n = c.degree;
  const auto& ft = free_tuples(n);
  if (c.group_order != G_.order() || c.rank != A_.rank()) throw Error(ErrorCode::ShapeMismatch, "cochain does not belong to this complex");
  const int k = A_.rank();
  IntVec v(ft.size() * k, 0);
  for (std::int64_t idx = 0; idx < c.tuple_count(); ++idx) {
    const std::int64_t pos = position_[n][idx];
    const IntVec a = A_.reduce(c.at(idx));
    if (pos < 0) {
      if (!A_.is_zero(a)) throw Error(ErrorCode::DomainViolation, "cochain is not a normalized relative cochain");
      continue;
    }
    for (int i = 0; i < k; ++i) v[pos * k + i] = a[i];
  }
  return v;
}

Cochain RelativeComplex::from_coordinates(int n, const IntVec& v) const {
  const auto& ft = free_tuples(n);
  const int k = A_.rank();
  if (v.size() != ft.size() * k) throw Error(ErrorCode::ShapeMismatch, "coordinate vector has the wrong length");
  Cochain c = Cochain::zero(n, G_.order(), k, true);
  for (size_t p = 0; p < ft.size(); ++p)
    for (int i = 0; i < k; ++i) c.values[ft[p] * k + i] = mod(v[p * k + i], A_.factors[i]);
  return c;
}

ModularMap RelativeComplex::differential_map(int n) const {
  if (n < 1 || n > 2) throw Error(ErrorCode::DegreeTooHigh, "coordinate differentials exist for degrees 1 and 2");
  const auto& src = free_tuples(n);
  const auto& dst = free_tuples(n + 1);
  const int N = G_.order(), k = A_.rank();
  // Sparse columns: source coordinate -> (target coordinate, coefficient).
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> columns(src.size() * k);
  auto contribute = [&](std::int64_t target_block, std::int64_t source_tuple, const std::vector<IntVec>* M, std::int64_t sign) {
    const std::int64_t sp = position_[n][source_tuple];
    if (sp < 0) return;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const std::int64_t coef = M ? (*M)[i][j] : (i == j ? 1 : 0);
        if (coef != 0) columns[sp * k + j].emplace_back(target_block * k + i, sign * coef);
      }
  };
  Element t[4], s[4];
  for (size_t tb = 0; tb < dst.size(); ++tb) {
    decode(dst[tb], n + 1, N, t);
    contribute(static_cast<std::int64_t>(tb), encode(t + 1, n, N), &A_.action[t[0]], 1);
    for (int i = 1; i <= n; ++i) {
      int w = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        s[w++] = j == i - 1 ? G_.mul(t[i - 1], t[i]) : t[j];
      }
      contribute(static_cast<std::int64_t>(tb), encode(s, n, N), nullptr, (i % 2) ? -1 : 1);
    }
    contribute(static_cast<std::int64_t>(tb), encode(t, n, N), nullptr, ((n + 1) % 2) ? -1 : 1);
  }
  IntVec target = coordinate_moduli(n + 1);
  return ModularMap(coordinate_moduli(n), target, [&](int j) {
    IntVec col(target.size(), 0);
    for (const auto& [row, coef] : columns[j]) col[row] = mod(col[row] + coef, target[row]);
    return col;
  });
}

ModularLattice RelativeComplex::invariants() const {
  const int k = A_.rank();
  IntVec target;
  std::vector<Element> ls;
  for (Element l : L_.elements())
    if (l != G_.identity()) {
      ls.push_back(l);
      target.insert(target.end(), A_.factors.begin(), A_.factors.end());
    }
  ModularMap map(A_.factors, target, [&](int j) {
    IntVec e(k, 0);
    e[j] = 1;
    IntVec col;
    for (Element l : ls) {
      const IntVec v = A_.sub(A_.act(l, e), A_.reduce(e));
      col.insert(col.end(), v.begin(), v.end());
    }
    return col;
  });
  return map.kernel();
}

ModularLattice RelativeComplex::coboundaries(int n) const {
  if (n == 2) return differential_map(1).image();
  if (n != 1) throw Error(ErrorCode::DegreeTooHigh, "coboundaries are computed in degrees 1 and 2");
  const auto& ft = free_tuples(1);
  const int k = A_.rank();
  ModularLattice B(coordinate_moduli(1));
  for (const IntVec& a : invariants().generators()) {
    IntVec v(ft.size() * k);
    for (size_t p = 0; p < ft.size(); ++p) {
      const IntVec d = A_.sub(A_.act(static_cast<Element>(ft[p]), a), A_.reduce(a));
      for (int i = 0; i < k; ++i) v[p * k + i] = d[i];
    }
    B.insert(std::move(v));
  }
  return B;
}

ModularLattice RelativeComplex::cocycles(int n) const { return differential_map(n).kernel(); }

BigInt CohomologyResult::order() const {
  BigInt o = 1;
  for (auto f : factors_) o *= f;
  return o;
}

IntVec CohomologyResult::classify(const Cochain& z) const {
  const IntVec v = complex_->to_coordinates(z);
  if (!Z_.contains(v)) throw Error(ErrorCode::NotACocycle, "cochain is not a cocycle");
  const std::int64_t e = smith_.modulus;
  IntVec coords;
  if (columns_.empty()) return coords;
  const auto c = phi_->preimage(v);
  if (!c) throw Error(ErrorCode::NotACocycle, "cocycle outside the computed cocycle group");
  for (size_t i = 0; i < columns_.size(); ++i) {
    std::int64_t s = 0;
    for (size_t t = 0; t < c->size(); ++t) s = (s + (*c)[t] * smith_.V[t][columns_[i]]) % e;
    coords.push_back(mod(s, factors_[i]));
  }
  return coords;
}

bool CohomologyResult::is_coboundary(const Cochain& z) const { return B_.contains(complex_->to_coordinates(z)); }

Cochain CohomologyResult::element(const IntVec& coords) const {
  if (coords.size() != factors_.size()) throw Error(ErrorCode::ShapeMismatch, "class coordinates have the wrong length");
  const IntVec moduli = complex_->coordinate_moduli(degree_);
  IntVec v(moduli.size(), 0);
  const std::int64_t e = smith_.modulus;
  for (size_t t = 0; t < z_rows_.size(); ++t) {
    std::int64_t c = 0;
    for (size_t i = 0; i < columns_.size(); ++i) c = (c + mod(coords[i], factors_[i]) * smith_.V_inv[columns_[i]][t]) % e;
    if (c == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = mod(v[j] + c % moduli[j] * z_rows_[t][j], moduli[j]);
  }
  return complex_->from_coordinates(degree_, B_.reduce(std::move(v)));
}

std::vector<Cochain> CohomologyResult::all_classes(std::int64_t limit) const {
  if (order() > limit) throw Error(ErrorCode::BudgetExceeded, "too many cohomology classes to list (" + order().str() + ")");
  std::vector<Cochain> out;
  IntVec coords(factors_.size(), 0);
  while (true) {
    out.push_back(element(coords));
    size_t i = 0;
    for (; i < coords.size(); ++i) {
      if (++coords[i] < factors_[i]) break;
      coords[i] = 0;
    }
    if (i == coords.size()) break;
  }
  return out;
}

CohomologyResult cohomology(int n, const RelativeComplex& C) {
  if (n < 1 || n > 2) throw Error(ErrorCode::DegreeTooHigh, "cohomology is computed in degrees 1 and 2");
  CohomologyResult r;
  r.degree_ = n;
  r.complex_ = std::make_shared<RelativeComplex>(C);
  r.Z_ = C.cocycles(n);
  r.B_ = C.coboundaries(n);
  r.z_order_ = r.Z_.order();
  r.b_order_ = r.B_.order();
  const IntVec moduli = C.coordinate_moduli(n);
  const std::int64_t e = C.module().exponent();
  r.z_rows_ = r.Z_.generators();
  const int s = static_cast<int>(r.z_rows_.size());
  const auto b_rows = r.B_.generators();
  const int nb = static_cast<int>(b_rows.size());
  r.phi_ = std::make_shared<ModularMap>(IntVec(s, e), moduli, r.z_rows_);
  // P = {c : phi(c) in B}, the kernel of (c, b) -> phi(c) - sum b_j B_j.
  ModularMap psi(IntVec(s + nb, e), moduli, [&](int j) {
    if (j < s) return r.z_rows_[j];
    IntVec col = b_rows[j - s];
    for (size_t i = 0; i < col.size(); ++i) col[i] = mod(-col[i], moduli[i]);
    return col;
  });
  const ModularLattice K = psi.kernel();
  std::vector<IntVec> P;
  for (int j = 0; j < s; ++j) {
    const IntVec row = K.row(j);
    P.emplace_back(row.begin(), row.begin() + s);
  }
  r.smith_ = smith_mod(std::move(P), s, e);
  for (int i = 0; i < s; ++i)
    if (r.smith_.factors[i] > 1) {
      r.columns_.push_back(i);
      r.factors_.push_back(r.smith_.factors[i]);
    }
  for (size_t i = 0; i < r.factors_.size(); ++i) {
    IntVec unit(r.factors_.size(), 0);
    unit[i] = 1;
    r.reps_.push_back(r.element(unit));
  }
  return r;
}

CohomologyResult cohomology(int n, const GroupTable& G, const Subgroup& L, const ActionModule& A, std::int64_t budget) {
  return cohomology(n, RelativeComplex(G, L, A, budget));
}

std::optional<Cochain> solve_coboundary(const RelativeComplex& C, const Cochain& c) {
  if (c.degree != 2) throw Error(ErrorCode::DegreeTooHigh, "coboundary solving expects a 2-cochain");
  if (!differential(C.group(), C.module(), c).is_zero()) throw Error(ErrorCode::NotACocycle, "obstruction table is not a cocycle");
  const IntVec v = C.to_coordinates(c);
  const auto x = C.differential_map(1).preimage(v);
  if (!x) return std::nullopt;
  return C.from_coordinates(1, *x);
}

std::optional<Cochain> solve_coboundary(const GroupTable& G, const Subgroup& L, const ActionModule& A, const Cochain& c) {
  return solve_coboundary(RelativeComplex(G, L, A), c);
}

std::vector<Cochain> h1_representatives(const GroupTable& G, const Subgroup& L, const ActionModule& A, std::int64_t budget) {
  return cohomology(1, G, L, A, budget).all_classes();
}

namespace {

// Homomorphism between two finite abelian groups given by class coordinates.
ModularMap class_map(const CohomologyResult& from, const CohomologyResult& to, const std::function<Cochain(const Cochain&)>& push) {
  std::vector<IntVec> cols;
  for (const auto& rep : from.representatives()) cols.push_back(to.classify(push(rep)));
  return ModularMap(from.invariant_factors(), to.invariant_factors(), cols);
}

bool same_subgroup(const ModularLattice& a, const ModularLattice& b) { return a == b; }

}  // namespace

bool LesReport::passed() const {
  return exact_at_H1_rel && exact_at_H1_G && exact_at_H1_L && exact_at_H2_rel && exact_at_H2_G && compare_first &&
         compare_second && (!quotient_checked || (h1_inflation_iso && h2_inflation_injective)) &&
         (!perfect_checked || perfect_consequences);
}

std::string LesReport::failures() const {
  std::string out;
  auto note = [&](bool ok, const char* name) {
    if (!ok) out += std::string(out.empty() ? "" : ", ") + name;
  };
  note(exact_at_H1_rel, "exactness at H1(G,L)");
  note(exact_at_H1_G, "exactness at H1(G)");
  note(exact_at_H1_L, "exactness at H1(L)");
  note(exact_at_H2_rel, "exactness at H2(G,L)");
  note(exact_at_H2_G, "exactness at H2(G)");
  note(compare_first, "H1(L) vanishing criterion");
  note(compare_second, "injectivity criterion via Z1 restriction");
  if (quotient_checked) {
    note(h1_inflation_iso, "H1 inflation isomorphism");
    note(h2_inflation_injective, "H2 inflation injectivity");
  }
  if (perfect_checked) note(perfect_consequences, "perfect subgroup consequences");
  return out;
}

LesReport les_check(const GroupTable& G, const Subgroup& L, const ActionModule& A, std::int64_t budget) {
  LesReport rep;
  const GroupTable LT = subgroup_table(G, L);
  const ActionModule AL = restrict_module(A, L);
  const RelativeComplex C_rel(G, L, A, budget);
  const RelativeComplex C_G(G, trivial_subgroup(G), A, budget);
  const RelativeComplex C_L(LT, trivial_subgroup(LT), AL, budget);
  const auto h1_rel = cohomology(1, C_rel), h1_G = cohomology(1, C_G), h1_L = cohomology(1, C_L);
  const auto h2_rel = cohomology(2, C_rel), h2_G = cohomology(2, C_G), h2_L = cohomology(2, C_L);
  rep.h1_rel = h1_rel.order();
  rep.h1_G = h1_G.order();
  rep.h1_L = h1_L.order();
  rep.h2_rel = h2_rel.order();
  rep.h2_G = h2_G.order();
  rep.h2_L = h2_L.order();

  auto identity = [](const Cochain& c) {
    Cochain d = c;
    d.relative = false;
    return d;
  };
  auto restrict = [&](const Cochain& c) { return restrict_cochain(c, L); };
  auto connecting = [&](const Cochain& z) { return differential(G, A, extend_by_zero(z, L)); };

  const ModularMap i1 = class_map(h1_rel, h1_G, identity);
  const ModularMap r1 = class_map(h1_G, h1_L, restrict);
  const ModularMap d1 = class_map(h1_L, h2_rel, connecting);
  const ModularMap i2 = class_map(h2_rel, h2_G, identity);
  const ModularMap r2 = class_map(h2_G, h2_L, restrict);

  rep.exact_at_H1_rel = i1.kernel().order() == 1;
  rep.exact_at_H1_G = same_subgroup(i1.image(), r1.kernel());
  rep.exact_at_H1_L = same_subgroup(r1.image(), d1.kernel());
  rep.exact_at_H2_rel = same_subgroup(d1.image(), i2.kernel());
  rep.exact_at_H2_G = same_subgroup(i2.image(), r2.kernel());

  const bool i1_onto = i1.image().order() == h1_G.order();
  const bool i2_injective = i2.kernel().order() == 1;
  rep.compare_first = (h1_L.order() == 1) == (i1_onto && i2_injective);

  ModularLattice restricted(C_L.coordinate_moduli(1));
  for (const IntVec& z : C_G.cocycles(1).generators())
    restricted.insert(C_L.to_coordinates(restrict_cochain(C_G.from_coordinates(1, z), L)));
  const bool z1_onto = restricted.order() == C_L.cocycles(1).order();
  rep.compare_second = i2_injective == z1_onto;

  if (is_normal(G, L) && acts_trivially_on(A, L)) {
    rep.quotient_checked = true;
    const QuotientGroup Q = quotient_group(G, L);
    const RelativeComplex C_Q(Q.group, trivial_subgroup(Q.group), quotient_module(A, Q), budget);
    const auto h1_Q = cohomology(1, C_Q), h2_Q = cohomology(2, C_Q);
    rep.h1_quotient = h1_Q.order();
    rep.h2_quotient = h2_Q.order();
    auto inf = [&](const Cochain& c) { return inflate(c, Q); };
    const ModularMap f1 = class_map(h1_Q, h1_rel, inf);
    const ModularMap f2 = class_map(h2_Q, h2_rel, inf);
    rep.h1_inflation_iso = f1.kernel().order() == 1 && f1.image().order() == h1_rel.order();
    rep.h2_inflation_injective = f2.kernel().order() == 1;
  }

  if (commutator_subgroup(LT).order() == LT.order()) {
    rep.perfect_checked = true;
    rep.perfect_consequences = i1_onto && i2_injective;
  }
  return rep;
}

}  // namespace gstab
