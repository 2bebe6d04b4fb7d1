#include "gstab/chain.hpp"

#include <string>
#include <unordered_set>

#include "gstab/error.hpp"

namespace gstab {

const char* to_string(Series s) { return s == Series::Radical ? "radical" : "derived"; }

namespace {

using MatrixSet = std::unordered_set<FqMatrix, FqMatrixHash>;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

FqMatrix conjugate_by(const FqMatrix& x, const FqMatrix& h, const FqMatrix& x_inv) { return x * h * x_inv; }

std::int64_t matrix_order(const FqMatrix& x) {
  std::int64_t k = 1;
  FqMatrix y = x;
  while (!y.is_identity()) {
    y = y * x;
    ++k;
  }
  return k;
}

// Subgroup generated by gens, in breadth-first discovery order.
std::vector<FqMatrix> generated(const Field& F, int n, const std::vector<FqMatrix>& gens, MatrixSet& seen) {
  seen.clear();
  std::vector<FqMatrix> all{FqMatrix::identity(F, n)};
  seen.insert(all[0]);
  for (size_t i = 0; i < all.size(); ++i)
    for (const auto& g : gens) {
      FqMatrix y = all[i] * g;
      if (seen.insert(y).second) all.push_back(std::move(y));
    }
  return all;
}

std::vector<FqMatrix> greedy_generators(const Field& F, int n, const std::vector<FqMatrix>& H) {
  std::vector<FqMatrix> gens;
  MatrixSet span;
  generated(F, n, gens, span);
  for (const auto& x : H)
    if (!span.count(x)) {
      gens.push_back(x);
      generated(F, n, gens, span);
    }
  return gens;
}

std::vector<FqMatrix> derived_subgroup(const Field& F, int n, const std::vector<FqMatrix>& gens) {
  std::vector<FqMatrix> T;
  std::vector<FqMatrix> inverses;
  for (const auto& g : gens) inverses.push_back(inv(g));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      FqMatrix c = gens[i] * gens[j] * inverses[i] * inverses[j];
      if (!c.is_identity()) T.push_back(std::move(c));
    }
  MatrixSet span;
  std::vector<FqMatrix> all = generated(F, n, T, span);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t c = 0; c < gens.size() && !changed; ++c)
      for (size_t t = 0; t < T.size(); ++t) {
        FqMatrix y = conjugate_by(gens[c], T[t], inverses[c]);
        if (!span.count(y)) {
          T.push_back(std::move(y));
          all = generated(F, n, T, span);
          changed = true;
          break;
        }
      }
  }
  return all;
}

}  // namespace

std::int64_t AutChain::residue_code(const FqMatrix& h) const {
  const Quotient& q1 = quotients_[0];
  auto c = q1.adapted->coordinates(flatten(h));
  if (!c) throw Error(ErrorCode::DefectEscapesLevel, "matrix is not an endomorphism of the module");
  std::int64_t code = 0;
  for (int i = static_cast<int>(c->size()) - 1; i >= q1.lower_count; --i) code = code * field().q() + (*c)[i];
  return code;
}

bool AutChain::contains(int level, const FqMatrix& h) const {
  if (series_ == Series::Derived) {
    if (level >= static_cast<int>(levels_.size())) return h.is_identity();
    return level_sets_[level]->count(h) > 0;
  }
  if (level == 0) return E_span_->contains(flatten(h)) && determinant(h) != 0;
  if (level >= radical_.nilpotency) return h.is_identity();
  return power_spans_[level]->contains(flatten(h - FqMatrix::identity(field(), n())));
}

IntVec AutChain::project(int m, const FqMatrix& h) const {
  if (m < 1 || m > length()) throw Error(ErrorCode::DomainViolation, "no quotient at level " + std::to_string(m));
  const Quotient& Q = quotients_[m - 1];
  if (series_ == Series::Derived) {
    auto it = Q.coords->find(h);
    if (it == Q.coords->end()) throw Error(ErrorCode::DefectEscapesLevel, "element is not in level " + std::to_string(m - 1));
    IntVec out;
    for (size_t j = 0; j < Q.columns.size(); ++j) {
      BigInt s = 0;
      for (size_t i = 0; i < it->second.size(); ++i) s += BigInt(it->second[i]) * Q.V[i][Q.columns[j]];
      BigInt r = s % Q.factors[j];
      if (r < 0) r += Q.factors[j];
      out.push_back(static_cast<std::int64_t>(r));
    }
    return out;
  }
  if (m == 1) {
    if (!contains(0, h)) throw Error(ErrorCode::DefectEscapesLevel, "matrix is not an automorphism of the module");
    if (Q.factors.empty()) return {};
    return {unit_log_[residue_code(h)]};
  }
  auto c = Q.adapted->coordinates(flatten(h - FqMatrix::identity(field(), n())));
  if (!c) throw Error(ErrorCode::DefectEscapesLevel, "element is not in level " + std::to_string(m - 1));
  const int e = field().e();
  IntVec out;
  for (size_t i = Q.lower_count; i < c->size(); ++i)
    for (int d = 0; d < e; ++d) out.push_back(field().coefficient((*c)[i], d));
  return out;
}

FqMatrix AutChain::section(int m, const IntVec& a) const {
  if (m < 1 || m > length()) throw Error(ErrorCode::DomainViolation, "no quotient at level " + std::to_string(m));
  const Quotient& Q = quotients_[m - 1];
  if (a.size() != Q.factors.size()) throw Error(ErrorCode::ShapeMismatch, "quotient element has the wrong length");
  const Field& F = field();
  FqMatrix out = FqMatrix::identity(F, n());
  if (series_ == Series::Derived) {
    const size_t s = Q.gens.size();
    for (size_t i = 0; i < s; ++i) {
      BigInt x = 0;
      for (size_t j = 0; j < Q.columns.size(); ++j) x += BigInt(a[j]) * Q.V_inv[Q.columns[j]][i];
      BigInt r = x % Q.gen_orders[i];
      if (r < 0) r += Q.gen_orders[i];
      out = out * power(Q.gens[i], static_cast<long long>(r));
    }
    return out;
  }
  if (m == 1) return Q.factors.empty() ? out : power(unit_, mod(a[0], Q.factors[0]));
  const int e = F.e();
  for (size_t i = 0; i < Q.complement.size(); ++i) {
    std::vector<int> digits(a.begin() + i * e, a.begin() + (i + 1) * e);
    const Fq c = F.from_coefficients(digits);
    if (c != 0) out += c * Q.complement[i];
  }
  return out;
}

BigInt AutChain::order(int level) const {
  if (series_ == Series::Derived) return level < static_cast<int>(levels_.size()) ? BigInt(levels_[level].size()) : BigInt(1);
  const BigInt q = field().q();
  if (level == 0) return BigInt(ipow(field().q(), residue_degree()) - 1) * pow(q, radical_.dim_J);
  if (level >= radical_.nilpotency) return 1;
  return pow(q, static_cast<unsigned>(radical_.powers[level - 1].size()));
}

std::vector<FqMatrix> AutChain::elements(int level) const {
  if (series_ == Series::Derived) {
    if (level < static_cast<int>(levels_.size())) return levels_[level];
    return {FqMatrix::identity(field(), n())};
  }
  const Field& F = field();
  const FqMatrix I = FqMatrix::identity(F, n());
  const std::vector<FqMatrix> empty;
  const auto& basis = level == 0 ? (radical_.powers.empty() ? empty : radical_.powers[0])
                      : level < radical_.nilpotency ? radical_.powers[level - 1]
                                                    : empty;
  const EndAlgebra J{F, n(), basis};
  std::vector<FqMatrix> out;
  const std::int64_t size = J.size();
  if (level >= 1) {
    for (std::int64_t t = 0; t < size; ++t) out.push_back(I + J.element(t));
    return out;
  }
  const std::int64_t N = ipow(F.q(), residue_degree()) - 1;
  FqMatrix u = I;
  for (std::int64_t i = 0; i < N; ++i) {
    for (std::int64_t t = 0; t < size; ++t) out.push_back(u * (I + J.element(t)));
    u = u * unit_;
  }
  return out;
}

bool AutChain::stable_under(const FqMatrix& x) const {
  const auto xi = inverse(x);
  if (!xi) return false;
  if (series_ == Series::Derived) {
    for (const auto& g : top_generators_)
      if (!level_sets_[0]->count(conjugate_by(x, g, *xi))) return false;
    return true;
  }
  for (const auto& b : E_.basis)
    if (!E_span_->contains(flatten(conjugate_by(x, b, *xi)))) return false;
  return true;
}

AutChain radical_series(const EndAlgebra& E, std::int64_t budget) {
  AutChain c;
  c.series_ = Series::Radical;
  c.E_ = E;
  c.radical_ = radical_chain(E, budget);
  if (!c.radical_.local) throw Error(ErrorCode::NotIndecomposable, "the endomorphism algebra is not local; use the derived series");
  const Field& F = E.field;
  const int n = E.n;
  const RadicalData& rad = c.radical_;
  c.E_span_ = std::make_shared<LinearSpan>(matrix_span(F, n, E.basis));
  c.power_spans_.resize(rad.nilpotency);
  for (int m = 1; m < rad.nilpotency; ++m)
    c.power_spans_[m] = std::make_shared<LinearSpan>(matrix_span(F, n, rad.powers[m - 1]));

  auto adapted = [&](const std::vector<FqMatrix>& lower, const std::vector<FqMatrix>& upper, AutChain::Quotient& Q) {
    Q.adapted = std::make_shared<LinearSpan>(F, n * n);
    for (const auto& b : lower) Q.adapted->add(flatten(b));
    Q.lower_count = Q.adapted->size();
    for (const auto& b : upper)
      if (Q.adapted->add(flatten(b))) Q.complement.push_back(b);
  };

  // Q_1 = (E/J)^x, cyclic of order q^r - 1.
  AutChain::Quotient q1;
  adapted(rad.powers.empty() ? std::vector<FqMatrix>{} : rad.powers[0], E.basis, q1);
  const std::int64_t N = ipow(F.q(), rad.residue_degree) - 1;
  c.quotients_.push_back(q1);
  c.unit_ = FqMatrix::identity(F, n);
  if (N > 1) {
    const auto primes = prime_factors(N);
    auto in_H1 = [&](const FqMatrix& x) { return c.contains(1, x); };
    bool found = false;
    for (std::int64_t t = 1; t < E.size() && !found; ++t) {
      FqMatrix x = E.element(t);
      if (determinant(x) == 0) continue;
      bool generates = true;
      for (std::int64_t p : primes)
        if (in_H1(power(x, N / p))) {
          generates = false;
          break;
        }
      if (generates) {
        c.unit_ = std::move(x);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::NotIndecomposable, "no generator of the residue field units");
    c.unit_log_.assign(ipow(F.q(), rad.residue_degree), -1);
    FqMatrix u = FqMatrix::identity(F, n);
    for (std::int64_t i = 0; i < N; ++i) {
      c.unit_log_[c.residue_code(u)] = i;
      u = u * c.unit_;
    }
    c.quotients_[0].factors = {N};
  }

  // Q_{m+1} = J^m / J^{m+1}, elementary abelian.
  for (int m = 1; m < rad.nilpotency; ++m) {
    AutChain::Quotient Q;
    const std::vector<FqMatrix> lower = m < static_cast<int>(rad.powers.size()) ? rad.powers[m] : std::vector<FqMatrix>{};
    adapted(lower, rad.powers[m - 1], Q);
    Q.factors.assign(Q.complement.size() * F.e(), F.p());
    c.quotients_.push_back(std::move(Q));
  }
  return c;
}

AutChain derived_series(const EndAlgebra& E, std::int64_t budget) {
  AutChain c;
  c.series_ = Series::Derived;
  c.E_ = E;
  const Field& F = E.field;
  const int n = E.n;
  const std::int64_t size = E.size();
  if (size > budget) throw Error(ErrorCode::BudgetExceeded, "too many endomorphisms to enumerate the unit group");
  std::vector<FqMatrix> H0;
  for (std::int64_t t = 1; t < size; ++t) {
    FqMatrix x = E.element(t);
    if (determinant(x) != 0) H0.push_back(std::move(x));
  }
  c.E_span_ = std::make_shared<LinearSpan>(matrix_span(F, n, E.basis));
  c.levels_.push_back(std::move(H0));
  while (c.levels_.back().size() > 1) {
    const auto gens = greedy_generators(F, n, c.levels_.back());
    if (c.levels_.size() == 1) c.top_generators_ = gens;
    auto D = derived_subgroup(F, n, gens);
    if (D.size() == c.levels_.back().size())
      throw Error(ErrorCode::NotSoluble, "the automorphism group is not soluble (derived series stalls at order " + std::to_string(D.size()) + ")");
    c.levels_.push_back(std::move(D));
  }
  for (const auto& level : c.levels_) {
    auto set = std::make_shared<std::unordered_map<FqMatrix, int, FqMatrixHash>>();
    for (size_t i = 0; i < level.size(); ++i) set->emplace(level[i], static_cast<int>(i));
    c.level_sets_.push_back(std::move(set));
  }

  for (size_t j = 0; j + 1 < c.levels_.size(); ++j) {
    AutChain::Quotient Q;
    Q.coords = std::make_shared<std::unordered_map<FqMatrix, IntVec, FqMatrixHash>>();
    auto& coords = *Q.coords;
    for (const auto& h : c.levels_[j + 1]) coords.emplace(h, IntVec{});
    std::vector<std::pair<std::int64_t, IntVec>> relations;
    for (const auto& x : c.levels_[j]) {
      if (coords.count(x)) continue;
      const size_t s = Q.gens.size();
      std::int64_t o = 1;
      FqMatrix y = x;
      while (!coords.count(y)) {
        y = y * x;
        ++o;
      }
      relations.emplace_back(o, coords.at(y));
      std::vector<std::pair<FqMatrix, IntVec>> old(coords.begin(), coords.end());
      FqMatrix xi = x;
      for (std::int64_t i = 1; i < o; ++i) {
        for (const auto& [h, a] : old) {
          IntVec b = a;
          b.resize(s + 1, 0);
          b[s] = i;
          coords.emplace(xi * h, std::move(b));
        }
        xi = xi * x;
      }
      Q.gens.push_back(x);
      Q.gen_orders.push_back(matrix_order(x));
    }
    const int s = static_cast<int>(Q.gens.size());
    for (auto& [h, a] : coords) a.resize(s, 0);
    IntMatrix R(s, s);
    for (int i = 0; i < s; ++i) {
      R(i, i) = relations[i].first;
      for (size_t k = 0; k < relations[i].second.size(); ++k) R(i, k) -= relations[i].second[k];
    }
    const SmithForm sf = smith_normal_form(R);
    Q.V.assign(s, std::vector<BigInt>(s));
    Q.V_inv.assign(s, std::vector<BigInt>(s));
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) {
        Q.V[a][b] = sf.V(a, b);
        Q.V_inv[a][b] = sf.V_inv(a, b);
      }
    for (int i = 0; i < s; ++i)
      if (sf.S(i, i) > 1) {
        Q.columns.push_back(i);
        Q.factors.push_back(static_cast<std::int64_t>(sf.S(i, i)));
      }
    c.quotients_.push_back(std::move(Q));
  }
  return c;
}

AutChain aut_chain(const Representation& theta, Series series, std::int64_t budget) {
  const EndAlgebra E = endomorphism_algebra(theta);
  return series == Series::Radical ? radical_series(E, budget) : derived_series(E, budget);
}

}  // namespace gstab
