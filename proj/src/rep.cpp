#include "gstab/rep.hpp"

#include <limits>
#include <random>
#include <string>

#include "gstab/error.hpp"

namespace gstab {

const FqMatrix& Representation::operator()(Element l) const {
  const int i = subgroup.index_of(l);
  if (i < 0) throw Error(ErrorCode::DomainViolation, "element " + std::to_string(l) + " is outside the represented subgroup");
  return images[i];
}

namespace {

void check_square(const Field& F, int dim, const FqMatrix& m) {
  if (m.rows() != dim || m.cols() != dim) throw Error(ErrorCode::ShapeMismatch, "representation matrices must be " + std::to_string(dim) + "x" + std::to_string(dim));
  for (Fq x : m.data())
    if (x >= static_cast<Fq>(F.q())) throw Error(ErrorCode::DomainViolation, "matrix entry outside the field");
}

}  // namespace

Representation make_representation(const GroupTable& G, const Subgroup& L, const Field& F, std::vector<FqMatrix> images) {
  if (static_cast<int>(images.size()) != L.order()) throw Error(ErrorCode::ShapeMismatch, "one matrix per subgroup element expected");
  const int n = images.empty() ? 0 : images[0].rows();
  for (const auto& m : images) check_square(F, n, m);
  if (!images[L.index_of(G.identity())].is_identity()) throw Error(ErrorCode::DomainViolation, "the identity must act as the identity matrix");
  for (Element a : L.elements())
    for (Element b : L.elements())
      if (images[L.index_of(a)] * images[L.index_of(b)] != images[L.index_of(G.mul(a, b))])
        throw Error(ErrorCode::DomainViolation, "not a homomorphism at the pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  return Representation{L, F, n, std::move(images)};
}

Representation representation_from_generators(const GroupTable& G, const Subgroup& L, const Field& F, int dim,
                                              const std::vector<std::pair<Element, FqMatrix>>& generators) {
  std::vector<std::optional<FqMatrix>> img(L.order());
  for (const auto& [s, m] : generators) {
    if (!L.contains(s)) throw Error(ErrorCode::DomainViolation, "element " + std::to_string(s) + " is not in the subgroup");
    check_square(F, dim, m);
    if (!is_invertible(m)) throw Error(ErrorCode::DomainViolation, "matrix for element " + std::to_string(s) + " is singular");
  }
  img[L.index_of(G.identity())] = FqMatrix::identity(F, dim);
  std::vector<Element> frontier{G.identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (const auto& [s, m] : generators) {
        const Element y = G.mul(x, s);
        FqMatrix value = *img[L.index_of(x)] * m;
        auto& slot = img[L.index_of(y)];
        if (!slot) {
          slot = std::move(value);
          next.push_back(y);
        } else if (*slot != value) {
          throw Error(ErrorCode::DomainViolation, "generator images do not define a homomorphism (conflict at element " + std::to_string(y) + ")");
        }
      }
    frontier = std::move(next);
  }
  std::vector<FqMatrix> images;
  for (int i = 0; i < L.order(); ++i) {
    if (!img[i]) throw Error(ErrorCode::DomainViolation, "the given elements do not generate the subgroup");
    images.push_back(std::move(*img[i]));
  }
  return make_representation(G, L, F, std::move(images));
}

Representation trivial_representation(const Subgroup& L, const Field& F, int dim) {
  return Representation{L, F, dim, std::vector<FqMatrix>(L.order(), FqMatrix::identity(F, dim))};
}

Representation restrict_to(const Representation& theta, const Subgroup& K) {
  std::vector<FqMatrix> images;
  for (Element k : K.elements()) images.push_back(theta(k));
  return Representation{K, theta.field, theta.dim, std::move(images)};
}

Representation twist(const GroupTable& G, const Representation& theta, Element x) {
  const Subgroup& L = theta.subgroup;
  std::vector<FqMatrix> images;
  for (Element l : L.elements()) {
    const Element c = G.conjugate(x, l);
    if (!L.contains(c)) throw Error(ErrorCode::DomainViolation, "element " + std::to_string(x) + " does not normalize the subgroup");
    images.push_back(theta(c));
  }
  return Representation{L, theta.field, theta.dim, std::move(images)};
}

Representation twist_restricted(const GroupTable& G, const Representation& theta, Element x) {
  const Subgroup& L = theta.subgroup;
  std::vector<Element> domain;
  for (Element l : L.elements())
    if (L.contains(G.conjugate(x, l))) domain.push_back(l);
  Subgroup K = make_subgroup(G, domain);
  std::vector<FqMatrix> images;
  for (Element l : K.elements()) images.push_back(theta(G.conjugate(x, l)));
  return Representation{K, theta.field, theta.dim, std::move(images)};
}

namespace {

// Rows of the linear system T A - B T = 0 in the n^2 unknowns T_ij (index i*n+j).
void append_intertwining_equations(const Field& F, int n, const FqMatrix& A, const FqMatrix& B, std::vector<std::vector<Fq>>& rows) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Fq> row(n * n, 0);
      for (int k = 0; k < n; ++k) {
        row[i * n + k] = F.add(row[i * n + k], A(k, j));
        row[k * n + j] = F.sub(row[k * n + j], B(i, k));
      }
      rows.push_back(std::move(row));
    }
}

std::vector<FqMatrix> solve_intertwiners(const Field& F, int n, const std::vector<std::pair<FqMatrix, FqMatrix>>& pairs) {
  std::vector<std::vector<Fq>> rows;
  for (const auto& [A, B] : pairs)
    if (!(A.is_identity() && B.is_identity())) append_intertwining_equations(F, n, A, B, rows);
  std::vector<FqMatrix> basis;
  if (rows.empty()) {
    for (int i = 0; i < n * n; ++i) {
      FqMatrix e(F, n, n);
      e(i / n, i % n) = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  FqMatrix M = FqMatrix::from_rows(F, rows);
  for (const FqMatrix& v : nullspace(M)) {
    FqMatrix t(F, n, n);
    for (int i = 0; i < n * n; ++i) t(i / n, i % n) = v(i, 0);
    basis.push_back(std::move(t));
  }
  return basis;
}

std::int64_t saturating_power(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / base) return std::numeric_limits<std::int64_t>::max();
    r *= base;
  }
  return r;
}

FqMatrix combination_from_index(const Field& F, int n, const std::vector<FqMatrix>& basis, std::int64_t t) {
  FqMatrix m(F, n, n);
  for (const FqMatrix& b : basis) {
    const Fq c = static_cast<Fq>(t % F.q());
    t /= F.q();
    if (c != 0) m += c * b;
  }
  return m;
}

}  // namespace

std::vector<FqMatrix> intertwiner_space(const Representation& a, const Representation& b) {
  if (!(a.subgroup == b.subgroup) || a.dim != b.dim || !(a.field == b.field))
    throw Error(ErrorCode::ShapeMismatch, "intertwiners need representations of one subgroup with equal dimension and field");
  std::vector<std::pair<FqMatrix, FqMatrix>> pairs;
  for (size_t i = 0; i < a.images.size(); ++i) pairs.emplace_back(a.images[i], b.images[i]);
  return solve_intertwiners(a.field, a.dim, pairs);
}

std::optional<FqMatrix> find_isomorphism(const Representation& a, const Representation& b) {
  if (a == b) return FqMatrix::identity(a.field, a.dim);
  const auto basis = intertwiner_space(a, b);
  if (basis.empty()) return std::nullopt;
  const Field& F = a.field;
  const std::int64_t size = saturating_power(F.q(), static_cast<int>(basis.size()));
  constexpr std::int64_t kScanLimit = std::int64_t{1} << 16;
  if (size <= kScanLimit) {
    for (std::int64_t t = 1; t < size; ++t) {
      FqMatrix m = combination_from_index(F, a.dim, basis, t);
      if (is_invertible(m)) return m;
    }
    return std::nullopt;
  }
  // Invertible elements are dense in the space whenever any exists.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Fq> coef(0, static_cast<Fq>(F.q() - 1));
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<Fq> c(basis.size());
    for (auto& x : c) x = coef(rng);
    FqMatrix m = linear_combination(basis, c);
    if (is_invertible(m)) return m;
  }
  if (size <= kDefaultEnumerationBudget * 16) {
    for (std::int64_t t = 1; t < size; ++t) {
      FqMatrix m = combination_from_index(F, a.dim, basis, t);
      if (is_invertible(m)) return m;
    }
  }
  return std::nullopt;
}

Stability check_stability(const GroupTable& G, const Representation& theta) {
  const Subgroup& L = theta.subgroup;
  if (!is_normal(G, L)) throw Error(ErrorCode::NotNormal, "stability witnesses need a normal subgroup");
  const CosetSystem cs = coset_system(G, L);
  std::vector<FqMatrix> at_rep;
  for (Element t : cs.transversal) {
    auto T = find_isomorphism(theta, twist(G, theta, t));
    if (!T) return Stability{{}, t};
    at_rep.push_back(std::move(*T));
  }
  Stability s;
  s.witness.reserve(G.order());
  for (Element x = 0; x < G.order(); ++x) s.witness.push_back(at_rep[cs.coset_of[x]] * theta(cs.subgroup_part(G, x)));
  return s;
}

std::optional<std::vector<FqMatrix>> stability_witness(const GroupTable& G, const Representation& theta) {
  Stability s = check_stability(G, theta);
  if (!s.stable()) return std::nullopt;
  return std::move(s.witness);
}

FqMatrix EndAlgebra::element(std::int64_t t) const { return combination_from_index(field, n, basis, t); }

std::int64_t EndAlgebra::size() const { return saturating_power(field.q(), dim()); }

EndAlgebra endomorphism_algebra(const Representation& theta) {
  return EndAlgebra{theta.field, theta.dim, intertwiner_space(theta, theta)};
}

EndAlgebra commutant(const Field& F, int n, const std::vector<FqMatrix>& mats) {
  std::vector<std::pair<FqMatrix, FqMatrix>> pairs;
  for (const auto& m : mats) pairs.emplace_back(m, m);
  return EndAlgebra{F, n, solve_intertwiners(F, n, pairs)};
}

std::vector<FqMatrix> product_space(const Field& F, int n, const std::vector<FqMatrix>& A, const std::vector<FqMatrix>& B) {
  LinearSpan span(F, n * n);
  for (const auto& a : A)
    for (const auto& b : B) span.add(flatten(a * b));
  std::vector<FqMatrix> out;
  for (const auto& v : span.basis()) out.push_back(unflatten(F, n, n, v));
  return out;
}

namespace {

// Two-sided ideal of E generated by the given matrices.
LinearSpan ideal_closure(const EndAlgebra& E, const std::vector<FqMatrix>& gens) {
  const int n = E.n;
  LinearSpan span(E.field, n * n);
  std::vector<FqMatrix> pending;
  for (const auto& g : gens)
    if (span.add(flatten(g))) pending.push_back(g);
  while (!pending.empty()) {
    std::vector<FqMatrix> next;
    for (const auto& s : pending)
      for (const auto& b : E.basis)
        for (FqMatrix p : {b * s, s * b})
          if (span.add(flatten(p))) next.push_back(std::move(p));
    pending = std::move(next);
  }
  return span;
}

bool is_nilpotent_ideal(const Field& F, int n, const std::vector<FqMatrix>& I) {
  std::vector<FqMatrix> power = I;
  while (!power.empty()) {
    auto next = product_space(F, n, power, I);
    if (next.size() == power.size()) return false;
    power = std::move(next);
  }
  return true;
}

}  // namespace

RadicalData radical_chain(const EndAlgebra& E, std::int64_t budget) {
  const std::int64_t size = E.size();
  if (size > budget)
    throw Error(ErrorCode::BudgetExceeded, "endomorphism algebra has " + std::to_string(E.dim()) + " dimensions over GF(" + std::to_string(E.field.q()) + "), too many elements to enumerate");
  const Field& F = E.field;
  const int n = E.n;
  RadicalData rad;
  LinearSpan J(F, n * n);
  std::vector<FqMatrix> J_basis;
  for (std::int64_t t = 1; t < size; ++t) {
    FqMatrix x = E.element(t);
    if (determinant(x) != 0) {
      ++rad.unit_count;
      continue;
    }
    if (J.contains(flatten(x)) || !is_nilpotent(x)) continue;
    std::vector<FqMatrix> gens = J_basis;
    gens.push_back(x);
    LinearSpan candidate = ideal_closure(E, gens);
    std::vector<FqMatrix> cand_basis;
    for (const auto& v : candidate.basis()) cand_basis.push_back(unflatten(F, n, n, v));
    if (is_nilpotent_ideal(F, n, cand_basis)) {
      J = std::move(candidate);
      J_basis = std::move(cand_basis);
    }
  }
  rad.dim_J = static_cast<int>(J_basis.size());
  std::vector<FqMatrix> power = J_basis;
  while (!power.empty()) {
    rad.powers.push_back(power);
    power = product_space(F, n, power, J_basis);
  }
  rad.nilpotency = static_cast<int>(rad.powers.size()) + 1;
  rad.local = rad.unit_count == size - saturating_power(F.q(), rad.dim_J);
  rad.residue_degree = rad.local ? E.dim() - rad.dim_J : 0;
  return rad;
}

bool is_indecomposable(const Representation& theta, std::int64_t budget) {
  return radical_chain(endomorphism_algebra(theta), budget).local;
}

}  // namespace gstab
