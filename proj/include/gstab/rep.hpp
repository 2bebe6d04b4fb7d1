#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gstab/group.hpp"
#include "gstab/matrix.hpp"

namespace gstab {

/// A representation of a subgroup L over GF(q); images are indexed like
/// subgroup.elements().
struct Representation {
  Subgroup subgroup;
  Field field;
  int dim = 0;
  std::vector<FqMatrix> images;

  const FqMatrix& operator()(Element l) const;
  bool operator==(const Representation& other) const {
    return subgroup == other.subgroup && images == other.images;
  }
};

/// Checks that images is a homomorphism L -> GL_n(q) (DomainViolation otherwise).
Representation make_representation(const GroupTable& G, const Subgroup& L, const Field& F, std::vector<FqMatrix> images);
/// Extends generator images to all of L, rejecting inconsistent data.
Representation representation_from_generators(const GroupTable& G, const Subgroup& L, const Field& F, int dim,
                                              const std::vector<std::pair<Element, FqMatrix>>& generators);
Representation trivial_representation(const Subgroup& L, const Field& F, int dim);
Representation restrict_to(const Representation& theta, const Subgroup& K);

/// theta^x(l) = theta(x l x^-1). Throws DomainViolation if x does not normalize L.
Representation twist(const GroupTable& G, const Representation& theta, Element x);
/// The same twist on its natural domain L cap x^-1 L x.
Representation twist_restricted(const GroupTable& G, const Representation& theta, Element x);

/// Basis of {T : T a(l) = b(l) T for all l}.
std::vector<FqMatrix> intertwiner_space(const Representation& a, const Representation& b);
/// An invertible intertwiner a -> b if one exists.
std::optional<FqMatrix> find_isomorphism(const Representation& a, const Representation& b);

struct Stability {
  /// f: G -> GL_n(q), normalized so that f(t l) = f(t) theta(l); empty when unstable.
  std::vector<FqMatrix> witness;
  /// Some x with theta^x not isomorphic to theta, or -1.
  Element failing = -1;
  bool stable() const { return failing < 0; }
};

/// L must be normal in G (NotNormal otherwise).
Stability check_stability(const GroupTable& G, const Representation& theta);
std::optional<std::vector<FqMatrix>> stability_witness(const GroupTable& G, const Representation& theta);

struct EndAlgebra {
  Field field;
  int n = 0;
  std::vector<FqMatrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  /// Element number t of the canonical enumeration: digits of t in base q,
  /// least significant first, as coefficients on the basis.
  FqMatrix element(std::int64_t t) const;
  std::int64_t size() const;  // q^dim, saturating at INT64_MAX
};

EndAlgebra endomorphism_algebra(const Representation& theta);
/// The commutant of an arbitrary set of n x n matrices.
EndAlgebra commutant(const Field& F, int n, const std::vector<FqMatrix>& mats);

constexpr std::int64_t kDefaultEnumerationBudget = std::int64_t{1} << 20;

struct RadicalData {
  /// powers[m-1] is a basis of J^m, for m = 1 .. nilpotency-1 (J^nilpotency = 0).
  std::vector<std::vector<FqMatrix>> powers;
  int nilpotency = 1;
  int dim_J = 0;
  bool local = false;
  int residue_degree = 0;  // r with E/J = GF(q^r) when local
  std::int64_t unit_count = 0;
};

/// Jacobson radical by enumeration of E (BudgetExceeded if q^dim E > budget).
RadicalData radical_chain(const EndAlgebra& E, std::int64_t budget = kDefaultEnumerationBudget);
bool is_indecomposable(const Representation& theta, std::int64_t budget = kDefaultEnumerationBudget);

/// Basis of the product space span{a b : a in A, b in B}.
std::vector<FqMatrix> product_space(const Field& F, int n, const std::vector<FqMatrix>& A, const std::vector<FqMatrix>& B);

}  // namespace gstab
