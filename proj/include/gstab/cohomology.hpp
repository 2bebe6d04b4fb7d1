#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gstab/group.hpp"
#include "gstab/integer.hpp"
#include "gstab/lattice.hpp"

namespace gstab {

/// Z/d_1 + ... + Z/d_k with G acting by integer matrices; action[g] is
/// row-major, a vector a maps to action[g] * a.
struct ActionModule {
  IntVec factors;
  std::vector<std::vector<IntVec>> action;

  int rank() const { return static_cast<int>(factors.size()); }
  IntVec act(Element g, const IntVec& a) const;
  IntVec add(const IntVec& a, const IntVec& b) const;
  IntVec sub(const IntVec& a, const IntVec& b) const;
  IntVec neg(const IntVec& a) const;
  IntVec reduce(IntVec a) const;
  bool is_zero(const IntVec& a) const;
  std::int64_t exponent() const;
  BigInt order() const;
  bool operator==(const ActionModule&) const = default;
};

ActionModule trivial_module(IntVec factors, int group_order);
/// Checks identity, composition and well-definedness of every matrix (IllDefinedAction).
void validate_module(const GroupTable& G, const ActionModule& A);
bool acts_trivially_on(const ActionModule& A, const Subgroup& L);
/// The module restricted to L, indexed like L.elements().
ActionModule restrict_module(const ActionModule& A, const Subgroup& L);
/// The induced G/L-module; DomainViolation unless L acts trivially.
ActionModule quotient_module(const ActionModule& A, const QuotientGroup& Q);

/// A function G^n -> A stored densely; tuple (g1, ..., gn) lives at index
/// ((g1 |G| + g2) |G| + ...) and each value occupies rank consecutive slots.
struct Cochain {
  int degree = 0;
  int group_order = 0;
  int rank = 0;
  bool relative = false;
  std::vector<std::int64_t> values;

  static Cochain zero(int degree, int group_order, int rank, bool relative = false);
  std::int64_t tuple_count() const;
  std::int64_t tuple_index(std::span<const Element> tuple) const;
  IntVec at(std::int64_t tuple) const;
  void set(std::int64_t tuple, const IntVec& a);

  IntVec operator()() const { return at(0); }
  IntVec operator()(Element g) const { return at(g); }
  IntVec operator()(Element g, Element h) const { return at(static_cast<std::int64_t>(g) * group_order + h); }
  IntVec operator()(Element g, Element h, Element k) const {
    return at((static_cast<std::int64_t>(g) * group_order + h) * group_order + k);
  }
  bool is_zero() const;
  bool operator==(const Cochain& o) const { return degree == o.degree && group_order == o.group_order && values == o.values; }
};

/// Standard inhomogeneous differential; DegreeTooHigh for degree > 2.
Cochain differential(const GroupTable& G, const ActionModule& A, const Cochain& c);
Cochain add(const ActionModule& A, const Cochain& a, const Cochain& b);
Cochain sub(const ActionModule& A, const Cochain& a, const Cochain& b);
Cochain scale(const ActionModule& A, const Cochain& a, std::int64_t k);
/// True when c vanishes on L^n (and, for degree 0, lies in A^L).
bool is_relative(const GroupTable& G, const Subgroup& L, const ActionModule& A, const Cochain& c);
bool is_normalized(const GroupTable& G, const Cochain& c);
/// c restricted to L^n, as a cochain of subgroup_table(G, L).
Cochain restrict_cochain(const Cochain& c, const Subgroup& L);
/// Extension of a cochain on L (indexed by L positions) by zero to G.
Cochain extend_by_zero(const Cochain& c, const Subgroup& L);

constexpr std::int64_t kDefaultCochainBudget = std::int64_t{1} << 16;

/// The normalized relative complex C(G, L; A) in coordinates: a degree-n
/// cochain (n >= 1) is determined by its values on the tuples with no
/// identity entry and not lying entirely in L.
class RelativeComplex {
 public:
  RelativeComplex(const GroupTable& G, const Subgroup& L, ActionModule A, std::int64_t budget = kDefaultCochainBudget);

  const GroupTable& group() const { return G_; }
  const Subgroup& subgroup() const { return L_; }
  const ActionModule& module() const { return A_; }

  const std::vector<std::int64_t>& free_tuples(int n) const;
  IntVec coordinate_moduli(int n) const;
  /// DomainViolation if c is nonzero off the free tuples.
  IntVec to_coordinates(const Cochain& c) const;
  Cochain from_coordinates(int n, const IntVec& v) const;

  /// d: C^n -> C^{n+1} for n = 1, 2 in coordinates.
  ModularMap differential_map(int n) const;
  /// B^n for n = 1, 2.
  ModularLattice coboundaries(int n) const;
  /// Z^n for n = 1, 2.
  ModularLattice cocycles(int n) const;
  /// A^L.
  ModularLattice invariants() const;

 private:
  void check_budget(int n) const;

  GroupTable G_;
  Subgroup L_;
  ActionModule A_;
  std::int64_t budget_;
  std::vector<std::vector<std::int64_t>> free_;  // index n = 1..3
  std::vector<std::int64_t> position_[4];        // tuple index -> coordinate block, -1 if not free
};

/// H^n = Z^n / B^n as a sum of cyclic groups with canonical representatives.
class CohomologyResult {
 public:
  int degree() const { return degree_; }
  /// Invariant factors d_1 | d_2 | ..., all > 1.
  const IntVec& invariant_factors() const { return factors_; }
  BigInt order() const;
  BigInt cocycle_count() const { return z_order_; }
  BigInt coboundary_count() const { return b_order_; }
  /// One cocycle per invariant factor, generating H^n.
  const std::vector<Cochain>& representatives() const { return reps_; }

  /// Coordinates of the class of z (NotACocycle if z is not in Z^n).
  IntVec classify(const Cochain& z) const;
  bool is_coboundary(const Cochain& z) const;
  /// The canonical cocycle of the class with the given coordinates.
  Cochain element(const IntVec& coords) const;
  /// Every class, the zero class first; BudgetExceeded above the limit.
  std::vector<Cochain> all_classes(std::int64_t limit = 1 << 16) const;

  friend CohomologyResult cohomology(int n, const RelativeComplex& C);

 private:
  int degree_ = 0;
  IntVec factors_;
  BigInt z_order_, b_order_;
  std::vector<Cochain> reps_;
  std::shared_ptr<const RelativeComplex> complex_;
  ModularLattice Z_, B_;
  std::vector<IntVec> z_rows_;               // Z generators in coordinates
  std::shared_ptr<const ModularMap> phi_;    // (Z/e)^N -> C^n coordinates
  ModularSmith smith_;
  std::vector<int> columns_;                 // Smith columns with factor > 1
};

/// DegreeTooHigh unless n is 1 or 2.
CohomologyResult cohomology(int n, const RelativeComplex& C);
CohomologyResult cohomology(int n, const GroupTable& G, const Subgroup& L, const ActionModule& A,
                            std::int64_t budget = kDefaultCochainBudget);

/// Relative 1-cochain alpha with d(alpha) = c, or nullopt when [c] != 0.
/// NotACocycle when dc != 0.
std::optional<Cochain> solve_coboundary(const RelativeComplex& C, const Cochain& c);
std::optional<Cochain> solve_coboundary(const GroupTable& G, const Subgroup& L, const ActionModule& A, const Cochain& c);

/// One cocycle per class of H^1(G, L; A), the zero cocycle first.
std::vector<Cochain> h1_representatives(const GroupTable& G, const Subgroup& L, const ActionModule& A,
                                        std::int64_t budget = kDefaultCochainBudget);

/// inf(c)(g1, ..., gn) = c(g1 L, ..., gn L).
Cochain inflate(const Cochain& c, const QuotientGroup& Q);

struct LesReport {
  // Exactness of 0 -> H1(G,L) -> H1(G) -> H1(L) -> H2(G,L) -> H2(G) -> H2(L).
  bool exact_at_H1_rel = false;
  bool exact_at_H1_G = false;
  bool exact_at_H1_L = false;
  bool exact_at_H2_rel = false;
  bool exact_at_H2_G = false;
  // H1(L) = 0  <=>  H1(G,L) -> H1(G) onto and H2(G,L) -> H2(G) injective.
  bool compare_first = false;
  // H2(G,L) -> H2(G) injective  <=>  Z1(G) -> Z1(L) onto.
  bool compare_second = false;
  // Only when L is normal and acts trivially.
  bool quotient_checked = false;
  bool h1_inflation_iso = false;
  bool h2_inflation_injective = false;
  // Only when L is perfect.
  bool perfect_checked = false;
  bool perfect_consequences = false;

  BigInt h1_rel, h1_G, h1_L, h2_rel, h2_G, h2_L;
  BigInt h1_quotient, h2_quotient;

  bool passed() const;
  std::string failures() const;
};

LesReport les_check(const GroupTable& G, const Subgroup& L, const ActionModule& A,
                    std::int64_t budget = kDefaultCochainBudget);

}  // namespace gstab
