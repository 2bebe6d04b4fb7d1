#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gstab/integer.hpp"

namespace gstab {

using IntVec = std::vector<std::int64_t>;

/// A subgroup of Z/m_1 + ... + Z/m_n, stored as the full-rank lattice in Z^n
/// it pulls back to, in upper-triangular echelon form. Row j has pivot at
/// column j dividing m_j; entries right of the pivot are reduced mod m_c.
class ModularLattice {
 public:
  ModularLattice() = default;
  explicit ModularLattice(IntVec moduli);
  /// Adopts rows that are already in echelon form (used for slices of a larger lattice).
  static ModularLattice from_echelon(IntVec moduli, std::vector<IntVec> rows);

  int dim() const { return static_cast<int>(moduli_.size()); }
  const IntVec& moduli() const { return moduli_; }
  /// Echelon row j; rows never touched are the implicit m_j e_j.
  IntVec row(int j) const;
  std::int64_t pivot(int j) const { return rows_[j].empty() ? moduli_[j] : rows_[j][j]; }

  void insert(IntVec v);
  /// Canonical representative of the coset v + subgroup.
  IntVec reduce(IntVec v) const;
  bool contains(const IntVec& v) const;
  bool contains(const ModularLattice& other) const;
  /// Order of the subgroup.
  BigInt order() const;
  /// Generators of the subgroup, reduced mod m and nonzero.
  std::vector<IntVec> generators() const;

  bool operator==(const ModularLattice& other) const;

 private:
  IntVec& materialize(int j);

  IntVec moduli_;
  std::vector<IntVec> rows_;  // empty vector: implicit m_j e_j
};

/// The homomorphism Z/s_1 + ... + Z/s_n -> Z/t_1 + ... + Z/t_k sending the
/// j-th unit vector to column j. Well-definedness (s_j * column_j == 0) is the
/// caller's responsibility.
class ModularMap {
 public:
  ModularMap(IntVec source_moduli, IntVec target_moduli, const std::vector<IntVec>& columns);
  ModularMap(IntVec source_moduli, IntVec target_moduli, const std::function<IntVec(int)>& column);

  ModularLattice kernel() const;
  ModularLattice image() const;
  std::optional<IntVec> preimage(const IntVec& b) const;

 private:
  IntVec source_, target_;
  ModularLattice graph_;  // coordinates: target first, then source
};

struct CongruenceSolution {
  IntVec particular;           // mod lcm of the moduli
  std::vector<IntVec> kernel;  // together with lcm * e_j these generate all solutions
  std::int64_t modulus = 1;
};

/// Solves M x == b (mod moduli[i] in row i). Returns nullopt when unsolvable.
std::optional<CongruenceSolution> solve_congruence(const IntMatrix& M, const IntVec& b, const IntVec& moduli);

}  // namespace gstab
