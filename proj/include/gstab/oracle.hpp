#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "gstab/cohomology.hpp"
#include "gstab/rep.hpp"

namespace gstab {

/// Exhaustive ground truth for the extension engine and the cohomology
/// backend. Nothing here calls the differential, the lattice code or the
/// morph machinery; agreement with them is therefore meaningful.
struct OracleBudget {
  std::int64_t max_H = std::int64_t{1} << 16;           // matrices scanned for Aut and intertwiners
  std::int64_t max_candidates = std::int64_t{1} << 20;  // candidate extension tables
  std::int64_t max_cochains = std::int64_t{1} << 22;    // cochains or cocycles visited
};

/// All n x n matrices over F that are invertible, in base-q order.
std::vector<FqMatrix> brute_general_linear(const Field& F, int n, std::int64_t budget);
/// Invertible matrices commuting with every theta(l).
std::vector<FqMatrix> brute_automorphisms(const Representation& theta, const OracleBudget& budget = {});

/// Every homomorphism G -> GL_n(q) restricting to theta, without dedup.
/// Empty when theta is not stable.
std::vector<std::vector<FqMatrix>> brute_extensions(const GroupTable& G, const Representation& theta,
                                                    const OracleBudget& budget = {});

/// Partition of the tables under simultaneous conjugation by H; each class
/// lists table indices increasingly, classes ordered by first index.
std::vector<std::vector<int>> conjugacy_dedup(const std::vector<std::vector<FqMatrix>>& tables,
                                              const std::vector<FqMatrix>& H);

/// |H^n(G, L; A)| counted over normalized relative cochains.
class BruteCohomology {
 public:
  int degree() const { return degree_; }
  std::int64_t order() const { return cocycles_ / coboundaries_; }
  std::int64_t cocycle_count() const { return cocycles_; }
  std::int64_t coboundary_count() const { return coboundaries_; }
  /// One cocycle per class when requested and the class count stayed under the cap.
  const std::vector<Cochain>& representatives() const { return reps_; }
  bool is_coboundary(const Cochain& c) const;

  friend BruteCohomology brute_cohomology(int n, const GroupTable& G, const Subgroup& L, const ActionModule& A,
                                          const OracleBudget& budget, int max_representatives);

 private:
  int degree_ = 0;
  int group_order_ = 0;
  int rank_ = 0;
  std::int64_t cocycles_ = 0, coboundaries_ = 1;
  std::vector<Cochain> reps_;
  std::vector<std::int64_t> tuples_;  // free tuple indices in Cochain layout
  IntVec factors_;
  std::shared_ptr<std::unordered_set<std::string>> boundary_set_;
};

BruteCohomology brute_cohomology(int n, const GroupTable& G, const Subgroup& L, const ActionModule& A,
                                 const OracleBudget& budget = {}, int max_representatives = 64);

}  // namespace gstab
