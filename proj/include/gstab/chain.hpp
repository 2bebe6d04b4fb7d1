#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gstab/integer.hpp"
#include "gstab/lattice.hpp"
#include "gstab/rep.hpp"

namespace gstab {

enum class Series { Radical, Derived };

const char* to_string(Series s);

/// A subnormal series H = H_0 > H_1 > ... > H_k = 1 of the automorphism group
/// of a module, with abelian quotients Q_m = H_{m-1}/H_m presented as sums of
/// cyclic groups. Q_m may be trivial (no factors).
class AutChain {
 public:
  Series series() const { return series_; }
  const Field& field() const { return E_.field; }
  int n() const { return E_.n; }
  const EndAlgebra& algebra() const { return E_; }

  int length() const { return static_cast<int>(quotients_.size()); }
  /// Cyclic orders of Q_m, 1 <= m <= length().
  const IntVec& quotient(int m) const { return quotients_.at(m - 1).factors; }

  bool contains(int level, const FqMatrix& h) const;
  /// Image of h in Q_m; throws DefectEscapesLevel when h is not in H_{m-1}.
  IntVec project(int m, const FqMatrix& h) const;
  /// A fixed element of H_{m-1} over a in Q_m, with section(0) = I.
  FqMatrix section(int m, const IntVec& a) const;

  BigInt order(int level) const;
  std::vector<FqMatrix> elements(int level) const;

  /// Whether conjugation by x maps every H_m onto itself.
  bool stable_under(const FqMatrix& x) const;

  // Radical series only.
  const RadicalData& radical() const { return radical_; }
  int residue_degree() const { return radical_.residue_degree; }
  const FqMatrix& unit_generator() const { return unit_; }

  friend AutChain radical_series(const EndAlgebra& E, std::int64_t budget);
  friend AutChain derived_series(const EndAlgebra& E, std::int64_t budget);

 private:
  struct Quotient {
    IntVec factors;
    // Radical: coordinates of J^{m-1} adapted to J^m (J^m basis first, then
    // the lifted complement). For m = 1 the span is all of E.
    std::shared_ptr<LinearSpan> adapted;
    int lower_count = 0;
    std::vector<FqMatrix> complement;
    // Derived: polycyclic coordinates and the Smith transform.
    std::vector<FqMatrix> gens;
    std::vector<std::int64_t> gen_orders;
    std::shared_ptr<std::unordered_map<FqMatrix, IntVec, FqMatrixHash>> coords;
    std::vector<std::vector<BigInt>> V, V_inv;
    std::vector<int> columns;  // Smith columns with factor > 1
  };

  Series series_ = Series::Radical;
  EndAlgebra E_;
  std::vector<Quotient> quotients_;

  RadicalData radical_;
  FqMatrix unit_;
  std::vector<std::int64_t> unit_log_;  // E/J coordinate code -> exponent of unit_
  std::vector<std::shared_ptr<LinearSpan>> power_spans_;  // power_spans_[m] spans J^m, m >= 1
  std::shared_ptr<LinearSpan> E_span_;

  std::vector<std::vector<FqMatrix>> levels_;  // derived: elements of each H_j
  std::vector<std::shared_ptr<std::unordered_map<FqMatrix, int, FqMatrixHash>>> level_sets_;
  std::vector<FqMatrix> top_generators_;

  std::int64_t residue_code(const FqMatrix& h) const;
};

/// The series 1 + J^m for an indecomposable module (NotIndecomposable otherwise).
AutChain radical_series(const EndAlgebra& E, std::int64_t budget = kDefaultEnumerationBudget);
/// The derived series of the unit group, found by enumeration (NotSoluble if it stalls).
AutChain derived_series(const EndAlgebra& E, std::int64_t budget = kDefaultEnumerationBudget);
AutChain aut_chain(const Representation& theta, Series series = Series::Radical,
                   std::int64_t budget = kDefaultEnumerationBudget);

}  // namespace gstab
