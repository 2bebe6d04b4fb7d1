#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gstab {

using Element = int;

/// A finite group materialized as its full Cayley table. Element 0 is the
/// identity after validation.
class GroupTable {
 public:
  GroupTable() = default;

  int order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element conjugate(Element x, Element l) const { return mul(mul(x, l), inv(x)); }
  Element power(Element a, long long k) const;
  int element_order(Element a) const;
  bool is_abelian() const;

  /// Row-major multiplication table.
  const std::vector<Element>& table() const { return mul_; }

  friend GroupTable build_group(const std::vector<std::vector<int>>& mul_table);

 private:
  int order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

/// Validates a square table and relabels so that the identity is element 0.
/// Throws NoIdentity, NoInverse or NotAssociative naming the offending data.
GroupTable build_group(const std::vector<std::vector<int>>& mul_table);

/// Subgroup of a specific GroupTable, kept as a sorted element list plus a
/// membership mask over the parent.
class Subgroup {
 public:
  Subgroup() = default;

  const std::vector<Element>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(Element g) const { return g >= 0 && g < static_cast<int>(mask_.size()) && mask_[g]; }
  /// Position of g inside elements(), or -1.
  int index_of(Element g) const { return contains(g) ? position_[g] : -1; }
  int parent_order() const { return static_cast<int>(mask_.size()); }

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

  friend Subgroup make_subgroup(const GroupTable& G, std::vector<Element> elements);

 private:
  std::vector<Element> elements_;
  std::vector<char> mask_;
  std::vector<int> position_;
};

/// Throws NotASubgroup when the set misses the identity or is not closed.
Subgroup make_subgroup(const GroupTable& G, std::vector<Element> elements);
Subgroup generate_subgroup(const GroupTable& G, std::span<const Element> generators);
Subgroup trivial_subgroup(const GroupTable& G);
/// Greedy generating set: each element of L, in order, not yet generated.
std::vector<Element> generating_set(const GroupTable& G, const Subgroup& L);
Subgroup whole_group(const GroupTable& G);
std::vector<Subgroup> all_subgroups(const GroupTable& G);
Subgroup commutator_subgroup(const GroupTable& G);

bool is_normal(const GroupTable& G, const Subgroup& L);
/// Largest normal subgroup of G inside L, the intersection of all conjugates.
Subgroup core_subgroup(const GroupTable& G, const Subgroup& L);
Subgroup intersect(const GroupTable& G, const Subgroup& a, const Subgroup& b);
/// L^x = x^{-1} L x.
Subgroup conjugate_subgroup(const GroupTable& G, const Subgroup& L, Element x);

/// Left cosets gL with the identity as the first representative. Every g
/// factors uniquely as g = transversal[coset_of[g]] * l with l in L.
struct CosetSystem {
  Subgroup subgroup;
  std::vector<Element> transversal;
  std::vector<int> coset_of;

  Element representative(Element g) const { return transversal[coset_of[g]]; }
  /// The l in L with g = representative(g) * l.
  Element subgroup_part(const GroupTable& G, Element g) const {
    return G.mul(G.inv(representative(g)), g);
  }
};

CosetSystem coset_system(const GroupTable& G, const Subgroup& L);

struct QuotientGroup {
  GroupTable group;
  std::vector<int> projection;  // element of G -> element of G/L
  CosetSystem cosets;
};

/// Throws NotNormal.
QuotientGroup quotient_group(const GroupTable& G, const Subgroup& L);

/// The subgroup as a group in its own right (element i is L.elements()[i]).
GroupTable subgroup_table(const GroupTable& G, const Subgroup& L);

/// Named constructors: "cyclic:n", "dihedral:n" (order 2n), "sym:n",
/// "abelian:n1,n2,...", "dicyclic:n" (order 4n, dicyclic:2 is Q8).
GroupTable named_group(const std::string& name);
GroupTable cyclic_group(int n);
GroupTable dihedral_group(int n);
GroupTable symmetric_group(int n);
GroupTable abelian_group(const std::vector<int>& factors);
GroupTable dicyclic_group(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// Permutations of {0..n-1} in lexicographic order, matching symmetric_group(n).
std::vector<std::vector<int>> symmetric_group_permutations(int n);

}  // namespace gstab
