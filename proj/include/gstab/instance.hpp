#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gstab/chain.hpp"
#include "gstab/cohomology.hpp"
#include "gstab/rep.hpp"

namespace gstab {

/// A parsed instance file. Line-oriented, '#' starts a comment:
///
///   group cyclic:4                 (or: group table N, then N rows)
///   subgroup 0 2                   (element list; or: subgroup gens 2)
///   field 3                        (p [e [modulus coefficients, constant first]])
///   dim 1
///   rep 2 = 2                      (matrix rows separated by ';')
///   module 2 2                     (cyclic factors of A for cohomology)
///   action 1 = 1 1; 0 1            (integer matrix of a group element)
///   series radical
///   budget-H 1048576
///   budget-cochains 65536
///
/// Field elements are written as their packed code sum c_i p^i. rep and
/// action lines may name any generating set; images of the remaining
/// elements follow. Without rep lines theta is trivial, without action
/// lines A is trivial.
struct Instance {
  std::string group_name;  // empty when given as a table
  GroupTable G;
  Subgroup L;
  FieldSpec field_spec = make_field_spec(2);
  Field field{field_spec};
  int dim = 0;
  std::vector<std::pair<Element, FqMatrix>> rep_generators;
  std::optional<Representation> theta;  // present when dim > 0
  IntVec module_factors;
  std::vector<std::pair<Element, std::vector<IntVec>>> action_generators;
  std::optional<ActionModule> module;   // present when module_factors is set
  Series series = Series::Radical;
  std::int64_t budget_H = kDefaultEnumerationBudget;
  std::int64_t budget_cochains = kDefaultCochainBudget;
};

/// Throws ParseError for syntax problems and the structural codes
/// (NotAssociative, NotASubgroup, ...) for invalid data.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance parse_instance_file(const std::string& path);

/// Normalized form: full field spec, sorted subgroup, generator images only.
/// Parsing the output gives back the same instance.
std::string format_instance(const Instance& inst);

/// "a b; c d" -> 2 x 2 matrix.
FqMatrix parse_matrix(const Field& F, int dim, const std::string& text);
std::string matrix_to_text(const FqMatrix& m);

/// Extends integer action matrices on generators to every element of G.
ActionModule module_from_generators(const GroupTable& G, const IntVec& factors,
                                    const std::vector<std::pair<Element, std::vector<IntVec>>>& generators);

}  // namespace gstab
