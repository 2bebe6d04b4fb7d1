// Instance families shared by the unit tests and the acceptance binary.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gstab/cohomology.hpp"
#include "gstab/error.hpp"
#include "gstab/group.hpp"
#include "gstab/instance.hpp"
#include "gstab/rep.hpp"

namespace suite {

using namespace gstab;

struct RepInstance {
  std::string label;
  GroupTable G;
  Representation theta;
};

struct ModuleInstance {
  std::string label;
  GroupTable G;
  Subgroup L;
  ActionModule A;
};

inline FqMatrix mat(const Field& F, std::vector<std::vector<Fq>> rows) { return FqMatrix::from_rows(F, rows); }

inline std::vector<Subgroup> proper_normal_subgroups(const GroupTable& G) {
  std::vector<Subgroup> out;
  for (const Subgroup& L : all_subgroups(G))
    if (L.order() > 1 && L.order() < G.order() && is_normal(G, L)) out.push_back(L);
  return out;
}

// Small matrices tried as generator images: identity, a unipotent block,
// diagonal matrices and two companion matrices.
inline std::vector<FqMatrix> candidate_images(const Field& F, int dim) {
  std::vector<FqMatrix> out;
  const int q = F.q();
  if (dim == 1) {
    for (Fq a = 1; a < static_cast<Fq>(q); ++a) out.push_back(mat(F, {{a}}));
    return out;
  }
  for (Fq a = 1; a < static_cast<Fq>(q); ++a)
    for (Fq b = 1; b < static_cast<Fq>(q); ++b) out.push_back(mat(F, {{a, 0}, {0, b}}));
  out.push_back(mat(F, {{1, 1}, {0, 1}}));
  out.push_back(mat(F, {{0, F.neg(1)}, {1, 0}}));            // x^2 + 1
  out.push_back(mat(F, {{0, F.neg(1)}, {1, F.neg(1)}}));     // x^2 + x + 1
  return out;
}

// All representations of L with generator images from the candidate list,
// one per isomorphism class.
inline std::vector<Representation> small_representations(const GroupTable& G, const Subgroup& L, const Field& F, int dim) {
  const std::vector<Element> gens = generating_set(G, L);
  const std::vector<FqMatrix> cand = candidate_images(F, dim);
  std::vector<Representation> out;
  std::vector<size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<std::pair<Element, FqMatrix>> assignment;
    for (size_t i = 0; i < gens.size(); ++i) assignment.emplace_back(gens[i], cand[pick[i]]);
    try {
      Representation r = representation_from_generators(G, L, F, dim, assignment);
      bool fresh = true;
      for (const auto& s : out)
        if (find_isomorphism(s, r)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(std::move(r));
    } catch (const Error&) {
    }
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == cand.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

inline std::vector<std::string> extension_groups() {
  return {"cyclic:4", "abelian:2,2", "cyclic:6", "sym:3", "dihedral:4", "dicyclic:2", "abelian:2,4"};
}

// Every (G, L, theta) with G above, L proper nontrivial normal and theta of
// dimension 1 or 2 over GF(2), GF(3), GF(7) built from the candidates.
inline std::vector<RepInstance> extension_suite() {
  std::vector<RepInstance> out;
  for (const std::string& name : extension_groups()) {
    const GroupTable G = named_group(name);
    for (const Subgroup& L : proper_normal_subgroups(G))
      for (int p : {2, 3, 7}) {
        const Field F(make_field_spec(p));
        for (int dim : {1, 2})
          for (Representation& theta : small_representations(G, L, F, dim)) {
            std::string label = name + " |L|=" + std::to_string(L.order()) + " GF(" + std::to_string(p) + ") dim " + std::to_string(dim);
            for (Element s : generating_set(G, L)) label += " [" + std::to_string(s) + ": " + matrix_to_text(theta(s)) + "]";
            out.push_back({label, G, std::move(theta)});
          }
      }
  }
  return out;
}

inline std::vector<std::string> small_groups() {
  return {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "abelian:2,2", "cyclic:5", "cyclic:6", "sym:3",
          "cyclic:7", "cyclic:8", "abelian:2,4", "abelian:2,2,2", "dihedral:4", "dicyclic:2"};
}

// Actions of G on A by generator images drawn from the given automorphisms;
// the trivial action first, then at most `extra` nontrivial ones.
inline std::vector<ActionModule> actions_on(const GroupTable& G, const IntVec& factors,
                                            const std::vector<std::vector<IntVec>>& automorphisms, int extra) {
  std::vector<ActionModule> out{trivial_module(factors, G.order())};
  const std::vector<Element> gens = generating_set(G, whole_group(G));
  std::vector<size_t> pick(gens.size(), 0);
  while (static_cast<int>(out.size()) < extra + 1) {
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == automorphisms.size()) pick[i++] = 0;
    if (i == pick.size()) break;
    std::vector<std::pair<Element, std::vector<IntVec>>> g;
    for (size_t k = 0; k < gens.size(); ++k) g.emplace_back(gens[k], automorphisms[pick[k]]);
    try {
      ActionModule A = module_from_generators(G, factors, g);
      bool fresh = true;
      for (const auto& B : out) fresh &= !(B == A);
      if (fresh) out.push_back(std::move(A));
    } catch (const Error&) {
    }
  }
  return out;
}

inline std::vector<std::pair<IntVec, std::vector<std::vector<IntVec>>>> coefficient_modules() {
  using M = std::vector<IntVec>;
  return {
      {{2}, {M{{1}}}},
      {{3}, {M{{1}}, M{{2}}}},
      {{4}, {M{{1}}, M{{3}}}},
      {{2, 2}, {M{{1, 0}, {0, 1}}, M{{0, 1}, {1, 0}}, M{{1, 1}, {0, 1}}, M{{0, 1}, {1, 1}}, M{{1, 1}, {1, 0}}, M{{1, 0}, {1, 1}}}},
  };
}

// All (G, L) with |G| <= 8 and A in {Z/2, Z/3, Z/4, Z/2+Z/2}, trivial action
// plus up to `extra` nontrivial ones.
inline std::vector<ModuleInstance> cohomology_suite(int extra = 2) {
  std::vector<ModuleInstance> out;
  for (const std::string& name : small_groups()) {
    const GroupTable G = named_group(name);
    const auto subgroups = all_subgroups(G);
    for (const auto& [factors, autos] : coefficient_modules())
      for (const ActionModule& A : actions_on(G, factors, autos, extra))
        for (const Subgroup& L : subgroups) {
          std::string label = name + " |L|=" + std::to_string(L.order()) + " A=Z/";
          for (size_t i = 0; i < factors.size(); ++i) label += (i ? "+Z/" : "") + std::to_string(factors[i]);
          bool trivial = true;
          for (Element g = 0; g < G.order(); ++g) trivial &= A.action[g] == A.action[0];
          label += trivial ? " trivial" : " twisted";
          out.push_back({label, G, L, A});
        }
  }
  return out;
}

}  // namespace suite
