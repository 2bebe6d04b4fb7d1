#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gstab/chain.hpp"
#include "gstab/cohomology.hpp"
#include "gstab/rep.hpp"

namespace gstab {

/// Everything the morphs of one extension problem share.
struct MorphContext {
  GroupTable G;
  Subgroup L;
  Representation theta;  // on L
  std::shared_ptr<const AutChain> chain;
  CosetSystem cosets;    // left cosets tL
  std::int64_t cochain_budget = kDefaultCochainBudget;
  std::int64_t h_budget = kDefaultEnumerationBudget;
};

std::shared_ptr<const MorphContext> make_morph_context(const GroupTable& G, const Representation& theta,
                                                       std::shared_ptr<const AutChain> chain);

/// A map f: G -> GL_n(q) restricting to theta on L whose defect
/// f(x) f(y) f(xy)^-1 lies in H_level of the chain.
struct WeakMorph {
  std::shared_ptr<const MorphContext> context;
  int level = 0;
  std::vector<FqMatrix> f;

  const FqMatrix& operator()(Element x) const { return f[x]; }
  bool is_homomorphism() const;
};

FqMatrix defect(const WeakMorph& f, Element x, Element y);

struct MorphDiagnostics {
  bool ok = true;
  std::string message;
  Element x = -1, y = -1;
};

/// Conditions: restriction to L, H-normalizing values, defect in H_level;
/// with full = true also f(L) centralizing H.
MorphDiagnostics check_weak_morph(const WeakMorph& f, bool full = false);

/// The G-module Q_m (default m = level + 1) with x acting by conjugation with f(x).
ActionModule induced_action(const WeakMorph& f, int m = -1);

struct ObstructionClass {
  int quotient = 0;  // index m of the quotient Q_m holding the cocycle
  ActionModule module;
  Cochain cocycle;
  bool is_zero = false;
  std::optional<Cochain> certificate;  // alpha with d(alpha) = cocycle
};

/// DefectEscapesLevel when some defect leaves H_level.
ObstructionClass obstruction(const WeakMorph& f);
/// (gamma f)(x) = section(gamma(x)) f(x) for a relative cocycle gamma with values in Q_level.
WeakMorph z1_act(const Cochain& gamma, const WeakMorph& f);
/// g(x) = section(alpha(x))^-1 f(x), one level down (CertificateInvalid unless d(alpha) = f#).
WeakMorph lift(const WeakMorph& f, const Cochain& alpha);
bool equivalent_mod(const WeakMorph& f, const WeakMorph& g, int level);
/// Some h in H_search with [theta(L), h] in H_level and h g(x) h^-1 f(x)^-1 in H_level for all x.
std::optional<FqMatrix> conjugacy_equiv(const WeakMorph& f, const WeakMorph& g, int level, int search_level = 0);
/// f'(t l) = f(t) theta(l) for transversal elements t.
WeakMorph normalize(const WeakMorph& f);
bool is_normalized(const WeakMorph& f);

}  // namespace gstab
