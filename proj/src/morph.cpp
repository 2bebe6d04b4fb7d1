#include "gstab/morph.hpp"

#include "gstab/error.hpp"

namespace gstab {

std::shared_ptr<const MorphContext> make_morph_context(const GroupTable& G, const Representation& theta,
                                                       std::shared_ptr<const AutChain> chain) {
  auto ctx = std::make_shared<MorphContext>();
  ctx->G = G;
  ctx->L = theta.subgroup;
  ctx->theta = theta;
  ctx->chain = std::move(chain);
  ctx->cosets = coset_system(G, theta.subgroup);
  return ctx;
}

bool WeakMorph::is_homomorphism() const {
  const GroupTable& G = context->G;
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y)
      if (f[x] * f[y] != f[G.mul(x, y)]) return false;
  return true;
}

FqMatrix defect(const WeakMorph& f, Element x, Element y) {
  return f(x) * f(y) * inv(f(f.context->G.mul(x, y)));
}

MorphDiagnostics check_weak_morph(const WeakMorph& f, bool full) {
  const MorphContext& ctx = *f.context;
  const GroupTable& G = ctx.G;
  const AutChain& H = *ctx.chain;
  auto fail = [](std::string msg, Element x, Element y = -1) { return MorphDiagnostics{false, std::move(msg), x, y}; };
  if (static_cast<int>(f.f.size()) != G.order()) return fail("table does not cover the group", -1);
  for (Element l : ctx.L.elements())
    if (f(l) != ctx.theta(l)) return fail("restriction to the subgroup differs from theta", l);
  for (Element x = 0; x < G.order(); ++x) {
    if (!is_invertible(f(x))) return fail("value is not invertible", x);
    if (!H.stable_under(f(x))) return fail("value does not normalize the automorphism group", x);
  }
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y)
      if (!H.contains(f.level, defect(f, x, y))) return fail("defect leaves level " + std::to_string(f.level), x, y);
  if (full)
    for (Element l : ctx.L.elements())
      for (const auto& b : H.algebra().basis)
        if (f(l) * b != b * f(l)) return fail("value on the subgroup does not centralize the automorphism group", l);
  return {};
}

ActionModule induced_action(const WeakMorph& f, int m) {
  const MorphContext& ctx = *f.context;
  const AutChain& H = *ctx.chain;
  if (m < 0) m = f.level + 1;
  if (m < 1 || m > H.length()) throw Error(ErrorCode::DomainViolation, "no quotient " + std::to_string(m) + " in the chain");
  const IntVec& factors = H.quotient(m);
  const int k = static_cast<int>(factors.size());
  ActionModule A{factors, {}};
  for (Element x = 0; x < ctx.G.order(); ++x) {
    if (!H.stable_under(f(x))) throw Error(ErrorCode::IllDefinedAction, "f(" + std::to_string(x) + ") does not preserve the chain");
    const FqMatrix fx_inv = inv(f(x));
    std::vector<IntVec> M(k, IntVec(k, 0));
    for (int j = 0; j < k; ++j) {
      IntVec e(k, 0);
      e[j] = 1;
      const IntVec col = H.project(m, f(x) * H.section(m, e) * fx_inv);
      for (int i = 0; i < k; ++i) M[i][j] = col[i];
    }
    A.action.push_back(std::move(M));
  }
  try {
    validate_module(ctx.G, A);
  } catch (const Error& e) {
    throw Error(ErrorCode::IllDefinedAction, std::string("induced conjugation action is not a module: ") + e.what());
  }
  return A;
}

namespace {

Cochain defect_cocycle(const WeakMorph& f, int m) {
  const MorphContext& ctx = *f.context;
  const int N = ctx.G.order();
  const int k = static_cast<int>(ctx.chain->quotient(m).size());
  Cochain c = Cochain::zero(2, N, k, true);
  for (Element x = 0; x < N; ++x)
    for (Element y = 0; y < N; ++y) c.set(static_cast<std::int64_t>(x) * N + y, ctx.chain->project(m, defect(f, x, y)));
  return c;
}

}  // namespace

ObstructionClass obstruction(const WeakMorph& f) {
  const MorphContext& ctx = *f.context;
  const int m = f.level + 1;
  if (m > ctx.chain->length()) throw Error(ErrorCode::DomainViolation, "the morph is already at the bottom of the chain");
  ObstructionClass ob;
  ob.quotient = m;
  ob.module = induced_action(f, m);
  ob.cocycle = defect_cocycle(f, m);
  const RelativeComplex C(ctx.G, ctx.L, ob.module, ctx.cochain_budget);
  ob.certificate = solve_coboundary(C, ob.cocycle);
  ob.is_zero = ob.certificate.has_value();
  return ob;
}

WeakMorph z1_act(const Cochain& gamma, const WeakMorph& f) {
  const MorphContext& ctx = *f.context;
  const int m = f.level;
  if (m < 1) throw Error(ErrorCode::DomainViolation, "cocycles act on morphs below the top level");
  const ActionModule A = induced_action(f, m);
  if (gamma.degree != 1 || !differential(ctx.G, A, gamma).is_zero()) throw Error(ErrorCode::NotACocycle, "acting cochain is not a 1-cocycle");
  if (!is_relative(ctx.G, ctx.L, A, gamma)) throw Error(ErrorCode::NotACocycle, "acting cocycle does not vanish on the subgroup");
  WeakMorph g = f;
  for (Element x = 0; x < ctx.G.order(); ++x) g.f[x] = ctx.chain->section(m, A.reduce(gamma(x))) * f(x);
  return g;
}

WeakMorph lift(const WeakMorph& f, const Cochain& alpha) {
  const MorphContext& ctx = *f.context;
  const int m = f.level + 1;
  if (m > ctx.chain->length()) throw Error(ErrorCode::DomainViolation, "the morph is already at the bottom of the chain");
  const ActionModule A = induced_action(f, m);
  const Cochain target = defect_cocycle(f, m);
  if (alpha.degree != 1 || !is_relative(ctx.G, ctx.L, A, alpha) || differential(ctx.G, A, alpha) != target)
    throw Error(ErrorCode::CertificateInvalid, "certificate does not bound the obstruction cocycle");
  WeakMorph g = f;
  g.level = m;
  for (Element x = 0; x < ctx.G.order(); ++x) g.f[x] = inv(ctx.chain->section(m, A.reduce(alpha(x)))) * f(x);
  return g;
}

bool equivalent_mod(const WeakMorph& f, const WeakMorph& g, int level) {
  const AutChain& H = *f.context->chain;
  for (size_t x = 0; x < f.f.size(); ++x)
    if (!H.contains(level, f.f[x] * inv(g.f[x]))) return false;
  return true;
}

std::optional<FqMatrix> conjugacy_equiv(const WeakMorph& f, const WeakMorph& g, int level, int search_level) {
  const MorphContext& ctx = *f.context;
  const AutChain& H = *ctx.chain;
  if (H.order(search_level) > ctx.h_budget)
    throw Error(ErrorCode::BudgetExceeded, "automorphism group level has " + H.order(search_level).str() + " elements");
  std::vector<FqMatrix> f_inv;
  for (const auto& v : f.f) f_inv.push_back(inv(v));
  for (const FqMatrix& h : H.elements(search_level)) {
    const FqMatrix h_inv = inv(h);
    bool ok = true;
    for (Element l : ctx.L.elements()) {
      const FqMatrix t = ctx.theta(l);
      if (!H.contains(level, t * h * inv(t) * h_inv)) {
        ok = false;
        break;
      }
    }
    for (Element x = 0; ok && x < ctx.G.order(); ++x)
      if (!H.contains(level, h * g(x) * h_inv * f_inv[x])) ok = false;
    if (ok) return h;
  }
  return std::nullopt;
}

WeakMorph normalize(const WeakMorph& f) {
  const MorphContext& ctx = *f.context;
  WeakMorph g = f;
  for (Element x = 0; x < ctx.G.order(); ++x)
    g.f[x] = f(ctx.cosets.representative(x)) * ctx.theta(ctx.cosets.subgroup_part(ctx.G, x));
  return g;
}

bool is_normalized(const WeakMorph& f) { return normalize(f).f == f.f; }

}  // namespace gstab
