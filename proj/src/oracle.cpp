#include "gstab/oracle.hpp"

#include <map>
#include <string>

#include "gstab/error.hpp"

namespace gstab {

namespace {

void over_budget(const std::string& what, std::int64_t limit) {
  throw Error(ErrorCode::BudgetExceeded, what + " exceeds oracle budget " + std::to_string(limit));
}

std::int64_t checked_power(std::int64_t base, std::int64_t exp, std::int64_t limit, const std::string& what) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (r > limit / base) over_budget(what, limit);
    r *= base;
  }
  return r;
}

// Left transversal of L computed from scratch, identity first.
std::vector<Element> transversal_of(const GroupTable& G, const Subgroup& L) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Element> reps;
  for (Element g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (Element l : L.elements()) seen[G.mul(g, l)] = 1;
  }
  return reps;
}

// The module as lookup tables over element codes (mixed radix, first factor
// least significant).
struct CodedModule {
  int size = 1;
  int rank = 0;
  IntVec factors;
  std::vector<int> add, neg, act;  // act[g * size + a]
  std::vector<int> inverse_of;     // group inverse

  IntVec decode(int code) const {
    IntVec v(rank);
    for (int i = 0; i < rank; ++i) {
      v[i] = code % factors[i];
      code /= static_cast<int>(factors[i]);
    }
    return v;
  }
  int encode(const IntVec& v) const {
    int code = 0;
    for (int i = rank - 1; i >= 0; --i) code = code * static_cast<int>(factors[i]) + static_cast<int>(((v[i] % factors[i]) + factors[i]) % factors[i]);
    return code;
  }
  int plus(int a, int b) const { return add[a * size + b]; }
  int on(Element g, int a) const { return act[g * size + a]; }
};

CodedModule code_module(const GroupTable& G, const ActionModule& A) {
  CodedModule M;
  M.rank = A.rank();
  M.factors = A.factors;
  for (auto f : A.factors) {
    if (M.size > (1 << 12) / f) throw Error(ErrorCode::BudgetExceeded, "module too large for the oracle");
    M.size *= static_cast<int>(f);
  }
  const int S = M.size, N = G.order();
  M.add.resize(S * S);
  M.neg.resize(S);
  M.act.resize(N * S);
  for (int a = 0; a < S; ++a) {
    const IntVec va = M.decode(a);
    IntVec n(M.rank);
    for (int i = 0; i < M.rank; ++i) n[i] = -va[i];
    M.neg[a] = M.encode(n);
    for (int b = 0; b < S; ++b) {
      const IntVec vb = M.decode(b);
      IntVec s(M.rank);
      for (int i = 0; i < M.rank; ++i) s[i] = va[i] + vb[i];
      M.add[a * S + b] = M.encode(s);
    }
    for (Element g = 0; g < N; ++g) {
      IntVec r(M.rank, 0);
      for (int i = 0; i < M.rank; ++i)
        for (int j = 0; j < M.rank; ++j) r[i] += A.action[g][i][j] * va[j];
      M.act[g * S + a] = M.encode(r);
    }
  }
  for (Element g = 0; g < N; ++g) M.inverse_of.push_back(G.inv(g));
  return M;
}

}  // namespace

std::vector<FqMatrix> brute_general_linear(const Field& F, int n, std::int64_t budget) {
  const std::int64_t total = checked_power(F.q(), std::int64_t{n} * n, budget, "matrix space");
  std::vector<FqMatrix> out;
  for (std::int64_t t = 0; t < total; ++t) {
    FqMatrix M(F, n, n);
    std::int64_t rest = t;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        M(i, j) = static_cast<Fq>(rest % F.q());
        rest /= F.q();
      }
    if (determinant(M) != 0) out.push_back(std::move(M));
  }
  return out;
}

std::vector<FqMatrix> brute_automorphisms(const Representation& theta, const OracleBudget& budget) {
  std::vector<FqMatrix> out;
  for (FqMatrix& h : brute_general_linear(theta.field, theta.dim, budget.max_H)) {
    bool commutes = true;
    for (const auto& t : theta.images)
      if (h * t != t * h) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::vector<FqMatrix>> brute_extensions(const GroupTable& G, const Representation& theta,
                                                    const OracleBudget& budget) {
  const Subgroup& L = theta.subgroup;
  const std::vector<Element> reps = transversal_of(G, L);
  const std::vector<FqMatrix> gl = brute_general_linear(theta.field, theta.dim, budget.max_H);

  // The one mathematical input shared with the engine: Theta(t) must carry
  // theta(l) to theta(t l t^-1) wherever both sides are defined, so only
  // intertwiners of theta and its twist are candidates.
  std::vector<std::vector<const FqMatrix*>> allowed(reps.size());
  for (size_t i = 1; i < reps.size(); ++i) {
    const Element t = reps[i];
    for (const FqMatrix& T : gl) {
      bool ok = true;
      for (Element l : L.elements()) {
        const Element c = G.conjugate(t, l);
        if (L.contains(c) && T * theta(l) != theta(c) * T) {
          ok = false;
          break;
        }
      }
      if (ok) allowed[i].push_back(&T);
    }
    if (allowed[i].empty()) return {};
  }

  const int N = G.order();
  std::vector<FqMatrix> table(N);
  std::vector<char> defined(N, 0);
  for (Element l : L.elements()) {
    table[l] = theta(l);
    defined[l] = 1;
  }
  std::vector<std::vector<FqMatrix>> out;
  std::int64_t visited = 0;

  // Every product of defined elements must agree wherever the product is defined.
  auto consistent = [&]() {
    for (Element x = 0; x < N; ++x) {
      if (!defined[x]) continue;
      for (Element y = 0; y < N; ++y) {
        if (!defined[y]) continue;
        const Element xy = G.mul(x, y);
        if (defined[xy] && table[x] * table[y] != table[xy]) return false;
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, size_t i) -> void {
    if (i == reps.size()) {
      out.push_back(table);
      return;
    }
    for (const FqMatrix* T : allowed[i]) {
      if (++visited > budget.max_candidates) over_budget("candidate extensions", budget.max_candidates);
      for (Element l : L.elements()) {
        const Element x = G.mul(reps[i], l);
        table[x] = *T * theta(l);
        defined[x] = 1;
      }
      if (consistent()) self(self, i + 1);
      for (Element l : L.elements()) defined[G.mul(reps[i], l)] = 0;
    }
  };
  if (consistent()) dfs(dfs, 1);
  return out;
}

std::vector<std::vector<int>> conjugacy_dedup(const std::vector<std::vector<FqMatrix>>& tables,
                                              const std::vector<FqMatrix>& H) {
  std::map<std::vector<FqMatrix>, int> index;
  for (size_t i = 0; i < tables.size(); ++i) index.emplace(tables[i], static_cast<int>(i));
  std::vector<int> cls(tables.size(), -1);
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < tables.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int c = static_cast<int>(classes.size());
    classes.emplace_back();
    for (const FqMatrix& h : H) {
      const FqMatrix hi = inv(h);
      std::vector<FqMatrix> conj;
      for (const auto& m : tables[i]) conj.push_back(h * m * hi);
      auto it = index.find(conj);
      if (it != index.end() && cls[it->second] < 0) cls[it->second] = c;
    }
    cls[i] = c;
  }
  for (size_t i = 0; i < tables.size(); ++i) classes[cls[i]].push_back(static_cast<int>(i));
  return classes;
}

bool BruteCohomology::is_coboundary(const Cochain& c) const {
  std::string key;
  std::vector<char> free_mask(c.tuple_count(), 0);
  for (auto t : tuples_) free_mask[t] = 1;
  for (std::int64_t t = 0; t < c.tuple_count(); ++t) {
    const IntVec v = c.at(t);
    if (!free_mask[t]) {
      for (int i = 0; i < rank_; ++i)
        if (((v[i] % factors_[i]) + factors_[i]) % factors_[i] != 0) return false;
    }
  }
  for (auto t : tuples_) {
    const IntVec v = c.at(t);
    int code = 0;
    for (int i = rank_ - 1; i >= 0; --i) code = code * static_cast<int>(factors_[i]) + static_cast<int>(((v[i] % factors_[i]) + factors_[i]) % factors_[i]);
    key.push_back(static_cast<char>(code & 0xff));
    key.push_back(static_cast<char>(code >> 8));
  }
  return boundary_set_->count(key) > 0;
}

BruteCohomology brute_cohomology(int n, const GroupTable& G, const Subgroup& L, const ActionModule& A,
                                 const OracleBudget& budget, int max_representatives) {
  if (n != 1 && n != 2) throw Error(ErrorCode::DegreeTooHigh, "oracle handles degrees 1 and 2");
  const CodedModule M = code_module(G, A);
  const int N = G.order(), S = M.size;

  BruteCohomology out;
  out.degree_ = n;
  out.group_order_ = N;
  out.rank_ = M.rank;
  out.factors_ = M.factors;
  out.boundary_set_ = std::make_shared<std::unordered_set<std::string>>();

  // Free coordinates: no identity entry, not every entry in L.
  std::vector<Element> free1;
  for (Element g = 0; g < N; ++g)
    if (!L.contains(g)) free1.push_back(g);
  std::vector<std::int64_t> pos1(N, -1);
  for (size_t i = 0; i < free1.size(); ++i) pos1[free1[i]] = static_cast<std::int64_t>(i);
  std::vector<std::int64_t> pos2(static_cast<size_t>(N) * N, -1);
  std::vector<std::pair<Element, Element>> free2;
  for (Element g = 1; g < N; ++g)
    for (Element h = 1; h < N; ++h)
      if (!(L.contains(g) && L.contains(h))) {
        pos2[g * N + h] = static_cast<std::int64_t>(free2.size());
        free2.emplace_back(g, h);
      }
  if (n == 1)
    for (auto g : free1) out.tuples_.push_back(g);
  else
    for (auto [g, h] : free2) out.tuples_.push_back(static_cast<std::int64_t>(g) * N + h);

  auto key_of = [](const std::vector<int>& codes) {
    std::string key;
    for (int c : codes) {
      key.push_back(static_cast<char>(c & 0xff));
      key.push_back(static_cast<char>(c >> 8));
    }
    return key;
  };
  auto to_cochain = [&](const std::vector<int>& codes) {
    Cochain c = Cochain::zero(n, N, M.rank, true);
    for (size_t i = 0; i < codes.size(); ++i) c.set(out.tuples_[i], M.decode(codes[i]));
    return c;
  };
  auto difference = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = M.plus(a[i], M.neg[b[i]]);
    return d;
  };
  // Representatives: keep a cocycle when it differs from every kept one by a non-boundary.
  auto consider = [&](const std::vector<int>& z, std::vector<std::vector<int>>& kept) {
    if (static_cast<int>(kept.size()) > max_representatives) return;
    for (const auto& r : kept)
      if (out.boundary_set_->count(key_of(difference(z, r)))) return;
    kept.push_back(z);
  };

  // c on G from free1 codes (zero on L).
  auto one_value = [&](const std::vector<int>& c, Element g) { return pos1[g] < 0 ? 0 : c[pos1[g]]; };
  // (d c)(g, h) = g c(h) - c(gh) + c(g)
  auto d1 = [&](const std::vector<int>& c, Element g, Element h) {
    return M.plus(M.plus(M.on(g, one_value(c, h)), M.neg[one_value(c, G.mul(g, h))]), one_value(c, g));
  };

  const std::int64_t c1_count = checked_power(S, static_cast<std::int64_t>(free1.size()), budget.max_cochains, "1-cochain space");
  auto cochain1 = [&](std::int64_t t) {
    std::vector<int> c(free1.size());
    for (auto& x : c) {
      x = static_cast<int>(t % S);
      t /= S;
    }
    return c;
  };

  std::vector<std::vector<int>> kept;
  if (n == 1) {
    // B^1: g -> g a - a for L-fixed a.
    for (int a = 0; a < S; ++a) {
      bool fixed = true;
      for (Element l : L.elements())
        if (M.on(l, a) != a) fixed = false;
      if (!fixed) continue;
      std::vector<int> b;
      for (auto g : free1) b.push_back(M.plus(M.on(g, a), M.neg[a]));
      out.boundary_set_->insert(key_of(b));
    }
    for (std::int64_t t = 0; t < c1_count; ++t) {
      const auto c = cochain1(t);
      bool cocycle = true;
      for (Element g = 0; g < N && cocycle; ++g)
        for (Element h = 0; h < N; ++h)
          if (d1(c, g, h) != 0) {
            cocycle = false;
            break;
          }
      if (!cocycle) continue;
      ++out.cocycles_;
      if (max_representatives > 0) consider(c, kept);
    }
  } else {
    for (std::int64_t t = 0; t < c1_count; ++t) {
      const auto c = cochain1(t);
      std::vector<int> b;
      for (auto [g, h] : free2) b.push_back(d1(c, g, h));
      out.boundary_set_->insert(key_of(b));
    }

    // 2-cocycles by backtracking: each equation
    //   g c(h,k) - c(gh,k) + c(g,hk) - c(g,h) = 0
    // forces its last unknown once the others are set.
    struct Equation {
      Element g;
      std::int64_t var[4];
    };
    std::vector<Equation> eqs;
    std::vector<std::vector<int>> touching(free2.size());
    auto var = [&](Element a, Element b) { return pos2[static_cast<size_t>(a) * N + b]; };
    for (Element g = 1; g < N; ++g)
      for (Element h = 1; h < N; ++h)
        for (Element k = 1; k < N; ++k) {
          Equation e{g, {var(h, k), var(G.mul(g, h), k), var(g, G.mul(h, k)), var(g, h)}};
          bool any = false;
          for (auto v : e.var) any |= v >= 0;
          if (!any) continue;
          const int id = static_cast<int>(eqs.size());
          eqs.push_back(e);
          for (auto v : e.var)
            if (v >= 0 && (touching[v].empty() || touching[v].back() != id)) touching[v].push_back(id);
        }

    std::vector<int> val(free2.size(), -1);
    std::vector<std::int64_t> trail;
    auto value = [&](std::int64_t v) { return v < 0 ? 0 : val[v]; };
    auto assign = [&](std::int64_t v, int code, std::vector<int>& queue) {
      val[v] = code;
      trail.push_back(v);
      for (int id : touching[v]) queue.push_back(id);
    };
    auto propagate = [&](std::vector<int>& queue) {
      while (!queue.empty()) {
        const Equation& e = eqs[queue.back()];
        queue.pop_back();
        int unknown_term = -1;
        bool several = false;
        for (int i = 0; i < 4; ++i)
          if (e.var[i] >= 0 && val[e.var[i]] < 0) {
            if (unknown_term < 0) unknown_term = i;
            else several = true;  // includes a repeated unknown, which is left to branching
          }
        if (several) continue;
        if (unknown_term < 0) {
          const int s = M.plus(M.plus(M.on(e.g, value(e.var[0])), M.neg[value(e.var[1])]),
                               M.plus(value(e.var[2]), M.neg[value(e.var[3])]));
          if (s != 0) return false;
          continue;
        }
        auto known = [&](int i) { return i == unknown_term ? 0 : value(e.var[i]); };
        const int rest = M.plus(M.plus(M.on(e.g, known(0)), M.neg[known(1)]), M.plus(known(2), M.neg[known(3)]));
        int forced = 0;
        switch (unknown_term) {
          case 0: forced = M.on(M.inverse_of[e.g], M.neg[rest]); break;
          case 1: forced = rest; break;
          case 2: forced = M.neg[rest]; break;
          case 3: forced = rest; break;
        }
        assign(e.var[unknown_term], forced, queue);
      }
      return true;
    };

    std::vector<int> queue;
    for (int id = 0; id < static_cast<int>(eqs.size()); ++id) queue.push_back(id);
    if (propagate(queue)) {
      auto dfs = [&](auto&& self, size_t from) -> void {
        while (from < val.size() && val[from] >= 0) ++from;
        if (from == val.size()) {
          if (++out.cocycles_ > budget.max_cochains) over_budget("2-cocycle count", budget.max_cochains);
          if (max_representatives > 0) consider(val, kept);
          return;
        }
        for (int code = 0; code < S; ++code) {
          const size_t mark = trail.size();
          std::vector<int> q;
          assign(static_cast<std::int64_t>(from), code, q);
          if (propagate(q)) self(self, from + 1);
          while (trail.size() > mark) {
            val[trail.back()] = -1;
            trail.pop_back();
          }
        }
      };
      dfs(dfs, 0);
    }
  }
  out.coboundaries_ = static_cast<std::int64_t>(out.boundary_set_->size());
  if (max_representatives > 0 && static_cast<int>(kept.size()) <= max_representatives)
    for (const auto& z : kept) out.reps_.push_back(to_cochain(z));
  return out;
}

}  // namespace gstab
