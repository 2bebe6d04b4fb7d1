#include "gstab/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gstab/error.hpp"

namespace gstab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::IllDefinedAction: return "IllDefinedAction";
    case ErrorCode::DefectEscapesLevel: return "DefectEscapesLevel";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
    case ErrorCode::NotSoluble: return "NotSoluble";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Element GroupTable::power(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity();
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int GroupTable::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupTable build_group(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::NoIdentity, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i) + " has wrong length");
    for (int v : table[i])
      if (v < 0 || v >= n)
        throw Error(ErrorCode::ShapeMismatch, "entry " + std::to_string(v) + " out of range in row " +
                                                  std::to_string(i));
  }

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[c][g] == g && table[g][c] == g;
    if (ok) e = c;
  }
  if (e < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity");

  for (int g = 0; g < n; ++g) {
    bool found = false;
    for (int h = 0; h < n && !found; ++h) found = table[g][h] == e && table[h][g] == e;
    if (!found) throw Error(ErrorCode::NoInverse, "element " + std::to_string(g) + " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          std::ostringstream os;
          os << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b << "*" << c << ")";
          throw Error(ErrorCode::NotAssociative, os.str());
        }

  // Swap labels e <-> 0 so the identity is element 0.
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);

  GroupTable G;
  G.order_ = n;
  G.mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul_[relabel[a] * n + relabel[b]] = relabel[table[a][b]];
  G.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul_[a * n + b] == 0) G.inv_[a] = b;
  return G;
}

Subgroup make_subgroup(const GroupTable& G, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup L;
  L.mask_.assign(G.order(), 0);
  for (Element g : elements) {
    if (g < 0 || g >= G.order())
      throw Error(ErrorCode::NotASubgroup, "element " + std::to_string(g) + " out of range");
    L.mask_[g] = 1;
  }
  if (elements.empty() || !L.mask_[G.identity()])
    throw Error(ErrorCode::NotASubgroup, "identity missing");
  for (Element a : elements)
    for (Element b : elements)
      if (!L.mask_[G.mul(a, b)])
        throw Error(ErrorCode::NotASubgroup, "not closed: " + std::to_string(a) + "*" +
                                                 std::to_string(b) + " = " + std::to_string(G.mul(a, b)));
  L.position_.assign(G.order(), -1);
  for (size_t i = 0; i < elements.size(); ++i) L.position_[elements[i]] = static_cast<int>(i);
  L.elements_ = std::move(elements);
  return L;
}

Subgroup generate_subgroup(const GroupTable& G, std::span<const Element> generators) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Element> frontier{G.identity()};
  std::vector<Element> all{G.identity()};
  seen[G.identity()] = 1;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element s : generators) {
        Element y = G.mul(x, s);
        if (!seen[y]) {
          seen[y] = 1;
          all.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return make_subgroup(G, std::move(all));
}

std::vector<Element> generating_set(const GroupTable& G, const Subgroup& L) {
  std::vector<Element> gens;
  Subgroup span = trivial_subgroup(G);
  for (Element x : L.elements())
    if (!span.contains(x)) {
      gens.push_back(x);
      span = generate_subgroup(G, gens);
    }
  return gens;
}

Subgroup trivial_subgroup(const GroupTable& G) { return make_subgroup(G, {G.identity()}); }

Subgroup whole_group(const GroupTable& G) {
  std::vector<Element> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(G, std::move(all));
}

std::vector<Subgroup> all_subgroups(const GroupTable& G) {
  // Close the set of cyclic subgroups under joins; fine at table scale.
  std::set<std::vector<Element>> found;
  std::vector<Subgroup> result;
  auto add = [&](Subgroup s) {
    if (found.insert(s.elements()).second) result.push_back(std::move(s));
  };
  for (Element g = 0; g < G.order(); ++g) {
    Element gen[] = {g};
    add(generate_subgroup(G, gen));
  }
  for (size_t i = 0; i < result.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<Element> gens = result[i].elements();
      gens.insert(gens.end(), result[j].elements().begin(), result[j].elements().end());
      add(generate_subgroup(G, gens));
    }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return result;
}

Subgroup commutator_subgroup(const GroupTable& G) {
  std::vector<Element> gens;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b) gens.push_back(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
  return generate_subgroup(G, gens);
}

bool is_normal(const GroupTable& G, const Subgroup& L) {
  if (L.parent_order() != G.order()) throw Error(ErrorCode::NotASubgroup, "subgroup of a different group");
  for (Element g = 0; g < G.order(); ++g)
    for (Element l : L.elements())
      if (!L.contains(G.conjugate(g, l))) return false;
  return true;
}

Subgroup intersect(const GroupTable& G, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> common;
  for (Element g : a.elements())
    if (b.contains(g)) common.push_back(g);
  return make_subgroup(G, std::move(common));
}

Subgroup conjugate_subgroup(const GroupTable& G, const Subgroup& L, Element x) {
  std::vector<Element> conj;
  for (Element l : L.elements()) conj.push_back(G.mul(G.mul(G.inv(x), l), x));
  return make_subgroup(G, std::move(conj));
}

Subgroup core_subgroup(const GroupTable& G, const Subgroup& L) {
  Subgroup core = L;
  for (Element g = 0; g < G.order(); ++g) core = intersect(G, core, conjugate_subgroup(G, L, g));
  return core;
}

CosetSystem coset_system(const GroupTable& G, const Subgroup& L) {
  CosetSystem cs;
  cs.subgroup = L;
  cs.coset_of.assign(G.order(), -1);
  for (Element g = 0; g < G.order(); ++g) {
    if (cs.coset_of[g] >= 0) continue;
    const int index = static_cast<int>(cs.transversal.size());
    cs.transversal.push_back(g);
    for (Element l : L.elements()) cs.coset_of[G.mul(g, l)] = index;
  }
  return cs;
}

QuotientGroup quotient_group(const GroupTable& G, const Subgroup& L) {
  if (!is_normal(G, L)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  QuotientGroup q;
  q.cosets = coset_system(G, L);
  const int m = static_cast<int>(q.cosets.transversal.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = q.cosets.coset_of[G.mul(q.cosets.transversal[i], q.cosets.transversal[j])];
  q.group = build_group(table);  // coset of the identity is index 0 already
  q.projection = q.cosets.coset_of;
  return q;
}

GroupTable subgroup_table(const GroupTable& G, const Subgroup& L) {
  const int n = L.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = L.index_of(G.mul(L.elements()[i], L.elements()[j]));
  return build_group(table);
}

GroupTable cyclic_group(int n) { return abelian_group({n}); }

GroupTable abelian_group(const std::vector<int>& factors) {
  int order = 1;
  for (int f : factors) {
    if (f < 1) throw Error(ErrorCode::ParseError, "cyclic factor must be positive");
    order *= f;
  }
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int ra = a, rb = b, stride = 1, c = 0;
      for (int f : factors) {
        c += ((ra % f + rb % f) % f) * stride;
        ra /= f;
        rb /= f;
        stride *= f;
      }
      table[a][b] = c;
    }
  return build_group(table);
}

GroupTable dihedral_group(int n) {
  // r^i s^j -> i + n*j, with s r s = r^{-1}.
  const int order = 2 * n;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x % n, b = x / n, c = y % n, d = y / n;
      const int rot = ((b == 0 ? a + c : a - c) % n + n) % n;
      table[x][y] = rot + n * ((b + d) % 2);
    }
  return build_group(table);
}

GroupTable dicyclic_group(int n) {
  // a^i x^j -> i + 2n*j, with x^2 = a^n and x a x^{-1} = a^{-1}.
  const int m = 2 * n;
  const int order = 2 * m;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int u = 0; u < order; ++u)
    for (int v = 0; v < order; ++v) {
      const int i = u % m, j = u / m, k = v % m, l = v / m;
      int e, x;
      if (j == 0) {
        e = i + k;
        x = l;
      } else if (l == 0) {
        e = i - k;
        x = 1;
      } else {
        e = i - k + n;
        x = 0;
      }
      table[u][v] = ((e % m) + m) % m + m * x;
    }
  return build_group(table);
}

std::vector<std::vector<int>> symmetric_group_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

GroupTable symmetric_group(int n) {
  auto perms = symmetric_group_permutations(n);
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // (ab)(i) = a(b(i))
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return build_group(table);
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  // (x, y) -> x + |a| * y
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      table[u][v] = a.mul(u % a.order(), v % a.order()) + a.order() * b.mul(u / a.order(), v / a.order());
  return build_group(table);
}

namespace {

int parse_positive(const std::string& s, const std::string& name) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 1) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad parameter '" + s + "' in group name '" + name + "'");
  }
}

}  // namespace

GroupTable named_group(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "group name needs kind:param, got '" + name + "'");
  const std::string kind = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  if (kind == "cyclic") return cyclic_group(parse_positive(arg, name));
  if (kind == "dihedral") return dihedral_group(parse_positive(arg, name));
  if (kind == "sym") {
    const int n = parse_positive(arg, name);
    if (n > 5) throw Error(ErrorCode::BudgetExceeded, "sym:n limited to n <= 5");
    return symmetric_group(n);
  }
  if (kind == "dicyclic") return dicyclic_group(parse_positive(arg, name));
  if (kind == "abelian") {
    std::vector<int> factors;
    std::stringstream ss(arg);
    std::string part;
    while (std::getline(ss, part, ',')) factors.push_back(parse_positive(part, name));
    if (factors.empty()) throw Error(ErrorCode::ParseError, "abelian: needs factors");
    return abelian_group(factors);
  }
  throw Error(ErrorCode::ParseError, "unknown group kind '" + kind + "'");
}

}  // namespace gstab
