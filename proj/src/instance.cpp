#include "gstab/instance.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "gstab/error.hpp"

namespace gstab {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<long long> integers(const std::string& text, int line) {
  std::istringstream ss(text);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      parse_error(line, "expected an integer, got '" + tok + "'");
    }
  }
  return out;
}

std::vector<std::vector<long long>> rows_of(const std::string& text, int line) {
  std::vector<std::vector<long long>> rows;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) rows.push_back(integers(part, line));
  return rows;
}

// "<element> = <rows>"
std::pair<Element, std::string> element_and_body(const std::string& rest, int line, int order) {
  const auto eq = rest.find('=');
  if (eq == std::string::npos) parse_error(line, "expected '<element> = <matrix>'");
  const auto head = integers(rest.substr(0, eq), line);
  if (head.size() != 1) parse_error(line, "expected a single element before '='");
  if (head[0] < 0 || head[0] >= order) parse_error(line, "element " + std::to_string(head[0]) + " out of range");
  return {static_cast<Element>(head[0]), rest.substr(eq + 1)};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

FqMatrix parse_matrix(const Field& F, int dim, const std::string& text) {
  const auto rows = rows_of(text, 0);
  if (static_cast<int>(rows.size()) != dim) throw Error(ErrorCode::ShapeMismatch, "matrix '" + trim(text) + "' needs " + std::to_string(dim) + " rows");
  FqMatrix M(F, dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim) throw Error(ErrorCode::ShapeMismatch, "matrix '" + trim(text) + "' needs " + std::to_string(dim) + " columns");
    for (int j = 0; j < dim; ++j) {
      if (rows[i][j] < 0 || rows[i][j] >= F.q())
        throw Error(ErrorCode::DomainViolation, "entry " + std::to_string(rows[i][j]) + " is not a field element code");
      M(i, j) = static_cast<Fq>(rows[i][j]);
    }
  }
  return M;
}

std::string matrix_to_text(const FqMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os.str();
}

ActionModule module_from_generators(const GroupTable& G, const IntVec& factors,
                                    const std::vector<std::pair<Element, std::vector<IntVec>>>& generators) {
  const int k = static_cast<int>(factors.size());
  ActionModule A = trivial_module(factors, G.order());
  if (generators.empty()) return A;
  auto reduce = [&](std::vector<IntVec> M) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) M[i][j] = ((M[i][j] % factors[i]) + factors[i]) % factors[i];
    return M;
  };
  auto product = [&](const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    std::vector<IntVec> c(k, IntVec(k, 0));
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l)
        for (int j = 0; j < k; ++j) c[i][j] += a[i][l] * b[l][j];
    return reduce(c);
  };
  std::vector<std::optional<std::vector<IntVec>>> img(G.order());
  img[0] = reduce(A.action[0]);
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (const auto& [s, m] : generators) {
        if (static_cast<int>(m.size()) != k) throw Error(ErrorCode::ShapeMismatch, "action matrix has wrong size");
        for (const auto& row : m)
          if (static_cast<int>(row.size()) != k) throw Error(ErrorCode::ShapeMismatch, "action matrix has wrong size");
        const Element y = G.mul(x, s);
        auto value = product(*img[x], reduce(m));
        if (!img[y]) {
          img[y] = std::move(value);
          next.push_back(y);
        } else if (*img[y] != value) {
          throw Error(ErrorCode::IllDefinedAction, "action matrices do not define a homomorphism (conflict at element " + std::to_string(y) + ")");
        }
      }
    frontier = std::move(next);
  }
  for (Element g = 0; g < G.order(); ++g) {
    if (!img[g]) throw Error(ErrorCode::IllDefinedAction, "action elements do not generate the group");
    A.action[g] = std::move(*img[g]);
  }
  validate_module(G, A);
  return A;
}

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_group = false, have_subgroup = false, have_field = false;
  std::vector<long long> subgroup_list;
  bool subgroup_by_gens = false;
  int subgroup_line = 0;
  std::vector<std::pair<int, std::string>> rep_lines, action_lines;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    std::istringstream ss(raw);
    std::string key;
    ss >> key;
    std::string rest;
    std::getline(ss, rest);
    rest = trim(rest);

    if (key == "group") {
      if (have_group) parse_error(line, "group given twice");
      have_group = true;
      if (rest.rfind("table", 0) == 0) {
        const auto n = integers(rest.substr(5), line);
        if (n.size() != 1 || n[0] < 1) parse_error(line, "expected 'group table N'");
        std::vector<std::vector<int>> table;
        while (static_cast<long long>(table.size()) < n[0]) {
          if (!std::getline(in, raw)) parse_error(line, "table ended early");
          ++line;
          if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
          if (trim(raw).empty()) continue;
          std::vector<int> row;
          for (long long v : integers(raw, line)) row.push_back(static_cast<int>(v));
          table.push_back(std::move(row));
        }
        inst.G = build_group(table);
        for (int g = 0; g < inst.G.order(); ++g)
          if (table[0][g] != g || table[g][0] != g) parse_error(line, "the identity must be element 0");
      } else {
        inst.group_name = rest;
        inst.G = named_group(rest);
      }
    } else if (key == "subgroup") {
      have_subgroup = true;
      subgroup_line = line;
      if (rest.rfind("gens", 0) == 0) {
        subgroup_by_gens = true;
        subgroup_list = integers(rest.substr(4), line);
      } else {
        subgroup_list = integers(rest, line);
      }
    } else if (key == "field") {
      const auto v = integers(rest, line);
      if (v.empty()) parse_error(line, "expected 'field p [e [modulus]]'");
      const int p = static_cast<int>(v[0]);
      const int e = v.size() > 1 ? static_cast<int>(v[1]) : 1;
      if (p < 2 || e < 1) parse_error(line, "bad field parameters");
      if (v.size() > 2) {
        std::vector<int> modulus(v.begin() + 2, v.end());
        inst.field_spec = make_field_spec(p, e, modulus);
      } else {
        if (!is_prime(p)) throw Error(ErrorCode::DomainViolation, std::to_string(p) + " is not prime");
        inst.field_spec = make_field_spec(p, e);
      }
      inst.field = Field(inst.field_spec);
      have_field = true;
    } else if (key == "dim") {
      const auto v = integers(rest, line);
      if (v.size() != 1 || v[0] < 1 || v[0] > 16) parse_error(line, "expected 'dim n' with 1 <= n <= 16");
      inst.dim = static_cast<int>(v[0]);
    } else if (key == "rep") {
      rep_lines.emplace_back(line, rest);
    } else if (key == "module") {
      inst.module_factors.clear();
      for (long long v : integers(rest, line)) {
        if (v < 1) parse_error(line, "cyclic factors must be positive");
        inst.module_factors.push_back(v);
      }
      if (inst.module_factors.empty()) parse_error(line, "module needs at least one factor");
    } else if (key == "action") {
      action_lines.emplace_back(line, rest);
    } else if (key == "series") {
      if (rest == "radical") inst.series = Series::Radical;
      else if (rest == "derived") inst.series = Series::Derived;
      else parse_error(line, "series must be radical or derived");
    } else if (key == "budget-H" || key == "budget-cochains") {
      const auto v = integers(rest, line);
      if (v.size() != 1 || v[0] < 1) parse_error(line, "budget must be a positive integer");
      (key == "budget-H" ? inst.budget_H : inst.budget_cochains) = v[0];
    } else {
      parse_error(line, "unknown key '" + key + "'");
    }
  }

  if (!have_group) parse_error(line, "missing 'group'");
  const int N = inst.G.order();
  std::vector<Element> elems;
  for (long long v : subgroup_list) {
    if (v < 0 || v >= N) parse_error(subgroup_line, "element " + std::to_string(v) + " out of range");
    elems.push_back(static_cast<Element>(v));
  }
  if (!have_subgroup) inst.L = trivial_subgroup(inst.G);
  else if (subgroup_by_gens) inst.L = generate_subgroup(inst.G, elems);
  else inst.L = make_subgroup(inst.G, elems);
  (void)have_field;

  if (!rep_lines.empty() && inst.dim == 0) parse_error(rep_lines.front().first, "rep given without dim");
  if (inst.dim > 0) {
    for (const auto& [ln, text] : rep_lines) {
      auto [x, body] = element_and_body(text, ln, N);
      inst.rep_generators.emplace_back(x, parse_matrix(inst.field, inst.dim, body));
    }
    if (inst.rep_generators.empty()) {
      inst.theta = trivial_representation(inst.L, inst.field, inst.dim);
    } else {
      inst.theta = representation_from_generators(inst.G, inst.L, inst.field, inst.dim, inst.rep_generators);
    }
    // Keep generator images only, on a canonical generating set.
    inst.rep_generators.clear();
    for (Element s : generating_set(inst.G, inst.L))
      if (!(*inst.theta)(s).is_identity()) inst.rep_generators.emplace_back(s, (*inst.theta)(s));
  }

  if (!action_lines.empty() && inst.module_factors.empty()) parse_error(action_lines.front().first, "action given without module");
  if (!inst.module_factors.empty()) {
    const int k = static_cast<int>(inst.module_factors.size());
    for (const auto& [ln, text] : action_lines) {
      auto [x, body] = element_and_body(text, ln, N);
      std::vector<IntVec> M;
      for (const auto& row : rows_of(body, ln)) M.emplace_back(row.begin(), row.end());
      if (static_cast<int>(M.size()) != k) parse_error(ln, "action matrix needs " + std::to_string(k) + " rows");
      for (const auto& row : M)
        if (static_cast<int>(row.size()) != k) parse_error(ln, "action matrix needs " + std::to_string(k) + " columns");
      inst.action_generators.emplace_back(x, std::move(M));
    }
    inst.module = module_from_generators(inst.G, inst.module_factors, inst.action_generators);
    inst.action_generators.clear();
    const ActionModule trivial = trivial_module(inst.module_factors, N);
    for (Element s : generating_set(inst.G, whole_group(inst.G)))
      if (inst.module->action[s] != trivial.action[s]) inst.action_generators.emplace_back(s, inst.module->action[s]);
  }
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  return parse_instance(in);
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  const int N = inst.G.order();
  if (!inst.group_name.empty()) {
    os << "group " << inst.group_name << "\n";
  } else {
    os << "group table " << N << "\n";
    for (Element a = 0; a < N; ++a) {
      for (Element b = 0; b < N; ++b) os << (b ? " " : "") << inst.G.mul(a, b);
      os << "\n";
    }
  }
  os << "subgroup";
  for (Element l : inst.L.elements()) os << " " << l;
  os << "\n";
  os << "field " << inst.field_spec.p << " " << inst.field_spec.e;
  for (int c : inst.field_spec.modulus) os << " " << c;
  os << "\n";
  if (inst.dim > 0) {
    os << "dim " << inst.dim << "\n";
    for (const auto& [x, m] : inst.rep_generators) os << "rep " << x << " = " << matrix_to_text(m) << "\n";
  }
  if (!inst.module_factors.empty()) {
    os << "module";
    for (auto f : inst.module_factors) os << " " << f;
    os << "\n";
    for (const auto& [x, m] : inst.action_generators) {
      os << "action " << x << " =";
      for (size_t i = 0; i < m.size(); ++i) {
        os << (i ? ";" : "");
        for (auto v : m[i]) os << " " << v;
      }
      os << "\n";
    }
  }
  os << "series " << to_string(inst.series) << "\n";
  os << "budget-H " << inst.budget_H << "\n";
  os << "budget-cochains " << inst.budget_cochains << "\n";
  return os.str();
}

}  // namespace gstab
