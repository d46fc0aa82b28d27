#include "hyperdrift/xorsat.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "hyperdrift/error.hpp"

namespace hyperdrift {

XorSatInstance::XorSatInstance(std::size_t num_variables, std::vector<Equation> equations)
    : n_(num_variables), equations_(std::move(equations)) {
  for (std::size_t i = 0; i < equations_.size(); ++i) {
    auto& vars = equations_[i].vars;
    if (vars.empty()) throw std::invalid_argument(fmt::format("equation {} has no variables", i));
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
      throw std::invalid_argument(fmt::format("equation {} repeats a variable", i));
    }
    if (vars.back() >= n_) {
      throw std::invalid_argument(fmt::format("equation {} uses variable {} out of range for n = {}", i, vars.back(), n_));
    }
  }
}

std::optional<std::size_t> XorSatInstance::uniform_width() const {
  if (equations_.empty()) return std::nullopt;
  const std::size_t k = equations_.front().vars.size();
  for (const auto& eq : equations_) {
    if (eq.vars.size() != k) return std::nullopt;
  }
  return k;
}

bool XorSatInstance::equation_satisfied(std::size_t i, const Assignment& x) const {
  const auto& eq = equations_.at(i);
  bool parity = false;
  for (const Variable v : eq.vars) parity ^= x.test(v);
  return parity == eq.rhs;
}

bool XorSatInstance::satisfies(const Assignment& x) const { return unsatisfied_count(x) == 0; }

std::size_t XorSatInstance::unsatisfied_count(const Assignment& x) const {
  if (x.size() != n_) {
    throw std::invalid_argument(fmt::format("assignment has {} bits for {} variables", x.size(), n_));
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < equations_.size(); ++i) bad += equation_satisfied(i, x) ? 0 : 1;
  return bad;
}

std::vector<std::vector<std::uint32_t>> XorSatInstance::occurrences() const {
  std::vector<std::vector<std::uint32_t>> occ(n_);
  for (std::size_t i = 0; i < equations_.size(); ++i) {
    for (const Variable v : equations_[i].vars) occ[v].push_back(static_cast<std::uint32_t>(i));
  }
  return occ;
}

gf2::Gf2System XorSatInstance::system() const {
  gf2::Gf2System s(equations_.size(), n_);
  for (std::size_t i = 0; i < equations_.size(); ++i) {
    for (const Variable v : equations_[i].vars) s.rows[i].set(v);
    s.rhs.set(i, equations_[i].rhs);
  }
  return s;
}

Hypergraph formula_hypergraph(const XorSatInstance& inst) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(inst.num_equations());
  for (const auto& eq : inst.equations()) edges.emplace_back(eq.vars.begin(), eq.vars.end());
  return Hypergraph(inst.num_variables(), std::move(edges));
}

TriadicDual triadic_dual_map(const XorSatInstance& inst) {
  TriadicDual out;
  out.edge_of_variable.assign(inst.num_variables(), std::nullopt);
  std::vector<std::vector<Vertex>> edges;
  auto occ = inst.occurrences();
  for (Variable v = 0; v < occ.size(); ++v) {
    if (occ[v].empty()) continue;
    out.edge_of_variable[v] = static_cast<EdgeIndex>(edges.size());
    out.variable_of_edge.push_back(v);
    edges.emplace_back(occ[v].begin(), occ[v].end());
  }
  out.graph = Hypergraph(inst.num_equations(), std::move(edges));
  return out;
}

Hypergraph triadic_dual(const XorSatInstance& inst) { return triadic_dual_map(inst).graph; }

BitVector dual_config(const XorSatInstance& inst, const Assignment& x) {
  if (x.size() != inst.num_variables()) {
    throw std::invalid_argument(
        fmt::format("assignment has {} bits for {} variables", x.size(), inst.num_variables()));
  }
  BitVector out(inst.num_equations());
  for (std::size_t i = 0; i < inst.num_equations(); ++i) out.set(i, !inst.equation_satisfied(i, x));
  return out;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
    return true;
  }
  return false;
}

long long parse_integer(const std::string& token, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line_no, fmt::format("invalid integer '{}'", token));
}

}  // namespace

XorSatInstance parse_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError(line_no, "missing 'p xnf <n> <m>' header");
  std::istringstream header(line);
  std::string p;
  std::string fmt_tag;
  long long n = -1;
  long long m = -1;
  std::string extra;
  if (!(header >> p >> fmt_tag >> n >> m) || p != "p" || fmt_tag != "xnf" || n < 0 || m < 0 || (header >> extra)) {
    throw ParseError(line_no, "malformed header, expected 'p xnf <n> <m>'");
  }
  std::vector<Equation> equations;
  equations.reserve(static_cast<std::size_t>(m));
  while (next_content_line(in, line, line_no)) {
    if (static_cast<long long>(equations.size()) == m) {
      throw ParseError(line_no, fmt::format("more than {} equations", m));
    }
    std::istringstream row(line);
    std::vector<std::string> tokens;
    std::string token;
    while (row >> token) tokens.push_back(token);
    if (tokens.size() < 3) throw ParseError(line_no, "equation needs a rhs, at least one variable and a 0 terminator");
    const long long b = parse_integer(tokens.front(), line_no);
    if (b != 0 && b != 1) throw ParseError(line_no, fmt::format("rhs must be 0 or 1, got {}", b));
    if (tokens.back() != "0") throw ParseError(line_no, "equation must end with the token 0");
    Equation eq;
    eq.rhs = b == 1;
    for (std::size_t t = 1; t + 1 < tokens.size(); ++t) {
      const long long v = parse_integer(tokens[t], line_no);
      if (v < 0 || v >= n) throw ParseError(line_no, fmt::format("variable {} out of range for n = {}", v, n));
      const auto var = static_cast<Variable>(v);
      if (std::find(eq.vars.begin(), eq.vars.end(), var) != eq.vars.end()) {
        throw ParseError(line_no, fmt::format("duplicate variable {}", v));
      }
      if (!eq.vars.empty() && var < eq.vars.back()) {
        throw ParseError(line_no, "variable ids must be strictly increasing");
      }
      eq.vars.push_back(var);
    }
    equations.push_back(std::move(eq));
  }
  if (static_cast<long long>(equations.size()) != m) {
    throw ParseError(line_no, fmt::format("expected {} equations, found {}", m, equations.size()));
  }
  return XorSatInstance(static_cast<std::size_t>(n), std::move(equations));
}

void write_instance(std::ostream& out, const XorSatInstance& inst) {
  out << "p xnf " << inst.num_variables() << ' ' << inst.num_equations() << '\n';
  for (const auto& eq : inst.equations()) {
    out << (eq.rhs ? '1' : '0');
    for (const Variable v : eq.vars) out << ' ' << v;
    out << " 0\n";
  }
}

Assignment parse_assignment(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) break;
  }
  for (const char c : line) {
    if (c != '0' && c != '1') throw ParseError(line_no, fmt::format("assignment character '{}' is not 0 or 1", c));
  }
  return BitVector::from_string(line);
}

void write_assignment(std::ostream& out, const Assignment& x) { out << x.to_string() << '\n'; }

}  // namespace hyperdrift
