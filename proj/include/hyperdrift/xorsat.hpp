#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hyperdrift/bitvec.hpp"
#include "hyperdrift/gf2.hpp"
#include "hyperdrift/hypergraph.hpp"

namespace hyperdrift {

using Variable = std::uint32_t;
using Assignment = BitVector;

/// Parity equation Σ_{v ∈ vars} x_v = rhs; vars sorted and duplicate-free.
struct Equation {
  std::vector<Variable> vars;
  bool rhs = false;
  friend bool operator==(const Equation&, const Equation&) = default;
};

class XorSatInstance {
 public:
  XorSatInstance() = default;
  /// Sorts every varset. Throws std::invalid_argument on out-of-range or
  /// repeated variables and on empty equations.
  XorSatInstance(std::size_t num_variables, std::vector<Equation> equations);

  std::size_t num_variables() const noexcept { return n_; }
  std::size_t num_equations() const noexcept { return equations_.size(); }
  const std::vector<Equation>& equations() const noexcept { return equations_; }
  const Equation& equation(std::size_t i) const { return equations_.at(i); }
  /// Common width when every equation has the same number of variables.
  std::optional<std::size_t> uniform_width() const;

  bool satisfies(const Assignment& x) const;
  bool equation_satisfied(std::size_t i, const Assignment& x) const;
  std::size_t unsatisfied_count(const Assignment& x) const;
  /// Occurrence lists: equations containing each variable, increasing.
  std::vector<std::vector<std::uint32_t>> occurrences() const;
  /// Equation x variable system A·x = b.
  gf2::Gf2System system() const;

  friend bool operator==(const XorSatInstance&, const XorSatInstance&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Equation> equations_;
};

/// Variables as vertices, one hyperedge per equation in equation order.
Hypergraph formula_hypergraph(const XorSatInstance& inst);

struct TriadicDual {
  Hypergraph graph;
  /// Edge index of each variable, absent for variables in no equation.
  std::vector<std::optional<EdgeIndex>> edge_of_variable;
  std::vector<Variable> variable_of_edge;
};

/// Equations as vertices, one hyperedge per occurring variable (increasing
/// variable order) holding the equations that contain it.
TriadicDual triadic_dual_map(const XorSatInstance& inst);
Hypergraph triadic_dual(const XorSatInstance& inst);

/// Bit i is 1 when equation i is unsatisfied by x.
BitVector dual_config(const XorSatInstance& inst, const Assignment& x);

/// Format: "p xnf <n> <m>" then m lines "<b> v1 ... vk 0". Throws ParseError.
XorSatInstance parse_instance(std::istream& in);
void write_instance(std::ostream& out, const XorSatInstance& inst);

/// A single line of '0'/'1' characters. Throws ParseError.
Assignment parse_assignment(std::istream& in);
void write_assignment(std::ostream& out, const Assignment& x);

}  // namespace hyperdrift
