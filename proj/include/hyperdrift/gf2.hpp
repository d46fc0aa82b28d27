#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperdrift/bitvec.hpp"

namespace hyperdrift {

class Hypergraph;
class XorSatInstance;

namespace gf2 {

/// Linear system a·x = b over GF(2); rows are bit-packed.
struct Gf2System {
  std::size_t cols = 0;
  std::vector<BitVector> rows;
  BitVector rhs;

  Gf2System() = default;
  Gf2System(std::size_t rows, std::size_t cols);

  std::size_t num_rows() const noexcept { return rows.size(); }
  /// Throws std::invalid_argument when dimensions disagree.
  void validate() const;
  /// a·x as a vector of row parities.
  BitVector apply(const BitVector& x) const;
};

enum class SolveStatus { Unique, Affine, Inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  /// Solution with every free variable set to 0; absent when inconsistent.
  std::optional<BitVector> witness;
  /// Basis of the null space of a, reduced row echelon form. Empty for
  /// Unique; also filled for Inconsistent systems.
  std::vector<BitVector> kernel;
  std::size_t rank = 0;
};

SolveResult solve(const Gf2System& s);

std::size_t rank(const std::vector<BitVector>& rows);

/// Null space basis of the matrix with the given rows and column count.
std::vector<BitVector> kernel_basis(const std::vector<BitVector>& rows, std::size_t cols);

/// Canonical reduced row echelon basis of span(vectors); leading ones at the
/// lowest index, rows ordered by leading index, zero rows dropped.
std::vector<BitVector> reduced_echelon(std::vector<BitVector> vectors);

/// True when v lies in the span of basis (any basis, not necessarily reduced).
bool in_span(const std::vector<BitVector>& basis, const BitVector& v);

/// One unknown z_e per edge index and, for each vertex v, the equation
/// Σ_{e ∋ v} z_e = w1(v) + w2(v).
Gf2System reachability_system(const Hypergraph& h, const BitVector& w1, const BitVector& w2);

/// w1 is stabilizing for the annihilating walk iff H(w1, 0) is solvable.
bool is_stabilizing(const Hypergraph& h, const BitVector& w1);

/// Every variable occurs in an even number of equations.
bool is_cyclic(const XorSatInstance& inst);
/// No nonempty subset of equations in which every variable occurs an even
/// number of times.
bool is_acyclic(const XorSatInstance& inst);
bool is_uniquely_satisfiable(const XorSatInstance& inst);

}  // namespace gf2
}  // namespace hyperdrift
