#include "hyperdrift/gf2.hpp"

#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "hyperdrift/hypergraph.hpp"
#include "hyperdrift/xorsat.hpp"

namespace hyperdrift::gf2 {

namespace {

struct Echelon {
  std::vector<BitVector> rows;
  BitVector rhs;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan elimination in place; rows [0, rank) end up reduced with
// leading ones at pivot_cols, the remaining rows are zero on the left.
Echelon eliminate(std::vector<BitVector> rows, BitVector rhs, std::size_t cols) {
  Echelon out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
    if (pivot == rows.size()) continue;
    if (pivot != next) {
      std::swap(rows[pivot], rows[next]);
      const bool tmp = rhs.test(pivot);
      rhs.set(pivot, rhs.test(next));
      rhs.set(next, tmp);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].test(c)) {
        rows[r] ^= rows[next];
        if (rhs.test(next)) rhs.flip(r);
      }
    }
    out.pivot_cols.push_back(c);
    ++next;
  }
  out.rows = std::move(rows);
  out.rhs = std::move(rhs);
  return out;
}

std::vector<BitVector> kernel_from_echelon(const Echelon& ech, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (const auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols);
    v.set(f);
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
      if (ech.rows[i].test(f)) v.set(ech.pivot_cols[i]);
    }
    basis.push_back(std::move(v));
  }
  return reduced_echelon(std::move(basis));
}

}  // namespace

Gf2System::Gf2System(std::size_t num_rows, std::size_t num_cols)
    : cols(num_cols), rows(num_rows, BitVector(num_cols)), rhs(num_rows) {}

void Gf2System::validate() const {
  if (rhs.size() != rows.size()) {
    throw std::invalid_argument(fmt::format("rhs has {} entries for {} rows", rhs.size(), rows.size()));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument(fmt::format("row {} has {} columns, expected {}", r, rows[r].size(), cols));
    }
  }
}

BitVector Gf2System::apply(const BitVector& x) const {
  BitVector out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out.set(r, rows[r].dot(x));
  return out;
}

SolveResult solve(const Gf2System& s) {
  s.validate();
  Echelon ech = eliminate(s.rows, s.rhs, s.cols);
  SolveResult result;
  result.rank = ech.pivot_cols.size();
  result.kernel = kernel_from_echelon(ech, s.cols);

  for (std::size_t r = result.rank; r < ech.rows.size(); ++r) {
    if (ech.rhs.test(r)) {
      result.status = SolveStatus::Inconsistent;
      return result;
    }
  }
  BitVector witness(s.cols);
  for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
    if (ech.rhs.test(i)) witness.set(ech.pivot_cols[i]);
  }
  result.witness = std::move(witness);
  result.status = result.rank == s.cols ? SolveStatus::Unique : SolveStatus::Affine;
  return result;
}

std::size_t rank(const std::vector<BitVector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return eliminate(rows, BitVector(rows.size()), cols).pivot_cols.size();
}

std::vector<BitVector> kernel_basis(const std::vector<BitVector>& rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("kernel_basis: row width mismatch");
  }
  return kernel_from_echelon(eliminate(rows, BitVector(rows.size()), cols), cols);
}

std::vector<BitVector> reduced_echelon(std::vector<BitVector> vectors) {
  if (vectors.empty()) return vectors;
  const std::size_t cols = vectors.front().size();
  const std::size_t count = vectors.size();
  Echelon ech = eliminate(std::move(vectors), BitVector(count), cols);
  ech.rows.resize(ech.pivot_cols.size());
  return std::move(ech.rows);
}

bool in_span(const std::vector<BitVector>& basis, const BitVector& v) {
  std::vector<BitVector> extended = basis;
  const std::size_t before = rank(extended);
  extended.push_back(v);
  return rank(extended) == before;
}

Gf2System reachability_system(const Hypergraph& h, const BitVector& w1, const BitVector& w2) {
  const std::size_t n = h.num_vertices();
  if (w1.size() != n || w2.size() != n) {
    throw std::invalid_argument(
        fmt::format("reachability_system: configurations of size {} and {} for {} vertices", w1.size(), w2.size(), n));
  }
  Gf2System s(n, h.num_edges());
  for (Vertex v = 0; v < n; ++v) {
    for (const EdgeIndex e : h.incident(v)) s.rows[v].set(e);
    s.rhs.set(v, w1.test(v) != w2.test(v));
  }
  return s;
}

bool is_stabilizing(const Hypergraph& h, const BitVector& w1) {
  return solve(reachability_system(h, w1, BitVector(h.num_vertices()))).status != SolveStatus::Inconsistent;
}

bool is_cyclic(const XorSatInstance& inst) {
  std::vector<std::size_t> occurrences(inst.num_variables(), 0);
  for (const auto& eq : inst.equations()) {
    for (const auto v : eq.vars) ++occurrences[v];
  }
  for (const auto c : occurrences) {
    if (c % 2 != 0) return false;
  }
  return true;
}

bool is_acyclic(const XorSatInstance& inst) {
  // Subsets of equations with even variable occurrences are the kernel of the
  // transposed (variable x equation) incidence matrix.
  const std::size_t m = inst.num_equations();
  std::vector<BitVector> rows(inst.num_variables(), BitVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto v : inst.equation(i).vars) rows[v].set(i);
  }
  return kernel_basis(rows, m).empty();
}

bool is_uniquely_satisfiable(const XorSatInstance& inst) {
  return solve(inst.system()).status == SolveStatus::Unique;
}

}  // namespace hyperdrift::gf2
