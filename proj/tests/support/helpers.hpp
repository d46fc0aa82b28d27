#pragma once

#include <cstdint>
#include <vector>

#include "hyperdrift/bitvec.hpp"
#include "hyperdrift/hypergraph.hpp"
#include "hyperdrift/xorsat.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Edges edges_of(const hyperdrift::Hypergraph& h) {
  oracle::Edges out;
  for (const auto& e : h.edges()) out.emplace_back(e.begin(), e.end());
  return out;
}

inline std::vector<oracle::Eq> eqs_of(const hyperdrift::XorSatInstance& inst) {
  std::vector<oracle::Eq> out;
  for (const auto& q : inst.equations()) out.push_back({{q.vars.begin(), q.vars.end()}, q.rhs});
  return out;
}

inline oracle::Mask mask_of(const hyperdrift::BitVector& v) {
  oracle::Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.test(i)) m |= oracle::Mask{1} << i;
  }
  return m;
}

}  // namespace testing_support
