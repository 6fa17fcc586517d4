#ifndef POCKETS_ISOMORPHISM_HPP
#define POCKETS_ISOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pockets/graph.hpp"

namespace pockets {

struct IsoResult {
  bool isomorphic = false;
  // mapping[i] = image of g1's vertex i in g2 (empty when not isomorphic).
  std::vector<int> mapping;
};

// Color refinement seeded with per-vertex (degree, neighborhood edge count,
// neighborhood triangle count), iterated to a stable partition.  Returns
// per-vertex colors with ids canonical across the whole input collection,
// so histograms of two graphs refined together are directly comparable.
std::vector<std::vector<int>> refine_colors(const std::vector<const Graph*>& graphs);

// Order-insensitive invariant; equal signatures are necessary for isomorphism.
std::vector<std::int64_t> invariant_signature(const Graph& g);

// Cheap non-isomorphism evidence without a full search: "degree-sequence"
// or "refinement-distinguisher".  nullopt when the invariants agree.
std::optional<std::string> refinement_distinguisher(const Graph& g1, const Graph& g2);

// Exact isomorphism test by refinement plus backtracking on color classes.
// Both orders must be <= 16.
IsoResult are_isomorphic(const Graph& g1, const Graph& g2);

// Checks that mapping is an adjacency-preserving bijection g1 -> g2.
bool verify_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& mapping);

}  // namespace pockets

#endif
