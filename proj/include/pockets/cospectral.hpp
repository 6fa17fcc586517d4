#ifndef POCKETS_COSPECTRAL_HPP
#define POCKETS_COSPECTRAL_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pockets/formulas.hpp"
#include "pockets/graph.hpp"

namespace pockets {

enum class WitnessGrade {
  degree_sequence,          // degree sequences differ
  refinement_distinguisher, // enriched color refinement separates them
  exhausted_backtracking,   // full search proved non-isomorphism
  isomorphic,               // the graphs are isomorphic (trivially cospectral)
  not_checked               // beyond the exact-search guard, no invariant split
};

std::string witness_grade_name(WitnessGrade g);

struct CospectralCertificate {
  Graph g1, g2;
  MatrixKind kind = MatrixKind::adjacency;
  IntPoly shared_charpoly;
  WitnessGrade witness = WitnessGrade::not_checked;

  // Non-isomorphic cospectral mates are the interesting outcome.
  bool proper_pair() const {
    return witness == WitnessGrade::degree_sequence ||
           witness == WitnessGrade::refinement_distinguisher ||
           witness == WitnessGrade::exhausted_backtracking;
  }
  // Recompute everything from scratch and confirm the claim.
  bool reverify() const;
};

struct CospectralCheck {
  bool cospectral = false;
  std::optional<CospectralCertificate> certificate;  // set when cospectral
  // Mismatch report.
  std::optional<int> first_diff_coeff;
  IntPoly charpoly1, charpoly2;
};

// Exact polynomial comparison; attaches a non-isomorphism witness where one
// is found (full search only under the 16-vertex guard).
CospectralCheck verify_cospectral(const Graph& g1, const Graph& g2, MatrixKind kind);

struct CospectralPocketPair {
  Graph g1, g2;
  CospectralCertificate certificate;
};

// Two cospectral co-regular seeds H1, H1p
// become pockets {v} ∨ seed attached over the same (F, V_k).
CospectralPocketPair make_cospectral_vertex_pocket_pair(const Graph& f,
                                                        const std::vector<int>& vk,
                                                        const Graph& h1, const Graph& h1p,
                                                        MatrixKind kind);

// Edge version: pockets K_2 ∨ seed over the same (F, E_k) with a regular
// induced subgraph; Q-cospectrality only.
CospectralPocketPair make_cospectral_edge_pocket_pair(
    const Graph& f, const std::vector<std::pair<int, int>>& ek, const Graph& h2,
    const Graph& h2p);

struct SearchResult {
  std::vector<CospectralCertificate> pairs;
  std::vector<std::string> line_errors;
  int graphs_read = 0;
};

// Groups a graph6 catalog by exact characteristic polynomial and emits a
// certificate per same-class pair.  Malformed lines are reported and
// skipped; catalog orders are capped at 20.
SearchResult search_cospectral_mates(std::istream& catalog, MatrixKind kind,
                                     bool require_regular);
SearchResult search_cospectral_mates(const std::vector<Graph>& catalog, MatrixKind kind,
                                     bool require_regular);

}  // namespace pockets

#endif
