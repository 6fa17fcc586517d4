#ifndef POCKETS_POCKET_HPP
#define POCKETS_POCKET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pockets/graph.hpp"

namespace pockets {

// G[F, V_k, H_v]: k copies of H attached by identifying the specified
// vertex v of each copy with a vertex of F.
struct VertexPocketSpec {
  Graph f;
  std::vector<int> vk;  // attachment vertices, order significant
  Graph h;
  int v;  // specified vertex of h

  VertexPocketSpec(Graph f_, std::vector<int> vk_, Graph h_, int v_);
  int n() const { return f.order(); }
  int m() const { return h.order(); }
  int k() const { return static_cast<int>(vk.size()); }
};

// G[F, E_k, H_uv]: k copies of H pasted by identifying the specified edge
// uv of each copy with an edge of F.  For e_i = (a, b) with a < b, a plays
// u and b plays v; flips[i] swaps the roles for experiments.
struct EdgePocketSpec {
  Graph f;
  std::vector<std::pair<int, int>> ek;
  Graph h;
  std::pair<int, int> uv;
  std::vector<bool> flips;  // empty means no flips

  // Derived at construction.
  EdgeInducedSubgraph ek_induced;
  int p = 0;                    // order of the induced subgraph
  std::optional<int> r;         // its regularity, if regular

  EdgePocketSpec(Graph f_, std::vector<std::pair<int, int>> ek_, Graph h_,
                 std::pair<int, int> uv_, std::vector<bool> flips_ = {});
  int n() const { return f.order(); }
  int m() const { return h.order(); }
  int k() const { return static_cast<int>(ek.size()); }
};

// Directly verifiable preconditions of the spectral statements.
struct AssumptionReport {
  bool specified_degree_full = false;
  std::optional<int> h_remainder_regular;
  std::optional<int> ek_regular;
  bool ek_spanning = false;
};

// Vertex layout of the result: F's n vertices in original order, then the
// k pocket copies contiguously in V_k / E_k index order.
Graph build_vertex_pockets(const VertexPocketSpec& spec);
Graph build_edge_pockets(const EdgePocketSpec& spec);

// Full-pocket special cases: corona attaches {v}∨H at every vertex,
// edge-corona pastes K_2∨H at every edge.
Graph corona(const Graph& f, const Graph& h);
Graph edge_corona(const Graph& f, const Graph& h);

AssumptionReport validate(const VertexPocketSpec& spec);
AssumptionReport validate(const EdgePocketSpec& spec);

// F with the V_k vertices permuted to leading positions 0..k-1 (in V_k
// order), which makes the factored-charpoly block matrices literal.
Graph leading_vertex_layout(const Graph& f, const std::vector<int>& vk);

struct LeadingEdgeLayout {
  Graph f;   // F permuted so the induced subgraph's vertices lead
  Graph ek;  // induced subgraph, vertex i at leading position i
  int p;
};
LeadingEdgeLayout leading_edge_layout(const Graph& f,
                                      const std::vector<std::pair<int, int>>& ek);

// JSON spec files: graph6 payloads for F and H plus index lists.
std::string vertex_spec_to_json(const VertexPocketSpec& spec);
std::string edge_spec_to_json(const EdgePocketSpec& spec);
VertexPocketSpec vertex_spec_from_json(const std::string& text);
EdgePocketSpec edge_spec_from_json(const std::string& text);
bool json_spec_is_edge_kind(const std::string& text);

}  // namespace pockets

#endif
