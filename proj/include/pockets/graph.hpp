#ifndef POCKETS_GRAPH_HPP
#define POCKETS_GRAPH_HPP

#include <Eigen/Core>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pockets/errors.hpp"
#include "pockets/types.hpp"

namespace pockets {

// Simple undirected graph on dense symmetric 0/1 adjacency with zero
// diagonal.  Vertex order is significant and preserved by every
// construction; isomorphism is the only order-insensitive comparison.
class Graph {
 public:
  explicit Graph(int order);
  static Graph from_adjacency(const Eigen::MatrixXi& a);

  int order() const { return static_cast<int>(adj_.rows()); }
  bool has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return adj_(i, j) != 0;
  }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  int degree(int i) const;
  std::vector<int> degrees() const;
  std::vector<int> degree_sequence() const;  // sorted descending
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // i<j, lexicographic
  std::vector<int> neighbors(int i) const;
  std::optional<int> regularity() const;

  const Eigen::MatrixXi& adjacency() const { return adj_; }

  Graph induced(const std::vector<int>& vertices) const;
  Graph without_vertex(int v) const;
  Graph without_vertices(std::vector<int> vs) const;
  // Relabels so old vertex i becomes new vertex perm[i].
  Graph permuted(const std::vector<int>& perm) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(int i, std::string label);

  // Adjacency equality in the given vertex order.
  bool operator==(const Graph& o) const { return adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void check_vertex(int i) const;

  Eigen::MatrixXi adj_;
  std::vector<std::string> labels_;
};

// Standard families.
Graph generate_empty(int n);
Graph generate_complete(int n);
Graph generate_cycle(int n);  // n >= 3
Graph generate_path(int n);
Graph generate_complete_bipartite(int a, int b);

// Shipped cospectral seed pair (strongly regular 16-vertex mates).
Graph shrikhande_graph();
Graph rook_graph_4x4();

Graph complement(const Graph& g);
// Disjoint union keeping g1's vertices first.
Graph disjoint_union(const Graph& g1, const Graph& g2);
// Union plus all edges between the two vertex sets.
Graph join(const Graph& g1, const Graph& g2);
// (a,x) ~ (b,y) iff (a=b and x~y) or (a~b and x=y); vertex (a,x) sits at
// index a*order(g2)+x, matching A(g1)⊗I + I⊗A(g2).
Graph cartesian_product(const Graph& g1, const Graph& g2);

struct GraphMatrices {
  IntMatrix A;  // adjacency
  IntMatrix D;  // degree diagonal
  IntMatrix Q;  // D + A
};
GraphMatrices graph_matrices(const Graph& g);
IntMatrix adjacency_matrix(const Graph& g);
IntMatrix signless_laplacian(const Graph& g);
Eigen::MatrixXd adjacency_matrix_d(const Graph& g);
Eigen::MatrixXd signless_laplacian_d(const Graph& g);

// Subgraph of f induced by an edge subset: vertex set = endpoints of the
// listed edges in increasing f-index order.
struct EdgeInducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // f-vertex behind each subgraph vertex
  std::optional<int> regularity;
};
EdgeInducedSubgraph edge_induced_subgraph(const Graph& f,
                                          const std::vector<std::pair<int, int>>& edges);

// Vertex-edge incidence, p x k, columns in g.edges() order; R R^T = Q(g).
IntMatrix incidence_matrix(const Graph& g);

// graph6 codec.  Encode supports the single-byte header (n <= 62) and the
// 4-byte long form (n <= 258047).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);
std::vector<Graph> read_graph6_lines(const std::string& text);
std::vector<Graph> read_graph6_file(const std::string& path);

// Named literals accepted by the CLI and tests: K5, C4, P3, E2, K2x3 (also
// "K2,3"), shrikhande, rook.
std::optional<Graph> named_graph(std::string_view name);

// Erdos-Renyi G(n, 1/2) from a seeded engine.
Graph random_graph(int n, std::mt19937_64& rng);

// "0-1,2-3" or whitespace-separated "i-j" pairs, 0-based.
std::vector<std::pair<int, int>> parse_edge_list(std::string_view text);

}  // namespace pockets

#endif
