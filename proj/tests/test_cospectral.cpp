#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "pockets/cospectral.hpp"
#include "pockets/exact_linalg.hpp"
#include "pockets/isomorphism.hpp"
#include "pockets/verify.hpp"

using namespace pockets;

namespace {

std::string data_path(const std::string& name) {
  return std::string(POCKETS_DATA_DIR) + "/" + name;
}

Graph star5() { return generate_complete_bipartite(1, 4); }
Graph c4k1() { return disjoint_union(generate_cycle(4), generate_empty(1)); }

}  // namespace

TEST_CASE("verify_cospectral on the classic order-5 pair") {
  auto check = verify_cospectral(star5(), c4k1(), MatrixKind::adjacency);
  REQUIRE(check.cospectral);
  // Both characteristic polynomials are x^5 - 4x^3.
  CHECK(check.certificate->shared_charpoly == IntPoly({0, 0, 0, -4, 0, 1}));
  CHECK(check.certificate->witness == WitnessGrade::degree_sequence);
  CHECK(check.certificate->proper_pair());
  CHECK(check.certificate->reverify());

  // Same graph: cospectral but isomorphic, not a valid pair.
  auto self = verify_cospectral(generate_complete(3), generate_complete(3),
                                MatrixKind::adjacency);
  CHECK(self.cospectral);
  CHECK(self.certificate->witness == WitnessGrade::isomorphic);
  CHECK(!self.certificate->proper_pair());

  // Mismatch report carries the first differing coefficient.
  auto diff = verify_cospectral(generate_cycle(6),
                                disjoint_union(generate_complete(3), generate_complete(3)),
                                MatrixKind::adjacency);
  CHECK(!diff.cospectral);
  REQUIRE(diff.first_diff_coeff.has_value());
  CHECK(diff.charpoly1.coeff(*diff.first_diff_coeff) !=
        diff.charpoly2.coeff(*diff.first_diff_coeff));
}

TEST_CASE("shrikhande and rook are cospectral both ways") {
  const Graph sh = shrikhande_graph();
  const Graph rk = rook_graph_4x4();
  for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
    auto check = verify_cospectral(sh, rk, kind);
    REQUIRE(check.cospectral);
    CHECK(check.certificate->witness == WitnessGrade::refinement_distinguisher);
    CHECK(check.certificate->proper_pair());
  }
  CHECK(!are_isomorphic(sh, rk).isomorphic);
}

TEST_CASE("constructed vertex-pocket pairs are cospectral") {
  const Graph sh = shrikhande_graph();
  const Graph rk = rook_graph_4x4();
  // F = P_4, k = 2, order 4 + 2*16 = 36.
  for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
    auto pair = make_cospectral_vertex_pocket_pair(generate_path(4), {0, 1}, sh, rk, kind);
    CHECK(pair.g1.order() == 36);
    CHECK(pair.certificate.kind == kind);
    CHECK(pair.certificate.shared_charpoly.degree() == 36);
    CHECK(pair.certificate.proper_pair());
  }

  // Non-cospectral seeds are rejected.
  CHECK_THROWS_AS(
      make_cospectral_vertex_pocket_pair(
          generate_path(4), {0, 1}, generate_cycle(6),
          disjoint_union(generate_complete(3), generate_complete(3)),
          MatrixKind::adjacency),
      precondition_violation);
  // Co-regularity required.
  CHECK_THROWS_AS(make_cospectral_vertex_pocket_pair(generate_path(4), {0}, star5(),
                                                     c4k1(), MatrixKind::adjacency),
                  precondition_violation);
}

TEST_CASE("constructed edge-pocket pairs are Q-cospectral") {
  const Graph sh = shrikhande_graph();
  const Graph rk = rook_graph_4x4();
  auto pair = make_cospectral_edge_pocket_pair(generate_complete(4), {{0, 1}, {2, 3}},
                                               sh, rk);
  CHECK(pair.g1.order() == 4 + 2 * 16);
  CHECK(pair.certificate.kind == MatrixKind::signless_laplacian);
  CHECK(pair.certificate.proper_pair());
  CHECK_THROWS_AS(
      make_cospectral_edge_pocket_pair(
          generate_complete(4), {{0, 1}, {2, 3}}, generate_cycle(6),
          disjoint_union(generate_complete(3), generate_complete(3))),
      precondition_violation);
}

TEST_CASE("any (F, V_k) or (F, E_k) choice preserves seed cospectrality") {
  // The smallest co-regular cospectral seeds are the order-16 shipped pair,
  // so hosts are kept small enough that the assembled orders stay under the
  // charpoly cap (k <= 2 pockets of order 17/18 over hosts of order <= 6).
  const Graph sh = shrikhande_graph();
  const Graph rk = rook_graph_4x4();
  std::mt19937_64 rng(211);
  int vertex_trials = 0, edge_trials = 0;
  while (vertex_trials + edge_trials < 10) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph f = random_graph(n, rng);
    if (vertex_trials < 6) {
      const int k = f.order() >= 2 && (rng() & 1u) ? 2 : 1;
      std::vector<int> vk = {static_cast<int>(rng() % n)};
      if (k == 2) vk.push_back((vk[0] + 1 + static_cast<int>(rng() % (n - 1))) % n);
      const MatrixKind kind =
          (rng() & 1u) ? MatrixKind::adjacency : MatrixKind::signless_laplacian;
      auto pair = make_cospectral_vertex_pocket_pair(f, vk, sh, rk, kind);
      CHECK(pair.certificate.reverify());
      ++vertex_trials;
    } else {
      auto edges = f.edges();
      if (edges.empty()) continue;
      // A single pasted edge is always a 1-regular induced subgraph.
      auto pair = make_cospectral_edge_pocket_pair(f, {edges[rng() % edges.size()]},
                                                   sh, rk);
      CHECK(pair.certificate.reverify());
      ++edge_trials;
    }
  }
  CHECK(vertex_trials == 6);
  CHECK(edge_trials == 4);
}

TEST_CASE("order-51 pair: all edges of K3 with order-16 seeds") {
  // Largest shipped instance under the charpoly order cap: 3 + 3*16 = 51.
  auto pair = make_cospectral_edge_pocket_pair(
      generate_complete(3), {{0, 1}, {1, 2}, {0, 2}}, shrikhande_graph(),
      rook_graph_4x4());
  CHECK(pair.g1.order() == 51);
  CHECK(pair.certificate.shared_charpoly.degree() == 51);
  CHECK(pair.certificate.witness == WitnessGrade::refinement_distinguisher);
}

TEST_CASE("no A-cospectral pair among C6, 2K3, P6, K33") {
  std::vector<Graph> catalog = {
      generate_cycle(6), disjoint_union(generate_complete(3), generate_complete(3)),
      generate_path(6), generate_complete_bipartite(3, 3)};
  SearchResult result = search_cospectral_mates(catalog, MatrixKind::adjacency, false);
  CHECK(result.pairs.empty());
}

TEST_CASE("search finds the order-5 pair and nothing else") {
  std::ifstream in(data_path("all5.g6"), std::ios::binary);
  REQUIRE(in.good());
  SearchResult result = search_cospectral_mates(in, MatrixKind::adjacency, false);
  CHECK(result.graphs_read == 34);
  CHECK(result.line_errors.empty());
  REQUIRE(result.pairs.size() == 1);
  const auto& cert = result.pairs[0];
  CHECK(cert.shared_charpoly == IntPoly({0, 0, 0, -4, 0, 1}));
  const bool matches =
      (are_isomorphic(cert.g1, star5()).isomorphic &&
       are_isomorphic(cert.g2, c4k1()).isomorphic) ||
      (are_isomorphic(cert.g1, c4k1()).isomorphic &&
       are_isomorphic(cert.g2, star5()).isomorphic);
  CHECK(matches);
  CHECK(cert.reverify());
}

TEST_CASE("order-4 Q-search regression") {
  std::ifstream in(data_path("all4.g6"), std::ios::binary);
  REQUIRE(in.good());
  SearchResult result =
      search_cospectral_mates(in, MatrixKind::signless_laplacian, false);
  CHECK(result.graphs_read == 11);
  // The unique Q-cospectral pair on 4 vertices: K_{1,3} and K_3 + K_1.
  REQUIRE(result.pairs.size() == 1);
  const Graph star4 = generate_complete_bipartite(1, 3);
  const Graph k3k1 = disjoint_union(generate_complete(3), generate_empty(1));
  const auto& cert = result.pairs[0];
  const bool matches = (are_isomorphic(cert.g1, star4).isomorphic &&
                        are_isomorphic(cert.g2, k3k1).isomorphic) ||
                       (are_isomorphic(cert.g1, k3k1).isomorphic &&
                        are_isomorphic(cert.g2, star4).isomorphic);
  CHECK(matches);
}

TEST_CASE("search error handling and filters") {
  std::istringstream bad("D?{\nnot-a-graph6-\x01-line\nDqc\n");
  SearchResult result = search_cospectral_mates(bad, MatrixKind::adjacency, false);
  CHECK(result.graphs_read == 2);
  REQUIRE(result.line_errors.size() == 1);
  CHECK(result.line_errors[0].find("line 2") != std::string::npos);

  // Oversized graphs are per-line errors too.
  std::ostringstream big;
  big << graph6_encode(Graph(21)) << "\n";
  std::istringstream bigin(big.str());
  SearchResult r2 = search_cospectral_mates(bigin, MatrixKind::adjacency, false);
  CHECK(r2.graphs_read == 0);
  CHECK(r2.line_errors.size() == 1);

  // require_regular keeps only co-regular pairs: the order-5 A-pair is
  // irregular, so it disappears.
  std::ifstream in(data_path("all5.g6"), std::ios::binary);
  SearchResult reg = search_cospectral_mates(in, MatrixKind::adjacency, true);
  CHECK(reg.pairs.empty());
}

TEST_CASE("search is complete over its catalog") {
  auto graphs = read_graph6_file(data_path("all5.g6"));
  SearchResult result = search_cospectral_mates(graphs, MatrixKind::adjacency, false);
  std::mt19937_64 rng(223);
  for (int trial = 0; trial < 50; ++trial) {
    const int i = static_cast<int>(rng() % graphs.size());
    const int j = static_cast<int>(rng() % graphs.size());
    if (i == j) continue;
    bool emitted = false;
    for (const auto& cert : result.pairs)
      if ((cert.g1 == graphs[i] && cert.g2 == graphs[j]) ||
          (cert.g1 == graphs[j] && cert.g2 == graphs[i]))
        emitted = true;
    if (!emitted) {
      CHECK(charpoly_exact(adjacency_matrix(graphs[i])) !=
            charpoly_exact(adjacency_matrix(graphs[j])));
    }
  }
}

TEST_CASE("bundled catalogs match regeneration") {
  auto all5 = read_graph6_file(data_path("all5.g6"));
  auto regen = verify::enumerate_graphs(5);
  REQUIRE(all5.size() == regen.size());
  for (std::size_t i = 0; i < all5.size(); ++i) CHECK(all5[i] == regen[i]);

  auto regulars = read_graph6_file(data_path("regular_le6.g6"));
  CHECK(regulars.size() == 20);
  for (const Graph& g : regulars) CHECK(g.regularity().has_value());

  auto seeds = read_graph6_file(data_path("seeds.g6"));
  REQUIRE(seeds.size() == 2);
  CHECK(seeds[0] == shrikhande_graph());
  CHECK(seeds[1] == rook_graph_4x4());
}
