#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pockets/isomorphism.hpp"
#include "pockets/pocket.hpp"
#include "pockets/verify.hpp"

using namespace pockets;

TEST_CASE("vertex pockets on fixed specs") {
  // F=K_2, one pocket P_2: the result is P_3.
  VertexPocketSpec s1(generate_complete(2), {0}, generate_path(2), 1);
  Graph g1 = build_vertex_pockets(s1);
  CHECK(g1.order() == 3);
  CHECK(are_isomorphic(g1, generate_path(3)).isomorphic);

  // Both vertices pocketed with K_2: P_4 (the corona K_2 o K_1).
  VertexPocketSpec s2(generate_complete(2), {0, 1}, generate_complete(2), 1);
  Graph g2 = build_vertex_pockets(s2);
  CHECK(g2.order() == 4);
  CHECK(are_isomorphic(g2, generate_path(4)).isomorphic);
  CHECK(g2 == corona(generate_complete(2), generate_empty(1)));

  // F=P_4, two pockets of K_1 v C_4 (m=5): order 4 + 2*4.
  VertexPocketSpec s3(generate_path(4), {0, 1},
                      join(generate_empty(1), generate_cycle(4)), 0);
  Graph g3 = build_vertex_pockets(s3);
  CHECK(g3.order() == 12);
  CHECK(g3.edge_count() == generate_path(4).edge_count() + 2 * 8);
}

TEST_CASE("vertex pocket spec validation") {
  CHECK_THROWS_AS(VertexPocketSpec(generate_complete(2), {0, 0}, generate_path(2), 0),
                  invalid_parameter);  // duplicates in V_k
  CHECK_THROWS_AS(VertexPocketSpec(generate_complete(2), {0}, generate_path(2), 7),
                  invalid_parameter);  // v not in H
  CHECK_THROWS_AS(VertexPocketSpec(generate_complete(2), {0}, generate_empty(1), 0),
                  invalid_parameter);  // m >= 2
  CHECK_THROWS_AS(VertexPocketSpec(generate_complete(2), {}, generate_path(2), 0),
                  invalid_parameter);  // k >= 1
  CHECK_THROWS_AS(VertexPocketSpec(generate_complete(2), {0, 1, 1}, generate_path(2), 0),
                  invalid_parameter);
}

TEST_CASE("edge pockets on fixed specs") {
  // F=K_3 with one K_3 pocket: diamond.
  EdgePocketSpec s1(generate_complete(3), {{0, 1}}, generate_complete(3), {0, 1});
  Graph g1 = build_edge_pockets(s1);
  CHECK(g1.order() == 4);
  CHECK(g1.edge_count() == 5);
  CHECK(g1.degree_sequence() == std::vector<int>{3, 3, 2, 2});

  // F=K_4, matching, K_5 pockets: order 10.
  EdgePocketSpec s2(generate_complete(4), {{0, 1}, {2, 3}}, generate_complete(5), {0, 1});
  Graph g2 = build_edge_pockets(s2);
  CHECK(g2.order() == 10);
  CHECK(g2.edge_count() == 6 + 2 * 9);
  CHECK(s2.p == 4);
  CHECK(s2.r == 1);

  // All edges of K_3 with K_5 pockets: order 12.
  EdgePocketSpec s3(generate_complete(3), {{0, 1}, {1, 2}, {0, 2}}, generate_complete(5),
                    {0, 1});
  CHECK(build_edge_pockets(s3).order() == 12);
  CHECK(s3.r == 2);
}

TEST_CASE("edge pocket spec validation") {
  // H-u not isomorphic to H-v: P_3 with its end edge.
  CHECK_THROWS_AS(
      EdgePocketSpec(generate_complete(3), {{0, 1}}, generate_path(3), {0, 1}),
      precondition_violation);
  // uv not an edge of H.
  CHECK_THROWS_AS(
      EdgePocketSpec(generate_complete(3), {{0, 1}}, generate_path(3), {0, 2}),
      invalid_parameter);
  // e_i not an edge of F.
  CHECK_THROWS_AS(
      EdgePocketSpec(generate_path(3), {{0, 2}}, generate_complete(3), {0, 1}),
      invalid_parameter);
  // C_4 with a specified edge is fine: both deletions give P_3.
  CHECK_NOTHROW(EdgePocketSpec(generate_complete(3), {{0, 1}}, generate_cycle(4), {0, 1}));

  // Orientation flips are accepted and swap only the roles of u and v.
  EdgePocketSpec plain(generate_complete(4), {{0, 1}}, generate_cycle(4), {0, 1});
  EdgePocketSpec flipped(generate_complete(4), {{0, 1}}, generate_cycle(4), {0, 1},
                         {true});
  CHECK(are_isomorphic(build_edge_pockets(plain), build_edge_pockets(flipped)).isomorphic);
}

TEST_CASE("corona and edge corona") {
  CHECK(are_isomorphic(corona(generate_complete(2), generate_empty(1)), generate_path(4))
            .isomorphic);

  Graph net = corona(generate_cycle(3), generate_empty(1));
  CHECK(net.order() == 6);
  CHECK(net.degree_sequence() == std::vector<int>{3, 3, 3, 1, 1, 1});

  Graph ec = edge_corona(generate_complete(3), generate_empty(1));
  CHECK(ec.order() == 6);
  CHECK(ec.edge_count() == 3 + 3 * 2);
  CHECK(ec.degree_sequence() == std::vector<int>{4, 4, 4, 2, 2, 2});

  CHECK_THROWS_AS(edge_corona(generate_empty(3), generate_empty(1)), invalid_parameter);
}

TEST_CASE("corona equals full vertex pockets up to vertex order") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    Graph f = random_graph(2 + rng() % 3, rng);
    Graph hp = random_graph(1 + rng() % 2, rng);
    // User-formed spec with the apex placed last instead of first.
    Graph h_apex_last = join(hp, generate_empty(1));
    std::vector<int> vk(f.order());
    for (int i = 0; i < f.order(); ++i) vk[i] = f.order() - 1 - i;
    Graph built = build_vertex_pockets(VertexPocketSpec(f, vk, h_apex_last, hp.order()));
    Graph cor = corona(f, hp);
    REQUIRE(built.order() == cor.order());
    if (built.order() <= 12) CHECK(are_isomorphic(built, cor).isomorphic);
  }
}

TEST_CASE("pocket order and edge-count formulas hold on random specs") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 25; ++trial) {
    VertexPocketSpec spec = verify::random_vertex_spec(rng);
    Graph g = build_vertex_pockets(spec);
    CHECK(g.order() == spec.n() + spec.k() * (spec.m() - 1));
    CHECK(g.edge_count() == spec.f.edge_count() + spec.k() * spec.h.edge_count());
    // Deleting the pocket blocks recovers F exactly.
    std::vector<int> front(spec.n());
    for (int i = 0; i < spec.n(); ++i) front[i] = i;
    CHECK(g.induced(front) == spec.f);
  }
  for (int trial = 0; trial < 25; ++trial) {
    EdgePocketSpec spec = verify::random_edge_spec(rng);
    Graph g = build_edge_pockets(spec);
    CHECK(g.order() == spec.n() + spec.k() * (spec.m() - 2));
    CHECK(g.edge_count() == spec.f.edge_count() + spec.k() * (spec.h.edge_count() - 1));
    std::vector<int> front(spec.n());
    for (int i = 0; i < spec.n(); ++i) front[i] = i;
    CHECK(g.induced(front) == spec.f);
  }
}

TEST_CASE("assumption reports") {
  VertexPocketSpec vs(generate_path(4), {0}, join(generate_empty(1), generate_cycle(4)),
                      0);
  AssumptionReport vr = validate(vs);
  CHECK(vr.specified_degree_full);
  CHECK(vr.h_remainder_regular == 2);
  CHECK(!vr.ek_regular.has_value());
  CHECK(!vr.ek_spanning);

  EdgePocketSpec es(generate_complete(4), {{0, 1}, {2, 3}}, generate_complete(5), {0, 1});
  AssumptionReport er = validate(es);
  CHECK(er.specified_degree_full);
  CHECK(er.h_remainder_regular == 2);
  CHECK(er.ek_regular == 1);
  CHECK(er.ek_spanning);

  // Specified vertex of lower degree: the builder accepts it, validate flags it.
  VertexPocketSpec weak(generate_path(4), {0}, generate_path(3), 0);
  CHECK(!validate(weak).specified_degree_full);
  CHECK_NOTHROW(build_vertex_pockets(weak));
}

TEST_CASE("leading layouts") {
  Graph f = generate_path(4);
  Graph lead = leading_vertex_layout(f, {2, 0});
  // Old vertex 2 must sit at position 0, old vertex 0 at position 1.
  CHECK(lead.degree(0) == f.degree(2));
  CHECK(lead.degree(1) == f.degree(0));
  CHECK(are_isomorphic(lead, f).isomorphic);

  LeadingEdgeLayout el = leading_edge_layout(generate_complete(4), {{1, 3}});
  CHECK(el.p == 2);
  CHECK(el.f.has_edge(0, 1));
  CHECK(are_isomorphic(el.f, generate_complete(4)).isomorphic);
}

TEST_CASE("spec JSON round trip") {
  VertexPocketSpec vs(generate_path(4), {0, 2}, join(generate_empty(1), generate_cycle(4)),
                      0);
  std::string vj = vertex_spec_to_json(vs);
  CHECK(!json_spec_is_edge_kind(vj));
  VertexPocketSpec vs2 = vertex_spec_from_json(vj);
  CHECK(vs2.f == vs.f);
  CHECK(vs2.h == vs.h);
  CHECK(vs2.vk == vs.vk);
  CHECK(vs2.v == vs.v);

  EdgePocketSpec es(generate_complete(4), {{0, 1}, {2, 3}}, generate_complete(5), {0, 1});
  std::string ej = edge_spec_to_json(es);
  CHECK(json_spec_is_edge_kind(ej));
  EdgePocketSpec es2 = edge_spec_from_json(ej);
  CHECK(es2.f == es.f);
  CHECK(es2.h == es.h);
  CHECK(es2.ek == es.ek);
  CHECK(es2.uv == es.uv);
  CHECK_THROWS_AS(vertex_spec_from_json(ej), invalid_parameter);
}
