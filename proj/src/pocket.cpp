#include "pockets/pocket.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "pockets/isomorphism.hpp"

namespace pockets {

using nlohmann::json;

VertexPocketSpec::VertexPocketSpec(Graph f_, std::vector<int> vk_, Graph h_, int v_)
    : f(std::move(f_)), vk(std::move(vk_)), h(std::move(h_)), v(v_) {
  if (h.order() < 2) throw invalid_parameter("pocket graph H must have order >= 2");
  if (v < 0 || v >= h.order())
    throw invalid_parameter("specified vertex v is not a vertex of H");
  if (vk.empty() || static_cast<int>(vk.size()) > f.order())
    throw invalid_parameter("need 1 <= k <= n attachment vertices");
  std::vector<int> sorted = vk;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= f.order())
      throw invalid_parameter("attachment vertex out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw invalid_parameter("duplicate vertices in V_k");
  }
}

EdgePocketSpec::EdgePocketSpec(Graph f_, std::vector<std::pair<int, int>> ek_, Graph h_,
                               std::pair<int, int> uv_, std::vector<bool> flips_)
    : f(std::move(f_)),
      ek(std::move(ek_)),
      h(std::move(h_)),
      uv(uv_),
      flips(std::move(flips_)),
      ek_induced(edge_induced_subgraph(f, ek)) {
  if (f.order() < 2) throw invalid_parameter("edge pockets need host order >= 2");
  if (h.order() < 3) throw invalid_parameter("pocket graph H must have order >= 3");
  if (!h.has_edge(uv.first, uv.second))
    throw invalid_parameter("specified edge uv is not an edge of H");
  if (!flips.empty() && flips.size() != ek.size())
    throw invalid_parameter("flip list must match E_k length");
  p = ek_induced.graph.order();
  r = ek_induced.regularity;
  if (r) {
    // Handshake: p * r = 2k.
    if (p * *r != 2 * static_cast<int>(ek.size()))
      throw internal_error("regular induced subgraph violates p = 2k/r");
  }

  // Definition requires H-u isomorphic to H-v.
  const int m = h.order();
  const Graph hu = h.without_vertex(uv.first);
  const Graph hv = h.without_vertex(uv.second);
  if (h.degree(uv.first) == m - 1 && h.degree(uv.second) == m - 1) {
    // Both endpoints universal: swapping u and v fixes everything else, so
    // the deletions are isomorphic outright.
    return;
  }
  if (hu == hv) return;
  if (m - 1 <= 16) {
    if (!are_isomorphic(hu, hv).isomorphic)
      throw precondition_violation("asymmetric pocket: H-u is not isomorphic to H-v");
    return;
  }
  throw size_limit_exceeded(
      "cannot certify H-u ~ H-v above 16 vertices for non-universal u, v");
}

Graph build_vertex_pockets(const VertexPocketSpec& spec) {
  const int n = spec.n(), m = spec.m(), k = spec.k();
  Graph g(n + k * (m - 1));
  for (auto [a, b] : spec.f.edges()) g.add_edge(a, b);

  // Images of H's vertices (minus v) inside copy i.
  std::vector<int> image(m, -1);
  for (int i = 0; i < k; ++i) {
    const int base = n + i * (m - 1);
    int next = 0;
    for (int w = 0; w < m; ++w) image[w] = (w == spec.v) ? -1 : base + next++;
    for (auto [a, b] : spec.h.edges()) {
      if (a == spec.v)
        g.add_edge(spec.vk[i], image[b]);
      else if (b == spec.v)
        g.add_edge(image[a], spec.vk[i]);
      else
        g.add_edge(image[a], image[b]);
    }
  }
  return g;
}

Graph build_edge_pockets(const EdgePocketSpec& spec) {
  const int n = spec.n(), m = spec.m(), k = spec.k();
  const auto [u, v] = spec.uv;
  Graph g(n + k * (m - 2));
  for (auto [a, b] : spec.f.edges()) g.add_edge(a, b);

  std::vector<int> image(m, -1);
  for (int i = 0; i < k; ++i) {
    auto [a, b] = spec.ek[i];
    if (a > b) std::swap(a, b);
    const bool flip = !spec.flips.empty() && spec.flips[i];
    const int role_u = flip ? b : a;  // takes over u's neighbors
    const int role_v = flip ? a : b;

    const int base = n + i * (m - 2);
    int next = 0;
    for (int w = 0; w < m; ++w) image[w] = (w == u || w == v) ? -1 : base + next++;
    for (auto [x, y] : spec.h.edges()) {
      if ((x == u && y == v) || (x == v && y == u)) continue;  // already the F edge
      int gx = (x == u) ? role_u : (x == v) ? role_v : image[x];
      int gy = (y == u) ? role_u : (y == v) ? role_v : image[y];
      g.add_edge(gx, gy);
    }
  }
  return g;
}

Graph corona(const Graph& f, const Graph& h) {
  if (h.order() < 1) throw invalid_parameter("corona needs a nonempty pocket graph");
  std::vector<int> all(f.order());
  std::iota(all.begin(), all.end(), 0);
  // Pocket {v} ∨ H with the apex first.
  Graph hv = join(generate_empty(1), h);
  return build_vertex_pockets(VertexPocketSpec(f, all, hv, 0));
}

Graph edge_corona(const Graph& f, const Graph& h) {
  auto edges = f.edges();
  if (edges.empty()) throw invalid_parameter("edge-corona needs a host with >= 1 edge");
  // Pocket K_2 ∨ H with the specified edge first.
  Graph huv = join(generate_complete(2), h);
  return build_edge_pockets(EdgePocketSpec(f, edges, huv, {0, 1}));
}

AssumptionReport validate(const VertexPocketSpec& spec) {
  AssumptionReport rep;
  rep.specified_degree_full = spec.h.degree(spec.v) == spec.m() - 1;
  rep.h_remainder_regular = spec.h.without_vertex(spec.v).regularity();
  return rep;
}

AssumptionReport validate(const EdgePocketSpec& spec) {
  AssumptionReport rep;
  rep.specified_degree_full = spec.h.degree(spec.uv.first) == spec.m() - 1 &&
                              spec.h.degree(spec.uv.second) == spec.m() - 1;
  rep.h_remainder_regular =
      spec.h.without_vertices({spec.uv.first, spec.uv.second}).regularity();
  rep.ek_regular = spec.r;
  rep.ek_spanning = spec.p == spec.n();
  return rep;
}

Graph leading_vertex_layout(const Graph& f, const std::vector<int>& vk) {
  const int n = f.order();
  std::vector<int> perm(n, -1);
  int next = 0;
  for (int v : vk) perm[v] = next++;
  for (int v = 0; v < n; ++v)
    if (perm[v] < 0) perm[v] = next++;
  return f.permuted(perm);
}

LeadingEdgeLayout leading_edge_layout(const Graph& f,
                                      const std::vector<std::pair<int, int>>& ek) {
  EdgeInducedSubgraph sub = edge_induced_subgraph(f, ek);
  const int n = f.order();
  std::vector<int> perm(n, -1);
  int next = 0;
  for (int v : sub.vertices) perm[v] = next++;
  for (int v = 0; v < n; ++v)
    if (perm[v] < 0) perm[v] = next++;
  return LeadingEdgeLayout{f.permuted(perm), sub.graph, sub.graph.order()};
}

namespace {

json edge_list_json(const std::vector<std::pair<int, int>>& edges) {
  json a = json::array();
  for (auto [x, y] : edges) a.push_back(json::array({x, y}));
  return a;
}

std::vector<std::pair<int, int>> edge_list_from_json(const json& a) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : a) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return edges;
}

}  // namespace

std::string vertex_spec_to_json(const VertexPocketSpec& spec) {
  json j;
  j["type"] = "vertex-pockets";
  j["F"] = graph6_encode(spec.f);
  j["Vk"] = spec.vk;
  j["H"] = graph6_encode(spec.h);
  j["v"] = spec.v;
  return j.dump();
}

std::string edge_spec_to_json(const EdgePocketSpec& spec) {
  json j;
  j["type"] = "edge-pockets";
  j["F"] = graph6_encode(spec.f);
  j["Ek"] = edge_list_json(spec.ek);
  j["H"] = graph6_encode(spec.h);
  j["uv"] = json::array({spec.uv.first, spec.uv.second});
  if (!spec.flips.empty()) j["flips"] = spec.flips;
  return j.dump();
}

VertexPocketSpec vertex_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("type").get<std::string>() != "vertex-pockets")
    throw invalid_parameter("expected a vertex-pockets spec");
  return VertexPocketSpec(graph6_decode(j.at("F").get<std::string>()),
                          j.at("Vk").get<std::vector<int>>(),
                          graph6_decode(j.at("H").get<std::string>()),
                          j.at("v").get<int>());
}

EdgePocketSpec edge_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("type").get<std::string>() != "edge-pockets")
    throw invalid_parameter("expected an edge-pockets spec");
  std::vector<bool> flips;
  if (j.contains("flips")) flips = j.at("flips").get<std::vector<bool>>();
  auto uv = j.at("uv");
  return EdgePocketSpec(graph6_decode(j.at("F").get<std::string>()),
                        edge_list_from_json(j.at("Ek")),
                        graph6_decode(j.at("H").get<std::string>()),
                        {uv.at(0).get<int>(), uv.at(1).get<int>()}, std::move(flips));
}

bool json_spec_is_edge_kind(const std::string& text) {
  return json::parse(text).at("type").get<std::string>() == "edge-pockets";
}

}  // namespace pockets
