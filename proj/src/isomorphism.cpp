#include "pockets/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace pockets {

namespace {

int neighborhood_edges(const Graph& g, int v) {
  auto nb = g.neighbors(v);
  int count = 0;
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b)
      if (g.has_edge(nb[a], nb[b])) ++count;
  return count;
}

int neighborhood_triangles(const Graph& g, int v) {
  auto nb = g.neighbors(v);
  int count = 0;
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b)
      for (std::size_t c = b + 1; c < nb.size(); ++c)
        if (g.has_edge(nb[a], nb[b]) && g.has_edge(nb[b], nb[c]) &&
            g.has_edge(nb[a], nb[c]))
          ++count;
  return count;
}

}  // namespace

std::vector<std::vector<int>> refine_colors(const std::vector<const Graph*>& graphs) {
  std::vector<std::vector<int>> colors(graphs.size());

  // Initial colors from local invariants, ids assigned in sorted key order.
  {
    std::map<std::array<int, 3>, int> ids;
    std::vector<std::vector<std::array<int, 3>>> keys(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      for (int v = 0; v < g.order(); ++v) {
        keys[gi].push_back({g.degree(v), neighborhood_edges(g, v), neighborhood_triangles(g, v)});
        ids[keys[gi].back()] = 0;
      }
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
      for (auto& key : keys[gi]) colors[gi].push_back(ids[key]);
  }

  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::vector<std::pair<int, std::vector<int>>>> keys(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      for (int v = 0; v < g.order(); ++v) {
        std::vector<int> nb;
        for (int u : g.neighbors(v)) nb.push_back(colors[gi][u]);
        std::sort(nb.begin(), nb.end());
        keys[gi].push_back({colors[gi][v], std::move(nb)});
        ids[keys[gi].back()] = 0;
      }
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;

    bool changed = false;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
      for (std::size_t v = 0; v < keys[gi].size(); ++v) {
        int c = ids[keys[gi][v]];
        if (c != colors[gi][v]) changed = true;
        colors[gi][v] = c;
      }
    if (!changed) break;
  }
  return colors;
}

std::vector<std::int64_t> invariant_signature(const Graph& g) {
  auto colors = refine_colors({&g})[0];
  std::map<int, int> histogram;
  for (int c : colors) ++histogram[c];
  std::vector<std::int64_t> sig;
  sig.push_back(g.order());
  sig.push_back(g.edge_count());
  for (auto [color, count] : histogram) {
    sig.push_back(color);
    sig.push_back(count);
  }
  return sig;
}

std::optional<std::string> refinement_distinguisher(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) return "order";
  if (g1.degree_sequence() != g2.degree_sequence()) return "degree-sequence";
  auto colors = refine_colors({&g1, &g2});
  std::map<int, int> h1, h2;
  for (int c : colors[0]) ++h1[c];
  for (int c : colors[1]) ++h2[c];
  if (h1 != h2) return "refinement-distinguisher";
  return std::nullopt;
}

bool verify_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& mapping) {
  if (g1.order() != g2.order()) return false;
  if (static_cast<int>(mapping.size()) != g1.order()) return false;
  std::vector<bool> seen(g2.order(), false);
  for (int m : mapping) {
    if (m < 0 || m >= g2.order() || seen[m]) return false;
    seen[m] = true;
  }
  for (int i = 0; i < g1.order(); ++i)
    for (int j = i + 1; j < g1.order(); ++j)
      if (g1.adjacency()(i, j) != g2.adjacency()(mapping[i], mapping[j])) return false;
  return true;
}

namespace {

struct BacktrackState {
  const Graph* g1;
  const Graph* g2;
  const std::vector<int>* colors1;
  const std::vector<int>* colors2;
  std::vector<int> order;    // g1 vertices, most constrained first
  std::vector<int> mapping;  // g1 -> g2, -1 unassigned
  std::vector<bool> used;

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int u = 0; u < g2->order(); ++u) {
      if (used[u] || (*colors1)[v] != (*colors2)[u]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int w = order[d];
        if (g1->adjacency()(v, w) != g2->adjacency()(u, mapping[w])) ok = false;
      }
      if (!ok) continue;
      mapping[v] = u;
      used[u] = true;
      if (search(depth + 1)) return true;
      mapping[v] = -1;
      used[u] = false;
    }
    return false;
  }
};

}  // namespace

IsoResult are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() > 16 || g2.order() > 16)
    throw size_limit_exceeded("isomorphism search is capped at 16 vertices");
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return {};

  auto colors = refine_colors({&g1, &g2});
  std::map<int, int> h1, h2;
  for (int c : colors[0]) ++h1[c];
  for (int c : colors[1]) ++h2[c];
  if (h1 != h2) return {};

  BacktrackState st;
  st.g1 = &g1;
  st.g2 = &g2;
  st.colors1 = &colors[0];
  st.colors2 = &colors[1];
  st.order.resize(g1.order());
  std::iota(st.order.begin(), st.order.end(), 0);
  // Small color classes first; within a class keep index order.
  std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    int ca = colors[0][a], cb = colors[0][b];
    if (h1[ca] != h1[cb]) return h1[ca] < h1[cb];
    if (ca != cb) return ca < cb;
    return a < b;
  });
  st.mapping.assign(g1.order(), -1);
  st.used.assign(g2.order(), false);

  if (!st.search(0)) return {};
  IsoResult result{true, st.mapping};
  if (!verify_isomorphism(g1, g2, result.mapping))
    throw internal_error("isomorphism witness failed verification");
  return result;
}

}  // namespace pockets
