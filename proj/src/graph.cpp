#include "pockets/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pockets {

Graph::Graph(int order) {
  if (order < 1) throw invalid_parameter("graph order must be >= 1");
  adj_ = Eigen::MatrixXi::Zero(order, order);
}

Graph Graph::from_adjacency(const Eigen::MatrixXi& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw invalid_parameter("adjacency matrix must be square and nonempty");
  for (int i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw invalid_parameter("adjacency diagonal must be zero");
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && a(i, j) != 1)
        throw invalid_parameter("adjacency entries must be 0/1");
      if (a(i, j) != a(j, i))
        throw invalid_parameter("adjacency matrix must be symmetric");
    }
  }
  Graph g(static_cast<int>(a.rows()));
  g.adj_ = a;
  return g;
}

void Graph::check_vertex(int i) const {
  if (i < 0 || i >= order())
    throw invalid_parameter("vertex index " + std::to_string(i) +
                            " out of range for order " + std::to_string(order()));
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw invalid_parameter("loops are not allowed");
  adj_(i, j) = adj_(j, i) = 1;
}

void Graph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  adj_(i, j) = adj_(j, i) = 0;
}

int Graph::degree(int i) const {
  check_vertex(i);
  return adj_.row(i).sum();
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(order());
  for (int i = 0; i < order(); ++i) d[i] = adj_.row(i).sum();
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d = degrees();
  std::sort(d.rbegin(), d.rend());
  return d;
}

int Graph::edge_count() const { return adj_.sum() / 2; }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if (adj_(i, j)) e.emplace_back(i, j);
  return e;
}

std::vector<int> Graph::neighbors(int i) const {
  check_vertex(i);
  std::vector<int> nb;
  for (int j = 0; j < order(); ++j)
    if (adj_(i, j)) nb.push_back(j);
  return nb;
}

std::optional<int> Graph::regularity() const {
  int d0 = degree(0);
  for (int i = 1; i < order(); ++i)
    if (degree(i) != d0) return std::nullopt;
  return d0;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  if (vertices.empty()) throw invalid_parameter("induced subgraph needs >= 1 vertex");
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    check_vertex(vertices[a]);
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b])
        throw invalid_parameter("induced subgraph vertices must be distinct");
  }
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (adj_(vertices[a], vertices[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

Graph Graph::without_vertex(int v) const { return without_vertices({v}); }

Graph Graph::without_vertices(std::vector<int> vs) const {
  std::sort(vs.begin(), vs.end());
  std::vector<int> keep;
  for (int i = 0; i < order(); ++i)
    if (!std::binary_search(vs.begin(), vs.end(), i)) keep.push_back(i);
  return induced(keep);
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != order())
    throw invalid_parameter("permutation size mismatch");
  std::vector<bool> seen(order(), false);
  for (int p : perm) {
    if (p < 0 || p >= order() || seen[p])
      throw invalid_parameter("not a permutation");
    seen[p] = true;
  }
  Graph g(order());
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if (adj_(i, j)) g.add_edge(perm[i], perm[j]);
  return g;
}

void Graph::set_label(int i, std::string label) {
  check_vertex(i);
  if (labels_.empty()) labels_.resize(order());
  labels_[i] = std::move(label);
}

Graph generate_empty(int n) { return Graph(n); }

Graph generate_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph generate_cycle(int n) {
  if (n < 3) throw invalid_parameter("cycle requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph generate_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph generate_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw invalid_parameter("bipartition sizes must be >= 1");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph shrikhande_graph() {
  // Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
  Graph g(16);
  auto idx = [](int a, int b) { return 4 * ((a % 4 + 4) % 4) + ((b % 4 + 4) % 4); };
  const int diff[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto& d : diff) g.add_edge(idx(a, b), idx(a + d[0], b + d[1]));
  return g;
}

Graph rook_graph_4x4() {
  Graph g(16);
  auto idx = [](int a, int b) { return 4 * a + b; };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      for (int b2 = b + 1; b2 < 4; ++b2) g.add_edge(idx(a, b), idx(a, b2));
      for (int a2 = a + 1; a2 < 4; ++a2) g.add_edge(idx(a, b), idx(a2, b));
    }
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) c.add_edge(i, j);
  return c;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  Graph g(n1 + n2);
  for (auto [i, j] : g1.edges()) g.add_edge(i, j);
  for (auto [i, j] : g2.edges()) g.add_edge(n1 + i, n1 + j);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  for (int i = 0; i < g1.order(); ++i)
    for (int j = 0; j < g2.order(); ++j) g.add_edge(i, g1.order() + j);
  return g;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  Graph g(n1 * n2);
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n2; ++x) {
      for (int y = x + 1; y < n2; ++y)
        if (g2.has_edge(x, y)) g.add_edge(a * n2 + x, a * n2 + y);
      for (int b = a + 1; b < n1; ++b)
        if (g1.has_edge(a, b)) g.add_edge(a * n2 + x, b * n2 + x);
    }
  return g;
}

GraphMatrices graph_matrices(const Graph& g) {
  const int n = g.order();
  GraphMatrices m;
  m.A = IntMatrix::Zero(n, n);
  m.D = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m.D(i, i) = g.degree(i);
    for (int j = 0; j < n; ++j)
      if (g.adjacency()(i, j)) m.A(i, j) = 1;
  }
  m.Q = m.D + m.A;
  return m;
}

IntMatrix adjacency_matrix(const Graph& g) { return graph_matrices(g).A; }
IntMatrix signless_laplacian(const Graph& g) { return graph_matrices(g).Q; }

Eigen::MatrixXd adjacency_matrix_d(const Graph& g) {
  return g.adjacency().cast<double>();
}

Eigen::MatrixXd signless_laplacian_d(const Graph& g) {
  Eigen::MatrixXd m = g.adjacency().cast<double>();
  for (int i = 0; i < g.order(); ++i) m(i, i) = g.degree(i);
  return m;
}

EdgeInducedSubgraph edge_induced_subgraph(const Graph& f,
                                          const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) throw invalid_parameter("edge subset must be nonempty");
  std::vector<int> verts;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= f.order() || b >= f.order() || !f.has_edge(a, b))
      throw invalid_parameter("edge " + std::to_string(a) + "-" + std::to_string(b) +
                              " is not an edge of the host graph");
    verts.push_back(a);
    verts.push_back(b);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  Graph sub(static_cast<int>(verts.size()));
  auto pos = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (auto [a, b] : edges) sub.add_edge(pos(a), pos(b));

  EdgeInducedSubgraph result{std::move(sub), std::move(verts), std::nullopt};
  result.regularity = result.graph.regularity();
  return result;
}

IntMatrix incidence_matrix(const Graph& g) {
  auto es = g.edges();
  IntMatrix r = IntMatrix::Zero(g.order(), static_cast<int>(es.size()));
  for (std::size_t c = 0; c < es.size(); ++c) {
    r(es[c].first, static_cast<int>(c)) = 1;
    r(es[c].second, static_cast<int>(c)) = 1;
  }
  return r;
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      v <<= 1;
      if (i + b < bits.size() && bits[i + b]) v |= 1;
    }
    out.push_back(static_cast<char>(v + kG6Lo));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kG6Hi));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
    out.push_back(static_cast<char>((n & 63) + kG6Lo));
  } else {
    throw invalid_parameter("graph6 encoder supports order < 258048");
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacency()(i, j) != 0);
  append_bits(out, bits);
  return out;
}

Graph graph6_decode(std::string_view text) {
  // Optional catalog header.
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw parse_error("empty graph6 record", 0);

  std::size_t pos = 0;
  auto need = [&](std::size_t count) {
    if (text.size() - pos < count)
      throw parse_error("truncated graph6 record", text.size());
  };
  auto value = [&](std::size_t at) {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < kG6Lo || c > kG6Hi)
      throw parse_error("byte out of graph6 range", at);
    return static_cast<int>(c - kG6Lo);
  };

  long long n;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else {
    need(2);
    if (text[1] == '~')
      throw parse_error("graph6 order exceeds supported range", 1);
    need(4);
    n = (static_cast<long long>(value(1)) << 12) |
        (static_cast<long long>(value(2)) << 6) | value(3);
    pos = 4;
  }
  if (n < 1) throw parse_error("graph order must be >= 1", 0);
  if (n > 258047) throw parse_error("graph6 order exceeds supported range", 0);

  const long long nbits = n * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  need(static_cast<std::size_t>(nbytes));
  if (text.size() - pos > static_cast<std::size_t>(nbytes))
    throw parse_error("trailing bytes after graph6 record", pos + nbytes);

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = value(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  // Padding bits must be zero.
  for (long long b = nbits; b < nbytes * 6; ++b) {
    int byte = value(pos + b / 6);
    if ((byte >> (5 - b % 6)) & 1)
      throw parse_error("nonzero padding bits", pos + b / 6);
  }
  return g;
}

std::vector<Graph> read_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_parameter("cannot open graph6 file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph6_lines(buf.str());
}

std::optional<Graph> named_graph(std::string_view name) {
  if (name == "shrikhande") return shrikhande_graph();
  if (name == "rook") return rook_graph_4x4();
  if (name.size() < 2) return std::nullopt;
  const char kind = name[0];
  std::string rest(name.substr(1));
  auto parse_int = [](const std::string& s, int& out) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoi(s);
    return true;
  };
  // Complete bipartite: K2x3 or K2,3.
  if (kind == 'K') {
    auto sep = rest.find_first_of("x,");
    if (sep != std::string::npos) {
      int a = 0, b = 0;
      if (parse_int(rest.substr(0, sep), a) && parse_int(rest.substr(sep + 1), b))
        return generate_complete_bipartite(a, b);
      return std::nullopt;
    }
  }
  int n = 0;
  if (!parse_int(rest, n)) return std::nullopt;
  switch (kind) {
    case 'K':
      return generate_complete(n);
    case 'C':
      return generate_cycle(n);
    case 'P':
      return generate_path(n);
    case 'E':
      return generate_empty(n);
    default:
      return std::nullopt;
  }
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1u) g.add_edge(i, j);
  return g;
}

std::vector<std::pair<int, int>> parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
      throw invalid_parameter("bad edge token '" + token + "', expected i-j");
    edges.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      token.push_back(c);
    } else {
      throw invalid_parameter(std::string("unexpected character '") + c + "' in edge list");
    }
  }
  flush();
  return edges;
}

}  // namespace pockets
