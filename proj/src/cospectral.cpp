#include "pockets/cospectral.hpp"

#include <istream>
#include <map>
#include <sstream>

#include "pockets/exact_linalg.hpp"
#include "pockets/isomorphism.hpp"

namespace pockets {

namespace {

IntPoly kind_charpoly(const Graph& g, MatrixKind kind) {
  return charpoly_exact(kind == MatrixKind::adjacency ? adjacency_matrix(g)
                                                      : signless_laplacian(g));
}

WitnessGrade witness_for(const Graph& g1, const Graph& g2) {
  if (auto d = refinement_distinguisher(g1, g2)) {
    return *d == "degree-sequence" ? WitnessGrade::degree_sequence
                                   : WitnessGrade::refinement_distinguisher;
  }
  if (g1.order() <= 16 && g2.order() <= 16) {
    return are_isomorphic(g1, g2).isomorphic ? WitnessGrade::isomorphic
                                             : WitnessGrade::exhausted_backtracking;
  }
  return WitnessGrade::not_checked;
}

int first_difference(const IntPoly& a, const IntPoly& b) {
  const int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i)
    if (a.coeff(i) != b.coeff(i)) return i;
  return -1;
}

void require_coregular_seeds(const Graph& a, const Graph& b, int min_degree,
                             const char* what) {
  if (a.order() != b.order())
    throw precondition_violation(std::string(what) + ": seeds must share an order");
  auto ra = a.regularity(), rb = b.regularity();
  if (!ra || !rb || *ra != *rb)
    throw precondition_violation(std::string(what) +
                                 ": seeds must be regular of equal degree");
  if (*ra < min_degree)
    throw precondition_violation(std::string(what) + ": seed degree below " +
                                 std::to_string(min_degree));
}

}  // namespace

std::string witness_grade_name(WitnessGrade g) {
  switch (g) {
    case WitnessGrade::degree_sequence: return "degree-sequence";
    case WitnessGrade::refinement_distinguisher: return "refinement-distinguisher";
    case WitnessGrade::exhausted_backtracking: return "exhausted-backtracking";
    case WitnessGrade::isomorphic: return "isomorphic";
    case WitnessGrade::not_checked: return "not-checked";
  }
  return "?";
}

bool CospectralCertificate::reverify() const {
  if (kind_charpoly(g1, kind) != shared_charpoly) return false;
  if (kind_charpoly(g2, kind) != shared_charpoly) return false;
  return witness_for(g1, g2) == witness;
}

CospectralCheck verify_cospectral(const Graph& g1, const Graph& g2, MatrixKind kind) {
  CospectralCheck out;
  out.charpoly1 = kind_charpoly(g1, kind);
  out.charpoly2 = kind_charpoly(g2, kind);
  if (out.charpoly1 != out.charpoly2) {
    // Order mismatch also lands here: the degrees differ.
    out.first_diff_coeff = first_difference(out.charpoly1, out.charpoly2);
    return out;
  }
  out.cospectral = true;
  out.certificate =
      CospectralCertificate{g1, g2, kind, out.charpoly1, witness_for(g1, g2)};
  return out;
}

CospectralPocketPair make_cospectral_vertex_pocket_pair(const Graph& f,
                                                        const std::vector<int>& vk,
                                                        const Graph& h1, const Graph& h1p,
                                                        MatrixKind kind) {
  require_coregular_seeds(h1, h1p, 1, "make_cospectral_vertex_pocket_pair");
  CospectralCheck seeds = verify_cospectral(h1, h1p, kind);
  if (!seeds.cospectral)
    throw precondition_violation(
        "make_cospectral_vertex_pocket_pair: seeds are not cospectral (first "
        "differing coefficient " +
        std::to_string(*seeds.first_diff_coeff) + ")");

  Graph pocket1 = join(generate_empty(1), h1);
  Graph pocket2 = join(generate_empty(1), h1p);
  Graph g1 = build_vertex_pockets(VertexPocketSpec(f, vk, pocket1, 0));
  Graph g2 = build_vertex_pockets(VertexPocketSpec(f, vk, pocket2, 0));

  CospectralCheck built = verify_cospectral(g1, g2, kind);
  if (!built.cospectral)
    throw internal_error("constructed pocket pair failed cospectrality");
  return CospectralPocketPair{g1, g2, *built.certificate};
}

CospectralPocketPair make_cospectral_edge_pocket_pair(
    const Graph& f, const std::vector<std::pair<int, int>>& ek, const Graph& h2,
    const Graph& h2p) {
  require_coregular_seeds(h2, h2p, 2, "make_cospectral_edge_pocket_pair");
  CospectralCheck seeds = verify_cospectral(h2, h2p, MatrixKind::signless_laplacian);
  if (!seeds.cospectral)
    throw precondition_violation(
        "make_cospectral_edge_pocket_pair: seeds are not Q-cospectral (first "
        "differing coefficient " +
        std::to_string(*seeds.first_diff_coeff) + ")");

  Graph pocket1 = join(generate_complete(2), h2);
  Graph pocket2 = join(generate_complete(2), h2p);
  EdgePocketSpec spec1(f, ek, pocket1, {0, 1});
  EdgePocketSpec spec2(f, ek, pocket2, {0, 1});
  if (!spec1.r)
    throw precondition_violation(
        "make_cospectral_edge_pocket_pair: induced subgraph must be regular");

  Graph g1 = build_edge_pockets(spec1);
  Graph g2 = build_edge_pockets(spec2);
  CospectralCheck built = verify_cospectral(g1, g2, MatrixKind::signless_laplacian);
  if (!built.cospectral)
    throw internal_error("constructed edge-pocket pair failed Q-cospectrality");
  return CospectralPocketPair{g1, g2, *built.certificate};
}

SearchResult search_cospectral_mates(const std::vector<Graph>& catalog, MatrixKind kind,
                                     bool require_regular) {
  SearchResult out;
  out.graphs_read = static_cast<int>(catalog.size());

  std::map<std::string, std::vector<int>> classes;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const IntPoly poly = kind_charpoly(catalog[i], kind);
    std::ostringstream key;
    for (const Int& c : poly.coeffs()) key << c.get_str() << ",";
    classes[key.str()].push_back(static_cast<int>(i));
  }

  for (const auto& [key, members] : classes) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Graph& g1 = catalog[members[a]];
        const Graph& g2 = catalog[members[b]];
        if (require_regular) {
          auto r1 = g1.regularity(), r2 = g2.regularity();
          if (!r1 || !r2 || *r1 != *r2) continue;
        }
        CospectralCheck check = verify_cospectral(g1, g2, kind);
        if (!check.cospectral) throw internal_error("charpoly class key collision");
        out.pairs.push_back(*check.certificate);
      }
  }
  return out;
}

SearchResult search_cospectral_mates(std::istream& catalog, MatrixKind kind,
                                     bool require_regular) {
  std::vector<Graph> graphs;
  std::vector<std::string> errors;
  std::string line;
  int lineno = 0;
  while (std::getline(catalog, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = graph6_decode(line);
      if (g.order() > 20) throw size_limit_exceeded("catalog orders are capped at 20");
      graphs.push_back(std::move(g));
    } catch (const error& e) {
      errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  SearchResult out = search_cospectral_mates(graphs, kind, require_regular);
  out.line_errors = std::move(errors);
  return out;
}

}  // namespace pockets
