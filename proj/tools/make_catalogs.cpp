// Regenerates the bundled graph6 catalogs under data/.  Deterministic:
// enumeration order is (edge count, graph6 string).
//
//   make_catalogs <output-dir>

#include <fstream>
#include <iostream>

#include "pockets/pocket.hpp"
#include "pockets/verify.hpp"

using namespace pockets;

namespace {

void write_lines(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_parameter("cannot write " + path);
  for (const Graph& g : graphs) out << graph6_encode(g) << "\n";
  std::cout << path << ": " << graphs.size() << " graphs\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_catalogs <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  try {
    write_lines(dir + "/all4.g6", verify::enumerate_graphs(4));
    write_lines(dir + "/all5.g6", verify::enumerate_graphs(5));

    std::vector<Graph> regulars;
    for (const Graph& g : verify::regular_catalog(6)) regulars.push_back(g);
    write_lines(dir + "/regular_le6.g6", regulars);

    write_lines(dir + "/seeds.g6", {shrikhande_graph(), rook_graph_4x4()});

    // Spec file for the flagship matched-pocket instance (K_4, matching, K_5).
    EdgePocketSpec thm45(generate_complete(4), {{0, 1}, {2, 3}}, generate_complete(5),
                         {0, 1});
    std::ofstream spec(dir + "/thm45_spec.json", std::ios::binary);
    spec << edge_spec_to_json(thm45) << "\n";
    std::cout << dir << "/thm45_spec.json written\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
