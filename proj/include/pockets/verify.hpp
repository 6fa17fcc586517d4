#ifndef POCKETS_VERIFY_HPP
#define POCKETS_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pockets/cospectral.hpp"
#include "pockets/formulas.hpp"

namespace pockets::verify {

struct Check {
  std::string name;
  bool pass = false;
  double deviation = 0.0;
  std::string detail;  // counterexample spec or coincidence notes
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool all_pass() const;
  int passed() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 50;
  double tol = 1e-9;
  int threads = 0;  // 0 = hardware concurrency
  // Closed-form instance parameters.
  int k = 2;            // thm45: matching size
  int n = 3;            // thm46: host order
  std::string h2 = "";  // named graph for the pocket remainder; "" = suite defaults
};

// prop31 | prop35 | prop41 | eq16 | thm21 | thm22 | thm45 | thm46 | eq123 |
// inherit | inherit-a | inherit-q | inherit-qedge | eigvec | cospectral-seeds
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<std::string> suite_names();

SuiteReport run_prop31(const SuiteOptions& opts);
SuiteReport run_prop35(const SuiteOptions& opts);
SuiteReport run_prop41(const SuiteOptions& opts);
SuiteReport run_eq16(const SuiteOptions& opts);
SuiteReport run_thm21(const SuiteOptions& opts);
SuiteReport run_thm22(const SuiteOptions& opts);
SuiteReport run_thm45(const SuiteOptions& opts);
SuiteReport run_thm46(const SuiteOptions& opts);
SuiteReport run_eq123(const SuiteOptions& opts);
SuiteReport run_eq123(const SuiteOptions& opts, const std::vector<Graph>& catalog);
SuiteReport run_inherit(InheritKind kind, const SuiteOptions& opts);
SuiteReport run_eigvec(const SuiteOptions& opts);
// Shrikhande/rook cospectrality + non-isomorphism, proven from scratch.
SuiteReport run_cospectral_seeds(const SuiteOptions& opts);

// Seeded generators used by the randomized suites.
VertexPocketSpec random_vertex_spec(std::mt19937_64& rng, int max_n = 7, int max_m = 6);
// Returns a spec whose induced edge subgraph is regular (matching, cycle,
// or the full edge set of a regular host).
EdgePocketSpec random_edge_spec(std::mt19937_64& rng, int max_n = 7, int max_m = 6);

// All regular graphs up to isomorphism, orders 1..max_order (max 7).
std::vector<Graph> regular_catalog(int max_order);
// All graphs of the given order up to isomorphism (practical for order <= 6).
std::vector<Graph> enumerate_graphs(int order);

}  // namespace pockets::verify

#endif
