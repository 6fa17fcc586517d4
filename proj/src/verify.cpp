#include "pockets/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "pockets/exact_linalg.hpp"
#include "pockets/isomorphism.hpp"
#include "pockets/numeric.hpp"

namespace pockets::verify {

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.pass) ++n;
  return n;
}

namespace {

std::uint64_t instance_seed(std::uint64_t seed, int i) {
  return seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1);
}

template <class Fn>
std::vector<Check> parallel_map(int count, int threads, Fn&& fn) {
  std::vector<Check> out(count);
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) break;
      try {
        out[i] = fn(i);
      } catch (const std::exception& e) {
        out[i].name = "instance " + std::to_string(i);
        out[i].pass = false;
        out[i].detail = std::string("exception: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

bool exact_value_is_root(const IntPoly& f, const SpectrumValue& v) {
  if (std::holds_alternative<Rat>(v)) return f.eval<Rat>(std::get<Rat>(v)) == 0;
  if (std::holds_alternative<QuadraticRoot>(v)) {
    const auto& q = std::get<QuadraticRoot>(v);
    // Irrational quadratic: theta roots f iff its minimal polynomial divides f.
    RatPoly divisor({Rat(q.c), Rat(q.b), Rat(q.a)});
    auto [quot, rem] = divmod(to_rat(f), divisor);
    return rem.is_zero();
  }
  return false;
}

bool factored_consistent(const FactoredCharpoly& fc) {
  RationalFunction full = fc.residual.det;
  for (const auto& [poly, e] : fc.scalar_factors)
    full = full * RationalFunction(poly.pow(e));
  return full == RationalFunction(fc.expanded);
}

std::vector<std::pair<int, int>> hamilton_cycle_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return e;
}

std::vector<std::pair<int, int>> matching_edges(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return e;
}

// A cycle in g as an edge list, if one exists.
std::optional<std::vector<std::pair<int, int>>> find_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n, -2);
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    std::vector<std::pair<int, int>> stack = {{root, -1}};
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      if (parent[v] != -2) continue;
      parent[v] = from;
      for (int u : g.neighbors(v)) {
        if (u == from) continue;
        if (parent[u] != -2) {
          // Back edge u-v: walk v up to u.
          std::vector<int> path = {v};
          int w = v;
          while (w != u && w != -1) {
            w = parent[w];
            path.push_back(w);
          }
          if (w != u) continue;  // crossed into another branch; skip
          std::vector<std::pair<int, int>> cycle;
          for (std::size_t i = 0; i + 1 < path.size(); ++i)
            cycle.emplace_back(path[i], path[i + 1]);
          cycle.emplace_back(u, v);
          return cycle;
        }
        stack.emplace_back(u, v);
      }
    }
  }
  return std::nullopt;
}

Graph h2_by_name(const std::string& name) {
  auto g = named_graph(name);
  if (!g) throw invalid_parameter("unknown pocket remainder graph: " + name);
  return *g;
}

}  // namespace

VertexPocketSpec random_vertex_spec(std::mt19937_64& rng, int max_n, int max_m) {
  const int n = 1 + static_cast<int>(rng() % max_n);
  const int m = 2 + static_cast<int>(rng() % (max_m - 1));
  const int k = 1 + static_cast<int>(rng() % n);
  Graph f = random_graph(n, rng);
  Graph h1 = random_graph(m - 1, rng);
  Graph h = join(generate_empty(1), h1);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return VertexPocketSpec(std::move(f), std::move(all), std::move(h), 0);
}

EdgePocketSpec random_edge_spec(std::mt19937_64& rng, int max_n, int max_m) {
  for (;;) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    Graph f = random_graph(n, rng);
    auto edges = f.edges();
    if (edges.empty()) continue;

    std::vector<std::pair<int, int>> ek;
    switch (rng() % 4) {
      case 0: {  // random matching
        std::shuffle(edges.begin(), edges.end(), rng);
        std::vector<bool> used(n, false);
        for (auto [a, b] : edges)
          if (!used[a] && !used[b]) {
            used[a] = used[b] = true;
            ek.emplace_back(a, b);
          }
        const int want = 1 + static_cast<int>(rng() % ek.size());
        ek.resize(want);
        break;
      }
      case 1: {  // a cycle, when the host has one
        if (auto cycle = find_cycle(f)) {
          ek = *cycle;
        } else {
          ek.push_back(edges[rng() % edges.size()]);
        }
        break;
      }
      case 2: {  // the full edge set of a regular host
        if (f.regularity() && *f.regularity() >= 1) {
          ek = edges;
        } else {
          ek.push_back(edges[rng() % edges.size()]);
        }
        break;
      }
      default:
        ek.push_back(edges[rng() % edges.size()]);
        break;
    }

    const int m = 3 + static_cast<int>(rng() % (max_m - 2));
    Graph h2 = random_graph(m - 2, rng);
    Graph h = join(generate_complete(2), h2);
    EdgePocketSpec spec(std::move(f), std::move(ek), std::move(h), {0, 1});
    if (spec.r) return spec;
  }
}

std::vector<Graph> regular_catalog(int max_order) {
  if (max_order > 7)
    throw invalid_parameter("regular catalog is assembled for orders <= 7");
  std::vector<Graph> out;
  auto add = [&](const Graph& g) {
    for (const Graph& have : out)
      if (have.order() == g.order() && are_isomorphic(have, g).isomorphic) return;
    out.push_back(g);
  };
  for (int n = 1; n <= max_order; ++n) {
    add(generate_empty(n));
    if (n >= 2) add(generate_complete(n));
    if (n >= 3) add(generate_cycle(n));
    if (n % 2 == 0 && n >= 4) {  // perfect matching
      Graph m(n);
      for (int i = 0; i < n / 2; ++i) m.add_edge(2 * i, 2 * i + 1);
      add(m);
    }
    if (n % 2 == 0 && n >= 6) add(generate_complete_bipartite(n / 2, n / 2));
    // 2-regular unions of cycles.
    for (int a = 3; a + 3 <= n; ++a)
      if (a <= n - a) add(disjoint_union(generate_cycle(a), generate_cycle(n - a)));
    // Unions of equal cliques.
    for (int parts = 2; parts * 3 <= n; ++parts)
      if (n % parts == 0 && n / parts >= 3) {
        Graph u = generate_complete(n / parts);
        for (int i = 1; i < parts; ++i)
          u = disjoint_union(u, generate_complete(n / parts));
        add(u);
      }
    if (n == 6) {
      add(cartesian_product(generate_cycle(3), generate_complete(2)));  // prism
      add(join(generate_empty(2), generate_cycle(4)));                  // octahedron
    }
    if (n == 7) {
      add(complement(generate_cycle(7)));
      add(complement(disjoint_union(generate_cycle(3), generate_cycle(4))));
    }
  }
  return out;
}

std::vector<Graph> enumerate_graphs(int order) {
  if (order < 1 || order > 6)
    throw invalid_parameter("exhaustive enumeration supported for orders 1..6");
  const int bits = order * (order - 1) / 2;
  std::vector<Graph> reps;
  std::vector<std::vector<std::int64_t>> sigs;
  for (long mask = 0; mask < (1L << bits); ++mask) {
    Graph g(order);
    int b = 0;
    for (int i = 0; i < order; ++i)
      for (int j = i + 1; j < order; ++j, ++b)
        if ((mask >> b) & 1) g.add_edge(i, j);
    auto sig = invariant_signature(g);
    bool fresh = true;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (sigs[r] != sig) continue;
      if (are_isomorphic(reps[r], g).isomorphic) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      reps.push_back(std::move(g));
      sigs.push_back(std::move(sig));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const Graph& a, const Graph& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return graph6_encode(a) < graph6_encode(b);
  });
  return reps;
}

SuiteReport run_prop31(const SuiteOptions& opts) {
  SuiteReport rep{"prop31", {}};
  rep.checks = parallel_map(opts.count, opts.threads, [&](int i) {
    std::mt19937_64 rng(instance_seed(opts.seed, i));
    VertexPocketSpec spec = random_vertex_spec(rng);
    Check c;
    c.name = "prop31[" + std::to_string(i) + "] n=" + std::to_string(spec.n()) +
             " m=" + std::to_string(spec.m()) + " k=" + std::to_string(spec.k());
    FactoredCharpoly fc = pocket_charpoly_A(spec);
    IntPoly direct = charpoly_exact(adjacency_matrix(build_vertex_pockets(spec)));
    c.pass = fc.expanded == direct && factored_consistent(fc);
    if (!c.pass) c.detail = vertex_spec_to_json(spec);
    return c;
  });
  return rep;
}

SuiteReport run_prop35(const SuiteOptions& opts) {
  SuiteReport rep{"prop35", {}};
  rep.checks = parallel_map(opts.count, opts.threads, [&](int i) {
    std::mt19937_64 rng(instance_seed(opts.seed, i));
    VertexPocketSpec spec = random_vertex_spec(rng);
    Check c;
    c.name = "prop35[" + std::to_string(i) + "] n=" + std::to_string(spec.n()) +
             " m=" + std::to_string(spec.m()) + " k=" + std::to_string(spec.k());
    FactoredCharpoly fc = pocket_charpoly_Q(spec);
    IntPoly direct = charpoly_exact(signless_laplacian(build_vertex_pockets(spec)));
    c.pass = fc.expanded == direct && factored_consistent(fc);
    if (!c.pass) c.detail = vertex_spec_to_json(spec);
    return c;
  });
  return rep;
}

namespace {

struct EdgeFixture {
  std::string name;
  Graph f;
  std::vector<std::pair<int, int>> ek;
};

std::vector<EdgeFixture> prop41_fixtures() {
  std::vector<EdgeFixture> fx;
  fx.push_back({"K4+matching", generate_complete(4), matching_edges(2)});
  fx.push_back({"K6+matching", generate_complete(6), matching_edges(3)});
  fx.push_back({"K3+C3", generate_complete(3), hamilton_cycle_edges(3)});
  fx.push_back({"K4+C4", generate_complete(4), hamilton_cycle_edges(4)});
  fx.push_back({"C5+all", generate_cycle(5), hamilton_cycle_edges(5)});
  return fx;
}

std::vector<std::pair<std::string, Graph>> prop41_pockets() {
  return {{"K5", generate_complete(5)},
          {"K2vC4", join(generate_complete(2), generate_cycle(4))}};
}

}  // namespace

SuiteReport run_prop41(const SuiteOptions& opts) {
  SuiteReport rep{"prop41", {}};
  for (const auto& fx : prop41_fixtures()) {
    for (const auto& [hname, h] : prop41_pockets()) {
      Check c;
      c.name = "prop41 " + fx.name + " H=" + hname;
      try {
        EdgePocketSpec spec(fx.f, fx.ek, h, {0, 1});
        FactoredCharpoly fc = edge_pocket_charpoly_Q(spec);
        IntPoly direct = charpoly_exact(signless_laplacian(build_edge_pockets(spec)));
        c.pass = fc.expanded == direct && factored_consistent(fc);
        if (!c.pass) c.detail = edge_spec_to_json(spec);
      } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
      }
      rep.checks.push_back(std::move(c));
    }
  }
  // Randomized regular-Ek specs on top of the fixture set.
  auto random_checks = parallel_map(opts.count, opts.threads, [&](int i) {
    std::mt19937_64 rng(instance_seed(opts.seed, i));
    EdgePocketSpec spec = random_edge_spec(rng);
    Check c;
    c.name = "prop41[" + std::to_string(i) + "] n=" + std::to_string(spec.n()) +
             " m=" + std::to_string(spec.m()) + " k=" + std::to_string(spec.k()) +
             " r=" + std::to_string(*spec.r);
    FactoredCharpoly fc = edge_pocket_charpoly_Q(spec);
    IntPoly direct = charpoly_exact(signless_laplacian(build_edge_pockets(spec)));
    c.pass = fc.expanded == direct && factored_consistent(fc);
    if (!c.pass) c.detail = edge_spec_to_json(spec);
    return c;
  });
  rep.checks.insert(rep.checks.end(), random_checks.begin(), random_checks.end());
  return rep;
}

SuiteReport run_eq16(const SuiteOptions&) {
  SuiteReport rep{"eq16", {}};
  for (const auto& fx : prop41_fixtures()) {
    for (const auto& [hname, h] : prop41_pockets()) {
      Check c;
      c.name = "eq16 " + fx.name + " H=" + hname;
      try {
        EdgePocketSpec spec(fx.f, fx.ek, h, {0, 1});
        FactoredCharpoly spanning = spanning_edge_pocket_charpoly_Q(spec);
        FactoredCharpoly general = edge_pocket_charpoly_Q(spec);
        IntPoly direct = charpoly_exact(signless_laplacian(build_edge_pockets(spec)));
        const bool identical = spanning.expanded == general.expanded &&
                               spanning.residual.det == general.residual.det;
        c.pass = spanning.expanded == direct && identical;
        if (!c.pass) c.detail = edge_spec_to_json(spec);
      } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
      }
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

SuiteReport run_thm21(const SuiteOptions& opts) {
  SuiteReport rep{"thm21", {}};
  const std::vector<Graph> pool = regular_catalog(7);
  rep.checks = parallel_map(opts.count, opts.threads, [&, pool](int i) {
    std::mt19937_64 rng(instance_seed(opts.seed, i));
    const Graph& g1 = pool[rng() % pool.size()];
    const Graph& g2 = pool[rng() % pool.size()];
    Check c;
    c.name = "thm21[" + std::to_string(i) + "] " + graph6_encode(g1) + " v " +
             graph6_encode(g2);
    c.pass = join_charpoly_A(g1, g2) == charpoly_exact(adjacency_matrix(join(g1, g2)));
    return c;
  });
  return rep;
}

SuiteReport run_thm22(const SuiteOptions& opts) {
  SuiteReport rep{"thm22", {}};
  const std::vector<Graph> pool = regular_catalog(7);
  rep.checks = parallel_map(opts.count, opts.threads, [&, pool](int i) {
    std::mt19937_64 rng(instance_seed(opts.seed, i));
    const Graph& g1 = pool[rng() % pool.size()];
    const Graph& g2 = pool[rng() % pool.size()];
    Check c;
    c.name = "thm22[" + std::to_string(i) + "] " + graph6_encode(g1) + " v " +
             graph6_encode(g2);
    c.pass =
        join_charpoly_Q(g1, g2) == charpoly_exact(signless_laplacian(join(g1, g2)));
    return c;
  });
  return rep;
}

namespace {

void closed_form_checks(SuiteReport& rep, const std::string& label, const Graph& f,
                        const std::vector<std::pair<int, int>>& ek, const Graph& h2,
                        const SpectrumMultiset& closed, double tol) {
  Graph h = join(generate_complete(2), h2);
  EdgePocketSpec spec(f, ek, h, {0, 1});
  Graph built = build_edge_pockets(spec);

  Check match;
  match.name = label + " multiset-vs-numeric";
  auto numeric = eig_sym(signless_laplacian_d(built));
  auto res = spectra_match(closed.to_doubles(), numeric.values, tol);
  match.pass = res.match;
  match.deviation = res.max_deviation;
  rep.checks.push_back(match);

  Check trace;
  trace.name = label + " eigenvalue-sum-vs-trace";
  const Int tr = signless_laplacian(built).trace();
  if (auto sum = closed.exact_sum()) {
    trace.pass = *sum == Rat(tr);
    trace.detail = "exact sum " + sum->get_str();
  } else {
    double s = 0;
    for (double v : closed.to_doubles()) s += v;
    trace.deviation = std::abs(s - tr.get_d());
    trace.pass = trace.deviation <= 1e-6;
    trace.detail = "numeric sum (irrational cosine entries)";
  }
  rep.checks.push_back(trace);
}

}  // namespace

SuiteReport run_thm45(const SuiteOptions& opts) {
  SuiteReport rep{"thm45", {}};
  std::vector<std::pair<int, std::string>> instances;
  if (!opts.h2.empty()) {
    instances.emplace_back(opts.k, opts.h2);
  } else {
    instances = {{2, "K3"}, {1, "K3"}, {3, "K3"}, {2, "C4"}};
  }
  for (const auto& [k, h2name] : instances) {
    Graph h2 = h2_by_name(h2name);
    const int m = h2.order() + 2;
    auto r2 = h2.regularity();
    if (!r2) throw precondition_violation("thm45 pocket remainder must be regular");
    SpectrumMultiset closed = matching_pocket_spectrum_Q(k, m, *r2, huv_spectrum_Q(h2));
    closed_form_checks(rep, "thm45 k=" + std::to_string(k) + " H2=" + h2name,
                       generate_complete(2 * k), matching_edges(k), h2, closed,
                       opts.tol);
  }
  return rep;
}

SuiteReport run_thm46(const SuiteOptions& opts) {
  SuiteReport rep{"thm46", {}};
  std::vector<std::pair<int, std::string>> instances;
  if (!opts.h2.empty()) {
    instances.emplace_back(opts.n, opts.h2);
  } else if (opts.n != 3) {
    instances.emplace_back(opts.n, "K3");
  } else {
    instances = {{3, "K3"}, {4, "K3"}, {5, "K3"}, {6, "K3"}};
  }
  for (const auto& [n, h2name] : instances) {
    Graph h2 = h2_by_name(h2name);
    const int m = h2.order() + 2;
    auto r2 = h2.regularity();
    if (!r2) throw precondition_violation("thm46 pocket remainder must be regular");
    SpectrumMultiset closed = cycle_pocket_spectrum_Q(n, m, *r2, huv_spectrum_Q(h2));
    closed_form_checks(rep, "thm46 n=" + std::to_string(n) + " H2=" + h2name,
                       generate_complete(n), hamilton_cycle_edges(n), h2, closed,
                       opts.tol);
  }
  return rep;
}

SuiteReport run_eq123(const SuiteOptions& opts) {
  return run_eq123(opts, regular_catalog(6));
}

SuiteReport run_eq123(const SuiteOptions& opts, const std::vector<Graph>& catalog) {
  SuiteReport rep{"eq123", {}};
  auto spectrum_checks = [&](const std::string& label, const SpectrumMultiset& formula,
                             const Graph& joined, MatrixKind kind) {
    const IntMatrix mat = kind == MatrixKind::adjacency ? adjacency_matrix(joined)
                                                        : signless_laplacian(joined);
    Eigen::MatrixXd md(mat.rows(), mat.cols());
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j) md(i, j) = mat(i, j).get_d();

    Check match;
    match.name = label + " multiset";
    auto res = spectra_match(formula.to_doubles(), eig_sym(md).values, opts.tol);
    match.pass = res.match;
    match.deviation = res.max_deviation;
    rep.checks.push_back(match);

    Check roots;
    roots.name = label + " exact-roots";
    roots.pass = true;
    const IntPoly direct = charpoly_exact(mat);
    for (const auto& e : formula.entries())
      if (value_exact(e.value) && !exact_value_is_root(direct, e.value)) {
        roots.pass = false;
        roots.detail = "value " + value_str(e.value) + " is not a root";
        break;
      }
    rep.checks.push_back(roots);
  };

  for (const Graph& g : catalog) {
    if (g.order() > 6 || !g.regularity()) continue;
    const std::string g6 = graph6_encode(g);
    spectrum_checks("eq1 H1=" + g6, hv_spectrum_A(g), join(generate_empty(1), g),
                    MatrixKind::adjacency);
    spectrum_checks("eq2 H1=" + g6, hv_spectrum_Q(g), join(generate_empty(1), g),
                    MatrixKind::signless_laplacian);
    if (*g.regularity() >= 2)
      spectrum_checks("eq3 H2=" + g6, huv_spectrum_Q(g), join(generate_complete(2), g),
                      MatrixKind::signless_laplacian);
  }
  return rep;
}

namespace {

void inherited_checks(SuiteReport& rep, const std::string& label,
                      const InheritedSpectrum& a, const InheritedSpectrum& b,
                      const Graph& built_a, const Graph& built_b, MatrixKind kind) {
  Check identical;
  identical.name = label + " residual-bit-identical";
  identical.pass = a.residual_poly == b.residual_poly;
  rep.checks.push_back(identical);

  Check differ;
  differ.name = label + " inherited-parts-differ";
  differ.pass =
      !(spectra_match(a.inherited.to_doubles(), b.inherited.to_doubles(), 1e-9).match);
  rep.checks.push_back(differ);

  auto multiplicity = [&](const InheritedSpectrum& inh, const Graph& built,
                          const std::string& tag) {
    Check c;
    c.name = label + " " + tag + " multiplicity>=k";
    c.pass = true;
    Eigen::MatrixXd md = kind == MatrixKind::adjacency ? adjacency_matrix_d(built)
                                                       : signless_laplacian_d(built);
    auto numeric = eig_sym(md).values;
    for (const auto& e : inh.inherited.entries()) {
      const double target = static_cast<double>(value_approx(e.value));
      int count = 0;
      for (double v : numeric)
        if (std::abs(v - target) <= 1e-6) ++count;
      if (count < e.multiplicity) {
        c.pass = false;
        c.detail = "value " + value_str(e.value) + " seen " + std::to_string(count) +
                   " < " + std::to_string(e.multiplicity);
        break;
      }
      if (count > e.multiplicity)
        c.detail += "coincidence at " + value_str(e.value) + " (" +
                    std::to_string(count) + ">" + std::to_string(e.multiplicity) + "); ";
    }
    rep.checks.push_back(c);
  };
  multiplicity(a, built_a, "C6");
  multiplicity(b, built_b, "2K3");
}

}  // namespace

SuiteReport run_inherit(InheritKind kind, const SuiteOptions&) {
  SuiteReport rep{"inherit", {}};
  const Graph c6 = generate_cycle(6);
  const Graph kk3 = disjoint_union(generate_complete(3), generate_complete(3));

  if (kind == InheritKind::a_vertex || kind == InheritKind::q_vertex) {
    const std::string kname = kind == InheritKind::a_vertex ? "A-vertex" : "Q-vertex";
    const MatrixKind mk = kind == InheritKind::a_vertex ? MatrixKind::adjacency
                                                        : MatrixKind::signless_laplacian;
    struct Fx {
      std::string name;
      Graph f;
      std::vector<int> vk;
    };
    std::vector<Fx> fixtures = {{"P4", generate_path(4), {0, 2}},
                                {"K4", generate_complete(4), {0, 1, 2}},
                                {"C5", generate_cycle(5), {1, 3}}};
    for (const auto& fx : fixtures) {
      VertexPocketSpec sc6(fx.f, fx.vk, join(generate_empty(1), c6), 0);
      VertexPocketSpec s2k3(fx.f, fx.vk, join(generate_empty(1), kk3), 0);
      inherited_checks(rep, kname + " F=" + fx.name, inherited_spectrum(kind, sc6),
                       inherited_spectrum(kind, s2k3), build_vertex_pockets(sc6),
                       build_vertex_pockets(s2k3), mk);
    }
  } else {
    struct Fx {
      std::string name;
      Graph f;
      std::vector<std::pair<int, int>> ek;
    };
    std::vector<Fx> fixtures = {
        {"K4+matching", generate_complete(4), matching_edges(2)},
        {"K3+all", generate_complete(3), hamilton_cycle_edges(3)},
        {"C4+opposite", generate_cycle(4), {{0, 1}, {2, 3}}}};
    for (const auto& fx : fixtures) {
      EdgePocketSpec sc6(fx.f, fx.ek, join(generate_complete(2), c6), {0, 1});
      EdgePocketSpec s2k3(fx.f, fx.ek, join(generate_complete(2), kk3), {0, 1});
      inherited_checks(rep, "Q-edge F=" + fx.name, inherited_spectrum(sc6),
                       inherited_spectrum(s2k3), build_edge_pockets(sc6),
                       build_edge_pockets(s2k3), MatrixKind::signless_laplacian);
    }
  }
  return rep;
}

SuiteReport run_eigvec(const SuiteOptions& opts) {
  SuiteReport rep{"eigvec", {}};
  struct Gpr {
    int p, r;
  };
  const std::vector<Gpr> shapes = {{3, 2}, {4, 3}, {3, 3}};

  auto rank_of = [](const std::vector<EigenvectorCertificate>& certs) {
    Eigen::MatrixXd m(static_cast<int>(certs.size()), certs[0].instantiate().size());
    for (std::size_t i = 0; i < certs.size(); ++i)
      m.row(static_cast<int>(i)) = certs[i].instantiate().transpose();
    return Eigen::FullPivLU<Eigen::MatrixXd>(m).rank();
  };

  for (const auto& [p, r] : shapes) {
    const Graph g = cartesian_product(generate_cycle(p), generate_complete(r - 1));
    const std::string gname = "C" + std::to_string(p) + "xK" + std::to_string(r - 1);

    VertexPocketSpec vspec(generate_path(4), {0, 2}, join(generate_empty(1), g), 0);
    Graph vbuilt = build_vertex_pockets(vspec);
    Eigen::MatrixXd va = adjacency_matrix_d(vbuilt);
    Eigen::MatrixXd vq = signless_laplacian_d(vbuilt);

    EdgePocketSpec espec(generate_complete(4), matching_edges(2),
                         join(generate_complete(2), g), {0, 1});
    Graph ebuilt = build_edge_pockets(espec);
    Eigen::MatrixXd eq = signless_laplacian_d(ebuilt);

    for (int s = 1; s <= p; ++s)
      for (int t = 1; t <= r - 1; ++t) {
        if (s == p && t == r - 1) {
          Check excl;
          excl.name = "eigvec " + gname + " exclusion (s=p,t=r-1)";
          try {
            pocket_eigenvector_certificates(CertKind::a_vertex, vspec, p, r, s, t);
            excl.pass = false;
          } catch (const precondition_violation&) {
            excl.pass = true;
          }
          rep.checks.push_back(excl);
          continue;
        }
        struct Case {
          CertKind kind;
          const Eigen::MatrixXd* mat;
          const char* tag;
        };
        const std::vector<Case> cases = {{CertKind::a_vertex, &va, "A"},
                                         {CertKind::q_vertex, &vq, "Qv"},
                                         {CertKind::q_edge, &eq, "Qe"}};
        for (const auto& cs : cases) {
          Check c;
          c.name = "eigvec " + gname + " " + cs.tag + " s=" + std::to_string(s) +
                   " t=" + std::to_string(t);
          try {
            auto certs = cs.kind == CertKind::q_edge
                             ? pocket_eigenvector_certificates(espec, p, r, s, t)
                             : pocket_eigenvector_certificates(cs.kind, vspec, p, r, s, t);
            double worst = 0;
            for (const auto& cert : certs)
              worst = std::max(worst,
                               residual(*cs.mat, cert.instantiate(), cert.eigenvalue));
            c.deviation = worst;
            const int k = static_cast<int>(certs.size());
            c.pass = worst <= opts.tol && rank_of(certs) == k &&
                     k == (cs.kind == CertKind::q_edge ? espec.k() : vspec.k());
          } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
          }
          rep.checks.push_back(c);
        }
      }
  }
  return rep;
}

SuiteReport run_cospectral_seeds(const SuiteOptions&) {
  SuiteReport rep{"cospectral-seeds", {}};
  const Graph sh = shrikhande_graph();
  const Graph rk = rook_graph_4x4();

  for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
    Check c;
    c.name = kind == MatrixKind::adjacency ? "seeds A-cospectral" : "seeds Q-cospectral";
    auto check = verify_cospectral(sh, rk, kind);
    c.pass = check.cospectral && check.certificate->proper_pair();
    if (check.cospectral)
      c.detail = "witness: " + witness_grade_name(check.certificate->witness);
    rep.checks.push_back(c);
  }

  Check noniso;
  noniso.name = "seeds non-isomorphic (exact search)";
  noniso.pass = !are_isomorphic(sh, rk).isomorphic;
  rep.checks.push_back(noniso);

  Check distinguisher;
  distinguisher.name = "seeds split by induced-neighborhood refinement";
  distinguisher.pass =
      refinement_distinguisher(sh, rk) == std::string("refinement-distinguisher");
  rep.checks.push_back(distinguisher);
  return rep;
}

std::vector<std::string> suite_names() {
  return {"prop31",    "prop35",    "prop41",        "eq16",   "thm21",
          "thm22",     "thm45",     "thm46",         "eq123",  "inherit",
          "inherit-a", "inherit-q", "inherit-qedge", "eigvec", "cospectral-seeds"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "prop31") return run_prop31(opts);
  if (name == "prop35") return run_prop35(opts);
  if (name == "prop41") return run_prop41(opts);
  if (name == "eq16") return run_eq16(opts);
  if (name == "thm21") return run_thm21(opts);
  if (name == "thm22") return run_thm22(opts);
  if (name == "thm45") return run_thm45(opts);
  if (name == "thm46") return run_thm46(opts);
  if (name == "eq123") return run_eq123(opts);
  if (name == "inherit-a") return run_inherit(InheritKind::a_vertex, opts);
  if (name == "inherit-q") return run_inherit(InheritKind::q_vertex, opts);
  if (name == "inherit-qedge") return run_inherit(InheritKind::q_edge, opts);
  if (name == "inherit") {
    SuiteReport all{"inherit", {}};
    for (auto kind :
         {InheritKind::a_vertex, InheritKind::q_vertex, InheritKind::q_edge}) {
      SuiteReport part = run_inherit(kind, opts);
      all.checks.insert(all.checks.end(), part.checks.begin(), part.checks.end());
    }
    return all;
  }
  if (name == "eigvec") return run_eigvec(opts);
  if (name == "cospectral-seeds") return run_cospectral_seeds(opts);
  throw invalid_parameter("unknown verify suite: " + name);
}

}  // namespace pockets::verify
