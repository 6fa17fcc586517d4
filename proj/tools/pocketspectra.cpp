// Command-line surface for pocket/edge-pocket spectral workflows: build the
// graphs, evaluate the factored characteristic polynomials, verify the
// identity suites, and mine/construct cospectral pairs.
//
// Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 usage/parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pockets/cospectral.hpp"
#include "pockets/exact_linalg.hpp"
#include "pockets/numeric.hpp"
#include "pockets/verify.hpp"

using namespace pockets;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double env_tol() {
  if (const char* v = std::getenv("POCKET_SPECTRA_TOL")) return std::atof(v);
  return 1e-9;
}

// Graph arguments accept named literals (K5, C4, P3, E2, K2x3, shrikhande,
// rook), paths to graph6 files (first line), or raw graph6 text.
Graph resolve_graph(const std::string& token) {
  if (auto g = named_graph(token)) return *g;
  if (std::ifstream in{token, std::ios::binary}; in.good()) {
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (!line.empty()) return graph6_decode(line);
    }
    throw invalid_parameter("no graph6 record in file: " + token);
  }
  return graph6_decode(token);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_parameter("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (const Int& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json rf_json(const RationalFunction& f) {
  return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

json value_json(const SpectrumValue& v) {
  if (std::holds_alternative<Rat>(v)) {
    const Rat& q = std::get<Rat>(v);
    return json{{"type", "rational"}, {"value", q.get_str()}};
  }
  if (std::holds_alternative<QuadraticRoot>(v)) {
    const auto& q = std::get<QuadraticRoot>(v);
    return json{{"type", "quadratic"},
                {"a", q.a.get_str()},
                {"b", q.b.get_str()},
                {"c", q.c.get_str()},
                {"branch", q.plus ? "plus" : "minus"}};
  }
  return json{{"type", "numeric"}, {"value", std::get<double>(v)}};
}

json spectrum_json(const SpectrumMultiset& s) {
  json a = json::array();
  for (const auto& e : s.entries()) {
    json entry = value_json(e.value);
    entry["multiplicity"] = e.multiplicity;
    entry["approx"] = static_cast<double>(value_approx(e.value));
    a.push_back(entry);
  }
  return a;
}

json factored_json(const FactoredCharpoly& fc) {
  json factors = json::array();
  for (const auto& [poly, e] : fc.scalar_factors)
    factors.push_back(json{{"poly", poly_json(poly)}, {"exponent", e}});
  return json{{"scalar_factors", factors},
              {"residual_det", rf_json(fc.residual.det)},
              {"coronal", rf_json(fc.residual.coronal)},
              {"coronal_shift", fc.residual.coronal_shift},
              {"expanded", poly_json(fc.expanded)}};
}

json graph_json(const Graph& g) {
  json degrees = json::array();
  for (int d : g.degree_sequence()) degrees.push_back(d);
  return json{{"graph6", graph6_encode(g)},
              {"order", g.order()},
              {"size", g.edge_count()},
              {"degree_sequence", degrees}};
}

json checks_json(const std::vector<verify::Check>& checks) {
  json a = json::array();
  for (const auto& c : checks) {
    json e{{"name", c.name}, {"pass", c.pass}};
    if (c.deviation != 0) e["deviation"] = c.deviation;
    if (!c.detail.empty()) e["detail"] = c.detail;
    a.push_back(e);
  }
  return a;
}

struct ReportPrinter {
  Clock::time_point start = Clock::now();
  bool timing = true;

  int emit(json report, bool pass) {
    if (timing)
      report["wall_time_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
              .count();
    std::cout << report.dump(2) << "\n";
    return pass ? 0 : 1;
  }
};

struct BuildArgs {
  std::string f, h, spec_path;
  std::string vk, ek, uv = "0-1", flips;
  int v = 0;
  bool vertex = false, edge = false, corona_mode = false, edge_corona_mode = false;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(std::stoi(token));
  return out;
}

Graph build_from_args(const BuildArgs& a, json& inputs) {
  if (!a.spec_path.empty()) {
    std::string text = read_file(a.spec_path);
    inputs["spec"] = json::parse(text);
    if (json_spec_is_edge_kind(text))
      return build_edge_pockets(edge_spec_from_json(text));
    return build_vertex_pockets(vertex_spec_from_json(text));
  }
  Graph f = resolve_graph(a.f);
  Graph h = resolve_graph(a.h);
  inputs["F"] = graph6_encode(f);
  inputs["H"] = graph6_encode(h);
  if (a.corona_mode) return corona(f, h);
  if (a.edge_corona_mode) return edge_corona(f, h);
  if (a.vertex) {
    VertexPocketSpec spec(f, parse_int_list(a.vk), h, a.v);
    inputs["Vk"] = spec.vk;
    inputs["v"] = spec.v;
    return build_vertex_pockets(spec);
  }
  if (a.edge) {
    auto uv = parse_edge_list(a.uv);
    if (uv.size() != 1) throw invalid_parameter("--uv expects one i-j pair");
    std::vector<bool> flips;
    for (int i : parse_int_list(a.flips)) {
      if (i < 0) throw invalid_parameter("flip indices must be >= 0");
      if (static_cast<std::size_t>(i) >= flips.size()) flips.resize(i + 1, false);
      flips[i] = true;
    }
    EdgePocketSpec spec(f, parse_edge_list(a.ek), h, uv[0], flips);
    if (!flips.empty() && flips.size() > spec.ek.size())
      throw invalid_parameter("flip index beyond E_k");
    inputs["Ek"] = a.ek;
    inputs["uv"] = a.uv;
    return build_edge_pockets(spec);
  }
  throw invalid_parameter(
      "choose one of --vertex-pockets / --edge-pockets / --corona / --edge-corona "
      "or pass --spec");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra of graphs with pockets and edge-pockets"};
  app.require_subcommand(1);
  app.fallthrough();

  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit wall_time_ms for byte-stable reports");

  // ---- build ----
  BuildArgs build_args;
  auto* cmd_build = app.add_subcommand("build", "assemble a pocket graph, print graph6");
  cmd_build->fallthrough();
  cmd_build->add_flag("--vertex-pockets", build_args.vertex);
  cmd_build->add_flag("--edge-pockets", build_args.edge);
  cmd_build->add_flag("--corona", build_args.corona_mode);
  cmd_build->add_flag("--edge-corona", build_args.edge_corona_mode);
  cmd_build->add_option("-F", build_args.f, "host graph");
  cmd_build->add_option("-H", build_args.h, "pocket graph");
  cmd_build->add_option("--Vk", build_args.vk, "attachment vertices, e.g. 0,1");
  cmd_build->add_option("-v", build_args.v, "specified vertex of H");
  cmd_build->add_option("--Ek", build_args.ek, "pasted edges, e.g. 0-1,2-3");
  cmd_build->add_option("--uv", build_args.uv, "specified edge of H");
  cmd_build->add_option("--flip", build_args.flips, "flip orientation of listed e_i");
  cmd_build->add_option("--spec", build_args.spec_path, "JSON spec file");

  // ---- charpoly ----
  std::string cp_graph, cp_spec, cp_matrix = "A", cp_via = "direct";
  bool cp_fast_path = false;
  auto* cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  cmd_charpoly->fallthrough();
  cmd_charpoly->add_option("graph", cp_graph, "graph literal or file (direct route)");
  cmd_charpoly->add_option("--spec", cp_spec, "JSON pocket spec (formula route)");
  cmd_charpoly->add_option("--matrix", cp_matrix)->check(CLI::IsMember({"A", "Q"}));
  cmd_charpoly->add_option("--via", cp_via)
      ->check(CLI::IsMember({"direct", "formula", "both"}));
  cmd_charpoly->add_flag("--fast-path", cp_fast_path,
                         "force the n/(x-t) coronal shortcut (regular remainders only)");

  // ---- spectrum ----
  std::string sp_graph, sp_matrix = "A";
  bool sp_csv = false;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "exact-first spectrum of a graph");
  cmd_spectrum->fallthrough();
  cmd_spectrum->add_option("graph", sp_graph)->required();
  cmd_spectrum->add_option("--matrix", sp_matrix)->check(CLI::IsMember({"A", "Q"}));
  cmd_spectrum->add_flag("--csv", sp_csv, "emit a CSV eigenvalue table");

  // ---- verify ----
  verify::SuiteOptions sopts;
  sopts.tol = env_tol();
  std::string suite, inherit_kind;
  int max_sweeps = 100;
  auto* cmd_verify = app.add_subcommand("verify", "run an identity suite");
  cmd_verify->fallthrough();
  cmd_verify->add_option("suite", suite)->required()->check(
      CLI::IsMember(verify::suite_names()));
  cmd_verify->add_option("--seed", sopts.seed);
  cmd_verify->add_option("--count", sopts.count);
  cmd_verify->add_option("--tol", sopts.tol);
  cmd_verify->add_option("--threads", sopts.threads);
  cmd_verify->add_option("--max-sweeps", max_sweeps, "Jacobi sweep cap");
  double conv_tol = 1e-12;
  cmd_verify->add_option("--conv-tol", conv_tol, "Jacobi convergence tolerance");
  cmd_verify->add_option("-k", sopts.k, "thm45 matching size");
  cmd_verify->add_option("-n", sopts.n, "thm46 host order");
  cmd_verify->add_option("--h2", sopts.h2, "pocket remainder for thm45/thm46");
  cmd_verify->add_option("--kind", inherit_kind, "A-vertex | Q-vertex | Q-edge");

  // ---- cospectral ----
  auto* cmd_cosp = app.add_subcommand("cospectral", "cospectral pair tooling");
  cmd_cosp->fallthrough();
  cmd_cosp->require_subcommand(1);

  std::string ck_g1, ck_g2, ck_kind = "A";
  auto* cosp_check = cmd_cosp->add_subcommand("check", "compare two graphs");
  cosp_check->fallthrough();
  cosp_check->add_option("g1", ck_g1)->required();
  cosp_check->add_option("g2", ck_g2)->required();
  cosp_check->add_option("--kind", ck_kind)->check(CLI::IsMember({"A", "Q"}));

  std::string cs_seeds = "shrikhande,rook", cs_f, cs_vk, cs_ek, cs_kind = "A";
  auto* cosp_construct = cmd_cosp->add_subcommand("construct", "build a certified pair");
  cosp_construct->fallthrough();
  cosp_construct->add_option("--seeds", cs_seeds, "two cospectral seeds, comma separated");
  cosp_construct->add_option("-F", cs_f)->required();
  cosp_construct->add_option("--Vk", cs_vk, "vertex-pocket attachment set");
  cosp_construct->add_option("--Ek", cs_ek, "edge-pocket pasted edges");
  cosp_construct->add_option("--kind", cs_kind)->check(CLI::IsMember({"A", "Q"}));

  std::string se_in = "-", se_kind = "A";
  bool se_require_regular = false;
  auto* cosp_search = cmd_cosp->add_subcommand("search", "mine a graph6 catalog");
  cosp_search->fallthrough();
  cosp_search->add_option("--in", se_in, "graph6 file, or - for stdin");
  cosp_search->add_option("--kind", se_kind)->check(CLI::IsMember({"A", "Q"}));
  cosp_search->add_flag("--require-regular", se_require_regular);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ReportPrinter printer;
  printer.timing = !no_timing;
  {
    JacobiOptions jopts = default_jacobi_options();
    jopts.max_sweeps = max_sweeps;
    jopts.convergence_tol = conv_tol;
    set_default_jacobi_options(jopts);
  }

  try {
    if (*cmd_build) {
      json report{{"command", "build"}, {"inputs", json::object()}};
      Graph g = build_from_args(build_args, report["inputs"]);
      report["outputs"] = graph_json(g);
      return printer.emit(report, true);
    }

    if (*cmd_charpoly) {
      json report{{"command", "charpoly"},
                  {"inputs", {{"matrix", cp_matrix}, {"via", cp_via}}}};
      const MatrixKind kind =
          cp_matrix == "A" ? MatrixKind::adjacency : MatrixKind::signless_laplacian;

      std::optional<IntPoly> direct;
      std::optional<FactoredCharpoly> formula;
      if (cp_via != "formula") {
        Graph g = cp_spec.empty()
                      ? resolve_graph(cp_graph)
                      : (json_spec_is_edge_kind(read_file(cp_spec))
                             ? build_edge_pockets(edge_spec_from_json(read_file(cp_spec)))
                             : build_vertex_pockets(
                                   vertex_spec_from_json(read_file(cp_spec))));
        report["inputs"]["graph"] = graph6_encode(g);
        direct = charpoly_exact(kind == MatrixKind::adjacency ? adjacency_matrix(g)
                                                              : signless_laplacian(g));
        report["outputs"]["direct"] = poly_json(*direct);
      }
      if (cp_via != "direct") {
        if (cp_spec.empty())
          throw invalid_parameter("the formula route needs --spec, not a bare graph");
        const std::string text = read_file(cp_spec);
        report["inputs"]["spec"] = json::parse(text);
        if (cp_fast_path) {
          // The n/(x-t) shortcut is only valid for regular pocket remainders.
          Graph remainder = json_spec_is_edge_kind(text)
                                ? [&] {
                                    EdgePocketSpec es = edge_spec_from_json(text);
                                    return es.h.without_vertices(
                                        {es.uv.first, es.uv.second});
                                  }()
                                : [&] {
                                    VertexPocketSpec vs = vertex_spec_from_json(text);
                                    return vs.h.without_vertex(vs.v);
                                  }();
          if (!remainder.regularity())
            throw invalid_parameter(
                "--fast-path: the n/(x-t) coronal form assumes a regular pocket "
                "remainder, but this H minus its specified vertices is irregular; "
                "drop --fast-path to use the exact interpolated coronal");
        }
        if (json_spec_is_edge_kind(text)) {
          if (kind == MatrixKind::adjacency)
            throw invalid_parameter("edge-pocket formulas exist for Q only");
          formula = edge_pocket_charpoly_Q(edge_spec_from_json(text));
        } else {
          VertexPocketSpec spec = vertex_spec_from_json(text);
          formula = kind == MatrixKind::adjacency ? pocket_charpoly_A(spec)
                                                  : pocket_charpoly_Q(spec);
        }
        report["outputs"]["formula"] = factored_json(*formula);
      }

      bool pass = true;
      if (cp_via == "both") {
        const bool equal = direct && formula && *direct == formula->expanded;
        json verification{{"spec", report["inputs"].value("spec", json())},
                          {"formula_poly", poly_json(formula->expanded)},
                          {"direct_poly", poly_json(*direct)},
                          {"equal", equal}};
        json check{{"name", "formula-equals-direct"}, {"pass", equal}};
        if (!equal) {
          for (int i = 0; i <= std::max(direct->degree(), formula->expanded.degree());
               ++i)
            if (direct->coeff(i) != formula->expanded.coeff(i)) {
              verification["first_diff_coeff"] = i;
              check["first_diff_coeff"] = i;
              break;
            }
        }
        report["outputs"]["verification"] = verification;
        report["checks"] = json::array({check});
        pass = equal;
      }
      return printer.emit(report, pass);
    }

    if (*cmd_spectrum) {
      Graph g = resolve_graph(sp_graph);
      const MatrixKind kind =
          sp_matrix == "A" ? MatrixKind::adjacency : MatrixKind::signless_laplacian;
      SpectrumMultiset s = kind == MatrixKind::adjacency ? sigma_adjacency(g)
                                                         : sigma_signless_laplacian(g);
      if (sp_csv) {
        std::cout << "index,eigenvalue\n";
        auto values = s.to_doubles();
        for (std::size_t i = 0; i < values.size(); ++i) {
          std::ostringstream row;
          row.precision(15);
          row << i + 1 << "," << values[i] << "\n";
          std::cout << row.str();
        }
        return 0;
      }
      json report{{"command", "spectrum"},
                  {"inputs", {{"graph", graph6_encode(g)}, {"matrix", sp_matrix}}},
                  {"outputs", {{"spectrum", spectrum_json(s)}}}};
      return printer.emit(report, true);
    }

    if (*cmd_verify) {
      std::string name = suite;
      // An explicit -k / -n pins a single closed-form instance.
      if (sopts.h2.empty() &&
          (cmd_verify->count("-k") > 0 || cmd_verify->count("-n") > 0))
        sopts.h2 = "K3";
      if (suite == "inherit" && !inherit_kind.empty()) {
        if (inherit_kind == "A-vertex") name = "inherit-a";
        else if (inherit_kind == "Q-vertex") name = "inherit-q";
        else if (inherit_kind == "Q-edge") name = "inherit-qedge";
        else throw invalid_parameter("unknown --kind: " + inherit_kind);
      }
      verify::SuiteReport rep = verify::run_suite(name, sopts);
      json report{{"command", "verify"},
                  {"inputs",
                   {{"suite", name},
                    {"seed", sopts.seed},
                    {"count", sopts.count},
                    {"tol", sopts.tol}}},
                  {"checks", checks_json(rep.checks)},
                  {"outputs",
                   {{"passed", rep.passed()},
                    {"total", static_cast<int>(rep.checks.size())}}}};
      return printer.emit(report, rep.all_pass());
    }

    if (*cosp_check) {
      const MatrixKind kind =
          ck_kind == "A" ? MatrixKind::adjacency : MatrixKind::signless_laplacian;
      CospectralCheck check =
          verify_cospectral(resolve_graph(ck_g1), resolve_graph(ck_g2), kind);
      json report{{"command", "cospectral check"},
                  {"inputs", {{"g1", ck_g1}, {"g2", ck_g2}, {"kind", ck_kind}}}};
      if (check.cospectral) {
        report["outputs"] = {
            {"cospectral", true},
            {"shared_charpoly", poly_json(check.certificate->shared_charpoly)},
            {"witness", witness_grade_name(check.certificate->witness)}};
      } else {
        report["outputs"] = {{"cospectral", false},
                             {"first_diff_coeff", *check.first_diff_coeff},
                             {"charpoly1", poly_json(check.charpoly1)},
                             {"charpoly2", poly_json(check.charpoly2)}};
      }
      return printer.emit(report, check.cospectral);
    }

    if (*cosp_construct) {
      auto comma = cs_seeds.find(',');
      if (comma == std::string::npos)
        throw invalid_parameter("--seeds expects two comma-separated graphs");
      Graph s1 = resolve_graph(cs_seeds.substr(0, comma));
      Graph s2 = resolve_graph(cs_seeds.substr(comma + 1));
      Graph f = resolve_graph(cs_f);
      const MatrixKind kind =
          cs_kind == "A" ? MatrixKind::adjacency : MatrixKind::signless_laplacian;

      CospectralPocketPair pair =
          !cs_ek.empty()
              ? make_cospectral_edge_pocket_pair(f, parse_edge_list(cs_ek), s1, s2)
              : make_cospectral_vertex_pocket_pair(f, parse_int_list(cs_vk), s1, s2,
                                                   kind);
      json report{
          {"command", "cospectral construct"},
          {"inputs", {{"seeds", cs_seeds}, {"F", cs_f}, {"kind", cs_kind}}},
          {"outputs",
           {{"g1", graph6_encode(pair.g1)},
            {"g2", graph6_encode(pair.g2)},
            {"order", pair.g1.order()},
            {"shared_charpoly", poly_json(pair.certificate.shared_charpoly)},
            {"witness", witness_grade_name(pair.certificate.witness)}}},
          {"checks",
           json::array({json{{"name", "charpoly-equality"}, {"pass", true}}})}};
      return printer.emit(report, true);
    }

    if (*cosp_search) {
      const MatrixKind kind =
          se_kind == "A" ? MatrixKind::adjacency : MatrixKind::signless_laplacian;
      SearchResult result;
      if (se_in == "-") {
        result = search_cospectral_mates(std::cin, kind, se_require_regular);
      } else {
        std::ifstream in(se_in, std::ios::binary);
        if (!in) throw invalid_parameter("cannot open " + se_in);
        result = search_cospectral_mates(in, kind, se_require_regular);
      }
      json pairs = json::array();
      for (const auto& cert : result.pairs)
        pairs.push_back(json{{"g1", graph6_encode(cert.g1)},
                             {"g2", graph6_encode(cert.g2)},
                             {"shared_charpoly", poly_json(cert.shared_charpoly)},
                             {"witness", witness_grade_name(cert.witness)}});
      json report{{"command", "cospectral search"},
                  {"inputs", {{"in", se_in}, {"kind", se_kind}}},
                  {"outputs",
                   {{"graphs_read", result.graphs_read},
                    {"pairs", pairs},
                    {"line_errors", result.line_errors}}}};
      return printer.emit(report, result.line_errors.empty());
    }
  } catch (const invalid_parameter& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
