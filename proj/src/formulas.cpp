#include "pockets/formulas.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "pockets/exact_linalg.hpp"

namespace pockets {

namespace {

RationalFunction x_rf() { return RationalFunction(IntPoly::x()); }

// Coronal of the given graph matrix, via the constant-row-sum shortcut
// whenever the graph is regular.
RationalFunction graph_coronal(const Graph& g, MatrixKind kind) {
  if (auto r = g.regularity()) {
    Int t = kind == MatrixKind::adjacency ? Int(*r) : Int(2 * *r);
    return coronal_constant_row_sum(g.order(), t);
  }
  IntMatrix m = kind == MatrixKind::adjacency ? adjacency_matrix(g) : signless_laplacian(g);
  return coronal(m);
}

// xI - host - coeff * diag(I_k, 0)
RFMatrix residual_matrix_leading_identity(const IntMatrix& host, int k,
                                          const RationalFunction& coeff) {
  const int n = static_cast<int>(host.rows());
  RFMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RationalFunction e(IntPoly(Int(-host(i, j))));
      if (i == j) {
        e = e + x_rf();
        if (i < k) e = e - coeff;
      }
      m(i, j) = e;
    }
  return m;
}

IntMatrix pad_leading(const IntMatrix& block, int n) {
  IntMatrix p = IntMatrix::Zero(n, n);
  p.topLeftCorner(block.rows(), block.cols()) = block;
  return p;
}

IntPoly expand_factored(const std::vector<std::pair<IntPoly, int>>& factors,
                        const RationalFunction& det, int expect_degree) {
  RationalFunction full = det;
  for (const auto& [poly, exponent] : factors)
    full = full * RationalFunction(poly.pow(exponent));
  IntPoly expanded = full.as_polynomial();
  if (expanded.degree() != expect_degree)
    throw internal_error("factored charpoly degree mismatch: got " +
                         std::to_string(expanded.degree()) + ", expected " +
                         std::to_string(expect_degree));
  return expanded;
}

void require_full_degree(const Graph& h, int v, const char* what) {
  if (h.degree(v) != h.order() - 1)
    throw precondition_violation(std::string(what) +
                                 ": specified vertex must have degree m-1");
}

void require_edge_formula_preconditions(const EdgePocketSpec& spec, const char* what) {
  if (!spec.r)
    throw precondition_violation(std::string(what) +
                                 ": the induced subgraph of E_k must be regular");
  const auto [u, v] = spec.uv;
  if (spec.h.degree(u) != spec.m() - 1 || spec.h.degree(v) != spec.m() - 1)
    throw precondition_violation(std::string(what) +
                                 ": specified vertices must have degree m-1");
}

int required_regularity(const Graph& g, const char* what) {
  auto r = g.regularity();
  if (!r) throw precondition_violation(std::string(what) + " requires a regular graph");
  return *r;
}

IntPoly clear_residual(const RationalFunction& det, const IntPoly& denom, int k) {
  return (det * RationalFunction(denom.pow(k))).as_polynomial();
}

}  // namespace

FactoredCharpoly pocket_charpoly_A(const VertexPocketSpec& spec) {
  require_full_degree(spec.h, spec.v, "pocket_charpoly_A");
  const int n = spec.n(), m = spec.m(), k = spec.k();
  const Graph h1 = spec.h.without_vertex(spec.v);

  RationalFunction gamma = graph_coronal(h1, MatrixKind::adjacency);
  IntMatrix host = adjacency_matrix(leading_vertex_layout(spec.f, spec.vk));
  RationalFunction det = det_rfmatrix(residual_matrix_leading_identity(host, k, gamma));

  FactoredCharpoly out;
  out.scalar_factors = {{charpoly_exact(adjacency_matrix(h1)), k}};
  out.residual = ResidualDescription{MatrixKind::adjacency,
                                     host,
                                     0,
                                     gamma,
                                     Int(0),
                                     pad_leading(IntMatrix::Identity(k, k), n),
                                     false,
                                     det};
  out.expanded = expand_factored(out.scalar_factors, det, n + k * (m - 1));
  return out;
}

FactoredCharpoly pocket_charpoly_Q(const VertexPocketSpec& spec) {
  require_full_degree(spec.h, spec.v, "pocket_charpoly_Q");
  const int n = spec.n(), m = spec.m(), k = spec.k();
  const Graph h1 = spec.h.without_vertex(spec.v);

  RationalFunction gamma = graph_coronal(h1, MatrixKind::signless_laplacian).shift(1);
  RationalFunction coeff = RationalFunction(Int(m - 1)) + gamma;
  IntMatrix host = signless_laplacian(leading_vertex_layout(spec.f, spec.vk));
  RationalFunction det = det_rfmatrix(residual_matrix_leading_identity(host, k, coeff));

  FactoredCharpoly out;
  out.scalar_factors = {{charpoly_exact(signless_laplacian(h1)).shift(1), k}};
  out.residual = ResidualDescription{MatrixKind::signless_laplacian,
                                     host,
                                     1,
                                     gamma,
                                     Int(m - 1),
                                     pad_leading(IntMatrix::Identity(k, k), n),
                                     false,
                                     det};
  out.expanded = expand_factored(out.scalar_factors, det, n + k * (m - 1));
  return out;
}

FactoredCharpoly edge_pocket_charpoly_Q(const EdgePocketSpec& spec) {
  require_edge_formula_preconditions(spec, "edge_pocket_charpoly_Q");
  const int n = spec.n(), m = spec.m(), k = spec.k();
  const int p = spec.p, r = *spec.r;
  const Graph h2 = spec.h.without_vertices({spec.uv.first, spec.uv.second});

  RationalFunction gamma = graph_coronal(h2, MatrixKind::signless_laplacian).shift(2);
  LeadingEdgeLayout layout = leading_edge_layout(spec.f, spec.ek);
  IntMatrix host = signless_laplacian(layout.f);
  IntMatrix qek = signless_laplacian(layout.ek);

  RFMatrix mat(n, n);
  const Int addend = Int(r) * Int(m - 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RationalFunction e(IntPoly(Int(-host(i, j))));
      if (i == j) {
        e = e + x_rf();
        if (i < p) e = e - RationalFunction(addend);
      }
      if (i < p && j < p && qek(i, j) != 0)
        e = e - gamma * RationalFunction(IntPoly(qek(i, j)));
      mat(i, j) = e;
    }
  RationalFunction det = det_rfmatrix(mat);

  FactoredCharpoly out;
  out.scalar_factors = {{charpoly_exact(signless_laplacian(h2)).shift(2), k}};
  out.residual = ResidualDescription{MatrixKind::signless_laplacian,
                                     host,
                                     2,
                                     gamma,
                                     addend,
                                     pad_leading(qek, n),
                                     false,
                                     det};
  out.expanded = expand_factored(out.scalar_factors, det, n + k * (m - 2));
  return out;
}

FactoredCharpoly spanning_edge_pocket_charpoly_Q(const EdgePocketSpec& spec) {
  require_edge_formula_preconditions(spec, "spanning_edge_pocket_charpoly_Q");
  if (spec.p != spec.n())
    throw precondition_violation(
        "spanning_edge_pocket_charpoly_Q: the induced subgraph must span F");
  const int n = spec.n(), m = spec.m(), k = spec.k(), r = *spec.r;
  const Graph h2 = spec.h.without_vertices({spec.uv.first, spec.uv.second});

  RationalFunction gamma = graph_coronal(h2, MatrixKind::signless_laplacian).shift(2);
  // Spanning: the induced subgraph's vertex order coincides with F's.
  IntMatrix host = signless_laplacian(spec.f);
  IntMatrix aek = adjacency_matrix(spec.ek_induced.graph);

  // M = r((m-2) + Gamma) I_n + Q(F) + Gamma A(Ek)
  RationalFunction diag_term =
      RationalFunction(Int(r) * Int(m - 2)) + RationalFunction(Int(r)) * gamma;
  RFMatrix mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RationalFunction e(IntPoly(Int(-host(i, j))));
      if (i == j) e = e + x_rf() - diag_term;
      if (aek(i, j) != 0) e = e - gamma * RationalFunction(IntPoly(aek(i, j)));
      mat(i, j) = e;
    }
  RationalFunction det = det_rfmatrix(mat);

  FactoredCharpoly out;
  out.scalar_factors = {{charpoly_exact(signless_laplacian(h2)).shift(2), k}};
  out.residual = ResidualDescription{MatrixKind::signless_laplacian,
                                     host,
                                     2,
                                     gamma,
                                     Int(r) * Int(m - 2),
                                     aek,
                                     true,
                                     det};
  out.expanded = expand_factored(out.scalar_factors, det, n + k * (m - 2));
  return out;
}

IntPoly join_charpoly_A(const Graph& g1, const Graph& g2) {
  const int r1 = required_regularity(g1, "join_charpoly_A");
  const int r2 = required_regularity(g2, "join_charpoly_A");
  const Int n1 = g1.order(), n2 = g2.order();
  IntPoly f1 = charpoly_exact(adjacency_matrix(g1));
  IntPoly f2 = charpoly_exact(adjacency_matrix(g2));
  IntPoly q1 = divide_exact(f1, IntPoly::x_minus(r1));
  IntPoly q2 = divide_exact(f2, IntPoly::x_minus(r2));
  IntPoly cross = IntPoly::x_minus(r1) * IntPoly::x_minus(r2) - IntPoly(Int(n1 * n2));
  return q1 * q2 * cross;
}

IntPoly join_charpoly_Q(const Graph& g1, const Graph& g2) {
  const int r1 = required_regularity(g1, "join_charpoly_Q");
  const int r2 = required_regularity(g2, "join_charpoly_Q");
  const Int n1 = g1.order(), n2 = g2.order();
  IntPoly t1 = charpoly_exact(signless_laplacian(g1)).shift(n2);
  IntPoly t2 = charpoly_exact(signless_laplacian(g2)).shift(n1);
  IntPoly a1 = divide_exact(t1, IntPoly::x_minus(Int(n2 + 2 * r1)));
  IntPoly a2 = divide_exact(t2, IntPoly::x_minus(Int(n1 + 2 * r2)));
  return t1 * t2 - Int(n1 * n2) * (a1 * a2);
}

SpectrumMultiset hv_spectrum_A(const Graph& h1) {
  const int r1 = required_regularity(h1, "hv_spectrum_A");
  const int m = h1.order() + 1;
  SpectrumMultiset sigma = sigma_adjacency(h1);
  if (!sigma.remove_one(Rat(r1)))
    throw internal_error("regular graph without its degree as an eigenvalue");
  // alpha, beta: roots of x^2 - r1 x - (m-1) = 0.
  auto [alpha, beta] = quadratic_roots(1, Int(-r1), Int(-(m - 1)));
  sigma.add(alpha);
  sigma.add(beta);
  return sigma;
}

SpectrumMultiset hv_spectrum_Q(const Graph& h1) {
  const int r1 = required_regularity(h1, "hv_spectrum_Q");
  const int m = h1.order() + 1;
  SpectrumMultiset sigma = sigma_signless_laplacian(h1);
  if (!sigma.remove_one(Rat(2 * r1)))
    throw internal_error("regular graph without 2r as a Q-eigenvalue");
  SpectrumMultiset out = sigma.shifted(1);
  // gamma, delta: roots of (x - 2r1 - 1)(x - m + 1) - (m-1) = 0.
  auto [gamma, delta] = quadratic_from_product(Int(2 * r1 + 1), Int(m - 1), Int(m - 1));
  out.add(gamma);
  out.add(delta);
  return out;
}

SpectrumMultiset huv_spectrum_Q(const Graph& h2) {
  const int r2 = required_regularity(h2, "huv_spectrum_Q");
  if (r2 < 2) throw precondition_violation("huv_spectrum_Q requires r2 >= 2");
  const int m = h2.order() + 2;
  SpectrumMultiset sigma = sigma_signless_laplacian(h2);
  if (!sigma.remove_one(Rat(2 * r2)))
    throw internal_error("regular graph without 2r as a Q-eigenvalue");
  SpectrumMultiset out = sigma.shifted(2);
  out.add(Rat(m - 2));
  // zeta, eta: roots of (x - 2r2 - 2)(x - m) - 2(m-2) = 0.
  auto [zeta, eta] = quadratic_from_product(Int(2 * r2 + 2), Int(m), Int(2 * (m - 2)));
  out.add(zeta);
  out.add(eta);
  return out;
}

InheritedSpectrum inherited_spectrum(InheritKind kind, const VertexPocketSpec& spec) {
  if (kind == InheritKind::q_edge)
    throw invalid_parameter("q_edge inheritance takes an edge-pocket spec");
  require_full_degree(spec.h, spec.v, "inherited_spectrum");
  const Graph h1 = spec.h.without_vertex(spec.v);
  const int r1 = required_regularity(h1, "inherited_spectrum");
  const int n = spec.n(), m = spec.m(), k = spec.k();

  IntMatrix host;
  RationalFunction coeff;
  IntPoly denom;
  SpectrumMultiset pocket_values;
  if (kind == InheritKind::a_vertex) {
    host = adjacency_matrix(leading_vertex_layout(spec.f, spec.vk));
    coeff = coronal_constant_row_sum(m - 1, Int(r1));
    denom = IntPoly::x_minus(Int(r1));
    pocket_values = sigma_adjacency(h1);
    if (!pocket_values.remove_one(Rat(r1)))
      throw internal_error("missing Perron eigenvalue");
  } else {
    host = signless_laplacian(leading_vertex_layout(spec.f, spec.vk));
    coeff = RationalFunction(Int(m - 1)) +
            coronal_constant_row_sum(m - 1, Int(2 * r1)).shift(1);
    denom = IntPoly::x_minus(Int(2 * r1 + 1));
    SpectrumMultiset sigma = sigma_signless_laplacian(h1);
    if (!sigma.remove_one(Rat(2 * r1)))
      throw internal_error("missing largest Q-eigenvalue");
    pocket_values = sigma.shifted(1);
  }

  RationalFunction det = det_rfmatrix(residual_matrix_leading_identity(host, k, coeff));
  InheritedSpectrum out;
  out.inherited = pocket_values.scaled(k);
  out.residual_poly = clear_residual(det, denom, k);
  if (out.residual_poly.degree() != n + k)
    throw internal_error("inherited residual degree is not n+k");
  return out;
}

InheritedSpectrum inherited_spectrum(const EdgePocketSpec& spec) {
  require_edge_formula_preconditions(spec, "inherited_spectrum");
  const Graph h2 = spec.h.without_vertices({spec.uv.first, spec.uv.second});
  const int r2 = required_regularity(h2, "inherited_spectrum");
  const int n = spec.n(), k = spec.k();

  FactoredCharpoly fc = edge_pocket_charpoly_Q(spec);
  SpectrumMultiset sigma = sigma_signless_laplacian(h2);
  if (!sigma.remove_one(Rat(2 * r2)))
    throw internal_error("missing largest Q-eigenvalue");

  InheritedSpectrum out;
  out.inherited = sigma.shifted(2).scaled(k);
  out.residual_poly =
      clear_residual(fc.residual.det, IntPoly::x_minus(Int(2 * r2 + 2)), k);
  if (out.residual_poly.degree() != n + k)
    throw internal_error("inherited residual degree is not n+k");
  return out;
}

SpectrumMultiset matching_pocket_spectrum_Q(int k, int m, int r2,
                                            const SpectrumMultiset& sigma_q_huv) {
  if (k < 1 || r2 < 2 || m < 4)
    throw invalid_parameter("matching_pocket_spectrum_Q needs k >= 1, r2 >= 2, m >= 4");
  if (sigma_q_huv.total() != m)
    throw invalid_parameter("sigma(Q(H_uv)) must carry m eigenvalues");

  auto [zeta, eta] = quadratic_from_product(Int(2 * r2 + 2), Int(m), Int(2 * (m - 2)));
  SpectrumMultiset inherited = sigma_q_huv;
  if (!inherited.remove_one(Rat(m - 2)) || !inherited.remove_one(zeta) ||
      !inherited.remove_one(eta))
    throw precondition_violation(
        "sigma(Q(H_uv)) does not contain {m-2, zeta, eta}: H_2 must be an "
        "r2-regular remainder of H_uv");

  SpectrumMultiset out = inherited.scaled(k);
  out.add(Rat(m + 2 * k - 4), k);
  // (x - m - 4k + 4)(x - 2r2 - 2) - 2(m-2) = 0, multiplicity 1 each.
  auto [a1, a2] =
      quadratic_from_product(Int(m + 4 * k - 4), Int(2 * r2 + 2), Int(2 * (m - 2)));
  out.add(a1);
  out.add(a2);
  if (k >= 2) {
    // (x - m - 2k + 4)(x - 2r2 - 2) - 2(m-2) = 0, multiplicity k-1 each.
    auto [b1, b2] =
        quadratic_from_product(Int(m + 2 * k - 4), Int(2 * r2 + 2), Int(2 * (m - 2)));
    out.add(b1, k - 1);
    out.add(b2, k - 1);
  }
  if (out.total() != 2 * k + k * (m - 2))
    throw internal_error("matching closed form lost eigenvalues");
  return out;
}

SpectrumMultiset cycle_pocket_spectrum_Q(int n, int m, int r2,
                                         const SpectrumMultiset& sigma_q_huv) {
  if (n < 3 || r2 < 2)
    throw invalid_parameter("cycle_pocket_spectrum_Q needs n >= 3, r2 >= 2");
  if (sigma_q_huv.total() != m)
    throw invalid_parameter("sigma(Q(H_uv)) must carry m eigenvalues");

  auto [zeta, eta] = quadratic_from_product(Int(2 * r2 + 2), Int(m), Int(2 * (m - 2)));
  SpectrumMultiset inherited = sigma_q_huv;
  if (!inherited.remove_one(Rat(m - 2)) || !inherited.remove_one(zeta) ||
      !inherited.remove_one(eta))
    throw precondition_violation("sigma(Q(H_uv)) does not contain {m-2, zeta, eta}");

  SpectrumMultiset out = inherited.scaled(n);
  // (x - 2m - 2n + 6)(x - 2r2 - 2) - 4(m-2) = 0, once each.
  auto [a1, a2] = quadratic_from_product(Int(2 * m + 2 * n - 6), Int(2 * r2 + 2),
                                         Int(4 * (m - 2)));
  out.add(a1);
  out.add(a2);

  for (int l = 1; l < n; ++l) {
    // 2cos(2 pi l / n) is an integer iff l/n reduces to denominator 1,2,3,4,6.
    const int q0 = n / std::gcd(l, n);
    int two_cos = 3;  // sentinel: not exact
    switch (q0) {
      case 1: two_cos = 2; break;
      case 2: two_cos = -2; break;
      case 3: two_cos = -1; break;
      case 4: two_cos = 0; break;
      case 6: two_cos = 1; break;
      default: break;
    }
    if (two_cos != 3) {
      // (x - 2m - n + 6)(x - 2r2 - 2) - (m-2)(2 + 2cos) = 0.
      auto [c1, c2] = quadratic_from_product(Int(2 * m + n - 6), Int(2 * r2 + 2),
                                             Int((m - 2) * (2 + two_cos)));
      out.add(c1);
      out.add(c2);
    } else {
      const long double cosv = cosl(2.0L * M_PIl * l / n);
      const long double sum = (2 * m + n - 6) + (2 * r2 + 2);
      const long double prod = static_cast<long double>(2 * m + n - 6) * (2 * r2 + 2) -
                               2.0L * (m - 2) * (1.0L + cosv);
      const long double disc = sqrtl(sum * sum - 4.0L * prod);
      out.add(SpectrumValue(static_cast<double>((sum - disc) / 2.0L)));
      out.add(SpectrumValue(static_cast<double>((sum + disc) / 2.0L)));
    }
  }
  if (out.total() != n + n * (m - 2))
    throw internal_error("cycle closed form lost eigenvalues");
  return out;
}

namespace {

struct EigenBasis {
  std::vector<Eigen::VectorXd> vectors;
  std::vector<double> a_values;           // adjacency eigenvalues
  std::vector<std::optional<Rat>> exact;  // exact values where known
};

EigenBasis cycle_basis(int p) {
  EigenBasis basis;
  for (int f = 1; f <= p / 2; ++f) {
    Eigen::VectorXd cosv(p), sinv(p);
    for (int j = 0; j < p; ++j) {
      cosv(j) = static_cast<double>(cosl(2.0L * M_PIl * f * j / p));
      sinv(j) = static_cast<double>(sinl(2.0L * M_PIl * f * j / p));
    }
    const double lambda = static_cast<double>(2.0L * cosl(2.0L * M_PIl * f / p));
    std::optional<Rat> exact;
    switch (p / std::gcd(f, p)) {
      case 1: exact = Rat(2); break;
      case 2: exact = Rat(-2); break;
      case 3: exact = Rat(-1); break;
      case 4: exact = Rat(0); break;
      case 6: exact = Rat(1); break;
      default: break;
    }
    basis.vectors.push_back(cosv);
    basis.a_values.push_back(lambda);
    basis.exact.push_back(exact);
    if (2 * f != p) {
      basis.vectors.push_back(sinv);
      basis.a_values.push_back(lambda);
      basis.exact.push_back(exact);
    }
  }
  basis.vectors.push_back(Eigen::VectorXd::Ones(p));
  basis.a_values.push_back(2.0);
  basis.exact.push_back(Rat(2));
  return basis;
}

EigenBasis clique_basis(int q) {
  EigenBasis basis;
  for (int t = 1; t < q; ++t) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(q);
    y(t - 1) = 1;
    y(q - 1) = -1;
    basis.vectors.push_back(y);
    basis.a_values.push_back(-1.0);
    basis.exact.push_back(Rat(-1));
  }
  basis.vectors.push_back(Eigen::VectorXd::Ones(q));
  basis.a_values.push_back(q - 1.0);
  basis.exact.push_back(Rat(q - 1));
  return basis;
}

Eigen::VectorXd kron_vec(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  Eigen::VectorXd r(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = 0; j < y.size(); ++j) r(i * y.size() + j) = x(i) * y(j);
  return r;
}

std::vector<EigenvectorCertificate> make_certificates(CertKind kind,
                                                      const Graph& remainder,
                                                      int host_order, int copies, int p,
                                                      int r, int s, int t,
                                                      const std::string& context) {
  if (r < 2 || p < 3) throw invalid_parameter("need p >= 3 and r >= 2");
  const int q = r - 1;
  if (remainder.order() != p * q)
    throw precondition_violation("pocket remainder order is not p(r-1)");
  if (remainder != cartesian_product(generate_cycle(p), generate_complete(q)))
    throw precondition_violation(
        "pocket remainder is not C_p box K_{r-1} in Kronecker vertex order");
  if (s < 1 || s > p || t < 1 || t > q)
    throw invalid_parameter("eigenvector indices out of range");
  if (s == p && t == q)
    throw precondition_violation(
        "excluded eigenvector: X_p tensor Y_{r-1} is the all-ones vector");

  EigenBasis cyc = cycle_basis(p);
  EigenBasis clq = clique_basis(q);
  const Eigen::VectorXd component = kron_vec(cyc.vectors[s - 1], clq.vectors[t - 1]);

  const double lam_cycle = cyc.a_values[s - 1];
  const double lam_clique = clq.a_values[t - 1];
  const double q_clique = (t == q) ? 2.0 * q - 2.0 : q - 2.0;
  double eigenvalue = 0;
  switch (kind) {
    case CertKind::a_vertex:
      eigenvalue = lam_cycle + lam_clique;
      break;
    case CertKind::q_vertex:
      eigenvalue = (2 + lam_cycle) + q_clique + 1;
      break;
    case CertKind::q_edge:
      eigenvalue = (2 + lam_cycle) + q_clique + 2;
      break;
  }
  std::optional<Rat> exact;
  if (cyc.exact[s - 1]) {
    const Rat q_clique_exact = (t == q) ? Rat(2 * q - 2) : Rat(q - 2);
    switch (kind) {
      case CertKind::a_vertex:
        exact = Rat(*cyc.exact[s - 1] + (t == q ? Rat(q - 1) : Rat(-1)));
        break;
      case CertKind::q_vertex:
        exact = Rat(*cyc.exact[s - 1] + 2 + q_clique_exact + 1);
        break;
      case CertKind::q_edge:
        exact = Rat(*cyc.exact[s - 1] + 2 + q_clique_exact + 2);
        break;
    }
  }

  std::vector<EigenvectorCertificate> certs;
  for (int i = 0; i < copies; ++i) {
    EigenvectorCertificate c;
    c.eigenvalue = exact ? to_double(*exact) : eigenvalue;
    c.eigenvalue_exact = exact;
    c.copy_index = i;
    c.pocket_component = component;
    c.host_order = host_order;
    c.copies = copies;
    c.context = context;
    certs.push_back(std::move(c));
  }
  return certs;
}

}  // namespace

Eigen::VectorXd EigenvectorCertificate::instantiate() const {
  const Eigen::Index block = pocket_component.size();
  Eigen::VectorXd full = Eigen::VectorXd::Zero(host_order + copies * block);
  full.segment(host_order + copy_index * block, block) = pocket_component;
  return full;
}

std::vector<EigenvectorCertificate> pocket_eigenvector_certificates(
    CertKind kind, const VertexPocketSpec& spec, int p, int r, int s, int t) {
  if (kind == CertKind::q_edge)
    throw invalid_parameter("q_edge certificates take an edge-pocket spec");
  require_full_degree(spec.h, spec.v, "pocket_eigenvector_certificates");
  std::ostringstream ctx;
  ctx << (kind == CertKind::a_vertex ? "A" : "Q") << " vertex-pocket certificates, H_1 = C_"
      << p << " box K_" << (r - 1) << ", s=" << s << ", t=" << t;
  return make_certificates(kind, spec.h.without_vertex(spec.v), spec.n(), spec.k(), p, r,
                           s, t, ctx.str());
}

std::vector<EigenvectorCertificate> pocket_eigenvector_certificates(
    const EdgePocketSpec& spec, int p, int r, int s, int t) {
  const auto [u, v] = spec.uv;
  if (spec.h.degree(u) != spec.m() - 1 || spec.h.degree(v) != spec.m() - 1)
    throw precondition_violation("specified vertices must have degree m-1");
  std::ostringstream ctx;
  ctx << "Q edge-pocket certificates, H_2 = C_" << p << " box K_" << (r - 1)
      << ", s=" << s << ", t=" << t;
  return make_certificates(CertKind::q_edge, spec.h.without_vertices({u, v}), spec.n(),
                           spec.k(), p, r, s, t, ctx.str());
}

}  // namespace pockets
