#ifndef POCKETS_FORMULAS_HPP
#define POCKETS_FORMULAS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pockets/pocket.hpp"
#include "pockets/spectrum.hpp"

namespace pockets {

enum class MatrixKind { adjacency, signless_laplacian };

// det(xI - M) with M's symbolic pieces spelled out: the host-matrix block
// (attachment positions leading), the coronal coefficient, and the pattern
// it multiplies.
struct ResidualDescription {
  MatrixKind kind = MatrixKind::adjacency;
  IntMatrix host_matrix;         // A(F') or Q(F'), attachment vertices leading
  int coronal_shift = 0;         // the coronal is evaluated at x - shift
  RationalFunction coronal;      // as it appears in M (already shifted)
  Int uniform_addend = 0;        // m-1, or r(m-2); added on the pattern diagonal
  IntMatrix pattern;             // diag(I_k, 0), diag(Q(Ek), 0), or A(Ek) when spanning
  bool spanning_form = false;
  RationalFunction det;          // det(xI - M), exact
};

// A characteristic polynomial split as prod(scalar_factors) * residual.
struct FactoredCharpoly {
  std::vector<std::pair<IntPoly, int>> scalar_factors;
  ResidualDescription residual;
  IntPoly expanded;  // the fully multiplied-out polynomial
};

// f_A(G[F,V_k,H_v]) = f_A(H_1)^k det(xI - A(F) - Gamma_{A(H_1)}(x) diag(I_k, 0));
// requires deg(v) = m-1.  Regular H_1 takes the n/(x-t) coronal shortcut.
FactoredCharpoly pocket_charpoly_A(const VertexPocketSpec& spec);

// f_Q(G[F,V_k,H_v]) = f_Q(H_1)(x-1)^k det(xI - Q(F) - (m-1+Gamma_{Q(H_1)}(x-1)) diag(I_k, 0)).
FactoredCharpoly pocket_charpoly_Q(const VertexPocketSpec& spec);

// f_Q(G[F,E_k,H_uv]) = f_Q(H_2)(x-2)^k det(xI - Q(F) - r(m-2) diag(I_p, 0)
//                      - Gamma_{Q(H_2)}(x-2) diag(Q(Ek), 0));
// requires a regular induced subgraph and full specified degrees.
FactoredCharpoly edge_pocket_charpoly_Q(const EdgePocketSpec& spec);

// The spanning-subgraph form of the same polynomial, built from
// M = r((m-2) + Gamma)I_n + Q(F) + Gamma A(Ek); requires p = n.
FactoredCharpoly spanning_edge_pocket_charpoly_Q(const EdgePocketSpec& spec);

// Join characteristic polynomials for regular inputs.
IntPoly join_charpoly_A(const Graph& g1, const Graph& g2);
IntPoly join_charpoly_Q(const Graph& g1, const Graph& g2);

// Spectra of {v} ∨ H_1 and (K_2 with edge uv) ∨ H_2 for regular remainders.
SpectrumMultiset hv_spectrum_A(const Graph& h1);
SpectrumMultiset hv_spectrum_Q(const Graph& h1);
SpectrumMultiset huv_spectrum_Q(const Graph& h2);  // needs r_2 >= 2

enum class InheritKind { a_vertex, q_vertex, q_edge };

struct InheritedSpectrum {
  // Pocket eigenvalues, each with multiplicity k.
  SpectrumMultiset inherited;
  // The remaining n+k eigenvalues as a polynomial: the coronal denominator
  // cleared out of det(xI - M).  Depends only on (F, attachment set, m and
  // the regularity), never on the remainder's structure.
  IntPoly residual_poly;
};
InheritedSpectrum inherited_spectrum(InheritKind kind, const VertexPocketSpec& spec);
InheritedSpectrum inherited_spectrum(const EdgePocketSpec& spec);

// Closed-form Q-spectrum for F = K_{2k} with a perfect matching pasted.
// sigma_q_huv is the caller-supplied spectrum of Q(H_uv).
SpectrumMultiset matching_pocket_spectrum_Q(int k, int m, int r2,
                                            const SpectrumMultiset& sigma_q_huv);

// Closed-form Q-spectrum for F = K_n with the Hamilton cycle pasted.
// Cosine terms are exact whenever 2cos(2*pi*l/n) is an integer, numeric in
// long double otherwise.
SpectrumMultiset cycle_pocket_spectrum_Q(int n, int m, int r2,
                                         const SpectrumMultiset& sigma_q_huv);

enum class CertKind { a_vertex, q_vertex, q_edge };

// An explicit eigenpair claim: zero on the host block, e_i ⊗ X_s ⊗ Y_t on
// the pocket blocks.
struct EigenvectorCertificate {
  double eigenvalue = 0;
  std::optional<Rat> eigenvalue_exact;
  int copy_index = 0;
  Eigen::VectorXd pocket_component;  // X_s ⊗ Y_t
  int host_order = 0;
  int copies = 0;
  std::string context;

  Eigen::VectorXd instantiate() const;
};

// The k certificates for one admissible (s, t) of a pocket remainder equal
// to C_p □ K_{r-1}.  s indexes the cycle eigenvectors (s = p is all-ones),
// t the clique eigenvectors (t = r-1 is all-ones); (p, r-1) is excluded.
std::vector<EigenvectorCertificate> pocket_eigenvector_certificates(
    CertKind kind, const VertexPocketSpec& spec, int p, int r, int s, int t);
std::vector<EigenvectorCertificate> pocket_eigenvector_certificates(
    const EdgePocketSpec& spec, int p, int r, int s, int t);

}  // namespace pockets

#endif
