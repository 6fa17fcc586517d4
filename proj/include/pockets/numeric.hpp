#ifndef POCKETS_NUMERIC_HPP
#define POCKETS_NUMERIC_HPP

#include <Eigen/Core>
#include <vector>

#include "pockets/errors.hpp"

namespace pockets {

struct NumericSpectrum {
  std::vector<double> values;  // ascending
  int order = 0;
};

struct JacobiOptions {
  double convergence_tol = 1e-12;  // off-diagonal Frobenius norm target
  int max_sweeps = 100;
  double symmetry_tol = 1e-12;
};

// Process-wide defaults, overridable from the CLI (--max-sweeps, --conv-tol).
JacobiOptions default_jacobi_options();
void set_default_jacobi_options(const JacobiOptions& opts);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.  Order is
// capped at 200; throws on asymmetric input or non-convergence.
NumericSpectrum eig_sym(const Eigen::MatrixXd& m, const JacobiOptions& opts);
NumericSpectrum eig_sym(const Eigen::MatrixXd& m);

// Same sweep with the rotations accumulated into v (v'v = I, m = v d v').
NumericSpectrum eig_sym_vectors(const Eigen::MatrixXd& m, Eigen::MatrixXd& v);
NumericSpectrum eig_sym_vectors(const Eigen::MatrixXd& m, Eigen::MatrixXd& v,
                                const JacobiOptions& opts);

struct MatchReport {
  bool match = false;
  double max_deviation = 0.0;
};

// Sorted pairwise comparison of two equal-length value lists.
MatchReport spectra_match(std::vector<double> a, std::vector<double> b, double tol);

// ||Mx - lambda x||_inf / ||x||_inf
double residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& x, double lambda);

}  // namespace pockets

#endif
