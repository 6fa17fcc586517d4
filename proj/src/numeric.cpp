#include "pockets/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace pockets {

namespace {

double offdiag_frobenius(const Eigen::MatrixXd& a) {
  double s = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

NumericSpectrum jacobi(Eigen::MatrixXd a, Eigen::MatrixXd* v, const JacobiOptions& opts) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw invalid_parameter("eig_sym needs a square matrix");
  if (n > 200) throw size_limit_exceeded("eig_sym order is capped at 200");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > opts.symmetry_tol)
        throw invalid_parameter("eig_sym input is not symmetric");

  if (v) *v = Eigen::MatrixXd::Identity(n, n);

  int sweep = 0;
  while (offdiag_frobenius(a) >= opts.convergence_tol) {
    if (++sweep > opts.max_sweeps)
      throw internal_error("Jacobi did not converge within " +
                           std::to_string(opts.max_sweeps) + " sweeps");
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double h = t * apq;

        a(p, p) -= h;
        a(q, q) += h;
        a(p, q) = a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = a(p, i) = aip - s * (aiq + tau * aip);
          a(i, q) = a(q, i) = aiq + s * (aip - tau * aiq);
        }
        if (v)
          for (int i = 0; i < n; ++i) {
            const double vip = (*v)(i, p), viq = (*v)(i, q);
            (*v)(i, p) = vip - s * (viq + tau * vip);
            (*v)(i, q) = viq + s * (vip - tau * viq);
          }
      }
  }

  NumericSpectrum spec;
  spec.order = n;
  spec.values.resize(n);
  for (int i = 0; i < n; ++i) spec.values[i] = a(i, i);
  if (v) {
    // Sort eigenvalues and carry columns along.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](int x, int y) { return spec.values[x] < spec.values[y]; });
    Eigen::MatrixXd vs(n, n);
    std::vector<double> sorted(n);
    for (int i = 0; i < n; ++i) {
      sorted[i] = spec.values[idx[i]];
      vs.col(i) = v->col(idx[i]);
    }
    spec.values = std::move(sorted);
    *v = std::move(vs);
  } else {
    std::sort(spec.values.begin(), spec.values.end());
  }
  return spec;
}

JacobiOptions& default_options() {
  static JacobiOptions opts;
  return opts;
}

}  // namespace

JacobiOptions default_jacobi_options() { return default_options(); }

void set_default_jacobi_options(const JacobiOptions& opts) { default_options() = opts; }

NumericSpectrum eig_sym(const Eigen::MatrixXd& m, const JacobiOptions& opts) {
  return jacobi(m, nullptr, opts);
}

NumericSpectrum eig_sym(const Eigen::MatrixXd& m) {
  return jacobi(m, nullptr, default_options());
}

NumericSpectrum eig_sym_vectors(const Eigen::MatrixXd& m, Eigen::MatrixXd& v,
                                const JacobiOptions& opts) {
  return jacobi(m, &v, opts);
}

NumericSpectrum eig_sym_vectors(const Eigen::MatrixXd& m, Eigen::MatrixXd& v) {
  return jacobi(m, &v, default_options());
}

MatchReport spectra_match(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size())
    throw invalid_parameter("spectra_match: total multiplicities differ (" +
                            std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  MatchReport r;
  for (std::size_t i = 0; i < a.size(); ++i)
    r.max_deviation = std::max(r.max_deviation, std::abs(a[i] - b[i]));
  r.match = r.max_deviation <= tol;
  return r;
}

double residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& x, double lambda) {
  if (m.rows() != m.cols() || m.cols() != x.size())
    throw invalid_parameter("residual dimension mismatch");
  const double xn = x.cwiseAbs().maxCoeff();
  if (xn == 0.0) throw invalid_parameter("residual of the zero vector");
  return (m * x - lambda * x).cwiseAbs().maxCoeff() / xn;
}

}  // namespace pockets
