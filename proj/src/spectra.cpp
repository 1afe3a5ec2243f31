#include "kpartite/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kpartite {

Spectrum eig_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_symmetric: not square");
  const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + scale))
    throw std::invalid_argument("eig_symmetric: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_symmetric: eigensolver failed to converge");

  Spectrum s;
  s.values = solver.eigenvalues().reverse();
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    const Eigen::VectorXd v = solver.eigenvectors().col(i);
    worst = std::max(worst, (m * v - solver.eigenvalues()[i] * v).norm());
  }
  s.residual_bound = worst;
  if (worst > 1e-10 * (1.0 + scale))
    throw std::runtime_error("eig_symmetric: residual bound exceeded");
  return s;
}

Spectrum eig_quotient(const QuotientMatrix& q) {
  const Polyd p = char_poly<std::int64_t>(q.b.cast<std::int64_t>()).cast<double>();
  const RootSet roots = real_roots(p);
  if (roots.certified_total < q.dim())
    throw std::runtime_error(
        "eig_quotient: certified real-root count below dimension; input is not "
        "a quotient of an equitable partition");
  Spectrum s;
  const std::vector<double> all = roots.with_multiplicity();
  s.values.resize(static_cast<Eigen::Index>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    s.values[static_cast<Eigen::Index>(i)] = all[all.size() - 1 - i];
  s.residual_bound = 1e-12;
  return s;
}

double graph_energy(const LabeledGraph& g) {
  if (g.n() == 0) return 0.0;
  return eig_symmetric(g.adjacency.cast<double>()).values.cwiseAbs().sum();
}

double spectral_radius(const LabeledGraph& g) {
  return eig_symmetric(g.adjacency.cast<double>()).values[0];
}

double second_eigenvalue(const LabeledGraph& g) {
  if (g.n() < 2) throw std::invalid_argument("second_eigenvalue: need n >= 2");
  return eig_symmetric(g.adjacency.cast<double>()).values[1];
}

PerronData perron_components(const PartitionSpec& spec) {
  const QuotientMatrix q = multipartite_quotient(spec);
  const Polyd p = char_poly<std::int64_t>(q.b.cast<std::int64_t>()).cast<double>();
  const double lambda = largest_real_root(p);

  // lambda x_i = sum_{j != i} t_j x_j = s - t_i x_i with s = sum t_j x_j,
  // so x_i is proportional to 1/(lambda + t_i).
  Eigen::VectorXd x(spec.k);
  for (int i = 0; i < spec.k; ++i) x[i] = 1.0 / (lambda + spec.parts[i]);
  double norm2 = 0.0;
  for (int i = 0; i < spec.k; ++i) norm2 += spec.parts[i] * x[i] * x[i];
  x /= std::sqrt(norm2);

  for (int i = 0; i < spec.k; ++i) {
    double rhs = 0.0;
    for (int j = 0; j < spec.k; ++j)
      if (j != i) rhs += spec.parts[j] * x[j];
    if (std::abs(lambda * x[i] - rhs) > 1e-9)
      throw std::runtime_error("perron_components: eigen-equation residual too large");
  }
  return PerronData{std::move(x), lambda};
}

}  // namespace kpartite
