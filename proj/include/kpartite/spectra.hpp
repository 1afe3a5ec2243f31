#ifndef KPARTITE_SPECTRA_HPP
#define KPARTITE_SPECTRA_HPP

#include <Eigen/Dense>

#include "kpartite/graph.hpp"

namespace kpartite {

/// Full real spectrum in non-increasing order, with the worst eigenpair
/// (or root) residual observed while computing it.
struct Spectrum {
  Eigen::VectorXd values;
  double residual_bound = 0.0;
};

/// Per-part components of the unit Perron vector of a complete multipartite
/// graph, normalized so that sum t_i x_i^2 = 1.
struct PerronData {
  Eigen::VectorXd components;
  double radius = 0.0;
};

/// Dense symmetric eigensolve. Rejects input that is not symmetric to 1e-12
/// and enforces a residual bound of 1e-10 * (1 + ||m||).
Spectrum eig_symmetric(const Eigen::MatrixXd& m);

/// Spectrum of a quotient matrix via its (exact integer) characteristic
/// polynomial and certified real-root isolation. Signals if the certified
/// real-root count falls short of the dimension.
Spectrum eig_quotient(const QuotientMatrix& q);

/// Sum of absolute values of all adjacency eigenvalues.
double graph_energy(const LabeledGraph& g);

double spectral_radius(const LabeledGraph& g);
double second_eigenvalue(const LabeledGraph& g);

/// Perron components from the quotient matrix: x_i is proportional to
/// 1/(lambda + t_i). The eigen-equation residual is checked to 1e-9.
PerronData perron_components(const PartitionSpec& spec);

}  // namespace kpartite

#endif  // KPARTITE_SPECTRA_HPP
