#ifndef KPARTITE_GRAPH_HPP
#define KPARTITE_GRAPH_HPP

#include <Eigen/Dense>

#include <vector>

#include "kpartite/polynomial.hpp"

namespace kpartite {

/// Canonical multiset of part sizes defining K_{t1,...,tk}.
/// Parts are kept in non-increasing order; part indices refer to that order.
struct PartitionSpec {
  std::vector<int> parts;
  int n = 0;
  int k = 0;

  /// Validates (k >= 2, every part >= 1) and sorts parts non-increasing.
  static PartitionSpec of(std::vector<int> parts);

  /// Index of the first vertex of a part under the contiguous layout.
  int part_offset(int part) const;

  bool operator==(const PartitionSpec&) const = default;
};

/// A pair of distinct parts identifying an orbit of edges. Canonical form
/// orders the endpoints by (part size descending, index ascending), which
/// under the canonical part order is simply (smaller index, larger index).
struct EdgeLocus {
  int part_a = 0;
  int part_b = 0;

  static EdgeLocus canonical(const PartitionSpec& spec, int a, int b);

  bool operator==(const EdgeLocus&) const = default;
};

/// Dense symmetric 0/1 adjacency with zero diagonal. part_of is populated
/// for multipartite-derived graphs and empty otherwise.
struct LabeledGraph {
  Eigen::MatrixXi adjacency;
  std::vector<int> part_of;

  int n() const { return static_cast<int>(adjacency.rows()); }
  int edge_count() const { return adjacency.sum() / 2; }
};

/// Ordered disjoint vertex sets covering V.
struct EquitableCells {
  std::vector<std::vector<int>> cells;
};

/// Quotient matrix of an equitable partition: b(i,j) is the number of
/// neighbours a vertex of cell i has in cell j. Its spectrum is a subset of
/// the graph's spectrum; the largest eigenvalue is the spectral radius.
struct QuotientMatrix {
  Eigen::MatrixXi b;
  std::vector<int> cell_sizes;

  int dim() const { return static_cast<int>(b.rows()); }
};

/// Vertices adjacent iff they lie in different parts; parts laid out
/// contiguously in canonical order.
LabeledGraph build_complete_multipartite(const PartitionSpec& spec);

/// Copy of g with the edge uv removed. Rejects equal or non-adjacent endpoints.
LabeledGraph delete_edge(const LabeledGraph& g, int u, int v);

/// The representative edge of a locus: the first vertex of each endpoint
/// part. All edges between two fixed parts are automorphic, so one
/// representative suffices.
std::pair<int, int> canonical_edge(const PartitionSpec& spec, const EdgeLocus& locus);

/// Quotient of the part partition: b(i,j) = t_j off-diagonal, 0 on it.
QuotientMatrix multipartite_quotient(const PartitionSpec& spec);

/// Quotient of G - e over the refinement that splits the representative
/// endpoint out of each locus part. Cell order: endpoint of part_a, endpoint
/// of part_b, remainder of part_a, remainder of part_b, remaining parts.
/// Equitability of the refinement is re-verified at runtime.
QuotientMatrix deleted_edge_quotient(const PartitionSpec& spec, const EdgeLocus& locus);

/// True iff every vertex of cell i has the same number of neighbours in
/// cell j, for all cell pairs. Throws if the cells do not partition V.
bool verify_equitable(const LabeledGraph& g, const EquitableCells& cells);

/// Quotient matrix of an equitable partition; throws if the partition is
/// not equitable.
QuotientMatrix quotient_of(const LabeledGraph& g, const EquitableCells& cells);

/// Two-cell coarsening used for K_{1,i,1,...,1}: the i-part against the rest.
/// Only equitable when every other part has size 1 (verified).
QuotientMatrix two_cell_quotient(const PartitionSpec& spec, int i_part);

}  // namespace kpartite

#endif  // KPARTITE_GRAPH_HPP
