#include "kpartite/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kpartite {

PartitionSpec PartitionSpec::of(std::vector<int> parts) {
  if (parts.size() < 2) throw std::invalid_argument("PartitionSpec: need k >= 2 parts");
  for (int t : parts)
    if (t < 1) throw std::invalid_argument("PartitionSpec: part sizes must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  PartitionSpec s;
  s.n = std::accumulate(parts.begin(), parts.end(), 0);
  s.k = static_cast<int>(parts.size());
  s.parts = std::move(parts);
  return s;
}

int PartitionSpec::part_offset(int part) const {
  if (part < 0 || part >= k) throw std::invalid_argument("part index out of range");
  return std::accumulate(parts.begin(), parts.begin() + part, 0);
}

EdgeLocus EdgeLocus::canonical(const PartitionSpec& spec, int a, int b) {
  if (a < 0 || a >= spec.k || b < 0 || b >= spec.k)
    throw std::invalid_argument("EdgeLocus: part index out of range");
  if (a == b) throw std::invalid_argument("EdgeLocus: endpoints must be distinct parts");
  // Parts are non-increasing, so (size desc, index asc) order is index order.
  return EdgeLocus{std::min(a, b), std::max(a, b)};
}

LabeledGraph build_complete_multipartite(const PartitionSpec& spec) {
  LabeledGraph g;
  g.adjacency = Eigen::MatrixXi::Zero(spec.n, spec.n);
  g.part_of.resize(spec.n);
  int v = 0;
  for (int p = 0; p < spec.k; ++p)
    for (int i = 0; i < spec.parts[p]; ++i) g.part_of[v++] = p;
  for (int u = 0; u < spec.n; ++u)
    for (int w = u + 1; w < spec.n; ++w)
      if (g.part_of[u] != g.part_of[w]) g.adjacency(u, w) = g.adjacency(w, u) = 1;
  return g;
}

LabeledGraph delete_edge(const LabeledGraph& g, int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
    throw std::invalid_argument("delete_edge: invalid endpoints");
  if (g.adjacency(u, v) == 0)
    throw std::invalid_argument("delete_edge: endpoints not adjacent");
  LabeledGraph out = g;
  out.adjacency(u, v) = out.adjacency(v, u) = 0;
  return out;
}

std::pair<int, int> canonical_edge(const PartitionSpec& spec, const EdgeLocus& locus) {
  const EdgeLocus c = EdgeLocus::canonical(spec, locus.part_a, locus.part_b);
  return {spec.part_offset(c.part_a), spec.part_offset(c.part_b)};
}

QuotientMatrix multipartite_quotient(const PartitionSpec& spec) {
  QuotientMatrix q;
  q.b = Eigen::MatrixXi::Zero(spec.k, spec.k);
  for (int i = 0; i < spec.k; ++i)
    for (int j = 0; j < spec.k; ++j)
      if (i != j) q.b(i, j) = spec.parts[j];
  q.cell_sizes = spec.parts;
  return q;
}

bool verify_equitable(const LabeledGraph& g, const EquitableCells& cells) {
  std::vector<int> owner(g.n(), -1);
  for (std::size_t c = 0; c < cells.cells.size(); ++c) {
    if (cells.cells[c].empty()) throw std::invalid_argument("verify_equitable: empty cell");
    for (int v : cells.cells[c]) {
      if (v < 0 || v >= g.n() || owner[v] != -1)
        throw std::invalid_argument("verify_equitable: cells must partition V");
      owner[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (owner[v] == -1) throw std::invalid_argument("verify_equitable: cells must cover V");

  const int k = static_cast<int>(cells.cells.size());
  for (int ci = 0; ci < k; ++ci) {
    std::vector<int> expected(k, -1);
    for (int v : cells.cells[ci]) {
      std::vector<int> counts(k, 0);
      for (int w = 0; w < g.n(); ++w)
        if (g.adjacency(v, w)) ++counts[owner[w]];
      if (expected[0] == -1 && v == cells.cells[ci].front()) {
        expected = counts;
      } else if (counts != expected) {
        return false;
      }
    }
  }
  return true;
}

QuotientMatrix quotient_of(const LabeledGraph& g, const EquitableCells& cells) {
  if (!verify_equitable(g, cells))
    throw std::invalid_argument("quotient_of: partition is not equitable");
  const int k = static_cast<int>(cells.cells.size());
  QuotientMatrix q;
  q.b = Eigen::MatrixXi::Zero(k, k);
  q.cell_sizes.resize(k);
  std::vector<int> owner(g.n());
  for (int c = 0; c < k; ++c) {
    q.cell_sizes[c] = static_cast<int>(cells.cells[c].size());
    for (int v : cells.cells[c]) owner[v] = c;
  }
  for (int c = 0; c < k; ++c) {
    const int rep = cells.cells[c].front();
    for (int w = 0; w < g.n(); ++w)
      if (g.adjacency(rep, w)) ++q.b(c, owner[w]);
  }
  return q;
}

QuotientMatrix deleted_edge_quotient(const PartitionSpec& spec, const EdgeLocus& locus) {
  const EdgeLocus c = EdgeLocus::canonical(spec, locus.part_a, locus.part_b);
  const auto [u, v] = canonical_edge(spec, c);
  const LabeledGraph g = delete_edge(build_complete_multipartite(spec), u, v);

  EquitableCells cells;
  cells.cells.push_back({u});
  cells.cells.push_back({v});
  for (int end : {c.part_a, c.part_b}) {
    const int off = spec.part_offset(end);
    if (spec.parts[end] > 1) {
      std::vector<int> rest;
      for (int i = 1; i < spec.parts[end]; ++i) rest.push_back(off + i);
      cells.cells.push_back(std::move(rest));
    }
  }
  for (int p = 0; p < spec.k; ++p) {
    if (p == c.part_a || p == c.part_b) continue;
    std::vector<int> cell(spec.parts[p]);
    std::iota(cell.begin(), cell.end(), spec.part_offset(p));
    cells.cells.push_back(std::move(cell));
  }
  return quotient_of(g, cells);
}

QuotientMatrix two_cell_quotient(const PartitionSpec& spec, int i_part) {
  if (i_part < 0 || i_part >= spec.k)
    throw std::invalid_argument("two_cell_quotient: part index out of range");
  const LabeledGraph g = build_complete_multipartite(spec);
  EquitableCells cells;
  std::vector<int> inner(spec.parts[i_part]);
  std::iota(inner.begin(), inner.end(), spec.part_offset(i_part));
  std::vector<int> rest;
  for (int v = 0; v < spec.n; ++v)
    if (g.part_of[v] != i_part) rest.push_back(v);
  cells.cells = {std::move(inner), std::move(rest)};
  return quotient_of(g, cells);
}

}  // namespace kpartite
