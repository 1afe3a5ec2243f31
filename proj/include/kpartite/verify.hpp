#ifndef KPARTITE_VERIFY_HPP
#define KPARTITE_VERIFY_HPP

#include <string>
#include <vector>

#include "kpartite/graph.hpp"
#include "kpartite/spectra.hpp"

namespace kpartite {

enum class SignPrediction { Increase, Decrease };
enum class SignObservation { Increase, Decrease, Inconclusive };

const char* to_string(SignPrediction p);
const char* to_string(SignObservation o);

/// Predicted vs. observed sign of E(G-e) - E(G) for one (spec, locus) case.
struct EnergyComparison {
  PartitionSpec spec;
  EdgeLocus locus;
  double energy_g = 0.0;
  double energy_g_minus_e = 0.0;
  double delta = 0.0;  // energy_g_minus_e - energy_g
  SignPrediction predicted = SignPrediction::Increase;
  SignObservation observed = SignObservation::Inconclusive;
  double margin = 0.0;  // |delta|

  bool agrees() const;
};

/// A non-empty edge subset S crossing distinct parts, for the edge-subset
/// deletion criterion.
struct EdgeSubsetSpec {
  std::vector<std::pair<int, int>> edges;
};

/// Classification: sign of the energy change when one edge of the locus is
/// deleted.
///   k >= 4: Decrease iff both endpoint parts have size 1.
///   k  = 3: Decrease iff t_a + t_b <= 3.
///   k  = 2: Decrease iff min(t_a, t_b) = 1.
SignPrediction predict_sign(const PartitionSpec& spec, const EdgeLocus& locus);

/// Numerical observation via eig_symmetric on G and G - e.
EnergyComparison observe_sign(const PartitionSpec& spec, const EdgeLocus& locus,
                              double sign_tolerance = 1e-8);

/// All non-increasing integer partitions of n, in lexicographically
/// descending order.
std::vector<std::vector<int>> integer_partitions(int n);

/// One locus per orbit: distinct unordered size pairs, represented by the
/// first parts of each size.
std::vector<EdgeLocus> canonical_loci(const PartitionSpec& spec);

struct SweepReport {
  std::vector<EnergyComparison> rows;
  int agree = 0;
  int disagree = 0;
  int inconclusive = 0;
};

/// Exhaustive check of the classification over all partitions of every
/// n in [3, n_max] with k >= 2 and all canonical loci. With tripartite_only,
/// restricts to k = 3 and allows n_max up to 34.
SweepReport sweep_theorem(int n_max, double sign_tolerance = 1e-8,
                          bool tripartite_only = false, int workers = 1);

/// Edge-subset deletion criterion: true iff t_i >= 2 lambda(H) |U_i| for
/// every part, where H is the subgraph induced by S. When true, the implied
/// energy increase E(G-S) > E(G) is also asserted numerically.
bool check_thm22(const PartitionSpec& spec, const EdgeSubsetSpec& subset);

/// Rayleigh deletion test: true iff lambda_2(G-e) > a and x_a^2 + x_b^2 <= a
/// for the Perron components at the deleted edge's endpoints. Asserts the
/// implied energy increase when true. Requires 0 < a < 1.
bool check_rey(const PartitionSpec& spec, const EdgeLocus& locus, double a);

/// Sufficient condition (1): lambda_2(G-e) > a, (2i+1)/(i(i+2)) < a < 1 and
/// f_a(n, i) > 0, for an edge between a 1-part and an i-part (i >= 2, k >= 3).
bool check_cond1(const PartitionSpec& spec, const EdgeLocus& locus, double a);

/// Sufficient condition (2): lambda_2(G-e) > a and 2(n-1)/(lambda^2+n-1) < a.
bool check_cond2(const PartitionSpec& spec, const EdgeLocus& locus, double a);

/// Spectral-radius lower bounds. one_parts_only = false checks
/// lambda(K_{1,i,n-i-1}) > sqrt((n-i)(i+1)) (2 <= i <= n-3); one_parts_only
/// = true checks lambda(K_{1,i,1,...,1}) > n-i+0.67 (2 <= i <= n-5).
bool check_lembound(int n, int i, bool one_parts_only);

/// Balancing move on two parts with t_i - t_j >= 2 strictly increases the
/// spectral radius.
bool check_monotonicity(const PartitionSpec& spec, int part_i, int part_j);

struct CaseReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// The tripartite case analyses for K_{1,i,t} with an edge between the
/// 1-part and the i-part:
///   i = 2 (any t):  tau(h1), tau(h2) < tau(g), energy decreases.
///   i = 3, t >= 2:  g(2 sqrt(4t+3)) = -48t, h(tau(g)) < 0, energy increases.
///   t = 1, i >= 2:  E = tau(g) = 1 + sqrt(1+8i); for i >= 3,
///                   h(tau(g)) = 32(-16 i^2 + 36 i + 5 sqrt(8i+1) - 3) < 0.
CaseReport verify_case_analyses(int i_max, int t_max);

/// The canonical locus joining a 1-part and a part of size i.
EdgeLocus locus_one_i(const PartitionSpec& spec, int i);

/// Named sub-sweeps covering the residual small-case families.
SweepReport subsweep_fourpart_i4_i5();          // k >= 4, i = 4 with n <= 11 and i = 5 with n <= 8
SweepReport subsweep_fourpart_small_n();        // k >= 4, i in {2,3}, n <= 7
SweepReport subsweep_tripartite(int n_max);     // k = 3, {1,i,n-i-1}, 1-part/i-part locus

}  // namespace kpartite

#endif  // KPARTITE_VERIFY_HPP
