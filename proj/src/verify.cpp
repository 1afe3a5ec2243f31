#include "kpartite/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kpartite/closed_forms.hpp"

namespace kpartite {

const char* to_string(SignPrediction p) {
  return p == SignPrediction::Increase ? "Increase" : "Decrease";
}

const char* to_string(SignObservation o) {
  switch (o) {
    case SignObservation::Increase: return "Increase";
    case SignObservation::Decrease: return "Decrease";
    default: return "Inconclusive";
  }
}

bool EnergyComparison::agrees() const {
  return (predicted == SignPrediction::Increase && observed == SignObservation::Increase) ||
         (predicted == SignPrediction::Decrease && observed == SignObservation::Decrease);
}

SignPrediction predict_sign(const PartitionSpec& spec, const EdgeLocus& locus) {
  const EdgeLocus c = EdgeLocus::canonical(spec, locus.part_a, locus.part_b);
  const int ta = spec.parts[c.part_a];
  const int tb = spec.parts[c.part_b];
  bool decrease = false;
  if (spec.k >= 4)
    decrease = (ta == 1 && tb == 1);
  else if (spec.k == 3)
    decrease = (ta + tb <= 3);
  else
    decrease = (std::min(ta, tb) == 1);
  return decrease ? SignPrediction::Decrease : SignPrediction::Increase;
}

EnergyComparison observe_sign(const PartitionSpec& spec, const EdgeLocus& locus,
                              double sign_tolerance) {
  if (sign_tolerance <= 0.0)
    throw std::invalid_argument("observe_sign: sign_tolerance must be positive");
  EnergyComparison cmp;
  cmp.spec = spec;
  cmp.locus = EdgeLocus::canonical(spec, locus.part_a, locus.part_b);
  const LabeledGraph g = build_complete_multipartite(spec);
  const auto [u, v] = canonical_edge(spec, cmp.locus);
  cmp.energy_g = graph_energy(g);
  cmp.energy_g_minus_e = graph_energy(delete_edge(g, u, v));
  cmp.delta = cmp.energy_g_minus_e - cmp.energy_g;
  cmp.margin = std::abs(cmp.delta);
  cmp.predicted = predict_sign(spec, cmp.locus);
  if (cmp.delta > sign_tolerance)
    cmp.observed = SignObservation::Increase;
  else if (cmp.delta < -sign_tolerance)
    cmp.observed = SignObservation::Decrease;
  else
    cmp.observed = SignObservation::Inconclusive;
  return cmp;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<EdgeLocus> canonical_loci(const PartitionSpec& spec) {
  std::vector<EdgeLocus> loci;
  std::set<std::pair<int, int>> seen;  // (t_a, t_b) size pairs
  for (int a = 0; a < spec.k; ++a)
    for (int b = a + 1; b < spec.k; ++b)
      if (seen.insert({spec.parts[a], spec.parts[b]}).second)
        loci.push_back(EdgeLocus{a, b});
  return loci;
}

namespace {

struct SweepCase {
  PartitionSpec spec;
  EdgeLocus locus;
};

std::vector<SweepCase> sweep_cases(int n_max, bool tripartite_only) {
  std::vector<SweepCase> cases;
  for (int n = 3; n <= n_max; ++n) {
    for (const auto& parts : integer_partitions(n)) {
      if (parts.size() < 2) continue;
      if (tripartite_only && parts.size() != 3) continue;
      const PartitionSpec spec = PartitionSpec::of(parts);
      for (const EdgeLocus& locus : canonical_loci(spec))
        cases.push_back({spec, locus});
    }
  }
  return cases;
}

SweepReport run_cases(const std::vector<SweepCase>& cases, double tol, int workers) {
  SweepReport report;
  report.rows.resize(cases.size());
  workers = std::max(1, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i)
      report.rows[i] = observe_sign(cases[i].spec, cases[i].locus, tol);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++)
          report.rows[i] = observe_sign(cases[i].spec, cases[i].locus, tol);
      }));
    for (auto& f : futs) f.get();
  }
  for (const EnergyComparison& row : report.rows) {
    if (row.observed == SignObservation::Inconclusive)
      ++report.inconclusive;
    else if (row.agrees())
      ++report.agree;
    else
      ++report.disagree;
  }
  return report;
}

}  // namespace

SweepReport sweep_theorem(int n_max, double sign_tolerance, bool tripartite_only,
                          int workers) {
  const int limit = tripartite_only ? 34 : 14;
  if (n_max < 3 || n_max > limit)
    throw std::invalid_argument("sweep_theorem: n_max out of range");
  return run_cases(sweep_cases(n_max, tripartite_only), sign_tolerance, workers);
}

bool check_thm22(const PartitionSpec& spec, const EdgeSubsetSpec& subset) {
  if (subset.edges.empty())
    throw std::invalid_argument("check_thm22: edge subset must be non-empty");
  const LabeledGraph g = build_complete_multipartite(spec);

  std::set<int> hv;
  for (const auto& [u, v] : subset.edges) {
    if (u < 0 || v < 0 || u >= spec.n || v >= spec.n || g.part_of[u] == g.part_of[v])
      throw std::invalid_argument("check_thm22: edges must cross distinct parts");
    hv.insert(u);
    hv.insert(v);
  }
  const std::vector<int> hverts(hv.begin(), hv.end());
  Eigen::MatrixXd ha = Eigen::MatrixXd::Zero(hverts.size(), hverts.size());
  auto index_of = [&](int v) {
    return std::lower_bound(hverts.begin(), hverts.end(), v) - hverts.begin();
  };
  for (const auto& [u, v] : subset.edges)
    ha(index_of(u), index_of(v)) = ha(index_of(v), index_of(u)) = 1.0;
  const double lambda_h = eig_symmetric(ha).values[0];

  std::vector<int> u_counts(spec.k, 0);
  for (int v : hverts) ++u_counts[g.part_of[v]];
  for (int i = 0; i < spec.k; ++i)
    if (spec.parts[i] < 2.0 * lambda_h * u_counts[i]) return false;

  // Condition holds: the implied conclusion must be observable.
  LabeledGraph gs = g;
  for (const auto& [u, v] : subset.edges) gs.adjacency(u, v) = gs.adjacency(v, u) = 0;
  if (!(graph_energy(gs) > graph_energy(g)))
    throw std::runtime_error("check_thm22: condition held but energy did not increase");
  return true;
}

namespace {

// Shared shape handling for the Rayleigh-style checkers: the deleted edge is
// the canonical representative of the locus.
struct DeletionContext {
  EdgeLocus locus;
  LabeledGraph g;
  LabeledGraph ge;
  double lambda2_ge;
};

DeletionContext deletion_context(const PartitionSpec& spec, const EdgeLocus& locus) {
  DeletionContext ctx;
  ctx.locus = EdgeLocus::canonical(spec, locus.part_a, locus.part_b);
  ctx.g = build_complete_multipartite(spec);
  const auto [u, v] = canonical_edge(spec, ctx.locus);
  ctx.ge = delete_edge(ctx.g, u, v);
  ctx.lambda2_ge = second_eigenvalue(ctx.ge);
  return ctx;
}

void assert_increase(const char* who, const LabeledGraph& g, const LabeledGraph& ge) {
  if (!(graph_energy(ge) > graph_energy(g)))
    throw std::runtime_error(std::string(who) + ": condition held but energy did not increase");
}

// Locus between a 1-part and an i-part with i >= 2; returns i.
int one_i_shape(const PartitionSpec& spec, const EdgeLocus& locus, const char* who) {
  if (spec.k < 3) throw std::invalid_argument(std::string(who) + ": requires k >= 3");
  const EdgeLocus c = EdgeLocus::canonical(spec, locus.part_a, locus.part_b);
  const int ta = spec.parts[c.part_a], tb = spec.parts[c.part_b];
  if (!((ta == 1) != (tb == 1)))
    throw std::invalid_argument(std::string(who) +
                                ": edge must join a 1-part and a part of size >= 2");
  return std::max(ta, tb);
}

}  // namespace

bool check_rey(const PartitionSpec& spec, const EdgeLocus& locus, double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("check_rey: need 0 < a < 1");
  const DeletionContext ctx = deletion_context(spec, locus);
  const PerronData perron = perron_components(spec);
  const double x1 = perron.components[ctx.locus.part_a];
  const double x2 = perron.components[ctx.locus.part_b];
  const bool holds = ctx.lambda2_ge > a && x1 * x1 + x2 * x2 <= a;
  if (holds) assert_increase("check_rey", ctx.g, ctx.ge);
  return holds;
}

bool check_cond1(const PartitionSpec& spec, const EdgeLocus& locus, double a) {
  const int i = one_i_shape(spec, locus, "check_cond1");
  const DeletionContext ctx = deletion_context(spec, locus);
  const double gate = (2.0 * i + 1.0) / (static_cast<double>(i) * (i + 2.0));
  const bool holds = ctx.lambda2_ge > a && gate < a && a < 1.0 && f_a(spec.n, i, a) > 0.0;
  if (holds) assert_increase("check_cond1", ctx.g, ctx.ge);
  return holds;
}

bool check_cond2(const PartitionSpec& spec, const EdgeLocus& locus, double a) {
  one_i_shape(spec, locus, "check_cond2");
  const DeletionContext ctx = deletion_context(spec, locus);
  const double lambda = spectral_radius(ctx.g);
  const double bound = 2.0 * (spec.n - 1.0) / (lambda * lambda + spec.n - 1.0);
  const bool holds = ctx.lambda2_ge > a && bound < a;
  if (holds) assert_increase("check_cond2", ctx.g, ctx.ge);
  return holds;
}

bool check_lembound(int n, int i, bool one_parts_only) {
  if (one_parts_only) {
    if (!(2 <= i && i <= n - 5))
      throw std::invalid_argument("check_lembound: bound (2) needs 2 <= i <= n-5");
    std::vector<int> parts(static_cast<std::size_t>(n - i), 1);
    parts.insert(parts.begin(), i);
    const PartitionSpec spec = PartitionSpec::of(std::move(parts));
    return spectral_radius(build_complete_multipartite(spec)) > n - i + 0.67;
  }
  if (!(2 <= i && i <= n - 3))
    throw std::invalid_argument("check_lembound: bound (1) needs 2 <= i <= n-3");
  const PartitionSpec spec = PartitionSpec::of({1, i, n - i - 1});
  return spectral_radius(build_complete_multipartite(spec)) >
         std::sqrt(static_cast<double>(n - i) * (i + 1));
}

bool check_monotonicity(const PartitionSpec& spec, int part_i, int part_j) {
  if (part_i < 0 || part_i >= spec.k || part_j < 0 || part_j >= spec.k || part_i == part_j)
    throw std::invalid_argument("check_monotonicity: invalid part pair");
  if (spec.parts[part_i] - spec.parts[part_j] < 2)
    throw std::invalid_argument("check_monotonicity: parts must differ by at least 2");
  std::vector<int> balanced = spec.parts;
  --balanced[part_i];
  ++balanced[part_j];
  const double before = spectral_radius(build_complete_multipartite(spec));
  const double after =
      spectral_radius(build_complete_multipartite(PartitionSpec::of(std::move(balanced))));
  return after > before;
}

namespace {

std::string case_label(const char* tag, int i, int t) {
  std::ostringstream os;
  os << tag << " i=" << i << " t=" << t;
  return os.str();
}

}  // namespace

EdgeLocus locus_one_i(const PartitionSpec& spec, int i) {
  int one = -1, ip = -1;
  for (int p = 0; p < spec.k; ++p) {
    if (spec.parts[p] == 1 && one == -1 && p != ip) one = p;
    if (spec.parts[p] == i && ip == -1 && p != one) ip = p;
  }
  if (one == -1 || ip == -1)
    throw std::invalid_argument("locus_one_i: spec lacks the required parts");
  return EdgeLocus::canonical(spec, one, ip);
}

CaseReport verify_case_analyses(int i_max, int t_max) {
  if (i_max > 50 || t_max > 50)
    throw std::invalid_argument("verify_case_analyses: ranges capped at 50");
  CaseReport report;
  auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };

  // Case 1: i = 2. Both factor roots stay below tau(g); energy decreases.
  for (int t = 1; t <= t_max; ++t) {
    ++report.checked;
    const double tg = largest_real_root(tripartite_g(2, t).cast<double>());
    const auto [h1, h2] = tripartite_h_factors_i2(t);
    const double th1 = largest_real_root(h1.cast<double>());
    const double th2 = largest_real_root(h2.cast<double>());
    if (!(th1 < tg && th2 < tg)) fail(case_label("case1 tau ordering", 2, t));
    const PartitionSpec spec = PartitionSpec::of({1, 2, t});
    const EnergyComparison cmp = observe_sign(spec, locus_one_i(spec, 2), 1e-8);
    if (cmp.observed != SignObservation::Decrease) fail(case_label("case1 sign", 2, t));
  }

  // Case 2: i = 3, t >= 2.
  for (int t = 2; t <= t_max; ++t) {
    ++report.checked;
    const Polyd g = tripartite_g(3, t).cast<double>();
    const Polyd h = tripartite_h(3, t).cast<double>();
    const double at = 2.0 * std::sqrt(4.0 * t + 3.0);
    if (std::abs(g(at) - (-48.0 * t)) > 1e-7 * (1.0 + 48.0 * t))
      fail(case_label("case2 g(2sqrt(4t+3))", 3, t));
    const double tg = largest_real_root(g);
    if (!(h(tg) < 0.0)) fail(case_label("case2 h(tau(g))", 3, t));
    if (!(largest_real_root(h) > tg)) fail(case_label("case2 tau ordering", 3, t));
  }

  // Case 3: t = 1.
  for (int i = 2; i <= i_max; ++i) {
    ++report.checked;
    const double closed = 1.0 + std::sqrt(1.0 + 8.0 * i);
    const double tg = largest_real_root(tripartite_g(i, 1).cast<double>());
    const PartitionSpec spec = PartitionSpec::of({1, i, 1});
    const double energy = graph_energy(build_complete_multipartite(spec));
    if (std::abs(tg - closed) > 1e-9 || std::abs(energy - closed) > 1e-9)
      fail(case_label("case3 closed form", i, 1));
    if (i >= 3) {
      const Polyd h = tripartite_h(i, 1).cast<double>();
      const double expect =
          32.0 * (-16.0 * static_cast<double>(i) * i + 36.0 * i + 5.0 * std::sqrt(8.0 * i + 1.0) - 3.0);
      if (std::abs(h(closed) - expect) > 1e-6 * (1.0 + std::abs(expect)))
        fail(case_label("case3 h identity", i, 1));
      if (!(expect < 0.0) || !(largest_real_root(h) > closed))
        fail(case_label("case3 sign", i, 1));
    }
  }
  return report;
}

SweepReport subsweep_fourpart_i4_i5() {
  std::vector<SweepCase> cases;
  for (auto [i, nmax] : {std::pair{4, 11}, std::pair{5, 8}}) {
    for (int n = i + 3; n <= nmax; ++n) {  // k >= 4 needs two parts beyond the 1- and i-part
      for (const auto& parts : integer_partitions(n - i - 1)) {
        if (parts.size() < 2) continue;
        std::vector<int> full = parts;
        full.push_back(i);
        full.push_back(1);
        const PartitionSpec spec = PartitionSpec::of(std::move(full));
        cases.push_back({spec, locus_one_i(spec, i)});
      }
    }
  }
  return run_cases(cases, 1e-8, 1);
}

SweepReport subsweep_fourpart_small_n() {
  std::vector<SweepCase> cases;
  for (int n = 5; n <= 7; ++n) {
    for (const auto& parts : integer_partitions(n)) {
      if (parts.size() < 4) continue;
      const PartitionSpec spec = PartitionSpec::of(parts);
      if (spec.parts.back() != 1) continue;
      for (int i : {2, 3}) {
        bool has = std::find(spec.parts.begin(), spec.parts.end(), i) != spec.parts.end();
        if (!has) continue;
        cases.push_back({spec, locus_one_i(spec, i)});
      }
    }
  }
  return run_cases(cases, 1e-8, 1);
}

SweepReport subsweep_tripartite(int n_max) {
  if (n_max < 4 || n_max > 34)
    throw std::invalid_argument("subsweep_tripartite: n_max out of range");
  std::vector<SweepCase> cases;
  for (int n = 4; n <= n_max; ++n)
    for (int i = 2; i <= n - 2; ++i) {
      const PartitionSpec spec = PartitionSpec::of({1, i, n - i - 1});
      cases.push_back({spec, locus_one_i(spec, i)});
    }
  return run_cases(cases, 1e-8, 1);
}

}  // namespace kpartite
