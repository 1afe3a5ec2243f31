#include "kpartite/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace kpartite {

std::pair<Polyd, double> deflate(const Polyd& p, double r) {
  const int n = p.degree();
  if (n == 0) throw std::invalid_argument("deflate: constant polynomial");
  Polyd::CoeffVector q = Polyd::CoeffVector::Zero(n);
  double carry = p.coeff(n);
  for (int j = n - 1; j >= 0; --j) {
    q[j] = carry;
    carry = p.coeff(j) + carry * r;
  }
  return {Polyd(std::move(q)), carry};
}

double cauchy_root_bound(const Polyd& p) {
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (int j = 0; j < p.degree(); ++j) m = std::max(m, std::abs(p.coeff(j)));
  return 1.0 + m / lead;
}

namespace {

// Polynomial remainder of a by b, coefficients in doubles.
Polyd remainder(const Polyd& a, const Polyd& b) {
  Polyd::CoeffVector r = a.coeffs();
  const int db = b.degree();
  const double lead = b.leading();
  for (int j = static_cast<int>(r.size()) - 1; j >= db; --j) {
    const double f = r[j] / lead;
    if (f == 0.0) continue;
    for (int t = 0; t <= db; ++t) r[j - db + t] -= f * b.coeff(t);
    r[j] = 0.0;
  }
  int d = std::min<int>(static_cast<int>(r.size()) - 1, db - 1);
  while (d > 0 && r[d] == 0.0) --d;
  Polyd::CoeffVector out = r.head(d + 1);
  return Polyd(std::move(out));
}

int sign_of(double v, double eps) {
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

// Quotient of a by b, discarding the remainder. Only used when the division
// is (numerically) exact.
Polyd divide_out(const Polyd& a, const Polyd& b) {
  const int dq = a.degree() - b.degree();
  if (dq < 0) return Polyd();
  Polyd::CoeffVector q = Polyd::CoeffVector::Zero(dq + 1);
  Polyd::CoeffVector r = a.coeffs();
  const double lead = b.leading();
  for (int j = a.degree(); j >= b.degree(); --j) {
    const double f = r[j] / lead;
    q[j - b.degree()] = f;
    for (int t = 0; t <= b.degree(); ++t) r[j - b.degree() + t] -= f * b.coeff(t);
  }
  return Polyd(std::move(q));
}

Polyd numerical_gcd(Polyd a, Polyd b) {
  while (b.degree() > 0) {
    Polyd rem = remainder(a, b);
    const double scale =
        std::max(a.coeffs().cwiseAbs().maxCoeff(), b.coeffs().cwiseAbs().maxCoeff());
    if (rem.coeffs().cwiseAbs().maxCoeff() <= 1e-10 * scale) return b;
    a = std::move(b);
    b = rem * (1.0 / rem.coeffs().cwiseAbs().maxCoeff());
  }
  return b;
}

// p divided by gcd(p, p'): same roots, all simple. Multiple roots make p
// itself vanish to high order nearby, which defeats sign tests; the
// square-free part stays well conditioned there.
Polyd square_free_part(const Polyd& p) {
  if (p.degree() <= 1) return p;
  const Polyd g = numerical_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return divide_out(p, g);
}

}  // namespace

SturmChain::SturmChain(const Polyd& p) {
  seq_.push_back(p);
  if (p.degree() == 0) return;
  seq_.push_back(p.derivative());
  // Euclidean chain with sign flips; stop at the numerical gcd.
  while (seq_.back().degree() > 0) {
    const Polyd& a = seq_[seq_.size() - 2];
    const Polyd& b = seq_.back();
    Polyd rem = remainder(a, b);
    const double scale =
        std::max(a.coeffs().cwiseAbs().maxCoeff(), b.coeffs().cwiseAbs().maxCoeff());
    if (rem.coeffs().cwiseAbs().maxCoeff() <= 1e-10 * scale) break;  // gcd reached
    // Normalize to keep the chain well scaled.
    Polyd next = -rem * (1.0 / rem.coeffs().cwiseAbs().maxCoeff());
    seq_.push_back(std::move(next));
  }
}

int SturmChain::variations(double x) const {
  int count = 0;
  int prev = 0;
  const double ax = std::abs(x);
  for (const Polyd& q : seq_) {
    // Horner evaluation error is bounded by ~n * eps * sum |c_j| |x|^j.
    double mag = 0.0, pw = 1.0;
    for (int j = 0; j <= q.degree(); ++j) {
      mag += std::abs(q.coeff(j)) * pw;
      pw *= ax;
    }
    const int s = sign_of(q(x), 1e-13 * mag);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::count_distinct(double lo, double hi) const {
  return variations(lo) - variations(hi);
}

namespace {

constexpr double kBracketWidth = 1e-13;

// Bisect on Sturm variation counts until exactly one root remains in a
// bracket of width kBracketWidth. Works for roots of any multiplicity.
double refine_root(const SturmChain& chain, double lo, double hi) {
  while (hi - lo > kBracketWidth * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // ran out of precision
    if (chain.count_distinct(lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

void isolate(const SturmChain& chain, double lo, double hi, int nroots,
             std::vector<double>& out) {
  if (nroots <= 0) return;
  if (nroots == 1) {
    out.push_back(refine_root(chain, lo, hi));
    return;
  }
  if (hi - lo <= kBracketWidth * std::max({1.0, std::abs(lo), std::abs(hi)})) {
    // Numerically coincident cluster; report one point per counted root.
    out.insert(out.end(), nroots, 0.5 * (lo + hi));
    return;
  }
  const double mid = 0.5 * (lo + hi);
  const int left = chain.count_distinct(lo, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, nroots - left, out);
}

double eval_scale(const Polyd& p, double r) {
  double s = 0.0, pw = 1.0;
  const double ar = std::abs(r);
  for (int j = 0; j <= p.degree(); ++j) {
    s += std::abs(p.coeff(j)) * pw;
    pw *= ar;
  }
  return std::max(s, 1.0);
}

}  // namespace

RootSet real_roots(const Polyd& p) {
  RootSet rs;
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  if (p.degree() == 0) return rs;

  const Polyd sf = square_free_part(p);
  const SturmChain chain(sf);
  const double bound = cauchy_root_bound(sf) * (1.0 + 1e-9) + 1e-9;
  rs.certified_distinct = chain.count_distinct(-bound, bound);
  isolate(chain, -bound, bound, rs.certified_distinct, rs.roots);
  std::sort(rs.roots.begin(), rs.roots.end());

  // Newton polish on the square-free part, where every root is simple.
  const Polyd dsf = sf.derivative();
  for (double& r : rs.roots) {
    for (int it = 0; it < 3; ++it) {
      const double d = dsf(r);
      if (std::abs(d) < 1e-12 * eval_scale(dsf, r)) break;
      r -= sf(r) / d;
    }
  }

  rs.multiplicities.assign(rs.roots.size(), 1);
  if (sf.degree() == p.degree()) {
    rs.certified_total = p.degree();
    return rs;
  }

  // Repeated roots present: multiplicity is the order of the first
  // non-vanishing derivative.
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const double r = rs.roots[i];
    Polyd d = p;
    int m = 0;
    while (m < p.degree() && std::abs(d(r)) <= 1e-7 * eval_scale(d, r)) {
      d = d.derivative();
      ++m;
    }
    rs.multiplicities[i] = std::max(m, 1);
  }
  rs.certified_total = 0;
  for (int m : rs.multiplicities) rs.certified_total += m;
  return rs;
}

double largest_real_root(const Polyd& p) {
  if (p.degree() == 0) throw NoRealRoot();
  const Polyd sf = square_free_part(p);
  const SturmChain chain(sf);
  const double bound = cauchy_root_bound(sf) * (1.0 + 1e-9) + 1e-9;
  if (chain.count_distinct(-bound, bound) == 0) throw NoRealRoot();

  double lo = -bound, hi = bound;
  // Keep the topmost root in the bracket.
  while (hi - lo > kBracketWidth * std::max(1.0, std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (chain.count_distinct(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  double r = 0.5 * (lo + hi);
  const Polyd dsf = sf.derivative();
  const double slack = 1e-9 * std::max(1.0, std::abs(r));
  for (int it = 0; it < 3; ++it) {
    const double d = dsf(r);
    if (std::abs(d) < 1e-12 * eval_scale(dsf, r)) break;
    const double next = r - sf(r) / d;
    if (next < lo - slack || next > hi + slack) break;  // keep the certified bracket
    r = next;
  }
  return r;
}

}  // namespace kpartite
