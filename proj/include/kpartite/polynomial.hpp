#ifndef KPARTITE_POLYNOMIAL_HPP
#define KPARTITE_POLYNOMIAL_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kpartite {

/// Dense univariate polynomial over a scalar ring.
///
/// Coefficients are stored in ascending degree order: coeff(j) multiplies x^j.
/// Integer instantiations (Scalar = std::int64_t) keep all arithmetic exact,
/// which is what the identity tests rely on; root finding is only available
/// for the double instantiation (see free functions below).
template <typename Scalar>
class Polynomial {
public:
  using CoeffVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Polynomial() : coeffs_(CoeffVector::Zero(1)) {}

  explicit Polynomial(CoeffVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) coeffs_ = CoeffVector::Zero(1);
    trim();
  }

  /// Build from coefficients listed highest degree first, e.g. {1, 0, -7, -6}
  /// is x^3 - 7x - 6.
  static Polynomial from_descending(std::initializer_list<Scalar> c) {
    CoeffVector v(static_cast<Eigen::Index>(c.size()));
    Eigen::Index j = v.size() - 1;
    for (Scalar x : c) v[j--] = x;
    return Polynomial(std::move(v));
  }

  static Polynomial monomial(int degree, Scalar c = Scalar(1)) {
    CoeffVector v = CoeffVector::Zero(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return degree() == 0 && coeffs_[0] == Scalar(0); }

  Scalar coeff(int j) const {
    return (j >= 0 && j < coeffs_.size()) ? coeffs_[j] : Scalar(0);
  }
  Scalar leading() const { return coeffs_[coeffs_.size() - 1]; }
  const CoeffVector& coeffs() const { return coeffs_; }

  /// Horner evaluation.
  Scalar operator()(Scalar x) const {
    Scalar acc = Scalar(0);
    for (Eigen::Index j = coeffs_.size() - 1; j >= 0; --j) acc = acc * x + coeffs_[j];
    return acc;
  }

  Polynomial derivative() const {
    if (degree() == 0) return Polynomial();
    CoeffVector d(coeffs_.size() - 1);
    for (Eigen::Index j = 1; j < coeffs_.size(); ++j) d[j - 1] = Scalar(j) * coeffs_[j];
    return Polynomial(std::move(d));
  }

  Polynomial operator+(const Polynomial& o) const {
    CoeffVector v = CoeffVector::Zero(std::max(coeffs_.size(), o.coeffs_.size()));
    v.head(coeffs_.size()) = coeffs_;
    v.head(o.coeffs_.size()) += o.coeffs_;
    return Polynomial(std::move(v));
  }

  Polynomial operator-(const Polynomial& o) const {
    CoeffVector v = CoeffVector::Zero(std::max(coeffs_.size(), o.coeffs_.size()));
    v.head(coeffs_.size()) = coeffs_;
    v.head(o.coeffs_.size()) -= o.coeffs_;
    return Polynomial(std::move(v));
  }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    CoeffVector v = CoeffVector::Zero(coeffs_.size() + o.coeffs_.size() - 1);
    for (Eigen::Index a = 0; a < coeffs_.size(); ++a)
      for (Eigen::Index b = 0; b < o.coeffs_.size(); ++b)
        v[a + b] += coeffs_[a] * o.coeffs_[b];
    return Polynomial(std::move(v));
  }

  Polynomial operator*(Scalar s) const {
    CoeffVector v = coeffs_ * s;
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const { return *this * Scalar(-1); }

  bool operator==(const Polynomial& o) const {
    return coeffs_.size() == o.coeffs_.size() && coeffs_ == o.coeffs_;
  }

  template <typename T>
  Polynomial<T> cast() const {
    typename Polynomial<T>::CoeffVector v(coeffs_.size());
    for (Eigen::Index j = 0; j < coeffs_.size(); ++j) v[j] = static_cast<T>(coeffs_[j]);
    return Polynomial<T>(std::move(v));
  }

  /// p(s*x): substitute a scaled argument.
  Polynomial scale_argument(Scalar s) const {
    CoeffVector v = coeffs_;
    Scalar pw = Scalar(1);
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      v[j] *= pw;
      pw *= s;
    }
    return Polynomial(std::move(v));
  }

private:
  void trim() {
    Eigen::Index d = coeffs_.size() - 1;
    while (d > 0 && coeffs_[d] == Scalar(0)) --d;
    coeffs_.conservativeResize(d + 1);
  }

  CoeffVector coeffs_;
};

using Polyd = Polynomial<double>;
using Polyi = Polynomial<std::int64_t>;

/// Characteristic polynomial det(xI - m) by the Faddeev-LeVerrier recursion.
/// The trace division is exact over the integers, so an integer matrix yields
/// exact integer coefficients. Dimension is capped at 16.
template <typename Scalar>
Polynomial<Scalar> char_poly(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  if (n == 0 || n > 16) throw std::invalid_argument("char_poly: dimension out of range");

  typename Polynomial<Scalar>::CoeffVector c(n + 1);
  c[n] = Scalar(1);
  Mat work = Mat::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    work = m * work;
    Scalar ck = -work.trace() / Scalar(k);
    c[n - k] = ck;
    work.diagonal().array() += ck;
  }
  return Polynomial<Scalar>(std::move(c));
}

/// Synthetic division by (x - r). Returns the quotient and p(r).
std::pair<Polyd, double> deflate(const Polyd& p, double r);

/// 1 + max |a_j / a_n|; every real root lies in (-bound, bound).
double cauchy_root_bound(const Polyd& p);

/// Sturm chain of a polynomial; sign variations bound root counts over
/// intervals. The chain is truncated at the (numerical) gcd of p and p', so
/// variation differences count *distinct* real roots.
class SturmChain {
public:
  explicit SturmChain(const Polyd& p);

  int variations(double x) const;

  /// Distinct real roots in the half-open interval (lo, hi].
  int count_distinct(double lo, double hi) const;

  const std::vector<Polyd>& sequence() const { return seq_; }

private:
  std::vector<Polyd> seq_;
};

/// Real roots of a polynomial with certified counts.
struct RootSet {
  std::vector<double> roots;          // distinct, ascending, bracket width <= 1e-12
  std::vector<int> multiplicities;    // aligned with roots
  int certified_distinct = 0;         // from the Sturm chain
  int certified_total = 0;            // sum of multiplicities

  std::vector<double> with_multiplicity() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < roots.size(); ++i)
      out.insert(out.end(), multiplicities[i], roots[i]);
    return out;
  }
};

/// Isolate every distinct real root by Sturm bisection and assign
/// multiplicities by repeated deflation.
RootSet real_roots(const Polyd& p);

struct NoRealRoot : std::runtime_error {
  NoRealRoot() : std::runtime_error("polynomial has no real root") {}
};

/// tau(p): the largest real root, refined to ~1e-12. Throws NoRealRoot when
/// the certified real-root count is zero.
double largest_real_root(const Polyd& p);

}  // namespace kpartite

#endif  // KPARTITE_POLYNOMIAL_HPP
