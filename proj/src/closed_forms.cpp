#include "kpartite/closed_forms.hpp"

#include <stdexcept>

namespace kpartite {

Polyd resolvent_sextic(double a, double b, double c) {
  Polyd::CoeffVector v = Polyd::CoeffVector::Zero(7);
  v[6] = 1.0;
  v[4] = 8.0 * a;
  v[2] = 16.0 * (a * a - 4.0 * c);
  v[0] = -64.0 * b * b;
  return Polyd(std::move(v));
}

double quartic_energy(double a, double b, double c) {
  Polyd::CoeffVector v = Polyd::CoeffVector::Zero(5);
  v[4] = 1.0;
  v[2] = a;
  v[1] = b;
  v[0] = c;
  const RootSet roots = real_roots(Polyd(std::move(v)));
  if (roots.certified_total < 4)
    throw std::invalid_argument("quartic_energy: quartic does not have four real roots");
  int positive = 0;
  const double zero_tol = 1e-12 * (1.0 + std::abs(a) + std::abs(b) + std::abs(c));
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    if (roots.roots[i] > zero_tol) positive += roots.multiplicities[i];
  if (positive != 2)
    throw std::invalid_argument("quartic_energy: quartic must have exactly two positive roots");
  return largest_real_root(resolvent_sextic(a, b, c));
}

Polyi tripartite_g(int i, int t) {
  const std::int64_t I = i, T = t;
  Polyi::CoeffVector v = Polyi::CoeffVector::Zero(4);
  v[3] = 1;
  v[1] = -4 * (T * I + I + T);
  v[0] = -16 * T * I;
  return Polyi(std::move(v));
}

Polyi tripartite_h(int i, int t) {
  const std::int64_t I = i, T = t;
  Polyi::CoeffVector v = Polyi::CoeffVector::Zero(7);
  v[6] = 1;
  v[4] = -8 * (T * I + T + I - 1);
  v[2] = 16 * ((T * I + T) * (T * I + T) + (I - 1) * (I - 1) * (2 * T + 1));
  v[0] = -256 * (T * I - T) * (T * I - T);
  return Polyi(std::move(v));
}

std::pair<Polyi, Polyi> tripartite_q_r(int i, int t) {
  const std::int64_t I = i, T = t;
  Polyi::CoeffVector q = Polyi::CoeffVector::Zero(4);
  q[3] = 1;
  q[1] = -4 * ((I + 1) * T + I - 2);
  q[0] = 16 * T * I;
  Polyi::CoeffVector r = Polyi::CoeffVector::Zero(3);
  r[2] = -16 * (4 * T * I - 4 * T - 1);
  r[1] = 16 * 8 * T * I;
  r[0] = 16 * 16 * (2 * I - 1) * T * T;
  return {Polyi(std::move(q)), Polyi(std::move(r))};
}

std::pair<Polyi, Polyi> tripartite_h_factors_i2(int t) {
  const std::int64_t T = t;
  Polyi::CoeffVector a = Polyi::CoeffVector::Zero(4);
  a[3] = 1;
  a[2] = 4;
  a[1] = -(12 * T - 4);
  a[0] = -16 * T;
  Polyi::CoeffVector b = Polyi::CoeffVector::Zero(4);
  b[3] = 1;
  b[2] = -4;
  b[1] = -(12 * T - 4);
  b[0] = 16 * T;
  return {Polyi(std::move(a)), Polyi(std::move(b))};
}

double f_a(int n, int i, double a) {
  const double N = n, I = i;
  return N * (a * I * I - 2.0 * (1.0 - a) * I - 1.0) - a * I * I * I +
         (1.0 - a) * I * I - (a - 2.0) * I;
}

std::int64_t f_a_scaled(int n, int i, std::int64_t num, std::int64_t den) {
  const std::int64_t N = n, I = i;
  return N * (num * I * I - 2 * (den - num) * I - den) - num * I * I * I +
         (den - num) * I * I - (num - 2 * den) * I;
}

BoundPolys bound_polys(int n, int i) {
  const std::int64_t N = n, I = i;
  BoundPolys out;
  {
    Polyi::CoeffVector v = Polyi::CoeffVector::Zero(4);
    v[3] = 1;
    v[1] = -((N - I) * (I + 1) - 1);
    v[0] = -2 * (N - I - 1) * I;
    out.cubic = Polyi(std::move(v));
  }
  {
    Polyi::CoeffVector v = Polyi::CoeffVector::Zero(3);
    v[2] = 1;
    v[1] = -(N - I - 1);
    v[0] = -I * (N - I);
    out.quadratic = Polyi(std::move(v));
  }
  {
    Polyi::CoeffVector v = Polyi::CoeffVector::Zero(5);
    v[4] = 1;
    v[2] = -(5 * N - 17);
    v[1] = -8 * (2 * N - 9);
    v[0] = -6 * (2 * N - 10);
    out.quartic = Polyi(std::move(v));
  }
  return out;
}

}  // namespace kpartite
