#ifndef KPARTITE_CLOSED_FORMS_HPP
#define KPARTITE_CLOSED_FORMS_HPP

#include <cstdint>

#include "kpartite/polynomial.hpp"

namespace kpartite {

/// Sextic whose roots are 2(x_p + x_q) over root pairs of the depressed
/// quartic x^4 + a x^2 + b x + c:
///   x^6 + 8a x^4 + 16(a^2 - 4c) x^2 - 64 b^2.
Polyd resolvent_sextic(double a, double b, double c);

/// Energy of a depressed quartic with four real roots, exactly two of them
/// positive (roots at zero count as neither sign). Equals the largest real
/// root of the resolvent sextic. Throws on precondition violation, detected
/// via certified root counting.
double quartic_energy(double a, double b, double c);

/// Scaled cubic with tau(g) = E(K_{1,i,t}):
///   g(x) = x^3 - 4(ti + i + t) x - 16 ti.
Polyi tripartite_g(int i, int t);

/// Sextic with tau(h) = E(K_{1,i,t} - e):
///   h(x) = x^6 - 8(ti+t+i-1) x^4 + 16((ti+t)^2 + (i-1)^2 (2t+1)) x^2
///          - 256 (ti-t)^2.
Polyi tripartite_h(int i, int t);

/// The division pair (q, r) with h = q*g + r:
///   q(x) = x^3 - 4((i+1)t + i - 2) x + 16 ti
///   r(x) = -16 [ (4ti - 4t - 1) x^2 - 8ti x - 16(2i-1) t^2 ].
std::pair<Polyi, Polyi> tripartite_q_r(int i, int t);

/// Factors of h at i = 2: h = h1 * h2 with
///   h1(x) = x^3 + 4x^2 - (12t-4)x - 16t,
///   h2(x) = x^3 - 4x^2 - (12t-4)x + 16t.
std::pair<Polyi, Polyi> tripartite_h_factors_i2(int t);

/// Condition polynomial value
///   f_a(n,i) = n(a i^2 - 2(1-a)i - 1) - a i^3 + (1-a) i^2 - (a-2) i.
double f_a(int n, int i, double a);

/// den * f_{num/den}(n, i), exactly in integer arithmetic.
std::int64_t f_a_scaled(int n, int i, std::int64_t num, std::int64_t den);

/// The three bound polynomials behind the spectral-radius lower bounds:
///   cubic     x^3 - ((n-i)(i+1) - 1) x - 2(n-i-1) i     (radius of K_{1,i,n-i-1})
///   quadratic x^2 - (n-i-1) x - i(n-i)                  (radius of K_{1,i,1,...,1})
///   quartic   x^4 - (5n-17) x^2 - 8(2n-9) x - 6(2n-10)  (radius of K_{1,2,2,n-5})
struct BoundPolys {
  Polyi cubic;
  Polyi quadratic;
  Polyi quartic;
};
BoundPolys bound_polys(int n, int i);

}  // namespace kpartite

#endif  // KPARTITE_CLOSED_FORMS_HPP
