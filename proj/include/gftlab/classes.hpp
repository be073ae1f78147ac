#ifndef GFTLAB_CLASSES_HPP
#define GFTLAB_CLASSES_HPP

#include <array>

#include "gftlab/series.hpp"

namespace gftlab {

enum class ClassKind { StarlikeExp, ConvexExp };

// Membership tag: which exponential subordination defines f, and the exponent
// scale alpha in (0, 1].
struct ClassTag {
  ClassKind kind;
  double alpha;
  void validate() const;  // rejects alpha outside (0, 1]
};

// A normalized analytic function f(z) = z + a2 z^2 + ... built from Schwarz
// data omega so that
//   StarlikeExp:  z f'(z)/f(z)      = exp(alpha * omega(z))
//   ConvexExp:    1 + z f''(z)/f'(z) = exp(alpha * omega(z))
// a.coeffs[n] holds a_n (a0 = 0, a1 = 1). omega is kept so functionals can
// re-expand to higher order on demand.
struct ClassMember {
  ClassTag tag;
  TruncatedSeries omega;
  TruncatedSeries a;
};

// Solve the subordination relation for the Taylor coefficients up to n_max.
// Requires omega.coeffs[0] == 0 and omega.order() >= n_max.
// StarlikeExp uses the recursion from z f' = f * g with g = exp(alpha*omega);
// ConvexExp runs the same recursion for h = f' (z h' = h (g - 1)) and
// integrates, a_n = h_{n-1}/n.
ClassMember build_member(const ClassTag& tag, const TruncatedSeries& omega, int n_max);

// Closed-form a2..a5 from the first four coefficients of the positive-real-part
// function p inducing omega = (p-1)/(p+1).
std::array<cplx, 4> closed_form_a(const ClassTag& tag, const std::array<cplx, 4>& c);

// Extremal witnesses: k in 1..4 builds the StarlikeExp member with
// omega(z) = z^k; k in 5..8 the ConvexExp member with omega(z) = z^(k-4).
ClassMember extremal(int k, double alpha, int n_max);

// Coefficient-wise residual of the defining identity (z f'/f or 1 + z f''/f'
// against exp(alpha*omega)), up to the member's truncation order.
double subordination_residual(const ClassMember& member);

}  // namespace gftlab

#endif
