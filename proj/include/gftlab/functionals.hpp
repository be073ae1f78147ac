#ifndef GFTLAB_FUNCTIONALS_HPP
#define GFTLAB_FUNCTIONALS_HPP

#include <array>
#include <vector>

#include "gftlab/classes.hpp"

namespace gftlab {

// Logarithmic coefficients gamma_1..gamma_m of a member, defined by
// log(f(z)/z) = 2 sum_{n>=1} gamma_n z^n. Storage is 0-based: gamma[n-1]
// holds gamma_n.
struct LogCoeffs {
  std::vector<cplx> gamma;

  cplx at(int n) const { return gamma.at(static_cast<std::size_t>(n - 1)); }
  int count() const { return static_cast<int>(gamma.size()); }
};

enum class DetKind { Hankel, Toeplitz };

struct DeterminantValue {
  DetKind kind;
  int q, n;
  cplx value;
};

// gamma_n = [z^n] log(f/z) / 2 via the series log; requires the member's
// truncation order >= m + 1.
LogCoeffs log_coeffs(const ClassMember& member, int m);

// gamma_1..gamma_4 from a2..a5:
//   gamma1 = a2/2
//   gamma2 = (a3 - a2^2/2)/2
//   gamma3 = (a4 - a2 a3 + a2^3/3)/2
//   gamma4 = (a5 - a2 a4 + a2^2 a3 - a3^2/2 - a2^4/4)/2
std::array<cplx, 4> log_coeffs_closed(const std::array<cplx, 4>& a);

// q x q determinant with (i,j) entry gamma_{n+i+j-2} (constant anti-diagonals).
DeterminantValue hankel(const LogCoeffs& g, int q, int n);

// Symmetric q x q determinant with first row (gamma_n, ..., gamma_{n+q-1}).
DeterminantValue toeplitz(const LogCoeffs& g, int q, int n);

// Closed forms of the second-order determinants at n = 1.
// Hankel, in coefficient variables:
//   StarlikeExp: (alpha^2/9216) (192 c1 c3 - 144 c2^2 - 24(2-alpha) c1^2 c2
//                                + (-alpha^2 - 12 alpha + 12) c1^4)
//   ConvexExp:   (alpha^2/36864) (96 c1 c3 - 64 c2^2 - 8(4-3alpha) c1^2 c2
//                                + (alpha^2 - 12 alpha + 8) c1^4)
cplx hankel21_closed_c(const ClassTag& tag, const std::array<cplx, 3>& c);

// Hankel in tau variables (tau1 real in [0,1]; tau2, tau3 in the closed disk):
//   StarlikeExp: (alpha^2/576) (-alpha^2 t1^4 + 12 alpha (1-t1^2) t1^2 t2
//                 + 48 (1-t1^2)(1-|t2|^2) t1 t3 - 12 (1-t1^2)(3+t1^2) t2^2)
//   ConvexExp:   (alpha^2/2304) (alpha^2 t1^4 + 12 alpha (1-t1^2) t1^2 t2
//                 + 24 (1-t1^2)(1-|t2|^2) t1 t3 - 8 (1-t1^2)(2+t1^2) t2^2)
cplx hankel21_closed_tau(const ClassTag& tag, double tau1, cplx tau2, cplx tau3);

// Toeplitz closed forms:
//   StarlikeExp: (alpha^2/1024) (64 c1^2 - 16 c2^2 + 8(2-alpha) c1^2 c2
//                                - (alpha^2 - 4 alpha + 4) c1^4)
//   ConvexExp:   (alpha^2/36864) (576 c1^2 - 64 c2^2 + 16(4-3alpha) c1^2 c2
//                                 - (9 alpha^2 - 24 alpha + 16) c1^4)
cplx toeplitz21_closed(const ClassTag& tag, cplx c1, cplx c2);

}  // namespace gftlab

#endif
