#ifndef GFTLAB_LEMMAS_HPP
#define GFTLAB_LEMMAS_HPP

#include "gftlab/series.hpp"

namespace gftlab {

// Sharp bound for |c2 - v c1^2| over the positive-real-part class (Ma-Minda):
//   -4v + 2  (v < 0),  2  (0 <= v <= 1),  4v - 2  (v > 1).
double ma_minda_bound(double v);

// Hypothesis of the cubic-functional bound |c3 - 2B c1 c2 + D c1^3| <= 2
// (Ali's criterion): 0 <= B <= 1 and B(2B - 1) <= D <= B. A circulated
// variant reads 2B(2B-1) <= D; that region is too large -- the half-plane
// kernel already gives 2.5 at (B, D) = (3/8, -3/16).
bool ali_criterion_applicable(double B, double D);

// Hypothesis of the quartic-functional bound
//   |delta c1^4 + xi c2^2 + 2 beta c1 c3 - (3/2) gamma c1^2 c2 - c4| <= 2
// (Ravichandran-Verma criterion): 0 < beta < 1, 0 < xi < 1 and
//   8 xi(1-xi) {(beta gamma - 2 delta)^2 + (beta(xi+beta) - gamma)^2}
//     + beta(1-beta)(gamma - 2 beta xi)^2 <= 4 beta^2 (1-beta)^2 xi(1-xi).
bool rv_criterion_applicable(double beta, double gamma, double delta, double xi);

// Left side minus right side of the criterion inequality above; applicable
// iff <= 0 (and beta, xi interior).
double rv_criterion_combination(double beta, double gamma, double delta, double xi);

struct PsiInput {
  double A, B, C;
};

// Psi(A,B,C) = max over the closed unit disk of |A + Bz + Cz^2| + 1 - |z|^2,
// by the closed-form case analysis. Case-boundary ties within floating-point
// noise are resolved by taking the max of the adjacent branch formulas.
double psi(const PsiInput& in);

// Direct maximization on a polar grid (grid_n radii x 4*grid_n angles) with
// one local refinement pass around the best cell. Undershoots the true max.
double psi_oracle(const PsiInput& in, int grid_n);

}  // namespace gftlab

#endif
