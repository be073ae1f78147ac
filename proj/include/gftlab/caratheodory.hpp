#ifndef GFTLAB_CARATHEODORY_HPP
#define GFTLAB_CARATHEODORY_HPP

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "gftlab/series.hpp"

namespace gftlab {

// p(z) = sum_j lam_j (1 + x_j z)/(1 - x_j z) with |x_j| = 1, lam_j >= 0,
// sum lam_j = 1. Convex combinations of the extreme points of the class of
// functions with positive real part and p(0) = 1.
struct KernelMixture {
  std::vector<cplx> points;     // unimodular
  std::vector<double> weights;  // simplex

  std::size_t count() const { return points.size(); }
  void validate() const;  // throws std::invalid_argument on violation
};

// Coefficient-body parameters: c1, c2, c3 are determined by three disk
// parameters (tau1, tau2, tau3).
struct TauTriple {
  cplx tau1, tau2, tau3;
  void validate() const;
};

struct CaratheodorySpec {
  std::variant<KernelMixture, TauTriple> variant;
};

// Series 1 + sum_{n>=1} c_n z^n with c_n = 2 sum_j lam_j x_j^n, to order n_max.
TruncatedSeries kernel_coeffs(const KernelMixture& spec, int n_max);

// Exact rational evaluation of the mixture at a point of the open disk.
cplx kernel_eval(const KernelMixture& spec, cplx z);

// First three coefficients of the positive-real-part function pinned by a
// tau triple:
//   c1 = 2 tau1
//   c2 = 2 tau1^2 + 2 (1 - |tau1|^2) tau2
//   c3 = 2 tau1^3 + 4 (1-|tau1|^2) tau1 tau2 - 2 (1-|tau1|^2) conj(tau1) tau2^2
//        + 2 (1-|tau1|^2)(1-|tau2|^2) tau3
// For real tau1 the conjugate placements are invisible; they matter for
// complex tau1 (checked against the rational expansions below).
std::array<cplx, 3> tau_coeffs(const TauTriple& spec);

// Taylor coefficients of the unique rational representative, valid in the
// three uniqueness regimes:
//   |tau1| = 1;  or |tau1| < 1, |tau2| = 1;  or |tau1|,|tau2| < 1, |tau3| = 1.
// Interior triples pin only c1..c3 and are rejected.
TruncatedSeries tau_function(const TauTriple& spec, int n_max);

// omega = (p - 1)/(p + 1); requires p.coeffs[0] == 1. omega(0) = 0 exactly.
TruncatedSeries schwarz_from_p(const TruncatedSeries& p);

// Uniform unimodular points, Dirichlet(1) weights; deterministic in the seed.
KernelMixture sample_mixture(int m, std::uint64_t rng_seed);

// Portable 64-bit generator helpers (same stream on every platform).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double uniform();  // [0, 1)
};

}  // namespace gftlab

#endif
