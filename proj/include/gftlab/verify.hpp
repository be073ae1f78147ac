#ifndef GFTLAB_VERIFY_HPP
#define GFTLAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gftlab/caratheodory.hpp"
#include "gftlab/classes.hpp"
#include "gftlab/functionals.hpp"

namespace gftlab {

enum class FunctionalKind { Gamma, Hankel21, Toeplitz21 };

// One claimed bound family: |functional| <= claimed(alpha) over the class.
struct BoundClaim {
  FunctionalKind functional;
  int gamma_index;  // 1..4 for Gamma, 0 otherwise
  ClassKind class_kind;
  bool sharp;            // equality attained by a designated witness
  int witness_index;     // extremal index 1..8, 0 when none designated
  std::string formula;   // bound as a human-readable formula of alpha

  double claimed(double alpha) const;
  std::string name() const;        // "gamma1".."gamma4", "hankel21", "toeplitz21"
  std::string class_name() const;  // "starlike" / "convex"
};

BoundClaim gamma_claim(ClassKind kind, int n);
BoundClaim hankel_claim(ClassKind kind);
BoundClaim toeplitz_claim(ClassKind kind);
std::vector<BoundClaim> all_claims();

struct SearchReport {
  BoundClaim claim;
  double alpha = 0.0;
  double estimated_sup = 0.0;
  KernelMixture argmax;
  double claimed = 0.0;
  double slack = 0.0;  // claimed - estimated_sup
  std::optional<double> witness_value;
  long budget = 0;
  std::uint64_t seed = 0;

  static constexpr double kTolerance = 1e-6;
  bool no_exceedance() const { return estimated_sup <= claimed + kTolerance; }
  bool sharpness_ok() const;
  bool ok() const { return no_exceedance() && sharpness_ok(); }
};

// |functional| for a mixture given by kernel angles and simplex weights,
// evaluated through the closed-form coefficient maps (c -> a -> gamma).
double evaluate_functional(const BoundClaim& claim, double alpha,
                           const std::vector<double>& angles,
                           const std::vector<double>& weights);

// Multi-start supremum search over mixtures of five kernels (5 angles + 4 free
// weights). Coarse seeded sampling spends half the budget; the ten best starts
// are refined by compass steps with shrinking step size. Deterministic in
// (claim, alpha, budget, seed); independent of thread count by construction.
SearchReport search_sup(const BoundClaim& claim, double alpha, long budget,
                        std::uint64_t seed);

// |functional| at the designated extremal witness, via the series pipeline
// (build the member, take log coefficients, then the determinant). Returns
// nullopt for claims without a designated witness (the Toeplitz bounds).
std::optional<double> check_witness(const BoundClaim& claim, double alpha);

// One named sign/identity check evaluated over a parameter grid. `worst` is
// the extremal value of the checked quantity (max for <=0 checks, min for >0
// checks, max |residual| for identity checks); `correction` is the curvature
// allowance already folded into `pass`.
struct BatteryCheck {
  char key;  // 'a'..'i'
  std::string name;
  bool pass = false;
  double worst = 0.0;
  double correction = 0.0;
  double special = 0.0;  // check-specific reference value (see detail)
  std::string detail;
};

// The nine proof-inequality checks, evaluated on alpha in (0,1] with the given
// step and on tau/t grids with tau_step where relevant.
std::vector<BatteryCheck> proof_inequality_battery(double alpha_step,
                                                   double tau_step = 1.0 / 512.0);

struct TriangleBoundReport {
  double analytic_bound = 0.0;       // 5 alpha^2/16 (starlike) or 5 alpha^2/72
  double intermediate_max = 0.0;     // sampled max of the chain's middle term
  double functional_max = 0.0;       // sampled max |T21| over the same mixtures
};

// Triangle-inequality chain for the Toeplitz bound:
//   |T21| <= middle(c1, c2) <= analytic bound,
// with middle = (a^2/1024)(64|c1|^2 + 16|c2 - (2-a)/4 c1^2|^2) for starlike and
// (a^2/36864)(576|c1|^2 + 64|c2 - (4-3a)/8 c1^2|^2) for convex.
TriangleBoundReport triangle_bound_t21(const ClassTag& tag, int samples = 20000,
                                       std::uint64_t seed = 42);
double toeplitz_chain_middle(const ClassTag& tag, cplx c1, cplx c2);

// Auxiliary surfaces shared by the battery and figure emission.
double psi1_surface(double tau1, double alpha);
double psi2_surface(double tau1, double alpha);
// Exact branch envelope used past the junction: u(tau) sqrt((13-7 tau^2)/(2(2+tau^2)))
// with u = (alpha^2-8) tau^4 - 8 tau^2 + 16; glues with psi2 at the junction.
double xi_surface(double tau1, double alpha);
double xi_surface_slope(double tau1, double alpha);
double tau1_junction(double alpha);  // sqrt of the positive quadratic root s2

// Empirical lemma suites (sampling; deterministic in the seed).
struct SuiteResult {
  std::string name;
  bool pass = false;
  long samples = 0;
  long violations = 0;
  double worst = 0.0;  // suite-specific extremal statistic
  std::string detail;
};
std::vector<SuiteResult> run_lemma_suites(long samples, std::uint64_t seed,
                                          long psi_samples = 1000, int psi_grid = 256);

}  // namespace gftlab

#endif
