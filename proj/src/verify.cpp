#include "gftlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gftlab/lemmas.hpp"

namespace gftlab {

namespace {
constexpr int kMixSize = 5;
constexpr int kRefineStarts = 10;
constexpr double kInitialStep = 0.1;
constexpr double kMinStep = 1e-9;
}  // namespace

double BoundClaim::claimed(double alpha) const {
  switch (functional) {
    case FunctionalKind::Gamma:
      return class_kind == ClassKind::StarlikeExp
                 ? alpha / (2.0 * gamma_index)
                 : alpha / (2.0 * gamma_index * (gamma_index + 1));
    case FunctionalKind::Hankel21:
      return class_kind == ClassKind::StarlikeExp ? alpha * alpha / 16.0
                                                  : alpha * alpha / 144.0;
    case FunctionalKind::Toeplitz21:
      return class_kind == ClassKind::StarlikeExp ? 5.0 * alpha * alpha / 16.0
                                                  : 5.0 * alpha * alpha / 72.0;
  }
  return 0.0;
}

std::string BoundClaim::name() const {
  switch (functional) {
    case FunctionalKind::Gamma:
      return "gamma" + std::to_string(gamma_index);
    case FunctionalKind::Hankel21:
      return "hankel21";
    case FunctionalKind::Toeplitz21:
      return "toeplitz21";
  }
  return "?";
}

std::string BoundClaim::class_name() const {
  return class_kind == ClassKind::StarlikeExp ? "starlike" : "convex";
}

BoundClaim gamma_claim(ClassKind kind, int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("gamma claim index must be in 1..4");
  static const char* star_formulas[] = {"alpha/2", "alpha/4", "alpha/6", "alpha/8"};
  static const char* convex_formulas[] = {"alpha/4", "alpha/12", "alpha/24", "alpha/40"};
  const bool star = kind == ClassKind::StarlikeExp;
  return BoundClaim{FunctionalKind::Gamma, n, kind, true,
                    star ? n : n + 4,
                    star ? star_formulas[n - 1] : convex_formulas[n - 1]};
}

BoundClaim hankel_claim(ClassKind kind) {
  const bool star = kind == ClassKind::StarlikeExp;
  return BoundClaim{FunctionalKind::Hankel21, 0, kind, true, star ? 2 : 6,
                    star ? "alpha^2/16" : "alpha^2/144"};
}

BoundClaim toeplitz_claim(ClassKind kind) {
  const bool star = kind == ClassKind::StarlikeExp;
  return BoundClaim{FunctionalKind::Toeplitz21, 0, kind, false, 0,
                    star ? "5*alpha^2/16" : "5*alpha^2/72"};
}

std::vector<BoundClaim> all_claims() {
  std::vector<BoundClaim> out;
  for (ClassKind kind : {ClassKind::StarlikeExp, ClassKind::ConvexExp}) {
    for (int n = 1; n <= 4; ++n) out.push_back(gamma_claim(kind, n));
    out.push_back(hankel_claim(kind));
    out.push_back(toeplitz_claim(kind));
  }
  return out;
}

bool SearchReport::sharpness_ok() const {
  if (!claim.sharp) return true;
  double best = estimated_sup;
  if (witness_value) best = std::max(best, *witness_value);
  return claimed - best <= kTolerance;
}

namespace {

struct MixParams {
  double angles[kMixSize];
  double weights[kMixSize];  // weights[4] is the dependent simplex coordinate
};

double functional_value(const BoundClaim& claim, double alpha, const MixParams& p) {
  cplx c[4] = {};
  for (int j = 0; j < kMixSize; ++j) {
    const cplx x = std::polar(1.0, p.angles[j]);
    cplx pw = x;
    c[0] += p.weights[j] * pw;
    pw *= x;
    c[1] += p.weights[j] * pw;
    pw *= x;
    c[2] += p.weights[j] * pw;
    pw *= x;
    c[3] += p.weights[j] * pw;
  }
  for (auto& v : c) v *= 2.0;
  const ClassTag tag{claim.class_kind, alpha};
  const auto a = closed_form_a(tag, {c[0], c[1], c[2], c[3]});
  const auto g = log_coeffs_closed(a);
  switch (claim.functional) {
    case FunctionalKind::Gamma:
      return std::abs(g[static_cast<std::size_t>(claim.gamma_index - 1)]);
    case FunctionalKind::Hankel21:
      return std::abs(g[0] * g[2] - g[1] * g[1]);
    case FunctionalKind::Toeplitz21:
      return std::abs(g[0] * g[0] - g[1] * g[1]);
  }
  return 0.0;
}

MixParams draw_params(SplitMix64& rng) {
  MixParams p;
  for (double& a : p.angles) a = 2.0 * std::numbers::pi * rng.uniform();
  double total = 0.0;
  for (double& w : p.weights) {
    w = -std::log1p(-rng.uniform());
    total += w;
  }
  for (double& w : p.weights) w /= total;
  return p;
}

// Compass refinement over 5 angles and 4 free weights (the fifth weight takes
// the slack); steps leaving the simplex are rejected. First-improvement sweep,
// halve the step after a sweep with no accepted move.
double compass_refine(const BoundClaim& claim, double alpha, MixParams& p,
                      double best, long eval_budget) {
  double step = kInitialStep;
  long evals = 0;
  const auto try_point = [&](const MixParams& cand, double& out) {
    ++evals;
    out = functional_value(claim, alpha, cand);
    return out > best;
  };
  while (step >= kMinStep && evals < eval_budget) {
    bool improved = false;
    for (int dim = 0; dim < 9 && evals < eval_budget; ++dim) {
      for (double sign : {1.0, -1.0}) {
        MixParams cand = p;
        if (dim < kMixSize) {
          cand.angles[dim] += sign * step;
        } else {
          const int j = dim - kMixSize;
          cand.weights[j] += sign * step;
          cand.weights[4] -= sign * step;
          if (cand.weights[j] < 0.0 || cand.weights[4] < 0.0) continue;
        }
        double v;
        if (try_point(cand, v)) {
          best = v;
          p = cand;
          improved = true;
          break;
        }
        if (evals >= eval_budget) break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

double evaluate_functional(const BoundClaim& claim, double alpha,
                           const std::vector<double>& angles,
                           const std::vector<double>& weights) {
  if (angles.size() != kMixSize || weights.size() != kMixSize)
    throw std::invalid_argument("evaluate_functional expects five kernels");
  MixParams p;
  std::copy(angles.begin(), angles.end(), p.angles);
  std::copy(weights.begin(), weights.end(), p.weights);
  return functional_value(claim, alpha, p);
}

SearchReport search_sup(const BoundClaim& claim, double alpha, long budget,
                        std::uint64_t seed) {
  ClassTag{claim.class_kind, alpha}.validate();
  if (budget < 1000) throw std::invalid_argument("search budget must be >= 1000");

  SplitMix64 rng(seed);
  const long coarse = budget / 2;

  // keep the ten best coarse samples as refinement starts
  std::vector<std::pair<double, MixParams>> top;
  top.reserve(kRefineStarts + 1);
  for (long i = 0; i < coarse; ++i) {
    MixParams p = draw_params(rng);
    const double v = functional_value(claim, alpha, p);
    if (top.size() < kRefineStarts || v > top.back().first) {
      const auto pos = std::upper_bound(
          top.begin(), top.end(), v,
          [](double val, const auto& e) { return val > e.first; });
      top.insert(pos, {v, p});
      if (top.size() > kRefineStarts) top.pop_back();
    }
  }

  const long per_start = (budget - coarse) / kRefineStarts;
  double best = 0.0;
  MixParams best_p = top.front().second;
  for (auto& [v0, p] : top) {
    const double v = compass_refine(claim, alpha, p, v0, per_start);
    if (v > best) {
      best = v;
      best_p = p;
    }
  }

  SearchReport rep;
  rep.claim = claim;
  rep.alpha = alpha;
  rep.estimated_sup = best;
  rep.argmax.points.assign(kMixSize, cplx{1.0});
  rep.argmax.weights.assign(best_p.weights, best_p.weights + kMixSize);
  for (int j = 0; j < kMixSize; ++j)
    rep.argmax.points[static_cast<std::size_t>(j)] = std::polar(1.0, best_p.angles[j]);
  rep.claimed = claim.claimed(alpha);
  rep.slack = rep.claimed - best;
  rep.witness_value = check_witness(claim, alpha);
  rep.budget = budget;
  rep.seed = seed;
  return rep;
}

std::optional<double> check_witness(const BoundClaim& claim, double alpha) {
  if (claim.witness_index == 0) return std::nullopt;  // no sharp witness claimed
  const int order = 12;
  const ClassMember member = extremal(claim.witness_index, alpha, order);
  const LogCoeffs g = log_coeffs(member, 4);
  switch (claim.functional) {
    case FunctionalKind::Gamma:
      return std::abs(g.at(claim.gamma_index));
    case FunctionalKind::Hankel21:
      return std::abs(hankel(g, 2, 1).value);
    case FunctionalKind::Toeplitz21:
      return std::abs(toeplitz(g, 2, 1).value);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// auxiliary surfaces

double psi1_surface(double tau1, double alpha) {
  const double t2 = tau1 * tau1;
  return -(-alpha * alpha + 12.0 * alpha + 12.0) * t2 * t2 -
         12.0 * (2.0 - alpha) * t2 + 36.0;
}

double psi2_surface(double tau1, double alpha) {
  const double t2 = tau1 * tau1;
  return -(alpha * alpha + 12.0 * alpha + 8.0) * t2 * t2 -
         4.0 * (2.0 - 3.0 * alpha) * t2 + 16.0;
}

double tau1_junction(double alpha) {
  const double disc = std::sqrt(13.0 * alpha * alpha + 36.0 * alpha + 81.0);
  const double s2 = (-4.0 * (3.0 + 2.0 * alpha) + 4.0 * disc) /
                    (3.0 * alpha * alpha + 8.0 * alpha + 24.0);
  return std::sqrt(s2);
}

double xi_surface(double tau1, double alpha) {
  const double t2 = tau1 * tau1;
  const double u = (alpha * alpha - 8.0) * t2 * t2 - 8.0 * t2 + 16.0;
  return u * std::sqrt((13.0 - 7.0 * t2) / (2.0 * (2.0 + t2)));
}

double xi_surface_slope(double tau1, double alpha) {
  const double t2 = tau1 * tau1;
  const double u = (alpha * alpha - 8.0) * t2 * t2 - 8.0 * t2 + 16.0;
  const double du = 4.0 * (alpha * alpha - 8.0) * t2 * tau1 - 16.0 * tau1;
  const double v = std::sqrt((13.0 - 7.0 * t2) / (2.0 * (2.0 + t2)));
  const double d = 2.0 + t2;
  return du * v - 27.0 * tau1 * u / (2.0 * d * d * v);
}

// ---------------------------------------------------------------------------
// proof-inequality battery

namespace {

double poly_eval(const std::vector<double>& coeffs, double x) {
  // coeffs[k] multiplies x^k
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

// sup |q''| on [0,1] bounded by sum k(k-1)|q_k|; the grid-to-continuum
// allowance for step h is then M2 h^2 / 8 (piecewise-linear interpolation).
double poly_curvature(const std::vector<double>& coeffs) {
  double m = 0.0;
  for (std::size_t k = 2; k < coeffs.size(); ++k)
    m += static_cast<double>(k * (k - 1)) * std::abs(coeffs[k]);
  return m;
}

std::vector<double> alpha_grid(double step) {
  std::vector<double> g;
  for (double a = step; a < 1.0 - 1e-15; a += step) g.push_back(a);
  g.push_back(1.0);
  return g;
}

void star_gamma4_params(double al, double& beta, double& gamma, double& delta,
                        double& xi) {
  beta = xi = 0.25 * (2.0 - al);
  gamma = (al * al - 6.0 * al + 6.0) / 12.0;
  delta = -(al * al * al - 12.0 * al * al + 36.0 * al - 24.0) / 192.0;
}

void convex_gamma4_params(double al, double& beta, double& gamma, double& delta,
                          double& xi) {
  beta = (4.0 - 3.0 * al) / 8.0;
  xi = (18.0 - 13.0 * al) / 36.0;
  gamma = (45.0 * al * al - 160.0 * al + 108.0) / 216.0;
  delta = -(27.0 * al * al * al - 180.0 * al * al + 320.0 * al - 144.0) / 1152.0;
}

double case4_s2(double alpha) {
  const double t = tau1_junction(alpha);
  return t * t;
}

}  // namespace

std::vector<BatteryCheck> proof_inequality_battery(double alpha_step, double tau_step) {
  if (alpha_step <= 0.0 || alpha_step > 1.0 / 64.0)
    throw std::invalid_argument("battery alpha step must be in (0, 1/64]");
  if (tau_step <= 0.0 || tau_step > 1.0 / 512.0)
    throw std::invalid_argument("battery tau step must be in (0, 1/512]");
  const std::vector<double> alphas = alpha_grid(alpha_step);
  const std::vector<double> taus = alpha_grid(tau_step);  // same layout on (0,1]
  std::vector<BatteryCheck> out;

  {  // (a) quartic-functional criterion combination, starlike gamma4: <= 0
    BatteryCheck c;
    c.key = 'a';
    c.name = "rv_combination_starlike_gamma4";
    // combination * 18432 expands to
    //   -a^8 + 8a^7 - 12a^6 - 32a^5 - 80a^4 + 864a^2 - 1152
    const std::vector<double> poly{-1152, 0, 864, 0, -80, -32, -12, 8, -1};
    double worst = -std::numeric_limits<double>::infinity();
    double ident = 0.0;
    for (double a : alphas) {
      double b, g, d, x;
      star_gamma4_params(a, b, g, d, x);
      const double direct = rv_criterion_combination(b, g, d, x);
      worst = std::max(worst, direct);
      ident = std::max(ident, std::abs(direct - poly_eval(poly, a) / 18432.0));
    }
    c.worst = worst;
    c.correction = poly_curvature(poly) / 18432.0 * alpha_step * alpha_step / 8.0;
    c.pass = worst + c.correction < 0.0 && ident < 1e-12;
    // inner factored polynomial -a^6 + 8a^5 - 16a^4 - 144a^2 + 288 at alpha = 1
    c.special = poly_eval({288, 0, -144, 0, -16, 8, -1}, 1.0);
    c.detail = "combination <= 0 on the grid; closed-form identity residual " +
               std::to_string(ident) + "; inner polynomial at alpha=1 = " +
               std::to_string(c.special);
    out.push_back(std::move(c));
  }

  {  // (b) quoted degree-8 polynomial for convex gamma4: >= 0
    BatteryCheck c;
    c.key = 'b';
    c.name = "rv_polynomial_convex_gamma4";
    const std::vector<double> poly{30233088, 0,       -49802688, 754272, 17604926,
                                   3799884,  -848655, -2190240,  492804};
    double worst = std::numeric_limits<double>::infinity();
    double combo_max = -std::numeric_limits<double>::infinity();
    for (double a : alphas) {
      worst = std::min(worst, poly_eval(poly, a));
      double b, g, d, x;
      convex_gamma4_params(a, b, g, d, x);
      combo_max = std::max(combo_max, rv_criterion_combination(b, g, d, x));
    }
    c.worst = worst;
    c.correction = poly_curvature(poly) * alpha_step * alpha_step / 8.0;
    c.pass = worst - c.correction > 0.0;
    c.special = combo_max;
    c.detail =
        "quoted polynomial stays positive (min on grid above the curvature "
        "allowance); note: the direct criterion combination does NOT match it and "
        "reaches " +
        std::to_string(combo_max) + " near alpha=1 (positive => criterion "
        "hypothesis fails there; see README findings)";
    out.push_back(std::move(c));
  }

  {  // (c) d(psi1)/d(tau1) <= 0 on (0,1)^2
    BatteryCheck c;
    c.key = 'c';
    c.name = "psi1_decreasing_in_tau";
    double worst = -std::numeric_limits<double>::infinity();
    for (double a : alphas)
      for (double t : taus) {
        const double slope = -4.0 * (-a * a + 12.0 * a + 12.0) * t * t * t -
                             24.0 * (2.0 - a) * t;
        worst = std::max(worst, slope);
      }
    // second partials on [0,1]^2: |d2/dt2| <= 552, |d2/da2| <= 8, |cross| <= 168
    c.correction = 552.0 * tau_step * tau_step / 8.0 +
                   8.0 * alpha_step * alpha_step / 8.0 +
                   168.0 * tau_step * alpha_step / 4.0;
    c.worst = worst;
    c.pass = worst + c.correction < 0.0;
    c.detail = "slope stays negative over the grid";
    out.push_back(std::move(c));
  }

  {  // (d) case-3 threshold root exceeds one
    BatteryCheck c;
    c.key = 'd';
    c.name = "case3_root_exceeds_one";
    const std::vector<double> poly{576, 464, 96, -9};
    double worst = std::numeric_limits<double>::infinity();
    double t2_margin = std::numeric_limits<double>::infinity();
    for (double a : alphas) {
      worst = std::min(worst, poly_eval(poly, a));
      const double disc = std::sqrt(13.0 * a * a - 36.0 * a + 81.0);
      const double t2 = (-4.0 * (3.0 - 2.0 * a) + 4.0 * disc) /
                        (3.0 * a * a - 8.0 * a + 24.0);
      t2_margin = std::min(t2_margin, t2 - 1.0);
    }
    c.worst = worst;
    c.correction = poly_curvature(poly) * alpha_step * alpha_step / 8.0;
    c.pass = worst - c.correction > 0.0 && t2_margin > 0.0;
    c.special = poly_eval(poly, 1.0);
    c.detail = "cubic positive on grid, min margin of (t2 - 1) = " +
               std::to_string(t2_margin) + "; value at alpha=1 = " +
               std::to_string(c.special);
    out.push_back(std::move(c));
  }

  {  // (e) case-4 quadratic roots: s1 < 0 < s2 < 1, root residuals vanish
    BatteryCheck c;
    c.key = 'e';
    c.name = "case4_root_in_unit_interval";
    double worst = std::numeric_limits<double>::infinity();
    double resid = 0.0;
    for (double a : alphas) {
      const double A = 3.0 * a * a + 8.0 * a + 24.0;
      const double B = 8.0 * (3.0 + 2.0 * a);
      const double C = -48.0;
      const double disc = std::sqrt(13.0 * a * a + 36.0 * a + 81.0);
      const double s2 = (-4.0 * (3.0 + 2.0 * a) + 4.0 * disc) / A;
      const double s1 = (-4.0 * (3.0 + 2.0 * a) - 4.0 * disc) / A;
      worst = std::min({worst, s2, 1.0 - s2, -s1});
      resid = std::max({resid, std::abs((A * s1 + B) * s1 + C) / 48.0,
                        std::abs((A * s2 + B) * s2 + C) / 48.0});
    }
    c.worst = worst;
    c.special = resid;
    c.pass = worst > 0.0 && resid < 1e-9;
    c.detail = "min(s2, 1-s2, -s1) over grid; relative root residual " +
               std::to_string(resid);
    out.push_back(std::move(c));
  }

  {  // (f) slope of psi2 at the junction is nonpositive
    BatteryCheck c;
    c.key = 'f';
    c.name = "psi2_slope_at_junction";
    const std::vector<double> poly{20736, 71424, 62077, 27752, 5664, 12, -147};
    double worst = std::numeric_limits<double>::infinity();
    double direct = std::numeric_limits<double>::infinity();
    for (double a : alphas) {
      worst = std::min(worst, poly_eval(poly, a));
      const double s2 = case4_s2(a);
      direct = std::min(direct, (a * a + 12.0 * a + 8.0) * s2 + 2.0 * (2.0 - 3.0 * a));
    }
    c.worst = worst;
    c.correction = poly_curvature(poly) * alpha_step * alpha_step / 8.0;
    c.pass = worst - c.correction > 0.0 && direct >= 0.0;
    c.special = direct;
    c.detail = "sextic positive on grid; direct junction slope margin " +
               std::to_string(direct);
    out.push_back(std::move(c));
  }

  {  // (g) xi decreasing past the junction
    BatteryCheck c;
    c.key = 'g';
    c.name = "xi_decreasing_beyond_junction";
    double worst = -std::numeric_limits<double>::infinity();
    for (double a : alphas) {
      const double lo = tau1_junction(a);
      for (double t = std::ceil(lo / tau_step) * tau_step; t <= 1.0 + 1e-15;
           t += tau_step)
        worst = std::max(worst, xi_surface_slope(std::min(t, 1.0), a));
    }
    c.worst = worst;
    c.pass = worst < 0.0;
    c.detail = "max slope over the restricted grid";
    out.push_back(std::move(c));
  }

  {  // (h) branch envelopes agree at the junction (identity)
    BatteryCheck c;
    c.key = 'h';
    c.name = "junction_continuity";
    double worst = 0.0;
    for (double a : alphas) {
      const double t = tau1_junction(a);
      worst = std::max(worst, std::abs(xi_surface(t, a) - psi2_surface(t, a)));
    }
    c.worst = worst;
    c.pass = worst < 1e-9;
    c.detail = "max |xi - psi2| at the junction";
    out.push_back(std::move(c));
  }

  {  // (i) starlike Psi branch condition |B1| > 2(1 - |C1|)
    BatteryCheck c;
    c.key = 'i';
    c.name = "psi_branch_condition_starlike";
    // q(tau, alpha) = (alpha+2) tau/4 + 3/(2 tau) - 2 is decreasing in tau
    // (its tau-derivative is negative on (0,1]) and linear increasing in
    // alpha, so the grid minimum including tau = 1 is the continuum infimum.
    double worst = std::numeric_limits<double>::infinity();
    for (double a : alphas)
      for (double t : taus)
        worst = std::min(worst, (a + 2.0) * t / 4.0 + 1.5 / t - 2.0);
    c.worst = worst;
    c.pass = worst > 0.0;
    c.detail = "min of |B1| - 2(1-|C1|) over the grid (infimum alpha/4 as tau -> 1)";
    out.push_back(std::move(c));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Toeplitz triangle chain

double toeplitz_chain_middle(const ClassTag& tag, cplx c1, cplx c2) {
  const double al = tag.alpha;
  if (tag.kind == ClassKind::StarlikeExp) {
    const cplx inner = c2 - (2.0 - al) / 4.0 * c1 * c1;
    return al * al / 1024.0 * (64.0 * std::norm(c1) + 16.0 * std::norm(inner));
  }
  const cplx inner = c2 - (4.0 - 3.0 * al) / 8.0 * c1 * c1;
  return al * al / 36864.0 * (576.0 * std::norm(c1) + 64.0 * std::norm(inner));
}

TriangleBoundReport triangle_bound_t21(const ClassTag& tag, int samples,
                                       std::uint64_t seed) {
  tag.validate();
  TriangleBoundReport rep;
  const double al = tag.alpha;
  rep.analytic_bound = tag.kind == ClassKind::StarlikeExp ? 5.0 * al * al / 16.0
                                                          : 5.0 * al * al / 72.0;
  SplitMix64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const int m = 1 + static_cast<int>(rng.next() % 5);
    const KernelMixture mix = sample_mixture(m, rng.next());
    const TruncatedSeries p = kernel_coeffs(mix, 2);
    const cplx c1 = p.coeffs[1], c2 = p.coeffs[2];
    rep.intermediate_max =
        std::max(rep.intermediate_max, toeplitz_chain_middle(tag, c1, c2));
    rep.functional_max =
        std::max(rep.functional_max, std::abs(toeplitz21_closed(tag, c1, c2)));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// empirical lemma suites

std::vector<SuiteResult> run_lemma_suites(long samples, std::uint64_t seed,
                                          long psi_samples, int psi_grid) {
  std::vector<SuiteResult> out;
  SplitMix64 rng(seed);

  {  // sharp |c2 - v c1^2| bound plus its equality witnesses
    SuiteResult r;
    r.name = "ma_minda_c2_bound";
    r.samples = samples;
    const double vs[] = {-1.0, -0.1, 0.0, 0.3, 0.7, 1.0, 1.5};
    double closest = std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
      const int m = 1 + static_cast<int>(rng.next() % 5);
      const KernelMixture mix = sample_mixture(m, rng.next());
      const TruncatedSeries p = kernel_coeffs(mix, 2);
      const cplx c1 = p.coeffs[1], c2 = p.coeffs[2];
      for (double v : vs) {
        const double gap = ma_minda_bound(v) - std::abs(c2 - v * c1 * c1);
        if (gap < -1e-9) ++r.violations;
        closest = std::min(closest, gap);
      }
    }
    // equality witnesses: half-plane kernel outside (0,1), its square inside
    double witness_gap = 0.0;
    for (double v : vs) {
      KernelMixture w;
      if (v > 0.0 && v < 1.0) {
        w.points = {cplx{1.0}, cplx{-1.0}};
        w.weights = {0.5, 0.5};
      } else {
        w.points = {cplx{1.0}};
        w.weights = {1.0};
      }
      const TruncatedSeries p = kernel_coeffs(w, 2);
      witness_gap = std::max(
          witness_gap,
          std::abs(ma_minda_bound(v) - std::abs(p.coeffs[2] - v * p.coeffs[1] * p.coeffs[1])));
    }
    r.worst = closest;
    r.pass = r.violations == 0 && witness_gap < 1e-6;
    r.detail = "min bound slack " + std::to_string(closest) +
               ", witness gap " + std::to_string(witness_gap);
    out.push_back(std::move(r));
  }

  {  // cubic functional bound under the Ali criterion
    SuiteResult r;
    r.name = "ali_cubic_bound";
    r.samples = samples;
    double worst = 0.0;
    for (long i = 0; i < samples; ++i) {
      const double B = rng.uniform();
      const double lo = B * (2.0 * B - 1.0);
      const double D = lo + (B - lo) * rng.uniform();
      if (!ali_criterion_applicable(B, D)) {
        ++r.violations;
        continue;
      }
      const int m = 1 + static_cast<int>(rng.next() % 5);
      const KernelMixture mix = sample_mixture(m, rng.next());
      const TruncatedSeries p = kernel_coeffs(mix, 3);
      const cplx c1 = p.coeffs[1], c2 = p.coeffs[2], c3 = p.coeffs[3];
      const double val = std::abs(c3 - 2.0 * B * c1 * c2 + D * c1 * c1 * c1);
      worst = std::max(worst, val);
      if (val > 2.0 + 1e-9) ++r.violations;
    }
    r.worst = worst;
    r.pass = r.violations == 0;
    r.detail = "max |c3 - 2B c1 c2 + D c1^3| = " + std::to_string(worst);
    out.push_back(std::move(r));
  }

  {  // quartic functional bound under the Ravichandran-Verma criterion
    SuiteResult r;
    r.name = "rv_quartic_bound";
    double worst = 0.0;
    long accepted = 0;
    while (accepted < samples) {
      const double beta = rng.uniform();
      const double xi = rng.uniform();
      if (beta <= 0.0 || beta >= 1.0 || xi <= 0.0 || xi >= 1.0) continue;
      const double scale = beta * (1.0 - beta) * std::sqrt(xi * (1.0 - xi));
      const double gamma = beta * (xi + beta) + scale * (2.0 * rng.uniform() - 1.0);
      const double delta = beta * gamma / 2.0 + scale * (2.0 * rng.uniform() - 1.0);
      if (!rv_criterion_applicable(beta, gamma, delta, xi)) continue;
      ++accepted;
      const int m = 1 + static_cast<int>(rng.next() % 5);
      const KernelMixture mix = sample_mixture(m, rng.next());
      const TruncatedSeries p = kernel_coeffs(mix, 4);
      const cplx c1 = p.coeffs[1], c2 = p.coeffs[2], c3 = p.coeffs[3], c4 = p.coeffs[4];
      const double val =
          std::abs(delta * c1 * c1 * c1 * c1 + xi * c2 * c2 + 2.0 * beta * c1 * c3 -
                   1.5 * gamma * c1 * c1 * c2 - c4);
      worst = std::max(worst, val);
      if (val > 2.0 + 1e-9) ++r.violations;
    }
    r.samples = accepted;
    r.worst = worst;
    r.pass = r.violations == 0;
    r.detail = "max |quartic functional| = " + std::to_string(worst);
    out.push_back(std::move(r));
  }

  {  // closed-form Psi against the grid oracle
    SuiteResult r;
    r.name = "psi_vs_oracle";
    r.samples = psi_samples;
    double max_gap = 0.0, min_gap = std::numeric_limits<double>::infinity();
    for (long i = 0; i < psi_samples; ++i) {
      const PsiInput in{6.0 * rng.uniform() - 3.0, 6.0 * rng.uniform() - 3.0,
                        6.0 * rng.uniform() - 3.0};
      const double closed = psi(in);
      const double grid = psi_oracle(in, psi_grid);
      const double gap = closed - grid;  // grids undershoot the max
      max_gap = std::max(max_gap, gap);
      min_gap = std::min(min_gap, gap);
      if (gap < -1e-9 || gap > 2e-3) ++r.violations;
    }
    r.worst = max_gap;
    r.pass = r.violations == 0;
    r.detail = "psi - oracle in [" + std::to_string(min_gap) + ", " +
               std::to_string(max_gap) + "]";
    out.push_back(std::move(r));
  }

  return out;
}

}  // namespace gftlab
