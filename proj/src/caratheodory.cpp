#include "gftlab/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gftlab {

namespace {
constexpr double kUnitTol = 1e-12;
}

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

void KernelMixture::validate() const {
  if (points.empty() || points.size() != weights.size())
    throw std::invalid_argument("kernel mixture: empty or mismatched points/weights");
  double total = 0.0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (std::abs(std::abs(points[j]) - 1.0) > kUnitTol)
      throw std::invalid_argument("kernel mixture: point off the unit circle");
    if (weights[j] < 0.0)
      throw std::invalid_argument("kernel mixture: negative weight");
    total += weights[j];
  }
  if (std::abs(total - 1.0) > kUnitTol)
    throw std::invalid_argument("kernel mixture: weights do not sum to 1");
}

void TauTriple::validate() const {
  if (std::abs(tau1) > 1.0 + kUnitTol || std::abs(tau2) > 1.0 + kUnitTol ||
      std::abs(tau3) > 1.0 + kUnitTol)
    throw std::invalid_argument("tau triple outside the closed unit disk");
}

TruncatedSeries kernel_coeffs(const KernelMixture& spec, int n_max) {
  spec.validate();
  TruncatedSeries p(static_cast<std::size_t>(n_max));
  p.coeffs[0] = 1.0;
  std::vector<cplx> pow(spec.count(), cplx{1.0});
  for (int n = 1; n <= n_max; ++n) {
    cplx cn = 0.0;
    for (std::size_t j = 0; j < spec.count(); ++j) {
      pow[j] *= spec.points[j];
      cn += spec.weights[j] * pow[j];
    }
    p.coeffs[static_cast<std::size_t>(n)] = 2.0 * cn;
  }
  return p;
}

cplx kernel_eval(const KernelMixture& spec, cplx z) {
  cplx acc = 0.0;
  for (std::size_t j = 0; j < spec.count(); ++j) {
    const cplx xz = spec.points[j] * z;
    acc += spec.weights[j] * (1.0 + xz) / (1.0 - xz);
  }
  return acc;
}

std::array<cplx, 3> tau_coeffs(const TauTriple& spec) {
  spec.validate();
  const cplx t1 = spec.tau1, t2 = spec.tau2, t3 = spec.tau3;
  const double r1 = 1.0 - std::norm(t1);
  const double r2 = 1.0 - std::norm(t2);
  const cplx c1 = 2.0 * t1;
  const cplx c2 = 2.0 * t1 * t1 + 2.0 * r1 * t2;
  const cplx c3 = 2.0 * t1 * t1 * t1 + 4.0 * r1 * t1 * t2 -
                  2.0 * r1 * std::conj(t1) * t2 * t2 + 2.0 * r1 * r2 * t3;
  return {c1, c2, c3};
}

TruncatedSeries tau_function(const TauTriple& spec, int n_max) {
  spec.validate();
  const cplx t1 = spec.tau1, t2 = spec.tau2, t3 = spec.tau3;
  const auto on_circle = [](cplx t) { return std::abs(t) >= 1.0 - kUnitTol; };

  TruncatedSeries num(static_cast<std::size_t>(n_max)),
      den(static_cast<std::size_t>(n_max));
  num.coeffs[0] = den.coeffs[0] = 1.0;
  if (on_circle(t1)) {
    num.coeffs[1] = t1;
    den.coeffs[1] = -t1;
  } else if (on_circle(t2)) {
    num.coeffs[1] = std::conj(t1) * t2 + t1;
    num.coeffs[2] = t2;
    den.coeffs[1] = std::conj(t1) * t2 - t1;
    den.coeffs[2] = -t2;
  } else if (on_circle(t3)) {
    num.coeffs[1] = std::conj(t2) * t3 + std::conj(t1) * t2 + t1;
    num.coeffs[2] = std::conj(t1) * t3 + t1 * std::conj(t2) * t3 + t2;
    num.coeffs[3] = t3;
    den.coeffs[1] = std::conj(t2) * t3 + std::conj(t1) * t2 - t1;
    den.coeffs[2] = std::conj(t1) * t3 - t1 * std::conj(t2) * t3 - t2;
    den.coeffs[3] = -t3;
  } else {
    throw std::invalid_argument(
        "tau triple lies in no uniqueness regime (interior triples pin only c1..c3)");
  }
  return div(num, den);
}

TruncatedSeries schwarz_from_p(const TruncatedSeries& p) {
  if (p.coeffs[0] != cplx{1.0})
    throw std::invalid_argument("schwarz_from_p requires p(0) = 1");
  TruncatedSeries num = p, den = p;
  num.coeffs[0] = 0.0;
  den.coeffs[0] = 2.0;
  TruncatedSeries w = div(num, den);
  w.coeffs[0] = 0.0;  // exact by construction
  return w;
}

KernelMixture sample_mixture(int m, std::uint64_t rng_seed) {
  if (m < 1 || m > 6) throw std::invalid_argument("mixture size must be in 1..6");
  SplitMix64 rng(rng_seed);
  KernelMixture mix;
  mix.points.resize(static_cast<std::size_t>(m));
  mix.weights.resize(static_cast<std::size_t>(m));
  for (auto& x : mix.points) {
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    x = std::polar(1.0, theta);
  }
  double total = 0.0;
  for (auto& w : mix.weights) {
    w = -std::log1p(-rng.uniform());  // Exp(1); normalized draws are Dirichlet(1)
    total += w;
  }
  for (auto& w : mix.weights) w /= total;
  return mix;
}

}  // namespace gftlab
