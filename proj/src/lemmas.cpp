#include "gftlab/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gftlab {

double ma_minda_bound(double v) {
  if (v < 0.0) return -4.0 * v + 2.0;
  if (v <= 1.0) return 2.0;
  return 4.0 * v - 2.0;
}

bool ali_criterion_applicable(double B, double D) {
  return 0.0 <= B && B <= 1.0 && B * (2.0 * B - 1.0) <= D && D <= B;
}

double rv_criterion_combination(double beta, double gamma, double delta, double xi) {
  const double t1 = beta * gamma - 2.0 * delta;
  const double t2 = beta * (xi + beta) - gamma;
  const double t3 = gamma - 2.0 * beta * xi;
  return 8.0 * xi * (1.0 - xi) * (t1 * t1 + t2 * t2) +
         beta * (1.0 - beta) * t3 * t3 -
         4.0 * beta * beta * (1.0 - beta) * (1.0 - beta) * xi * (1.0 - xi);
}

bool rv_criterion_applicable(double beta, double gamma, double delta, double xi) {
  if (!(beta > 0.0 && beta < 1.0 && xi > 0.0 && xi < 1.0)) return false;
  return rv_criterion_combination(beta, gamma, delta, xi) <= 0.0;
}

namespace {

constexpr double kTieEps = 1e-12;

double psi_r_part(double a, double b, double c, double A, double B, double C) {
  const double lhs1 = c * (b + 4.0 * a);
  const double lhs2 = a * b;
  const double branch3 = (c + a) * std::sqrt(1.0 - B * B / (4.0 * A * C));
  double best = -1.0;
  if (lhs1 <= lhs2 + kTieEps) best = std::max(best, a + b - c);
  if (lhs2 <= c * (b - 4.0 * a) + kTieEps) best = std::max(best, -a + b + c);
  if (lhs1 > lhs2 - kTieEps && lhs2 > c * (b - 4.0 * a) - kTieEps)
    best = std::max(best, branch3);
  return best;
}

}  // namespace

double psi(const PsiInput& in) {
  const double A = in.A, B = in.B, C = in.C;
  const double a = std::abs(A), b = std::abs(B), c = std::abs(C);
  // b^2/(4(1-c)) with the 0/0 corner (b = 0, c = 1) read as its limit 0; the
  // branch conditions force b < 2(1-c), so the quotient stays bounded
  const auto peak_term = [&] { return b == 0.0 ? 0.0 : b * b / (4.0 * (1.0 - c)); };
  const bool peak_ok = b == 0.0 || c < 1.0;

  if (A * C >= 0.0) {
    const double gap = b - 2.0 * (1.0 - c);
    double best = -1.0;
    if (gap >= -kTieEps) best = std::max(best, a + b + c);
    if (gap <= kTieEps && peak_ok) best = std::max(best, 1.0 + a + peak_term());
    return best;
  }

  // A*C < 0 (both nonzero)
  const double t = -4.0 * A * C * (1.0 / (C * C) - 1.0);
  double best = -1.0;
  bool decided = false;
  if (t <= b * b + kTieEps && b < 2.0 * (1.0 - c) + kTieEps && peak_ok) {
    best = std::max(best, 1.0 - a + peak_term());
    decided = true;
  }
  const double lim = std::min(4.0 * (1.0 + c) * (1.0 + c), t);
  if (b * b < lim + kTieEps) {
    best = std::max(best, 1.0 + a + b * b / (4.0 * (1.0 + c)));
    decided = true;
  }
  const bool near_boundary = std::abs(t - b * b) <= kTieEps ||
                             std::abs(b * b - lim) <= kTieEps ||
                             std::abs(b - 2.0 * (1.0 - c)) <= kTieEps;
  if (!decided || near_boundary) best = std::max(best, psi_r_part(a, b, c, A, B, C));
  return best;
}

double psi_oracle(const PsiInput& in, int grid_n) {
  if (grid_n < 64) throw std::invalid_argument("psi_oracle requires grid_n >= 64");
  const cplx A = in.A, B = in.B, C = in.C;
  const auto value = [&](cplx z, double rsq) {
    return std::abs(A + (B + C * z) * z) + 1.0 - rsq;
  };

  const int nr = grid_n;
  const int nt = 4 * grid_n;
  const double dr = 1.0 / static_cast<double>(nr - 1);
  const double dt = 2.0 * std::numbers::pi / static_cast<double>(nt);
  std::vector<cplx> circle(static_cast<std::size_t>(nt));
  for (int j = 0; j < nt; ++j)
    circle[static_cast<std::size_t>(j)] = std::polar(1.0, static_cast<double>(j) * dt);

  double best = -1.0, best_r = 0.0, best_t = 0.0;
  for (int i = 0; i < nr; ++i) {
    const double r = static_cast<double>(i) * dr;
    const double rsq = r * r;
    for (int j = 0; j < nt; ++j) {
      const double v = value(r * circle[static_cast<std::size_t>(j)], rsq);
      if (v > best) {
        best = v;
        best_r = r;
        best_t = static_cast<double>(j) * dt;
      }
    }
  }

  // one refinement pass over the winning cell's neighborhood
  const int sub = 32;
  for (int i = -sub; i <= sub; ++i) {
    const double r = std::clamp(best_r + static_cast<double>(i) * dr / sub, 0.0, 1.0);
    for (int j = -sub; j <= sub; ++j) {
      const double theta = best_t + static_cast<double>(j) * dt / sub;
      best = std::max(best, value(std::polar(r, theta), r * r));
    }
  }
  return best;
}

}  // namespace gftlab
