#include "gftlab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace gftlab {

LogCoeffs log_coeffs(const ClassMember& member, int m) {
  const int order = member.a.order();
  if (order < m + 1)
    throw std::invalid_argument("member truncation order too small for requested gammas");
  TruncatedSeries f_over_z(static_cast<std::size_t>(order - 1));
  for (int k = 1; k <= order; ++k)
    f_over_z.coeffs[static_cast<std::size_t>(k - 1)] = member.a.coeffs[static_cast<std::size_t>(k)];
  const TruncatedSeries lg = log_series(f_over_z);
  LogCoeffs out;
  out.gamma.resize(static_cast<std::size_t>(m));
  for (int n = 1; n <= m; ++n)
    out.gamma[static_cast<std::size_t>(n - 1)] = 0.5 * lg.coeffs[static_cast<std::size_t>(n)];
  return out;
}

std::array<cplx, 4> log_coeffs_closed(const std::array<cplx, 4>& a) {
  const cplx a2 = a[0], a3 = a[1], a4 = a[2], a5 = a[3];
  const cplx g1 = 0.5 * a2;
  const cplx g2 = 0.5 * (a3 - 0.5 * a2 * a2);
  const cplx g3 = 0.5 * (a4 - a2 * a3 + a2 * a2 * a2 / 3.0);
  const cplx g4 = 0.5 * (a5 - a2 * a4 + a2 * a2 * a3 - 0.5 * a3 * a3 -
                         0.25 * a2 * a2 * a2 * a2);
  return {g1, g2, g3, g4};
}

namespace {

// Determinant by cofactor expansion for q <= 3, partial-pivot LU above.
cplx det(std::vector<cplx> m, int q) {
  auto at = [&](int i, int j) -> cplx& { return m[static_cast<std::size_t>(i * q + j)]; };
  if (q == 1) return at(0, 0);
  if (q == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (q == 3)
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  cplx result = 1.0;
  for (int col = 0; col < q; ++col) {
    int pivot = col;
    for (int r = col + 1; r < q; ++r)
      if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
    if (at(pivot, col) == cplx{0.0}) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < q; ++j) std::swap(at(pivot, j), at(col, j));
      result = -result;
    }
    result *= at(col, col);
    for (int r = col + 1; r < q; ++r) {
      const cplx factor = at(r, col) / at(col, col);
      for (int j = col; j < q; ++j) at(r, j) -= factor * at(col, j);
    }
  }
  return result;
}

}  // namespace

DeterminantValue hankel(const LogCoeffs& g, int q, int n) {
  if (q < 1 || n < 1) throw std::invalid_argument("hankel requires q >= 1, n >= 1");
  if (g.count() < n + 2 * q - 2)
    throw std::invalid_argument("insufficient log coefficients for hankel determinant");
  std::vector<cplx> m(static_cast<std::size_t>(q * q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      m[static_cast<std::size_t>(i * q + j)] = g.at(n + i + j);
  return DeterminantValue{DetKind::Hankel, q, n, det(std::move(m), q)};
}

DeterminantValue toeplitz(const LogCoeffs& g, int q, int n) {
  if (q < 1 || n < 1) throw std::invalid_argument("toeplitz requires q >= 1, n >= 1");
  if (g.count() < n + q - 1)
    throw std::invalid_argument("insufficient log coefficients for toeplitz determinant");
  std::vector<cplx> m(static_cast<std::size_t>(q * q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      m[static_cast<std::size_t>(i * q + j)] = g.at(n + std::abs(i - j));
  return DeterminantValue{DetKind::Toeplitz, q, n, det(std::move(m), q)};
}

cplx hankel21_closed_c(const ClassTag& tag, const std::array<cplx, 3>& c) {
  tag.validate();
  const double al = tag.alpha;
  const cplx c1 = c[0], c2 = c[1], c3 = c[2];
  const cplx c1p2 = c1 * c1, c1p4 = c1p2 * c1p2;
  if (tag.kind == ClassKind::StarlikeExp)
    return (al * al / 9216.0) *
           (192.0 * c1 * c3 - 144.0 * c2 * c2 - 24.0 * (2.0 - al) * c1p2 * c2 +
            (-al * al - 12.0 * al + 12.0) * c1p4);
  return (al * al / 36864.0) *
         (96.0 * c1 * c3 - 64.0 * c2 * c2 - 8.0 * (4.0 - 3.0 * al) * c1p2 * c2 +
          (al * al - 12.0 * al + 8.0) * c1p4);
}

cplx hankel21_closed_tau(const ClassTag& tag, double tau1, cplx tau2, cplx tau3) {
  tag.validate();
  if (tau1 < 0.0 || tau1 > 1.0)
    throw std::invalid_argument("hankel21_closed_tau requires tau1 in [0, 1]");
  const double al = tag.alpha;
  const double t2sq = 1.0 - std::norm(tau2);
  const double r = 1.0 - tau1 * tau1;
  const double t1p2 = tau1 * tau1, t1p4 = t1p2 * t1p2;
  if (tag.kind == ClassKind::StarlikeExp)
    return (al * al / 576.0) *
           (-al * al * t1p4 + 12.0 * al * r * t1p2 * tau2 +
            48.0 * r * t2sq * tau1 * tau3 - 12.0 * r * (3.0 + t1p2) * tau2 * tau2);
  return (al * al / 2304.0) *
         (al * al * t1p4 + 12.0 * al * r * t1p2 * tau2 +
          24.0 * r * t2sq * tau1 * tau3 - 8.0 * r * (2.0 + t1p2) * tau2 * tau2);
}

cplx toeplitz21_closed(const ClassTag& tag, cplx c1, cplx c2) {
  tag.validate();
  const double al = tag.alpha;
  const cplx c1p2 = c1 * c1, c1p4 = c1p2 * c1p2;
  if (tag.kind == ClassKind::StarlikeExp)
    return (al * al / 1024.0) *
           (64.0 * c1p2 - 16.0 * c2 * c2 + 8.0 * (2.0 - al) * c1p2 * c2 -
            (al * al - 4.0 * al + 4.0) * c1p4);
  return (al * al / 36864.0) *
         (576.0 * c1p2 - 64.0 * c2 * c2 + 16.0 * (4.0 - 3.0 * al) * c1p2 * c2 -
          (9.0 * al * al - 24.0 * al + 16.0) * c1p4);
}

}  // namespace gftlab
