#include "gftlab/classes.hpp"

#include <stdexcept>

namespace gftlab {

void ClassTag::validate() const {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("alpha must lie in (0, 1]");
}

namespace {

// g = exp(alpha * omega) as a series of the requested order.
TruncatedSeries growth_factor(double alpha, const TruncatedSeries& omega, int order) {
  if (omega.coeffs[0] != cplx{0.0})
    throw std::invalid_argument("build_member requires omega(0) = 0");
  if (omega.order() < order)
    throw std::invalid_argument("omega order too small for requested expansion");
  TruncatedSeries s(static_cast<std::size_t>(order));
  for (int k = 0; k <= order; ++k)
    s.coeffs[static_cast<std::size_t>(k)] = alpha * omega.coeffs[static_cast<std::size_t>(k)];
  return exp_series(s);
}

}  // namespace

ClassMember build_member(const ClassTag& tag, const TruncatedSeries& omega, int n_max) {
  tag.validate();
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const TruncatedSeries g = growth_factor(tag.alpha, omega, n_max);

  TruncatedSeries a(static_cast<std::size_t>(n_max));
  if (tag.kind == ClassKind::StarlikeExp) {
    // z f' = f g, g0 = 1: (n-1) a_n = sum_{k=1}^{n-1} a_k g_{n-k}
    a.coeffs[1] = 1.0;
    for (int n = 2; n <= n_max; ++n) {
      cplx acc = 0.0;
      for (int k = 1; k < n; ++k)
        acc += a.coeffs[static_cast<std::size_t>(k)] * g.coeffs[static_cast<std::size_t>(n - k)];
      a.coeffs[static_cast<std::size_t>(n)] = acc / static_cast<double>(n - 1);
    }
  } else {
    // h = f': z h' = h (g - 1), h0 = 1: n h_n = sum_{k=0}^{n-1} h_k g_{n-k};
    // then a_n = h_{n-1} / n.
    std::vector<cplx> h(static_cast<std::size_t>(n_max), cplx{0.0});
    h[0] = 1.0;
    for (int n = 1; n < n_max; ++n) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += h[static_cast<std::size_t>(k)] * g.coeffs[static_cast<std::size_t>(n - k)];
      h[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
    }
    for (int n = 1; n <= n_max; ++n)
      a.coeffs[static_cast<std::size_t>(n)] = h[static_cast<std::size_t>(n - 1)] / static_cast<double>(n);
  }

  TruncatedSeries om(static_cast<std::size_t>(n_max));
  for (int k = 0; k <= n_max; ++k)
    om.coeffs[static_cast<std::size_t>(k)] =
        (k <= omega.order()) ? omega.coeffs[static_cast<std::size_t>(k)] : cplx{0.0};
  return ClassMember{tag, om, a};
}

std::array<cplx, 4> closed_form_a(const ClassTag& tag, const std::array<cplx, 4>& c) {
  tag.validate();
  const double al = tag.alpha;
  const cplx c1 = c[0], c2 = c[1], c3 = c[2], c4 = c[3];
  const cplx c1p2 = c1 * c1, c1p3 = c1p2 * c1, c1p4 = c1p2 * c1p2;
  const double q3 = 17.0 * al * al - 30.0 * al + 12.0;
  const double q4a = 10.0 * al * al - 20.0 * al + 9.0;
  const double q4b = 19.0 * al * al * al - 60.0 * al * al + 60.0 * al - 18.0;
  if (tag.kind == ClassKind::StarlikeExp) {
    const cplx a2 = (al / 2.0) * c1;
    const cplx a3 = (al / 4.0) * c2 + (al / 16.0) * (3.0 * al - 2.0) * c1p2;
    const cplx a4 = (al / 6.0) * c3 + (al / 24.0) * (5.0 * al - 4.0) * c1 * c2 +
                    (al / 288.0) * q3 * c1p3;
    const cplx a5 = (al / 8.0) * c4 + (al / 16.0) * (al - 1.0) * c2 * c2 +
                    (al / 48.0) * (7.0 * al - 6.0) * c1 * c3 +
                    (al / 96.0) * q4a * c1p2 * c2 + (al / 1152.0) * q4b * c1p4;
    return {a2, a3, a4, a5};
  }
  const cplx a2 = (al / 4.0) * c1;
  const cplx a3 = (al / 12.0) * c2 + (al / 48.0) * (3.0 * al - 2.0) * c1p2;
  const cplx a4 = (al / 24.0) * c3 + (al / 96.0) * (5.0 * al - 4.0) * c1 * c2 +
                  (al / 1152.0) * q3 * c1p3;
  const cplx a5 = (al / 40.0) * c4 + (al / 80.0) * (al - 1.0) * c2 * c2 +
                  (al / 240.0) * (7.0 * al - 6.0) * c1 * c3 +
                  (al / 480.0) * q4a * c1p2 * c2 + (al / 5760.0) * q4b * c1p4;
  return {a2, a3, a4, a5};
}

ClassMember extremal(int k, double alpha, int n_max) {
  if (k < 1 || k > 8) throw std::invalid_argument("extremal index must be in 1..8");
  const bool convex = k > 4;
  const int power = convex ? k - 4 : k;
  const ClassTag tag{convex ? ClassKind::ConvexExp : ClassKind::StarlikeExp, alpha};
  return build_member(tag, TruncatedSeries::monomial(n_max, power), n_max);
}

double subordination_residual(const ClassMember& member) {
  const int n = member.a.order();
  const TruncatedSeries g = exp_series(scale(member.omega, member.tag.alpha));
  if (member.tag.kind == ClassKind::StarlikeExp) {
    // compare z f' / f with g; divide out the leading z first
    TruncatedSeries zfp(static_cast<std::size_t>(n)), f_over_z(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      zfp.coeffs[static_cast<std::size_t>(k - 1)] =
          static_cast<double>(k) * member.a.coeffs[static_cast<std::size_t>(k)];
      f_over_z.coeffs[static_cast<std::size_t>(k - 1)] = member.a.coeffs[static_cast<std::size_t>(k)];
    }
    TruncatedSeries lhs = div(zfp, f_over_z);
    // top coefficient of each ratio input is beyond the reliable range
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
      worst = std::max(worst, std::abs(lhs.coeffs[static_cast<std::size_t>(k)] -
                                       g.coeffs[static_cast<std::size_t>(k)]));
    return worst;
  }
  // 1 + z f''/f' against g: with h = f', compare z h' / h with g - 1.
  TruncatedSeries h(static_cast<std::size_t>(n - 1)), zhp(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n; ++k)
    h.coeffs[static_cast<std::size_t>(k - 1)] =
        static_cast<double>(k) * member.a.coeffs[static_cast<std::size_t>(k)];
  for (int k = 1; k <= n - 1; ++k)
    zhp.coeffs[static_cast<std::size_t>(k)] = static_cast<double>(k) * h.coeffs[static_cast<std::size_t>(k)];
  TruncatedSeries lhs = div(zhp, h);
  double worst = 0.0;
  for (int k = 0; k <= n - 1; ++k) {
    const cplx rhs = (k == 0) ? g.coeffs[0] - 1.0 : g.coeffs[static_cast<std::size_t>(k)];
    worst = std::max(worst, std::abs(lhs.coeffs[static_cast<std::size_t>(k)] - rhs));
  }
  return worst;
}

}  // namespace gftlab
