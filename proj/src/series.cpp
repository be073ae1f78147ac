#include "gftlab/series.hpp"

#include <cmath>
#include <stdexcept>

namespace gftlab {

namespace {

void require_equal_orders(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.coeffs.size() != t.coeffs.size())
    throw std::invalid_argument("series order mismatch");
}

}  // namespace

TruncatedSeries TruncatedSeries::monomial(int order, int k, cplx c) {
  TruncatedSeries r(static_cast<std::size_t>(order));
  if (k >= 0 && k <= order) r.coeffs[static_cast<std::size_t>(k)] = c;
  return r;
}

TruncatedSeries TruncatedSeries::constant(int order, cplx c) {
  return monomial(order, 0, c);
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_equal_orders(s, t);
  TruncatedSeries r = s;
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += t.coeffs[k];
  return r;
}

TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_equal_orders(s, t);
  TruncatedSeries r = s;
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= t.coeffs[k];
  return r;
}

TruncatedSeries scale(const TruncatedSeries& s, cplx factor) {
  TruncatedSeries r = s;
  for (auto& c : r.coeffs) c *= factor;
  return r;
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_equal_orders(s, t);
  const std::size_t n = s.coeffs.size();
  TruncatedSeries r(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.coeffs[i] == cplx{0.0}) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      r.coeffs[i + j] += s.coeffs[i] * t.coeffs[j];
  }
  return r;
}

TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_equal_orders(s, t);
  if (t.coeffs[0] == cplx{0.0})
    throw std::domain_error("series division by series with zero constant term");
  const std::size_t n = s.coeffs.size();
  TruncatedSeries q(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = s.coeffs[k];
    for (std::size_t j = 0; j < k; ++j) acc -= q.coeffs[j] * t.coeffs[k - j];
    q.coeffs[k] = acc / t.coeffs[0];
  }
  return q;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner.coeffs[0] != cplx{0.0})
    throw std::invalid_argument("compose requires inner series vanishing at 0");
  const int n = inner.order();
  // Horner in the series algebra.
  TruncatedSeries r = TruncatedSeries::constant(n, 0.0);
  for (int k = outer.order(); k >= 0; --k) {
    r = mul(r, inner);
    r.coeffs[0] += outer.coeffs[static_cast<std::size_t>(k)];
  }
  return r;
}

TruncatedSeries exp_series(const TruncatedSeries& s) {
  const std::size_t n = s.coeffs.size();
  TruncatedSeries e(n - 1);
  e.coeffs[0] = std::exp(s.coeffs[0]);
  for (std::size_t k = 1; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j)
      acc += static_cast<double>(j) * s.coeffs[j] * e.coeffs[k - j];
    e.coeffs[k] = acc / static_cast<double>(k);
  }
  return e;
}

TruncatedSeries log_series(const TruncatedSeries& s) {
  if (s.coeffs[0] == cplx{0.0})
    throw std::domain_error("series log of series with zero constant term");
  const std::size_t n = s.coeffs.size();
  // L' = s'/s; the padded top coefficient of s' only pollutes index n-1 of the
  // quotient, which L does not consume.
  TruncatedSeries u = div(derivative(s), s);
  TruncatedSeries l(n - 1);
  l.coeffs[0] = std::log(s.coeffs[0]);
  for (std::size_t k = 1; k < n; ++k)
    l.coeffs[k] = u.coeffs[k - 1] / static_cast<double>(k);
  return l;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  TruncatedSeries r(s.coeffs.size() - 1);
  for (std::size_t k = 1; k < s.coeffs.size(); ++k)
    r.coeffs[k - 1] = static_cast<double>(k) * s.coeffs[k];
  return r;
}

double sup_distance(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_equal_orders(s, t);
  double worst = 0.0;
  for (std::size_t k = 0; k < s.coeffs.size(); ++k)
    worst = std::max(worst, std::abs(s.coeffs[k] - t.coeffs[k]));
  return worst;
}

}  // namespace gftlab
