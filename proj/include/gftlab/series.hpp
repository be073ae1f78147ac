#ifndef GFTLAB_SERIES_HPP
#define GFTLAB_SERIES_HPP

#include <complex>
#include <vector>

namespace gftlab {

using cplx = std::complex<double>;

// Power series truncated at z^N: coeffs[k] holds the coefficient of z^k,
// coeffs.size() == N+1. All operations stay at the order of their inputs.
struct TruncatedSeries {
  std::vector<cplx> coeffs;

  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t order) : coeffs(order + 1, cplx{0.0}) {}
  TruncatedSeries(std::initializer_list<cplx> c) : coeffs(c) {}

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  const cplx& operator[](std::size_t k) const { return coeffs[k]; }
  cplx& operator[](std::size_t k) { return coeffs[k]; }

  // zero series of the given order with a single monomial c*z^k
  static TruncatedSeries monomial(int order, int k, cplx c = 1.0);
  static TruncatedSeries constant(int order, cplx c);
};

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries scale(const TruncatedSeries& s, cplx factor);

// Cauchy product truncated at the common order.
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);

// Long division: q with mul(q, t) == s up to the truncation order.
// Requires t.coeffs[0] != 0.
TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& t);

// outer(inner(z)) truncated; requires inner.coeffs[0] == 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// exp of a series via E' = s'E, E(0) = exp(s0).
TruncatedSeries exp_series(const TruncatedSeries& s);

// log of a series via L' = s'/s, principal branch at the constant term.
// Requires s.coeffs[0] != 0.
TruncatedSeries log_series(const TruncatedSeries& s);

// Term-wise derivative, shifted down one index and zero-padded to keep the order.
TruncatedSeries derivative(const TruncatedSeries& s);

// Largest coefficient-wise |difference|; series must have equal orders.
double sup_distance(const TruncatedSeries& s, const TruncatedSeries& t);

}  // namespace gftlab

#endif
