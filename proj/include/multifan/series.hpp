#pragma once

#include "multifan/arith.hpp"

#include <complex>
#include <vector>

namespace multifan {

/// Coefficient types used by the series code: exact rationals for
/// non-singular fans, complex doubles once roots of unity appear.
using Complex = std::complex<double>;

inline Complex to_complex(const Rat& x) { return {x.get_d(), 0.0}; }

template <class T>
T from_rat(const Rat& x);
template <>
inline Rat from_rat<Rat>(const Rat& x) { return x; }
template <>
inline Complex from_rat<Complex>(const Rat& x) { return to_complex(x); }

/// Truncated power series a_0 + a_1 s + ... + a_order s^order.
template <class T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b, int order) {
  std::vector<T> out(order + 1, T(0));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// 1/a as a power series; a[0] must be nonzero.
template <class T>
std::vector<T> series_inverse(const std::vector<T>& a, int order) {
  std::vector<T> out(order + 1, T(0));
  out[0] = T(1) / a[0];
  for (int k = 1; k <= order; ++k) {
    T acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc += a[j] * out[k - j];
    out[k] = -acc / a[0];
  }
  return out;
}

/// exp(x s) truncated at s^order.
template <class T>
std::vector<T> exp_series(const T& x, int order) {
  std::vector<T> out(order + 1, T(0));
  T term(1);
  for (int k = 0; k <= order; ++k) {
    out[k] = term;
    term = term * x / T(k + 1);
  }
  return out;
}

/// Bernoulli numbers B_0..B_order with B_1 = +1/2.
std::vector<Rat> bernoulli_plus(int order);
/// Coefficients of x / (1 - e^{-x}) up to x^order.
std::vector<Rat> todd_coefficients(int order);

/// Coefficients of x / (1 - rho e^{-x}) up to x^order. For rho = 1 this is
/// the Todd series; otherwise the constant term vanishes.
template <class T>
std::vector<T> twisted_todd(const T& rho, int order) {
  // (1 - rho e^{-x}) = (1 - rho) + rho (x - x^2/2 + ...).
  std::vector<T> den(order + 2, T(0));
  auto e = exp_series(T(-1), order + 1);
  for (int k = 0; k <= order + 1; ++k) den[k] = -rho * e[k];
  den[0] += T(1);
  if (den[0] == T(0)) {
    // Divide numerator and denominator by x.
    std::vector<T> shifted(den.begin() + 1, den.end());
    return series_inverse(shifted, order);
  }
  auto inv = series_inverse(den, order);
  std::vector<T> out(order + 1, T(0));
  for (int k = 1; k <= order; ++k) out[k] = inv[k - 1];
  return out;
}

/// Truncated one-variable Laurent series sum_{k >= lead} c_k s^k, kept up to
/// s^top.
template <class T>
struct LaurentSeries1 {
  int lead = 0;
  int top = 0;
  std::vector<T> coeffs; // coeffs[k - lead]

  LaurentSeries1() = default;
  LaurentSeries1(int lead_, int top_) : lead(lead_), top(top_), coeffs(top_ - lead_ + 1, T(0)) {}

  T at(int k) const {
    if (k < lead || k > top) return T(0);
    return coeffs[k - lead];
  }
  T& ref(int k) { return coeffs[k - lead]; }

  LaurentSeries1 operator*(const LaurentSeries1& o) const {
    LaurentSeries1 out(lead + o.lead, std::min(top + o.lead, o.top + lead));
    for (int i = lead; i <= top; ++i)
      for (int j = o.lead; j <= o.top; ++j)
        if (i + j <= out.top) out.ref(i + j) += at(i) * o.at(j);
    return out;
  }

  LaurentSeries1& operator+=(const LaurentSeries1& o) {
    const int nl = std::min(lead, o.lead), nt = std::min(top, o.top);
    LaurentSeries1 out(nl, nt);
    for (int k = nl; k <= nt; ++k) out.ref(k) = at(k) + o.at(k);
    return *this = out;
  }

  LaurentSeries1 scaled(const T& s) const {
    LaurentSeries1 out = *this;
    for (auto& c : out.coeffs) c *= s;
    return out;
  }
};

} // namespace multifan
