#pragma once

#include "multifan/polytope.hpp"
#include "multifan/series.hpp"

#include <map>
#include <vector>

namespace multifan {

/// Exponent vector of a monomial in x_1..x_d (or h_1..h_d).
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
/// Labels with a positive exponent.
Face support_of(const Monomial& m);

/// Sparse polynomial with coefficients in T. Zero coefficients are dropped.
template <class T>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(int vars) : vars_(vars) {}

  static Polynomial constant(int vars, const T& c);
  static Polynomial variable(int vars, int i, const T& c = T(1));
  static Polynomial linear(const std::vector<T>& coeffs);

  int vars() const { return vars_; }
  const std::map<Monomial, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int k) const;
  T coefficient(const Monomial& m) const;

  void add(const Monomial& m, const T& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial scaled(const T& s) const;
  /// Product, dropping terms of degree above max_degree (-1 keeps all).
  Polynomial times(const Polynomial& o, int max_degree = -1) const;
  Polynomial operator*(const Polynomial& o) const { return times(o); }
  Polynomial power(int k, int max_degree = -1) const;
  Polynomial homogeneous_part(int k) const;
  Polynomial truncated(int max_degree) const;
  T evaluate(const std::vector<T>& point) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  int vars_ = 0;
  std::map<Monomial, T> terms_;
};

/// An element of the face ring Z[x_1..x_d]/(x_I : I not in Sigma), always
/// stored reduced. The same representation serves for H*(Delta); the
/// quotient by pullbacks only matters at integration time, where it is
/// automatic.
using FaceRingElement = Polynomial<Rat>;
using ComplexFaceRingElement = Polynomial<Complex>;
/// A face ring element truncated at degree n.
template <class T>
using GradedSeries = Polynomial<T>;

template <class T>
Polynomial<T> reduce(const MultiFan& fan, const Polynomial<T>& poly);

/// pi^*(u) = sum_i <u, v_i> x_i.
FaceRingElement pullback(const MultiFan& fan, const RatVector& u);

/// iota_I^*: x_i -> u_i^I for i in I, 0 otherwise. The result is a
/// polynomial in the n coordinates of V*.
Polynomial<Rat> restrict(const MultiFan& fan, const FaceRingElement& elem, const Face& top);

/// The index map pi_! evaluated at a fixed rational point t with
/// <u_i^I, t> != 0 for every top cone and label.
class IndexMap {
public:
  /// Uses a generic point chosen with a fixed seed.
  explicit IndexMap(const MultiFan& fan);
  IndexMap(const MultiFan& fan, const RatVector& point);

  const RatVector& point() const { return point_; }

  /// sum_I w(I) iota_I^*(x^m)(t) / (|G_I| prod_i <u_i^I, t>); any degree.
  Rat value(const Monomial& m) const;
  template <class T>
  T apply(const Polynomial<T>& elem) const;

private:
  struct Cone {
    Face face;
    std::int64_t weight;
    std::vector<Rat> forms; // <u_i^I, t>
    Rat denominator;
  };
  int rays_;
  RatVector point_;
  std::vector<Cone> cones_;
};

/// pi_!(elem) for elem homogeneous of degree n; throws Error(unsupported)
/// for other degrees.
template <class T>
T index(const MultiFan& fan, const Polynomial<T>& elem);

/// Integral over Delta: the index of the degree n component.
template <class T>
T integral(const MultiFan& fan, const Polynomial<T>& elem);

FaceRingElement c1T(const MultiPolytope& p);
FaceRingElement c1(const MultiPolytope& p);

/// (1/n!) * integral(c1(P)^n).
Rat volume(const MultiPolytope& p);

/// Tolerances for the floating-point (singular) paths.
struct Tolerance {
  double pole = 1e-9;
  double integrality = 1e-6;
};

/// The group G_Delta as the set of distinct phase vectors (rho_1..rho_d),
/// identity first.
std::vector<std::vector<UnityRoot>> todd_group(const MultiFan& fan);

/// sum_{g in G_Delta} prod_i x_i / (1 - rho_i(g) e^{-x_i}), truncated at
/// degree n and reduced. T = Rat requires a non-singular fan and throws
/// Error(unsupported) otherwise.
template <class T>
GradedSeries<T> todd_class(const MultiFan& fan);
/// The equivariant class has the same representation.
template <class T>
GradedSeries<T> equivariant_todd_class(const MultiFan& fan);

/// sum_k c1^k / k! truncated at degree n.
template <class T>
GradedSeries<T> exp_c1(const MultiPolytope& p);

/// Lattice-point count through the localized Todd formula along a generic
/// direction. Exact for non-singular fans.
Int todd_count(const MultiPolytope& p, const Tolerance& tol = {});

/// vol(P_h) as a polynomial in h_1..h_d.
Polynomial<Rat> vol_polynomial_h(const MultiPolytope& p);

/// The Todd operator in d/dh applied to vol(P_h), evaluated at h = 0.
Int kp_count(const MultiPolytope& p, const Tolerance& tol = {});

} // namespace multifan
