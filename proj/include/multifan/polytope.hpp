#pragma once

#include "multifan/fan.hpp"

#include <memory>
#include <string>
#include <vector>

namespace multifan {

/// Which version of the polytope a point is evaluated against: P itself, or
/// P_+ / P_- with every hyperplane moved outward / inward by an infinitesimal.
enum class Shift { exact, plus, minus };

Shift parse_shift(const std::string& text);
const char* to_string(Shift s);

/// a + b*eps for a positive infinitesimal eps. Only first-order terms ever
/// arise because every operation applied to these values is affine.
struct EpsRat {
  Rat a;
  Rat b;

  EpsRat() = default;
  EpsRat(Rat a_, Rat b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

  int sign() const { return a != 0 ? sgn(a) : sgn(b); }
  bool is_zero() const { return a == 0 && b == 0; }

  friend EpsRat operator+(const EpsRat& x, const EpsRat& y) { return {x.a + y.a, x.b + y.b}; }
  friend EpsRat operator-(const EpsRat& x, const EpsRat& y) { return {x.a - y.a, x.b - y.b}; }
  friend EpsRat operator*(const Rat& s, const EpsRat& x) { return {s * x.a, s * x.b}; }
  friend EpsRat operator/(const EpsRat& x, const Rat& s) { return {x.a / s, x.b / s}; }
  friend bool operator<(const EpsRat& x, const EpsRat& y) { return (y - x).sign() > 0; }
  friend bool operator==(const EpsRat& x, const EpsRat& y) { return x.a == y.a && x.b == y.b; }
};

/// A point of V* with EpsRat coordinates, stored as value and eps parts.
struct EpsVector {
  RatVector a;
  RatVector b;

  EpsVector() = default;
  explicit EpsVector(RatVector value) : a(std::move(value)), b(a.size()) {}
  EpsVector(RatVector a_, RatVector b_) : a(std::move(a_)), b(std::move(b_)) {}

  std::size_t size() const { return a.size(); }
};

EpsRat pairing(const EpsVector& u, const IntVector& v);

/// A multi-fan together with support numbers c_i; F_i = {u : <u, v_i> = c_i}.
/// The polytope side of the theory assumes a complete fan; the constructor
/// does not re-check that (see require_complete).
class MultiPolytope {
public:
  MultiPolytope(MultiFan fan, std::vector<Rat> support);

  const MultiFan& fan() const { return fan_; }
  const std::vector<Rat>& support() const { return support_; }
  const Rat& c(int i) const { return support_[i]; }
  int dim() const { return fan_.dim(); }

private:
  MultiFan fan_;
  std::vector<Rat> support_;
};

/// Throws Error(not_complete) unless the fan is complete.
void require_complete(const MultiPolytope& p);

/// Throws Error(not_primitive) unless every ray is primitive, then
/// Error(not_lattice) naming the first top cone whose vertex is not in N*.
void require_lattice(const MultiPolytope& p);

/// The vertex u_I solving <u, v_i> = c_i for i in I.
RatVector vertex(const MultiPolytope& p, const Face& top);

/// DH_P at u, evaluated against P, P_+ or P_- with generic direction v.
class DhEvaluator {
public:
  DhEvaluator(const MultiPolytope& p, const RatVector& v);

  std::int64_t operator()(const RatVector& u, Shift shift) const;
  /// Fully symbolic form: support numbers and point both carry eps parts.
  std::int64_t eval(const std::vector<EpsRat>& support, const EpsVector& u) const;

private:
  struct Cone {
    std::vector<int> labels;
    std::vector<int> sigma;
    std::int64_t coefficient; // (-1)^I w(I)
  };
  const MultiPolytope* p_;
  std::vector<Cone> cones_;
};

std::int64_t dh_eval(const MultiPolytope& p, const RatVector& u, Shift shift, const RatVector& v);

/// Support numbers of P, P_+ or P_- as EpsRat values.
std::vector<EpsRat> shifted_support(const MultiPolytope& p, Shift shift);

/// The multi-polytope P_i on F_i, with coordinates on the annihilator of v_i.
struct ProjectedPolytope {
  MultiPolytope polytope;
  std::vector<int> labels; // new label -> old label
  QuotientProjection map;
  RatVector base;          // f_i = (c_i / |v_i|^2) v_i

  /// Quotient coordinates of u - f_i for u on F_i.
  RatVector to_quotient(const RatVector& u) const;
};

/// Throws Error(unsupported) for n = 1 (the result would be 0-dimensional).
ProjectedPolytope project_polytope(const MultiPolytope& p, int i);

/// Winding number by ray shooting. The tree of projected polytopes is built
/// once per evaluator; evaluation itself only reads it.
class WindingNumber {
public:
  WindingNumber(const MultiPolytope& p, Shift shift);
  ~WindingNumber();
  WindingNumber(WindingNumber&&) noexcept;

  std::int64_t operator()(const RatVector& u, Rng& rng) const;

  struct Node;

private:
  std::unique_ptr<Node> root_;
};

std::int64_t wn_eval(const MultiPolytope& p, const RatVector& u, Shift shift, Rng& rng);

/// The jump of DH across the hyperplane F_wall between u_alpha and u_beta
/// matches the projected DH at the crossing point.
struct WallCrossing {
  std::int64_t lhs = 0; // DH(u_alpha) - DH(u_beta)
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

WallCrossing wall_crossing(const MultiPolytope& p, const RatVector& u_alpha, const RatVector& u_beta,
                           int wall, Rng& rng);
bool wall_crossing_check(const MultiPolytope& p, const RatVector& u_alpha, const RatVector& u_beta,
                         int wall, Rng& rng);

} // namespace multifan
