#pragma once

#include "multifan/arith.hpp"

#include <complex>
#include <vector>

namespace multifan {

/// <u, v> for u in V* and v in N (or N_R).
Rat pairing(const RatVector& u, const IntVector& v);
Rat pairing(const RatVector& u, const RatVector& v);

/// Dual basis {u_i} of n independent lattice vectors: <u_i, v_j> = delta_ij.
std::vector<RatVector> dual_basis(const std::vector<IntVector>& rays);

/// Smith normal form L * A * R = D of an m x k integer matrix.
struct SmithForm {
  IntMatrix left;       // L, m x m unimodular
  IntMatrix left_inv;   // L^{-1}
  IntMatrix right;      // R, k x k unimodular
  IntVector diagonal;   // min(m, k) entries, each dividing the next
};

SmithForm smith_normal_form(const IntMatrix& a);

/// The finite group N / N_I for n independent vectors spanning N_I.
struct FiniteQuotient {
  Int order;
  IntVector invariant_factors;
  std::vector<IntVector> representatives; // one lattice point per class
};

FiniteQuotient quotient_group(const std::vector<IntVector>& rays);

/// True iff a - b lies in the lattice spanned by `rays` (n independent).
bool same_class(const IntVector& a, const IntVector& b,
                const std::vector<IntVector>& rays);

/// A root of unity exp(2 pi i * phase) with exact phase in [0, 1).
class UnityRoot {
public:
  UnityRoot() = default;
  explicit UnityRoot(const Rat& phase) : phase_(frac(phase)) {}

  const Rat& phase() const { return phase_; }
  bool is_one() const { return phase_ == 0; }
  UnityRoot operator*(const UnityRoot& o) const { return UnityRoot(phase_ + o.phase_); }
  UnityRoot inverse() const { return UnityRoot(-phase_); }
  std::complex<double> value() const;

  friend bool operator==(const UnityRoot& a, const UnityRoot& b) { return a.phase_ == b.phase_; }

private:
  Rat phase_{0};
};

/// chi(u, g) = exp(2 pi i <u, v_g>).
UnityRoot character(const RatVector& u, const IntVector& g);

/// Surjection N -> Z^{n-k} whose kernel is the saturation of span(K).
class QuotientProjection {
public:
  explicit QuotientProjection(const std::vector<IntVector>& span_rays, int n);

  int ambient_dim() const { return n_; }
  int quotient_dim() const { return n_ - k_; }

  IntVector project(const IntVector& v) const;
  RatVector project(const RatVector& v) const;

  /// Pull a functional on the quotient back to V*: u = ubar * P.
  RatVector lift_dual(const RatVector& ubar) const;
  /// Coordinates on (V/V_K)* of a functional u that annihilates span(K).
  RatVector to_quotient_dual(const RatVector& u) const;

  const IntMatrix& matrix() const { return rows_; }

private:
  int n_;
  int k_;
  IntMatrix rows_;      // (n-k) x n, the projection
  IntMatrix left_inv_;  // L^{-1}
};

} // namespace multifan
