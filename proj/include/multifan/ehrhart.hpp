#pragma once

#include "multifan/polytope.hpp"
#include "multifan/series.hpp"

#include <functional>
#include <map>
#include <vector>

namespace multifan {

/// Integer box [lo, hi] (inclusive) in N* coordinates.
struct LatticeBox {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  /// Number of lattice points, saturating at INT64_MAX.
  std::int64_t points() const;
};

/// Bounding box of every arrangement vertex F_S (S an independent n-subset),
/// padded by 1. Contains the support of DH for P, P_+ and P_-.
LatticeBox support_box(const MultiPolytope& p);

/// Calls visit(u0, dh, length) for every row u0 + t*e_n, t < length, of the
/// box; dh[t] = DH of the shifted polytope at that point. Requires primitive
/// rays and a lattice polytope; does not check completeness.
void scan_lattice(const MultiPolytope& p, Shift shift,
                  const std::function<void(const std::vector<std::int64_t>&, const std::int64_t*, std::size_t)>& visit);

/// Sum of DH_{P_+} over N*.
Int count(const MultiPolytope& p);
/// Sum of DH_{P_-} over N*.
Int count_interior(const MultiPolytope& p);

MultiPolytope dilate(const MultiPolytope& p, const Int& nu);

/// Coefficients constant first.
struct EhrhartPoly {
  std::vector<Rat> coefficients;

  Rat operator()(const Rat& nu) const;
  int degree() const;
};

/// Interpolates count(nu P) for nu = 0..n and verifies it at n+1, n+2, the
/// constant term against deg(Delta) and the top coefficient against the
/// volume. Throws Error(verification_failed) on any mismatch.
EhrhartPoly ehrhart_polynomial(const MultiPolytope& p);

/// count_interior(nu P) == (-1)^n E(-nu) for nu = 1..n+1.
bool reciprocity_check(const MultiPolytope& p);

/// Finite formal sum of t^u with complex coefficients.
class LaurentElement {
public:
  void add(const RatVector& u, const Complex& c);
  const std::map<RatVector, Complex>& terms() const { return terms_; }
  /// sum_u c_u z^{<u, v>}; every exponent must be an integer.
  Complex evaluate(const IntVector& v, const Complex& z) const;
  /// Largest |c_u z^{<u, v>}|, the scale for relative comparisons.
  double magnitude(const IntVector& v, const Complex& z) const;

private:
  std::map<RatVector, Complex> terms_;
};

/// sum_u DH_{P_+}(u) t^u over the support box.
LaurentElement generating_function(const MultiPolytope& p);

/// z^k computed in polar form.
Complex integer_power(const Complex& z, const Int& k);

struct CharacterSample {
  Complex lhs;
  Complex rhs;
  double scale = 1.0; // largest term magnitude on either side, at least 1

  bool agrees(double tol = 1e-9) const { return std::abs(lhs - rhs) <= tol * scale; }
};

/// Both sides of the localization identity at (v, z). v must pair to a
/// nonzero integer with every u_i^I, and |z| must avoid 0 and 1.
CharacterSample character_series_eval(const MultiPolytope& p, const IntVector& v, const Complex& z);

/// Runs character_series_eval at `trials` random admissible (v, z). The fan
/// is not required to be complete: an incomplete one makes the identity
/// fail, which is what this reports.
bool character_identity_check(const MultiPolytope& p, int trials, Rng& rng, double tol = 1e-9);

/// lcm of |N/N_I| times a random generic vector.
IntVector admissible_direction(const MultiFan& fan, Rng& rng);

} // namespace multifan
