#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace multifan {

using Int = mpz_class;
using Rat = mpq_class;

/// A lattice point of N or N* (length = ambient rank).
using IntVector = std::vector<Int>;
/// A point of N_R or V* with exact rational entries.
using RatVector = std::vector<Rat>;

using IntMatrix = std::vector<IntVector>; // row-major
using RatMatrix = std::vector<RatVector>; // row-major

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

/// p/q in canonical form (gmpxx does not reduce two-argument constructors).
Rat make_rat(const Int& p, const Int& q);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);
/// x - floor(x), in [0, 1).
Rat frac(const Rat& x);

Rat parse_rat(std::string_view text);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

RatVector to_rat(const IntVector& v);
IntVector to_int_vector(const std::vector<std::int64_t>& v);
bool is_integral(const RatVector& v);
IntVector as_integral(const RatVector& v); // throws unless integral

Int gcd_of(const IntVector& v);
Int lcm(const Int& a, const Int& b);
Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

std::int64_t to_i64(const Int& x); // throws if out of range

/// Exact determinant of a square rational matrix (Bareiss-free Gaussian
/// elimination over Q).
Rat determinant(RatMatrix m);
Int determinant(const IntMatrix& m);
/// Rank over Q.
int rank(RatMatrix m);
/// Inverse over Q; throws Error(singular) if not invertible.
RatMatrix inverse(const RatMatrix& m);

/// Integer normal vector of the hyperplane spanned by n-1 independent
/// vectors in Z^n (generalized cross product), reduced by gcd and with its
/// first nonzero entry positive. Returns all zeros for dependent input.
IntVector hyperplane_normal(const std::vector<IntVector>& vectors, int n);

} // namespace multifan
