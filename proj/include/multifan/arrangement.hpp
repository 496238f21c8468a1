#pragma once

#include "multifan/arith.hpp"

#include <vector>

namespace multifan {

/// Canonical primitive integer representative of a rational normal (first
/// nonzero entry positive). Returns the zero vector for zero input.
IntVector primitive_normal(const RatVector& normal);

/// One integer interior point per full-dimensional chamber of the central
/// arrangement {x : <a, x> = 0} for the given normals in R^n. Zero normals are
/// ignored and parallel normals are merged. Built incrementally by
/// deletion-restriction: each added hyperplane keeps the old chambers it
/// misses and splits the ones it meets, which correspond to the chambers of
/// the restricted arrangement.
std::vector<IntVector> central_chambers(const std::vector<IntVector>& normals, int n);

/// Sign of <a, x> for every normal.
std::vector<int> sign_vector(const std::vector<IntVector>& normals, const RatVector& x);

} // namespace multifan
