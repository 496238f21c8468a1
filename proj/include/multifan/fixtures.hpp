#pragma once

#include "multifan/fan.hpp"
#include "multifan/polytope.hpp"

#include <cstdint>
#include <vector>

namespace multifan::fixtures {

/// Builds a fan from 1-based cone lists, all with the same weight unless a
/// per-cone weight list is given.
MultiFan make_fan(int n, const std::vector<std::vector<std::int64_t>>& rays,
                  const std::vector<Face>& cones_1based,
                  const std::vector<WeightPair>& weights = {});

/// Complete fan of the projective plane.
MultiFan p2();
/// Fan of the weighted projective plane P(1,1,2).
MultiFan p112();
/// Five rays winding twice around the origin.
MultiFan star();
/// Five rays with one clockwise pair carrying weight -1.
MultiFan folded();
/// Three cones tiling the plane plus a doubled quadrant with weight -1.
MultiFan ex24();
/// Fan of P^1 x P^1 (normal fan of the square).
MultiFan square();

/// Triangle x <= 1, y <= 1, x + y >= -1.
MultiPolytope p2_triangle();
/// Triangle with vertices (2,1), (2,-1), (-2,1).
MultiPolytope p112_triangle();
/// Unit square [0,1]^2.
MultiPolytope unit_square();
/// Star fan with every support number 1: a pentagon covered twice inside a
/// ring of five triangles covered once.
MultiPolytope star_polytope();

} // namespace multifan::fixtures
