#pragma once

#include "multifan/arith.hpp"
#include "multifan/lattice.hpp"
#include "multifan/random.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace multifan {

/// A face of the simplicial set: sorted 0-based labels.
using Face = std::vector<int>;

struct WeightPair {
  std::int64_t plus = 0;
  std::int64_t minus = 0;

  std::int64_t net() const { return plus - minus; }
  WeightPair swapped() const { return {minus, plus}; }
  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

/// Downward-closed family of subsets of {0..d-1}, always containing the empty
/// face and every singleton.
class AugSimplicialSet {
public:
  AugSimplicialSet() = default;
  AugSimplicialSet(int ground, const std::vector<Face>& generators);

  int ground() const { return ground_; }
  bool contains(const Face& f) const { return faces_.count(f) > 0; }
  const std::set<Face>& faces() const { return faces_; }
  std::vector<Face> of_size(int m) const;

private:
  int ground_ = 0;
  std::set<Face> faces_;
};

/// Data attached to one face of Sigma^(n).
struct TopCone {
  Face face;
  WeightPair weight;
  bool independent = false;
  Int det;                      // det(v_i : i in face) in label order
  std::vector<RatVector> dual;  // u_i^I in face order, empty if dependent
  FiniteQuotient quotient;      // N / N_I, empty if dependent
};

class MultiFan {
public:
  /// `weights` lists the top cones (faces of size n); Sigma is the downward
  /// closure of those faces, `extra_faces` and all singletons. Structural
  /// problems (bad labels, wrong face sizes, wrong ray lengths) throw;
  /// geometric ones (dependent rays, zero weights) are recorded in issues().
  MultiFan(int n, std::vector<IntVector> rays, const std::map<Face, WeightPair>& weights,
           const std::vector<Face>& extra_faces = {});

  int dim() const { return n_; }
  int num_rays() const { return static_cast<int>(rays_.size()); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(int i) const { return rays_[i]; }
  const AugSimplicialSet& sigma() const { return sigma_; }
  const std::vector<Face>& extra_faces() const { return extra_; }

  /// Sigma^(n) in lexicographic order.
  const std::vector<TopCone>& top_cones() const { return top_; }
  const TopCone* find_top(const Face& f) const;
  WeightPair weight(const Face& f) const;

  const std::vector<std::string>& issues() const { return issues_; }
  bool is_valid() const { return issues_.empty(); }
  /// Throws Error(invalid_fan) listing the first issue.
  void require_valid() const;

  const std::vector<bool>& primitive() const { return primitive_; }
  bool all_primitive() const;
  /// Every top cone has |N/N_I| = 1.
  bool is_nonsingular() const;

  /// Hyperplanes that bound chambers of d_v: spans of (n-1)-subsets of top
  /// cones and of (n-1)-faces.
  const std::vector<IntVector>& wall_normals() const { return walls_; }
  /// Rays of faces of size < n-1 that lie in no (n-1)-face; their spans need
  /// a separate genericity test.
  const std::vector<std::vector<IntVector>>& small_spans() const { return low_spans_; }

private:
  int n_;
  std::vector<IntVector> rays_;
  AugSimplicialSet sigma_;
  std::vector<Face> extra_;
  std::vector<TopCone> top_;
  std::vector<std::string> issues_;
  std::vector<bool> primitive_;
  std::vector<IntVector> walls_;
  std::vector<std::vector<IntVector>> low_spans_; // maximal faces of size < n-1
};

struct ValidationReport {
  bool valid = false;
  std::vector<std::string> problems;
  std::vector<bool> primitive;
};

ValidationReport validate(const MultiFan& fan);

/// Per-top-cone data relative to a generic direction v.
struct ConeFrame {
  const TopCone* cone = nullptr;
  std::vector<int> signs; // sign <u_i^I, v>, all nonzero
  int mu = 0;             // number of positive signs
  int parity = 1;         // (-1)^mu
};

ConeFrame cone_frame(const TopCone& cone, const RatVector& v);

bool is_generic(const MultiFan& fan, const RatVector& v);
bool is_generic(const MultiFan& fan, const IntVector& v);
/// Random generic integer vector; throws Error(not_generic) after the retry budget.
IntVector choose_generic(const MultiFan& fan, Rng& rng);

std::int64_t local_degree(const MultiFan& fan, const RatVector& v);

/// One generic interior point per chamber of the wall arrangement.
std::vector<RatVector> chamber_points(const MultiFan& fan);

struct Precompleteness {
  bool precomplete = false;
  std::optional<std::int64_t> degree;
  std::vector<std::int64_t> chamber_degrees;
};

Precompleteness is_precomplete(const MultiFan& fan);
/// deg(Delta); throws Error(not_complete) unless precomplete.
std::int64_t degree(const MultiFan& fan);

struct ProjectedFan {
  MultiFan fan;
  std::vector<int> labels; // new label -> old label
  QuotientProjection map;
};

ProjectedFan project(const MultiFan& fan, const Face& k);

bool is_complete(const MultiFan& fan);
bool boundary_cycle_check(const MultiFan& fan);

std::vector<std::int64_t> h_vector(const MultiFan& fan, const RatVector& v);
std::vector<std::int64_t> e_vector(const MultiFan& fan);

/// Coefficients of T_y in increasing powers of y. Computed from h and checked
/// against the e-vector expansion; throws Error(verification_failed) on mismatch.
std::vector<std::int64_t> ty_genus(const MultiFan& fan, const RatVector& v);
std::vector<std::int64_t> ty_genus(const MultiFan& fan, Rng& rng);
/// T_1, checked against sum_m (-2)^m e_{n-m}.
std::int64_t signature(const MultiFan& fan, const RatVector& v);
std::int64_t signature(const MultiFan& fan, Rng& rng);

struct StarPiece {
  MultiFan fan;
  Face source;             // the top cone I of the input
  std::vector<int> labels; // piece label -> input label, -1 for the new ray
  std::vector<Rat> coefficients; // a_i with ell + sum a_i v_i = 0
};

/// Splits a complete fan into minimal pieces along the ray `ell`. Each piece
/// is checked for completeness and the cancellation across every (n-1)-face
/// is verified; failures throw Error(verification_failed).
std::vector<StarPiece> decompose_star(const MultiFan& fan, const IntVector& ell);
/// The sum over top cones I containing J of the piece weight on J + {ell}
/// vanishes for every J in Sigma^(n-1).
bool star_cancellation_holds(const MultiFan& fan, const std::vector<StarPiece>& pieces);

/// Sigma is the boundary of an n-simplex on n+1 rays and the unordered
/// weight pair is the same on every top cone.
bool is_minimal_shape(const MultiFan& fan);
bool is_minimal(const MultiFan& fan);

/// The relation sum b_i v_i = 0 of a minimal fan, signed so that at most
/// half the coefficients are negative (ties: b_0 > 0).
std::vector<Int> minimal_relation(const MultiFan& fan);
MultiFan minimal_normalize(const MultiFan& fan);

} // namespace multifan
