#include "multifan/fan.hpp"

#include "multifan/arrangement.hpp"
#include "multifan/error.hpp"

#include <algorithm>
#include <sstream>

namespace multifan {

namespace {

std::string face_label(const Face& f) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "," : "") << f[k] + 1;
  out << '}';
  return out.str();
}

void add_subsets(const Face& f, std::set<Face>& out) {
  const std::size_t m = f.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Face s;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) s.push_back(f[k]);
    out.insert(std::move(s));
  }
}

std::vector<IntVector> rays_of(const MultiFan& fan, const Face& f) {
  std::vector<IntVector> out;
  for (int i : f) out.push_back(fan.ray(i));
  return out;
}

bool independent(const std::vector<IntVector>& vs) {
  if (vs.empty()) return true;
  RatMatrix m;
  for (const auto& v : vs) m.push_back(to_rat(v));
  return rank(m) == static_cast<int>(vs.size());
}

Face without(const Face& f, std::size_t k) {
  Face out;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (j != k) out.push_back(f[j]);
  return out;
}

} // namespace

AugSimplicialSet::AugSimplicialSet(int ground, const std::vector<Face>& generators)
    : ground_(ground) {
  faces_.insert(Face{});
  for (int i = 0; i < ground; ++i) faces_.insert(Face{i});
  for (auto f : generators) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorKind::invalid_fan, "face with repeated label " + face_label(f));
    for (int i : f)
      if (i < 0 || i >= ground)
        throw Error(ErrorKind::invalid_fan, "face label out of range in " + face_label(f));
    add_subsets(f, faces_);
  }
}

std::vector<Face> AugSimplicialSet::of_size(int m) const {
  std::vector<Face> out;
  for (const auto& f : faces_)
    if (static_cast<int>(f.size()) == m) out.push_back(f);
  return out;
}

MultiFan::MultiFan(int n, std::vector<IntVector> rays, const std::map<Face, WeightPair>& weights,
                   const std::vector<Face>& extra_faces)
    : n_(n), rays_(std::move(rays)) {
  if (n < 0) throw Error(ErrorKind::dimension_mismatch, "negative dimension");
  for (const auto& r : rays_)
    if (static_cast<int>(r.size()) != n)
      throw Error(ErrorKind::dimension_mismatch, "ray length differs from the dimension");

  std::map<Face, WeightPair> sorted_weights;
  std::vector<Face> generators;
  for (const auto& [key, w] : weights) {
    Face f = key;
    std::sort(f.begin(), f.end());
    if (static_cast<int>(f.size()) != n)
      throw Error(ErrorKind::invalid_fan, "weighted face " + face_label(f) + " is not top-dimensional");
    if (w.plus < 0 || w.minus < 0)
      throw Error(ErrorKind::invalid_fan, "negative weight on " + face_label(f));
    sorted_weights[f] = w;
    generators.push_back(f);
  }
  for (auto f : extra_faces) {
    std::sort(f.begin(), f.end());
    if (static_cast<int>(f.size()) > n)
      throw Error(ErrorKind::invalid_fan, "face " + face_label(f) + " exceeds the dimension");
    extra_.push_back(f);
    generators.push_back(f);
  }
  std::sort(extra_.begin(), extra_.end());
  extra_.erase(std::unique(extra_.begin(), extra_.end()), extra_.end());
  sigma_ = AugSimplicialSet(num_rays(), generators);

  primitive_.resize(rays_.size());
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    Int g = gcd_of(rays_[i]);
    if (g == 0) issues_.push_back("ray " + std::to_string(i + 1) + " is zero");
    primitive_[i] = g == 1;
  }

  // Simpliciality: every face spans a cone of full dimension |J|. Checking the
  // maximal faces suffices.
  for (const auto& f : sigma_.faces()) {
    bool maximal = true;
    for (int j = 0; j < num_rays() && maximal; ++j) {
      if (std::binary_search(f.begin(), f.end(), j)) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), j), j);
      if (sigma_.contains(g)) maximal = false;
    }
    if (maximal && !independent(rays_of(*this, f)))
      issues_.push_back("face " + face_label(f) + " has linearly dependent rays");
  }

  for (const auto& f : sigma_.of_size(n)) {
    TopCone c;
    c.face = f;
    auto it = sorted_weights.find(f);
    if (it != sorted_weights.end()) c.weight = it->second;
    if (c.weight.plus <= 0 && c.weight.minus <= 0)
      issues_.push_back("top face " + face_label(f) + " has no positive weight");
    auto rs = rays_of(*this, f);
    c.independent = independent(rs);
    if (c.independent) {
      IntMatrix cols(n, IntVector(n));
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[i][j] = rs[j][i];
      c.det = determinant(cols);
      c.dual = dual_basis(rs);
      c.quotient = quotient_group(rs);
    }
    top_.push_back(std::move(c));
  }
  if (top_.empty()) issues_.push_back("Sigma has no top-dimensional face");

  std::vector<IntVector> walls;
  auto add_wall = [&](const Face& f) {
    auto rs = rays_of(*this, f);
    if (!independent(rs)) return;
    walls.push_back(hyperplane_normal(rs, n));
  };
  if (n >= 1) {
    for (const auto& c : top_)
      for (std::size_t k = 0; k < c.face.size(); ++k) add_wall(without(c.face, k));
    for (const auto& f : sigma_.of_size(n - 1)) add_wall(f);
  }
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  walls_ = std::move(walls);

  // Faces of size < n-1 not contained in an (n-1)-face need their own span test.
  for (const auto& f : sigma_.faces()) {
    if (f.empty() || static_cast<int>(f.size()) >= n - 1) continue;
    bool covered = false;
    for (const auto& g : sigma_.of_size(n - 1))
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        covered = true;
        break;
      }
    if (!covered) low_spans_.push_back(rays_of(*this, f));
  }
}

const TopCone* MultiFan::find_top(const Face& f) const {
  auto it = std::lower_bound(top_.begin(), top_.end(), f,
                             [](const TopCone& c, const Face& g) { return c.face < g; });
  if (it == top_.end() || it->face != f) return nullptr;
  return &*it;
}

WeightPair MultiFan::weight(const Face& f) const {
  const TopCone* c = find_top(f);
  return c ? c->weight : WeightPair{};
}

void MultiFan::require_valid() const {
  if (!issues_.empty()) throw Error(ErrorKind::invalid_fan, issues_.front());
}

bool MultiFan::all_primitive() const {
  return std::all_of(primitive_.begin(), primitive_.end(), [](bool b) { return b; });
}

bool MultiFan::is_nonsingular() const {
  return std::all_of(top_.begin(), top_.end(),
                     [](const TopCone& c) { return c.independent && c.quotient.order == 1; });
}

ValidationReport validate(const MultiFan& fan) {
  return {fan.is_valid(), fan.issues(), fan.primitive()};
}

ConeFrame cone_frame(const TopCone& cone, const RatVector& v) {
  if (!cone.independent) throw Error(ErrorKind::invalid_fan, "cone " + face_label(cone.face) + " is degenerate");
  ConeFrame f;
  f.cone = &cone;
  for (const auto& u : cone.dual) {
    int s = sign(pairing(u, v));
    if (s == 0) throw Error(ErrorKind::not_generic, "direction lies on a wall of " + face_label(cone.face));
    f.signs.push_back(s);
    if (s > 0) ++f.mu;
  }
  f.parity = f.mu % 2 ? -1 : 1;
  return f;
}

bool is_generic(const MultiFan& fan, const RatVector& v) {
  if (static_cast<int>(v.size()) != fan.dim())
    throw Error(ErrorKind::dimension_mismatch, "direction has wrong length");
  if (fan.dim() > 0 && std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) return false;
  for (const auto& a : fan.wall_normals())
    if (pairing(v, a) == 0) return false;
  for (const auto& c : fan.top_cones())
    for (const auto& u : c.dual)
      if (pairing(u, v) == 0) return false;
  for (const auto& span : fan.small_spans()) {
    RatMatrix m;
    for (const auto& r : span) m.push_back(to_rat(r));
    m.push_back(v);
    if (rank(m) <= static_cast<int>(span.size())) return false;
  }
  return true;
}

bool is_generic(const MultiFan& fan, const IntVector& v) { return is_generic(fan, to_rat(v)); }

IntVector choose_generic(const MultiFan& fan, Rng& rng) {
  Int big = 1;
  for (const auto& r : fan.rays())
    for (const auto& x : r) big = std::max(big, Int(abs(x)));
  const std::int64_t bound = 10 * to_i64(big);
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
    IntVector v(fan.dim());
    for (auto& x : v) x = Int(static_cast<long>(dist(rng)));
    if (is_generic(fan, v)) return v;
  }
  throw Error(ErrorKind::not_generic, "no generic direction found");
}

std::int64_t local_degree(const MultiFan& fan, const RatVector& v) {
  fan.require_valid();
  if (!is_generic(fan, v)) throw Error(ErrorKind::not_generic, "direction is not generic");
  std::int64_t d = 0;
  for (const auto& c : fan.top_cones()) {
    bool inside = std::all_of(c.dual.begin(), c.dual.end(),
                              [&](const RatVector& u) { return pairing(u, v) > 0; });
    if (inside) d += c.weight.net();
  }
  return d;
}

std::vector<RatVector> chamber_points(const MultiFan& fan) {
  const int n = fan.dim();
  const auto& walls = fan.wall_normals();
  Rng rng(kDefaultSeed);
  std::uniform_int_distribution<int> dist(-7, 7);
  std::vector<RatVector> out;
  for (const auto& p : central_chambers(walls, n)) {
    RatVector x = to_rat(p);
    for (int attempt = 0; !is_generic(fan, x); ++attempt) {
      if (attempt == kGenericRetries)
        throw Error(ErrorKind::not_generic, "could not perturb a chamber point off the small spans");
      // Stay inside the chamber: move by less than the distance to any wall.
      RatVector r(n);
      for (auto& y : r) y = dist(rng);
      Rat step = 1;
      for (const auto& a : walls) {
        Rat ar = pairing(r, a);
        if (ar == 0) continue;
        Rat bound = abs(pairing(to_rat(p), a)) / abs(ar) / 2;
        if (bound < step) step = bound;
      }
      x = to_rat(p);
      for (int i = 0; i < n; ++i) x[i] += step * r[i];
    }
    out.push_back(std::move(x));
  }
  return out;
}

Precompleteness is_precomplete(const MultiFan& fan) {
  fan.require_valid();
  Precompleteness r;
  for (const auto& x : chamber_points(fan)) r.chamber_degrees.push_back(local_degree(fan, x));
  const auto& d = r.chamber_degrees;
  r.precomplete = !d.empty() && std::all_of(d.begin(), d.end(), [&](std::int64_t x) { return x == d.front(); });
  if (r.precomplete) r.degree = d.front();
  return r;
}

std::int64_t degree(const MultiFan& fan) {
  auto r = is_precomplete(fan);
  if (!r.precomplete) throw Error(ErrorKind::not_complete, "multi-fan is not pre-complete");
  return *r.degree;
}

ProjectedFan project(const MultiFan& fan, const Face& k_in) {
  Face k = k_in;
  std::sort(k.begin(), k.end());
  if (!fan.sigma().contains(k)) throw Error(ErrorKind::invalid_fan, "face " + face_label(k) + " is not in Sigma");
  auto span = rays_of(fan, k);
  if (!independent(span)) throw Error(ErrorKind::invalid_fan, "face " + face_label(k) + " is degenerate");
  QuotientProjection map(span, fan.dim());

  std::vector<int> labels;
  std::vector<int> relabel(fan.num_rays(), -1);
  for (int j = 0; j < fan.num_rays(); ++j) {
    if (std::binary_search(k.begin(), k.end(), j)) continue;
    Face g = k;
    g.insert(std::upper_bound(g.begin(), g.end(), j), j);
    if (!fan.sigma().contains(g)) continue;
    relabel[j] = static_cast<int>(labels.size());
    labels.push_back(j);
  }
  auto rest = [&](const Face& f) {
    Face out;
    for (int i : f)
      if (!std::binary_search(k.begin(), k.end(), i)) out.push_back(relabel[i]);
    return out;
  };

  std::vector<IntVector> rays;
  for (int j : labels) rays.push_back(map.project(fan.ray(j)));
  std::map<Face, WeightPair> weights;
  for (const auto& c : fan.top_cones())
    if (std::includes(c.face.begin(), c.face.end(), k.begin(), k.end())) weights[rest(c.face)] = c.weight;
  std::vector<Face> extra;
  for (const auto& f : fan.sigma().faces()) {
    if (!std::includes(f.begin(), f.end(), k.begin(), k.end())) continue;
    if (static_cast<int>(f.size()) == fan.dim()) continue;
    extra.push_back(rest(f));
  }
  // Keep only the maximal ones so the stored generators stay small.
  std::vector<Face> maximal;
  for (const auto& f : extra) {
    bool covered = false;
    for (const auto& g : extra)
      if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) covered = true;
    for (const auto& [g, w] : weights)
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) covered = true;
    if (!covered && !f.empty()) maximal.push_back(f);
  }
  MultiFan out(fan.dim() - static_cast<int>(k.size()), std::move(rays), weights, maximal);
  return {std::move(out), std::move(labels), std::move(map)};
}

bool is_complete(const MultiFan& fan) {
  if (!is_precomplete(fan).precomplete) return false;
  for (const auto& j : fan.sigma().of_size(fan.dim() - 1))
    if (!is_precomplete(project(fan, j).fan).precomplete) return false;
  return true;
}

bool boundary_cycle_check(const MultiFan& fan) {
  fan.require_valid();
  std::map<Face, std::int64_t> boundary;
  for (const auto& c : fan.top_cones()) {
    const std::int64_t coeff = c.weight.net() * sign(c.det);
    for (std::size_t k = 0; k < c.face.size(); ++k)
      boundary[without(c.face, k)] += (k % 2 ? -coeff : coeff);
  }
  return std::all_of(boundary.begin(), boundary.end(), [](const auto& e) { return e.second == 0; });
}

std::vector<std::int64_t> h_vector(const MultiFan& fan, const RatVector& v) {
  fan.require_valid();
  if (!is_generic(fan, v)) throw Error(ErrorKind::not_generic, "direction is not generic");
  std::vector<std::int64_t> h(fan.dim() + 1, 0);
  for (const auto& c : fan.top_cones()) h[cone_frame(c, v).mu] += c.weight.net();
  return h;
}

std::vector<std::int64_t> e_vector(const MultiFan& fan) {
  fan.require_valid();
  std::vector<std::int64_t> e(fan.dim() + 1, 0);
  for (int q = 0; q <= fan.dim(); ++q)
    for (const auto& k : fan.sigma().of_size(q)) {
      auto r = is_precomplete(project(fan, k).fan);
      if (!r.precomplete)
        throw Error(ErrorKind::not_complete, "projection along " + face_label(k) + " is not pre-complete");
      e[q] += *r.degree;
    }
  return e;
}

std::vector<std::int64_t> ty_genus(const MultiFan& fan, const RatVector& v) {
  const int n = fan.dim();
  const auto h = h_vector(fan, v);
  const auto e = e_vector(fan);
  std::vector<std::int64_t> from_h(n + 1, 0), from_e(n + 1, 0);
  for (int q = 0; q <= n; ++q) from_h[q] = (q % 2 ? -h[q] : h[q]);
  // sum_m e_{n-m} (-1-y)^m
  for (int m = 0; m <= n; ++m)
    for (int k = 0; k <= m; ++k) {
      std::int64_t term = e[n - m] * to_i64(binomial(m, k));
      from_e[k] += (m % 2 ? -term : term);
    }
  if (from_h != from_e) throw Error(ErrorKind::verification_failed, "h-vector and e-vector forms of T_y differ");
  return from_h;
}

std::vector<std::int64_t> ty_genus(const MultiFan& fan, Rng& rng) {
  return ty_genus(fan, to_rat(choose_generic(fan, rng)));
}

std::int64_t signature(const MultiFan& fan, const RatVector& v) {
  const auto ty = ty_genus(fan, v);
  std::int64_t t1 = 0;
  for (auto c : ty) t1 += c;
  const auto e = e_vector(fan);
  const int n = fan.dim();
  std::int64_t alt = 0, p = 1;
  for (int m = 0; m <= n; ++m, p *= -2) alt += p * e[n - m];
  if (alt != t1) throw Error(ErrorKind::verification_failed, "signature formulas disagree");
  return t1;
}

std::int64_t signature(const MultiFan& fan, Rng& rng) {
  return signature(fan, to_rat(choose_generic(fan, rng)));
}

std::vector<StarPiece> decompose_star(const MultiFan& fan, const IntVector& ell) {
  fan.require_valid();
  if (!is_generic(fan, ell)) throw Error(ErrorKind::not_generic, "ray is not generic for the multi-fan");
  const int n = fan.dim();
  std::vector<StarPiece> pieces;
  for (const auto& c : fan.top_cones()) {
    std::vector<IntVector> rays = rays_of(fan, c.face);
    rays.push_back(ell);
    std::vector<Rat> a;
    for (const auto& u : c.dual) a.push_back(-pairing(u, to_rat(ell)));
    std::map<Face, WeightPair> weights;
    Face base;
    for (int i = 0; i < n; ++i) base.push_back(i);
    weights[base] = c.weight;
    for (int i = 0; i < n; ++i) {
      Face f = without(base, i);
      f.push_back(n);
      weights[f] = a[i] > 0 ? c.weight : c.weight.swapped();
    }
    std::vector<int> labels(c.face.begin(), c.face.end());
    labels.push_back(-1);
    pieces.push_back({MultiFan(n, std::move(rays), weights), c.face, std::move(labels), std::move(a)});
  }
  for (const auto& p : pieces)
    if (!is_complete(p.fan))
      throw Error(ErrorKind::verification_failed, "star piece for " + face_label(p.source) + " is not complete");
  if (!star_cancellation_holds(fan, pieces))
    throw Error(ErrorKind::verification_failed, "star pieces do not cancel along the new ray");
  return pieces;
}

bool star_cancellation_holds(const MultiFan& fan, const std::vector<StarPiece>& pieces) {
  const int n = fan.dim();
  for (const auto& j : fan.sigma().of_size(n - 1)) {
    std::int64_t total = 0;
    for (const auto& p : pieces) {
      if (!std::includes(p.source.begin(), p.source.end(), j.begin(), j.end())) continue;
      // Piece labels 0..n-1 follow p.source; n is the new ray.
      Face f;
      for (int i = 0; i < n; ++i)
        if (std::binary_search(j.begin(), j.end(), p.source[i])) f.push_back(i);
      f.push_back(n);
      total += p.fan.weight(f).net();
    }
    if (total != 0) return false;
  }
  return true;
}

bool is_minimal_shape(const MultiFan& fan) {
  const int n = fan.dim();
  if (fan.num_rays() != n + 1 || !fan.is_valid()) return false;
  if (static_cast<int>(fan.top_cones().size()) != n + 1) return false;
  const auto& w0 = fan.top_cones().front().weight;
  for (const auto& c : fan.top_cones())
    if (!(c.weight == w0 || c.weight == w0.swapped())) return false;
  return true;
}

bool is_minimal(const MultiFan& fan) { return is_minimal_shape(fan) && is_complete(fan); }

std::vector<Int> minimal_relation(const MultiFan& fan) {
  if (!is_minimal_shape(fan)) throw Error(ErrorKind::invalid_fan, "multi-fan is not minimal");
  const int n = fan.dim();
  std::vector<Int> b(n + 1);
  int negative = 0;
  for (int i = 0; i <= n; ++i) {
    IntMatrix cols(n, IntVector(n));
    int col = 0;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      for (int r = 0; r < n; ++r) cols[r][col] = fan.ray(j)[r];
      ++col;
    }
    b[i] = determinant(cols);
    if (i % 2) b[i] = -b[i];
    if (b[i] == 0) throw Error(ErrorKind::invalid_fan, "relation has a zero coefficient");
    if (b[i] < 0) ++negative;
  }
  if (2 * negative > n + 1 || (2 * negative == n + 1 && b[0] < 0))
    for (auto& x : b) x = -x;
  return b;
}

MultiFan minimal_normalize(const MultiFan& fan) {
  const auto b = minimal_relation(fan);
  std::vector<IntVector> rays = fan.rays();
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (b[i] < 0)
      for (auto& x : rays[i]) x = -x;
  std::map<Face, WeightPair> weights;
  for (const auto& c : fan.top_cones()) {
    int flips = 0;
    for (int i : c.face)
      if (b[i] < 0) ++flips;
    weights[c.face] = flips % 2 ? c.weight.swapped() : c.weight;
  }
  return MultiFan(fan.dim(), std::move(rays), weights, fan.extra_faces());
}

} // namespace multifan
