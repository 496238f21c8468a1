#pragma once

// Hand-rolled random instance generators shared by the property tests.

#include "multifan/fan.hpp"
#include "multifan/random.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace gen {

using namespace multifan;

inline IntVector random_vector(Rng& rng, int n, int bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntVector v(n);
  for (;;) {
    for (auto& x : v) x = Int(dist(rng));
    if (gcd_of(v) != 0) return v;
  }
}

inline IntVector make_primitive(IntVector v) {
  Int g = gcd_of(v);
  for (auto& x : v) x /= g;
  return v;
}

inline WeightPair split_weight(Rng& rng, std::int64_t net) {
  std::uniform_int_distribution<int> extra(0, 3);
  std::int64_t k = extra(rng) == 0 ? 1 : 0;
  return net >= 0 ? WeightPair{net + k, k} : WeightPair{k, -net + k};
}

/// Complete 1-dimensional multi-fan: signed rays whose net weights balance.
inline MultiFan random_complete_1d(Rng& rng, int d, bool primitive = false) {
  std::uniform_int_distribution<long> ray(1, 4);
  std::uniform_int_distribution<int> w(1, 3);
  std::vector<IntVector> rays;
  std::vector<std::int64_t> nets;
  std::int64_t pos = 0, neg = 0;
  for (int i = 0; i < d; ++i) {
    long x = primitive ? 1 : ray(rng);
    bool up = i == 0 || (i != 1 && (rng() & 1));
    rays.push_back({Int(up ? x : -x)});
    std::int64_t net = w(rng);
    if (rng() % 4 == 0) net = -net;
    nets.push_back(net);
    (up ? pos : neg) += net;
  }
  // Rebalance with the last ray of the opposite orientation to the surplus.
  std::int64_t diff = pos - neg;
  if (diff != 0) {
    rays.push_back({Int(diff > 0 ? -1 : 1)});
    nets.push_back(diff > 0 ? diff : -diff);
  }
  std::map<Face, WeightPair> weights;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    weights[{static_cast<int>(i)}] = nets[i] == 0 ? WeightPair{1, 1} : split_weight(rng, nets[i]);
  }
  return MultiFan(1, rays, weights);
}

/// Oriented simplicial sphere built by repeated stellar subdivision of facets
/// of the boundary of an n-simplex. Each facet carries +1/-1 orientation.
struct OrientedSphere {
  int vertices = 0;
  std::vector<std::pair<Face, int>> facets; // ordered vertex list, orientation
};

inline OrientedSphere stacked_sphere(Rng& rng, int n, int extra_vertices) {
  OrientedSphere s;
  s.vertices = n + 1;
  // Boundary of [0..n]: facet omitting k has orientation (-1)^k.
  for (int k = 0; k <= n; ++k) {
    Face f;
    for (int j = 0; j <= n; ++j)
      if (j != k) f.push_back(j);
    s.facets.push_back({f, k % 2 ? -1 : 1});
  }
  for (int e = 0; e < extra_vertices; ++e) {
    std::uniform_int_distribution<std::size_t> pick(0, s.facets.size() - 1);
    auto [f, o] = s.facets[pick(rng)];
    s.facets.erase(std::find(s.facets.begin(), s.facets.end(), std::make_pair(f, o)));
    const int x = s.vertices++;
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g = f;
      g[j] = x;
      s.facets.push_back({g, o});
    }
  }
  return s;
}

/// Sign of the permutation sorting `f`.
inline int sort_sign(Face& f) {
  int s = 1;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (f[j] < f[i]) s = -s;
  std::sort(f.begin(), f.end());
  return s;
}

/// Complete simplicial multi-fan of dimension n >= 2 whose boundary chain is
/// a multiple of an oriented sphere. Rays are random with coordinates in
/// [-bound, bound]; every top cone is independent.
inline MultiFan random_complete(Rng& rng, int n, int extra_vertices, int bound = 5,
                                bool primitive = false) {
  if (n == 1) return random_complete_1d(rng, 2 + extra_vertices, primitive);
  for (;;) {
    OrientedSphere s = stacked_sphere(rng, n, extra_vertices);
    std::vector<IntVector> rays;
    for (int i = 0; i < s.vertices; ++i) {
      IntVector v = random_vector(rng, n, bound);
      rays.push_back(primitive ? make_primitive(v) : v);
    }
    std::uniform_int_distribution<int> mult(1, 2);
    const int m = mult(rng);
    std::map<Face, WeightPair> weights;
    bool ok = true;
    for (auto [f, o] : s.facets) {
      o *= sort_sign(f);
      IntMatrix cols(n, IntVector(n));
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[i][j] = rays[f[j]][i];
      Int det = determinant(cols);
      if (det == 0) {
        ok = false;
        break;
      }
      weights[f] = split_weight(rng, static_cast<std::int64_t>(m) * o * sign(det));
    }
    if (ok) return MultiFan(n, rays, weights);
  }
}

} // namespace gen

#include "multifan/polytope.hpp"

namespace gen {

inline Rat random_rat(Rng& rng, long bound, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  long q = den(rng);
  std::uniform_int_distribution<long> num(-bound * q, bound * q);
  return make_rat(Int(num(rng)), Int(q));
}

inline MultiPolytope random_polytope(Rng& rng, int n, int extra_vertices, long c_bound = 4,
                                     long max_den = 3) {
  auto fan = random_complete(rng, n, extra_vertices);
  std::vector<Rat> c;
  for (int i = 0; i < fan.num_rays(); ++i) c.push_back(random_rat(rng, c_bound, max_den));
  return MultiPolytope(std::move(fan), std::move(c));
}

/// Largest absolute vertex coordinate, rounded up.
inline long vertex_radius(const MultiPolytope& p) {
  Rat r = 0;
  for (const auto& c : p.fan().top_cones())
    for (const auto& x : vertex(p, c.face)) r = std::max(r, Rat(abs(x)));
  return to_i64(ceil_rat(r));
}

inline bool off_walls(const MultiPolytope& p, const RatVector& u) {
  for (int j = 0; j < p.fan().num_rays(); ++j)
    if (pairing(u, p.fan().ray(j)) == p.c(j)) return false;
  return true;
}

/// Random rational point within a margin of the vertices, off every hyperplane.
inline RatVector random_point(Rng& rng, const MultiPolytope& p, long max_den = 7) {
  const long bound = vertex_radius(p) + 2;
  for (;;) {
    RatVector u(p.dim());
    for (auto& x : u) x = random_rat(rng, bound, max_den);
    if (off_walls(p, u)) return u;
  }
}

/// Lattice multi-polytope: primitive rays, integer support numbers scaled by
/// the lcm of the vertex denominators. Instances whose vertices leave
/// [-max_radius, max_radius] are redrawn.
inline MultiPolytope random_lattice_polytope(Rng& rng, int n, int extra_vertices, long max_radius,
                                             int bound = 0) {
  if (bound == 0) bound = n == 3 ? 2 : 3;
  std::uniform_int_distribution<long> cd(-1, 1);
  for (;;) {
    auto fan = random_complete(rng, n, extra_vertices, bound, true);
    std::vector<Rat> c;
    for (int i = 0; i < fan.num_rays(); ++i) c.push_back(Rat(cd(rng)));
    MultiPolytope probe(fan, c);
    Int scale = 1;
    for (const auto& t : fan.top_cones())
      for (const auto& x : vertex(probe, t.face)) scale = lcm(scale, Int(x.get_den()));
    for (auto& x : c) x *= scale;
    MultiPolytope p(std::move(fan), std::move(c));
    bool small = true;
    for (const auto& t : p.fan().top_cones())
      for (const auto& x : vertex(p, t.face)) small = small && abs(x) <= max_radius;
    if (small) return p;
  }
}

} // namespace gen
