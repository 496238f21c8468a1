#include "multifan/fixtures.hpp"

#include <algorithm>

namespace multifan::fixtures {

MultiFan make_fan(int n, const std::vector<std::vector<std::int64_t>>& rays,
                  const std::vector<Face>& cones_1based, const std::vector<WeightPair>& weights) {
  std::vector<IntVector> rs;
  for (const auto& r : rays) rs.push_back(to_int_vector(r));
  std::map<Face, WeightPair> w;
  for (std::size_t k = 0; k < cones_1based.size(); ++k) {
    Face f;
    for (int i : cones_1based[k]) f.push_back(i - 1);
    std::sort(f.begin(), f.end());
    w[f] = weights.empty() ? WeightPair{1, 0} : weights[k];
  }
  return MultiFan(n, std::move(rs), w);
}

MultiFan p2() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {1, 3}, {2, 3}}); }

MultiFan p112() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{1, 2}, {1, 3}, {2, 3}}); }

MultiFan star() {
  return make_fan(2, {{1, 0}, {-2, 1}, {1, -1}, {-1, 2}, {0, -1}},
                  {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

MultiFan folded() {
  return make_fan(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 1}, {0, -1}},
                  {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}},
                  {{1, 0}, {0, 1}, {1, 0}, {1, 0}, {1, 0}});
}

MultiFan ex24() {
  return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 0}, {0, 1}},
                  {{1, 2}, {2, 3}, {1, 3}, {4, 5}},
                  {{2, 0}, {1, 0}, {1, 0}, {0, 1}});
}

MultiFan square() {
  return make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

} // namespace

MultiPolytope p2_triangle() { return MultiPolytope(p2(), rats({1, 1, 1})); }
MultiPolytope p112_triangle() { return MultiPolytope(p112(), rats({2, 1, 0})); }
MultiPolytope unit_square() { return MultiPolytope(square(), rats({1, 1, 0, 0})); }
MultiPolytope star_polytope() { return MultiPolytope(star(), rats({1, 1, 1, 1, 1})); }

} // namespace multifan::fixtures
