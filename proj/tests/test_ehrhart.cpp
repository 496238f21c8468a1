#include "doctest.h"

#include "generators.hpp"
#include "multifan/cohomology.hpp"
#include "multifan/ehrhart.hpp"
#include "multifan/error.hpp"
#include "multifan/fixtures.hpp"
#include "multifan/kernels.hpp"

using namespace multifan;
namespace fx = multifan::fixtures;

namespace {

// Sum of dh_eval over the box, one point at a time.
Int naive_count(const MultiPolytope& p, Shift shift) {
  const auto box = support_box(p);
  const int n = p.dim();
  Rng rng(5);
  DhEvaluator dh(p, to_rat(choose_generic(p.fan(), rng)));
  Int total = 0;
  std::vector<std::int64_t> u(box.lo);
  for (;;) {
    RatVector r;
    for (auto x : u) r.push_back(Rat(static_cast<long>(x)));
    total += dh(r, shift);
    int k = n - 1;
    while (k >= 0 && u[k] == box.hi[k]) u[k] = box.lo[k], --k;
    if (k < 0) break;
    ++u[k];
  }
  return total;
}

MultiPolytope segment(long a, long b) {
  return MultiPolytope(fx::make_fan(1, {{1}, {-1}}, {{1}, {2}}), {Rat(b), Rat(-a)});
}

std::vector<Rat> ints(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

} // namespace

TEST_CASE("support boxes") {
  auto sq = fx::unit_square().fan();
  auto box = support_box(fx::unit_square());
  CHECK(box.lo == std::vector<std::int64_t>{-1, -1});
  CHECK(box.hi == std::vector<std::int64_t>{2, 2});
  auto tri = support_box(fx::p2_triangle());
  CHECK(tri.lo == std::vector<std::int64_t>{-3, -3});
  CHECK(tri.hi == std::vector<std::int64_t>{2, 2});
  auto seg = support_box(segment(0, 3));
  CHECK(seg.lo == std::vector<std::int64_t>{-1});
  CHECK(seg.hi == std::vector<std::int64_t>{4});
}

TEST_CASE("counts of fixtures") {
  CHECK(count(fx::p2_triangle()) == 10);
  CHECK(count_interior(fx::p2_triangle()) == 1);
  CHECK(count(fx::p112_triangle()) == 9);
  CHECK(count_interior(fx::p112_triangle()) == 1);
  CHECK(count(fx::unit_square()) == 4);
  CHECK(count_interior(fx::unit_square()) == 0);
  CHECK(count(dilate(fx::p2_triangle(), 2)) == 28);
  CHECK(count(dilate(fx::p2_triangle(), 0)) == 1);
  CHECK(count(segment(0, 3)) == 4);
  CHECK(count_interior(segment(0, 3)) == 2);
  CHECK(dilate(fx::p2_triangle(), 1).support() == fx::p2_triangle().support());
}

TEST_CASE("count preconditions") {
  auto bad = MultiPolytope(fx::p2(), {Rat(1, 2), 1, 1});
  CHECK_THROWS_AS(count(bad), Error);
  try {
    count(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_lattice);
  }
  auto fat = fx::make_fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {1, 3}});
  try {
    count(MultiPolytope(fat, ints({2, 1, 1})));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_primitive);
  }
  // P(1,1,2) with c = (1, 1, 0): the vertex of cone {1,3} is (1, -1/2).
  try {
    count(MultiPolytope(fx::p112(), ints({1, 1, 0})));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_lattice);
    CHECK(std::string(e.what()).find("{1,3}") != std::string::npos);
  }
}

TEST_CASE("Ehrhart polynomials and reciprocity") {
  auto e = ehrhart_polynomial(fx::p2_triangle());
  CHECK(e.coefficients == std::vector<Rat>{1, Rat(9, 2), Rat(9, 2)});
  CHECK(ehrhart_polynomial(fx::p112_triangle()).coefficients == ints({1, 4, 4}));
  CHECK(ehrhart_polynomial(fx::unit_square()).coefficients == ints({1, 2, 1}));
  CHECK(reciprocity_check(fx::p2_triangle()));
  CHECK(reciprocity_check(fx::p112_triangle()));
  CHECK(reciprocity_check(fx::unit_square()));
  CHECK(e(Rat(-1)) == 1);
}

TEST_CASE("star multi-polytope") {
  // Support numbers scaled until the vertices are integral.
  auto star = fx::star_polytope();
  Int scale = 1;
  for (const auto& c : star.fan().top_cones())
    for (const auto& x : vertex(star, c.face)) scale = lcm(scale, Int(x.get_den()));
  auto p = dilate(star, scale);
  CHECK(count(p) == naive_count(p, Shift::plus));
  CHECK(count_interior(p) == naive_count(p, Shift::minus));
  auto e = ehrhart_polynomial(p);
  CHECK(e.coefficients[0] == 2);
  CHECK(reciprocity_check(p));
  CHECK(count(p) == todd_count(p));
  CHECK(count(p) == kp_count(p));
  Rng rng(8);
  CHECK(character_identity_check(p, 8, rng));
}

TEST_CASE("character identity") {
  auto tri = fx::p2_triangle();
  auto s = character_series_eval(tri, {3, 1}, Complex(2, 0));
  CHECK(s.agrees());
  auto q = fx::p112_triangle();
  auto t = character_series_eval(q, {6, 2}, Complex(0.5, 0));
  CHECK(t.agrees());
  CHECK_THROWS_AS(character_series_eval(q, {3, 1}, Complex(0.5, 0)), Error);
  CHECK_THROWS_AS(character_series_eval(tri, {3, 1}, Complex(1, 0)), Error);

  // nu = 0: the only vertex is the origin and the limit z -> infinity is deg.
  auto zero = dilate(tri, 0);
  auto big = character_series_eval(zero, {3, 1}, Complex(1e6, 0));
  CHECK(big.lhs.real() == doctest::Approx(1).epsilon(1e-5));
  CHECK(big.rhs.real() == doctest::Approx(1));

  Rng rng(12);
  CHECK(character_identity_check(tri, 8, rng));
  CHECK(character_identity_check(q, 8, rng));

  const auto p2 = fx::p2();
  std::map<Face, WeightPair> w;
  for (const auto& c : p2.top_cones()) w[c.face] = c.weight;
  w[{0, 1}].plus += 1;
  MultiFan corrupt(2, p2.rays(), w);
  CHECK_FALSE(character_identity_check(MultiPolytope(corrupt, tri.support()), 8, rng));
}

TEST_CASE("property: kernel count matches pointwise DH") {
  Rng rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    auto p = gen::random_lattice_polytope(rng, n, 1 + trial % 2, n == 3 ? 6 : 15);
    CHECK(count(p) == naive_count(p, Shift::plus));
    CHECK(count_interior(p) == naive_count(p, Shift::minus));
  }
}

TEST_CASE("property: scalar and AVX2 counts agree") {
  if (!kernels::cpu_supports(kernels::Isa::avx2)) return;
  Rng rng(606);
  const auto before = kernels::active_isa();
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    auto p = gen::random_lattice_polytope(rng, n, 2, n == 3 ? 10 : 30);
    kernels::force_isa(kernels::Isa::scalar);
    const Int a = count(p);
    kernels::force_isa(kernels::Isa::avx2);
    CHECK(count(p) == a);
  }
  kernels::force_isa(before);
}

TEST_CASE("property: Ehrhart invariants on lattice instances") {
  Rng rng(707);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = 1 + trial % 3;
    auto p = gen::random_lattice_polytope(rng, n, 1 + trial % 3, n == 3 ? 8 : 20);
    auto e = ehrhart_polynomial(p);
    CHECK(e.coefficients[0] == Rat(degree(p.fan())));
    CHECK(e.coefficients[n] == volume(p));
    CHECK(reciprocity_check(p));
    const Int c = count(p);
    CHECK(c == todd_count(p));
    CHECK(c == kp_count(p));
    CHECK(character_identity_check(p, 8, rng));
  }
}
