#include "doctest.h"

#include "multifan/error.hpp"
#include "multifan/lattice.hpp"
#include "multifan/random.hpp"

#include <complex>
#include <set>

using namespace multifan;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

RatVector rv(std::initializer_list<const char*> xs) {
  RatVector v;
  for (auto x : xs) v.push_back(parse_rat(x));
  return v;
}

std::vector<IntVector> random_basis(Rng& rng, int n, int bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    std::vector<IntVector> rays(n, IntVector(n));
    for (auto& r : rays)
      for (auto& x : r) x = Int(dist(rng));
    IntMatrix m(n, IntVector(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = rays[j][i];
    if (determinant(m) != 0) return rays;
  }
}

} // namespace

TEST_CASE("pairing") {
  CHECK(pairing(rv({"1", "-1/2"}), iv({0, 1})) == Rat(-1, 2));
  CHECK(pairing(rv({"0", "0"}), iv({3, -7})) == 0);
  CHECK_THROWS_AS(pairing(rv({"1"}), iv({1, 2})), Error);
}

TEST_CASE("dual basis of small examples") {
  auto d = dual_basis({iv({1, 0}), iv({0, 1})});
  CHECK(d[0] == rv({"1", "0"}));
  CHECK(d[1] == rv({"0", "1"}));

  d = dual_basis({iv({1, 0}), iv({-1, -2})});
  CHECK(d[0] == rv({"1", "-1/2"}));
  CHECK(d[1] == rv({"0", "-1/2"}));

  d = dual_basis({iv({1, 0}), iv({-2, 1})});
  CHECK(d[0] == rv({"1", "2"}));
  CHECK(d[1] == rv({"0", "1"}));

  CHECK_THROWS_AS(dual_basis({iv({1, 2}), iv({2, 4})}), Error);
}

TEST_CASE("quotient groups") {
  auto q = quotient_group({iv({1, 0}), iv({0, 1})});
  CHECK(q.order == 1);
  CHECK(q.representatives.size() == 1);

  const std::vector<IntVector> p112 = {iv({1, 0}), iv({-1, -2})};
  q = quotient_group(p112);
  CHECK(q.order == 2);
  REQUIRE(q.representatives.size() == 2);
  // One representative is trivial, the other is in the class of (0,1).
  int trivial = 0, odd = 0;
  for (const auto& g : q.representatives) {
    if (same_class(g, iv({0, 0}), p112)) ++trivial;
    if (same_class(g, iv({0, 1}), p112)) ++odd;
  }
  CHECK(trivial == 1);
  CHECK(odd == 1);

  q = quotient_group({iv({2, 0}), iv({0, 3})});
  CHECK(q.order == 6);
  CHECK(q.invariant_factors == IntVector{Int(1), Int(6)});
}

TEST_CASE("character values") {
  CHECK(character(rv({"0", "-1/2"}), iv({0, 1})).phase() == Rat(1, 2));
  CHECK(character(rv({"3/7", "1/5"}), iv({0, 0})).is_one());
  CHECK(character(rv({"2", "-3"}), iv({5, 4})).is_one());
  CHECK(std::abs(character(rv({"0", "-1/2"}), iv({0, 1})).value() - std::complex<double>(-1, 0)) < 1e-15);
}

TEST_CASE("quotient projection") {
  QuotientProjection a({iv({1, 1})}, 2);
  CHECK(a.quotient_dim() == 1);
  CHECK(a.project(iv({1, 1})) == iv({0}));
  // (1,0) generates the quotient Z^2 / Z(1,1).
  CHECK(abs(a.project(iv({1, 0}))[0]) == 1);

  QuotientProjection b({iv({2, 0})}, 2);
  CHECK(b.project(iv({1, 0})) == iv({0}));
  CHECK(abs(b.project(iv({0, 1}))[0]) == 1);

  QuotientProjection c({iv({1, 0}), iv({0, 1})}, 2);
  CHECK(c.quotient_dim() == 0);
  CHECK(c.project(iv({5, 3})).empty());

  QuotientProjection id({}, 3);
  CHECK(id.project(iv({1, 2, 3})) == iv({1, 2, 3}));
}

TEST_CASE("property: dual basis reproduces the Kronecker delta") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 4;
    auto rays = random_basis(rng, n, 6);
    auto d = dual_basis(rays);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(pairing(d[i], rays[j]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("property: quotient order equals |det| and representatives are distinct") {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 3;
    auto rays = random_basis(rng, n, 5);
    IntMatrix m(n, IntVector(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = rays[j][i];
    auto q = quotient_group(rays);
    CHECK(q.order == abs(determinant(m)));
    Int prod = 1;
    for (const auto& s : q.invariant_factors) prod *= s;
    CHECK(prod == q.order);
    CHECK(Int(static_cast<long>(q.representatives.size())) == q.order);
    for (std::size_t a = 0; a < q.representatives.size(); ++a)
      for (std::size_t b = a + 1; b < q.representatives.size(); ++b)
        CHECK_FALSE(same_class(q.representatives[a], q.representatives[b], rays));
  }
}

TEST_CASE("property: characters are class functions and sum to |G| or 0") {
  Rng rng(13);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    auto rays = random_basis(rng, n, 4);
    auto dual = dual_basis(rays);
    auto q = quotient_group(rays);
    // u in N_I^*: an integer combination of the dual basis.
    RatVector u(n);
    for (int i = 0; i < n; ++i) {
      long c = coef(rng);
      for (int k = 0; k < n; ++k) u[k] += c * dual[i][k];
    }
    for (const auto& g : q.representatives) {
      IntVector shifted = g;
      for (int i = 0; i < n; ++i) {
        Int c = coef(rng);
        for (int k = 0; k < n; ++k) shifted[k] += c * rays[i][k];
      }
      CHECK(character(u, g) == character(u, shifted));
    }
    std::complex<double> total = 0;
    for (const auto& g : q.representatives) total += character(u, g).value();
    const bool integral = is_integral(u);
    const double expect = integral ? q.order.get_d() : 0.0;
    CHECK(std::abs(total - expect) < 1e-9);
  }
}

TEST_CASE("property: projections kill the saturated span and are surjective") {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    int k = 1 + trial % (n - 1);
    auto basis = random_basis(rng, n, 4);
    std::vector<IntVector> span(basis.begin(), basis.begin() + k);
    QuotientProjection p(span, n);
    CHECK(p.quotient_dim() == n - k);
    for (const auto& v : span) CHECK(gcd_of(p.project(v)) == 0);
    // Surjective: the projection matrix has unit content in its maximal minors,
    // equivalently the Smith diagonal of P is all ones.
    auto snf = smith_normal_form(p.matrix());
    for (const auto& s : snf.diagonal) CHECK(abs(s) == 1);
  }
}
