#include "multifan/arrangement.hpp"

#include "multifan/lattice.hpp"

#include <set>

namespace multifan {

IntVector primitive_normal(const RatVector& normal) {
  Int den = 1;
  for (const auto& x : normal) den = lcm(den, x.get_den());
  IntVector out(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) {
    Rat s = normal[i] * den;
    out[i] = s.get_num();
  }
  Int g = gcd_of(out);
  if (g == 0) return out;
  for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

std::vector<int> sign_vector(const std::vector<IntVector>& normals, const RatVector& x) {
  std::vector<int> s;
  s.reserve(normals.size());
  for (const auto& a : normals) s.push_back(sign(pairing(x, a)));
  return s;
}

namespace {

IntVector to_primitive_point(const RatVector& p) {
  Int den = 1;
  for (const auto& x : p) den = lcm(den, x.get_den());
  IntVector out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i] * den).get_num();
  Int g = gcd_of(out);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

std::vector<IntVector> dedupe_normals(const std::vector<IntVector>& normals) {
  std::set<IntVector> seen;
  std::vector<IntVector> out;
  for (const auto& a : normals) {
    IntVector p = primitive_normal(to_rat(a));
    bool zero = true;
    for (const auto& x : p) zero = zero && x == 0;
    if (zero || !seen.insert(p).second) continue;
    out.push_back(std::move(p));
  }
  return out;
}

} // namespace

std::vector<IntVector> central_chambers(const std::vector<IntVector>& input, int n) {
  if (n == 0) return {IntVector{}};
  const std::vector<IntVector> normals = dedupe_normals(input);

  std::vector<IntVector> chambers;
  {
    IntVector e(n);
    e[0] = 1;
    chambers.push_back(std::move(e));
  }

  for (std::size_t k = 0; k < normals.size(); ++k) {
    const IntVector& h = normals[k];
    std::vector<IntVector> prior(normals.begin(), normals.begin() + k);
    std::vector<IntVector> candidates;
    for (auto& p : chambers)
      if (pairing(to_rat(p), h) != 0) candidates.push_back(p);

    // Rational basis of the hyperplane h.x = 0.
    std::size_t pivot = 0;
    while (h[pivot] == 0) ++pivot;
    std::vector<RatVector> basis;
    for (int j = 0; j < n; ++j) {
      if (static_cast<std::size_t>(j) == pivot) continue;
      RatVector b(n);
      b[j] = 1;
      b[pivot] = make_rat(-h[j], h[pivot]);
      basis.push_back(std::move(b));
    }
    std::vector<IntVector> restricted;
    for (const auto& a : prior) {
      RatVector r;
      for (const auto& b : basis) r.push_back(pairing(b, a));
      restricted.push_back(primitive_normal(r));
    }
    const RatVector hr = to_rat(h);
    for (const auto& qbar : central_chambers(restricted, n - 1)) {
      RatVector q(n);
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < n; ++i) q[i] += Rat(qbar[j]) * basis[j][i];
      bool have = false;
      Rat eps;
      for (const auto& a : prior) {
        Rat aq = pairing(q, a);
        Rat ah = pairing(hr, a);
        if (aq == 0 || ah == 0) continue;
        Rat bound = abs(aq) / abs(ah);
        if (!have || bound < eps) {
          eps = bound;
          have = true;
        }
      }
      eps = have ? Rat(eps / 2) : Rat(1);
      RatVector plus(n), minus(n);
      for (int i = 0; i < n; ++i) {
        plus[i] = q[i] + eps * hr[i];
        minus[i] = q[i] - eps * hr[i];
      }
      candidates.push_back(to_primitive_point(plus));
      candidates.push_back(to_primitive_point(minus));
    }

    std::vector<IntVector> active(normals.begin(), normals.begin() + k + 1);
    std::set<std::vector<int>> seen;
    chambers.clear();
    for (auto& p : candidates)
      if (seen.insert(sign_vector(active, to_rat(p))).second) chambers.push_back(std::move(p));
  }
  return chambers;
}

} // namespace multifan
