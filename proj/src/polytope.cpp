#include "multifan/polytope.hpp"

#include "multifan/error.hpp"

#include <algorithm>

namespace multifan {

Shift parse_shift(const std::string& text) {
  if (text == "exact") return Shift::exact;
  if (text == "plus") return Shift::plus;
  if (text == "minus") return Shift::minus;
  throw Error(ErrorKind::parse_error, "unknown shift '" + text + "' (expected exact, plus or minus)");
}

const char* to_string(Shift s) {
  switch (s) {
  case Shift::exact: return "exact";
  case Shift::plus: return "plus";
  case Shift::minus: return "minus";
  }
  return "?";
}

EpsRat pairing(const EpsVector& u, const IntVector& v) { return {pairing(u.a, v), pairing(u.b, v)}; }

MultiPolytope::MultiPolytope(MultiFan fan, std::vector<Rat> support)
    : fan_(std::move(fan)), support_(std::move(support)) {
  if (static_cast<int>(support_.size()) != fan_.num_rays())
    throw Error(ErrorKind::dimension_mismatch, "need one support number per ray");
}

void require_complete(const MultiPolytope& p) {
  p.fan().require_valid();
  if (!is_complete(p.fan())) throw Error(ErrorKind::not_complete, "multi-fan is not complete");
}

RatVector vertex(const MultiPolytope& p, const Face& top) {
  const TopCone* c = p.fan().find_top(top);
  if (!c) throw Error(ErrorKind::invalid_fan, "not a top-dimensional face");
  if (!c->independent) throw Error(ErrorKind::singular, "top cone is degenerate");
  RatVector u(p.dim());
  for (std::size_t k = 0; k < c->face.size(); ++k)
    for (int j = 0; j < p.dim(); ++j) u[j] += p.c(c->face[k]) * c->dual[k][j];
  return u;
}

void require_lattice(const MultiPolytope& p) {
  const auto& fan = p.fan();
  for (int i = 0; i < fan.num_rays(); ++i)
    if (!fan.primitive()[i])
      throw Error(ErrorKind::not_primitive, "ray " + std::to_string(i + 1) + " is not primitive");
  for (const auto& c : fan.top_cones()) {
    if (!c.independent) continue;
    if (!is_integral(vertex(p, c.face))) {
      std::string name;
      for (int i : c.face) name += (name.empty() ? "" : ",") + std::to_string(i + 1);
      throw Error(ErrorKind::not_lattice, "vertex of cone {" + name + "} is not a lattice point");
    }
  }
}

std::vector<EpsRat> shifted_support(const MultiPolytope& p, Shift shift) {
  const Rat delta = shift == Shift::plus ? 1 : shift == Shift::minus ? -1 : 0;
  std::vector<EpsRat> out;
  for (const auto& c : p.support()) out.emplace_back(c, delta);
  return out;
}

namespace {

// b_j = <u, v_j> - c_j for every label, rejecting points on a hyperplane.
std::vector<int> wall_signs(const MultiFan& fan, const std::vector<EpsRat>& support, const EpsVector& u) {
  std::vector<int> s(fan.num_rays());
  for (int j = 0; j < fan.num_rays(); ++j) {
    s[j] = (pairing(u, fan.ray(j)) - support[j]).sign();
    if (s[j] == 0) throw Error(ErrorKind::on_wall, "point lies on hyperplane F_" + std::to_string(j + 1));
  }
  return s;
}

struct SupportProjection {
  ProjectedFan projected;
  EpsVector base;
  std::vector<EpsRat> support;
};

SupportProjection project_support(const MultiFan& fan, const std::vector<EpsRat>& c, int i) {
  auto projected = project(fan, {i});
  const IntVector& vi = fan.ray(i);
  Rat norm = 0;
  for (const auto& x : vi) norm += x * x;
  EpsVector base(RatVector(fan.dim()), RatVector(fan.dim()));
  for (int k = 0; k < fan.dim(); ++k) {
    base.a[k] = c[i].a / norm * vi[k];
    base.b[k] = c[i].b / norm * vi[k];
  }
  std::vector<EpsRat> support;
  for (int old : projected.labels) support.push_back(c[old] - pairing(base, fan.ray(old)));
  return {std::move(projected), std::move(base), std::move(support)};
}

EpsVector to_quotient(const QuotientProjection& map, const EpsVector& u, const EpsVector& base) {
  RatVector a = u.a, b = u.b;
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] -= base.a[k];
    b[k] -= base.b[k];
  }
  return {map.to_quotient_dual(a), map.to_quotient_dual(b)};
}

} // namespace

DhEvaluator::DhEvaluator(const MultiPolytope& p, const RatVector& v) : p_(&p) {
  p.fan().require_valid();
  if (!is_generic(p.fan(), v)) throw Error(ErrorKind::not_generic, "direction is not generic");
  for (const auto& c : p.fan().top_cones()) {
    auto frame = cone_frame(c, v);
    cones_.push_back({c.face, frame.signs, frame.parity * c.weight.net()});
  }
}

std::int64_t DhEvaluator::eval(const std::vector<EpsRat>& support, const EpsVector& u) const {
  const auto b = wall_signs(p_->fan(), support, u);
  std::int64_t total = 0;
  for (const auto& c : cones_) {
    bool inside = true;
    for (std::size_t k = 0; k < c.labels.size() && inside; ++k) inside = c.sigma[k] * b[c.labels[k]] > 0;
    if (inside) total += c.coefficient;
  }
  return total;
}

std::int64_t DhEvaluator::operator()(const RatVector& u, Shift shift) const {
  return eval(shifted_support(*p_, shift), EpsVector(u));
}

std::int64_t dh_eval(const MultiPolytope& p, const RatVector& u, Shift shift, const RatVector& v) {
  return DhEvaluator(p, v)(u, shift);
}

RatVector ProjectedPolytope::to_quotient(const RatVector& u) const {
  RatVector d = u;
  for (std::size_t k = 0; k < d.size(); ++k) d[k] -= base[k];
  return map.to_quotient_dual(d);
}

ProjectedPolytope project_polytope(const MultiPolytope& p, int i) {
  if (p.dim() < 2) throw Error(ErrorKind::unsupported, "projection of a 1-dimensional multi-polytope");
  if (i < 0 || i >= p.fan().num_rays()) throw Error(ErrorKind::invalid_fan, "label out of range");
  auto sp = project_support(p.fan(), shifted_support(p, Shift::exact), i);
  std::vector<Rat> c;
  for (const auto& x : sp.support) c.push_back(x.a);
  return {MultiPolytope(std::move(sp.projected.fan), std::move(c)), std::move(sp.projected.labels),
          std::move(sp.projected.map), std::move(sp.base.a)};
}

struct WindingNumber::Node {
  MultiFan fan;
  std::vector<EpsRat> support;
  struct Child {
    std::unique_ptr<Node> node;
    QuotientProjection map;
    EpsVector base;
    std::vector<int> adjacent; // old labels j with {i, j} in Sigma
  };
  std::vector<std::unique_ptr<Child>> children; // by label, for dim >= 2

  Node(MultiFan f, std::vector<EpsRat> c) : fan(std::move(f)), support(std::move(c)) {
    if (fan.dim() < 2) return;
    for (int i = 0; i < fan.num_rays(); ++i) {
      auto sp = project_support(fan, support, i);
      auto labels = sp.projected.labels;
      auto node = std::make_unique<Node>(std::move(sp.projected.fan), std::move(sp.support));
      children.push_back(std::make_unique<Child>(
          Child{std::move(node), std::move(sp.projected.map), std::move(sp.base), std::move(labels)}));
    }
  }

  std::int64_t eval(const EpsVector& u, Rng& rng) const {
    const int n = fan.dim();
    const auto side = wall_signs(fan, support, u);
    if (n == 0) return fan.top_cones().front().weight.net();
    if (n == 1) {
      // Hyperplanes to the left of u; a ray pointing right has sign -1.
      std::int64_t total = 0;
      for (int j = 0; j < fan.num_rays(); ++j) {
        const int vj = sign(fan.ray(j)[0]);
        if (side[j] * vj > 0) total += (vj > 0 ? -1 : 1) * fan.weight({j}).net();
      }
      return total;
    }
    Int big = 1;
    for (const auto& r : fan.rays())
      for (const auto& x : r) big = std::max(big, Int(abs(x)));
    const long bound = 8 * to_i64(big);
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
      IntVector gamma(n);
      for (auto& x : gamma) x = Int(dist(rng));
      const RatVector g = to_rat(gamma);
      bool ok = true;
      for (int j = 0; j < fan.num_rays() && ok; ++j) ok = pairing(g, fan.ray(j)) != 0;
      if (!ok) continue;
      std::vector<std::pair<int, EpsVector>> hits;
      for (int i = 0; i < fan.num_rays() && ok; ++i) {
        const Rat gv = pairing(g, fan.ray(i));
        const EpsRat t = (support[i] - pairing(u, fan.ray(i))) / gv;
        if (t.sign() <= 0) continue;
        EpsVector r = u;
        for (int k = 0; k < n; ++k) {
          r.a[k] += t.a * g[k];
          r.b[k] += t.b * g[k];
        }
        for (int j : children[i]->adjacent)
          if ((pairing(r, fan.ray(j)) - support[j]).is_zero()) ok = false;
        hits.emplace_back(i, std::move(r));
      }
      if (!ok) continue;
      std::int64_t total = 0;
      for (const auto& [i, r] : hits) {
        const auto& child = *children[i];
        const int s = sign(pairing(g, fan.ray(i)));
        total += s * child.node->eval(to_quotient(child.map, r, child.base), rng);
      }
      return total;
    }
    throw Error(ErrorKind::not_generic, "no generic ray direction found");
  }
};

WindingNumber::WindingNumber(const MultiPolytope& p, Shift shift) {
  p.fan().require_valid();
  root_ = std::make_unique<Node>(p.fan(), shifted_support(p, shift));
}

WindingNumber::~WindingNumber() = default;
WindingNumber::WindingNumber(WindingNumber&&) noexcept = default;

std::int64_t WindingNumber::operator()(const RatVector& u, Rng& rng) const {
  if (static_cast<int>(u.size()) != root_->fan.dim())
    throw Error(ErrorKind::dimension_mismatch, "point has wrong length");
  return root_->eval(EpsVector(u), rng);
}

std::int64_t wn_eval(const MultiPolytope& p, const RatVector& u, Shift shift, Rng& rng) {
  return WindingNumber(p, shift)(u, rng);
}

WallCrossing wall_crossing(const MultiPolytope& p, const RatVector& u_alpha, const RatVector& u_beta,
                           int wall, Rng& rng) {
  const MultiFan& fan = p.fan();
  const int n = p.dim();
  if (wall < 0 || wall >= fan.num_rays()) throw Error(ErrorKind::invalid_fan, "wall label out of range");
  const auto exact = shifted_support(p, Shift::exact);
  const auto sa = wall_signs(fan, exact, EpsVector(u_alpha));
  const auto sb = wall_signs(fan, exact, EpsVector(u_beta));

  // Labels whose hyperplane coincides with F_wall.
  const IntVector& vw = fan.ray(wall);
  std::vector<int> same;
  for (int j = 0; j < fan.num_rays(); ++j) {
    RatMatrix m = {to_rat(vw), to_rat(fan.ray(j))};
    bool parallel = rank(m) == 1;
    bool coincide = false;
    if (parallel) {
      std::size_t k = 0;
      while (vw[k] == 0) ++k;
      Rat lambda = Rat(fan.ray(j)[k]) / Rat(vw[k]);
      coincide = p.c(j) == lambda * p.c(wall);
    }
    if (coincide) {
      if (sa[j] == sb[j]) throw Error(ErrorKind::not_generic, "segment does not cross the wall");
      same.push_back(j);
    } else if (sa[j] != sb[j]) {
      throw Error(ErrorKind::not_generic, "segment crosses F_" + std::to_string(j + 1) + " besides the wall");
    }
  }

  RatVector d(n);
  for (int k = 0; k < n; ++k) d[k] = u_beta[k] - u_alpha[k];
  const Rat t = (p.c(wall) - pairing(u_alpha, vw)) / pairing(d, vw);
  EpsVector mu(u_alpha);
  for (int k = 0; k < n; ++k) mu.a[k] += t * d[k];

  DhEvaluator dh(p, to_rat(choose_generic(fan, rng)));
  WallCrossing out;
  out.lhs = dh(u_alpha, Shift::exact) - dh(u_beta, Shift::exact);
  for (int j : same) {
    auto sp = project_support(fan, exact, j);
    std::vector<Rat> c;
    for (const auto& x : sp.support) c.push_back(x.a);
    MultiPolytope child(sp.projected.fan, std::move(c));
    DhEvaluator child_dh(child, to_rat(choose_generic(child.fan(), rng)));
    const EpsVector point = to_quotient(sp.projected.map, mu, sp.base);
    out.rhs += sign(pairing(d, fan.ray(j))) * child_dh(point.a, Shift::exact);
  }
  return out;
}

bool wall_crossing_check(const MultiPolytope& p, const RatVector& u_alpha, const RatVector& u_beta,
                         int wall, Rng& rng) {
  return wall_crossing(p, u_alpha, u_beta, wall, rng).holds();
}

} // namespace multifan
