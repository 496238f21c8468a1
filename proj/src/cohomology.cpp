#include "multifan/cohomology.hpp"

#include "multifan/error.hpp"
#include "multifan/random.hpp"

#include <cmath>
#include <set>

namespace multifan {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Face support_of(const Monomial& m) {
  Face f;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) f.push_back(static_cast<int>(i));
  return f;
}

// ---- Polynomial ----

template <class T>
Polynomial<T> Polynomial<T>::constant(int vars, const T& c) {
  Polynomial p(vars);
  p.add(Monomial(vars, 0), c);
  return p;
}

template <class T>
Polynomial<T> Polynomial<T>::variable(int vars, int i, const T& c) {
  Polynomial p(vars);
  Monomial m(vars, 0);
  m[i] = 1;
  p.add(m, c);
  return p;
}

template <class T>
Polynomial<T> Polynomial<T>::linear(const std::vector<T>& coeffs) {
  const int vars = static_cast<int>(coeffs.size());
  Polynomial p(vars);
  for (int i = 0; i < vars; ++i) p += variable(vars, i, coeffs[i]);
  return p;
}

template <class T>
int Polynomial<T>::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

template <class T>
bool Polynomial<T>::is_homogeneous(int k) const {
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != k) return false;
  return true;
}

template <class T>
T Polynomial<T>::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? T(0) : it->second;
}

template <class T>
void Polynomial<T>::add(const Monomial& m, const T& c) {
  if (static_cast<int>(m.size()) != vars_)
    throw Error(ErrorKind::dimension_mismatch, "monomial has the wrong number of variables");
  if (c == T(0)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == T(0)) terms_.erase(it);
  }
}

template <class T>
Polynomial<T>& Polynomial<T>::operator+=(const Polynomial& o) {
  if (vars_ == 0 && terms_.empty()) vars_ = o.vars_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

template <class T>
Polynomial<T> Polynomial<T>::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  out += o;
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::operator-(const Polynomial& o) const {
  return *this + o.scaled(T(-1));
}

template <class T>
Polynomial<T> Polynomial<T>::scaled(const T& s) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) out.add(m, c * s);
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::times(const Polynomial& o, int max_degree) const {
  Polynomial out(std::max(vars_, o.vars_));
  for (const auto& [ma, ca] : terms_) {
    const int da = total_degree(ma);
    for (const auto& [mb, cb] : o.terms_) {
      if (max_degree >= 0 && da + total_degree(mb) > max_degree) continue;
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add(m, ca * cb);
    }
  }
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::power(int k, int max_degree) const {
  Polynomial out = constant(vars_, T(1));
  for (int i = 0; i < k; ++i) out = out.times(*this, max_degree);
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::homogeneous_part(int k) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == k) out.terms_.emplace(m, c);
  return out;
}

template <class T>
Polynomial<T> Polynomial<T>::truncated(int max_degree) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) <= max_degree) out.terms_.emplace(m, c);
  return out;
}

template <class T>
T Polynomial<T>::evaluate(const std::vector<T>& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw Error(ErrorKind::dimension_mismatch, "evaluation point has the wrong length");
  T sum(0);
  for (const auto& [m, c] : terms_) {
    T term = c;
    for (int i = 0; i < vars_; ++i)
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    sum += term;
  }
  return sum;
}

template class Polynomial<Rat>;
template class Polynomial<Complex>;

// ---- face ring ----

template <class T>
Polynomial<T> reduce(const MultiFan& fan, const Polynomial<T>& poly) {
  Polynomial<T> out(poly.vars());
  for (const auto& [m, c] : poly.terms())
    if (fan.sigma().contains(support_of(m))) out.add(m, c);
  return out;
}

template Polynomial<Rat> reduce(const MultiFan&, const Polynomial<Rat>&);
template Polynomial<Complex> reduce(const MultiFan&, const Polynomial<Complex>&);

FaceRingElement pullback(const MultiFan& fan, const RatVector& u) {
  if (static_cast<int>(u.size()) != fan.dim())
    throw Error(ErrorKind::dimension_mismatch, "pullback of a vector of the wrong length");
  std::vector<Rat> coeffs;
  for (const auto& v : fan.rays()) coeffs.push_back(pairing(u, v));
  return FaceRingElement::linear(coeffs);
}

Polynomial<Rat> restrict(const MultiFan& fan, const FaceRingElement& elem, const Face& top) {
  const TopCone* cone = fan.find_top(top);
  if (!cone) throw Error(ErrorKind::invalid_fan, "restriction to a face that is not a top cone");
  if (!cone->independent) throw Error(ErrorKind::singular, "restriction to a degenerate cone");
  const int n = fan.dim();
  std::vector<int> slot(fan.num_rays(), -1);
  std::vector<Polynomial<Rat>> forms;
  for (std::size_t k = 0; k < cone->face.size(); ++k) {
    slot[cone->face[k]] = static_cast<int>(k);
    forms.push_back(Polynomial<Rat>::linear(cone->dual[k]));
  }
  Polynomial<Rat> out(n);
  for (const auto& [m, c] : elem.terms()) {
    Polynomial<Rat> term = Polynomial<Rat>::constant(n, c);
    bool dead = false;
    for (std::size_t i = 0; i < m.size() && !dead; ++i) {
      if (m[i] == 0) continue;
      if (slot[i] < 0) dead = true;
      else term = term * forms[slot[i]].power(m[i]);
    }
    if (!dead) out += term;
  }
  return out;
}

// ---- index map ----

namespace {

RatVector default_point(const MultiFan& fan) {
  Rng rng(kDefaultSeed);
  return to_rat(choose_generic(fan, rng));
}

Rat rat_power(const Rat& x, int k) {
  Rat out = 1;
  if (k < 0) return Rat(1) / rat_power(x, -k);
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

} // namespace

IndexMap::IndexMap(const MultiFan& fan) : IndexMap(fan, default_point(fan)) {}

IndexMap::IndexMap(const MultiFan& fan, const RatVector& point)
    : rays_(fan.num_rays()), point_(point) {
  fan.require_valid();
  if (static_cast<int>(point.size()) != fan.dim())
    throw Error(ErrorKind::dimension_mismatch, "index point has the wrong length");
  for (const auto& c : fan.top_cones()) {
    if (c.weight.net() == 0) continue;
    Cone cone{c.face, c.weight.net(), {}, Rat(c.quotient.order)};
    for (const auto& u : c.dual) {
      Rat f = pairing(u, point);
      if (f == 0) throw Error(ErrorKind::not_generic, "index point lies on a wall");
      cone.forms.push_back(f);
      cone.denominator *= f;
    }
    cones_.push_back(std::move(cone));
  }
}

Rat IndexMap::value(const Monomial& m) const {
  if (static_cast<int>(m.size()) != rays_)
    throw Error(ErrorKind::dimension_mismatch, "monomial has the wrong number of variables");
  const Face supp = support_of(m);
  Rat sum = 0;
  for (const auto& c : cones_) {
    if (!std::includes(c.face.begin(), c.face.end(), supp.begin(), supp.end())) continue;
    Rat term = c.weight;
    for (std::size_t k = 0; k < c.face.size(); ++k) term *= rat_power(c.forms[k], m[c.face[k]]);
    sum += term / c.denominator;
  }
  return sum;
}

template <class T>
T IndexMap::apply(const Polynomial<T>& elem) const {
  T sum(0);
  for (const auto& [m, c] : elem.terms()) sum += c * from_rat<T>(value(m));
  return sum;
}

template Rat IndexMap::apply(const Polynomial<Rat>&) const;
template Complex IndexMap::apply(const Polynomial<Complex>&) const;

template <class T>
T index(const MultiFan& fan, const Polynomial<T>& elem) {
  if (!elem.is_homogeneous(fan.dim()))
    throw Error(ErrorKind::unsupported, "index is only defined here for homogeneous degree n");
  return IndexMap(fan).apply(elem);
}

template <class T>
T integral(const MultiFan& fan, const Polynomial<T>& elem) {
  const auto top = elem.homogeneous_part(fan.dim());
  if (top.is_zero()) return T(0);
  return IndexMap(fan).apply(top);
}

template Rat index(const MultiFan&, const Polynomial<Rat>&);
template Complex index(const MultiFan&, const Polynomial<Complex>&);
template Rat integral(const MultiFan&, const Polynomial<Rat>&);
template Complex integral(const MultiFan&, const Polynomial<Complex>&);

FaceRingElement c1T(const MultiPolytope& p) { return FaceRingElement::linear(p.support()); }
FaceRingElement c1(const MultiPolytope& p) { return c1T(p); }

Rat volume(const MultiPolytope& p) {
  require_complete(p);
  const int n = p.dim();
  const auto top = reduce(p.fan(), c1(p).power(n));
  return integral(p.fan(), top) / Rat(factorial(n));
}

// ---- Todd classes ----

namespace {

template <class T>
T unity_as(const UnityRoot& r);
template <>
Rat unity_as<Rat>(const UnityRoot& r) {
  if (!r.is_one()) throw Error(ErrorKind::unsupported, "exact path used with a nontrivial character");
  return 1;
}
template <>
Complex unity_as<Complex>(const UnityRoot& r) { return r.value(); }

bool all_trivial(const std::vector<UnityRoot>& g) {
  return std::all_of(g.begin(), g.end(), [](const UnityRoot& r) { return r.is_one(); });
}

Polynomial<Complex> to_complex(const Polynomial<Rat>& p) {
  Polynomial<Complex> out(p.vars());
  for (const auto& [m, c] : p.terms()) out.add(m, multifan::to_complex(c));
  return out;
}

template <class T>
Polynomial<T> convert(const Polynomial<Rat>& p) {
  if constexpr (std::is_same_v<T, Rat>) return p;
  else return to_complex(p);
}

Int snap(const Complex& x, const Tolerance& tol, const char* what) {
  const double r = std::round(x.real());
  if (std::abs(x.imag()) > tol.integrality || std::abs(x.real() - r) > tol.integrality)
    throw Error(ErrorKind::verification_failed,
                std::string(what) + " is not an integer: " + std::to_string(x.real()) + " + " +
                    std::to_string(x.imag()) + "i");
  return Int(static_cast<long>(r));
}

Int snap(const Rat& x, const Tolerance&, const char* what) {
  if (x.get_den() != 1)
    throw Error(ErrorKind::verification_failed, std::string(what) + " is not an integer: " + to_string(x));
  return x.get_num();
}

} // namespace

std::vector<std::vector<UnityRoot>> todd_group(const MultiFan& fan) {
  std::set<std::vector<Rat>> seen;
  std::vector<std::vector<UnityRoot>> out;
  for (const auto& c : fan.top_cones()) {
    if (!c.independent) continue;
    for (const auto& g : c.quotient.representatives) {
      std::vector<UnityRoot> rho(fan.num_rays());
      for (std::size_t k = 0; k < c.face.size(); ++k) rho[c.face[k]] = character(c.dual[k], g);
      std::vector<Rat> key;
      for (const auto& r : rho) key.push_back(r.phase());
      if (seen.insert(key).second) out.push_back(rho);
    }
  }
  std::stable_partition(out.begin(), out.end(), all_trivial);
  return out;
}

template <class T>
GradedSeries<T> todd_class(const MultiFan& fan) {
  fan.require_valid();
  const int n = fan.dim();
  const int d = fan.num_rays();
  GradedSeries<T> total(d);
  for (const auto& rho : todd_group(fan)) {
    auto prod = Polynomial<T>::constant(d, T(1));
    for (int i = 0; i < d; ++i) {
      const auto f = twisted_todd(unity_as<T>(rho[i]), n);
      Polynomial<T> fi(d);
      Monomial m(d, 0);
      for (int k = 0; k <= n; ++k) {
        m[i] = k;
        fi.add(m, f[k]);
      }
      prod = reduce(fan, prod.times(fi, n));
    }
    total += prod;
  }
  return total;
}

template <class T>
GradedSeries<T> equivariant_todd_class(const MultiFan& fan) {
  return todd_class<T>(fan);
}

template <class T>
GradedSeries<T> exp_c1(const MultiPolytope& p) {
  const int n = p.dim();
  const auto c = convert<T>(c1(p));
  auto term = Polynomial<T>::constant(p.fan().num_rays(), T(1));
  GradedSeries<T> out = term;
  for (int k = 1; k <= n; ++k) {
    term = reduce(p.fan(), term.times(c, n)).scaled(T(1) / T(k));
    out += term;
  }
  return out;
}

template GradedSeries<Rat> todd_class(const MultiFan&);
template GradedSeries<Complex> todd_class(const MultiFan&);
template GradedSeries<Rat> equivariant_todd_class(const MultiFan&);
template GradedSeries<Complex> equivariant_todd_class(const MultiFan&);
template GradedSeries<Rat> exp_c1(const MultiPolytope&);
template GradedSeries<Complex> exp_c1(const MultiPolytope&);

// ---- counts ----

namespace {

double magnitude(const Rat& x) { return std::abs(x.get_d()); }
double magnitude(const Complex& x) { return std::abs(x); }

// 1 / (1 - rho e^{-a s}) with n+1 stored coefficients.
template <class T>
LaurentSeries1<T> pole_factor(const Rat& a, const UnityRoot& rho, int n) {
  if (rho.is_one()) {
    const auto td = todd_coefficients(n);
    LaurentSeries1<T> f(-1, n - 1);
    for (int k = -1; k <= n - 1; ++k) f.ref(k) = from_rat<T>(td[k + 1] * rat_power(a, k));
    return f;
  }
  const T r = unity_as<T>(rho);
  std::vector<T> den(n + 1, T(0));
  Rat term = 1;
  for (int k = 0; k <= n; ++k) {
    den[k] = -r * from_rat<T>(term);
    term = term * (-a) / Rat(k + 1);
  }
  den[0] += T(1);
  const auto inv = series_inverse(den, n);
  LaurentSeries1<T> f(0, n);
  for (int k = 0; k <= n; ++k) f.ref(k) = inv[k];
  return f;
}

template <class T>
Int todd_count_impl(const MultiPolytope& p, const RatVector& w, const Tolerance& tol) {
  const auto& fan = p.fan();
  const int n = p.dim();
  LaurentSeries1<T> total(0, n);
  bool started = false;
  double scale = 1.0;
  for (const auto& c : fan.top_cones()) {
    if (c.weight.net() == 0) continue;
    const Rat e = pairing(vertex(p, c.face), w);
    std::vector<Rat> a;
    for (const auto& u : c.dual) a.push_back(pairing(u, w));
    const T factor = from_rat<T>(Rat(c.weight.net()) / Rat(c.quotient.order));
    for (const auto& g : c.quotient.representatives) {
      LaurentSeries1<T> s(0, n);
      Rat term = 1;
      for (int k = 0; k <= n; ++k) {
        s.ref(k) = from_rat<T>(term);
        term = term * e / Rat(k + 1);
      }
      for (std::size_t k = 0; k < c.dual.size(); ++k) s = s * pole_factor<T>(a[k], character(c.dual[k], g), n);
      s = s.scaled(factor);
      for (const auto& x : s.coeffs) scale = std::max(scale, magnitude(x));
      if (!started) total = s, started = true;
      else total += s;
    }
  }
  for (int k = total.lead; k < 0; ++k) {
    const T r = total.at(k);
    if constexpr (std::is_same_v<T, Rat>) {
      if (r != 0) throw Error(ErrorKind::verification_failed, "pole terms do not cancel");
    } else if (magnitude(r) > tol.pole * scale) {
      throw Error(ErrorKind::verification_failed, "pole terms do not cancel within tolerance");
    }
  }
  return snap(total.at(0), tol, "Todd count");
}

} // namespace

Int todd_count(const MultiPolytope& p, const Tolerance& tol) {
  require_complete(p);
  require_lattice(p);
  const auto w = default_point(p.fan());
  if (p.fan().is_nonsingular()) return todd_count_impl<Rat>(p, w, tol);
  return todd_count_impl<Complex>(p, w, tol);
}

Polynomial<Rat> vol_polynomial_h(const MultiPolytope& p) {
  require_complete(p);
  const auto& fan = p.fan();
  const int n = p.dim();
  const int d = fan.num_rays();
  const IndexMap index_map(fan);
  const auto ones = FaceRingElement::linear(std::vector<Rat>(d, Rat(1)));
  const auto monomials = reduce(fan, ones.power(n));
  const Rat nfact = Rat(factorial(n));
  Polynomial<Rat> out(d);
  for (const auto& [m, multinomial] : monomials.terms()) {
    const Rat value = index_map.value(m);
    if (value == 0) continue;
    auto term = Polynomial<Rat>::constant(d, multinomial * value / nfact);
    for (int i = 0; i < d; ++i) {
      if (m[i] == 0) continue;
      const auto shift = Polynomial<Rat>::constant(d, p.c(i)) + Polynomial<Rat>::variable(d, i);
      term = term * shift.power(m[i]);
    }
    out += term;
  }
  return out;
}

namespace {

template <class T>
Int kp_count_impl(const MultiPolytope& p, const Tolerance& tol) {
  const int n = p.dim();
  const auto vol = vol_polynomial_h(p);
  std::vector<T> fact(n + 1, T(1));
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * T(k);
  T total(0);
  for (const auto& rho : todd_group(p.fan())) {
    std::vector<std::vector<T>> f;
    for (const auto& r : rho) f.push_back(twisted_todd(unity_as<T>(r), n));
    for (const auto& [beta, coeff] : vol.terms()) {
      T term = from_rat<T>(coeff);
      for (std::size_t i = 0; i < beta.size(); ++i) term *= f[i][beta[i]] * fact[beta[i]];
      total += term;
    }
  }
  return snap(total, tol, "Khovanskii-Pukhlikov count");
}

} // namespace

Int kp_count(const MultiPolytope& p, const Tolerance& tol) {
  require_complete(p);
  require_lattice(p);
  if (p.fan().is_nonsingular()) return kp_count_impl<Rat>(p, tol);
  return kp_count_impl<Complex>(p, tol);
}

} // namespace multifan
