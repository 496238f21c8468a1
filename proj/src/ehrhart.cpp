#include "multifan/ehrhart.hpp"

#include "multifan/cohomology.hpp"
#include "multifan/error.hpp"
#include "multifan/kernels.hpp"
#include "multifan/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace multifan {

std::int64_t LatticeBox::points() const {
  std::int64_t total = 1;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    const std::int64_t side = hi[k] - lo[k] + 1;
    if (side <= 0) return 0;
    if (total > std::numeric_limits<std::int64_t>::max() / side) return std::numeric_limits<std::int64_t>::max();
    total *= side;
  }
  return total;
}

LatticeBox support_box(const MultiPolytope& p) {
  const auto& fan = p.fan();
  const int n = fan.dim();
  const int d = fan.num_rays();
  std::vector<Rat> lo(n), hi(n);
  bool found = false;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (n <= d) {
    IntMatrix m;
    std::vector<IntVector> rays;
    for (int i : pick) m.push_back(fan.ray(i)), rays.push_back(fan.ray(i));
    if (determinant(m) != 0) {
      const auto dual = dual_basis(rays);
      RatVector u(n);
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) u[j] += p.c(pick[k]) * dual[k][j];
      for (int j = 0; j < n; ++j) {
        if (!found || u[j] < lo[j]) lo[j] = u[j];
        if (!found || u[j] > hi[j]) hi[j] = u[j];
      }
      found = true;
    }
    int k = n - 1;
    while (k >= 0 && pick[k] == d - n + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!found) throw Error(ErrorKind::singular, "no independent n-subset of rays");
  LatticeBox box;
  for (int j = 0; j < n; ++j) {
    box.lo.push_back(to_i64(floor_rat(lo[j])) - 1);
    box.hi.push_back(to_i64(ceil_rat(hi[j])) + 1);
  }
  return box;
}

namespace {

constexpr std::int64_t kMaxBoxPoints = std::int64_t{1} << 32;

// Row-by-row evaluation of DH over the support box.
class RowScanner {
public:
  RowScanner(const MultiPolytope& p, Shift shift) : p_(p) {
    const auto& fan = p.fan();
    fan.require_valid();
    require_lattice(p);
    if (shift == Shift::exact)
      throw Error(ErrorKind::unsupported, "lattice sums need the plus or minus shift");
    n_ = fan.dim();
    box_ = support_box(p);
    if (box_.points() > kMaxBoxPoints) throw Error(ErrorKind::unsupported, "support box is too large");
    length_ = static_cast<std::size_t>(box_.hi[n_ - 1] - box_.lo[n_ - 1] + 1);
    rows_ = 1;
    for (int k = 0; k + 1 < n_; ++k) rows_ *= box_.hi[k] - box_.lo[k] + 1;

    Int radius = 1, ray_max = 1, c_max = 0;
    for (int k = 0; k < n_; ++k) radius = std::max({radius, Int(std::abs(box_.lo[k])), Int(std::abs(box_.hi[k]))});
    for (const auto& r : fan.rays())
      for (const auto& x : r) ray_max = std::max(ray_max, Int(abs(x)));
    for (const auto& c : p.support()) c_max = std::max(c_max, Int(abs(ceil_rat(abs(c)))));
    const Int bound = Int(n_) * radius * ray_max + c_max + 2;
    if (bound > (Int(1) << 62)) throw Error(ErrorKind::unsupported, "lattice sum would overflow 64-bit arithmetic");

    Rng rng(kDefaultSeed);
    const auto v = to_rat(choose_generic(fan, rng));
    const int delta = shift == Shift::plus ? 1 : -1;
    for (const auto& c : fan.top_cones()) {
      if (c.weight.net() == 0) continue;
      const auto frame = cone_frame(c, v);
      weight_.push_back(frame.parity * c.weight.net());
      for (std::size_t k = 0; k < c.face.size(); ++k) {
        const int label = c.face[k];
        const int s = frame.signs[k];
        const Rat cs = s * p.c(label);
        std::int64_t thr;
        if (cs.get_den() == 1) thr = to_i64(cs.get_num()) - (s * delta < 0 ? 1 : 0);
        else thr = to_i64(floor_rat(cs));
        labels_.push_back(label);
        sigma_.push_back(s);
        threshold_.push_back(thr);
        step_.push_back(s * to_i64(fan.ray(label)[n_ - 1]));
      }
    }
    for (const auto& r : fan.rays()) {
      std::vector<std::int64_t> row;
      for (const auto& x : r) row.push_back(to_i64(x));
      rays_.push_back(std::move(row));
    }
  }

  std::int64_t rows() const { return rows_; }
  std::size_t length() const { return length_; }
  std::size_t cones() const { return weight_.size(); }

  // Row r starts at u0; out must hold length() entries.
  void row(std::int64_t r, std::vector<std::int64_t>& u0, std::vector<std::int64_t>& start,
           std::vector<std::int64_t>& out) const {
    u0.assign(n_, 0);
    for (int k = n_ - 2; k >= 0; --k) {
      const std::int64_t side = box_.hi[k] - box_.lo[k] + 1;
      u0[k] = box_.lo[k] + r % side;
      r /= side;
    }
    u0[n_ - 1] = box_.lo[n_ - 1];
    start.resize(labels_.size());
    for (std::size_t s = 0; s < labels_.size(); ++s) {
      const auto& ray = rays_[labels_[s]];
      std::int64_t x = 0;
      for (int k = 0; k < n_; ++k) x += u0[k] * ray[k];
      start[s] = sigma_[s] * x;
    }
    out.assign(length_, 0);
    if (weight_.empty()) return;
    kernels::RowBatch batch{weight_.size(), static_cast<std::size_t>(n_), start.data(), step_.data(),
                            threshold_.data(), weight_.data()};
    kernels::accumulate_row(batch, length_, out.data());
  }

private:
  const MultiPolytope& p_;
  int n_ = 0;
  LatticeBox box_;
  std::size_t length_ = 0;
  std::int64_t rows_ = 0;
  std::vector<std::int64_t> weight_;
  std::vector<int> labels_;
  std::vector<int> sigma_;
  std::vector<std::int64_t> threshold_;
  std::vector<std::int64_t> step_;
  std::vector<std::vector<std::int64_t>> rays_;
};

Int lattice_total(const MultiPolytope& p, Shift shift) {
  const RowScanner scan(p, shift);
  const std::int64_t rows = scan.rows();
  const std::int64_t work = rows * static_cast<std::int64_t>(scan.length() * std::max<std::size_t>(scan.cones(), 1));
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (work < (1 << 16)) threads = 1;
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, rows));
  std::vector<Int> partial(threads);
  auto worker = [&](unsigned id) {
    std::vector<std::int64_t> u0, start, out;
    Int sum = 0;
    for (std::int64_t r = id; r < rows; r += threads) {
      scan.row(r, u0, start, out);
      std::int64_t s = 0;
      for (auto x : out) s += x;
      sum += Int(static_cast<long>(s));
    }
    partial[id] = sum;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  Int total = 0;
  for (const auto& x : partial) total += x;
  return total;
}

} // namespace

void scan_lattice(const MultiPolytope& p, Shift shift,
                  const std::function<void(const std::vector<std::int64_t>&, const std::int64_t*, std::size_t)>& visit) {
  const RowScanner scan(p, shift);
  std::vector<std::int64_t> u0, start, out;
  for (std::int64_t r = 0; r < scan.rows(); ++r) {
    scan.row(r, u0, start, out);
    visit(u0, out.data(), out.size());
  }
}

Int count(const MultiPolytope& p) {
  require_complete(p);
  return lattice_total(p, Shift::plus);
}

Int count_interior(const MultiPolytope& p) {
  require_complete(p);
  return lattice_total(p, Shift::minus);
}

MultiPolytope dilate(const MultiPolytope& p, const Int& nu) {
  std::vector<Rat> c;
  for (const auto& x : p.support()) c.push_back(x * Rat(nu));
  return MultiPolytope(p.fan(), std::move(c));
}

Rat EhrhartPoly::operator()(const Rat& nu) const {
  Rat value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * nu + *it;
  return value;
}

int EhrhartPoly::degree() const {
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k)
    if (coefficients[k] != 0) return k;
  return -1;
}

EhrhartPoly ehrhart_polynomial(const MultiPolytope& p) {
  require_complete(p);
  require_lattice(p);
  const int n = p.dim();
  RatMatrix vandermonde(n + 1, RatVector(n + 1));
  RatVector counts(n + 1);
  for (int nu = 0; nu <= n; ++nu) {
    Rat power = 1;
    for (int k = 0; k <= n; ++k, power *= nu) vandermonde[nu][k] = power;
    counts[nu] = Rat(count(dilate(p, nu)));
  }
  const auto inv = inverse(vandermonde);
  EhrhartPoly poly;
  poly.coefficients.assign(n + 1, Rat(0));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j) poly.coefficients[k] += inv[k][j] * counts[j];

  for (int nu = n + 1; nu <= n + 2; ++nu) {
    const Int got = count(dilate(p, nu));
    if (poly(nu) != Rat(got))
      throw Error(ErrorKind::verification_failed, "count at nu = " + std::to_string(nu) + " is " + to_string(got) +
                                                      " but the polynomial predicts " + to_string(poly(nu)));
  }
  if (poly.coefficients[0] != Rat(degree(p.fan())))
    throw Error(ErrorKind::verification_failed, "constant term differs from the degree");
  if (poly.coefficients[n] != volume(p))
    throw Error(ErrorKind::verification_failed, "leading coefficient differs from the volume");
  return poly;
}

bool reciprocity_check(const MultiPolytope& p) {
  const auto poly = ehrhart_polynomial(p);
  const int n = p.dim();
  const Rat sign = n % 2 ? -1 : 1;
  for (int nu = 1; nu <= n + 1; ++nu)
    if (Rat(count_interior(dilate(p, nu))) != sign * poly(Rat(-nu))) return false;
  return true;
}

// ---- character identity ----

void LaurentElement::add(const RatVector& u, const Complex& c) {
  auto [it, inserted] = terms_.emplace(u, c);
  if (!inserted) it->second += c;
}

Complex integer_power(const Complex& z, const Int& k) {
  const double kd = k.get_d();
  return std::polar(std::pow(std::abs(z), kd), kd * std::arg(z));
}

namespace {

Int integral_pairing(const RatVector& u, const IntVector& v, const char* what) {
  const Rat x = pairing(u, v);
  if (x.get_den() != 1) throw Error(ErrorKind::not_lattice, std::string(what) + " pairs to a non-integer");
  return x.get_num();
}

} // namespace

Complex LaurentElement::evaluate(const IntVector& v, const Complex& z) const {
  Complex sum = 0;
  for (const auto& [u, c] : terms_) sum += c * integer_power(z, integral_pairing(u, v, "exponent"));
  return sum;
}

double LaurentElement::magnitude(const IntVector& v, const Complex& z) const {
  double m = 0;
  for (const auto& [u, c] : terms_) m = std::max(m, std::abs(c * integer_power(z, integral_pairing(u, v, "exponent"))));
  return m;
}

LaurentElement generating_function(const MultiPolytope& p) {
  LaurentElement g;
  const int n = p.dim();
  scan_lattice(p, Shift::plus, [&](const std::vector<std::int64_t>& u0, const std::int64_t* dh, std::size_t len) {
    for (std::size_t t = 0; t < len; ++t) {
      if (dh[t] == 0) continue;
      RatVector u(n);
      for (int k = 0; k < n; ++k) u[k] = Rat(static_cast<long>(u0[k]));
      u[n - 1] += Rat(static_cast<long>(t));
      g.add(u, Complex(static_cast<double>(dh[t]), 0.0));
    }
  });
  return g;
}

namespace {

// Left-hand side; returns the value and raises `scale` to the largest term.
Complex character_lhs(const MultiPolytope& p, const IntVector& v, const Complex& z, double& scale) {
  const double r = std::abs(z);
  if (r == 0 || std::abs(r - 1) < 1e-12) throw Error(ErrorKind::unsupported, "|z| must avoid 0 and 1");
  Complex total = 0;
  for (const auto& c : p.fan().top_cones()) {
    if (c.weight.net() == 0) continue;
    const Int e = integral_pairing(vertex(p, c.face), v, "vertex");
    std::vector<Int> m;
    for (const auto& u : c.dual) {
      m.push_back(integral_pairing(u, v, "dual vector"));
      if (m.back() == 0) throw Error(ErrorKind::not_generic, "direction is orthogonal to a dual vector");
    }
    Complex inner = 0;
    for (const auto& g : c.quotient.representatives) {
      Complex den = 1;
      for (std::size_t k = 0; k < c.dual.size(); ++k)
        den *= Complex(1) - character(c.dual[k], g).value() * integer_power(z, -m[k]);
      if (std::abs(den) < 1e-12) throw Error(ErrorKind::unsupported, "z is at a pole");
      inner += Complex(1) / den;
    }
    const Complex term = Complex(static_cast<double>(c.weight.net()) / c.quotient.order.get_d()) *
                         integer_power(z, e) * inner;
    scale = std::max(scale, std::abs(term));
    total += term;
  }
  return total;
}

CharacterSample sample(const MultiPolytope& p, const LaurentElement& g, const IntVector& v, const Complex& z) {
  CharacterSample s;
  s.lhs = character_lhs(p, v, z, s.scale);
  s.rhs = g.evaluate(v, z);
  s.scale = std::max(s.scale, g.magnitude(v, z));
  return s;
}

} // namespace

CharacterSample character_series_eval(const MultiPolytope& p, const IntVector& v, const Complex& z) {
  p.fan().require_valid();
  require_lattice(p);
  if (static_cast<int>(v.size()) != p.dim()) throw Error(ErrorKind::dimension_mismatch, "direction has wrong length");
  return sample(p, generating_function(p), v, z);
}

IntVector admissible_direction(const MultiFan& fan, Rng& rng) {
  Int m = 1;
  for (const auto& c : fan.top_cones())
    if (c.independent) m = lcm(m, c.quotient.order);
  // Small coordinates keep the exponents <u, v> moderate.
  for (std::int64_t bound = 2;; bound *= 2) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
      IntVector v(fan.dim());
      for (auto& x : v) x = Int(static_cast<long>(dist(rng)));
      if (is_generic(fan, v)) {
        for (auto& x : v) x *= m;
        return v;
      }
    }
    if (bound > (1 << 20)) throw Error(ErrorKind::not_generic, "no generic direction found");
  }
}

bool character_identity_check(const MultiPolytope& p, int trials, Rng& rng, double tol) {
  p.fan().require_valid();
  require_lattice(p);
  const auto g = generating_function(p);
  const auto box = support_box(p);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    const auto v = admissible_direction(p.fan(), rng);
    // Largest exponent magnitude on either side bounds how far |z| may move from 1.
    double kmax = 1;
    for (int k = 0; k < p.dim(); ++k)
      kmax += std::max(std::abs(box.lo[k]), std::abs(box.hi[k])) * std::abs(v[k].get_d());
    const double reach = std::min(std::log(1.25), 25.0 / kmax);
    double logr = reach * (0.2 + 0.8 * unit(rng));
    if (unit(rng) < 0.5) logr = -logr;
    const Complex z = std::polar(std::exp(logr), 2 * std::numbers::pi * unit(rng));
    if (!sample(p, g, v, z).agrees(tol)) return false;
  }
  return true;
}

} // namespace multifan
