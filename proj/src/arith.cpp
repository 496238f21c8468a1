#include "multifan/arith.hpp"

#include "multifan/error.hpp"

#include <limits>
#include <utility>

namespace multifan {

const char* to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::dimension_mismatch: return "dimension mismatch";
  case ErrorKind::singular: return "singular";
  case ErrorKind::invalid_fan: return "invalid fan";
  case ErrorKind::not_complete: return "not complete";
  case ErrorKind::not_generic: return "not generic";
  case ErrorKind::on_wall: return "on wall";
  case ErrorKind::not_lattice: return "not lattice";
  case ErrorKind::not_primitive: return "not primitive";
  case ErrorKind::verification_failed: return "verification failed";
  case ErrorKind::parse_error: return "parse error";
  case ErrorKind::unsupported: return "unsupported";
  }
  return "unknown";
}

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw Error(ErrorKind::singular, "zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& x) {
  Rat r = x - Rat(floor_rat(x));
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::parse_error, "empty rational");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw Error(ErrorKind::parse_error, "malformed rational '" + s + "'");
  if (r.get_den() == 0)
    throw Error(ErrorKind::parse_error, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }

RatVector to_rat(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector to_int_vector(const std::vector<std::int64_t>& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntVector as_integral(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1)
      throw Error(ErrorKind::not_lattice, "non-integral entry " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::int64_t to_i64(const Int& x) {
  if (!x.fits_slong_p())
    throw Error(ErrorKind::unsupported, "integer exceeds 64 bits: " + x.get_str());
  return x.get_si();
}

namespace {

// Row-reduce in place; returns rank and accumulates the determinant sign/product.
int eliminate(RatMatrix& m, Rat* det) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) {
      if (det) *det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(m[piv], m[r]);
      if (det) *det = -*det;
    }
    if (det) *det *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  if (det && r < rows) *det = 0;
  return static_cast<int>(r);
}

} // namespace

Rat determinant(RatMatrix m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size())
    throw Error(ErrorKind::dimension_mismatch, "determinant of non-square matrix");
  Rat det;
  eliminate(m, &det);
  return det;
}

Int determinant(const IntMatrix& m) {
  RatMatrix r;
  for (const auto& row : m) r.push_back(to_rat(row));
  Rat d = determinant(std::move(r));
  return d.get_num();
}

int rank(RatMatrix m) { return eliminate(m, nullptr); }

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      throw Error(ErrorKind::dimension_mismatch, "inverse of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::singular, "matrix is singular");
    std::swap(a[piv], a[c]);
    Rat p = a[c][c];
    for (auto& x : a[c]) x /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatMatrix out(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

IntVector hyperplane_normal(const std::vector<IntVector>& vectors, int n) {
  IntVector normal(n);
  if (static_cast<int>(vectors.size()) != n - 1)
    throw Error(ErrorKind::dimension_mismatch, "hyperplane_normal needs n-1 vectors");
  if (n == 1) {
    normal[0] = 1;
    return normal;
  }
  // Cofactor expansion along a formal first row of basis vectors.
  for (int k = 0; k < n; ++k) {
    IntMatrix minor;
    for (const auto& v : vectors) {
      IntVector row;
      for (int j = 0; j < n; ++j)
        if (j != k) row.push_back(v[j]);
      minor.push_back(std::move(row));
    }
    Int c = determinant(minor);
    normal[k] = (k % 2 == 0) ? c : Int(-c);
  }
  Int g = gcd_of(normal);
  if (g == 0) return normal;
  for (auto& x : normal) x /= g;
  for (const auto& x : normal) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : normal) y = -y;
    break;
  }
  return normal;
}

} // namespace multifan
