#include "multifan/lattice.hpp"

#include "multifan/error.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace multifan {

namespace {

void check_square(const std::vector<IntVector>& rays) {
  const std::size_t n = rays.size();
  for (const auto& r : rays)
    if (r.size() != n)
      throw Error(ErrorKind::dimension_mismatch, "expected n vectors of length n");
}

// Columns of the returned matrix are the rays.
IntMatrix column_matrix(const std::vector<IntVector>& rays, std::size_t n) {
  IntMatrix a(n, IntVector(rays.size()));
  for (std::size_t j = 0; j < rays.size(); ++j) {
    if (rays[j].size() != n)
      throw Error(ErrorKind::dimension_mismatch, "ray length differs from ambient rank");
    for (std::size_t i = 0; i < n; ++i) a[i][j] = rays[j][i];
  }
  return a;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row_a += q * row_b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += q * m[b][j];
}

void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  for (auto& row : m) row[a] += q * row[b];
}

} // namespace

Rat pairing(const RatVector& u, const IntVector& v) {
  if (u.size() != v.size())
    throw Error(ErrorKind::dimension_mismatch, "pairing of vectors of different length");
  Rat s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

Rat pairing(const RatVector& u, const RatVector& v) {
  if (u.size() != v.size())
    throw Error(ErrorKind::dimension_mismatch, "pairing of vectors of different length");
  Rat s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

std::vector<RatVector> dual_basis(const std::vector<IntVector>& rays) {
  check_square(rays);
  const std::size_t n = rays.size();
  // Rows of M^{-1} where M has the rays as columns.
  RatMatrix m(n, RatVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = rays[j][i];
  return inverse(m);
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  IntMatrix a = input;
  IntMatrix left = identity(rows);
  IntMatrix right = identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break; // block is zero
      if (pr != t) {
        swap_rows(a, pr, t);
        swap_rows(left, pr, t);
      }
      if (pc != t) {
        swap_cols(a, pc, t);
        swap_cols(right, pc, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        add_row(a, i, t, -q);
        add_row(left, i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        add_col(a, j, t, -q);
        add_col(right, j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(a, t, bad, Int(1));
      add_row(left, t, bad, Int(1));
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : left[t]) x = -x;
    }
  }

  SmithForm out;
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = a[t][t];
  RatMatrix lr;
  for (const auto& row : left) lr.push_back(to_rat(row));
  RatMatrix li = inverse(lr);
  out.left_inv.assign(rows, IntVector(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) out.left_inv[i][j] = li[i][j].get_num();
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

FiniteQuotient quotient_group(const std::vector<IntVector>& rays) {
  check_square(rays);
  const std::size_t n = rays.size();
  SmithForm snf = smith_normal_form(column_matrix(rays, n));
  FiniteQuotient q;
  q.order = 1;
  for (const auto& s : snf.diagonal) {
    if (s == 0) throw Error(ErrorKind::singular, "rays are linearly dependent");
    q.order *= s;
  }
  q.invariant_factors = snf.diagonal;

  // Representatives L^{-1} * (k_1..k_n) with 0 <= k_j < s_j.
  std::vector<unsigned long> digits(n, 0);
  const unsigned long total = q.order.get_ui();
  q.representatives.reserve(total);
  for (unsigned long idx = 0; idx < total; ++idx) {
    IntVector g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i] += snf.left_inv[i][j] * digits[j];
    q.representatives.push_back(std::move(g));
    for (std::size_t j = n; j-- > 0;) {
      if (++digits[j] < snf.diagonal[j].get_ui()) break;
      digits[j] = 0;
    }
  }
  return q;
}

bool same_class(const IntVector& a, const IntVector& b,
                const std::vector<IntVector>& rays) {
  auto duals = dual_basis(rays);
  IntVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  for (const auto& u : duals)
    if (pairing(u, diff).get_den() != 1) return false;
  return true;
}

std::complex<double> UnityRoot::value() const {
  const double angle = 2.0 * std::numbers::pi * phase_.get_d();
  return {std::cos(angle), std::sin(angle)};
}

UnityRoot character(const RatVector& u, const IntVector& g) {
  return UnityRoot(pairing(u, g));
}

QuotientProjection::QuotientProjection(const std::vector<IntVector>& span_rays, int n)
    : n_(n), k_(static_cast<int>(span_rays.size())) {
  if (k_ > n_) throw Error(ErrorKind::dimension_mismatch, "more span vectors than rank");
  if (k_ == 0) {
    IntMatrix id = identity(n);
    rows_ = id;
    left_inv_ = id;
    return;
  }
  SmithForm snf = smith_normal_form(column_matrix(span_rays, n));
  for (const auto& s : snf.diagonal)
    if (s == 0) throw Error(ErrorKind::singular, "span vectors are linearly dependent");
  rows_.assign(snf.left.begin() + k_, snf.left.end());
  left_inv_ = std::move(snf.left_inv);
}

IntVector QuotientProjection::project(const IntVector& v) const {
  IntVector out(n_ - k_);
  for (int i = 0; i < n_ - k_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += rows_[i][j] * v[j];
  return out;
}

RatVector QuotientProjection::project(const RatVector& v) const {
  RatVector out(n_ - k_);
  for (int i = 0; i < n_ - k_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += rows_[i][j] * v[j];
  return out;
}

RatVector QuotientProjection::lift_dual(const RatVector& ubar) const {
  RatVector u(n_);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_ - k_; ++i) u[j] += ubar[i] * rows_[i][j];
  return u;
}

RatVector QuotientProjection::to_quotient_dual(const RatVector& u) const {
  RatVector out(n_ - k_);
  for (int c = k_; c < n_; ++c) {
    Rat s = 0;
    for (int r = 0; r < n_; ++r) s += u[r] * left_inv_[r][c];
    out[c - k_] = s;
  }
  return out;
}

} // namespace multifan
