#pragma once

/* Dense exact linear algebra over a field K.
 *
 * Conventions used across the library:
 *   - a Vec is context-dependent (row or column); Matrix * Vec treats it
 *     as a column, Vec * Matrix as a row;
 *   - a Subspace of K^n is stored as a matrix in reduced row echelon
 *     form whose rows are the basis; this form is canonical, so two
 *     subspaces are equal iff their basis matrices are equal;
 *   - solve() returns the solution whose free variables are zero;
 *   - quotient complements are spanned by the unit vectors at the
 *     non-pivot coordinates of the subspace's basis.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/field.hpp"

namespace burnside {

template <Field K>
using Vec = std::vector<K>;

template <Field K>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, k_zero<K>()) {}

  K& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const K& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k_one<K>();
    return m;
  }

  bool is_zero() const {
    for (const K& x : a)
      if (!k_is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Vec<K> row(std::size_t r) const {
    return Vec<K>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
  }

  void set_row(std::size_t r, const Vec<K>& v) {
    for (std::size_t c = 0; c < cols; ++c) at(r, c) = v[c];
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

template <Field K>
Matrix<K> operator*(const Matrix<K>& x, const Matrix<K>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix<K> z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const K& f = x.at(i, k);
      if (k_is_zero(f)) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        const K& g = y.at(k, j);
        if (!k_is_zero(g)) z.at(i, j) = z.at(i, j) + f * g;
      }
    }
  return z;
}

template <Field K>
Matrix<K> operator+(const Matrix<K>& x, const Matrix<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix sum: dimension mismatch");
  Matrix<K> z(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

template <Field K>
Matrix<K> operator-(const Matrix<K>& x, const Matrix<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix difference: dimension mismatch");
  Matrix<K> z(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
  return z;
}

template <Field K>
Matrix<K> operator*(const K& s, const Matrix<K>& m) {
  Matrix<K> z(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) z.a[i] = s * m.a[i];
  return z;
}

/* column vector action: (M v)_i = sum_j M_ij v_j */
template <Field K>
Vec<K> operator*(const Matrix<K>& m, const Vec<K>& v) {
  if (m.cols != v.size()) throw std::invalid_argument("matrix * vector: dimension mismatch");
  Vec<K> out(m.rows, k_zero<K>());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!k_is_zero(m.at(i, j)) && !k_is_zero(v[j])) out[i] = out[i] + m.at(i, j) * v[j];
  return out;
}

/* row vector action: (v M)_j = sum_i v_i M_ij */
template <Field K>
Vec<K> operator*(const Vec<K>& v, const Matrix<K>& m) {
  if (m.rows != v.size()) throw std::invalid_argument("vector * matrix: dimension mismatch");
  Vec<K> out(m.cols, k_zero<K>());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (k_is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!k_is_zero(m.at(i, j))) out[j] = out[j] + v[i] * m.at(i, j);
  }
  return out;
}

template <Field K>
Vec<K> vec_add(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

template <Field K>
Vec<K> vec_sub(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

template <Field K>
Vec<K> vec_scale(const K& s, const Vec<K>& x) {
  Vec<K> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = s * x[i];
  return z;
}

template <Field K>
bool vec_is_zero(const Vec<K>& x) {
  for (const K& v : x)
    if (!k_is_zero(v)) return false;
  return true;
}

template <Field K>
Matrix<K> vcat(const Matrix<K>& x, const Matrix<K>& y) {
  if (x.rows == 0) return y;
  if (y.rows == 0) return x;
  if (x.cols != y.cols) throw std::invalid_argument("vcat: dimension mismatch");
  Matrix<K> z(x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), z.a.begin());
  std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
  return z;
}

template <Field K>
Matrix<K> hcat(const Matrix<K>& x, const Matrix<K>& y) {
  if (x.rows != y.rows) throw std::invalid_argument("hcat: dimension mismatch");
  Matrix<K> z(x.rows, x.cols + y.cols);
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < x.cols; ++c) z.at(r, c) = x.at(r, c);
    for (std::size_t c = 0; c < y.cols; ++c) z.at(r, x.cols + c) = y.at(r, c);
  }
  return z;
}

template <Field K>
struct RrefResult {
  Matrix<K> m;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
  std::size_t rank = 0;
};

template <Field K>
RrefResult<K> rref(Matrix<K> m) {
  RrefResult<K> res;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
    std::size_t piv = lead;
    while (piv < m.rows && k_is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != lead)
      for (std::size_t c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(lead, c));
    K inv = k_one<K>() / m.at(lead, col);
    for (std::size_t c = col; c < m.cols; ++c) m.at(lead, c) = inv * m.at(lead, c);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == lead) continue;
      const K f = m.at(r, col);
      if (k_is_zero(f)) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = m.at(r, c) - f * m.at(lead, c);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = res.pivots.size();
  res.m = std::move(m);
  return res;
}

/* Canonical subspace of K^ambient: basis rows in reduced row echelon form. */
template <Field K>
struct Subspace {
  std::size_t ambient = 0;
  Matrix<K> basis;                   // dim x ambient, RREF, no zero rows
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.rows; }

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix<K>(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    return span(Matrix<K>::identity(ambient));
  }

  /* span of the rows of m */
  static Subspace span(const Matrix<K>& m) {
    auto r = rref(m);
    Subspace s;
    s.ambient = m.cols;
    s.pivots = r.pivots;
    s.basis = Matrix<K>(r.rank, m.cols);
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t c = 0; c < m.cols; ++c) s.basis.at(i, c) = r.m.at(i, c);
    return s;
  }

  /* residual of v after eliminating pivot coordinates */
  Vec<K> reduce(Vec<K> v) const {
    for (std::size_t i = 0; i < basis.rows; ++i) {
      const K f = v[pivots[i]];
      if (k_is_zero(f)) continue;
      for (std::size_t c = 0; c < ambient; ++c)
        v[c] = v[c] - f * basis.at(i, c);
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.basis.rows; ++i)
      if (!contains(other.basis.row(i))) return false;
    return true;
  }

  /* coordinates of v in the basis rows; nullopt if v is outside */
  std::optional<Vec<K>> coords(const Vec<K>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<K> c(basis.rows);
    for (std::size_t i = 0; i < basis.rows; ++i) c[i] = v[pivots[i]];
    return c;
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient == y.ambient && x.basis == y.basis;
  }
};

template <Field K>
Subspace<K> subspace_sum(const Subspace<K>& x, const Subspace<K>& y) {
  if (x.ambient != y.ambient) throw std::invalid_argument("subspace sum: dimension mismatch");
  return Subspace<K>::span(vcat(x.basis, y.basis));
}

/* null space {v : m v = 0}, canonicalised */
template <Field K>
Subspace<K> kernel(const Matrix<K>& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix<K> basis(m.cols - r.rank, m.cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    basis.at(row, f) = k_one<K>();
    for (std::size_t i = 0; i < r.rank; ++i)
      basis.at(row, r.pivots[i]) = -r.m.at(i, f);
    ++row;
  }
  return Subspace<K>::span(basis);
}

/* column space */
template <Field K>
Subspace<K> image(const Matrix<K>& m) {
  return Subspace<K>::span(m.transpose());
}

template <Field K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

/* one solution of m x = b (free variables zero), or nullopt */
template <Field K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
  if (m.rows != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<K> aug(m.rows, m.cols + 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  auto r = rref(std::move(aug));
  Vec<K> x(m.cols, k_zero<K>());
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == m.cols) return std::nullopt;  // inconsistent row
    x[r.pivots[i]] = r.m.at(i, m.cols);
  }
  return x;
}

/* Complement data for K^ambient / sub: the complement is spanned by the
 * unit vectors at the non-pivot coordinates; projection sends v to its
 * coordinates there after reduction modulo sub. */
template <Field K>
struct QuotientBasis {
  Subspace<K> complement;
  std::vector<std::size_t> coordinates;  // ambient indices of the complement
  Matrix<K> projection;                  // q x ambient, acts on columns

  Vec<K> project(const Vec<K>& v) const { return projection * v; }
};

template <Field K>
QuotientBasis<K> quotient_basis(const Subspace<K>& sub) {
  QuotientBasis<K> q;
  std::vector<bool> is_pivot(sub.ambient, false);
  for (auto p : sub.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < sub.ambient; ++c)
    if (!is_pivot[c]) q.coordinates.push_back(c);
  Matrix<K> comp(q.coordinates.size(), sub.ambient);
  for (std::size_t i = 0; i < q.coordinates.size(); ++i)
    comp.at(i, q.coordinates[i]) = k_one<K>();
  q.complement = Subspace<K>::span(comp);
  q.projection = Matrix<K>(q.coordinates.size(), sub.ambient);
  for (std::size_t i = 0; i < q.coordinates.size(); ++i) {
    Vec<K> unit(sub.ambient, k_zero<K>());
    unit[q.coordinates[i]] = k_one<K>();
    // row i of the projection reads coordinate q.coordinates[i] of
    // v reduced modulo sub; assemble it from the reduction of units
    for (std::size_t c = 0; c < sub.ambient; ++c) {
      Vec<K> e(sub.ambient, k_zero<K>());
      e[c] = k_one<K>();
      q.projection.at(i, c) = sub.reduce(e)[q.coordinates[i]];
    }
  }
  return q;
}

/* Quotient V / W for nested subspaces W <= V: representatives are the
 * rows of V's basis that stay independent modulo W, scanned in order. */
template <Field K>
struct RelativeQuotient {
  Matrix<K> reps;     // q x ambient
  Subspace<K> denom;  // W

  std::size_t dim() const { return reps.rows; }

  /* coordinates of v (in V) modulo W in the chosen representatives */
  Vec<K> coords(const Vec<K>& v) const {
    Matrix<K> sys(reps.cols, reps.rows + denom.basis.rows);
    for (std::size_t j = 0; j < reps.rows; ++j)
      for (std::size_t c = 0; c < reps.cols; ++c) sys.at(c, j) = reps.at(j, c);
    for (std::size_t j = 0; j < denom.basis.rows; ++j)
      for (std::size_t c = 0; c < reps.cols; ++c)
        sys.at(c, reps.rows + j) = denom.basis.at(j, c);
    auto x = solve(sys, v);
    if (!x) throw std::invalid_argument("relative quotient: vector outside the numerator");
    return Vec<K>(x->begin(), x->begin() + reps.rows);
  }
};

template <Field K>
RelativeQuotient<K> relative_quotient(const Subspace<K>& v, const Subspace<K>& w) {
  if (!v.contains(w)) throw std::invalid_argument("relative quotient: not nested");
  RelativeQuotient<K> out;
  out.denom = w;
  Subspace<K> acc = w;
  std::vector<Vec<K>> rows;
  for (std::size_t i = 0; i < v.basis.rows; ++i) {
    Vec<K> r = v.basis.row(i);
    if (!acc.contains(r)) {
      rows.push_back(r);
      Matrix<K> one(1, v.ambient);
      one.set_row(0, r);
      acc = subspace_sum(acc, Subspace<K>::span(one));
    }
  }
  out.reps = Matrix<K>(rows.size(), v.ambient);
  for (std::size_t i = 0; i < rows.size(); ++i) out.reps.set_row(i, rows[i]);
  return out;
}

}  // namespace burnside
