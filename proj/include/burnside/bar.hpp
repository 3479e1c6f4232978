#pragma once

/* Extension groups between family members, computed on the truncated
 * bar complex C^n = Hom_k(M_i (x) A^(x n), M_j), n <= 3.
 *
 * A cochain stores one d_i x d_j matrix per basis tuple of A^(x n); in
 * the row-vector convention the cochain sends m (x) a_1 (x) ... (x) a_n
 * to m * f(a_1, ..., a_n).  The differential is
 *
 *   (df)(a_1..a_{n+1}) = rho_i(a_1) f(a_2..a_{n+1})
 *                      + sum_t (-1)^t f(.. a_t a_{t+1} ..)
 *                      + (-1)^{n+1} f(a_1..a_n) rho_j(a_{n+1})
 *
 * Degree-1 cocycles vanish on the unit automatically.  Degree-2
 * representatives are chosen inside the normalized subcomplex (zero
 * whenever an argument is the unit), which keeps every correction the
 * hull construction later solves for normalized as well; the class
 * spaces are unchanged because the normalized inclusion is a
 * quasi-isomorphism.  Representatives are deterministic: RREF rows of
 * the (normalized) cocycle space, scanned in order, kept when
 * independent modulo coboundaries.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/errors.hpp"
#include "burnside/matrix.hpp"
#include "burnside/module.hpp"
#include "burnside/parallel.hpp"

namespace burnside {

namespace detail {

inline std::size_t int_pow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace detail

template <Field K>
struct BarCochain {
  std::size_t degree = 0;
  std::size_t i = 0, j = 0;        // family positions
  std::size_t na = 0, di = 0, dj = 0;
  std::vector<Matrix<K>> vals;     // na^degree matrices, tuple-major

  static BarCochain zero(std::size_t degree, std::size_t i, std::size_t j,
                         std::size_t na, std::size_t di, std::size_t dj) {
    BarCochain f;
    f.degree = degree;
    f.i = i;
    f.j = j;
    f.na = na;
    f.di = di;
    f.dj = dj;
    f.vals.assign(detail::int_pow(na, degree), Matrix<K>(di, dj));
    return f;
  }

  std::size_t tuple_index(const std::vector<std::size_t>& t) const {
    std::size_t idx = 0;
    for (std::size_t x : t) idx = idx * na + x;
    return idx;
  }

  Matrix<K>& at(const std::vector<std::size_t>& t) { return vals[tuple_index(t)]; }
  const Matrix<K>& at(const std::vector<std::size_t>& t) const {
    return vals[tuple_index(t)];
  }

  /* coordinates: ((tuple * di + r) * dj + c) */
  Vec<K> flatten() const {
    Vec<K> v;
    v.reserve(vals.size() * di * dj);
    for (const auto& m : vals) v.insert(v.end(), m.a.begin(), m.a.end());
    return v;
  }

  static BarCochain from_flat(const Vec<K>& v, std::size_t degree, std::size_t i,
                              std::size_t j, std::size_t na, std::size_t di,
                              std::size_t dj) {
    BarCochain f = zero(degree, i, j, na, di, dj);
    for (std::size_t t = 0; t < f.vals.size(); ++t)
      for (std::size_t k = 0; k < di * dj; ++k) f.vals[t].a[k] = v[t * di * dj + k];
    return f;
  }

  bool is_zero() const {
    for (const auto& m : vals)
      if (!m.is_zero()) return false;
    return true;
  }
};

template <Field K>
BarCochain<K> bar_differential(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                               const BarCochain<K>& f) {
  const std::size_t n = f.degree;
  if (n > 2) throw std::invalid_argument("bar differential: degree must be at most 2");
  const std::size_t na = a.dim();
  BarCochain<K> out =
      BarCochain<K>::zero(n + 1, f.i, f.j, na, f.di, f.dj);
  const auto& mi = family[f.i];
  const auto& mj = family[f.j];
  std::vector<std::size_t> b(n + 1, 0);
  for (std::size_t bi = 0; bi < out.vals.size(); ++bi) {
    {
      std::size_t rem = bi;
      for (std::size_t t = n + 1; t-- > 0;) {
        b[t] = rem % na;
        rem /= na;
      }
    }
    Matrix<K> acc(f.di, f.dj);
    {
      std::vector<std::size_t> tail(b.begin() + 1, b.end());
      acc = acc + mi.action[b[0]] * f.at(tail);
    }
    K sign = -k_one<K>();
    for (std::size_t t = 0; t + 1 <= n; ++t) {
      // contract arguments t and t+1 (0-indexed) through the product
      for (const auto& [k, c] : a.product_support(b[t], b[t + 1])) {
        std::vector<std::size_t> contracted;
        contracted.reserve(n);
        for (std::size_t s = 0; s <= n; ++s) {
          if (s == t + 1) continue;
          contracted.push_back(s == t ? k : b[s]);
        }
        const K sc = sign * c;
        acc = acc + sc * f.at(contracted);
      }
      sign = -sign;
    }
    {
      std::vector<std::size_t> head(b.begin(), b.end() - 1);
      acc = acc + sign * (f.at(head) * mj.action[b[n]]);
    }
    out.vals[bi] = std::move(acc);
  }
  return out;
}

/* matrix of d_n : C^n -> C^{n+1} on flattened coordinates */
template <Field K>
Matrix<K> differential_matrix(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                              std::size_t i, std::size_t j, std::size_t n) {
  if (n > 2) throw std::invalid_argument("differential matrix: degree must be at most 2");
  const std::size_t na = a.dim();
  const std::size_t di = family[i].dim, dj = family[j].dim;
  const std::size_t block = di * dj;
  const std::size_t cols = detail::int_pow(na, n) * block;
  const std::size_t out_tuples = detail::int_pow(na, n + 1);
  Matrix<K> d(out_tuples * block, cols);
  const auto& mi = family[i];
  const auto& mj = family[j];
  std::vector<std::size_t> b(n + 1, 0);
  for (std::size_t bi = 0; bi < out_tuples; ++bi) {
    {
      std::size_t rem = bi;
      for (std::size_t t = n + 1; t-- > 0;) {
        b[t] = rem % na;
        rem /= na;
      }
    }
    auto row_of = [&](std::size_t r, std::size_t c) { return (bi * di + r) * dj + c; };
    auto col_of = [&](std::size_t tuple, std::size_t r, std::size_t c) {
      return (tuple * di + r) * dj + c;
    };
    {
      std::size_t tail = 0;
      for (std::size_t t = 1; t <= n; ++t) tail = tail * na + b[t];
      for (std::size_t r = 0; r < di; ++r)
        for (std::size_t s = 0; s < di; ++s) {
          const K& f = mi.action[b[0]].at(r, s);
          if (k_is_zero(f)) continue;
          for (std::size_t c = 0; c < dj; ++c)
            d.at(row_of(r, c), col_of(tail, s, c)) =
                d.at(row_of(r, c), col_of(tail, s, c)) + f;
        }
    }
    K sign = -k_one<K>();
    for (std::size_t t = 0; t + 1 <= n; ++t) {
      for (const auto& [k, c] : a.product_support(b[t], b[t + 1])) {
        std::size_t contracted = 0;
        for (std::size_t s = 0; s <= n; ++s) {
          if (s == t + 1) continue;
          contracted = contracted * na + (s == t ? k : b[s]);
        }
        const K f = sign * c;
        for (std::size_t r = 0; r < di; ++r)
          for (std::size_t cc = 0; cc < dj; ++cc)
            d.at(row_of(r, cc), col_of(contracted, r, cc)) =
                d.at(row_of(r, cc), col_of(contracted, r, cc)) + f;
      }
      sign = -sign;
    }
    {
      std::size_t head = 0;
      for (std::size_t t = 0; t < n; ++t) head = head * na + b[t];
      for (std::size_t s = 0; s < dj; ++s)
        for (std::size_t c = 0; c < dj; ++c) {
          const K& f = mj.action[b[n]].at(s, c);
          if (k_is_zero(f)) continue;
          for (std::size_t r = 0; r < di; ++r)
            d.at(row_of(r, c), col_of(head, r, s)) =
                d.at(row_of(r, c), col_of(head, r, s)) + sign * f;
        }
    }
  }
  return d;
}

/* (f u g)(a_1..a_{m+n}) = f(a_1..a_m) g(a_{m+1}..a_{m+n}) */
template <Field K>
BarCochain<K> cup(const BarCochain<K>& f, const BarCochain<K>& g) {
  if (f.j != g.i)
    throw IndexMismatch("cup product: inner family indices do not compose");
  BarCochain<K> out =
      BarCochain<K>::zero(f.degree + g.degree, f.i, g.j, f.na, f.di, g.dj);
  const std::size_t left = detail::int_pow(f.na, f.degree);
  const std::size_t right = detail::int_pow(f.na, g.degree);
  for (std::size_t u = 0; u < left; ++u)
    for (std::size_t v = 0; v < right; ++v)
      out.vals[u * right + v] = f.vals[u] * g.vals[v];
  return out;
}

namespace detail {

template <Field K>
Matrix<K> drop_zero_rows(const Matrix<K>& m) {
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < m.rows; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < m.cols && zero; ++c)
      if (!k_is_zero(m.at(r, c))) zero = false;
    if (!zero) keep.push_back(r);
  }
  Matrix<K> out(keep.size(), m.cols);
  for (std::size_t r = 0; r < keep.size(); ++r) out.set_row(r, m.row(keep[r]));
  return out;
}

/* rows expressing f(.., unit, ..) = 0 for one unit slot */
template <Field K>
Matrix<K> normalization_rows(const FinDimAlgebra<K>& a, std::size_t degree,
                             std::size_t slot, std::size_t di, std::size_t dj) {
  const std::size_t na = a.dim();
  const std::size_t rest = int_pow(na, degree - 1);
  const std::size_t block = di * dj;
  Matrix<K> rows(rest * block, int_pow(na, degree) * block);
  std::vector<std::size_t> t(degree, 0);
  for (std::size_t other = 0; other < rest; ++other) {
    {
      std::size_t rem = other;
      for (std::size_t s = degree; s-- > 0;) {
        if (s == slot) continue;
        t[s] = rem % na;
        rem /= na;
      }
    }
    for (std::size_t u = 0; u < na; ++u) {
      if (k_is_zero(a.unit()[u])) continue;
      t[slot] = u;
      std::size_t tuple = 0;
      for (std::size_t s = 0; s < degree; ++s) tuple = tuple * na + t[s];
      for (std::size_t k = 0; k < block; ++k)
        rows.at(other * block + k, tuple * block + k) =
            rows.at(other * block + k, tuple * block + k) + a.unit()[u];
    }
  }
  return rows;
}

}  // namespace detail

template <Field K>
struct ExtBasis {
  std::size_t degree = 0, i = 0, j = 0;
  std::size_t dimension = 0;
  std::vector<BarCochain<K>> reps;   // cocycle representatives of a class basis
  RelativeQuotient<K> classes;       // reps modulo coboundaries, for decomposition

  /* class coordinates of a cocycle in the chosen basis */
  Vec<K> decompose(const BarCochain<K>& z) const { return classes.coords(z.flatten()); }
};

/* Ext^n(M_i, M_j) for n in {0, 1, 2}; degree-0 classes are the module
 * homomorphisms and are cross-checked against the direct kernel solve */
template <Field K>
ExtBasis<K> ext(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family, std::size_t i,
                std::size_t j, std::size_t n) {
  if (n > 2) throw std::invalid_argument("ext: degree must be 0, 1, or 2");
  ExtBasis<K> basis;
  basis.degree = n;
  basis.i = i;
  basis.j = j;
  const std::size_t di = family[i].dim, dj = family[j].dim;

  Matrix<K> dn = differential_matrix(a, family, i, j, n);
  Matrix<K> constraints = detail::drop_zero_rows(dn);
  if (n == 2)
    for (std::size_t slot = 0; slot < 2; ++slot)
      constraints = vcat(constraints,
                         detail::normalization_rows<K>(a, 2, slot, di, dj));
  Subspace<K> cocycles = kernel(constraints);

  Subspace<K> coboundaries =
      n == 0 ? Subspace<K>::zero(di * dj)
             : image(differential_matrix(a, family, i, j, n - 1));

  // representatives: cocycle basis rows, kept while independent modulo
  // the coboundaries (for n = 2, modulo the full coboundary space even
  // though the rows themselves are normalized)
  Subspace<K> seen = coboundaries;
  std::vector<Vec<K>> rep_rows;
  for (std::size_t r = 0; r < cocycles.dim(); ++r) {
    Vec<K> row = cocycles.basis.row(r);
    if (seen.contains(row)) continue;
    rep_rows.push_back(row);
    Matrix<K> one(1, row.size());
    one.set_row(0, row);
    seen = subspace_sum(seen, Subspace<K>::span(one));
  }
  basis.dimension = rep_rows.size();
  Matrix<K> reps(rep_rows.size(), di * dj * detail::int_pow(a.dim(), n));
  for (std::size_t r = 0; r < rep_rows.size(); ++r) reps.set_row(r, rep_rows[r]);
  basis.classes = RelativeQuotient<K>{reps, coboundaries};
  for (std::size_t r = 0; r < rep_rows.size(); ++r)
    basis.reps.push_back(
        BarCochain<K>::from_flat(rep_rows[r], n, i, j, a.dim(), di, dj));

  if (n == 2) {
    // the normalized subcomplex must see every class
    Subspace<K> full_cocycles = kernel(detail::drop_zero_rows(dn));
    std::size_t expected = full_cocycles.dim() >= coboundaries.dim()
                               ? full_cocycles.dim() - coboundaries.dim()
                               : 0;
    if (basis.dimension != expected)
      throw VerificationFailed("normalized degree-2 classes miss the full count");
  }
  return basis;
}

/* All pairwise Ext^1 / Ext^2 bases plus the differential matrices the
 * obstruction calculus needs; pairs are computed in parallel. */
template <Field K>
struct ExtData {
  std::size_t r = 0;
  std::vector<ExtBasis<K>> e1, e2;   // index i * r + j
  std::vector<Matrix<K>> d1, d2;     // differentials C^1 -> C^2 -> C^3 per pair

  const ExtBasis<K>& ext1(std::size_t i, std::size_t j) const { return e1[i * r + j]; }
  const ExtBasis<K>& ext2(std::size_t i, std::size_t j) const { return e2[i * r + j]; }

  std::vector<std::vector<std::size_t>> dims(std::size_t degree) const {
    std::vector<std::vector<std::size_t>> t(r, std::vector<std::size_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        t[i][j] = (degree == 1 ? ext1(i, j) : ext2(i, j)).dimension;
    return t;
  }
};

template <Field K>
ExtData<K> compute_ext_data(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family) {
  ExtData<K> data;
  data.r = family.size();
  data.e1.resize(data.r * data.r);
  data.e2.resize(data.r * data.r);
  data.d1.resize(data.r * data.r);
  data.d2.resize(data.r * data.r);
  parallel_for(data.r * data.r, [&](std::size_t p) {
    const std::size_t i = p / data.r, j = p % data.r;
    data.e1[p] = ext(a, family, i, j, 1);
    data.e2[p] = ext(a, family, i, j, 2);
    data.d1[p] = differential_matrix(a, family, i, j, 1);
    data.d2[p] = differential_matrix(a, family, i, j, 2);
  });
  return data;
}

}  // namespace burnside
