#pragma once

/* Finite dimensional associative unital algebras presented by structure
 * constants.  Basis products are validated on construction: the table
 * must be associative and the declared unit must act as a two-sided
 * identity.
 *
 * The Jacobson radical is computed in characteristic zero as the kernel
 * of the trace form (i, j) -> trace(L_i L_j) of the left regular
 * representation, then certified to be a nilpotent two-sided ideal.  In
 * positive characteristic the caller must supply a candidate ideal; it
 * is certified as the radical when the quotient visibly splits as k^m
 * in its complement coordinates (which covers the incidence algebras
 * this library ships), otherwise the computation is refused.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/field.hpp"
#include "burnside/matrix.hpp"

namespace burnside {

template <Field K>
class FinDimAlgebra {
 public:
  static FinDimAlgebra from_structure_constants(std::size_t n, std::vector<K> table,
                                                Vec<K> unit,
                                                std::vector<std::string> labels = {}) {
    if (table.size() != n * n * n || unit.size() != n)
      throw std::invalid_argument("structure constants: dimension mismatch");
    if (labels.empty())
      for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    if (labels.size() != n)
      throw std::invalid_argument("structure constants: label count mismatch");
    FinDimAlgebra a;
    a.n_ = n;
    a.table_ = std::move(table);
    a.unit_ = std::move(unit);
    a.labels_ = std::move(labels);
    a.build_support();
    a.validate();
    return a;
  }

  std::size_t dim() const { return n_; }
  const Vec<K>& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const K& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * n_ + j) * n_ + k];
  }

  /* nonzero terms of e_i e_j as (k, coefficient) pairs */
  const std::vector<std::pair<std::size_t, K>>& product_support(std::size_t i,
                                                                std::size_t j) const {
    return support_[i * n_ + j];
  }

  Vec<K> mult(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> z(n_, k_zero<K>());
    for (std::size_t i = 0; i < n_; ++i) {
      if (k_is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (k_is_zero(y[j])) continue;
        const K f = x[i] * y[j];
        for (const auto& [k, c] : product_support(i, j)) z[k] = z[k] + f * c;
      }
    }
    return z;
  }

  Vec<K> basis_vector(std::size_t i) const {
    Vec<K> v(n_, k_zero<K>());
    v[i] = k_one<K>();
    return v;
  }

  /* left multiplication by x on column coordinates */
  Matrix<K> left_mult(const Vec<K>& x) const {
    Matrix<K> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (k_is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [k, c] : product_support(i, j)) m.at(k, j) = m.at(k, j) + x[i] * c;
    }
    return m;
  }

  Matrix<K> right_mult(const Vec<K>& x) const {
    Matrix<K> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (k_is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [k, c] : product_support(j, i)) m.at(k, j) = m.at(k, j) + x[i] * c;
    }
    return m;
  }

 private:
  void build_support() {
    support_.assign(n_ * n_, {});
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (!k_is_zero(structure(i, j, k)))
            support_[i * n_ + j].push_back({k, structure(i, j, k)});
  }

  void validate() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Vec<K> ij(n_, k_zero<K>());
        for (const auto& [k, c] : product_support(i, j)) ij[k] = c;
        for (std::size_t k = 0; k < n_; ++k) {
          Vec<K> jk(n_, k_zero<K>());
          for (const auto& [l, c] : product_support(j, k)) jk[l] = c;
          if (mult(ij, basis_vector(k)) != mult(basis_vector(i), jk))
            throw AssociativityViolation(i, j, k);
        }
      }
    for (std::size_t i = 0; i < n_; ++i) {
      if (mult(unit_, basis_vector(i)) != basis_vector(i))
        throw UnitViolation("unit is not a left identity on basis element " +
                            std::to_string(i));
      if (mult(basis_vector(i), unit_) != basis_vector(i))
        throw UnitViolation("unit is not a right identity on basis element " +
                            std::to_string(i));
    }
  }

  std::size_t n_ = 0;
  std::vector<K> table_;
  Vec<K> unit_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, K>>> support_;
};

/* span of {u v : u in x, v in y} */
template <Field K>
Subspace<K> subspace_product(const FinDimAlgebra<K>& a, const Subspace<K>& x,
                             const Subspace<K>& y) {
  Matrix<K> rows(x.dim() * y.dim(), a.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j)
      rows.set_row(i * y.dim() + j, a.mult(x.basis.row(i), y.basis.row(j)));
  return Subspace<K>::span(rows);
}

template <Field K>
bool is_two_sided_ideal(const FinDimAlgebra<K>& a, const Subspace<K>& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!s.contains(a.mult(s.basis.row(i), a.basis_vector(j)))) return false;
      if (!s.contains(a.mult(a.basis_vector(j), s.basis.row(i)))) return false;
    }
  return true;
}

/* smallest q >= 1 with s^q = 0, or 0 if s is not nilpotent */
template <Field K>
std::size_t nilpotency_index(const FinDimAlgebra<K>& a, const Subspace<K>& s) {
  Subspace<K> power = s;
  for (std::size_t q = 1; q <= a.dim() + 1; ++q) {
    if (power.dim() == 0) return q;
    power = subspace_product(a, power, s);
  }
  return 0;
}

template <Field K>
void certify_radical(const FinDimAlgebra<K>& a, const Subspace<K>& rad) {
  if (!is_two_sided_ideal(a, rad))
    throw VerificationFailed("radical candidate is not a two-sided ideal");
  if (nilpotency_index(a, rad) == 0)
    throw VerificationFailed("radical candidate is not nilpotent");
}

template <Field K>
Subspace<K> jacobson_radical(const FinDimAlgebra<K>& a) {
  if (FieldOps<K>::characteristic() != 0)
    throw CharPUnsupported(
        "trace-form radical needs characteristic zero; supply a candidate ideal");
  const std::size_t n = a.dim();
  Matrix<K> gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      K t = k_zero<K>();
      for (std::size_t m = 0; m < n; ++m)
        for (const auto& [k, c] : a.product_support(i, m)) {
          const K& d = a.structure(j, k, m);
          if (!k_is_zero(d)) t = t + c * d;
        }
      gram.at(i, j) = t;
    }
  Subspace<K> rad = kernel(gram);
  certify_radical(a, rad);
  return rad;
}

/* Positive characteristic entry point: certifies that the candidate is
 * a nilpotent two-sided ideal whose quotient is k^m in its complement
 * coordinates.  Both conditions together pin the candidate as the
 * radical; if the quotient certificate fails the call is refused. */
template <Field K>
Subspace<K> radical_from_candidate(const FinDimAlgebra<K>& a, const Subspace<K>& cand) {
  certify_radical(a, cand);
  auto q = quotient_basis(cand);
  const std::size_t m = q.complement.dim();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vec<K> prod = q.project(a.mult(q.complement.basis.row(u), q.complement.basis.row(v)));
      for (std::size_t w = 0; w < m; ++w) {
        const K expect = (u == v && v == w) ? k_one<K>() : k_zero<K>();
        if (prod[w] != expect)
          throw VerificationFailed(
              "quotient by the candidate is not split semisimple in complement "
              "coordinates; cannot certify the radical in characteristic p");
      }
    }
  Vec<K> usum(m, k_zero<K>());
  Vec<K> uproj = q.project(a.unit());
  for (std::size_t u = 0; u < m; ++u) usum[u] = k_one<K>();
  if (uproj != usum)
    throw VerificationFailed("candidate complement does not carry the unit to (1,...,1)");
  return cand;
}

template <Field K>
struct RadicalFiltration {
  std::vector<Subspace<K>> powers;  // powers[0] = A, powers[q] = rad^q, last is zero
  std::vector<std::size_t> dims;
  std::size_t index = 0;  // smallest q with rad^q = 0
};

template <Field K>
RadicalFiltration<K> radical_filtration(const FinDimAlgebra<K>& a,
                                        const Subspace<K>& rad) {
  RadicalFiltration<K> f;
  f.powers.push_back(Subspace<K>::full(a.dim()));
  Subspace<K> power = rad;
  while (true) {
    f.powers.push_back(power);
    if (power.dim() == 0) break;
    power = subspace_product(a, power, rad);
    if (f.powers.size() > a.dim() + 2)
      throw VerificationFailed("radical filtration does not terminate");
  }
  for (const auto& p : f.powers) f.dims.push_back(p.dim());
  f.index = f.powers.size() - 1;
  return f;
}

template <Field K>
RadicalFiltration<K> radical_filtration(const FinDimAlgebra<K>& a) {
  return radical_filtration(a, jacobson_radical(a));
}

template <Field K>
struct QuotientAlgebra {
  FinDimAlgebra<K> algebra;
  Matrix<K> projection;          // dim(quotient) x dim(A), an algebra map
  std::vector<std::size_t> coordinates;  // ambient indices of the section
};

/* A / rad(A) presented on the complement coordinates of rad */
template <Field K>
QuotientAlgebra<K> semisimple_quotient(const FinDimAlgebra<K>& a, const Subspace<K>& rad) {
  auto q = quotient_basis(rad);
  const std::size_t m = q.complement.dim();
  std::vector<K> table(m * m * m, k_zero<K>());
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vec<K> prod = q.project(a.mult(q.complement.basis.row(u), q.complement.basis.row(v)));
      for (std::size_t w = 0; w < m; ++w) table[(u * m + v) * m + w] = prod[w];
    }
  std::vector<std::string> labels;
  for (auto c : q.coordinates) labels.push_back(a.labels()[c]);
  QuotientAlgebra<K> out{
      FinDimAlgebra<K>::from_structure_constants(m, std::move(table), q.project(a.unit()),
                                                 std::move(labels)),
      q.projection, q.coordinates};
  if (FieldOps<K>::characteristic() == 0 && jacobson_radical(out.algebra).dim() != 0)
    throw VerificationFailed("semisimple quotient still has a radical");
  return out;
}

template <Field K>
QuotientAlgebra<K> semisimple_quotient(const FinDimAlgebra<K>& a) {
  return semisimple_quotient(a, jacobson_radical(a));
}

}  // namespace burnside
