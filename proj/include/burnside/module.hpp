#pragma once

/* Right modules over a structure-constant algebra.
 *
 * Module elements are row vectors; the action of an algebra element a
 * is a matrix act(a) multiplying from the right, so act is an algebra
 * homomorphism.  An intertwiner M -> N is likewise a d_M x d_N matrix
 * applied on the right of row vectors.
 *
 * simples_of decomposes A / rad(A) and returns one module per matrix
 * block.  The splitting walks endomorphism algebras looking for proper
 * eigenkernels; whenever no splitting element with eigenvalues in K can
 * be found the computation refuses with NotSplit rather than guess.
 * Whatever decomposition is found is certified at the end (the family
 * must represent A / rad(A) faithfully onto the full matrix blocks), so
 * an accepted answer is always correct.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/errors.hpp"
#include "burnside/field.hpp"
#include "burnside/matrix.hpp"

namespace burnside {

template <Field K>
struct RightModule {
  std::size_t dim = 0;
  std::vector<Matrix<K>> action;  // one matrix per algebra basis element

  Matrix<K> act(const Vec<K>& a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k_is_zero(a[i])) continue;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          m.at(r, c) = m.at(r, c) + a[i] * action[i].at(r, c);
    }
    return m;
  }

  void validate(const FinDimAlgebra<K>& a) const {
    if (action.size() != a.dim() || dim == 0)
      throw std::invalid_argument("module: shape mismatch");
    for (const auto& m : action)
      if (m.rows != dim || m.cols != dim)
        throw std::invalid_argument("module: action matrix shape mismatch");
    if (!(act(a.unit()) == Matrix<K>::identity(dim)))
      throw std::invalid_argument("module: unit does not act as identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Matrix<K> lhs = action[i] * action[j];
        Matrix<K> rhs(dim, dim);
        for (const auto& [k, c] : a.product_support(i, j)) rhs = rhs + c * action[k];
        if (!(lhs == rhs))
          throw std::invalid_argument("module: action is not multiplicative at pair (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
      }
  }
};

template <Field K>
using ModuleFamily = std::vector<RightModule<K>>;

template <Field K>
RightModule<K> regular_module(const FinDimAlgebra<K>& a) {
  RightModule<K> m;
  m.dim = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    // (x e_i)_k = sum_j x_j c[j][i][k]
    Matrix<K> r(a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product_support(j, i)) r.at(j, k) = c;
    m.action.push_back(std::move(r));
  }
  return m;
}

template <Field K>
RightModule<K> direct_sum(const RightModule<K>& x, const RightModule<K>& y) {
  RightModule<K> s;
  s.dim = x.dim + y.dim;
  for (std::size_t i = 0; i < x.action.size(); ++i) {
    Matrix<K> m(s.dim, s.dim);
    for (std::size_t r = 0; r < x.dim; ++r)
      for (std::size_t c = 0; c < x.dim; ++c) m.at(r, c) = x.action[i].at(r, c);
    for (std::size_t r = 0; r < y.dim; ++r)
      for (std::size_t c = 0; c < y.dim; ++c) m.at(x.dim + r, x.dim + c) = y.action[i].at(r, c);
    s.action.push_back(std::move(m));
  }
  return s;
}

/* flatten phi (d_M x d_N, row convention) to length d_M * d_N */
template <Field K>
inline std::size_t hom_index(std::size_t n_cols, std::size_t u, std::size_t v) {
  return u * n_cols + v;
}

/* all intertwiners M -> N as a subspace of K^(dM*dN), one kernel computation */
template <Field K>
Subspace<K> hom_A(const FinDimAlgebra<K>& a, const RightModule<K>& m,
                  const RightModule<K>& n) {
  const std::size_t dm = m.dim, dn = n.dim;
  Matrix<K> sys(a.dim() * dm * dn, dm * dn);
  std::size_t row = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t s = 0; s < dm; ++s)
      for (std::size_t t = 0; t < dn; ++t) {
        // (act_M(e_i) phi - phi act_N(e_i))[s][t] = 0
        for (std::size_t u = 0; u < dm; ++u)
          sys.at(row, hom_index<K>(dn, u, t)) =
              sys.at(row, hom_index<K>(dn, u, t)) + m.action[i].at(s, u);
        for (std::size_t v = 0; v < dn; ++v)
          sys.at(row, hom_index<K>(dn, s, v)) =
              sys.at(row, hom_index<K>(dn, s, v)) - n.action[i].at(v, t);
        ++row;
      }
  return kernel(sys);
}

template <Field K>
bool end_is_scalar(const FinDimAlgebra<K>& a, const RightModule<K>& m) {
  return hom_A(a, m, m).dim() == 1;
}

struct SurjectivityReport {
  std::size_t image_dim = 0;
  std::size_t target_dim = 0;
  bool surjective = false;
};

/* rank of rho : A -> prod_i End_k(M_i) */
template <Field K>
SurjectivityReport rho_surjectivity(const FinDimAlgebra<K>& a,
                                    const ModuleFamily<K>& family) {
  std::size_t target = 0;
  for (const auto& m : family) target += m.dim * m.dim;
  Matrix<K> rho(a.dim(), target);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::size_t off = 0;
    for (const auto& m : family) {
      for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c)
          rho.at(i, off + r * m.dim + c) = m.action[i].at(r, c);
      off += m.dim * m.dim;
    }
  }
  SurjectivityReport rep;
  rep.image_dim = rank(rho);
  rep.target_dim = target;
  rep.surjective = rep.image_dim == target;
  return rep;
}

/* ----- submodules, quotients, and semisimple splitting ----- */

template <Field K>
RightModule<K> submodule(const RightModule<K>& m, const Subspace<K>& s) {
  RightModule<K> out;
  out.dim = s.dim();
  for (const auto& act : m.action) {
    Matrix<K> restricted(s.dim(), s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
      auto moved = s.coords(s.basis.row(r) * act);
      if (!moved) throw std::invalid_argument("submodule: subspace is not invariant");
      restricted.set_row(r, *moved);
    }
    out.action.push_back(std::move(restricted));
  }
  return out;
}

template <Field K>
RightModule<K> factor_module(const RightModule<K>& m, const RelativeQuotient<K>& rq) {
  RightModule<K> out;
  out.dim = rq.dim();
  for (const auto& act : m.action) {
    Matrix<K> induced(rq.dim(), rq.dim());
    for (std::size_t r = 0; r < rq.dim(); ++r)
      induced.set_row(r, rq.coords(rq.reps.row(r) * act));
    out.action.push_back(std::move(induced));
  }
  return out;
}

namespace detail {

/* dense polynomial, coefficients low to high */
template <Field K>
using Poly = std::vector<K>;

template <Field K>
Poly<K> poly_derivative(const Poly<K>& p) {
  Poly<K> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(k_int<K>(long(i)) * p[i]);
  if (d.empty()) d.push_back(k_zero<K>());
  return d;
}

template <Field K>
void poly_trim(Poly<K>& p) {
  while (p.size() > 1 && k_is_zero(p.back())) p.pop_back();
}

template <Field K>
std::pair<Poly<K>, Poly<K>> poly_divmod(Poly<K> a, const Poly<K>& b) {
  poly_trim(a);
  Poly<K> q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, k_zero<K>());
  while (a.size() >= b.size() && !(a.size() == 1 && k_is_zero(a[0]))) {
    K f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = a[shift + i] - f * b[i];
    poly_trim(a);
    if (a.size() < b.size()) break;
  }
  poly_trim(q);
  return {q, a};
}

template <Field K>
Poly<K> poly_mod(Poly<K> a, const Poly<K>& b) {
  return poly_divmod(std::move(a), b).second;
}

template <Field K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  poly_trim(a);
  poly_trim(b);
  while (!(b.size() == 1 && k_is_zero(b[0]))) {
    Poly<K> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  K lead = a.back();
  for (auto& c : a) c = c / lead;
  return a;
}

template <Field K>
K poly_eval(const Poly<K>& p, const K& x) {
  K v = k_zero<K>();
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline std::vector<boost::multiprecision::cpp_int> divisors_of(
    boost::multiprecision::cpp_int n) {
  using boost::multiprecision::cpp_int;
  if (n < 0) n = -n;
  std::vector<cpp_int> divs;
  if (n == 0) return divs;
  for (cpp_int d = 1; d * d <= n && d < 2000000; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

/* roots of p lying in K; complete for split polynomials of desk size */
template <Field K>
std::vector<K> field_roots(const Poly<K>& p);

template <>
inline std::vector<Rational> field_roots<Rational>(const Poly<Rational>& p) {
  using boost::multiprecision::cpp_int;
  std::vector<Rational> roots;
  Poly<Rational> q = p;
  poly_trim(q);
  // strip x | q, remembering the root 0
  while (q.size() > 1 && q[0].is_zero()) {
    roots.push_back(Rational(0));
    q.erase(q.begin());
  }
  if (q.size() <= 1) return roots;
  cpp_int lcm = 1;
  for (const auto& c : q) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<cpp_int> zs;
  for (const auto& c : q) zs.push_back(numerator(c) * (lcm / denominator(c)));
  for (const auto& num : divisors_of(zs.front()))
    for (const auto& den : divisors_of(zs.back()))
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        if (poly_eval(q, cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

template <>
inline std::vector<Fp> field_roots<Fp>(const Poly<Fp>& p) {
  std::vector<Fp> roots;
  for (std::uint64_t v = 0; v < Fp::modulus(); ++v) {
    Fp cand(static_cast<long>(v));
    if (k_is_zero(poly_eval(p, cand))) roots.push_back(cand);
  }
  return roots;
}

/* monic minimal polynomial of a square matrix, by Krylov on powers */
template <Field K>
Poly<K> minimal_polynomial(const Matrix<K>& phi) {
  const std::size_t d = phi.rows;
  std::vector<Vec<K>> flat;
  Matrix<K> power = Matrix<K>::identity(d);
  for (std::size_t k = 0;; ++k) {
    if (k > 0) power = power * phi;
    if (!flat.empty()) {
      Matrix<K> sys(d * d, flat.size());
      for (std::size_t j = 0; j < flat.size(); ++j)
        for (std::size_t i = 0; i < d * d; ++i) sys.at(i, j) = flat[j][i];
      auto sol = solve(sys, power.a);
      if (sol) {
        Poly<K> mu(k + 1, k_zero<K>());
        for (std::size_t j = 0; j < k; ++j) mu[j] = -(*sol)[j];
        mu[k] = k_one<K>();
        return mu;
      }
    }
    flat.push_back(power.a);
    if (k > d) throw std::logic_error("minimal polynomial search exceeded the bound");
  }
}

template <Field K>
Matrix<K> reshape(const Vec<K>& v, std::size_t rows, std::size_t cols) {
  Matrix<K> m(rows, cols);
  m.a = v;
  return m;
}

/* eigen-kernel splitting: a proper invariant subspace of m, if some
 * endomorphism candidate has an eigenvalue in K */
template <Field K>
std::optional<Subspace<K>> find_invariant_split(const FinDimAlgebra<K>& a,
                                                const RightModule<K>& m) {
  auto endos = hom_A(a, m, m);
  if (endos.dim() <= 1) return std::nullopt;
  std::vector<Matrix<K>> cands;
  for (std::size_t i = 0; i < endos.dim(); ++i)
    cands.push_back(reshape(endos.basis.row(i), m.dim, m.dim));
  const std::size_t base = cands.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i + 1; j < base && cands.size() < 200; ++j)
      cands.push_back(cands[i] + cands[j]);
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base && cands.size() < 400; ++j)
      cands.push_back(cands[i] * cands[j]);
  for (const auto& phi : cands) {
    auto mu = minimal_polynomial(phi);
    if (mu.size() <= 2) continue;  // scalar: no proper eigenkernel
    // squarefree part mu / gcd(mu, mu') carries every distinct root
    Poly<K> probe = poly_divmod(mu, poly_gcd(mu, poly_derivative(mu))).first;
    for (const K& lam : field_roots(probe)) {
      Matrix<K> shifted = phi;
      for (std::size_t r = 0; r < m.dim; ++r)
        shifted.at(r, r) = shifted.at(r, r) - lam;
      // row convention: v phi = lam v  <=>  shifted^T v^T = 0
      auto ker = kernel(shifted.transpose());
      if (ker.dim() > 0 && ker.dim() < m.dim) return ker;
    }
  }
  return std::nullopt;
}

/* nested invariant subspaces 0 < S_1 < ... < S_m = K^dim with simple factors */
template <Field K>
std::vector<Subspace<K>> simple_flag(const FinDimAlgebra<K>& a, const RightModule<K>& m) {
  if (m.dim == 0) return {};
  if (hom_A(a, m, m).dim() == 1) return {Subspace<K>::full(m.dim)};
  auto split = find_invariant_split(a, m);
  if (!split)
    throw NotSplit("endomorphisms admit no eigenvalue in the base field; "
                   "supply the module family explicitly");
  const Subspace<K>& w = *split;
  std::vector<Subspace<K>> flag;
  // flag of the submodule, embedded back into m's coordinates
  for (const auto& s : simple_flag(a, submodule(m, w))) {
    Matrix<K> rows(s.dim(), m.dim);
    for (std::size_t i = 0; i < s.dim(); ++i)
      rows.set_row(i, s.basis.row(i) * w.basis);
    flag.push_back(Subspace<K>::span(rows));
  }
  // flag of the quotient, lifted to preimages
  auto rq = relative_quotient(Subspace<K>::full(m.dim), w);
  for (const auto& s : simple_flag(a, factor_module(m, rq))) {
    Matrix<K> rows(s.dim() + w.dim(), m.dim);
    for (std::size_t i = 0; i < s.dim(); ++i)
      rows.set_row(i, s.basis.row(i) * rq.reps);
    for (std::size_t i = 0; i < w.dim(); ++i)
      rows.set_row(s.dim() + i, w.basis.row(i));
    flag.push_back(Subspace<K>::span(rows));
  }
  return flag;
}

}  // namespace detail

/* simple factors of m (semisimple), one per isomorphism class */
template <Field K>
ModuleFamily<K> simple_factors(const FinDimAlgebra<K>& a, const RightModule<K>& m) {
  ModuleFamily<K> out;
  Subspace<K> prev = Subspace<K>::zero(m.dim);
  for (const auto& s : detail::simple_flag(a, m)) {
    auto rq = relative_quotient(s, prev);
    RightModule<K> factor = factor_module(m, rq);
    bool known = false;
    for (const auto& seen : out)
      if (seen.dim == factor.dim && hom_A(a, seen, factor).dim() > 0) {
        known = true;
        break;
      }
    if (!known) out.push_back(std::move(factor));
    prev = s;
  }
  return out;
}

/* One simple right module per matrix block of A / rad(A), pulled back
 * to A.  The result is certified: members are pairwise non-isomorphic
 * with scalar endomorphisms, and they exhaust A / rad(A). */
template <Field K>
ModuleFamily<K> simples_of(const FinDimAlgebra<K>& a, const Subspace<K>& rad) {
  auto quo = semisimple_quotient(a, rad);
  ModuleFamily<K> simples_q = simple_factors(quo.algebra, regular_module(quo.algebra));

  std::size_t sum_sq = 0;
  for (const auto& s : simples_q) {
    if (hom_A(quo.algebra, s, s).dim() != 1)
      throw NotSplit("a simple factor has non-scalar endomorphisms");
    sum_sq += s.dim * s.dim;
  }
  for (std::size_t i = 0; i < simples_q.size(); ++i)
    for (std::size_t j = i + 1; j < simples_q.size(); ++j)
      if (hom_A(quo.algebra, simples_q[i], simples_q[j]).dim() != 0)
        throw NotSplit("simple factors are not pairwise non-isomorphic");
  auto rep = rho_surjectivity(quo.algebra, simples_q);
  if (sum_sq != quo.algebra.dim() || !rep.surjective || rep.image_dim != quo.algebra.dim())
    throw NotSplit("semisimple quotient does not split into full matrix blocks over K");

  // pull back along A -> A / rad(A)
  ModuleFamily<K> out;
  for (const auto& s : simples_q) {
    RightModule<K> m;
    m.dim = s.dim;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Matrix<K> act(s.dim, s.dim);
      Vec<K> image = quo.projection * a.basis_vector(i);
      for (std::size_t u = 0; u < quo.algebra.dim(); ++u)
        if (!k_is_zero(image[u])) act = act + image[u] * s.action[u];
      m.action.push_back(std::move(act));
    }
    m.validate(a);
    out.push_back(std::move(m));
  }
  return out;
}

template <Field K>
ModuleFamily<K> simples_of(const FinDimAlgebra<K>& a) {
  return simples_of(a, jacobson_radical(a));
}

/* ----- composition series of the right regular module ----- */

template <Field K>
struct CompositionSeries {
  std::vector<Subspace<K>> flag;          // 0 = F_0 < F_1 < ... < F_len = A
  std::vector<std::size_t> factor_dims;   // dim of each simple quotient
  std::vector<std::size_t> factor_class;  // index into the family
};

template <Field K>
CompositionSeries<K> composition_series_regular(const FinDimAlgebra<K>& a,
                                                const Subspace<K>& rad,
                                                const ModuleFamily<K>& family) {
  auto filt = radical_filtration(a, rad);
  RightModule<K> reg = regular_module(a);
  CompositionSeries<K> out;
  out.flag.push_back(Subspace<K>::zero(a.dim()));
  for (std::size_t q = filt.index; q-- > 0;) {
    const Subspace<K>& big = filt.powers[q];
    const Subspace<K>& small = filt.powers[q + 1];
    if (big.dim() == small.dim()) continue;
    auto rq = relative_quotient(big, small);
    RightModule<K> layer = factor_module(reg, rq);
    Subspace<K> prev_piece = Subspace<K>::zero(layer.dim);
    for (const auto& s : detail::simple_flag(a, layer)) {
      // lift the layer flag step to a right ideal of A
      Matrix<K> rows(s.dim() + small.dim(), a.dim());
      for (std::size_t i = 0; i < s.dim(); ++i)
        rows.set_row(i, s.basis.row(i) * rq.reps);
      for (std::size_t i = 0; i < small.dim(); ++i)
        rows.set_row(s.dim() + i, small.basis.row(i));
      out.flag.push_back(Subspace<K>::span(rows));
      // identify the factor between consecutive flag steps
      auto frq = relative_quotient(s, prev_piece);
      RightModule<K> factor = factor_module(layer, frq);
      out.factor_dims.push_back(factor.dim);
      std::size_t cls = family.size();
      for (std::size_t f = 0; f < family.size(); ++f)
        if (family[f].dim == factor.dim && hom_A(a, family[f], factor).dim() > 0) {
          cls = f;
          break;
        }
      if (cls == family.size())
        throw NotSplit("composition factor matches no member of the family");
      out.factor_class.push_back(cls);
      prev_piece = s;
    }
  }
  return out;
}

template <Field K>
CompositionSeries<K> composition_series_regular(const FinDimAlgebra<K>& a) {
  auto rad = jacobson_radical(a);
  return composition_series_regular(a, rad, simples_of(a, rad));
}

}  // namespace burnside
