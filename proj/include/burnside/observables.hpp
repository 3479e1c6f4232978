#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/deformation.hpp"
#include "burnside/errors.hpp"
#include "burnside/hull.hpp"
#include "burnside/matrix.hpp"
#include "burnside/module.hpp"

namespace burnside {

/* End_H(M_H) in its block-matrix form: one basis element per surviving hull
 * monomial at (i, j) and per matrix unit of Hom_k(M_i, M_j). */
template <Field K>
struct ObservablesAlgebra {
  FinDimAlgebra<K> base;
  std::size_t points = 0;
  std::vector<std::size_t> module_dims;
  /* basis bookkeeping, parallel to base: the hull monomial behind each
   * element, its degree, and the matrix-unit coordinates */
  std::vector<std::size_t> monomial_of;
  std::vector<std::size_t> degree;
  std::vector<std::pair<std::size_t, std::size_t>> unit_of;
  /* block offsets: the elements over the p-th surviving monomial occupy
   * [offsets[p], offsets[p+1]) */
  std::vector<std::size_t> offsets;
  Matrix<K> eta_matrix;  // dim A x dim O, rows are the images of the A-basis
  Matrix<K> rho_matrix;  // dim A x sum d_i^2
  Matrix<K> pi_matrix;   // dim O x sum d_i^2, kills positive degrees
  Subspace<K> J;         // ker pi

  std::size_t dim() const { return base.dim(); }
};

namespace detail {

/* slice a row of the semisimple target into its End_k(M_i) blocks */
template <Field K>
std::vector<Matrix<K>> end_blocks(const Vec<K>& v, const std::vector<std::size_t>& dims) {
  std::vector<Matrix<K>> out;
  std::size_t off = 0;
  for (std::size_t d : dims) {
    Matrix<K> m(d, d);
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) m.at(s, t) = v[off + s * d + t];
    out.push_back(std::move(m));
    off += d * d;
  }
  return out;
}

}  // namespace detail

template <Field K>
ObservablesAlgebra<K> build_observables(const FinDimAlgebra<K>& a,
                                        const ModuleFamily<K>& family,
                                        const TruncatedHull<K>& h) {
  if (!stabilization_check(a, family, h))
    throw HullNotStable("one more degree still adds monomials; deepen the truncation");

  ObservablesAlgebra<K> obs;
  obs.points = h.points;
  for (const auto& m : family) obs.module_dims.push_back(m.dim);

  std::vector<std::string> labels;
  obs.offsets.push_back(0);
  for (std::size_t p = 0; p < h.basis.size(); ++p) {
    const auto& m = h.monomials[h.basis[p]];
    const std::size_t di = family[m.source].dim, dj = family[m.target].dim;
    for (std::size_t s = 0; s < di; ++s)
      for (std::size_t t = 0; t < dj; ++t) {
        obs.monomial_of.push_back(h.basis[p]);
        obs.degree.push_back(m.degree());
        obs.unit_of.emplace_back(s, t);
        labels.push_back(di * dj == 1 ? m.label
                                      : m.label + "|E(" + std::to_string(s + 1) + "," +
                                            std::to_string(t + 1) + ")");
      }
    obs.offsets.push_back(obs.monomial_of.size());
  }
  const std::size_t n = obs.monomial_of.size();

  std::vector<K> table(n * n * n, k_zero<K>());
  for (std::size_t p = 0; p < h.basis.size(); ++p)
    for (std::size_t q = 0; q < h.basis.size(); ++q) {
      const auto& mp = h.monomials[h.basis[p]];
      const auto& mq = h.monomials[h.basis[q]];
      if (mp.target != mq.source) continue;
      const std::size_t di = family[mp.source].dim, dm = family[mp.target].dim,
                        dj = family[mq.target].dim;
      for (const auto& [w, c] : h.ring.algebra.product_support(p, q))
        for (std::size_t s = 0; s < di; ++s)
          for (std::size_t t = 0; t < dm; ++t)
            for (std::size_t t2 = 0; t2 < dj; ++t2) {
              const std::size_t iu = obs.offsets[p] + s * dm + t;
              const std::size_t iv = obs.offsets[q] + t * dj + t2;
              const std::size_t iw = obs.offsets[w] + s * dj + t2;
              table[(iu * n + iv) * n + iw] = table[(iu * n + iv) * n + iw] + c;
            }
    }
  Vec<K> unit(n, k_zero<K>());
  for (std::size_t i = 0; i < h.points; ++i)
    for (std::size_t s = 0; s < family[i].dim; ++s)
      unit[obs.offsets[i] + s * family[i].dim + s] = k_one<K>();
  obs.base = FinDimAlgebra<K>::from_structure_constants(n, std::move(table), unit,
                                                        std::move(labels));

  const std::size_t na = a.dim();
  std::size_t end_dim = 0;
  for (std::size_t d : obs.module_dims) end_dim += d * d;

  obs.eta_matrix = Matrix<K>(na, n);
  for (std::size_t b = 0; b < na; ++b) {
    for (std::size_t i = 0; i < h.points; ++i)
      for (std::size_t s = 0; s < family[i].dim; ++s)
        for (std::size_t t = 0; t < family[i].dim; ++t)
          obs.eta_matrix.at(b, obs.offsets[i] + s * family[i].dim + t) =
              family[i].action[b].at(s, t);
    for (std::size_t u = 0; u < h.ring_monomials.size(); ++u) {
      const std::size_t p = h.points + u;
      const auto& m = h.monomials[h.ring_monomials[u]];
      for (std::size_t s = 0; s < family[m.source].dim; ++s)
        for (std::size_t t = 0; t < family[m.target].dim; ++t)
          obs.eta_matrix.at(b, obs.offsets[p] + s * family[m.target].dim + t) =
              h.versal.radical_part[b][u].at(s, t);
    }
  }

  obs.rho_matrix = Matrix<K>(na, end_dim);
  for (std::size_t b = 0; b < na; ++b) {
    std::size_t off = 0;
    for (const auto& m : family) {
      for (std::size_t s = 0; s < m.dim; ++s)
        for (std::size_t t = 0; t < m.dim; ++t)
          obs.rho_matrix.at(b, off + s * m.dim + t) = m.action[b].at(s, t);
      off += m.dim * m.dim;
    }
  }

  obs.pi_matrix = Matrix<K>(n, end_dim);
  std::vector<std::size_t> block_offset(h.points, 0);
  for (std::size_t i = 1; i < h.points; ++i)
    block_offset[i] = block_offset[i - 1] + family[i - 1].dim * family[i - 1].dim;
  for (std::size_t i = 0; i < h.points; ++i)
    for (std::size_t s = 0; s < family[i].dim; ++s)
      for (std::size_t t = 0; t < family[i].dim; ++t)
        obs.pi_matrix.at(obs.offsets[i] + s * family[i].dim + t,
                         block_offset[i] + s * family[i].dim + t) = k_one<K>();
  obs.J = kernel(obs.pi_matrix.transpose());
  return obs;
}

/* The lift of the right A-action along the versal family, checked to be an
 * algebra morphism before it is handed out. */
template <Field K>
Matrix<K> eta(const FinDimAlgebra<K>& a, const ObservablesAlgebra<K>& obs,
              const TruncatedHull<K>& h) {
  if (obs.eta_matrix.rows != a.dim())
    throw IndexMismatch("observables were built over a different algebra");
  if (obs.points != h.points || obs.offsets.size() != h.basis.size() + 1)
    throw IndexMismatch("observables were built from a different hull");
  for (std::size_t p = 0; p < h.basis.size(); ++p)
    if (obs.monomial_of[obs.offsets[p]] != h.basis[p])
      throw IndexMismatch("observables were built from a different hull");
  Vec<K> unit_image(obs.dim(), k_zero<K>());
  for (std::size_t b = 0; b < a.dim(); ++b)
    if (!k_is_zero(a.unit()[b])) {
      const K c = a.unit()[b];
      for (std::size_t v = 0; v < obs.dim(); ++v)
        unit_image[v] = unit_image[v] + c * obs.eta_matrix.at(b, v);
    }
  if (unit_image != obs.base.unit())
    throw MorphismCheckFailed("the observables lift is not unital");
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      Vec<K> lhs = obs.base.mult(obs.eta_matrix.row(x), obs.eta_matrix.row(y));
      Vec<K> rhs(obs.dim(), k_zero<K>());
      for (const auto& [z, c] : a.product_support(x, y))
        for (std::size_t v = 0; v < obs.dim(); ++v)
          rhs[v] = rhs[v] + c * obs.eta_matrix.at(z, v);
      if (lhs != rhs)
        throw MorphismCheckFailed("the observables lift is not multiplicative at (" +
                                  a.labels()[x] + ", " + a.labels()[y] + ")");
    }
  return obs.eta_matrix;
}

/* pi is an algebra map onto the semisimple block, and pi after eta is rho */
template <Field K>
bool pi_check(const ObservablesAlgebra<K>& obs) {
  if (obs.eta_matrix * obs.pi_matrix != obs.rho_matrix) return false;
  const auto unit_blocks = detail::end_blocks(obs.base.unit() * obs.pi_matrix, obs.module_dims);
  for (std::size_t i = 0; i < unit_blocks.size(); ++i)
    if (unit_blocks[i] != Matrix<K>::identity(obs.module_dims[i])) return false;
  for (std::size_t x = 0; x < obs.dim(); ++x)
    for (std::size_t y = 0; y < obs.dim(); ++y) {
      Vec<K> prod(obs.dim(), k_zero<K>());
      for (const auto& [z, c] : obs.base.product_support(x, y))
        prod[z] = prod[z] + c;
      const auto lhs = detail::end_blocks(prod * obs.pi_matrix, obs.module_dims);
      const auto bx = detail::end_blocks(obs.pi_matrix.row(x), obs.module_dims);
      const auto by = detail::end_blocks(obs.pi_matrix.row(y), obs.module_dims);
      for (std::size_t i = 0; i < obs.module_dims.size(); ++i)
        if (lhs[i] != bx[i] * by[i]) return false;
    }
  return true;
}

template <Field K>
struct GrEtaStep {
  std::size_t source_dim = 0, target_dim = 0;
  Matrix<K> matrix;
  bool iso = false;
};

/* the induced map on the q-th radical layers */
template <Field K>
GrEtaStep<K> gr_eta(const FinDimAlgebra<K>& a, const ObservablesAlgebra<K>& obs,
                    std::size_t q) {
  const auto filt = radical_filtration(a);
  auto layer = [&](std::size_t e) {
    return e < filt.powers.size() ? filt.powers[e] : Subspace<K>::zero(a.dim());
  };
  std::vector<Subspace<K>> jp = {Subspace<K>::full(obs.dim()), obs.J};
  while (jp.size() <= q + 1 && jp.back().dim() > 0)
    jp.push_back(subspace_product(obs.base, jp.back(), obs.J));
  auto jlayer = [&](std::size_t e) {
    return e < jp.size() ? jp[e] : Subspace<K>::zero(obs.dim());
  };

  const Subspace<K> src = layer(q), src1 = layer(q + 1);
  const Subspace<K> tgt = jlayer(q), tgt1 = jlayer(q + 1);
  for (std::size_t v = 0; v < src.basis.rows; ++v)
    if (!tgt.contains(src.basis.row(v) * obs.eta_matrix))
      throw NotWellDefined("a radical layer escapes its degree; deepen the truncation");

  const auto rq_src = relative_quotient(src, src1);
  const auto rq_tgt = relative_quotient(tgt, tgt1);
  GrEtaStep<K> step;
  step.source_dim = rq_src.dim();
  step.target_dim = rq_tgt.dim();
  step.matrix = Matrix<K>(step.source_dim, step.target_dim);
  for (std::size_t v = 0; v < step.source_dim; ++v)
    step.matrix.set_row(v, rq_tgt.coords(rq_src.reps.row(v) * obs.eta_matrix));
  step.iso = step.source_dim == step.target_dim && rank(step.matrix) == step.source_dim;
  return step;
}

struct BurnsideReport {
  std::vector<bool> end_scalar;
  std::vector<bool> simple;
  bool distinct = false;
  SurjectivityReport rho;
  /* the theorem's hypothesis: a family of pairwise distinct simples with
   * scalar endomorphisms */
  bool hypothesis = false;
};

template <Field K>
BurnsideReport verify_burnside(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family) {
  BurnsideReport rep;
  for (const auto& m : family) {
    rep.end_scalar.push_back(end_is_scalar(a, m));
    const auto factors = simple_factors(a, m);
    rep.simple.push_back(factors.size() == 1 && factors[0].dim == m.dim);
  }
  rep.distinct = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i].dim == family[j].dim && hom_A(a, family[i], family[j]).dim() > 0)
        rep.distinct = false;
  rep.rho = rho_surjectivity(a, family);
  rep.hypothesis = rep.distinct;
  for (std::size_t i = 0; i < family.size(); ++i)
    rep.hypothesis = rep.hypothesis && rep.end_scalar[i] && rep.simple[i];
  if (rep.hypothesis && !rep.rho.surjective)
    throw VerificationFailed(
        "distinct simples with scalar endomorphisms, yet the joint action is not surjective");
  return rep;
}

struct GbtReport {
  std::size_t dim_a = 0, dim_obs = 0;
  bool eta_injective = false, eta_surjective = false, eta_bijective = false;
  std::vector<bool> gr_iso;  // per radical layer, until both sides vanish
  BurnsideReport burnside;
  std::vector<bool> end_scalar;
};

template <Field K>
GbtReport verify_gbt(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family) {
  GbtReport rep;
  rep.burnside = verify_burnside(a, family);
  rep.end_scalar = rep.burnside.end_scalar;
  if (!rep.burnside.hypothesis)
    throw HypothesisViolated(
        "the family must consist of pairwise distinct simples with scalar endomorphisms");
  const auto simples = simples_of(a);
  if (simples.size() != family.size())
    throw HypothesisViolated("the family does not exhaust the simple modules");
  for (const auto& s : simples) {
    bool matched = false;
    for (const auto& m : family)
      matched = matched || (s.dim == m.dim && hom_A(a, s, m).dim() > 0);
    if (!matched)
      throw HypothesisViolated("a simple module is missing from the family");
  }

  const auto h = compute_hull(a, family);
  const auto obs = build_observables(a, family, h);
  eta(a, obs, h);
  if (!pi_check(obs)) throw MorphismCheckFailed("projection checks fail on the observables");

  rep.dim_a = a.dim();
  rep.dim_obs = obs.dim();
  const std::size_t rk = rank(obs.eta_matrix);
  rep.eta_injective = rk == rep.dim_a;
  rep.eta_surjective = rk == rep.dim_obs;
  rep.eta_bijective = rep.eta_injective && rep.eta_surjective;
  for (std::size_t q = 0; q < a.dim() + 2; ++q) {
    const auto step = gr_eta(a, obs, q);
    if (step.source_dim == 0 && step.target_dim == 0) break;
    rep.gr_iso.push_back(step.iso);
  }
  return rep;
}

/* the family, acting through pi as modules over the observables */
template <Field K>
ModuleFamily<K> observable_modules(const ObservablesAlgebra<K>& obs) {
  ModuleFamily<K> out;
  std::vector<std::size_t> block_offset(obs.points, 0);
  for (std::size_t i = 1; i < obs.points; ++i)
    block_offset[i] = block_offset[i - 1] + obs.module_dims[i - 1] * obs.module_dims[i - 1];
  for (std::size_t i = 0; i < obs.points; ++i) {
    RightModule<K> m;
    m.dim = obs.module_dims[i];
    for (std::size_t x = 0; x < obs.dim(); ++x) {
      Matrix<K> act(m.dim, m.dim);
      for (std::size_t s = 0; s < m.dim; ++s)
        for (std::size_t t = 0; t < m.dim; ++t)
          act.at(s, t) = obs.pi_matrix.at(x, block_offset[i] + s * m.dim + t);
      m.action.push_back(std::move(act));
    }
    m.validate(obs.base);
    out.push_back(std::move(m));
  }
  return out;
}

struct ClosureReport {
  std::size_t dim_a = 0, dim_b = 0, dim_c = 0;
  bool eta_b_bijective = false;
  bool semisimple_quotient_matches = false;
  std::vector<std::vector<std::size_t>> hull_dims;  // Peirce table of the hull over B
  GbtReport gbt;
};

/* Build B = End_H(M_H), re-read the family as B-modules, and verify that
 * taking observables again changes nothing. */
template <Field K>
ClosureReport closure_check(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                            std::size_t max_degree) {
  const auto ha = compute_hull(a, family, max_degree);
  const auto obs_a = build_observables(a, family, ha);
  const auto& b = obs_a.base;
  const auto fam_b = observable_modules(obs_a);

  ClosureReport rep;
  rep.dim_a = a.dim();
  rep.dim_b = b.dim();
  rep.gbt = verify_gbt(b, fam_b);
  rep.dim_c = rep.gbt.dim_obs;
  rep.eta_b_bijective = rep.gbt.eta_bijective;

  const auto hb = compute_hull(b, fam_b);
  rep.hull_dims = hb.quotient_dims;

  std::size_t end_dim = 0;
  for (std::size_t d : obs_a.module_dims) end_dim += d * d;
  const auto rad_b = jacobson_radical(b);
  rep.semisimple_quotient_matches =
      b.dim() - rad_b.dim() == end_dim && rad_b == obs_a.J;
  return rep;
}

}  // namespace burnside
