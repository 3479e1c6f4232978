#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/bar.hpp"
#include "burnside/deformation.hpp"
#include "burnside/errors.hpp"
#include "burnside/matrix.hpp"
#include "burnside/module.hpp"

namespace burnside {

struct HullGenerator {
  std::size_t source = 0, target = 0;
  std::size_t index = 0;  // which tangent basis vector at (source, target)
  std::string label;
};

/* A composable word in the generators; the empty word stands for the
 * idempotent at `source`. Words are ordered by degree, then lexicographically. */
struct HullMonomial {
  std::size_t source = 0, target = 0;
  std::vector<std::size_t> word;
  std::string label;

  std::size_t degree() const { return word.size(); }
};

template <Field K>
struct HullRelation {
  std::size_t source = 0, target = 0;
  std::size_t class_index = 0;  // obstruction basis vector the relation tracks
  std::size_t degree = 0;       // degree of the leading term
  /* (monomial id, coefficient), leading term first, leading coefficient 1 */
  std::vector<std::pair<std::size_t, K>> terms;
};

/* The degree-<=N part of the formal moduli of a module family: generators in
 * bijection with first-order classes, one relation per obstruction class that
 * ever receives a defect, the surviving monomials, and the versal family over
 * the materialized quotient ring. */
template <Field K>
struct TruncatedHull {
  std::size_t points = 0;
  std::size_t max_degree = 0;
  std::vector<HullGenerator> generators;
  std::vector<HullMonomial> monomials;  // every composable word of degree <= max_degree
  std::vector<std::size_t> basis;       // ids of the monomials surviving in the quotient
  std::vector<HullRelation<K>> relations;
  std::vector<std::vector<std::size_t>> tangent;        // r x r first-order class counts
  std::vector<std::vector<std::size_t>> quotient_dims;  // r x r surviving monomial counts
  TestRing<K> ring;                         // the quotient, as an r-pointed test ring
  std::vector<std::size_t> ring_monomials;  // monomial id per radical element of `ring`
  Deformation<K> versal;

  std::size_t dim() const { return basis.size(); }
};

namespace detail {

template <Field K>
void cochain_axpy(const K& c, const BarCochain<K>& x, BarCochain<K>& y) {
  for (std::size_t t = 0; t < x.vals.size(); ++t) y.vals[t] = y.vals[t] + c * x.vals[t];
}

template <Field K>
class HullBuilder {
 public:
  HullBuilder(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
              std::size_t max_degree)
      : a_(a), family_(family), n_(max_degree), r_(family.size()),
        data_(compute_ext_data(a, family)) {
    collect_generators();
    enumerate_monomials();
    index_positions();
    for (std::size_t p = 0; p < r_ * r_; ++p)
      ideal_.push_back(Subspace<K>::zero(pos_mons_[p].size()));
    alive_.assign(mons_.size(), 1);
    action_.resize(mons_.size());
    for (std::size_t g = 0; g < gens_.size(); ++g)
      action_[r_ + g] = data_.ext1(gens_[g].source, gens_[g].target).reps[gens_[g].index];
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j)
        for (std::size_t c = 0; c < data_.ext2(i, j).dimension; ++c)
          slots_.push_back({i, j, c, {}});
  }

  TruncatedHull<K> build() {
    for (std::size_t d = 2; d <= n_; ++d) {
      rebuild(d);
      const auto def = defects(d);
      bool touched = false;
      for (const auto& [u, z] : def) {
        if (!alive_[u] || z.is_zero()) continue;
        check_cocycle(u, z, d);
        const Vec<K> y = data_.ext2(mons_[u].source, mons_[u].target).decompose(z);
        for (std::size_t c = 0; c < y.size(); ++c) {
          if (k_is_zero(y[c])) continue;
          slot(mons_[u].source, mons_[u].target, c).terms[u] = y[c];
          touched = true;
        }
      }
      if (touched) rebuild(d);
      const auto def2 = touched ? defects(d) : def;
      for (std::size_t u = 0; u < mons_.size(); ++u) {
        if (mons_[u].degree() != d) continue;
        if (!alive_[u]) {
          if (action_[u])
            throw ObstructionProjectionFailure("monomial " + mons_[u].label +
                                               " died after its correction was fixed");
          continue;
        }
        const auto it = def2.find(u);
        const std::size_t i = mons_[u].source, j = mons_[u].target;
        if (it == def2.end() || it->second.is_zero()) {
          action_[u] = BarCochain<K>::zero(1, i, j, a_.dim(), family_[i].dim, family_[j].dim);
          continue;
        }
        const BarCochain<K>& z = it->second;
        check_cocycle(u, z, d);
        if (!vec_is_zero(data_.ext2(i, j).decompose(z)))
          throw ObstructionProjectionFailure("obstruction class survives its relation at " +
                                             mons_[u].label);
        auto h = solve(data_.d1[i * r_ + j], z.flatten());
        if (!h)
          throw ObstructionProjectionFailure("defect at " + mons_[u].label +
                                             " is not a coboundary");
        for (auto& x : *h) x = -x;
        action_[u] = BarCochain<K>::from_flat(*h, 1, i, j, a_.dim(), family_[i].dim,
                                              family_[j].dim);
      }
    }
    return finish();
  }

 private:
  void collect_generators() {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j)
        for (std::size_t l = 0; l < data_.ext1(i, j).dimension; ++l) {
          HullGenerator g{i, j, l, ""};
          const std::string pos =
              "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
          g.label = data_.ext1(i, j).dimension > 1
                        ? "t" + std::to_string(l + 1) + pos
                        : "t" + pos;
          gens_.push_back(std::move(g));
        }
  }

  void enumerate_monomials() {
    for (std::size_t i = 0; i < r_; ++i)
      mons_.push_back({i, i, {}, "e" + std::to_string(i + 1)});
    std::vector<std::size_t> prev;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      mons_.push_back({gens_[g].source, gens_[g].target, {g}, gens_[g].label});
      prev.push_back(mons_.size() - 1);
    }
    for (std::size_t d = 2; d <= n_; ++d) {
      std::vector<std::size_t> cur;
      for (std::size_t id : prev)
        for (std::size_t g = 0; g < gens_.size(); ++g) {
          if (gens_[g].source != mons_[id].target) continue;
          HullMonomial m;
          m.source = mons_[id].source;
          m.target = gens_[g].target;
          m.word = mons_[id].word;
          m.word.push_back(g);
          m.label = mons_[id].label + "*" + gens_[g].label;
          mons_.push_back(std::move(m));
          cur.push_back(mons_.size() - 1);
        }
      prev = std::move(cur);
    }
    for (std::size_t id = 0; id < mons_.size(); ++id)
      if (!mons_[id].word.empty()) word_ids_[mons_[id].word] = id;
  }

  void index_positions() {
    pos_mons_.assign(r_ * r_, {});
    coord_of_.assign(mons_.size(), 0);
    for (std::size_t id = 0; id < mons_.size(); ++id) {
      auto& list = pos_mons_[mons_[id].source * r_ + mons_[id].target];
      coord_of_[id] = list.size();
      list.push_back(id);
    }
  }

  struct RelationSlot {
    std::size_t source, target, class_index;
    std::map<std::size_t, K> terms;  // monomial id -> coefficient
  };

  RelationSlot& slot(std::size_t i, std::size_t j, std::size_t c) {
    for (auto& s : slots_)
      if (s.source == i && s.target == j && s.class_index == c) return s;
    throw ObstructionProjectionFailure("missing obstruction slot");
  }

  /* Rebuild the relation ideal from all two-sided products of the relation
   * polynomials, keeping only terms of degree <= level so that the pivot
   * pattern below the level is final. */
  void rebuild(std::size_t level) {
    std::vector<std::vector<Vec<K>>> rows(r_ * r_);
    for (const auto& s : slots_) {
      if (s.terms.empty()) continue;
      for (std::size_t v = 0; v < mons_.size(); ++v) {
        if (mons_[v].target != s.source) continue;
        for (std::size_t w = 0; w < mons_.size(); ++w) {
          if (mons_[w].source != s.target) continue;
          const std::size_t p = mons_[v].source * r_ + mons_[w].target;
          Vec<K> row(pos_mons_[p].size(), k_zero<K>());
          bool any = false;
          for (const auto& [m, c] : s.terms) {
            if (mons_[v].degree() + mons_[m].degree() + mons_[w].degree() > level) continue;
            std::vector<std::size_t> word = mons_[v].word;
            word.insert(word.end(), mons_[m].word.begin(), mons_[m].word.end());
            word.insert(word.end(), mons_[w].word.begin(), mons_[w].word.end());
            const std::size_t co = coord_of_[word_ids_.at(word)];
            row[co] = row[co] + c;
            any = true;
          }
          if (any) rows[p].push_back(std::move(row));
        }
      }
    }
    for (std::size_t p = 0; p < r_ * r_; ++p) {
      if (rows[p].empty()) {
        ideal_[p] = Subspace<K>::zero(pos_mons_[p].size());
        continue;
      }
      Matrix<K> m(rows[p].size(), pos_mons_[p].size());
      for (std::size_t k = 0; k < rows[p].size(); ++k) m.set_row(k, rows[p][k]);
      ideal_[p] = Subspace<K>::span(m);
    }
    alive_.assign(mons_.size(), 1);
    for (std::size_t p = 0; p < r_ * r_; ++p)
      for (std::size_t c : ideal_[p].pivots) alive_[pos_mons_[p][c]] = 0;
  }

  /* Normal form of the product of two surviving monomials, as coordinates
   * over the position list of the product's Peirce component. */
  Vec<K> product_nf(std::size_t v, std::size_t w) const {
    const std::size_t p = mons_[v].source * r_ + mons_[w].target;
    Vec<K> vec(pos_mons_[p].size(), k_zero<K>());
    std::vector<std::size_t> word = mons_[v].word;
    word.insert(word.end(), mons_[w].word.begin(), mons_[w].word.end());
    const auto it = word_ids_.find(word);
    if (it == word_ids_.end()) return vec;  // beyond the truncation degree
    vec[coord_of_[it->second]] = k_one<K>();
    return ideal_[p].reduce(std::move(vec));
  }

  /* Multiplicativity defects of the current action, collected at the
   * surviving degree-d monomials. */
  std::map<std::size_t, BarCochain<K>> defects(std::size_t d) const {
    std::map<std::size_t, BarCochain<K>> out;
    for (std::size_t v = 0; v < mons_.size(); ++v) {
      const std::size_t dv = mons_[v].degree();
      if (dv == 0 || dv >= d || !alive_[v]) continue;
      for (std::size_t w = 0; w < mons_.size(); ++w) {
        const std::size_t dw = mons_[w].degree();
        if (dw == 0 || dv + dw > d || !alive_[w]) continue;
        if (mons_[w].source != mons_[v].target) continue;
        const std::size_t p = mons_[v].source * r_ + mons_[w].target;
        const Vec<K> nf = product_nf(v, w);
        std::optional<BarCochain<K>> prod;
        for (std::size_t c = 0; c < nf.size(); ++c) {
          if (k_is_zero(nf[c])) continue;
          const std::size_t u = pos_mons_[p][c];
          if (mons_[u].degree() != d) continue;
          if (!prod) prod = cup(*action_[v], *action_[w]);
          auto it = out.find(u);
          if (it == out.end())
            it = out.emplace(u, BarCochain<K>::zero(2, mons_[u].source, mons_[u].target,
                                                    a_.dim(), family_[mons_[u].source].dim,
                                                    family_[mons_[u].target].dim))
                     .first;
          cochain_axpy(nf[c], *prod, it->second);
        }
      }
    }
    return out;
  }

  void check_cocycle(std::size_t u, const BarCochain<K>& z, std::size_t d) const {
    const std::size_t p = mons_[u].source * r_ + mons_[u].target;
    if (!vec_is_zero(data_.d2[p] * z.flatten()))
      throw ObstructionProjectionFailure("degree-" + std::to_string(d) + " defect at " +
                                         mons_[u].label + " is not a cocycle");
  }

  TruncatedHull<K> finish() {
    TruncatedHull<K> h;
    h.points = r_;
    h.max_degree = n_;
    h.generators = gens_;
    h.monomials = mons_;
    h.tangent = data_.dims(1);
    for (std::size_t g = 0; g < gens_.size(); ++g)
      if (!alive_[r_ + g])
        throw ObstructionProjectionFailure("a degree-one monomial left the quotient basis");
    h.quotient_dims.assign(r_, std::vector<std::size_t>(r_, 0));
    for (std::size_t id = 0; id < mons_.size(); ++id) {
      if (!alive_[id]) continue;
      h.basis.push_back(id);
      h.quotient_dims[mons_[id].source][mons_[id].target] += 1;
      if (mons_[id].degree() > 0) h.ring_monomials.push_back(id);
    }
    for (const auto& s : slots_) {
      if (s.terms.empty()) continue;
      HullRelation<K> rel;
      rel.source = s.source;
      rel.target = s.target;
      rel.class_index = s.class_index;
      rel.degree = mons_[s.terms.begin()->first].degree();
      const K lead = s.terms.begin()->second;
      for (const auto& [m, c] : s.terms) rel.terms.emplace_back(m, c / lead);
      h.relations.push_back(std::move(rel));
    }

    TestRingSpec<K> spec;
    spec.points = r_;
    std::vector<std::size_t> nil_index(mons_.size(), 0);
    for (std::size_t u = 0; u < h.ring_monomials.size(); ++u) {
      const auto& m = mons_[h.ring_monomials[u]];
      spec.positions.emplace_back(m.source, m.target);
      spec.labels.push_back(m.label);
      nil_index[h.ring_monomials[u]] = u;
    }
    for (std::size_t u = 0; u < h.ring_monomials.size(); ++u)
      for (std::size_t v = 0; v < h.ring_monomials.size(); ++v) {
        const std::size_t mu = h.ring_monomials[u], mv = h.ring_monomials[v];
        if (mons_[mu].target != mons_[mv].source) continue;
        const std::size_t p = mons_[mu].source * r_ + mons_[mv].target;
        const Vec<K> nf = product_nf(mu, mv);
        for (std::size_t c = 0; c < nf.size(); ++c)
          if (!k_is_zero(nf[c]))
            spec.products.emplace_back(u, v, nil_index[pos_mons_[p][c]], nf[c]);
      }
    h.ring = make_test_ring(spec);

    Deformation<K> ver;
    ver.ring = h.ring;
    ver.radical_part.assign(a_.dim(), std::vector<Matrix<K>>(h.ring_monomials.size()));
    for (std::size_t b = 0; b < a_.dim(); ++b)
      for (std::size_t u = 0; u < h.ring_monomials.size(); ++u)
        ver.radical_part[b][u] = action_[h.ring_monomials[u]]->vals[b];
    const auto chk = is_deformation(a_, family_, ver);
    if (!chk.ok)
      throw ObstructionProjectionFailure("versal action fails verification: " + chk.failure);
    h.versal = std::move(ver);
    return h;
  }

  const FinDimAlgebra<K>& a_;
  const ModuleFamily<K>& family_;
  std::size_t n_, r_;
  ExtData<K> data_;
  std::vector<HullGenerator> gens_;
  std::vector<HullMonomial> mons_;
  std::map<std::vector<std::size_t>, std::size_t> word_ids_;
  std::vector<std::vector<std::size_t>> pos_mons_;
  std::vector<std::size_t> coord_of_;
  std::vector<RelationSlot> slots_;
  std::vector<Subspace<K>> ideal_;
  std::vector<char> alive_;
  std::vector<std::optional<BarCochain<K>>> action_;
};

}  // namespace detail

template <Field K>
TruncatedHull<K> compute_hull(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                              std::size_t max_degree) {
  if (family.empty()) throw IndexMismatch("hull of an empty family");
  if (max_degree < 2) throw std::invalid_argument("hull truncation needs degree at least 2");
  detail::HullBuilder<K> builder(a, family, max_degree);
  return builder.build();
}

/* Default truncation: the nilpotency index of the radical of A. */
template <Field K>
TruncatedHull<K> compute_hull(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family) {
  const std::size_t q = nilpotency_index(a, jacobson_radical(a));
  if (q == 0) throw RadicalNotNilpotent("radical of the base algebra is not nilpotent");
  return compute_hull(a, family, q < 2 ? 2 : q);
}

/* True when one more degree adds no surviving monomial, so the truncation
 * already shows the whole quotient. */
template <Field K>
bool stabilization_check(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                         const TruncatedHull<K>& h) {
  const TruncatedHull<K> deeper = compute_hull(a, family, h.max_degree + 1);
  std::set<std::vector<std::size_t>> now, next;
  for (std::size_t id : h.basis) now.insert(h.monomials[id].word);
  for (std::size_t id : deeper.basis) next.insert(deeper.monomials[id].word);
  return now == next;
}

/* The comparison map from the hull to a square-zero test ring, read off a
 * deformation: each generator goes to the first-order class coordinates of
 * the deformation, placed in the matching Peirce component. */
template <Field K>
struct VersalMap {
  /* image of each hull generator, as coordinates over the radical basis */
  std::vector<Vec<K>> generator_images;
  Deformation<K> pushforward;
};

template <Field K>
VersalMap<K> versal_map(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                        const TruncatedHull<K>& h, const Deformation<K>& d) {
  if (!d.ring.square_zero())
    throw NilpotencyTooDeep("versal comparison needs a square-zero radical");
  if (h.points != family.size())
    throw IndexMismatch("hull and family point counts differ");
  const auto chk = is_deformation(a, family, d);
  if (!chk.ok) throw NotLiftable("not a deformation: " + chk.failure);

  std::vector<std::vector<std::size_t>> gen_at(h.points * h.points);
  for (std::size_t g = 0; g < h.generators.size(); ++g)
    gen_at[h.generators[g].source * h.points + h.generators[g].target].push_back(g);

  VersalMap<K> out;
  out.generator_images.assign(h.generators.size(),
                              Vec<K>(d.ring.radical_dim(), k_zero<K>()));
  out.pushforward = trivial_deformation(a, family, d.ring);
  std::map<std::pair<std::size_t, std::size_t>, ExtBasis<K>> cache;
  for (std::size_t u = 0; u < d.ring.radical_dim(); ++u) {
    const auto [i, j] = d.ring.position[u];
    BarCochain<K> q = BarCochain<K>::zero(1, i, j, a.dim(), family[i].dim, family[j].dim);
    for (std::size_t b = 0; b < a.dim(); ++b) q.vals[b] = d.radical_part[b][u];
    if (q.is_zero()) continue;
    auto it = cache.find({i, j});
    if (it == cache.end()) it = cache.emplace(std::pair{i, j}, ext(a, family, i, j, 1)).first;
    const ExtBasis<K>& e = it->second;
    if (h.tangent[i][j] != e.dimension)
      throw IndexMismatch("hull tangent table does not match the family");
    const Vec<K> y = e.decompose(q);
    for (std::size_t l = 0; l < e.dimension; ++l) {
      if (k_is_zero(y[l])) continue;
      out.generator_images[gen_at[i * h.points + j][l]][u] = y[l];
      for (std::size_t b = 0; b < a.dim(); ++b)
        out.pushforward.radical_part[b][u] =
            out.pushforward.radical_part[b][u] + y[l] * e.reps[l].vals[b];
    }
  }
  if (!equivalent(a, family, out.pushforward, d))
    throw NotLiftable("the deformation does not factor through the versal family");
  return out;
}

}  // namespace burnside
