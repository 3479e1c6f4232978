#pragma once

/* Finite posets and their incidence algebras.
 *
 * A poset is stored as a strict order matrix over labelled elements.
 * The incidence algebra k[P] has basis e(a,b) for a >= b with
 * e(a,b) e(b,c) = e(a,c) and all other products zero; the unit is the
 * sum of the diagonal idempotents e(a,a).  Each element a carries a
 * one-dimensional right module on which e(a,a) acts as 1 and every
 * other basis element acts as 0.
 *
 * ext_oracle predicts extension dimensions between those modules from
 * the combinatorics alone: a first extension appears exactly at a
 * covering pair, and a second extension appears exactly when the
 * closed interval between the two elements is a simple loop, meaning
 * its Hasse diagram consists of two saturated chains that are disjoint
 * except at the endpoints (the diamond is the smallest instance).
 * Equivalently, the open interval is nonempty and splits into exactly
 * two connected components, each totally ordered.  The oracle is
 * advisory: the cochain-level computation is ground truth, and the two
 * are required to agree only on the built-in catalog.
 */

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/module.hpp"

namespace burnside {

class Poset {
 public:
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<std::string, std::string>>& greater) {
    Poset p;
    p.labels_ = std::move(labels);
    const std::size_t n = p.labels_.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (index.count(p.labels_[i]))
        throw std::invalid_argument("poset: duplicate element label " + p.labels_[i]);
      index[p.labels_[i]] = i;
    }
    p.gt_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : greater) {
      if (!index.count(a) || !index.count(b))
        throw std::invalid_argument("poset: relation mentions unknown element");
      if (a == b) throw std::invalid_argument("poset: relation " + a + " > " + a);
      p.gt_[index[a]][index[b]] = true;
    }
    // transitive closure, then reject cycles
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (p.gt_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (p.gt_[k][j]) p.gt_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (p.gt_[i][i])
        throw std::invalid_argument("poset: cycle through element " + p.labels_[i]);
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool greater(std::size_t a, std::size_t b) const { return gt_[a][b]; }
  bool geq(std::size_t a, std::size_t b) const { return a == b || gt_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const {
    return a == b || gt_[a][b] || gt_[b][a];
  }

  bool covers(std::size_t a, std::size_t b) const {
    if (!gt_[a][b]) return false;
    for (std::size_t c = 0; c < size(); ++c)
      if (gt_[a][c] && gt_[c][b]) return false;
    return true;
  }

  std::vector<std::size_t> open_interval(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> mid;
    for (std::size_t c = 0; c < size(); ++c)
      if (gt_[a][c] && gt_[c][b]) mid.push_back(c);
    return mid;
  }

  /* the closed interval [b, a] is two saturated chains from a to b,
   * disjoint except at the endpoints */
  bool simple_loop(std::size_t a, std::size_t b) const {
    auto mid = open_interval(a, b);
    if (mid.empty()) return false;
    std::vector<std::size_t> parent(mid.size());
    for (std::size_t i = 0; i < mid.size(); ++i) parent[i] = i;
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < mid.size(); ++i)
      for (std::size_t j = i + 1; j < mid.size(); ++j)
        if (comparable(mid[i], mid[j])) parent[root(i)] = root(j);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < mid.size(); ++i) roots.insert(root(i));
    if (roots.size() != 2) return false;
    // each branch must be totally ordered; saturation within a branch
    // and at the endpoints is then automatic, since any witness would
    // lie in the open interval and be comparable into the branch
    for (std::size_t i = 0; i < mid.size(); ++i)
      for (std::size_t j = i + 1; j < mid.size(); ++j)
        if (root(i) == root(j) && !comparable(mid[i], mid[j])) return false;
    return true;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> gt_;
};

template <Field K>
struct IncidenceAlgebra {
  Poset poset;
  FinDimAlgebra<K> algebra;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // basis index -> (a, b), a >= b

  std::size_t pair_index(std::size_t a, std::size_t b) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].first == a && pairs[i].second == b) return i;
    throw std::invalid_argument("incidence algebra: not a basis pair");
  }
};

template <Field K>
IncidenceAlgebra<K> incidence_algebra(const Poset& p) {
  IncidenceAlgebra<K> inc;
  inc.poset = p;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.geq(a, b)) inc.pairs.emplace_back(a, b);
  const std::size_t n = inc.pairs.size();

  std::vector<std::string> labels;
  for (const auto& [a, b] : inc.pairs)
    labels.push_back("e(" + p.label(a) + "," + p.label(b) + ")");

  std::vector<K> table(n * n * n, k_zero<K>());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [a, b] = inc.pairs[i];
      const auto& [c, d] = inc.pairs[j];
      if (b == c) table[(i * n + j) * n + inc.pair_index(a, d)] = k_one<K>();
    }
  Vec<K> unit(n, k_zero<K>());
  for (std::size_t i = 0; i < n; ++i)
    if (inc.pairs[i].first == inc.pairs[i].second) unit[i] = k_one<K>();

  inc.algebra = FinDimAlgebra<K>::from_structure_constants(n, table, unit, labels);
  return inc;
}

/* the one-dimensional simple right modules, in poset element order */
template <Field K>
ModuleFamily<K> simple_modules(const IncidenceAlgebra<K>& inc) {
  ModuleFamily<K> fam;
  for (std::size_t e = 0; e < inc.poset.size(); ++e) {
    RightModule<K> m;
    m.dim = 1;
    for (const auto& [a, b] : inc.pairs) {
      Matrix<K> act(1, 1);
      if (a == e && b == e) act.at(0, 0) = k_one<K>();
      m.action.push_back(std::move(act));
    }
    m.validate(inc.algebra);
    fam.push_back(std::move(m));
  }
  return fam;
}

struct ExtOracleTable {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> ext1;
  std::vector<std::vector<std::size_t>> ext2;
};

/* predicted dim Ext^1(M_a, M_b) and dim Ext^2(M_a, M_b) */
inline ExtOracleTable ext_oracle(const Poset& p) {
  ExtOracleTable t;
  t.n = p.size();
  t.ext1.assign(t.n, std::vector<std::size_t>(t.n, 0));
  t.ext2.assign(t.n, std::vector<std::size_t>(t.n, 0));
  for (std::size_t a = 0; a < t.n; ++a)
    for (std::size_t b = 0; b < t.n; ++b) {
      if (!p.greater(a, b)) continue;
      if (p.covers(a, b))
        t.ext1[a][b] = 1;
      else if (p.simple_loop(a, b))
        t.ext2[a][b] = 1;
    }
  return t;
}

}  // namespace burnside
