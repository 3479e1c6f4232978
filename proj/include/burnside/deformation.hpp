#pragma once

/* Pointed Artinian test rings and the deformations of a module family
 * over them.  A test ring R carries r orthogonal idempotents e_i with
 * unit sum, a splitting k^r -> R -> k^r, and a nilpotent radical I(R)
 * spanned by positioned basis elements (one Peirce component each).
 *
 * A deformation of the family over R is stored against that rigid
 * basis: the action of an algebra element a is
 *
 *     sigma(a) = sum_i e_i (x) rho_i(a) + sum_u n_u (x) Q_u(a)
 *
 * so reduction modulo I(R) is the given family action by construction,
 * and the whole deformation is the table of correction matrices Q_u.
 */

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/bar.hpp"
#include "burnside/errors.hpp"
#include "burnside/matrix.hpp"
#include "burnside/module.hpp"

namespace burnside {

template <Field K>
struct TestRingSpec {
  std::size_t points = 1;
  /* Peirce position of each radical basis element */
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  /* structure constants among radical elements: (u, v, w, c) adds
   * c * n_w to the product n_u n_v; omitted products are zero */
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, K>> products;
  std::vector<std::string> labels;  // optional, one per radical element
};

template <Field K>
struct TestRing {
  FinDimAlgebra<K> algebra;  // basis: e_0 .. e_{r-1}, then the radical
  std::size_t points = 0;
  std::vector<std::pair<std::size_t, std::size_t>> position;  // per radical element
  Matrix<K> embed;    // k^r -> R on row vectors, i -> e_i
  Matrix<K> project;  // R -> k^r, kills the radical
  std::size_t nilpotency = 1;  // least q with I(R)^q = 0

  std::size_t dim() const { return algebra.dim(); }
  std::size_t radical_dim() const { return position.size(); }
  bool square_zero() const { return nilpotency <= 2; }

  std::pair<std::size_t, std::size_t> basis_position(std::size_t b) const {
    return b < points ? std::pair<std::size_t, std::size_t>{b, b}
                      : position[b - points];
  }

  /* basis indices spanning the Peirce component e_i R e_j */
  std::vector<std::size_t> peirce(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < dim(); ++b)
      if (basis_position(b) == std::make_pair(i, j)) out.push_back(b);
    return out;
  }

  bool same_shape(const TestRing& o) const {
    return points == o.points && position == o.position &&
           algebra.dim() == o.algebra.dim();
  }
};

template <Field K>
TestRing<K> make_test_ring(const TestRingSpec<K>& spec) {
  if (spec.points == 0)
    throw StructuralMapViolation("test ring needs at least one point");
  const std::size_t r = spec.points;
  const std::size_t m = spec.positions.size();
  const std::size_t n = r + m;
  for (const auto& [i, j] : spec.positions)
    if (i >= r || j >= r)
      throw StructuralMapViolation("radical element placed outside the point range");
  if (!spec.labels.empty() && spec.labels.size() != m)
    throw StructuralMapViolation("one label per radical element, or none");

  std::vector<K> table(n * n * n, k_zero<K>());
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const K& c) {
    table[(i * n + j) * n + k] = c;
  };
  for (std::size_t i = 0; i < r; ++i) put(i, i, i, k_one<K>());
  for (std::size_t u = 0; u < m; ++u) {
    const auto& [a, b] = spec.positions[u];
    put(a, r + u, r + u, k_one<K>());
    put(r + u, b, r + u, k_one<K>());
  }
  for (const auto& [u, v, w, c] : spec.products) {
    if (u >= m || v >= m || w >= m)
      throw StructuralMapViolation("radical product refers to a missing element");
    if (k_is_zero(c)) continue;
    if (spec.positions[u].second != spec.positions[v].first)
      throw StructuralMapViolation("radical product of non-composable positions");
    if (spec.positions[w] !=
        std::make_pair(spec.positions[u].first, spec.positions[v].second))
      throw StructuralMapViolation("radical product lands outside its Peirce component");
    put(r + u, r + v, r + w, c);
  }
  Vec<K> unit(n, k_zero<K>());
  for (std::size_t i = 0; i < r; ++i) unit[i] = k_one<K>();

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("e" + std::to_string(i + 1));
  for (std::size_t u = 0; u < m; ++u)
    labels.push_back(spec.labels.empty() ? "n" + std::to_string(u + 1)
                                         : spec.labels[u]);

  TestRing<K> ring;
  ring.algebra = FinDimAlgebra<K>::from_structure_constants(n, table, unit, labels);
  ring.points = r;
  ring.position = spec.positions;
  ring.embed = Matrix<K>(r, n);
  ring.project = Matrix<K>(n, r);
  for (std::size_t i = 0; i < r; ++i) {
    ring.embed.at(i, i) = k_one<K>();
    ring.project.at(i, i) = k_one<K>();
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (!((ring.embed * ring.project).at(i, j) ==
            (i == j ? k_one<K>() : k_zero<K>())))
        throw StructuralMapViolation("point projection does not split the embedding");

  Matrix<K> rad(m, n);
  for (std::size_t u = 0; u < m; ++u) rad.at(u, r + u) = k_one<K>();
  ring.nilpotency = nilpotency_index(ring.algebra, Subspace<K>::span(rad));
  if (ring.nilpotency == 0)
    throw RadicalNotNilpotent("radical of the test ring is not nilpotent");
  return ring;
}

/* k^r itself, the terminal test ring */
template <Field K>
TestRing<K> trivial_test_ring(std::size_t r) {
  TestRingSpec<K> spec;
  spec.points = r;
  return make_test_ring(spec);
}

/* k^r plus one square-zero element in position (i, j) */
template <Field K>
TestRing<K> epsilon_ring(std::size_t r, std::size_t i, std::size_t j) {
  TestRingSpec<K> spec;
  spec.points = r;
  spec.positions = {{i, j}};
  spec.labels = {"eps"};
  return make_test_ring(spec);
}

/* k[x]/(x^q), one point, radical basis x, x^2, ..., x^{q-1} */
template <Field K>
TestRing<K> truncated_power_ring(std::size_t q) {
  if (q < 2) throw StructuralMapViolation("truncation exponent must be at least 2");
  TestRingSpec<K> spec;
  spec.points = 1;
  for (std::size_t e = 1; e < q; ++e) {
    spec.positions.emplace_back(0, 0);
    spec.labels.push_back(e == 1 ? "x" : "x^" + std::to_string(e));
  }
  for (std::size_t a = 1; a < q; ++a)
    for (std::size_t b = 1; a + b < q; ++b)
      spec.products.emplace_back(a - 1, b - 1, a + b - 1, k_one<K>());
  return make_test_ring(spec);
}

template <Field K>
struct Deformation {
  TestRing<K> ring;
  /* radical_part[a][u]: the coefficient of radical element u in the
   * lifted action of the a-th algebra basis element */
  std::vector<std::vector<Matrix<K>>> radical_part;
};

template <Field K>
Deformation<K> trivial_deformation(const FinDimAlgebra<K>& a,
                                   const ModuleFamily<K>& family, TestRing<K> ring) {
  if (ring.points != family.size())
    throw IndexMismatch("test ring points and family size differ");
  Deformation<K> d;
  d.radical_part.assign(a.dim(), {});
  for (std::size_t b = 0; b < a.dim(); ++b)
    for (std::size_t u = 0; u < ring.radical_dim(); ++u) {
      const auto& [i, j] = ring.position[u];
      d.radical_part[b].push_back(Matrix<K>(family[i].dim, family[j].dim));
    }
  d.ring = std::move(ring);
  return d;
}

/* the full action vector of a over the ring basis: idempotent slots
 * carry rho, radical slots carry the stored corrections */
template <Field K>
std::vector<Matrix<K>> deformed_action(const FinDimAlgebra<K>&,
                                       const ModuleFamily<K>& family,
                                       const Deformation<K>& d, std::size_t a) {
  std::vector<Matrix<K>> act;
  act.reserve(d.ring.dim());
  for (std::size_t i = 0; i < d.ring.points; ++i) act.push_back(family[i].action[a]);
  for (std::size_t u = 0; u < d.ring.radical_dim(); ++u)
    act.push_back(d.radical_part[a][u]);
  return act;
}

struct DeformationCheck {
  bool ok = true;
  std::string failure;  // empty when ok

  explicit operator bool() const { return ok; }
};

template <Field K>
void check_deformation_shape(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                             const Deformation<K>& d) {
  if (d.ring.points != family.size())
    throw IndexMismatch("test ring points and family size differ");
  if (d.radical_part.size() != a.dim())
    throw IndexMismatch("one correction row per algebra basis element");
  for (const auto& row : d.radical_part) {
    if (row.size() != d.ring.radical_dim())
      throw IndexMismatch("one correction per radical element");
    for (std::size_t u = 0; u < row.size(); ++u) {
      const auto& [i, j] = d.ring.position[u];
      if (row[u].rows != family[i].dim || row[u].cols != family[j].dim)
        throw IndexMismatch("correction matrix does not fit its Peirce position");
    }
  }
}

/* unitality and multiplicativity of the lifted action; reduction to
 * rho and k-centrality hold by construction of the storage layout */
template <Field K>
DeformationCheck is_deformation(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                                const Deformation<K>& d) {
  check_deformation_shape(a, family, d);
  const std::size_t n = a.dim();
  const std::size_t rn = d.ring.dim();

  for (std::size_t u = 0; u < d.ring.radical_dim(); ++u) {
    Matrix<K> lift(d.radical_part[0][u].rows, d.radical_part[0][u].cols);
    for (std::size_t b = 0; b < n; ++b) {
      if (k_is_zero(a.unit()[b])) continue;
      lift = lift + a.unit()[b] * d.radical_part[b][u];
    }
    if (!lift.is_zero())
      return {false, "unit lifts with a nonzero coordinate at radical element " +
                         std::to_string(u)};
  }

  std::vector<std::vector<Matrix<K>>> act;
  act.reserve(n);
  for (std::size_t b = 0; b < n; ++b) act.push_back(deformed_action(a, family, d, b));

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<Matrix<K>> lhs;
      lhs.reserve(rn);
      for (std::size_t w = 0; w < rn; ++w) {
        const auto& [i, j] = d.ring.basis_position(w);
        lhs.push_back(Matrix<K>(family[i].dim, family[j].dim));
      }
      for (std::size_t p = 0; p < rn; ++p)
        for (std::size_t q = 0; q < rn; ++q) {
          const auto& support = d.ring.algebra.product_support(p, q);
          if (support.empty()) continue;
          Matrix<K> prod = act[x][p] * act[y][q];
          for (const auto& [w, c] : support) lhs[w] = lhs[w] + c * prod;
        }
      for (const auto& [z, c] : a.product_support(x, y))
        for (std::size_t w = 0; w < rn; ++w) lhs[w] = lhs[w] - c * act[z][w];
      for (std::size_t w = 0; w < rn; ++w)
        if (!lhs[w].is_zero())
          return {false, "multiplicativity fails at algebra pair (" +
                             a.labels()[x] + ", " + a.labels()[y] +
                             "), ring coordinate " + d.ring.algebra.labels()[w]};
    }
  return {};
}

/* Equivalence over a square-zero test ring: the difference of the
 * corrections must be a coboundary in every radical position, i.e. of
 * the form rho_i(a) U - U rho_j(a).  The change of basis id + n (x) U
 * is then automatically invertible and reduces to the identity. */
template <Field K>
bool equivalent(const FinDimAlgebra<K>& a, const ModuleFamily<K>& family,
                const Deformation<K>& d1, const Deformation<K>& d2) {
  check_deformation_shape(a, family, d1);
  check_deformation_shape(a, family, d2);
  if (!d1.ring.same_shape(d2.ring))
    throw IndexMismatch("deformations live over different test rings");
  if (!d1.ring.square_zero())
    throw NilpotencyTooDeep("equivalence solve requires a square-zero radical");

  for (std::size_t u = 0; u < d1.ring.radical_dim(); ++u) {
    const auto& [i, j] = d1.ring.position[u];
    Vec<K> diff;
    diff.reserve(a.dim() * family[i].dim * family[j].dim);
    for (std::size_t b = 0; b < a.dim(); ++b) {
      Matrix<K> delta = d1.radical_part[b][u] - d2.radical_part[b][u];
      diff.insert(diff.end(), delta.a.begin(), delta.a.end());
    }
    if (!image(differential_matrix(a, family, i, j, 0)).contains(diff)) return false;
  }
  return true;
}

/* Count of first-order deformation classes per position, solved twice:
 * once through the cochain complex, once directly from the
 * multiplicativity equations over the epsilon ring.  The two answers
 * must coincide. */
template <Field K>
std::vector<std::vector<std::size_t>> tangent_dimensions(const FinDimAlgebra<K>& a,
                                                         const ModuleFamily<K>& family) {
  const std::size_t r = family.size();
  const std::size_t n = a.dim();
  std::vector<std::vector<std::size_t>> table(r, std::vector<std::size_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t di = family[i].dim, dj = family[j].dim;
      const std::size_t block = di * dj;

      // order-one multiplicativity: rho_i(x) Q(y) - Q(xy) + Q(x) rho_j(y) = 0
      Matrix<K> sys(n * n * block, n * block);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const std::size_t base = (x * n + y) * block;
          for (std::size_t row = 0; row < di; ++row)
            for (std::size_t col = 0; col < dj; ++col) {
              const std::size_t eq = base + row * dj + col;
              for (std::size_t s = 0; s < di; ++s) {
                const K& c = family[i].action[x].at(row, s);
                if (k_is_zero(c)) continue;
                sys.at(eq, y * block + s * dj + col) =
                    sys.at(eq, y * block + s * dj + col) + c;
              }
              for (const auto& [z, c] : a.product_support(x, y))
                sys.at(eq, z * block + row * dj + col) =
                    sys.at(eq, z * block + row * dj + col) - c;
              for (std::size_t s = 0; s < dj; ++s) {
                const K& c = family[j].action[y].at(s, col);
                if (k_is_zero(c)) continue;
                sys.at(eq, x * block + row * dj + s) =
                    sys.at(eq, x * block + row * dj + s) + c;
              }
            }
        }
      const std::size_t solutions = n * block - rank(sys);

      // trivial directions rho_i(x) U - U rho_j(x)
      Matrix<K> triv(n * block, block);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t row = 0; row < di; ++row)
          for (std::size_t col = 0; col < dj; ++col) {
            const std::size_t eq = x * block + row * dj + col;
            for (std::size_t s = 0; s < di; ++s) {
              const K& c = family[i].action[x].at(row, s);
              if (!k_is_zero(c))
                triv.at(eq, s * dj + col) = triv.at(eq, s * dj + col) + c;
            }
            for (std::size_t s = 0; s < dj; ++s) {
              const K& c = family[j].action[x].at(s, col);
              if (!k_is_zero(c))
                triv.at(eq, row * dj + s) = triv.at(eq, row * dj + s) - c;
            }
          }
      const std::size_t direct = solutions - rank(triv);

      const std::size_t homological = ext(a, family, i, j, 1).dimension;
      if (direct != homological)
        throw VerificationFailed(
            "first-order class counts disagree between the two solvers");
      table[i][j] = direct;
    }
  return table;
}

}  // namespace burnside
