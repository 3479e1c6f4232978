#pragma once

/* Built-in instances: a catalog of small posets plus two reference
 * algebras.  Everything downstream (tests, CLI, verification suites)
 * names instances through this header so the set stays in one place.
 */

#include <string>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/poset.hpp"

namespace burnside::fixtures {

inline const std::vector<std::string>& poset_names() {
  static const std::vector<std::string> names = {
      "chain2", "chain3",  "chain4",       "antichain2", "antichain3",
      "hereditary", "diamond", "diamond_tail", "crown"};
  return names;
}

inline const std::vector<std::string>& algebra_names() {
  static const std::vector<std::string> names = {"k", "m2"};
  return names;
}

inline Poset poset(const std::string& name) {
  using P = std::vector<std::pair<std::string, std::string>>;
  if (name == "chain2") return Poset::from_pairs({"1", "2"}, P{{"1", "2"}});
  if (name == "chain3")
    return Poset::from_pairs({"1", "2", "3"}, P{{"1", "2"}, {"2", "3"}});
  if (name == "chain4")
    return Poset::from_pairs({"1", "2", "3", "4"}, P{{"1", "2"}, {"2", "3"}, {"3", "4"}});
  if (name == "antichain2") return Poset::from_pairs({"1", "2"}, P{});
  if (name == "antichain3") return Poset::from_pairs({"1", "2", "3"}, P{});
  if (name == "hereditary")
    return Poset::from_pairs({"1", "2", "3", "4"}, P{{"1", "4"}, {"2", "4"}, {"3", "4"}});
  if (name == "diamond")
    return Poset::from_pairs({"1", "2", "3", "4"},
                             P{{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}});
  if (name == "diamond_tail")
    return Poset::from_pairs(
        {"1", "2", "3", "4", "5"},
        P{{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}, {"4", "5"}});
  if (name == "crown")
    return Poset::from_pairs({"1", "2", "3", "4", "5"},
                             P{{"1", "5"}, {"2", "4"}, {"3", "4"}, {"3", "5"}});
  throw std::invalid_argument("unknown poset fixture: " + name);
}

template <Field K>
FinDimAlgebra<K> base_field_algebra() {
  std::vector<K> table = {k_one<K>()};
  return FinDimAlgebra<K>::from_structure_constants(1, table, {k_one<K>()}, {"1"});
}

/* 2x2 matrix algebra on the matrix-unit basis E(a,b), a,b in {1,2} */
template <Field K>
FinDimAlgebra<K> matrix2_algebra() {
  const std::size_t n = 4;
  auto unit_index = [](std::size_t a, std::size_t b) { return 2 * a + b; };
  std::vector<K> table(n * n * n, k_zero<K>());
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          if (b == c) {
            std::size_t i = unit_index(a, b), j = unit_index(c, d);
            table[(i * n + j) * n + unit_index(a, d)] = k_one<K>();
          }
  Vec<K> unit(n, k_zero<K>());
  unit[unit_index(0, 0)] = k_one<K>();
  unit[unit_index(1, 1)] = k_one<K>();
  return FinDimAlgebra<K>::from_structure_constants(
      n, table, unit, {"E(1,1)", "E(1,2)", "E(2,1)", "E(2,2)"});
}

template <Field K>
FinDimAlgebra<K> algebra(const std::string& name) {
  if (name == "k") return base_field_algebra<K>();
  if (name == "m2") return matrix2_algebra<K>();
  throw std::invalid_argument("unknown algebra fixture: " + name);
}

}  // namespace burnside::fixtures
