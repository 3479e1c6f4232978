#pragma once

/* JSON document formats.
 *
 * Three document kinds circulate between the CLI and users:
 *   poset    { "elements": [names], "greater_than": [[a, b], ...] }
 *   algebra  { "field": "Q" | "Fp:<p>", "dim": n, "basis": [names],
 *              "unit": [scalars], "table": n x n x n scalars }
 *   family   { "algebra": <poset | algebra | "fixture:NAME">,
 *              "modules": [{ "dim": d, "action": [d x d scalars per basis] }] }
 * Scalars travel as strings in the FieldOps format ("p/q", "0").
 * Schema violations throw std::invalid_argument with a short reason.
 */

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "burnside/algebra.hpp"
#include "burnside/field.hpp"
#include "burnside/module.hpp"
#include "burnside/poset.hpp"

namespace burnside::io {

using Json = nlohmann::json;

enum class DocKind { poset, algebra, family };

inline DocKind classify(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("document must be a JSON object");
  if (doc.contains("elements")) return DocKind::poset;
  if (doc.contains("table")) return DocKind::algebra;
  if (doc.contains("modules")) return DocKind::family;
  throw std::invalid_argument(
      "unrecognized document: expected elements (poset), table (algebra), or modules (family)");
}

namespace detail {

inline const Json& field_at(const Json& doc, const char* key) {
  if (!doc.contains(key))
    throw std::invalid_argument(std::string("document is missing \"") + key + "\"");
  return doc.at(key);
}

template <Field K>
K scalar(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("scalars must be strings");
  return FieldOps<K>::parse(j.get<std::string>());
}

}  // namespace detail

inline Json poset_to_json(const Poset& p) {
  Json doc;
  doc["elements"] = p.labels();
  Json rels = Json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.covers(a, b)) rels.push_back(Json::array({p.label(a), p.label(b)}));
  doc["greater_than"] = std::move(rels);
  return doc;
}

inline Poset poset_from_json(const Json& doc) {
  const Json& elements = detail::field_at(doc, "elements");
  const Json& rels = detail::field_at(doc, "greater_than");
  if (!elements.is_array() || !rels.is_array())
    throw std::invalid_argument("poset: elements and greater_than must be arrays");
  std::vector<std::string> labels;
  for (const auto& e : elements) {
    if (!e.is_string()) throw std::invalid_argument("poset: element names must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> greater;
  for (const auto& r : rels) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
      throw std::invalid_argument("poset: each relation is a pair of element names");
    greater.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
  }
  return Poset::from_pairs(std::move(labels), greater);
}

template <Field K>
Json algebra_to_json(const FinDimAlgebra<K>& a) {
  const std::size_t n = a.dim();
  Json doc;
  doc["field"] = FieldOps<K>::name();
  doc["dim"] = n;
  doc["basis"] = a.labels();
  Json unit = Json::array();
  for (std::size_t i = 0; i < n; ++i) unit.push_back(k_str(a.unit()[i]));
  doc["unit"] = std::move(unit);
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json line = Json::array();
      for (std::size_t w = 0; w < n; ++w) line.push_back(k_str(a.structure(i, j, w)));
      plane.push_back(std::move(line));
    }
    table.push_back(std::move(plane));
  }
  doc["table"] = std::move(table);
  return doc;
}

template <Field K>
FinDimAlgebra<K> algebra_from_json(const Json& doc) {
  const std::string field = detail::field_at(doc, "field").get<std::string>();
  if (field != FieldOps<K>::name())
    throw std::invalid_argument("algebra document is over " + field + ", session is over " +
                                FieldOps<K>::name());
  const std::size_t n = detail::field_at(doc, "dim").get<std::size_t>();
  const Json& table_doc = detail::field_at(doc, "table");
  const Json& unit_doc = detail::field_at(doc, "unit");
  if (!table_doc.is_array() || table_doc.size() != n)
    throw std::invalid_argument("algebra: table must be a dim-sized array");
  if (!unit_doc.is_array() || unit_doc.size() != n)
    throw std::invalid_argument("algebra: unit must be a dim-sized array");

  std::vector<K> table(n * n * n, k_zero<K>());
  for (std::size_t i = 0; i < n; ++i) {
    if (!table_doc[i].is_array() || table_doc[i].size() != n)
      throw std::invalid_argument("algebra: table row has the wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (!table_doc[i][j].is_array() || table_doc[i][j].size() != n)
        throw std::invalid_argument("algebra: table entry has the wrong length");
      for (std::size_t w = 0; w < n; ++w)
        table[(i * n + j) * n + w] = detail::scalar<K>(table_doc[i][j][w]);
    }
  }
  Vec<K> unit;
  for (std::size_t i = 0; i < n; ++i) unit.push_back(detail::scalar<K>(unit_doc[i]));
  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    const Json& basis = doc.at("basis");
    if (!basis.is_array() || basis.size() != n)
      throw std::invalid_argument("algebra: basis must list one name per dimension");
    for (const auto& b : basis) labels.push_back(b.get<std::string>());
  }
  try {
    return FinDimAlgebra<K>::from_structure_constants(n, std::move(table), std::move(unit),
                                                      std::move(labels));
  } catch (const Error& e) {
    throw std::invalid_argument(std::string("algebra document rejected: ") + e.what());
  }
}

template <Field K>
Json module_to_json(const RightModule<K>& m) {
  Json doc;
  doc["dim"] = m.dim;
  Json action = Json::array();
  for (const auto& mat : m.action) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.dim; ++c) row.push_back(k_str(mat.at(r, c)));
      rows.push_back(std::move(row));
    }
    action.push_back(std::move(rows));
  }
  doc["action"] = std::move(action);
  return doc;
}

template <Field K>
RightModule<K> module_from_json(const Json& doc, const FinDimAlgebra<K>& a) {
  RightModule<K> m;
  m.dim = detail::field_at(doc, "dim").get<std::size_t>();
  const Json& action = detail::field_at(doc, "action");
  if (!action.is_array() || action.size() != a.dim())
    throw std::invalid_argument("module: one action matrix per algebra basis element");
  for (const auto& mat : action) {
    if (!mat.is_array() || mat.size() != m.dim)
      throw std::invalid_argument("module: action matrix has the wrong shape");
    Matrix<K> act(m.dim, m.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
      if (!mat[r].is_array() || mat[r].size() != m.dim)
        throw std::invalid_argument("module: action matrix has the wrong shape");
      for (std::size_t c = 0; c < m.dim; ++c) act.at(r, c) = detail::scalar<K>(mat[r][c]);
    }
    m.action.push_back(std::move(act));
  }
  try {
    m.validate(a);
  } catch (const Error& e) {
    throw std::invalid_argument(std::string("module document rejected: ") + e.what());
  }
  return m;
}

}  // namespace burnside::io
