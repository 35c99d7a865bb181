// Copyright 2026 The oec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON descriptions of groups and finite G-sets.
//
// Groups:
//   {"kind":"cayley","order":n,"table":[[int]]}
//   {"kind":"perm","degree":d,"generators":[[int]]}      (0-based images)
//   {"kind":"named","name":"S_3"}
//   {"kind":"product","factors":[spec, spec, ...]}
//
// Actions:
//   {"points":m,"action":{"generators":[[int]]}}   one image list per group
//                                                  generator, in order
//   {"points":m,"action":{"table":[[int]]}}        |G| rows of m images

#ifndef OEC_SPEC_IO_HPP_
#define OEC_SPEC_IO_HPP_

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oec/error.hpp"
#include "oec/group.hpp"
#include "oec/gspace.hpp"

namespace oec {

using Json = nlohmann::json;

namespace detail {

inline const Json& require(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw InvalidSpec(std::string("missing field '") + field + "'");
  }
  return j.at(field);
}

inline std::uint32_t read_count(const Json& j, const char* field) {
  const Json& v = require(j, field);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
      v.get<std::int64_t>() > std::int64_t{kMaxGroupOrder}) {
    throw InvalidSpec(std::string("field '") + field + "' must be a small non-negative integer");
  }
  return v.get<std::uint32_t>();
}

inline std::vector<std::vector<std::uint32_t>> read_rows(const Json& j, const char* field) {
  const Json& v = require(j, field);
  if (!v.is_array()) throw InvalidSpec(std::string("field '") + field + "' must be an array");
  std::vector<std::vector<std::uint32_t>> rows;
  for (const Json& row : v) {
    if (!row.is_array()) throw InvalidSpec(std::string("rows of '") + field + "' must be arrays");
    std::vector<std::uint32_t> r;
    for (const Json& e : row) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
        throw InvalidSpec(std::string("entries of '") + field + "' must be non-negative integers");
      }
      r.push_back(e.get<std::uint32_t>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace detail

inline FiniteGroup parse_group(const Json& j) {
  const Json& kind = detail::require(j, "kind");
  if (!kind.is_string()) throw InvalidSpec("group 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "named") {
    const Json& name = detail::require(j, "name");
    if (!name.is_string()) throw InvalidSpec("group 'name' must be a string");
    return named_group(name.get<std::string>());
  }
  if (k == "cayley") {
    const std::uint32_t n = detail::read_count(j, "order");
    auto rows = detail::read_rows(j, "table");
    if (rows.size() != n) {
      throw InvalidSpec("Cayley table has " + std::to_string(rows.size()) + " rows, order is " +
                        std::to_string(n));
    }
    return from_cayley_table(rows);
  }
  if (k == "perm") {
    const std::uint32_t d = detail::read_count(j, "degree");
    return from_permutations(d, detail::read_rows(j, "generators"));
  }
  if (k == "product") {
    const Json& factors = detail::require(j, "factors");
    if (!factors.is_array() || factors.size() < 2) {
      throw InvalidSpec("a product needs at least two factors");
    }
    FiniteGroup out = parse_group(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) out = direct_product(out, parse_group(factors[i]));
    return out;
  }
  throw InvalidSpec("unknown group kind '" + k + "'");
}

inline FiniteGSet parse_action(const Json& j, const FiniteGroup& g) {
  const std::uint32_t m = detail::read_count(j, "points");
  const Json& action = detail::require(j, "action");
  if (action.contains("generators")) {
    return gset_from_generator_images(g, m, detail::read_rows(action, "generators"));
  }
  if (action.contains("table")) {
    auto rows = detail::read_rows(action, "table");
    if (rows.size() != g.order()) {
      throw InvalidSpec("action table needs one row per group element (" +
                        std::to_string(g.order()) + ")");
    }
    std::vector<PointIndex> table;
    table.reserve(std::size_t{g.order()} * m);
    for (const auto& row : rows) {
      if (row.size() != m) throw InvalidSpec("action table row has wrong length");
      table.insert(table.end(), row.begin(), row.end());
    }
    return gset_from_table(g, m, std::move(table));
  }
  throw InvalidSpec("action needs 'generators' or 'table'");
}

/// Reads `text` as inline JSON when it starts with '{', otherwise as a path.
inline Json load_json(const std::string& text) {
  try {
    if (!text.empty() && text.front() == '{') return Json::parse(text);
    std::ifstream in(text);
    if (!in) throw InvalidSpec("cannot open '" + text + "'");
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidSpec(std::string("malformed JSON: ") + e.what());
  }
}

inline Json group_to_json(const FiniteGroup& g) {
  Json rows = Json::array();
  for (ElementIndex a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (ElementIndex b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  return Json{{"kind", "cayley"}, {"order", g.order()}, {"table", std::move(rows)}};
}

inline Json action_to_json(const FiniteGSet& x) {
  Json rows = Json::array();
  for (ElementIndex a = 0; a < x.group().order(); ++a) {
    Json row = Json::array();
    for (PointIndex p = 0; p < x.size(); ++p) row.push_back(x.act(a, p));
    rows.push_back(std::move(row));
  }
  return Json{{"points", x.size()}, {"action", Json{{"table", std::move(rows)}}}};
}

}  // namespace oec

#endif  // OEC_SPEC_IO_HPP_
