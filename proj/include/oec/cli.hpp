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

// Batch front end shared by the oec tool and the tests. A RunConfig names a
// command and its inputs; run() evaluates every applicable engine and emits
//
//   {"command":..., "inputs":{...}, "results":[{"engine":..., "value":...}],
//    "agreement":bool}
//
// or the same fields as CSV rows (command,engine,key,value). Exit status is
// 0 when every cross-check agreed, 1 on a disagreement and 2 on bad input or
// an exhausted budget.

#ifndef OEC_CLI_HPP_
#define OEC_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oec/error.hpp"
#include "oec/group.hpp"
#include "oec/gspace.hpp"
#include "oec/integer.hpp"
#include "oec/lie_models.hpp"
#include "oec/orbifold.hpp"
#include "oec/series.hpp"
#include "oec/spec_io.hpp"
#include "oec/wreath.hpp"

namespace oec {

enum class OutputFormat { json, csv };

inline constexpr int kExitAgree = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  std::string command;         // chi | series | verify | wreath | lie
  std::string group;           // JSON text, JSON path or group name
  std::string space;           // JSON text, JSON path, "regular" or "trivial:m"
  std::string model;           // lie: model string
  unsigned k = 1;
  unsigned max_order = kDefaultMaxOrder;
  std::size_t degree = 5;      // N
  std::size_t max_degree = kDefaultMaxDegree;
  std::string euler = "0";     // series: E, arbitrary precision
  std::uint32_t n = 2;         // wreath: S_n
  std::uint32_t m_max = 6;     // lie --check-paper
  std::uint64_t tuple_budget = kDefaultTupleBudget;
  std::uint64_t explicit_budget = kDefaultExplicitBudget;
  std::uint64_t seed = 0;
  std::uint32_t random_orbits = 0;  // > 0: random G-set instead of `space`
  OutputFormat format = OutputFormat::json;
  bool check_paper = false;
  bool use_lemma3_shortcut = false;

  void validate() const {
    if (tuple_budget == 0 || explicit_budget == 0) throw InvalidArgument("budgets must be positive");
    if (degree > max_degree) {
      throw InvalidArgument("degree bound N = " + std::to_string(degree) + " exceeds " +
                            std::to_string(max_degree));
    }
  }
};

/// OEC_BUDGET is "T" or "T,E": tuple budget and explicit-group budget.
inline void apply_budget_env(RunConfig& config, const char* value) {
  if (value == nullptr || *value == '\0') return;
  const std::string text(value);
  auto parse = [&](const std::string& part) -> std::uint64_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos ||
        part.size() > 19) {
      throw InvalidArgument("OEC_BUDGET must be 'T' or 'T,E' with positive integers");
    }
    const std::uint64_t v = std::stoull(part);
    if (v == 0) throw InvalidArgument("OEC_BUDGET values must be positive");
    return v;
  };
  const auto comma = text.find(',');
  config.tuple_budget = parse(text.substr(0, comma));
  if (comma != std::string::npos) config.explicit_budget = parse(text.substr(comma + 1));
}

struct ResultRow {
  std::string engine;
  std::string key;  // optional
  Json value;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<ResultRow> results;
  bool agreement = true;

  Json to_json() const {
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row{{"engine", r.engine}};
      if (!r.key.empty()) row["key"] = r.key;
      row["value"] = r.value;
      rows.push_back(std::move(row));
    }
    return Json{{"command", command}, {"inputs", inputs}, {"results", rows}, {"agreement", agreement}};
  }

  /// Arrays become one row per index, objects one row per field.
  void write_csv(std::ostream& os) const {
    auto cell = [](const Json& v) {
      std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      return quoted + "\"";
    };
    os << "command,engine,key,value\n";
    for (const auto& r : results) {
      const std::string prefix = command + "," + cell(r.engine) + ",";
      if (r.value.is_array()) {
        for (std::size_t i = 0; i < r.value.size(); ++i) {
          os << prefix << cell(r.key.empty() ? Json(std::to_string(i)) : Json(r.key + ":" + std::to_string(i)))
             << "," << cell(r.value[i]) << "\n";
        }
      } else if (r.value.is_object()) {
        for (const auto& [field, v] : r.value.items()) {
          os << prefix << cell(r.key.empty() ? Json(field) : Json(r.key + ":" + field)) << ","
             << cell(v) << "\n";
        }
      } else {
        os << prefix << cell(r.key) << "," << cell(r.value) << "\n";
      }
    }
    os << command << ",agreement,," << (agreement ? "true" : "false") << "\n";
  }
};

/// Integers that fit in 64 bits are emitted as JSON numbers, others as
/// decimal strings.
inline Json integer_json(const Integer& v) {
  if (fits_int64(v)) return Json(to_int64(v));
  return Json(v.str());
}

inline Json series_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(integer_json(c));
  return out;
}

inline Integer parse_integer(const std::string& text) {
  const std::size_t digits_from = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() <= digits_from ||
      text.find_first_not_of("0123456789", digits_from) != std::string::npos) {
    throw InvalidArgument("not an integer: '" + text + "'");
  }
  return Integer(text);
}

inline FiniteGroup resolve_group(const std::string& text) {
  if (text.empty()) throw InvalidArgument("a group is required (--group)");
  if (text.front() == '{' || text.find(".json") != std::string::npos) return parse_group(load_json(text));
  return named_group(text);
}

inline FiniteGSet resolve_space(const RunConfig& config, const FiniteGroup& g) {
  if (config.random_orbits > 0) return random_gset(g, config.random_orbits, config.seed);
  const std::string& s = config.space;
  if (s.empty()) throw InvalidArgument("a space is required (--space or --random-orbits)");
  if (s == "regular") return regular_gset(g);
  if (s == "trivial") return trivial_gset(g, 1);
  if (s.rfind("trivial:", 0) == 0) {
    const Integer m = parse_integer(s.substr(8));
    if (m < 0 || m > kMaxGroupOrder) throw InvalidArgument("trivial:m needs a small m");
    return trivial_gset(g, static_cast<std::uint32_t>(m));
  }
  return parse_action(load_json(s), g);
}

namespace detail {

inline void mark_agreement(Report& report, const std::vector<Integer>& values) {
  for (const auto& v : values)
    if (v != values.front()) report.agreement = false;
}

inline Json space_inputs(const RunConfig& config, const FiniteGroup& g, const FiniteGSet& x) {
  Json in{{"group_order", g.order()}, {"points", x.size()}};
  if (!config.group.empty() && config.group.front() != '{') in["group"] = config.group;
  if (config.random_orbits > 0) {
    in["random_orbits"] = config.random_orbits;
    in["seed"] = config.seed;
  } else if (config.space.front() != '{') {
    in["space"] = config.space;
  }
  return in;
}

inline Report run_chi(const RunConfig& config) {
  Report report{"chi"};
  const FiniteGroup g = resolve_group(config.group);
  const FiniteGSet x = resolve_space(config, g);
  const ChiOrder k(config.k, config.max_order);
  report.inputs = space_inputs(config, g, x);
  report.inputs["k"] = config.k;

  std::vector<Integer> values;
  const Integer rec = chi_k(x, k);
  values.push_back(rec);
  report.results.push_back({"recursion", "", integer_json(rec)});
  if (config.k == 0) {
    const Integer burnside = burnside_orbit_count(x, whole_group(g));
    values.push_back(burnside);
    report.results.push_back({"burnside", "", integer_json(burnside)});
  } else if (saturating_pow(g.order(), config.k + 1, config.tuple_budget) <= config.tuple_budget) {
    const OracleResult o = chi_k_oracle(x, k, config.tuple_budget);
    values.push_back(o.value);
    report.results.push_back({"tuples", "", integer_json(o.value)});
    report.results.push_back({"tuples", "tuple_sum", integer_json(o.tuple_sum)});
  } else {
    report.results.push_back({"tuples", "skipped", "tuple budget exceeded"});
  }
  if (g.order() <= kDefaultSubgroupBound) {
    const Integer types = chi_k_by_orbit_types(x, k);
    values.push_back(types);
    report.results.push_back({"orbit_types", "", integer_json(types)});
  } else {
    report.results.push_back({"orbit_types", "skipped", "group above the subgroup bound"});
  }
  mark_agreement(report, values);
  return report;
}

inline Report run_series(const RunConfig& config) {
  Report report{"series"};
  const Integer e = parse_integer(config.euler);
  report.inputs = Json{{"k", config.k}, {"euler", integer_json(e)}, {"degree", config.degree}};
  const ChiOrder k(config.k, config.max_order);
  const TruncatedSeries rhs = rhs_series(k.value, e, config.degree);
  report.results.push_back({"product", "", series_json(rhs)});
  if (config.k == 0) {
    const TruncatedSeries mac = macdonald_series(e, config.degree);
    report.results.push_back({"macdonald", "", series_json(mac)});
    report.agreement = mac == rhs;
  }
  return report;
}

inline Report run_verify(const RunConfig& config) {
  Report report{"verify"};
  const FiniteGroup g = resolve_group(config.group);
  const FiniteGSet x = resolve_space(config, g);
  const ChiOrder k(config.k, config.max_order);
  report.inputs = space_inputs(config, g, x);
  report.inputs["k"] = config.k;
  report.inputs["degree"] = config.degree;
  const Integer e = chi_k(x, k);
  report.inputs["euler"] = integer_json(e);
  WreathOptions options;
  options.use_lemma3_shortcut = config.use_lemma3_shortcut;
  const TruncatedSeries lhs = lhs_series(x, k, config.degree, options);
  const TruncatedSeries rhs = rhs_series(k.value, e, config.degree);
  report.results.push_back({config.use_lemma3_shortcut ? "lhs_lemma3" : "lhs", "", series_json(lhs)});
  report.results.push_back({"rhs", "", series_json(rhs)});
  report.agreement = lhs == rhs;
  return report;
}

inline Report run_wreath(const RunConfig& config) {
  Report report{"wreath"};
  const FiniteGroup g = resolve_group(config.group);
  report.inputs = Json{{"group_order", g.order()}, {"n", config.n}};
  if (!config.group.empty() && config.group.front() != '{') report.inputs["group"] = config.group;
  if (config.n > kMaxWreathDegree) {
    throw BudgetExceeded("wreath type tables are limited to n <= " +
                         std::to_string(kMaxWreathDegree));
  }
  const auto types = enumerate_types(g, config.n);
  Integer total = 0;
  for (const auto& t : types) {
    const TypeClassData d = type_class_data(g, config.n, t);
    total += d.class_size;
    report.results.push_back({"types", t.to_string(),
                              Json{{"class_size", integer_json(d.class_size)},
                                   {"centralizer_order", integer_json(d.centralizer_order)}}});
  }
  report.results.push_back({"types", "total_class_size", integer_json(total)});
  try {
    const TypeCheckReport check = check_types_against_brute_force(g, config.n, config.explicit_budget);
    for (const auto& c : check.brute_force) {
      report.results.push_back({"brute_force", c.type.to_string(),
                                Json{{"class_size", integer_json(c.class_size)},
                                     {"centralizer_order", integer_json(c.centralizer_order)}}});
    }
    report.agreement = check.agree;
  } catch (const BudgetExceeded&) {
    report.results.push_back({"brute_force", "skipped", "explicit group budget exceeded"});
  }
  return report;
}

inline Report run_lie(const RunConfig& config) {
  Report report{"lie"};
  report.inputs = Json{{"k", config.k}};
  if (!config.model.empty()) {
    report.inputs["model"] = config.model;
    const ModelGSpace x = parse_model(config.model);
    const Integer v = chi_k_model(x, ChiOrder(config.k, config.max_order));
    report.results.push_back({"integral", "", integer_json(v)});
  }
  if (config.check_paper) {
    report.inputs["m_max"] = config.m_max;
    const ChiOrder k_max(config.k, config.max_order);
    const PaperCheckReport check = check_paper_examples(config.m_max, k_max.value);
    for (const auto& row : check.rows) {
      report.results.push_back(
          {"closed_form", row.space + ",k=" + std::to_string(row.k),
           Json{{"computed", integer_json(row.computed)},
                {"closed_form", integer_json(row.closed_form)},
                {"agrees", row.agrees},
                {"known_deviation", row.known_deviation}}});
    }
    report.agreement = check.consistent();
  }
  if (config.model.empty() && !config.check_paper) {
    throw InvalidArgument("lie needs a model string or --check-paper");
  }
  return report;
}

}  // namespace detail

/// Runs one command and writes its report to `out`; diagnostics go to `err`.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    Report report;
    if (config.command == "chi") {
      report = detail::run_chi(config);
    } else if (config.command == "series") {
      report = detail::run_series(config);
    } else if (config.command == "verify") {
      report = detail::run_verify(config);
    } else if (config.command == "wreath") {
      report = detail::run_wreath(config);
    } else if (config.command == "lie") {
      report = detail::run_lie(config);
    } else {
      throw InvalidArgument("unknown command '" + config.command + "'");
    }
    if (config.format == OutputFormat::json) {
      out << report.to_json().dump() << "\n";
    } else {
      report.write_csv(out);
    }
    if (!report.agreement) {
      err << "oec: engines disagree; see the results above\n";
      return kExitDisagree;
    }
    return kExitAgree;
  } catch (const InternalError& e) {
    err << "oec: internal check failed: " << e.what() << "\n";
    return kExitDisagree;
  } catch (const Error& e) {
    err << "oec: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace oec

#endif  // OEC_CLI_HPP_
