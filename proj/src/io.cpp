// Copyright 2026 The kdep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kdep/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kdep/error.hpp"

namespace kdep {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned() || j.is_number_integer()) return j.dump();
  bad(what + " must be a string");
}

Json tuple_object(const std::vector<Attribute>& attrs, const Tuple& t) {
  Json out = Json::object();
  for (std::size_t i = 0; i < attrs.size(); ++i) out[attrs[i]] = t[i];
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Monoid monoid_from_json(const Json& j) {
  if (j.is_string()) return monoid_from_name(j.get<std::string>());
  if (!j.is_object()) bad("monoid must be a name or a table object");
  std::vector<std::string> elements;
  for (const auto& e : field(j, "elements")) elements.push_back(as_string(e, "element"));
  std::string zero = as_string(field(j, "zero"), "zero");
  TableEntries op;
  const Json& table = field(j, "op");
  if (!table.is_object()) bad("op must be an object");
  for (const auto& [key, value] : table.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorCode::InvalidMonoidTable, "op key '" + key + "' is not of the form x,y");
    }
    auto x = key.substr(0, comma);
    auto y = key.substr(comma + 1);
    std::string result = as_string(value, "op result");
    auto [it, fresh] = op.emplace(std::make_pair(x, y), result);
    if (!fresh && it->second != result) {
      throw Error(ErrorCode::InvalidMonoidTable, "entry " + key + " given twice");
    }
  }
  std::size_t max_elements = kDefaultMaxTableElements;
  if (j.contains("max_elements")) max_elements = j.at("max_elements").get<std::size_t>();
  return Monoid::finite_table(std::move(elements), zero, op, max_elements);
}

Json monoid_to_json(const Monoid& m) {
  if (m.kind() != MonoidKind::FiniteTable) return m.name();
  Json op = Json::object();
  const auto& names = m.table_elements();
  auto elems = m.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t k = i; k < elems.size(); ++k) {
      if (m.is_zero(elems[i]) || m.is_zero(elems[k])) continue;
      op[m.format(elems[i]) + "," + m.format(elems[k])] = m.format(m.add(elems[i], elems[k]));
    }
  }
  return Json{{"elements", names}, {"zero", m.table_zero()}, {"op", op}};
}

Schema schema_from_json(const Json& j) {
  if (!j.is_object()) bad("schema must be an object");
  Schema s;
  for (const auto& [name, attrs] : j.items()) {
    if (!attrs.is_array()) bad("attributes of " + name + " must be a list");
    std::vector<Attribute> list;
    for (const auto& a : attrs) list.push_back(as_string(a, "attribute"));
    s.add_relation(name, std::move(list));
  }
  return s;
}

Json schema_to_json(const Schema& s) {
  Json out = Json::object();
  for (const auto& [name, attrs] : s.relations()) out[name] = attrs;
  return out;
}

KDatabase database_from_json(const Json& j, bool allow_star) {
  if (!j.is_object()) bad("database must be a JSON object");
  Monoid m = monoid_from_json(field(j, "monoid"));
  Schema schema = schema_from_json(field(j, "schema"));
  KDatabase d(schema, m);
  if (!j.contains("relations")) return d;
  const Json& rels = j.at("relations");
  if (!rels.is_object()) bad("relations must be an object");
  for (const auto& [name, rows] : rels.items()) {
    const auto& attrs = schema.attributes(name);
    if (!rows.is_array()) bad("rows of " + name + " must be a list");
    std::set<Tuple> seen;
    for (const auto& row : rows) {
      const Json& tj = field(row, "tuple");
      Tuple t(attrs.size());
      if (tj.is_object()) {
        if (tj.size() != attrs.size()) {
          throw Error(ErrorCode::ArityMismatch, "tuple of " + name + " must bind every attribute");
        }
        for (const auto& [attr, value] : tj.items()) {
          t[schema.position(name, attr)] = as_string(value, "constant");
        }
      } else if (tj.is_array()) {
        if (tj.size() != attrs.size()) throw Error(ErrorCode::ArityMismatch, "tuple width of " + name);
        for (std::size_t i = 0; i < attrs.size(); ++i) t[i] = as_string(tj[i], "constant");
      } else {
        bad("tuple must be an object or a list");
      }
      for (const auto& c : t) {
        if (c == kStar && !allow_star) {
          throw Error(ErrorCode::ReservedConstant, "'*' is reserved and may not appear in " + name);
        }
        if (c.empty()) bad("empty constant in " + name);
      }
      if (!seen.insert(t).second) bad("tuple listed twice in " + name);
      Element w = row.contains("weight") ? m.parse(as_string(row.at("weight"), "weight"))
                                         : m.parse("1");
      d.set(name, t, w);
    }
  }
  return d;
}

Json database_to_json(const KDatabase& d) {
  const Monoid& m = d.monoid();
  Json rels = Json::object();
  for (const auto& [name, rel] : d.relations()) {
    Json rows = Json::array();
    for (const auto& [t, w] : rel.weights()) {
      rows.push_back(Json{{"tuple", tuple_object(rel.attributes(), t)}, {"weight", m.format(w)}});
    }
    rels[name] = rows;
  }
  return Json{{"monoid", monoid_to_json(m)}, {"schema", schema_to_json(d.schema())}, {"relations", rels}};
}

Json report_to_json(const PropertyReport& r) {
  Json k = r.k_absorptive_max ? Json(*r.k_absorptive_max) : Json("unbounded");
  return Json{{"positive", r.positive},
              {"weakly_cancellative", r.weakly_cancellative},
              {"weakly_absorptive", r.weakly_absorptive},
              {"self_absorptive", r.self_absorptive},
              {"k_absorptive_max", k},
              {"countably_absorptive", r.countably_absorptive},
              {"natural_order_total", r.natural_order_total},
              {"natural_order_antisymmetric", r.natural_order_antisymmetric},
              {"provenance", r.provenance == ReportProvenance::Declared ? "declared" : "computed"}};
}

Json proof_to_json(const DerivationProof& p) {
  Json out{{"rule", std::string(rule_name(p.rule))}, {"conclusion", p.conclusion.to_string()}};
  if (p.rule == Rule::ProjectPermute) out["indices"] = p.indices;
  Json premises = Json::array();
  for (const auto& q : p.premises) premises.push_back(proof_to_json(q));
  out["premises"] = premises;
  return out;
}

Json step_to_json(const ChaseStep& step, const Schema& schema, const Monoid& m) {
  Json out{{"kind", std::string(step_kind_name(step.kind))},
           {"sigma", step.sigma.to_string()},
           {"witness", step.witness},
           {"relation", step.sigma.rhs_rel},
           {"tuple", tuple_object(schema.attributes(step.sigma.rhs_rel), step.incremented_tuple)}};
  if (step.delta) out["delta"] = m.format(*step.delta);
  return out;
}

Json trace_to_json(const ChaseTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(step_to_json(s, trace.result.schema(), trace.result.monoid()));
  }
  return Json{{"start", database_to_json(trace.start)},
              {"steps", steps},
              {"step_count", trace.step_count},
              {"outcome", std::string(outcome_name(trace.outcome))},
              {"result", database_to_json(trace.result)}};
}

Json countermodel_to_json(const Countermodel& cm) {
  const Monoid& m = cm.database.monoid();
  Json params = Json::array();
  for (const auto& e : cm.parameters) params.push_back(m.format(e));
  return Json{{"construction", std::string(construction_name(cm.construction))},
              {"parameters", params},
              {"verified", cm.verified},
              {"database", database_to_json(cm.database)}};
}

Json verdict_to_json(const EntailmentVerdict& v) {
  Json out{{"entailed", v.entailed},
           {"method", std::string(method_name(v.method))},
           {"balanced", v.balanced},
           {"chase_steps", v.chase_steps}};
  if (v.proof) out["proof"] = proof_to_json(*v.proof);
  if (v.countermodel) out["countermodel"] = countermodel_to_json(*v.countermodel);
  return out;
}

SearchSpace search_space_from_json(const Json& j, const Monoid& m) {
  SearchSpace s;
  for (const auto& c : field(j, "adom")) s.adom.push_back(as_string(c, "constant"));
  for (const auto& w : field(j, "weights")) s.weight_pool.push_back(m.parse(as_string(w, "weight")));
  if (j.contains("max_tuples")) s.max_tuples = j.at("max_tuples").get<std::size_t>();
  if (j.contains("max_databases")) s.max_databases = j.at("max_databases").get<std::uint64_t>();
  return s;
}

}  // namespace kdep
