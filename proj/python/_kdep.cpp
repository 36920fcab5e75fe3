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


// Python bindings. Structured values cross the boundary as JSON text; the
// kdep package decodes them into dicts.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kdep/chase.hpp"
#include "kdep/entail.hpp"
#include "kdep/error.hpp"
#include "kdep/infer.hpp"
#include "kdep/io.hpp"

namespace py = pybind11;

namespace {

using kdep::Json;

std::vector<kdep::Ind> parse_sigma(const std::vector<std::string>& sigma) {
  std::vector<kdep::Ind> out;
  for (const auto& s : sigma) out.push_back(kdep::parse_ind(s));
  return out;
}

kdep::Schema schema_for(const std::optional<std::string>& schema_json,
                        std::vector<kdep::Ind> inds) {
  if (schema_json) return kdep::schema_from_json(kdep::parse_json(*schema_json));
  return kdep::infer_schema(inds);
}

kdep::RuleSystem system_from_name(const std::string& name) {
  if (name == "standard") return kdep::RuleSystem::Standard;
  if (name == "ws") return kdep::RuleSystem::StandardWS;
  if (name == "balance") return kdep::RuleSystem::StandardBalance;
  throw kdep::Error(kdep::ErrorCode::SyntaxError, "unknown rule system '" + name + "'");
}

std::string classify_json(const std::string& monoid_json) {
  auto m = kdep::monoid_from_json(kdep::parse_json(monoid_json));
  return kdep::report_to_json(kdep::classify(m)).dump();
}

std::string derive_json(const std::vector<std::string>& sigma, const std::string& tau,
                        const std::string& system, const std::optional<std::string>& schema) {
  auto s = parse_sigma(sigma);
  auto t = kdep::parse_ind(tau);
  auto all = s;
  all.push_back(t);
  auto d = kdep::derives(s, t, system_from_name(system), schema_for(schema, all));
  Json out = {{"derivable", d.derivable}};
  if (d.proof) out["proof"] = kdep::proof_to_json(*d.proof);
  return out.dump();
}

std::string entail_json(const std::vector<std::string>& sigma, const std::string& tau,
                        const std::string& monoid_json, const std::optional<std::string>& schema,
                        bool balanced, std::uint64_t step_limit) {
  auto s = parse_sigma(sigma);
  auto t = kdep::parse_ind(tau);
  auto all = s;
  all.push_back(t);
  auto m = kdep::monoid_from_json(kdep::parse_json(monoid_json));
  kdep::EntailOptions opts;
  opts.balanced = balanced;
  opts.chase.step_limit = step_limit;
  return kdep::verdict_to_json(kdep::decide_entailment(s, t, m, schema_for(schema, all), opts)).dump();
}

std::string check_json(const std::string& database_json, const std::vector<std::string>& sigma) {
  auto d = kdep::database_from_json(kdep::parse_json(database_json));
  Json out = Json::object();
  for (const auto& s : sigma) {
    auto ind = kdep::parse_ind(s, d.schema());
    out[ind.to_string()] = kdep::satisfies(d, ind);
  }
  return out.dump();
}

std::string chase_json(const std::string& database_json, const std::vector<std::string>& sigma,
                       const std::string& method, std::uint64_t step_limit) {
  auto d = kdep::database_from_json(kdep::parse_json(database_json), true);
  std::vector<kdep::Ind> s;
  for (const auto& text : sigma) s.push_back(kdep::parse_ind(text, d.schema()));
  kdep::ChaseTrace trace = [&] {
    if (method == "plus") return kdep::plus_chase(d, s, kdep::ChaseConfig{step_limit, true});
    if (method == "classical") return kdep::classical_chase(d, s);
    throw kdep::Error(kdep::ErrorCode::SyntaxError, "unknown chase method '" + method + "'");
  }();
  return kdep::trace_to_json(trace).dump();
}

}  // namespace

PYBIND11_MODULE(_kdep, m) {
  m.doc() = "Inclusion dependencies over annotated databases";
  py::register_exception<kdep::Error>(m, "KdepError", PyExc_ValueError);
  m.def("classify", &classify_json, py::arg("monoid"));
  m.def("derive", &derive_json, py::arg("sigma"), py::arg("tau"), py::arg("system"),
        py::arg("schema") = py::none());
  m.def("entail", &entail_json, py::arg("sigma"), py::arg("tau"), py::arg("monoid"),
        py::arg("schema") = py::none(), py::arg("balanced") = false, py::arg("step_limit") = 10000);
  m.def("check", &check_json, py::arg("database"), py::arg("sigma"));
  m.def("chase", &chase_json, py::arg("database"), py::arg("sigma"), py::arg("method"),
        py::arg("step_limit") = 10000);
}
