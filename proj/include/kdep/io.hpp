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

// JSON encodings shared by the CLI and the Python module. Objects use
// std::map keys, so dumps come out with sorted keys.

#ifndef KDEP_IO_HPP
#define KDEP_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "kdep/entail.hpp"
#include "kdep/oracle.hpp"

namespace kdep {

using Json = nlohmann::json;

/// Name string (`naturals`, `monogenic:2,3`, ...) or a table object
/// `{"elements": [...], "zero": "0", "op": {"a,b": "b", ...}}`.
Monoid monoid_from_json(const Json& j);
Json monoid_to_json(const Monoid& m);

/// `{"monoid": ..., "schema": {"R": ["A"]}, "relations": {"R": [{"tuple": {"A": "x"}, "weight": "2"}]}}`.
/// The star constant is rejected unless `allow_star`.
KDatabase database_from_json(const Json& j, bool allow_star = false);
Json database_to_json(const KDatabase& d);

Schema schema_from_json(const Json& j);
Json schema_to_json(const Schema& s);

Json report_to_json(const PropertyReport& r);
Json proof_to_json(const DerivationProof& p);
Json step_to_json(const ChaseStep& step, const Schema& schema, const Monoid& m);
Json trace_to_json(const ChaseTrace& trace);
Json countermodel_to_json(const Countermodel& cm);
Json verdict_to_json(const EntailmentVerdict& v);

/// `{"adom": [...], "weights": [...], "max_tuples": 4, "max_databases": N}`.
SearchSpace search_space_from_json(const Json& j, const Monoid& m);

/// Parses text as JSON, mapping parse failures to InvalidInput.
Json parse_json(std::string_view text);
/// Raises InvalidInput when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace kdep

#endif  // KDEP_IO_HPP
