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

// kdep command-line front end.
//
// Exit codes: 0 yes, 1 no, 2 input error, 3 budget exceeded.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kdep/entail.hpp"
#include "kdep/error.hpp"
#include "kdep/io.hpp"
#include "kdep/oracle.hpp"

namespace {

using kdep::Json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Options {
  bool json = false;
  std::string db_file;
  std::string ind_file;
  std::string sigma_file;
  std::string tau;
  std::string monoid = "naturals";
  std::string schema_file;
  std::string start;
  std::string trace_out;
  std::string system = "standard";
  std::string config_file;
  bool balanced = false;
  bool plus = false;
  std::uint64_t step_limit = 10000;
  std::uint64_t k_bound = kdep::kDefaultKBound;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

kdep::Monoid load_monoid(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    return kdep::monoid_from_json(kdep::parse_json(kdep::read_file(spec)));
  }
  return kdep::monoid_from_name(spec);
}

// Explicit --schema wins; otherwise the schema is read off the INDs.
kdep::Schema load_schema(const Options& o, const std::vector<kdep::Ind>& sigma,
                         const std::vector<kdep::Ind>& extra = {}) {
  if (!o.schema_file.empty()) {
    return kdep::schema_from_json(kdep::parse_json(kdep::read_file(o.schema_file)));
  }
  std::vector<kdep::Ind> all = sigma;
  all.insert(all.end(), extra.begin(), extra.end());
  return kdep::infer_schema(all);
}

kdep::Ind parse_tau(const std::string& text) { return kdep::parse_ind(text); }

// One row per tuple: values under their attributes, then the weight.
void print_relation(const kdep::KDatabase& d, const kdep::RelationName& name) {
  const auto& rel = d.relation(name);
  std::cout << name << "\n ";
  for (const auto& a : rel.attributes()) std::cout << " " << a;
  std::cout << "  | weight\n";
  for (const auto& [t, w] : rel.weights()) {
    std::cout << " ";
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::size_t width = std::max(rel.attributes()[i].size(), t[i].size());
      std::cout << " " << std::string(width - t[i].size(), ' ') << t[i];
    }
    std::cout << "  | " << d.monoid().format(w) << "\n";
  }
}

// Steps in the order they were applied, one incremented row each.
void print_trace(const kdep::ChaseTrace& trace) {
  const auto& m = trace.result.monoid();
  std::size_t i = 0;
  for (const auto& step : trace.steps) {
    std::cout << ++i << ". " << step.sigma.to_string() << " at (";
    for (std::size_t k = 0; k < step.witness.size(); ++k) std::cout << (k ? "," : "") << step.witness[k];
    std::cout << "): " << step.sigma.rhs_rel << "(";
    for (std::size_t k = 0; k < step.incremented_tuple.size(); ++k) {
      std::cout << (k ? " " : "") << step.incremented_tuple[k];
    }
    std::cout << ")";
    if (step.delta) std::cout << " += " << m.format(*step.delta);
    std::cout << "\n";
  }
}

int cmd_check(const Options& o) {
  auto db = kdep::database_from_json(kdep::parse_json(kdep::read_file(o.db_file)));
  auto inds = kdep::parse_ind_list(kdep::read_file(o.ind_file), &db.schema());
  Json rows = Json::array();
  bool all = true;
  for (const auto& s : inds) {
    bool ok = kdep::satisfies(db, s);
    all = all && ok;
    rows.push_back(Json{{"ind", s.to_string()}, {"satisfied", ok}});
    if (!o.json) std::cout << (ok ? "ok   " : "FAIL ") << s.to_string() << "\n";
  }
  if (o.json) emit(Json{{"all_satisfied", all}, {"results", rows}});
  return all ? kYes : kNo;
}

int cmd_entail(const Options& o) {
  auto sigma = kdep::parse_ind_list(kdep::read_file(o.sigma_file));
  auto tau = parse_tau(o.tau);
  auto schema = load_schema(o, sigma, {tau});
  for (const auto& s : sigma) kdep::validate(s, &schema);
  kdep::validate(tau, &schema);
  auto m = load_monoid(o.monoid);
  kdep::EntailOptions opts;
  opts.balanced = o.balanced;
  opts.chase.step_limit = o.step_limit;
  opts.k_bound = o.k_bound;
  auto v = kdep::decide_entailment(sigma, tau, m, schema, opts);
  if (o.json) {
    emit(kdep::verdict_to_json(v));
  } else {
    std::cout << (v.entailed ? "entailed" : "not entailed") << " (" << kdep::method_name(v.method)
              << (v.balanced ? ", balanced" : "") << ")\n";
    if (v.proof) std::cout << kdep::format_proof(*v.proof);
    if (v.countermodel) {
      const auto& d = v.countermodel->database;
      std::cout << "countermodel (" << kdep::construction_name(v.countermodel->construction)
                << ", " << d.monoid().name() << "):\n";
      for (const auto& name : d.schema().names()) print_relation(d, name);
    }
  }
  return v.entailed ? kYes : kNo;
}

int cmd_chase(const Options& o) {
  auto sigma = kdep::parse_ind_list(kdep::read_file(o.sigma_file));
  const std::string prefix = "canonical:";
  std::optional<kdep::KDatabase> start;
  if (o.start.rfind(prefix, 0) == 0) {
    auto tau = parse_tau(o.start.substr(prefix.size()));
    auto schema = load_schema(o, sigma, {tau});
    kdep::validate(tau, &schema);
    start = o.plus ? kdep::canonical_start_plus(tau, schema)
                   : kdep::canonical_start_classical(tau, schema);
  } else {
    start = kdep::database_from_json(kdep::parse_json(kdep::read_file(o.start)), true);
  }
  for (const auto& s : sigma) kdep::validate(s, &start->schema());
  kdep::ChaseTrace trace =
      o.plus ? kdep::plus_chase(*start, sigma, kdep::ChaseConfig{o.step_limit, true})
             : kdep::classical_chase(*start, sigma);
  Json tj = kdep::trace_to_json(trace);
  if (!o.trace_out.empty()) {
    std::ofstream out(o.trace_out);
    if (!out) throw kdep::Error(kdep::ErrorCode::InvalidInput, "cannot write " + o.trace_out);
    out << tj.dump(2) << "\n";
  }
  if (o.json) {
    emit(tj);
  } else {
    if (trace.steps.size() <= 200) print_trace(trace);
    std::cout << kdep::outcome_name(trace.outcome) << " after " << trace.step_count << " steps\n";
    for (const auto& name : trace.result.schema().names()) print_relation(trace.result, name);
  }
  return trace.outcome == kdep::ChaseOutcome::Terminated ? kYes : kBudget;
}

int cmd_classify(const Options& o) {
  auto m = load_monoid(o.monoid);
  auto r = kdep::classify(m, o.k_bound);
  Json j = kdep::report_to_json(r);
  j["monoid"] = m.name();
  if (o.json) {
    emit(j);
  } else {
    std::cout << m.name() << ": " << (r.weakly_cancellative ? "WC" : "WA");
    if (r.self_absorptive) std::cout << " SA";
    if (r.countably_absorptive) std::cout << " CA";
    std::cout << "\n";
  }
  return kYes;
}

int cmd_derive(const Options& o) {
  auto sigma = kdep::parse_ind_list(kdep::read_file(o.sigma_file));
  auto tau = parse_tau(o.tau);
  auto schema = load_schema(o, sigma, {tau});
  kdep::RuleSystem system = kdep::RuleSystem::Standard;
  if (o.system == "ws") system = kdep::RuleSystem::StandardWS;
  if (o.system == "balance") system = kdep::RuleSystem::StandardBalance;
  auto d = kdep::derives(sigma, tau, system, schema);
  if (o.json) {
    Json j{{"derivable", d.derivable}};
    if (d.proof) j["proof"] = kdep::proof_to_json(*d.proof);
    emit(j);
  } else {
    std::cout << (d.derivable ? "derivable" : "not derivable") << "\n";
    if (d.proof) std::cout << kdep::format_proof(*d.proof);
  }
  return d.derivable ? kYes : kNo;
}

// Config: {"monoid", "sigma": [...], "tau", "schema"?, "adom", "weights",
// "max_tuples"?, "max_databases"?, "balanced"?}. Exit 1 when a counterexample exists.
int cmd_oracle(const Options& o) {
  Json cfg = kdep::parse_json(kdep::read_file(o.config_file));
  if (!cfg.is_object()) throw kdep::Error(kdep::ErrorCode::InvalidInput, "config must be an object");
  auto m = kdep::monoid_from_json(cfg.value("monoid", Json("naturals")));
  std::vector<kdep::Ind> sigma;
  for (const auto& s : cfg.value("sigma", Json::array())) sigma.push_back(kdep::parse_ind(s.get<std::string>()));
  if (!cfg.contains("tau")) throw kdep::Error(kdep::ErrorCode::InvalidInput, "missing field 'tau'");
  auto tau = parse_tau(cfg.at("tau").get<std::string>());
  std::vector<kdep::Ind> all = sigma;
  all.push_back(tau);
  auto schema = cfg.contains("schema") ? kdep::schema_from_json(cfg.at("schema")) : kdep::infer_schema(all);
  auto space = kdep::search_space_from_json(cfg, m);
  bool balanced = cfg.value("balanced", false);
  auto found = balanced ? kdep::brute_force_balanced_entails(sigma, tau, schema, m, space)
                        : kdep::brute_force_entails(sigma, tau, schema, m, space);
  Json j{{"counterexample_found", found.has_value()},
         {"searched", kdep::search_space_size(schema, m, space)}};
  if (found) j["counterexample"] = kdep::database_to_json(*found);
  if (o.json) {
    emit(j);
  } else if (found) {
    std::cout << "counterexample:\n" << kdep::database_to_json(*found).dump(2) << "\n";
  } else {
    std::cout << "no counterexample in " << j["searched"] << " databases\n";
  }
  return found ? kNo : kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kdep: inclusion dependencies over annotated databases"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Check a database against a list of INDs");
  check->add_option("db", o.db_file, "Database JSON")->required();
  check->add_option("inds", o.ind_file, "IND list, one per line")->required();

  auto* entail = app.add_subcommand("entail", "Decide whether Sigma entails tau over a monoid");
  entail->add_option("sigma", o.sigma_file, "IND list")->required();
  entail->add_option("tau", o.tau, "Target IND, e.g. 'R[A] <= S[B]'")->required();
  entail->add_option("--monoid", o.monoid, "Builtin name or table JSON file");
  entail->add_flag("--balanced", o.balanced, "Restrict to balanced databases");
  entail->add_option("--step-limit", o.step_limit, "Additive chase step limit");
  entail->add_option("--schema", o.schema_file, "Schema JSON (default: inferred from the INDs)");
  entail->add_option("--k-bound", o.k_bound, "k-absorptivity search bound");

  auto* chase = app.add_subcommand("chase", "Run the classical or additive chase");
  chase->add_option("start", o.start, "Database JSON or canonical:<IND>")->required();
  chase->add_option("sigma", o.sigma_file, "IND list")->required();
  chase->add_flag("--plus", o.plus, "Additive chase (default: classical)");
  chase->add_option("--trace-out", o.trace_out, "Write the trace JSON here");
  chase->add_option("--step-limit", o.step_limit, "Additive chase step limit");
  chase->add_option("--schema", o.schema_file, "Schema JSON for canonical starts");

  auto* classify = app.add_subcommand("classify", "Classify a monoid");
  classify->add_option("monoid", o.monoid, "Builtin name or table JSON file")->required();
  classify->add_option("--k-bound", o.k_bound, "k-absorptivity search bound");

  auto* derive = app.add_subcommand("derive", "Search for a derivation of tau from Sigma");
  derive->add_option("sigma", o.sigma_file, "IND list")->required();
  derive->add_option("tau", o.tau, "Target IND")->required();
  derive->add_option("--system", o.system, "Rule system")
      ->check(CLI::IsMember({"standard", "ws", "balance"}));
  derive->add_option("--schema", o.schema_file, "Schema JSON (default: inferred from the INDs)");

  auto* oracle = app.add_subcommand("oracle", "Search a bounded space for a counterexample");
  oracle->add_option("config", o.config_file, "Oracle config JSON")->required();

  for (auto* sub : {check, entail, chase, classify, derive, oracle}) {
    sub->add_flag("--json", o.json, "Machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*check) return cmd_check(o);
    if (*entail) return cmd_entail(o);
    if (*chase) return cmd_chase(o);
    if (*classify) return cmd_classify(o);
    if (*derive) return cmd_derive(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const kdep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == kdep::ErrorCode::ChaseBudgetExceeded ||
        e.code() == kdep::ErrorCode::SearchSpaceTooLarge) {
      return kBudget;
    }
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
