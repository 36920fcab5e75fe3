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

#include "kdep/infer.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "kdep/error.hpp"

namespace kdep {

RuleSet RuleSet::of(RuleSystem system) {
  switch (system) {
    case RuleSystem::Standard: return RuleSet{};
    case RuleSystem::StandardWS: return RuleSet{true, false, false};
    case RuleSystem::StandardBalance: return RuleSet{false, true, true};
  }
  return RuleSet{};
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::Hypothesis: return "Hypothesis";
    case Rule::Reflexivity: return "Reflexivity";
    case Rule::Balance: return "Balance";
    case Rule::Transitivity: return "Transitivity";
    case Rule::ProjectPermute: return "ProjectPermute";
    case Rule::WeakSymmetry: return "WeakSymmetry";
    case Rule::Symmetry: return "Symmetry";
  }
  return "Unknown";
}

std::size_t DerivationProof::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

Ind project_permute(const Ind& sigma, const std::vector<std::size_t>& indices) {
  std::vector<bool> used(sigma.arity(), false);
  Ind out{sigma.lhs_rel, {}, sigma.rhs_rel, {}};
  for (auto i : indices) {
    if (i >= sigma.arity()) {
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " out of range for " +
                                                  sigma.to_string());
    }
    if (used[i]) throw Error(ErrorCode::DuplicateIndex, "index " + std::to_string(i) + " repeated");
    used[i] = true;
    out.lhs_attrs.push_back(sigma.lhs_attrs[i]);
    out.rhs_attrs.push_back(sigma.rhs_attrs[i]);
  }
  return out;
}

Ind transitivity(const Ind& s1, const Ind& s2) {
  if (s1.rhs_rel != s2.lhs_rel || s1.rhs_attrs != s2.lhs_attrs) {
    throw Error(ErrorCode::MiddleMismatch,
                "cannot compose " + s1.to_string() + " with " + s2.to_string());
  }
  return Ind{s1.lhs_rel, s1.lhs_attrs, s2.rhs_rel, s2.rhs_attrs};
}

Ind weak_symmetry(const Ind& sigma, const Ind& empty_ind) {
  if (empty_ind.arity() != 0 || empty_ind.lhs_rel != sigma.rhs_rel ||
      empty_ind.rhs_rel != sigma.lhs_rel) {
    throw Error(ErrorCode::PremiseMismatch, empty_ind.to_string() +
                                                " is not the arity-0 converse premise for " +
                                                sigma.to_string());
  }
  return inverse(sigma);
}

std::vector<Ind> balance_axioms(const Schema& schema) {
  std::vector<Ind> out;
  for (const auto& r : schema.names()) {
    for (const auto& s : schema.names()) {
      if (r != s) out.push_back(Ind{s, {}, r, {}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Edge = std::pair<int, int>;

struct Justification {
  Rule rule = Rule::Hypothesis;
  Edge first{-1, -1};
  Edge second{-1, -1};
  std::vector<std::size_t> indices;
};

Justification just(Rule rule, Edge first = {-1, -1}, Edge second = {-1, -1},
                   std::vector<std::size_t> indices = {}) {
  return Justification{rule, first, second, std::move(indices)};
}

// All sequences of distinct positions from [0, n).
void selections(std::size_t n, std::vector<std::size_t>& current, std::vector<bool>& used,
                std::vector<std::vector<std::size_t>>& out) {
  out.push_back(current);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    current.push_back(i);
    selections(n, current, used, out);
    current.pop_back();
    used[i] = false;
  }
}

std::vector<Ind> canonical(std::vector<Ind> inds) {
  std::vector<std::pair<std::string, Ind>> keyed;
  keyed.reserve(inds.size());
  for (auto& s : inds) keyed.emplace_back(s.to_string(), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  std::vector<Ind> out;
  out.reserve(keyed.size());
  for (auto& [k, s] : keyed) out.push_back(std::move(s));
  return out;
}

}  // namespace

struct Closure::Impl {
  struct Node {
    RelationName rel;
    std::vector<Attribute> attrs;
    int rel_id;
  };

  RuleSet rules;
  Schema schema;
  std::vector<Ind> sigma;
  std::vector<Node> nodes;
  std::map<std::pair<RelationName, std::vector<Attribute>>, int> node_ids;
  std::map<RelationName, int> rel_ids;
  std::vector<int> zero_node;  // by rel id
  std::map<Edge, Justification> known;
  std::vector<std::vector<int>> out_edges;
  std::vector<std::vector<int>> in_edges;
  std::map<std::pair<int, int>, std::vector<Edge>> by_rel_pair;
  std::deque<Edge> work;

  int node(const RelationName& rel, const std::vector<Attribute>& attrs) {
    auto key = std::make_pair(rel, attrs);
    auto it = node_ids.find(key);
    if (it != node_ids.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(Node{rel, attrs, rel_ids.at(rel)});
    node_ids.emplace(std::move(key), id);
    out_edges.emplace_back();
    in_edges.emplace_back();
    return id;
  }

  std::optional<Edge> lookup(const Ind& s) const {
    auto u = node_ids.find({s.lhs_rel, s.lhs_attrs});
    auto v = node_ids.find({s.rhs_rel, s.rhs_attrs});
    if (u == node_ids.end() || v == node_ids.end()) return std::nullopt;
    return Edge{u->second, v->second};
  }

  Ind ind(const Edge& e) const {
    const auto& u = nodes[e.first];
    const auto& v = nodes[e.second];
    return Ind{u.rel, u.attrs, v.rel, v.attrs};
  }

  bool is_seed(const Edge& e) const {
    return e.first == e.second && nodes[e.first].attrs.empty();
  }

  void add(const Edge& e, Justification j) {
    if (e.first == e.second && !nodes[e.first].attrs.empty()) return;
    if (known.count(e)) return;
    known.emplace(e, std::move(j));
    out_edges[e.first].push_back(e.second);
    in_edges[e.second].push_back(e.first);
    by_rel_pair[{nodes[e.first].rel_id, nodes[e.second].rel_id}].push_back(e);
    work.push_back(e);
  }

  Impl(const std::vector<Ind>& raw_sigma, RuleSet r, const Schema& s)
      : rules(r), schema(s), sigma(canonical(raw_sigma)) {
    for (const auto& name : schema.names()) {
      int id = static_cast<int>(rel_ids.size());
      rel_ids.emplace(name, id);
    }
    for (const auto& x : sigma) validate(x, &schema);
    zero_node.resize(rel_ids.size());
    for (const auto& [name, id] : rel_ids) zero_node[id] = node(name, {});

    std::vector<std::pair<Ind, Rule>> generators;
    for (const auto& x : sigma) generators.emplace_back(x, Rule::Hypothesis);
    if (rules.balance) {
      for (const auto& x : balance_axioms(schema)) generators.emplace_back(x, Rule::Balance);
    }
    for (const auto& [g, rule] : generators) {
      add(Edge{node(g.lhs_rel, g.lhs_attrs), node(g.rhs_rel, g.rhs_attrs)}, just(rule));
    }
    for (const auto& [name, id] : rel_ids) {
      add(Edge{zero_node[id], zero_node[id]}, just(Rule::Reflexivity));
    }
    for (const auto& [g, rule] : generators) {
      if (g.is_reflexive()) continue;
      Edge parent{node(g.lhs_rel, g.lhs_attrs), node(g.rhs_rel, g.rhs_attrs)};
      std::vector<std::vector<std::size_t>> all;
      std::vector<std::size_t> current;
      std::vector<bool> used(g.arity(), false);
      selections(g.arity(), current, used, all);
      for (const auto& idx : all) {
        Ind p = project_permute(g, idx);
        Edge e{node(p.lhs_rel, p.lhs_attrs), node(p.rhs_rel, p.rhs_attrs)};
        add(e, just(Rule::ProjectPermute, parent, {-1, -1}, idx));
      }
    }
    run();
  }

  void run() {
    while (!work.empty()) {
      Edge x = work.front();
      work.pop_front();
      if (is_seed(x)) {
        if (rules.weak_symmetry) weak_symmetry_with_empty(x);
        continue;
      }
      const int u = x.first;
      const int v = x.second;
      // Index loops copy sizes up front since add() may append.
      for (std::size_t i = 0, n = out_edges[v].size(); i < n; ++i) {
        int w = out_edges[v][i];
        if (w == v) continue;
        add(Edge{u, w}, just(Rule::Transitivity, x, Edge{v, w}));
      }
      for (std::size_t i = 0, n = in_edges[u].size(); i < n; ++i) {
        int t = in_edges[u][i];
        if (t == u) continue;
        add(Edge{t, v}, just(Rule::Transitivity, Edge{t, u}, x));
      }
      if (rules.symmetry) add(Edge{v, u}, just(Rule::Symmetry, x));
      if (rules.weak_symmetry) {
        Edge converse{zero_node[nodes[v].rel_id], zero_node[nodes[u].rel_id]};
        if (known.count(converse)) add(Edge{v, u}, just(Rule::WeakSymmetry, x, converse));
        if (nodes[u].attrs.empty()) weak_symmetry_with_empty(x);
      }
    }
  }

  // x = S[] <= R[]: invert every known R[..] <= S[..].
  void weak_symmetry_with_empty(const Edge& x) {
    int s = nodes[x.first].rel_id;
    int r = nodes[x.second].rel_id;
    auto it = by_rel_pair.find({r, s});
    if (it == by_rel_pair.end()) return;
    std::vector<Edge> candidates = it->second;
    for (const auto& y : candidates) {
      if (y.first == y.second) continue;
      add(Edge{y.second, y.first}, just(Rule::WeakSymmetry, y, x));
    }
  }

  DerivationProof build(const Edge& e) const {
    const auto& j = known.at(e);
    DerivationProof p;
    p.rule = j.rule;
    p.conclusion = ind(e);
    switch (j.rule) {
      case Rule::ProjectPermute:
        p.indices = j.indices;
        p.premises.push_back(build(j.first));
        break;
      case Rule::Transitivity:
      case Rule::WeakSymmetry:
        p.premises.push_back(build(j.first));
        p.premises.push_back(build(j.second));
        break;
      case Rule::Symmetry:
        p.premises.push_back(build(j.first));
        break;
      default: break;
    }
    return p;
  }
};

Closure::Closure(const std::vector<Ind>& sigma, RuleSet rules, const Schema& schema)
    : impl_(std::make_unique<Impl>(sigma, rules, schema)) {}
Closure::~Closure() = default;
Closure::Closure(Closure&&) noexcept = default;
Closure& Closure::operator=(Closure&&) noexcept = default;

bool Closure::derives(const Ind& tau) const {
  if (tau.is_reflexive()) return true;
  auto e = impl_->lookup(tau);
  return e && impl_->known.count(*e) > 0;
}

std::optional<DerivationProof> Closure::proof(const Ind& tau) const {
  if (tau.is_reflexive()) return DerivationProof{Rule::Reflexivity, tau, {}, {}};
  auto e = impl_->lookup(tau);
  if (!e || !impl_->known.count(*e)) return std::nullopt;
  DerivationProof p = impl_->build(*e);
  check_proof(p, impl_->sigma, impl_->rules, impl_->schema);
  return p;
}

std::vector<Ind> Closure::members() const {
  std::vector<Ind> out;
  out.reserve(impl_->known.size());
  for (const auto& [e, j] : impl_->known) out.push_back(impl_->ind(e));
  return canonical(std::move(out));
}

std::size_t Closure::size() const { return impl_->known.size(); }

std::vector<Ind> saturate(const std::vector<Ind>& sigma, RuleSystem system, const Schema& schema) {
  return saturate(sigma, RuleSet::of(system), schema);
}

std::vector<Ind> saturate(const std::vector<Ind>& sigma, RuleSet rules, const Schema& schema) {
  return Closure(sigma, rules, schema).members();
}

Derivation derives(const std::vector<Ind>& sigma, const Ind& tau, RuleSystem system,
                   const Schema& schema) {
  return derives(sigma, tau, RuleSet::of(system), schema);
}

Derivation derives(const std::vector<Ind>& sigma, const Ind& tau, RuleSet rules,
                   const Schema& schema) {
  validate(tau, &schema);
  Closure c(sigma, rules, schema);
  Derivation d;
  d.proof = c.proof(tau);
  d.derivable = d.proof.has_value();
  return d;
}

void check_proof(const DerivationProof& proof, const std::vector<Ind>& sigma, RuleSet rules,
                 const Schema& schema) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::VerificationFailed, std::string(rule_name(proof.rule)) + " node " +
                                                   proof.conclusion.to_string() + ": " + why);
  };
  auto arity = [&](std::size_t n) {
    if (proof.premises.size() != n) fail("expected " + std::to_string(n) + " premises");
  };
  for (const auto& p : proof.premises) check_proof(p, sigma, rules, schema);
  try {
    validate(proof.conclusion, &schema);
    switch (proof.rule) {
      case Rule::Hypothesis:
        arity(0);
        if (std::find(sigma.begin(), sigma.end(), proof.conclusion) == sigma.end()) {
          fail("not a hypothesis");
        }
        break;
      case Rule::Reflexivity:
        arity(0);
        if (!proof.conclusion.is_reflexive()) fail("not reflexive");
        break;
      case Rule::Balance:
        arity(0);
        if (!rules.balance) fail("balance is not in the rule set");
        if (proof.conclusion.arity() != 0) fail("balance instances have arity 0");
        break;
      case Rule::Transitivity:
        arity(2);
        if (transitivity(proof.premises[0].conclusion, proof.premises[1].conclusion) !=
            proof.conclusion) {
          fail("conclusion does not match");
        }
        break;
      case Rule::ProjectPermute:
        arity(1);
        if (project_permute(proof.premises[0].conclusion, proof.indices) != proof.conclusion) {
          fail("conclusion does not match");
        }
        break;
      case Rule::WeakSymmetry:
        arity(2);
        if (!rules.weak_symmetry) fail("weak symmetry is not in the rule set");
        if (weak_symmetry(proof.premises[0].conclusion, proof.premises[1].conclusion) !=
            proof.conclusion) {
          fail("conclusion does not match");
        }
        break;
      case Rule::Symmetry:
        arity(1);
        if (!rules.symmetry) fail("symmetry is not in the rule set");
        if (inverse(proof.premises[0].conclusion) != proof.conclusion) fail("not the inverse");
        break;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::VerificationFailed) throw;
    fail(e.what());
  }
}

namespace {

void format_into(const DerivationProof& p, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += p.conclusion.to_string();
  out += "  [";
  out += rule_name(p.rule);
  if (p.rule == Rule::ProjectPermute) {
    out += ' ';
    for (std::size_t i = 0; i < p.indices.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p.indices[i]);
    }
  }
  out += "]\n";
  for (const auto& q : p.premises) format_into(q, depth + 1, out);
}

}  // namespace

std::string format_proof(const DerivationProof& proof) {
  std::string out;
  format_into(proof, 0, out);
  return out;
}

}  // namespace kdep
