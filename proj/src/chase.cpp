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

#include "kdep/chase.hpp"

#include <deque>

#include "kdep/error.hpp"

namespace kdep {

std::string_view outcome_name(ChaseOutcome outcome) {
  return outcome == ChaseOutcome::Terminated ? "Terminated" : "StepLimitExceeded";
}

std::string_view step_kind_name(StepKind kind) {
  return kind == StepKind::PlusRule ? "PlusRule" : "ClassicalRuleStar";
}

namespace {

Tuple canonical_tuple(const Ind& tau, const Schema& schema) {
  validate(tau, &schema);
  const auto& attrs = schema.attributes(tau.lhs_rel);
  Tuple t(attrs.size(), kStar);
  for (std::size_t i = 0; i < tau.arity(); ++i) {
    t[schema.position(tau.lhs_rel, tau.lhs_attrs[i])] = std::to_string(i + 1);
  }
  return t;
}

}  // namespace

Database canonical_start_classical(const Ind& tau, const Schema& schema) {
  Database d(schema, Monoid::boolean());
  d.set(tau.lhs_rel, canonical_tuple(tau, schema), Element::from_int(1));
  return d;
}

KDatabase canonical_start_plus(const Ind& tau, const Schema& schema) {
  KDatabase d(schema, Monoid::naturals());
  d.set(tau.lhs_rel, canonical_tuple(tau, schema), Element::from_int(1));
  return d;
}

Tuple star_padded(const Ind& sigma, const Schema& schema, const std::vector<Constant>& witness) {
  Tuple t(schema.attributes(sigma.rhs_rel).size(), kStar);
  for (std::size_t i = 0; i < sigma.arity(); ++i) {
    t[schema.position(sigma.rhs_rel, sigma.rhs_attrs[i])] = witness[i];
  }
  return t;
}

ChaseTrace classical_chase(const KDatabase& d0, const std::vector<Ind>& sigma, bool record_steps) {
  for (const auto& s : sigma) validate(s, &d0.schema());
  const Schema& schema = d0.schema();
  Database start = support(d0);
  Database d = start;
  const Element one = Element::from_int(1);

  struct Prepared {
    const Ind* ind;
    std::vector<std::size_t> lhs_pos;
  };
  std::map<RelationName, std::vector<Prepared>> by_lhs;
  for (const auto& s : sigma) {
    if (s.is_reflexive()) continue;
    by_lhs[s.lhs_rel].push_back(
        Prepared{&s, attribute_positions(schema.attributes(s.lhs_rel), s.lhs_attrs)});
  }

  ChaseTrace trace{start, {}, 0, ChaseOutcome::Terminated, start};
  std::deque<std::pair<RelationName, Tuple>> queue;
  for (const auto& [name, rel] : d.relations()) {
    for (const auto& [t, w] : rel.weights()) queue.emplace_back(name, t);
  }
  while (!queue.empty()) {
    auto [rel, t] = std::move(queue.front());
    queue.pop_front();
    auto it = by_lhs.find(rel);
    if (it == by_lhs.end()) continue;
    for (const auto& p : it->second) {
      auto witness = project(t, p.lhs_pos);
      Tuple target = star_padded(*p.ind, schema, witness);
      if (d.relation(p.ind->rhs_rel).weights().count(target)) continue;
      d.set(p.ind->rhs_rel, target, one);
      ++trace.step_count;
      if (record_steps) {
        trace.steps.push_back(
            ChaseStep{StepKind::ClassicalRuleStar, *p.ind, witness, target, std::nullopt});
      }
      queue.emplace_back(p.ind->rhs_rel, std::move(target));
    }
  }
  trace.result = std::move(d);
  return trace;
}

ChaseTrace plus_chase(const KDatabase& d0, const std::vector<Ind>& sigma, const ChaseConfig& cfg) {
  const Monoid& m = d0.monoid();
  if (!m.supports_monus()) {
    throw Error(ErrorCode::UnsupportedMonoid,
                "additive chase needs a weakly cancellative total order, got " + m.name());
  }
  if (cfg.step_limit < 1) throw Error(ErrorCode::InvalidInput, "step limit must be at least 1");
  const Schema& schema = d0.schema();
  for (const auto& s : sigma) validate(s, &schema);

  struct Prepared {
    std::vector<std::size_t> lhs_pos;
    std::vector<std::size_t> rhs_pos;
    std::map<Tuple, Element> lhs_marg;
    std::map<Tuple, Element> rhs_marg;
  };
  std::vector<Prepared> prep;
  prep.reserve(sigma.size());
  for (const auto& s : sigma) {
    Prepared p;
    p.lhs_pos = attribute_positions(schema.attributes(s.lhs_rel), s.lhs_attrs);
    p.rhs_pos = attribute_positions(schema.attributes(s.rhs_rel), s.rhs_attrs);
    p.lhs_marg = marginal_map(d0.relation(s.lhs_rel), p.lhs_pos, m);
    p.rhs_marg = marginal_map(d0.relation(s.rhs_rel), p.rhs_pos, m);
    prep.push_back(std::move(p));
  }

  ChaseTrace trace{d0, {}, 0, ChaseOutcome::Terminated, d0};
  KDatabase& d = trace.result;
  const std::size_t n = sigma.size();
  if (n == 0) return trace;

  auto violated = [&](std::size_t j, const Tuple& key, const Element& w) {
    auto it = prep[j].rhs_marg.find(key);
    return it == prep[j].rhs_marg.end() || !m.leq(w, it->second);
  };

  std::size_t cursor_sigma = 0;
  std::optional<Tuple> cursor_key;
  while (true) {
    // Next applicable pair strictly after the cursor, wrapping once.
    std::optional<std::pair<std::size_t, Tuple>> found;
    for (std::size_t k = 0; k <= n && !found; ++k) {
      std::size_t j = (cursor_sigma + k) % n;
      const auto& lm = prep[j].lhs_marg;
      auto begin = lm.begin();
      auto end = lm.end();
      if (cursor_key && k == 0) begin = lm.upper_bound(*cursor_key);
      if (k == n) {
        if (!cursor_key) break;
        end = lm.upper_bound(*cursor_key);
      }
      for (auto it = begin; it != end; ++it) {
        if (violated(j, it->first, it->second)) {
          found.emplace(j, it->first);
          break;
        }
      }
    }
    if (!found) break;
    if (trace.step_count >= cfg.step_limit) {
      trace.outcome = ChaseOutcome::StepLimitExceeded;
      break;
    }
    auto [j, key] = std::move(*found);
    const Ind& s = sigma[j];
    const Element lhs = prep[j].lhs_marg.at(key);
    auto rit = prep[j].rhs_marg.find(key);
    const Element rhs = rit == prep[j].rhs_marg.end() ? m.zero() : rit->second;
    Element delta = m.monus(lhs, rhs);
    Tuple target = star_padded(s, schema, key);
    d.add(s.rhs_rel, target, delta);
    for (std::size_t i = 0; i < n; ++i) {
      if (sigma[i].lhs_rel == s.rhs_rel) {
        auto k2 = project(target, prep[i].lhs_pos);
        auto [it, fresh] = prep[i].lhs_marg.emplace(k2, delta);
        if (!fresh) it->second = m.add(it->second, delta);
      }
      if (sigma[i].rhs_rel == s.rhs_rel) {
        auto k2 = project(target, prep[i].rhs_pos);
        auto [it, fresh] = prep[i].rhs_marg.emplace(k2, delta);
        if (!fresh) it->second = m.add(it->second, delta);
      }
    }
    ++trace.step_count;
    if (cfg.record_steps) {
      trace.steps.push_back(ChaseStep{StepKind::PlusRule, s, key, std::move(target), delta});
    }
    cursor_sigma = j;
    cursor_key = std::move(key);
  }
  return trace;
}

bool applicable(const KDatabase& d, const Ind& sigma, const std::vector<Constant>& a) {
  const Monoid& m = d.monoid();
  if (!m.supports_monus()) {
    throw Error(ErrorCode::UnsupportedMonoid, "no weakly cancellative total order on " + m.name());
  }
  validate(sigma, &d.schema());
  if (a.size() != sigma.arity()) throw Error(ErrorCode::ArityMismatch, "witness length");
  const auto& lhs = d.relation(sigma.lhs_rel);
  const auto& rhs = d.relation(sigma.rhs_rel);
  auto lm = marginal_map(lhs, attribute_positions(lhs.attributes(), sigma.lhs_attrs), m);
  auto rm = marginal_map(rhs, attribute_positions(rhs.attributes(), sigma.rhs_attrs), m);
  auto l = lm.find(a);
  if (l == lm.end()) return false;
  auto r = rm.find(a);
  return r == rm.end() || !m.leq(l->second, r->second);
}

KDatabase replay(const ChaseTrace& trace) {
  KDatabase d = trace.start;
  const Element one = Element::from_int(1);
  for (const auto& step : trace.steps) {
    if (step.kind == StepKind::PlusRule) {
      d.add(step.sigma.rhs_rel, step.incremented_tuple, *step.delta);
    } else {
      d.set(step.sigma.rhs_rel, step.incremented_tuple, one);
    }
  }
  return d;
}

}  // namespace kdep
