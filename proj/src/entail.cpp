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

#include "kdep/entail.hpp"

#include <algorithm>

#include "kdep/error.hpp"

namespace kdep {

std::string_view method_name(Method method) {
  return method == Method::PlusChase ? "PlusChase" : "ClassicalChase";
}

std::string_view construction_name(Construction construction) {
  switch (construction) {
    case Construction::PlusChaseEmbed: return "PlusChaseEmbed";
    case Construction::SAEmbedding: return "SAEmbedding";
    case Construction::CAStratified: return "CAStratified";
    case Construction::WACase1: return "WACase1";
    case Construction::WACase2: return "WACase2";
  }
  return "Unknown";
}

namespace {

void require_nonzero(const Monoid& m, const Element& e, const char* what) {
  if (!m.contains(e)) throw Error(ErrorCode::InvalidElement, std::string(what) + " not in carrier");
  if (m.is_zero(e)) throw Error(ErrorCode::InvalidElement, std::string(what) + " must be nonzero");
}

void validate_inputs(const std::vector<Ind>& sigma, const Ind& tau, const Schema& schema) {
  for (const auto& s : sigma) validate(s, &schema);
  validate(tau, &schema);
}

// R[X] <= R[X] for every nonempty attribute subset X, in schema order.
// Adds every star-padded projection of every tuple. Returns whether anything was added.
bool add_padded_projections(Database& d) {
  const Element one = Element::from_int(1);
  std::vector<std::pair<RelationName, Tuple>> fresh;
  for (const auto& [name, rel] : d.relations()) {
    for (const auto& [t, w] : rel.weights()) {
      std::vector<std::size_t> bound;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] != kStar) bound.push_back(i);
      }
      for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << bound.size()); ++mask) {
        Tuple p(t.size(), kStar);
        for (std::size_t i = 0; i < bound.size(); ++i) {
          if (mask >> i & 1U) p[bound[i]] = t[bound[i]];
        }
        if (!rel.weights().count(p)) fresh.emplace_back(name, std::move(p));
      }
    }
  }
  for (const auto& [name, t] : fresh) d.set(name, t, one);
  return !fresh.empty();
}

// Classical chase of the canonical start by the standard closure together
// with every reflexivity instance, so each tuple comes with all of its
// star-padded projections.
Database padded_standard_chase(const std::vector<Ind>& sigma, const Ind& tau,
                               const Schema& schema) {
  const auto rules = saturate(sigma, RuleSystem::Standard, schema);
  Database d = classical_chase(canonical_start_classical(tau, schema), rules, false).result;
  while (add_padded_projections(d)) d = classical_chase(d, rules, false).result;
  return d;
}

KDatabase embed_database(const KDatabase& naturals_db, const Monoid& m, const Element& b) {
  return map_weights(naturals_db, m, [&](const Tuple&, const Element& w) {
    return embed_naturals(m, b, w.natural());
  });
}

Element default_generator(const Monoid& m) {
  switch (m.kind()) {
    case MonoidKind::Naturals: return Element::from_int(1);
    case MonoidKind::NonnegRationals: return Element(Rational(1));
    default: break;
  }
  for (const auto& e : m.elements()) {
    if (!m.is_zero(e)) return e;
  }
  throw Error(ErrorCode::UnsupportedMonoid, "trivial monoid has no nonzero element");
}

bool never_repeats(const Monoid& m, const Element& b) {
  try {
    find_eventual_period(m, b);
    return false;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedMonoid) throw;
    return true;
  }
}

}  // namespace

std::vector<Ind> with_balance_axioms(const std::vector<Ind>& sigma, const Schema& schema) {
  std::vector<Ind> out = sigma;
  for (auto& b : balance_axioms(schema)) {
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(std::move(b));
  }
  return out;
}

bool verify_countermodel(const KDatabase& d, const std::vector<Ind>& sigma, const Ind& tau,
                         bool balanced) {
  return satisfies_all(d, sigma) && !satisfies(d, tau) && (!balanced || is_balanced(d));
}

Countermodel build_countermodel_wc(const std::vector<Ind>& sigma, const Ind& tau,
                                   const Schema& schema, const Monoid& m, const Element& b,
                                   const ChaseConfig& cfg) {
  validate_inputs(sigma, tau, schema);
  require_nonzero(m, b, "generator");
  if (!classify(m).weakly_cancellative) {
    throw Error(ErrorCode::UnsupportedMonoid, m.name() + " is not weakly cancellative");
  }
  ChaseConfig quiet = cfg;
  quiet.record_steps = false;
  auto trace = plus_chase(canonical_start_plus(tau, schema),
                          saturate(sigma, RuleSystem::StandardWS, schema), quiet);
  if (trace.outcome == ChaseOutcome::StepLimitExceeded) {
    throw Error(ErrorCode::ChaseBudgetExceeded, "additive chase exceeded " +
                                                    std::to_string(cfg.step_limit) + " steps");
  }
  if (satisfies(trace.result, tau)) {
    throw Error(ErrorCode::AlreadyEntailed, tau.to_string() + " follows; no countermodel exists");
  }
  Countermodel cm{embed_database(trace.result, m, b), Construction::PlusChaseEmbed, {b}, false};
  cm.verified = verify_countermodel(cm.database, sigma, tau, false);
  if (!cm.verified) throw Error(ErrorCode::VerificationFailed, "embedded chase result");
  return cm;
}

Countermodel build_countermodel_ca(const std::vector<Ind>& sigma, const Ind& tau,
                                   const Schema& schema, const Monoid& m,
                                   const std::vector<Element>& chain) {
  validate_inputs(sigma, tau, schema);
  const std::size_t n = tau.arity();
  if (chain.size() < n + 1) {
    throw Error(ErrorCode::InvalidChain, "need " + std::to_string(n + 1) + " chain elements, got " +
                                             std::to_string(chain.size()));
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!m.contains(chain[i]) || m.is_zero(chain[i])) {
      throw Error(ErrorCode::InvalidChain, "chain element " + std::to_string(i) + " is zero or invalid");
    }
    if (i + 1 < chain.size() && m.add(chain[i], chain[i + 1]) != chain[i + 1]) {
      throw Error(ErrorCode::InvalidChain, "a" + std::to_string(i) + " + a" + std::to_string(i + 1) +
                                               " != a" + std::to_string(i + 1));
    }
  }
  auto d = classical_chase(canonical_start_classical(tau, schema), sigma, false).result;
  if (satisfies(d, tau)) {
    throw Error(ErrorCode::AlreadyEntailed, tau.to_string() + " follows; no countermodel exists");
  }
  bool constant = std::all_of(chain.begin(), chain.end(),
                              [&](const Element& e) { return e == chain.front(); });
  Countermodel cm{map_weights(d, m, [&](const Tuple& t, const Element&) { return chain[n - degree(t)]; }),
                  constant ? Construction::SAEmbedding : Construction::CAStratified,
                  std::vector<Element>(chain.begin(), chain.begin() + static_cast<long>(n + 1)),
                  false};
  cm.verified = verify_countermodel(cm.database, sigma, tau, false);
  if (!cm.verified) throw Error(ErrorCode::VerificationFailed, "stratified chase result");
  return cm;
}

Countermodel build_countermodel_wa_case1(const std::vector<Ind>& sigma, const Ind& tau,
                                         const Schema& schema, const Monoid& m, const Element& a,
                                         const Element& b, const ChaseConfig& cfg) {
  validate_inputs(sigma, tau, schema);
  require_nonzero(m, a, "a");
  require_nonzero(m, b, "b");
  if (m.add(a, b) != b) throw Error(ErrorCode::InvalidPair, "a + b != b");
  if (m.add(b, b) == b) throw Error(ErrorCode::InvalidPair, "b absorbs itself");
  if (m.has_finite_carrier()) {
    for (const auto& c : m.elements()) {
      if (m.add(b, c) == c) throw Error(ErrorCode::InvalidPair, "b absorbs " + m.format(c));
    }
  }
  if (!never_repeats(m, b)) {
    throw Error(ErrorCode::InvalidPair, "multiples of b repeat; the periodic construction applies");
  }
  const std::size_t n = tau.arity();
  Database d = padded_standard_chase(sigma, tau, schema);
  if (satisfies(d, tau)) {
    throw Error(ErrorCode::AlreadyEntailed, tau.to_string() + " follows; no countermodel exists");
  }
  const Monoid boolean = Monoid::boolean();
  const Element one = Element::from_int(1);
  KDatabase top(schema, m);
  Database low(schema, boolean);
  for (const auto& [name, rel] : d.relations()) {
    for (const auto& [t, w] : rel.weights()) {
      if (degree(t) == n) {
        top.set(name, t, a);
      } else {
        low.set(name, t, one);
      }
    }
  }
  const auto ws_closure = saturate(sigma, RuleSystem::StandardWS, schema);
  Database low_closed = classical_chase(low, ws_closure, false).result;
  KDatabase counts = map_weights(low_closed, Monoid::naturals(),
                                 [&](const Tuple&, const Element&) { return one; });
  ChaseConfig quiet = cfg;
  quiet.record_steps = false;
  auto trace = plus_chase(counts, ws_closure, quiet);
  if (trace.outcome == ChaseOutcome::StepLimitExceeded) {
    throw Error(ErrorCode::ChaseBudgetExceeded, "additive chase of the lower part did not stop");
  }
  Countermodel cm{db_add(top, embed_database(trace.result, m, b)), Construction::WACase1, {a, b},
                  false};
  cm.verified = verify_countermodel(cm.database, sigma, tau, false);
  if (!cm.verified) throw Error(ErrorCode::VerificationFailed, "a/b split of the chase result");
  return cm;
}

Countermodel build_countermodel_wa_case2(const std::vector<Ind>& sigma, const Ind& tau,
                                         const Schema& schema, const Monoid& m, const Element& b) {
  validate_inputs(sigma, tau, schema);
  require_nonzero(m, b, "b");
  EventualPeriod period{};
  try {
    period = find_eventual_period(m, b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedMonoid) throw;
    throw Error(ErrorCode::NotEventuallyPeriodic, "multiples of " + m.format(b) + " never repeat");
  }
  const Element d = embed_naturals(m, b, Natural(period.index));
  for (std::uint64_t k = 0; k < period.index + period.period; ++k) {
    Element kb = embed_naturals(m, b, Natural(k));
    if (!m.leq(kb, d)) {
      throw Error(ErrorCode::DominanceFailure,
                  m.format(kb) + " is not below d = " + m.format(d));
    }
  }
  const std::size_t n = tau.arity();
  Database chased = padded_standard_chase(sigma, tau, schema);
  if (satisfies(chased, tau)) {
    throw Error(ErrorCode::AlreadyEntailed, tau.to_string() + " follows; no countermodel exists");
  }
  Countermodel cm{map_weights(chased, m,
                              [&](const Tuple& t, const Element&) { return degree(t) == n ? b : d; }),
                  Construction::WACase2, {b, d}, false};
  cm.verified = verify_countermodel(cm.database, sigma, tau, false);
  return cm;
}

EntailmentVerdict decide_entailment(const std::vector<Ind>& sigma, const Ind& tau, const Monoid& m,
                                    const Schema& schema, const EntailOptions& options) {
  validate_inputs(sigma, tau, schema);
  PropertyReport report;
  if (options.report) {
    report = *options.report;
  } else {
    try {
      report = classify(m, options.k_bound);
    } catch (const Error& e) {
      throw Error(ErrorCode::UnclassifiedMonoid, e.what());
    }
  }
  if (m.has_finite_carrier() && m.elements().size() < 2) {
    throw Error(ErrorCode::UnsupportedMonoid, "trivial monoid");
  }
  const std::vector<Ind> sigma_star =
      options.balanced ? with_balance_axioms(sigma, schema) : sigma;

  EntailmentVerdict v;
  v.balanced = options.balanced;
  RuleSet proof_rules;
  proof_rules.balance = options.balanced;
  if (report.weakly_cancellative) {
    v.method = Method::PlusChase;
    proof_rules.weak_symmetry = true;
    ChaseConfig quiet = options.chase;
    quiet.record_steps = false;
    auto trace = plus_chase(canonical_start_plus(tau, schema),
                            saturate(sigma_star, RuleSystem::StandardWS, schema), quiet);
    v.chase_steps = trace.step_count;
    if (trace.outcome == ChaseOutcome::StepLimitExceeded) {
      throw Error(ErrorCode::ChaseBudgetExceeded,
                  "additive chase exceeded " + std::to_string(options.chase.step_limit) + " steps");
    }
    v.entailed = satisfies(trace.result, tau);
    if (!v.entailed) {
      const Element b = default_generator(m);
      Countermodel cm{embed_database(trace.result, m, b), Construction::PlusChaseEmbed, {b}, false};
      cm.verified = verify_countermodel(cm.database, sigma_star, tau, options.balanced);
      v.countermodel = std::move(cm);
    }
  } else {
    v.method = Method::ClassicalChase;
    auto trace = classical_chase(canonical_start_classical(tau, schema),
                                 saturate(sigma_star, RuleSystem::Standard, schema), false);
    v.chase_steps = trace.step_count;
    v.entailed = satisfies(trace.result, tau);
    if (!v.entailed) {
      if (auto idem = find_idempotent(m)) {
        v.countermodel = build_countermodel_ca(sigma_star, tau, schema, m,
                                               std::vector<Element>(tau.arity() + 1, *idem));
      } else if (report.countably_absorptive) {
        throw Error(ErrorCode::UnsupportedMonoid,
                    "no absorptive chain is known for " + m.name());
      } else {
        auto pair = find_wa_pair(m);
        if (!pair) throw Error(ErrorCode::UnsupportedMonoid, "no absorptive pair in " + m.name());
        if (never_repeats(m, pair->second)) {
          v.countermodel = build_countermodel_wa_case1(sigma_star, tau, schema, m, pair->first,
                                                       pair->second, options.chase);
        } else {
          v.countermodel =
              build_countermodel_wa_case2(sigma_star, tau, schema, m, pair->second);
        }
      }
      v.countermodel->verified =
          verify_countermodel(v.countermodel->database, sigma_star, tau, options.balanced);
    }
  }

  auto derivation = derives(sigma, tau, proof_rules, schema);
  if (derivation.derivable != v.entailed) {
    throw Error(ErrorCode::VerificationFailed,
                "chase and derivation disagree on " + tau.to_string());
  }
  v.proof = std::move(derivation.proof);
  if (v.countermodel && !v.countermodel->verified) {
    throw Error(ErrorCode::VerificationFailed, "countermodel for " + tau.to_string());
  }
  return v;
}

}  // namespace kdep
