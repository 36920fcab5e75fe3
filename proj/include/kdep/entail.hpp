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

// Entailment over annotated databases.
//
// Weakly cancellative monoids: tau follows iff the additive chase of the
// canonical start by the weak-symmetry closure satisfies tau; a failing
// chase result, pushed through n -> n*b, is the countermodel.
// Weakly absorptive monoids: tau follows iff the classical chase of the
// canonical start satisfies tau; countermodels are reweighted chase results
// (constant idempotent chain, stratified chain, or the a/b split).

#ifndef KDEP_ENTAIL_HPP
#define KDEP_ENTAIL_HPP

#include <optional>
#include <string>
#include <vector>

#include "kdep/chase.hpp"
#include "kdep/infer.hpp"

namespace kdep {

enum class Method { ClassicalChase, PlusChase };

enum class Construction { PlusChaseEmbed, SAEmbedding, CAStratified, WACase1, WACase2 };

std::string_view method_name(Method method);
std::string_view construction_name(Construction construction);

struct Countermodel {
  KDatabase database;
  Construction construction;
  /// PlusChaseEmbed/SAEmbedding: {b}; CAStratified: the chain;
  /// WACase1: {a, b}; WACase2: {b, d}.
  std::vector<Element> parameters;
  /// Satisfies Sigma, violates tau, and is balanced when that was requested.
  bool verified = false;
};

struct EntailmentVerdict {
  bool entailed = false;
  Method method = Method::PlusChase;
  /// Sigma was augmented with every balance axiom over the schema.
  bool balanced = false;
  std::optional<DerivationProof> proof;
  std::optional<Countermodel> countermodel;
  /// Steps taken by the deciding chase.
  std::uint64_t chase_steps = 0;
};

struct EntailOptions {
  bool balanced = false;
  ChaseConfig chase;
  /// Replaces the classification of the monoid.
  std::optional<PropertyReport> report;
  std::uint64_t k_bound = kDefaultKBound;
};

/// Raises UnclassifiedMonoid when the monoid cannot be classified and
/// ChaseBudgetExceeded if the additive chase overruns (a defect signal).
EntailmentVerdict decide_entailment(const std::vector<Ind>& sigma, const Ind& tau, const Monoid& m,
                                    const Schema& schema, const EntailOptions& options = {});

/// Sigma plus S[] <= R[] for all distinct schema relations.
std::vector<Ind> with_balance_axioms(const std::vector<Ind>& sigma, const Schema& schema);

/// Additive chase result over the naturals, embedded through n -> n*b.
Countermodel build_countermodel_wc(const std::vector<Ind>& sigma, const Ind& tau,
                                   const Schema& schema, const Monoid& m, const Element& b,
                                   const ChaseConfig& cfg = {});

/// Classical chase of the canonical start, tuple t weighted chain[n - deg(t)].
/// The chain needs at least ar(tau)+1 nonzero entries with
/// chain[i] + chain[i+1] = chain[i+1]; raises InvalidChain otherwise.
Countermodel build_countermodel_ca(const std::vector<Ind>& sigma, const Ind& tau,
                                   const Schema& schema, const Monoid& m,
                                   const std::vector<Element>& chain);

/// Full-degree tuples weighted a, the rest chased additively in multiples of b.
/// Raises InvalidPair unless a + b = b and (on finite carriers) b absorbs nothing.
Countermodel build_countermodel_wa_case1(const std::vector<Ind>& sigma, const Ind& tau,
                                         const Schema& schema, const Monoid& m, const Element& a,
                                         const Element& b, const ChaseConfig& cfg = {});

/// Full-degree tuples weighted b, the rest weighted d = index*b.
/// Raises NotEventuallyPeriodic or DominanceFailure; verification is reported,
/// not enforced.
Countermodel build_countermodel_wa_case2(const std::vector<Ind>& sigma, const Ind& tau,
                                         const Schema& schema, const Monoid& m, const Element& b);

/// Satisfies sigma, violates tau, and is balanced if asked.
bool verify_countermodel(const KDatabase& d, const std::vector<Ind>& sigma, const Ind& tau,
                         bool balanced);

}  // namespace kdep

#endif  // KDEP_ENTAIL_HPP
