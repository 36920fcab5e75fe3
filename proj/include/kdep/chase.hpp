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

// Classical IND chase and the additive chase.
//
// The additive chase repairs one violated marginal per step by adding the
// missing amount (lhs marginal monus rhs marginal) to the star-padded rhs
// tuple. Pairs (sigma, a) are visited round-robin in the order
// (position of sigma in the input, a lexicographic), resuming after the last
// repaired pair, which makes every run and every trace reproducible.

#ifndef KDEP_CHASE_HPP
#define KDEP_CHASE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kdep/ind.hpp"

namespace kdep {

enum class StepKind { ClassicalRuleStar, PlusRule };

struct ChaseStep {
  StepKind kind = StepKind::PlusRule;
  Ind sigma;
  std::vector<Constant> witness;
  /// Tuple of sigma.rhs_rel that was added or incremented.
  Tuple incremented_tuple;
  /// PlusRule only.
  std::optional<Element> delta;
};

enum class ChaseOutcome { Terminated, StepLimitExceeded };

struct ChaseConfig {
  std::uint64_t step_limit = 10000;
  /// Steps are always counted; recording them can be switched off for bulk runs.
  bool record_steps = true;
};

struct ChaseTrace {
  KDatabase start;
  std::vector<ChaseStep> steps;
  std::uint64_t step_count = 0;
  ChaseOutcome outcome = ChaseOutcome::Terminated;
  /// Final database, or the partial one when the limit was hit.
  KDatabase result;
};

/// One tuple of tau's lhs relation: i-th lhs attribute -> "i" (1-based),
/// all other attributes -> star. Boolean weight 1.
Database canonical_start_classical(const Ind& tau, const Schema& schema);
/// Same tuple over the naturals with weight 1.
KDatabase canonical_start_plus(const Ind& tau, const Schema& schema);

/// Tuple of sigma.rhs_rel carrying `witness` on the rhs attributes and star elsewhere.
Tuple star_padded(const Ind& sigma, const Schema& schema, const std::vector<Constant>& witness);

/// Closure of support(d0) under Rule (*); always terminates.
ChaseTrace classical_chase(const KDatabase& d0, const std::vector<Ind>& sigma,
                           bool record_steps = true);

/// Raises UnsupportedMonoid unless the monoid admits monus.
ChaseTrace plus_chase(const KDatabase& d0, const std::vector<Ind>& sigma,
                      const ChaseConfig& cfg = {});

/// lhs marginal at a is not below the rhs marginal at a.
bool applicable(const KDatabase& d, const Ind& sigma, const std::vector<Constant>& a);

/// Applies the recorded steps to trace.start.
KDatabase replay(const ChaseTrace& trace);

std::string_view outcome_name(ChaseOutcome outcome);
std::string_view step_kind_name(StepKind kind);

}  // namespace kdep

#endif  // KDEP_CHASE_HPP
