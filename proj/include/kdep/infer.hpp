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

// Derivability of INDs by saturation.
//
// The universe is every parallel selection/permutation of a generator
// (a hypothesis or a balance instance) plus the arity-0 reflexivity seeds
// R[] <= R[]. Projection distributes over transitivity and both symmetry
// rules, so closing that finite set under the binary rules yields every
// derivable non-reflexive IND.

#ifndef KDEP_INFER_HPP
#define KDEP_INFER_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kdep/ind.hpp"

namespace kdep {

enum class RuleSystem { Standard, StandardWS, StandardBalance };

/// Rules on top of reflexivity, transitivity and projection/permutation.
struct RuleSet {
  bool weak_symmetry = false;
  bool symmetry = false;
  bool balance = false;

  static RuleSet of(RuleSystem system);
};

enum class Rule {
  Hypothesis,
  Reflexivity,
  Balance,
  Transitivity,
  ProjectPermute,
  WeakSymmetry,
  Symmetry,
};

std::string_view rule_name(Rule rule);

struct DerivationProof {
  Rule rule = Rule::Hypothesis;
  Ind conclusion;
  /// ProjectPermute only; 0-based positions.
  std::vector<std::size_t> indices;
  std::vector<DerivationProof> premises;

  /// Number of nodes in the tree.
  std::size_t size() const;
};

/// Raises IndexOutOfRange or DuplicateIndex.
Ind project_permute(const Ind& sigma, const std::vector<std::size_t>& indices);
/// Raises MiddleMismatch unless s1's rhs equals s2's lhs exactly.
Ind transitivity(const Ind& s1, const Ind& s2);
/// Raises PremiseMismatch unless empty_ind is S[] <= R[] for sigma = R[..] <= S[..].
Ind weak_symmetry(const Ind& sigma, const Ind& empty_ind);

/// S[] <= R[] for every ordered pair of distinct schema relations.
std::vector<Ind> balance_axioms(const Schema& schema);

/// Fixpoint of the rule set over the finite universe of one Sigma.
class Closure {
 public:
  Closure(const std::vector<Ind>& sigma, RuleSet rules, const Schema& schema);
  ~Closure();
  Closure(Closure&&) noexcept;
  Closure& operator=(Closure&&) noexcept;

  /// True for members and for reflexivity instances.
  bool derives(const Ind& tau) const;
  /// Checked proof when derives(tau).
  std::optional<DerivationProof> proof(const Ind& tau) const;
  /// Members in canonical order: non-reflexive conclusions plus the seeds.
  std::vector<Ind> members() const;
  std::size_t size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<Ind> saturate(const std::vector<Ind>& sigma, RuleSystem system, const Schema& schema);
std::vector<Ind> saturate(const std::vector<Ind>& sigma, RuleSet rules, const Schema& schema);

struct Derivation {
  bool derivable = false;
  std::optional<DerivationProof> proof;
};

Derivation derives(const std::vector<Ind>& sigma, const Ind& tau, RuleSystem system,
                   const Schema& schema);
Derivation derives(const std::vector<Ind>& sigma, const Ind& tau, RuleSet rules,
                   const Schema& schema);

/// Re-validates every node; raises VerificationFailed naming the first bad one.
void check_proof(const DerivationProof& proof, const std::vector<Ind>& sigma, RuleSet rules,
                 const Schema& schema);

/// Indented tree, conclusion first, one node per line.
std::string format_proof(const DerivationProof& proof);

}  // namespace kdep

#endif  // KDEP_INFER_HPP
