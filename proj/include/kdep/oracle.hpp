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

// Exhaustive falsifiers for entailment.
//
// Databases are enumerated smallest first: by support size, then by the
// lexicographic choice of tuples (relations in schema order, tuples over the
// active domain in lexicographic order), then by weights drawn from the
// nonzero part of the pool in pool order. The first database satisfying Sigma
// and violating tau is returned. "None" only means none in the searched space.
//
// Satisfaction is evaluated by a separate, deliberately naive routine that
// shares no code with the ind module.

#ifndef KDEP_ORACLE_HPP
#define KDEP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kdep/ind.hpp"

namespace kdep {

struct SearchSpace {
  std::vector<Constant> adom;
  /// Zero entries are ignored; absence of a tuple already means weight zero.
  std::vector<Element> weight_pool;
  std::size_t max_tuples = 4;
  /// SearchSpaceTooLarge is raised up front when more databases would be visited.
  std::uint64_t max_databases = 20'000'000;
};

/// Number of databases the enumeration visits.
std::uint64_t search_space_size(const Schema& schema, const Monoid& m, const SearchSpace& space);

/// Visits databases in enumeration order until `visit` returns false.
void enumerate_databases(const Schema& schema, const Monoid& m, const SearchSpace& space,
                         const std::function<bool(const KDatabase&)>& visit);

/// Naive satisfaction: every point of either marginal, summed by scanning.
bool oracle_satisfies(const KDatabase& d, const Ind& sigma);

std::optional<KDatabase> brute_force_entails(const std::vector<Ind>& sigma, const Ind& tau,
                                             const Schema& schema, const Monoid& m,
                                             const SearchSpace& space);

/// Same search restricted to balanced databases.
std::optional<KDatabase> brute_force_balanced_entails(const std::vector<Ind>& sigma, const Ind& tau,
                                                      const Schema& schema, const Monoid& m,
                                                      const SearchSpace& space);

/// Fixed-width bitset over an IND universe.
class IndSet {
 public:
  IndSet() = default;
  explicit IndSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1U; }
  bool contains_all(const IndSet& other) const;
  void intersect(const IndSet& other);
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const IndSet&, const IndSet&) = default;
  friend bool operator<(const IndSet& x, const IndSet& y) { return x.words_ < y.words_; }

 private:
  std::vector<std::uint64_t> words_;
};

/// Satisfaction profile of every database in a search space against a fixed
/// IND universe, deduplicated by profile. Answers many (Sigma, tau) queries
/// against the same space without re-enumerating.
class OracleTable {
 public:
  OracleTable(const Schema& schema, const Monoid& m, const SearchSpace& space,
              std::vector<Ind> universe, bool balanced_only = false);

  const std::vector<Ind>& universe() const { return universe_; }
  std::size_t databases_visited() const { return visited_; }
  std::size_t distinct_profiles() const { return profiles_.size(); }

  /// Universe members true in every searched database satisfying `sigma`.
  IndSet consequences(const IndSet& sigma) const;
  /// First database (in enumeration order) satisfying sigma and violating universe[tau].
  std::optional<KDatabase> counterexample(const IndSet& sigma, std::size_t tau) const;

 private:
  std::vector<Ind> universe_;
  std::vector<IndSet> profiles_;
  std::vector<KDatabase> witnesses_;  // first database with each profile
  std::size_t visited_ = 0;
};

}  // namespace kdep

#endif  // KDEP_ORACLE_HPP
