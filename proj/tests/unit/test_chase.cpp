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


#include <algorithm>

#include "doctest.h"
#include "kdep/chase.hpp"
#include "kdep/error.hpp"
#include "kdep/infer.hpp"
#include "kdep/io.hpp"
#include "test_util.hpp"

using namespace kdep;

namespace {

Schema rabc() {
  Schema s;
  s.add_relation("R", {"A", "B", "C"});
  return s;
}

const Ind kShift = parse_ind("R[B,C] <= R[A,B]");
const Ind kBack = parse_ind("R[A,B] <= R[B,C]");

KDatabase load(const char* name, bool allow_star = false) {
  return database_from_json(parse_json(read_file(test::data(name))), allow_star);
}

std::vector<Tuple> tuples(const KDatabase& d, const RelationName& r) {
  std::vector<Tuple> out;
  for (const auto& [t, w] : d.relation(r).weights()) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("canonical starts") {
  Schema s;
  s.add_relation("R", {"A", "B", "E"});
  s.add_relation("S", {"C", "D"});
  auto x = parse_ind("R[A,B] <= S[C,D]");
  auto c = canonical_start_classical(x, s);
  CHECK(c.monoid() == Monoid::boolean());
  CHECK(tuples(c, "R") == std::vector<Tuple>{{"1", "2", "*"}});
  CHECK(c.relation("S").empty());
  auto p = canonical_start_plus(x, s);
  CHECK(p.monoid() == Monoid::naturals());
  CHECK(p.weight("R", {"1", "2", "*"}) == Element::from_int(1));
  CHECK(tuples(canonical_start_classical(parse_ind("R[] <= S[]"), s), "R") ==
        std::vector<Tuple>{{"*", "*", "*"}});
  CHECK(tuples(canonical_start_plus(kShift, rabc()), "R") == std::vector<Tuple>{{"*", "1", "2"}});
  // Attributes are positional, so a permuted lhs maps in sequence order.
  CHECK(tuples(canonical_start_classical(parse_ind("R[E,A] <= S[C,D]"), s), "R") ==
        std::vector<Tuple>{{"2", "*", "1"}});
}

TEST_CASE("classical chase") {
  auto s = rabc();
  auto d0 = canonical_start_classical(kShift, s);
  auto t = classical_chase(d0, {kShift});
  CHECK(t.outcome == ChaseOutcome::Terminated);
  std::vector<Tuple> want{{"*", "*", "*"}, {"*", "1", "2"}, {"1", "2", "*"}, {"2", "*", "*"}};
  CHECK(tuples(t.result, "R") == want);
  CHECK(t.step_count == 3);
  CHECK(satisfies(t.result, kShift));
  CHECK(classical_chase(d0, {}).result == d0);
  CHECK(classical_chase(d0, {parse_ind("R[A,B] <= R[A,B]"), parse_ind("R[] <= R[]")}).result == d0);
  CHECK(replay(t) == t.result);
  for (const auto& step : t.steps) {
    CHECK(step.kind == StepKind::ClassicalRuleStar);
    CHECK_FALSE(step.delta.has_value());
  }
}

TEST_CASE("classical chase reaches a fixpoint") {
  std::mt19937 rng(31);
  Schema s;
  s.add_relation("R", {"A", "B", "C"});
  s.add_relation("S", {"D", "E"});
  for (int i = 0; i < 100; ++i) {
    std::vector<Ind> sigma;
    for (int k = 0; k < 3; ++k) sigma.push_back(test::random_ind(s, 2, rng));
    auto tau = test::random_ind(s, 2, rng);
    auto t = classical_chase(canonical_start_classical(tau, s), sigma);
    CHECK(satisfies_all(t.result, sigma));
    CHECK(classical_chase(t.result, sigma).result == t.result);
    CHECK(classical_chase(t.result, sigma).step_count == 0);
  }
}

TEST_CASE("the additive chase of a one-way shift diverges") {
  auto t = plus_chase(canonical_start_plus(kShift, rabc()), {kShift});
  CHECK(t.outcome == ChaseOutcome::StepLimitExceeded);
  CHECK(t.step_count == 10000);
  CHECK(t.steps.size() == 10000);
  auto abc = plus_chase(load("chase_start.json"), {kShift}, ChaseConfig{500, false});
  CHECK(abc.outcome == ChaseOutcome::StepLimitExceeded);
  CHECK(abc.step_count == 500);
  CHECK(abc.steps.empty());
}

TEST_CASE("the additive chase of the symmetric pair terminates") {
  auto t = plus_chase(canonical_start_plus(kShift, rabc()), {kShift, kBack});
  CHECK(t.outcome == ChaseOutcome::Terminated);
  CHECK(satisfies(t.result, kShift));
  CHECK(satisfies(t.result, kBack));
  CHECK(t.result == load("golden_symmetric_canonical.json", true));
  CHECK(replay(t) == t.result);
  CHECK(trace_to_json(t).dump() == trace_to_json(plus_chase(t.start, {kShift, kBack})).dump());

  auto abc = plus_chase(load("chase_start.json"), {kShift, kBack});
  CHECK(abc.outcome == ChaseOutcome::Terminated);
  CHECK(abc.result == load("golden_symmetric_abc.json", true));
  CHECK(replay(abc) == abc.result);
  for (const auto& [tuple, w] : abc.result.relation("R").weights()) CHECK(w == Element::from_int(1));
}

TEST_CASE("a satisfied start takes no steps") {
  auto d = load("running_example.json");
  auto sigma = parse_ind_list(read_file(test::data("running_constraints.txt")));
  auto t = plus_chase(d, sigma);
  CHECK(t.outcome == ChaseOutcome::Terminated);
  CHECK(t.step_count == 0);
  CHECK(t.result == d);
}

TEST_CASE("applicable") {
  auto s = rabc();
  auto d = canonical_start_plus(kShift, s);
  CHECK(applicable(d, kShift, {"1", "2"}));
  CHECK_FALSE(applicable(d, kShift, {"2", "1"}));
  CHECK_FALSE(applicable(d, parse_ind("R[] <= R[]"), {}));
  auto t = plus_chase(d, {kShift, kBack});
  for (const auto& a : {"*", "1", "2"}) {
    for (const auto& b : {"*", "1", "2"}) CHECK_FALSE(applicable(t.result, kShift, {a, b}));
  }
  CHECK_THROWS_WITH_AS(applicable(canonical_start_classical(kShift, s), kShift, {"1", "2"}),
                       doctest::Contains("UnsupportedMonoid"), Error);
}

TEST_CASE("the additive chase refuses monoids without monus") {
  auto s = rabc();
  for (const auto& m : {Monoid::boolean(), Monoid::max_naturals(), Monoid::ab_naturals()}) {
    KDatabase d(s, m);
    CHECK_THROWS_WITH_AS(plus_chase(d, {kShift}), doctest::Contains("UnsupportedMonoid"), Error);
  }
}

TEST_CASE("additive chase steps are monotone and repair exactly") {
  std::mt19937 rng(37);
  Schema s;
  s.add_relation("R", {"A", "B", "C"});
  s.add_relation("S", {"D", "E"});
  const auto n = Monoid::naturals();
  int traces = 0;
  for (int i = 0; i < 60; ++i) {
    std::vector<Ind> sigma;
    for (int k = 0; k < 2; ++k) sigma.push_back(test::random_ind(s, 2, rng));
    auto closed = saturate(sigma, RuleSystem::StandardWS, s);
    auto start = test::random_database(s, n, {"x", "y"}, 2, rng);
    auto t = plus_chase(start, closed);
    REQUIRE(t.outcome == ChaseOutcome::Terminated);
    CHECK(satisfies_all(t.result, closed));
    ++traces;
    KDatabase cur = t.start;
    for (const auto& step : t.steps) {
      const auto& x = step.sigma;
      const auto lpos = attribute_positions(cur.schema().attributes(x.lhs_rel), x.lhs_attrs);
      auto lhs = marginal_map(cur.relation(x.lhs_rel), lpos, n);
      auto it = lhs.find(step.witness);
      REQUIRE(it != lhs.end());
      KDatabase next = cur;
      next.add(x.rhs_rel, step.incremented_tuple, *step.delta);
      CHECK_FALSE(n.is_zero(*step.delta));
      CHECK(step.incremented_tuple == star_padded(x, s, step.witness));
      const auto rpos = attribute_positions(next.schema().attributes(x.rhs_rel), x.rhs_attrs);
      auto rhs = marginal_map(next.relation(x.rhs_rel), rpos, n);
      if (x.lhs_rel == x.rhs_rel) {
        // A self-referencing step also moves the lhs marginal; only monotonicity is checked.
        CHECK(n.leq(it->second, rhs[step.witness]));
      } else {
        CHECK(rhs[step.witness] == it->second);
      }
      for (const auto& [name, rel] : cur.relations()) {
        for (const auto& [tuple, w] : rel.weights()) CHECK(n.leq(w, next.weight(name, tuple)));
      }
      cur = next;
    }
    CHECK(cur == t.result);
  }
  CHECK(traces == 60);
}
