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


#include <map>

#include "doctest.h"
#include "kdep/error.hpp"
#include "kdep/io.hpp"
#include "kdep/monoid.hpp"
#include "test_util.hpp"

using namespace kdep;

TEST_CASE("add on builtins") {
  auto n = Monoid::naturals();
  CHECK(n.add(n.parse("2"), n.parse("3")) == n.parse("5"));
  auto b = Monoid::boolean();
  CHECK(b.add(b.parse("1"), b.parse("1")) == b.parse("1"));
  auto g = Monoid::monogenic(2, 3);
  CHECK(g.add(g.parse("4"), g.parse("3")) == g.parse("4"));
  CHECK(g.add(g.parse("1"), g.parse("1")) == g.parse("2"));
  auto q = Monoid::nonneg_rationals();
  CHECK(q.format(q.add(q.parse("1/2"), q.parse("1/3"))) == "5/6");
  auto mx = Monoid::max_naturals();
  CHECK(mx.add(mx.parse("3"), mx.parse("7")) == mx.parse("7"));
  auto ab = Monoid::ab_naturals();
  CHECK(ab.add(ab.parse("a"), ab.parse("b")) == ab.parse("b"));
  CHECK(ab.add(ab.parse("a"), ab.parse("2a")) == ab.parse("3a"));
  CHECK(ab.add(ab.parse("b"), ab.parse("2b")) == ab.parse("3b"));
}

TEST_CASE("add rejects foreign elements") {
  auto g = Monoid::monogenic(2, 3);
  CHECK_THROWS_WITH_AS(g.add(Element::from_int(5), g.zero()), doctest::Contains("InvalidElement"),
                       Error);
  CHECK_THROWS_AS(g.parse("9"), Error);
  CHECK_THROWS_AS(Monoid::boolean().parse("2"), Error);
  CHECK_THROWS_AS(Monoid::nonneg_rationals().parse("1/0"), Error);
}

TEST_CASE("zero is an identity on every builtin") {
  for (const auto& m : test::builtins()) {
    for (const auto& e : test::sample_elements(m)) CHECK(m.add(e, m.zero()) == e);
  }
}

TEST_CASE("natural order") {
  auto n = Monoid::naturals();
  CHECK(n.leq(n.parse("2"), n.parse("5")));
  CHECK_FALSE(n.leq(n.parse("5"), n.parse("2")));
  auto mx = Monoid::max_naturals();
  CHECK_FALSE(mx.leq(mx.parse("3"), mx.parse("2")));
  CHECK(mx.leq(mx.parse("2"), mx.parse("3")));
  auto b = Monoid::boolean();
  CHECK(b.leq(b.parse("0"), b.parse("1")));
  CHECK_FALSE(b.leq(b.parse("1"), b.parse("0")));
  for (const auto& m : test::builtins()) {
    for (const auto& e : test::sample_elements(m)) CHECK(m.leq(e, e));
  }
  // In the monogenic monoid the cycle {2,3,4} is mutually comparable.
  auto g = Monoid::monogenic(2, 3);
  CHECK(g.leq(g.parse("4"), g.parse("2")));
  CHECK(g.leq(g.parse("2"), g.parse("4")));
  CHECK_FALSE(g.leq(g.parse("2"), g.parse("1")));
  auto ab = Monoid::ab_naturals();
  CHECK(ab.leq(ab.parse("5a"), ab.parse("b")));
  CHECK_FALSE(ab.leq(ab.parse("b"), ab.parse("5a")));
}

TEST_CASE("monogenic order agrees with a witness search") {
  for (std::uint64_t index = 1; index <= 4; ++index) {
    for (std::uint64_t period = 1; period <= 4; ++period) {
      auto g = Monoid::monogenic(index, period);
      auto elems = g.elements();
      for (const auto& x : elems) {
        for (const auto& y : elems) {
          bool witness = false;
          for (const auto& c : elems) witness = witness || g.add(x, c) == y;
          CHECK(g.leq(x, y) == witness);
        }
      }
    }
  }
}

TEST_CASE("monus") {
  auto n = Monoid::naturals();
  CHECK(n.monus(n.parse("5"), n.parse("2")) == n.parse("3"));
  CHECK_THROWS_WITH_AS(n.monus(n.parse("2"), n.parse("5")), doctest::Contains("NotSubtractable"),
                       Error);
  auto q = Monoid::nonneg_rationals();
  CHECK(q.monus(q.parse("3/2"), q.parse("1/2")) == q.parse("1"));
  CHECK_THROWS_WITH_AS(Monoid::boolean().monus(Element::from_int(1), Element::from_int(1)),
                       doctest::Contains("UnsupportedMonoid"), Error);
  CHECK(n.supports_monus());
  CHECK(q.supports_monus());
  CHECK_FALSE(Monoid::max_naturals().supports_monus());
  CHECK_FALSE(Monoid::ab_naturals().supports_monus());
}

TEST_CASE("monus round trip") {
  for (const auto& m : {Monoid::naturals(), Monoid::nonneg_rationals()}) {
    auto elems = test::sample_elements(m);
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        if (!m.leq(b, a)) continue;
        CHECK(m.add(b, m.monus(a, b)) == a);
      }
    }
  }
}

TEST_CASE("rationals are kept in lowest terms") {
  auto q = Monoid::nonneg_rationals();
  CHECK(q.format(q.parse("4/6")) == "2/3");
  CHECK(q.format(q.parse("6/3")) == "2");
  CHECK(q.parse("2/4") == q.parse("1/2"));
}

TEST_CASE("classify builtins") {
  auto b = classify(Monoid::boolean());
  CHECK(b.weakly_absorptive);
  CHECK(b.self_absorptive);
  CHECK_FALSE(b.weakly_cancellative);
  auto n = classify(Monoid::naturals());
  CHECK(n.weakly_cancellative);
  CHECK_FALSE(n.weakly_absorptive);
  auto g = classify(Monoid::monogenic(2, 3));
  CHECK(g.positive);
  CHECK(g.weakly_absorptive);
  CHECK(g.self_absorptive);
  CHECK(g.provenance == ReportProvenance::Computed);
  auto ab = classify(Monoid::ab_naturals());
  CHECK(ab.weakly_absorptive);
  CHECK_FALSE(ab.self_absorptive);
  CHECK_FALSE(ab.countably_absorptive);
  CHECK(ab.k_absorptive_max == std::optional<std::uint64_t>(1));
}

TEST_CASE("classify a loaded table") {
  auto m = monoid_from_json(parse_json(read_file(test::data("table_valid.json"))));
  auto r = classify(m);
  CHECK(r.weakly_absorptive);
  CHECK(r.self_absorptive);
  CHECK(r.countably_absorptive);
  CHECK(r.natural_order_total);
  CHECK(r.natural_order_antisymmetric);
  CHECK_FALSE(r.k_absorptive_max.has_value());
}

TEST_CASE("finite table validation names the failing instance") {
  CHECK_THROWS_WITH_AS(monoid_from_json(parse_json(read_file(test::data("table_nonassoc.json")))),
                       doctest::Contains("associativity fails"), Error);
  CHECK_THROWS_WITH_AS(
      monoid_from_json(parse_json(read_file(test::data("table_nonpositive.json")))),
      doctest::Contains("positivity fails"), Error);
  CHECK_THROWS_WITH_AS(monoid_from_json(parse_json(read_file(test::data("table_missing.json")))),
                       doctest::Contains("missing entry"), Error);
  TableEntries conflict{{{"x", "y"}, "x"}, {{"y", "x"}, "y"}, {{"x", "x"}, "x"}, {{"y", "y"}, "y"}};
  CHECK_THROWS_WITH_AS(Monoid::finite_table({"0", "x", "y"}, "0", conflict),
                       doctest::Contains("InvalidMonoidTable"), Error);
  TableEntries ok{{{"x", "x"}, "x"}};
  CHECK_THROWS_AS(Monoid::finite_table({"0", "x", "x"}, "0", ok), Error);
  CHECK_THROWS_AS(Monoid::finite_table({"0", "x"}, "z", ok), Error);
  CHECK_THROWS_AS(Monoid::finite_table({"0", "x"}, "0", ok, 1), Error);
}

TEST_CASE("find_wa_pair") {
  CHECK_FALSE(find_wa_pair(Monoid::boolean()).has_value());
  auto trivial = Monoid::finite_table({"0"}, "0", {});
  CHECK_FALSE(find_wa_pair(trivial).has_value());
  // (3, 2): 3 + 2 = 5 = 2 and 2 + c differs from c for every c in {0..4}.
  auto g = Monoid::monogenic(2, 3);
  auto pair = find_wa_pair(g);
  REQUIRE(pair.has_value());
  CHECK(g.format(pair->first) == "3");
  CHECK(g.format(pair->second) == "2");
  for (const auto& c : g.elements()) CHECK(g.add(pair->second, c) != c);
  auto ab = Monoid::ab_naturals();
  auto abp = find_wa_pair(ab);
  REQUIRE(abp.has_value());
  CHECK(ab.format(abp->first) == "a");
  CHECK(ab.format(abp->second) == "b");
  CHECK_THROWS_WITH_AS(find_wa_pair(Monoid::naturals()), doctest::Contains("UnsupportedMonoid"),
                       Error);
}

TEST_CASE("find_wa_pair brute force on monogenic monoids") {
  for (std::uint64_t index = 1; index <= 4; ++index) {
    for (std::uint64_t period = 1; period <= 4; ++period) {
      auto g = Monoid::monogenic(index, period);
      auto elems = g.elements();
      bool exists = false;
      for (const auto& a : elems) {
        for (const auto& b : elems) {
          if (g.is_zero(a) || g.is_zero(b) || g.add(a, b) != b) continue;
          bool absorbs = false;
          for (const auto& c : elems) absorbs = absorbs || g.add(b, c) == c;
          exists = exists || !absorbs;
        }
      }
      CHECK(find_wa_pair(g).has_value() == exists);
    }
  }
}

TEST_CASE("find_eventual_period") {
  auto g = Monoid::monogenic(2, 3);
  CHECK(find_eventual_period(g, g.parse("1")) == EventualPeriod{2, 3});
  auto b = Monoid::boolean();
  CHECK(find_eventual_period(b, b.parse("1")) == EventualPeriod{1, 1});
  auto mx = Monoid::max_naturals();
  CHECK(find_eventual_period(mx, mx.parse("4")) == EventualPeriod{1, 1});
  auto n = Monoid::naturals();
  CHECK_THROWS_WITH_AS(find_eventual_period(n, n.parse("1")), doctest::Contains("UnsupportedMonoid"),
                       Error);
  CHECK_THROWS_AS(find_eventual_period(g, g.zero()), Error);
}

TEST_CASE("embed_naturals") {
  auto n = Monoid::naturals();
  CHECK(embed_naturals(n, n.parse("1"), 7) == n.parse("7"));
  CHECK(embed_naturals(n, n.parse("3"), 4) == n.parse("12"));
  CHECK(embed_naturals(n, n.parse("3"), 0) == n.zero());
  auto b = Monoid::boolean();
  CHECK(embed_naturals(b, b.parse("1"), 5) == b.parse("1"));
  auto g = Monoid::monogenic(2, 3);
  CHECK(embed_naturals(g, g.parse("1"), 7) == g.parse("4"));
}

TEST_CASE("idempotents") {
  CHECK(find_idempotent(Monoid::boolean()) == Monoid::boolean().parse("1"));
  auto g = Monoid::monogenic(2, 3);
  auto e = find_idempotent(g);
  REQUIRE(e.has_value());
  CHECK(g.add(*e, *e) == *e);
  CHECK_FALSE(find_idempotent(Monoid::naturals()).has_value());
  CHECK_FALSE(find_idempotent(Monoid::ab_naturals()).has_value());
}

TEST_CASE("names round trip") {
  for (const auto& m : test::builtins()) CHECK(monoid_from_name(m.name()) == m);
  CHECK(monoid_from_name("monogenic:2,3") == Monoid::monogenic(2, 3));
  CHECK_THROWS_AS(monoid_from_name("monogenic:0,3"), Error);
  CHECK_THROWS_AS(monoid_from_name("integers"), Error);
}

TEST_CASE("table JSON round trip") {
  auto m = monoid_from_json(parse_json(read_file(test::data("table_valid.json"))));
  auto again = monoid_from_json(monoid_to_json(m));
  CHECK(again == m);
  CHECK(classify(again) == classify(m));
}
