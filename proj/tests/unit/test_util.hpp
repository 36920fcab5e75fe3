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


// Shared helpers for the unit tests.

#ifndef KDEP_TESTS_TEST_UTIL_HPP
#define KDEP_TESTS_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "kdep/ind.hpp"
#include "kdep/monoid.hpp"

namespace kdep::test {

inline std::string data(const std::string& name) { return std::string(KDEP_TEST_DATA) + "/" + name; }

inline std::vector<Monoid> builtins() {
  return {Monoid::boolean(),      Monoid::naturals(),  Monoid::nonneg_rationals(),
          Monoid::max_naturals(), Monoid::ab_naturals(), Monoid::monogenic(2, 3)};
}

/// A few elements of each carrier, zero first.
inline std::vector<Element> sample_elements(const Monoid& m) {
  if (m.has_finite_carrier()) return m.elements();
  std::vector<std::string> names;
  switch (m.kind()) {
    case MonoidKind::NonnegRationals:
      names = {"0", "1/2", "1", "3/2", "2", "7/3"};
      break;
    case MonoidKind::AbNaturals:
      names = {"0", "a", "2a", "b", "2b", "5b"};
      break;
    default:
      names = {"0", "1", "2", "3", "5", "8"};
  }
  std::vector<Element> out;
  for (const auto& n : names) out.push_back(m.parse(n));
  return out;
}

/// Uniform draw from the nonzero sample elements.
inline Element random_nonzero(const Monoid& m, std::mt19937& rng) {
  auto elems = sample_elements(m);
  std::uniform_int_distribution<std::size_t> pick(1, elems.size() - 1);
  return elems[pick(rng)];
}

/// Random database with up to `max_tuples` tuples per relation over `adom`.
inline KDatabase random_database(const Schema& schema, const Monoid& m,
                                 const std::vector<Constant>& adom, std::size_t max_tuples,
                                 std::mt19937& rng) {
  KDatabase d(schema, m);
  std::uniform_int_distribution<std::size_t> count(0, max_tuples);
  std::uniform_int_distribution<std::size_t> value(0, adom.size() - 1);
  for (const auto& [name, attrs] : schema.relations()) {
    std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
      Tuple t;
      for (std::size_t j = 0; j < attrs.size(); ++j) t.push_back(adom[value(rng)]);
      d.add(name, t, random_nonzero(m, rng));
    }
  }
  return d;
}

/// Random IND of arity <= max_arity over the schema.
inline Ind random_ind(const Schema& schema, std::size_t max_arity, std::mt19937& rng) {
  auto names = schema.names();
  std::uniform_int_distribution<std::size_t> rel(0, names.size() - 1);
  const auto& l = names[rel(rng)];
  const auto& r = names[rel(rng)];
  auto la = schema.attributes(l);
  auto ra = schema.attributes(r);
  std::size_t cap = std::min({max_arity, la.size(), ra.size()});
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
  std::shuffle(la.begin(), la.end(), rng);
  std::shuffle(ra.begin(), ra.end(), rng);
  la.resize(n);
  ra.resize(n);
  return Ind{l, la, r, ra};
}

}  // namespace kdep::test

#endif  // KDEP_TESTS_TEST_UTIL_HPP
