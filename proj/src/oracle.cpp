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

#include "kdep/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "kdep/error.hpp"

namespace kdep {

namespace {

struct Slot {
  RelationName rel;
  Tuple tuple;
};

std::vector<Slot> all_slots(const Schema& schema, const std::vector<Constant>& adom) {
  std::vector<Slot> out;
  for (const auto& [name, attrs] : schema.relations()) {
    std::vector<std::size_t> digits(attrs.size(), 0);
    while (true) {
      Tuple t;
      for (auto d : digits) t.push_back(adom[d]);
      out.push_back(Slot{name, std::move(t)});
      std::size_t i = digits.size();
      while (i > 0 && ++digits[i - 1] == adom.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

std::vector<Element> nonzero_pool(const Monoid& m, const std::vector<Element>& pool) {
  std::vector<Element> out;
  for (const auto& e : pool) {
    if (!m.contains(e)) throw Error(ErrorCode::InvalidElement, "weight pool entry not in carrier");
    if (!m.is_zero(e) && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                            : a + b;
}

std::uint64_t count_space(std::size_t slots, std::size_t pool, std::size_t max_tuples) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(slots, k)
  std::uint64_t power = 1;  // pool^k
  for (std::size_t k = 0; k <= max_tuples && k <= slots; ++k) {
    total = saturating_add(total, saturating_mul(binom, power));
    binom = saturating_mul(binom, slots - k) / (k + 1);
    power = saturating_mul(power, pool);
  }
  return total;
}

std::size_t find_attr(const std::vector<Attribute>& attrs, const Attribute& a) {
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (attrs[i] == a) return i;
  }
  throw Error(ErrorCode::UnknownAttribute, a);
}

bool matches(const Tuple& t, const std::vector<std::size_t>& pos, const Tuple& point) {
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (t[pos[i]] != point[i]) return false;
  }
  return true;
}

}  // namespace

std::uint64_t search_space_size(const Schema& schema, const Monoid& m, const SearchSpace& space) {
  return count_space(all_slots(schema, space.adom).size(), nonzero_pool(m, space.weight_pool).size(),
                     space.max_tuples);
}

void enumerate_databases(const Schema& schema, const Monoid& m, const SearchSpace& space,
                         const std::function<bool(const KDatabase&)>& visit) {
  if (space.adom.empty()) throw Error(ErrorCode::InvalidInput, "empty active domain");
  for (const auto& c : space.adom) {
    if (c == kStar) throw Error(ErrorCode::ReservedConstant, "the star is reserved");
  }
  const auto pool = nonzero_pool(m, space.weight_pool);
  const auto slots = all_slots(schema, space.adom);
  const std::uint64_t size = count_space(slots.size(), pool.size(), space.max_tuples);
  if (size > space.max_databases) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(size) + " databases exceed the cap of " +
                    std::to_string(space.max_databases));
  }
  const std::size_t max_k = std::min(space.max_tuples, slots.size());
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (k > 0 && pool.empty()) break;
    std::vector<std::size_t> choice(k);
    for (std::size_t i = 0; i < k; ++i) choice[i] = i;
    while (true) {
      std::vector<std::size_t> weights(k, 0);
      while (true) {
        KDatabase d(schema, m);
        for (std::size_t i = 0; i < k; ++i) {
          d.set(slots[choice[i]].rel, slots[choice[i]].tuple, pool[weights[i]]);
        }
        if (!visit(d)) return;
        std::size_t i = k;
        while (i > 0 && ++weights[i - 1] == pool.size()) weights[--i] = 0;
        if (i == 0) break;
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && choice[i - 1] == slots.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++choice[i - 1];
      for (std::size_t j = i; j < k; ++j) choice[j] = choice[j - 1] + 1;
    }
  }
}

bool oracle_satisfies(const KDatabase& d, const Ind& sigma) {
  const Monoid& m = d.monoid();
  const auto& lhs = d.relation(sigma.lhs_rel);
  const auto& rhs = d.relation(sigma.rhs_rel);
  std::vector<std::size_t> lpos;
  std::vector<std::size_t> rpos;
  for (const auto& a : sigma.lhs_attrs) lpos.push_back(find_attr(lhs.attributes(), a));
  for (const auto& a : sigma.rhs_attrs) rpos.push_back(find_attr(rhs.attributes(), a));
  std::set<Tuple> points;
  for (const auto& [t, w] : lhs.weights()) {
    Tuple p;
    for (auto i : lpos) p.push_back(t[i]);
    points.insert(p);
  }
  for (const auto& [t, w] : rhs.weights()) {
    Tuple p;
    for (auto i : rpos) p.push_back(t[i]);
    points.insert(p);
  }
  for (const auto& point : points) {
    Element left = m.zero();
    Element right = m.zero();
    for (const auto& [t, w] : lhs.weights()) {
      if (matches(t, lpos, point)) left = m.add(left, w);
    }
    for (const auto& [t, w] : rhs.weights()) {
      if (matches(t, rpos, point)) right = m.add(right, w);
    }
    if (!m.leq(left, right)) return false;
  }
  return true;
}

namespace {

bool oracle_balanced(const KDatabase& d) {
  const Monoid& m = d.monoid();
  std::optional<Element> first;
  for (const auto& [name, rel] : d.relations()) {
    Element total = m.zero();
    for (const auto& [t, w] : rel.weights()) total = m.add(total, w);
    if (!first) {
      first = total;
    } else if (*first != total) {
      return false;
    }
  }
  return true;
}

std::optional<KDatabase> search(const std::vector<Ind>& sigma, const Ind& tau, const Schema& schema,
                                const Monoid& m, const SearchSpace& space, bool balanced) {
  for (const auto& s : sigma) validate(s, &schema);
  validate(tau, &schema);
  std::optional<KDatabase> found;
  enumerate_databases(schema, m, space, [&](const KDatabase& d) {
    if (balanced && !oracle_balanced(d)) return true;
    if (oracle_satisfies(d, tau)) return true;
    for (const auto& s : sigma) {
      if (!oracle_satisfies(d, s)) return true;
    }
    found = d;
    return false;
  });
  return found;
}

}  // namespace

std::optional<KDatabase> brute_force_entails(const std::vector<Ind>& sigma, const Ind& tau,
                                             const Schema& schema, const Monoid& m,
                                             const SearchSpace& space) {
  return search(sigma, tau, schema, m, space, false);
}

std::optional<KDatabase> brute_force_balanced_entails(const std::vector<Ind>& sigma, const Ind& tau,
                                                      const Schema& schema, const Monoid& m,
                                                      const SearchSpace& space) {
  return search(sigma, tau, schema, m, space, true);
}

bool IndSet::contains_all(const IndSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != other.words_[i]) return false;
  }
  return true;
}

void IndSet::intersect(const IndSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

OracleTable::OracleTable(const Schema& schema, const Monoid& m, const SearchSpace& space,
                         std::vector<Ind> universe, bool balanced_only)
    : universe_(std::move(universe)) {
  for (const auto& s : universe_) validate(s, &schema);
  std::map<IndSet, std::size_t> seen;
  enumerate_databases(schema, m, space, [&](const KDatabase& d) {
    ++visited_;
    if (balanced_only && !oracle_balanced(d)) return true;
    IndSet profile(universe_.size());
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (oracle_satisfies(d, universe_[i])) profile.set(i);
    }
    if (seen.emplace(profile, profiles_.size()).second) {
      profiles_.push_back(std::move(profile));
      witnesses_.push_back(d);
    }
    return true;
  });
}

IndSet OracleTable::consequences(const IndSet& sigma) const {
  IndSet all(universe_.size());
  for (std::size_t i = 0; i < universe_.size(); ++i) all.set(i);
  for (const auto& p : profiles_) {
    if (p.contains_all(sigma)) all.intersect(p);
  }
  return all;
}

std::optional<KDatabase> OracleTable::counterexample(const IndSet& sigma, std::size_t tau) const {
  for (std::size_t i = 0; i < profiles_.size(); ++i) {
    if (profiles_[i].contains_all(sigma) && !profiles_[i].test(tau)) return witnesses_[i];
  }
  return std::nullopt;
}

}  // namespace kdep
