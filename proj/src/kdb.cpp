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

#include "kdep/kdb.hpp"

#include <algorithm>
#include <set>

#include "kdep/error.hpp"

namespace kdep {

Schema::Schema(std::map<RelationName, std::vector<Attribute>> relations) {
  for (auto& [name, attrs] : relations) add_relation(name, std::move(attrs));
}

void Schema::add_relation(const RelationName& name, std::vector<Attribute> attrs) {
  if (name.empty()) throw Error(ErrorCode::InvalidInput, "empty relation name");
  std::set<Attribute> seen;
  for (const auto& a : attrs) {
    if (a.empty()) throw Error(ErrorCode::InvalidInput, "empty attribute name in " + name);
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::DuplicateAttribute, "attribute " + a + " repeated in " + name);
    }
  }
  relations_[name] = std::move(attrs);
}

const std::vector<Attribute>& Schema::attributes(const RelationName& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw Error(ErrorCode::UnknownRelation, "no relation " + name);
  return it->second;
}

std::size_t Schema::position(const RelationName& name, const Attribute& attr) const {
  const auto& attrs = attributes(name);
  auto it = std::find(attrs.begin(), attrs.end(), attr);
  if (it == attrs.end()) {
    throw Error(ErrorCode::UnknownAttribute, "relation " + name + " has no attribute " + attr);
  }
  return static_cast<std::size_t>(it - attrs.begin());
}

std::vector<RelationName> Schema::names() const {
  std::vector<RelationName> out;
  for (const auto& [name, attrs] : relations_) out.push_back(name);
  return out;
}

Element KRelation::weight(const Monoid& m, const Tuple& t) const {
  auto it = weights_.find(t);
  return it == weights_.end() ? m.zero() : it->second;
}

void KRelation::set(const Monoid& m, const Tuple& t, const Element& w) {
  if (m.is_zero(w)) {
    weights_.erase(t);
  } else {
    weights_[t] = w;
  }
}

void KRelation::add(const Monoid& m, const Tuple& t, const Element& w) {
  if (m.is_zero(w)) return;
  auto it = weights_.find(t);
  if (it == weights_.end()) {
    weights_.emplace(t, w);
  } else {
    it->second = m.add(it->second, w);
  }
}

KDatabase::KDatabase(Schema schema, Monoid monoid)
    : schema_(std::move(schema)), monoid_(std::move(monoid)) {
  for (const auto& [name, attrs] : schema_.relations()) relations_.emplace(name, KRelation(attrs));
}

const KRelation& KDatabase::relation(const RelationName& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw Error(ErrorCode::UnknownRelation, "no relation " + name);
  return it->second;
}

KRelation& KDatabase::mutable_relation(const RelationName& name) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw Error(ErrorCode::UnknownRelation, "no relation " + name);
  return it->second;
}

Element KDatabase::weight(const RelationName& rel, const Tuple& t) const {
  return relation(rel).weight(monoid_, t);
}

void KDatabase::set(const RelationName& rel, const Tuple& t, const Element& w) {
  auto& r = mutable_relation(rel);
  if (t.size() != r.attributes().size()) {
    throw Error(ErrorCode::ArityMismatch, "tuple of width " + std::to_string(t.size()) +
                                              " for relation " + rel + " of width " +
                                              std::to_string(r.attributes().size()));
  }
  if (!monoid_.contains(w)) {
    throw Error(ErrorCode::InvalidElement, "weight is not in the carrier of " + monoid_.name());
  }
  r.set(monoid_, t, w);
}

void KDatabase::add(const RelationName& rel, const Tuple& t, const Element& w) {
  auto& r = mutable_relation(rel);
  if (t.size() != r.attributes().size()) {
    throw Error(ErrorCode::ArityMismatch, "tuple width does not match relation " + rel);
  }
  r.add(monoid_, t, w);
}

std::size_t KDatabase::tuple_count() const {
  std::size_t n = 0;
  for (const auto& [name, rel] : relations_) n += rel.size();
  return n;
}

std::vector<Constant> KDatabase::active_domain() const {
  std::set<Constant> seen;
  for (const auto& [name, rel] : relations_) {
    for (const auto& [t, w] : rel.weights()) seen.insert(t.begin(), t.end());
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::size_t> attribute_positions(const std::vector<Attribute>& all,
                                             const std::vector<Attribute>& attrs) {
  std::vector<std::size_t> out;
  out.reserve(attrs.size());
  for (const auto& a : attrs) {
    auto it = std::find(all.begin(), all.end(), a);
    if (it == all.end()) throw Error(ErrorCode::UnknownAttribute, "unknown attribute " + a);
    out.push_back(static_cast<std::size_t>(it - all.begin()));
  }
  return out;
}

Tuple project(const Tuple& t, const std::vector<std::size_t>& positions) {
  Tuple out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(t[p]);
  return out;
}

std::map<Tuple, Element> marginal_map(const KRelation& r, const std::vector<std::size_t>& positions,
                                      const Monoid& m) {
  std::map<Tuple, Element> out;
  for (const auto& [t, w] : r.weights()) {
    auto key = project(t, positions);
    auto it = out.find(key);
    if (it == out.end()) {
      out.emplace(std::move(key), w);
    } else {
      it->second = m.add(it->second, w);
    }
  }
  return out;
}

KRelation marginalize(const KRelation& r, const std::vector<Attribute>& attrs, const Monoid& m) {
  std::set<Attribute> seen;
  for (const auto& a : attrs) {
    if (!seen.insert(a).second) throw Error(ErrorCode::DuplicateAttribute, "attribute " + a);
  }
  auto positions = attribute_positions(r.attributes(), attrs);
  KRelation out(attrs);
  // Positive monoids never sum nonzero weights to zero, but set() guards anyway.
  for (auto& [t, w] : marginal_map(r, positions, m)) out.set(m, t, w);
  return out;
}

Database support(const KDatabase& d) {
  const Monoid boolean = Monoid::boolean();
  const Element one = Element::from_int(1);
  return map_weights(d, boolean, [&](const Tuple&, const Element&) { return one; });
}

KDatabase db_add(const KDatabase& d1, const KDatabase& d2) {
  if (!(d1.schema() == d2.schema())) throw Error(ErrorCode::SchemaMismatch, "schemas differ");
  if (!(d1.monoid() == d2.monoid())) throw Error(ErrorCode::MonoidMismatch, "monoids differ");
  KDatabase out = d1;
  for (const auto& [name, rel] : d2.relations()) {
    for (const auto& [t, w] : rel.weights()) out.add(name, t, w);
  }
  return out;
}

Element total_weight(const KDatabase& d, const RelationName& rel) {
  const Monoid& m = d.monoid();
  Element sum = m.zero();
  for (const auto& [t, w] : d.relation(rel).weights()) sum = m.add(sum, w);
  return sum;
}

bool is_balanced(const KDatabase& d) {
  const auto& rels = d.relations();
  if (rels.empty()) return true;
  const Element first = total_weight(d, rels.begin()->first);
  for (const auto& [name, rel] : rels) {
    if (total_weight(d, name) != first) return false;
  }
  return true;
}

std::size_t degree(const Tuple& t) {
  return static_cast<std::size_t>(std::count_if(t.begin(), t.end(),
                                                [](const Constant& c) { return c != kStar; }));
}

}  // namespace kdep
