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

// Annotated relations and databases.
//
// A tuple is stored as the vector of its values aligned with the attribute
// list of its relation. Relations keep only nonzero weights, so the key set
// of a relation is its support.

#ifndef KDEP_KDB_HPP
#define KDEP_KDB_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kdep/monoid.hpp"

namespace kdep {

using Constant = std::string;
using Attribute = std::string;
using RelationName = std::string;
using Tuple = std::vector<Constant>;

/// Reserved null produced by the chase; never valid in user input.
inline const Constant kStar = "*";

class Schema {
 public:
  Schema() = default;
  explicit Schema(std::map<RelationName, std::vector<Attribute>> relations);

  /// Raises DuplicateAttribute on a repeated attribute.
  void add_relation(const RelationName& name, std::vector<Attribute> attrs);

  bool has_relation(const RelationName& name) const { return relations_.count(name) > 0; }
  /// Raises UnknownRelation.
  const std::vector<Attribute>& attributes(const RelationName& name) const;
  /// Raises UnknownAttribute.
  std::size_t position(const RelationName& name, const Attribute& attr) const;
  const std::map<RelationName, std::vector<Attribute>>& relations() const { return relations_; }
  std::vector<RelationName> names() const;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::map<RelationName, std::vector<Attribute>> relations_;
};

class KRelation {
 public:
  KRelation() = default;
  explicit KRelation(std::vector<Attribute> attributes) : attributes_(std::move(attributes)) {}

  const std::vector<Attribute>& attributes() const { return attributes_; }
  const std::map<Tuple, Element>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  /// Weight of t, or zero of m when t is outside the support.
  Element weight(const Monoid& m, const Tuple& t) const;
  /// Stores w; a zero weight erases the entry.
  void set(const Monoid& m, const Tuple& t, const Element& w);
  /// weight(t) := weight(t) + w.
  void add(const Monoid& m, const Tuple& t, const Element& w);

  friend bool operator==(const KRelation&, const KRelation&) = default;

 private:
  std::vector<Attribute> attributes_;
  std::map<Tuple, Element> weights_;
};

class KDatabase {
 public:
  /// Every schema relation starts empty.
  KDatabase(Schema schema, Monoid monoid);

  const Schema& schema() const { return schema_; }
  const Monoid& monoid() const { return monoid_; }
  const std::map<RelationName, KRelation>& relations() const { return relations_; }
  /// Raises UnknownRelation.
  const KRelation& relation(const RelationName& name) const;

  Element weight(const RelationName& rel, const Tuple& t) const;
  /// Validates arity and carrier membership; zero erases.
  void set(const RelationName& rel, const Tuple& t, const Element& w);
  void add(const RelationName& rel, const Tuple& t, const Element& w);

  /// Sum of the support sizes of all relations.
  std::size_t tuple_count() const;
  /// Distinct constants (including the star) occurring in any tuple.
  std::vector<Constant> active_domain() const;

  friend bool operator==(const KDatabase& x, const KDatabase& y) {
    return x.monoid_ == y.monoid_ && x.schema_ == y.schema_ && x.relations_ == y.relations_;
  }

 private:
  KRelation& mutable_relation(const RelationName& name);

  Schema schema_;
  Monoid monoid_;
  std::map<RelationName, KRelation> relations_;
};

/// Boolean-annotated database.
using Database = KDatabase;

/// Positions of `attrs` in `all`; raises UnknownAttribute.
std::vector<std::size_t> attribute_positions(const std::vector<Attribute>& all,
                                             const std::vector<Attribute>& attrs);

Tuple project(const Tuple& t, const std::vector<std::size_t>& positions);

/// R[Y]: keys follow the order of `attrs`, not the schema order.
KRelation marginalize(const KRelation& r, const std::vector<Attribute>& attrs, const Monoid& m);

/// Same as marginalize, keyed by the projected values only.
std::map<Tuple, Element> marginal_map(const KRelation& r, const std::vector<std::size_t>& positions,
                                      const Monoid& m);

/// Supports as a Boolean database over the same schema.
Database support(const KDatabase& d);

/// Pointwise sum; raises SchemaMismatch or MonoidMismatch.
KDatabase db_add(const KDatabase& d1, const KDatabase& d2);

/// All empty marginals coincide.
bool is_balanced(const KDatabase& d);

/// Empty marginal R[] of one relation.
Element total_weight(const KDatabase& d, const RelationName& rel);

std::size_t degree(const Tuple& t);

/// Reweights every support tuple through f, possibly into another monoid.
template <typename F>
KDatabase map_weights(const KDatabase& d, const Monoid& target, F&& f) {
  KDatabase out(d.schema(), target);
  for (const auto& [name, rel] : d.relations()) {
    for (const auto& [t, w] : rel.weights()) out.set(name, t, f(t, w));
  }
  return out;
}

}  // namespace kdep

#endif  // KDEP_KDB_HPP
