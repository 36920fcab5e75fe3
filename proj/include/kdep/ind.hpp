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

#ifndef KDEP_IND_HPP
#define KDEP_IND_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kdep/kdb.hpp"

namespace kdep {

/// R[A1..An] <= S[B1..Bn]. Comparison is lexicographic on the printed form.
struct Ind {
  RelationName lhs_rel;
  std::vector<Attribute> lhs_attrs;
  RelationName rhs_rel;
  std::vector<Attribute> rhs_attrs;

  std::size_t arity() const { return lhs_attrs.size(); }
  bool is_reflexive() const { return lhs_rel == rhs_rel && lhs_attrs == rhs_attrs; }
  std::string to_string() const;

  friend bool operator==(const Ind& x, const Ind& y) {
    return x.lhs_rel == y.lhs_rel && x.lhs_attrs == y.lhs_attrs && x.rhs_rel == y.rhs_rel &&
           x.rhs_attrs == y.rhs_attrs;
  }
  friend bool operator!=(const Ind& x, const Ind& y) { return !(x == y); }
  friend bool operator<(const Ind& x, const Ind& y) { return x.to_string() < y.to_string(); }
};

/// Checks arity, distinctness and (when given) schema membership.
void validate(const Ind& sigma, const Schema* schema = nullptr);

/// Parses `R[A,B] <= S[C,D]`; `R[] <= S[]` is the arity-0 form.
Ind parse_ind(std::string_view text, const Schema* schema = nullptr);
inline Ind parse_ind(std::string_view text, const Schema& schema) { return parse_ind(text, &schema); }

/// One IND per line; blank lines and `#` comments are skipped.
std::vector<Ind> parse_ind_list(std::string_view text, const Schema* schema = nullptr);

Ind inverse(const Ind& sigma);

bool satisfies(const KDatabase& d, const Ind& sigma);
bool satisfies_all(const KDatabase& d, const std::vector<Ind>& sigma);

/// Smallest schema mentioning every relation and attribute in `inds`, with
/// attributes in first-occurrence order.
Schema infer_schema(const std::vector<Ind>& inds);

}  // namespace kdep

#endif  // KDEP_IND_HPP
