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

#include "kdep/ind.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "kdep/error.hpp"

namespace kdep {

namespace {

std::string join(const std::vector<Attribute>& attrs) {
  std::string out;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (i) out += ',';
    out += attrs[i];
  }
  return out;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at column " + std::to_string(pos_ + 1) +
                                            " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::pair<RelationName, std::vector<Attribute>> parse_side(Cursor& c) {
  RelationName rel = c.name();
  c.expect("[");
  std::vector<Attribute> attrs;
  if (!c.accept("]")) {
    do {
      attrs.push_back(c.name());
    } while (c.accept(","));
    c.expect("]");
  }
  return {rel, attrs};
}

void check_distinct(const RelationName& rel, const std::vector<Attribute>& attrs) {
  std::set<Attribute> seen;
  for (const auto& a : attrs) {
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::DuplicateAttribute, "attribute " + a + " repeated in " + rel + "[" +
                                                     join(attrs) + "]");
    }
  }
}

}  // namespace

std::string Ind::to_string() const {
  return lhs_rel + "[" + join(lhs_attrs) + "] <= " + rhs_rel + "[" + join(rhs_attrs) + "]";
}

void validate(const Ind& sigma, const Schema* schema) {
  check_distinct(sigma.lhs_rel, sigma.lhs_attrs);
  check_distinct(sigma.rhs_rel, sigma.rhs_attrs);
  if (sigma.lhs_attrs.size() != sigma.rhs_attrs.size()) {
    throw Error(ErrorCode::ArityMismatch, "sides of " + sigma.to_string() + " differ in length");
  }
  if (schema) {
    for (const auto& a : sigma.lhs_attrs) schema->position(sigma.lhs_rel, a);
    for (const auto& a : sigma.rhs_attrs) schema->position(sigma.rhs_rel, a);
    schema->attributes(sigma.lhs_rel);
    schema->attributes(sigma.rhs_rel);
  }
}

Ind parse_ind(std::string_view text, const Schema* schema) {
  Cursor c(text);
  auto [lrel, lattrs] = parse_side(c);
  if (!c.accept("<=") && !c.accept("⊆")) c.fail("expected '<='");
  auto [rrel, rattrs] = parse_side(c);
  if (!c.at_end()) c.fail("trailing input");
  Ind sigma{lrel, lattrs, rrel, rattrs};
  validate(sigma, schema);
  return sigma;
}

std::vector<Ind> parse_ind_list(std::string_view text, const Schema* schema) {
  std::vector<Ind> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = std::all_of(line.begin(), line.end(),
                             [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
    if (!blank) out.push_back(parse_ind(line, schema));
    start = end + 1;
  }
  return out;
}

Ind inverse(const Ind& sigma) {
  return Ind{sigma.rhs_rel, sigma.rhs_attrs, sigma.lhs_rel, sigma.lhs_attrs};
}

bool satisfies(const KDatabase& d, const Ind& sigma) {
  const Monoid& m = d.monoid();
  const auto& lhs = d.relation(sigma.lhs_rel);
  const auto& rhs = d.relation(sigma.rhs_rel);
  auto lm = marginal_map(lhs, attribute_positions(lhs.attributes(), sigma.lhs_attrs), m);
  auto rm = marginal_map(rhs, attribute_positions(rhs.attributes(), sigma.rhs_attrs), m);
  // Points outside the lhs support compare 0 <= x.
  for (const auto& [key, w] : lm) {
    auto it = rm.find(key);
    if (it == rm.end() || !m.leq(w, it->second)) return false;
  }
  return true;
}

bool satisfies_all(const KDatabase& d, const std::vector<Ind>& sigma) {
  return std::all_of(sigma.begin(), sigma.end(), [&](const Ind& s) { return satisfies(d, s); });
}

Schema infer_schema(const std::vector<Ind>& inds) {
  std::map<RelationName, std::vector<Attribute>> rels;
  auto note = [&](const RelationName& r, const std::vector<Attribute>& attrs) {
    auto& list = rels[r];
    for (const auto& a : attrs) {
      if (std::find(list.begin(), list.end(), a) == list.end()) list.push_back(a);
    }
  };
  for (const auto& s : inds) {
    note(s.lhs_rel, s.lhs_attrs);
    note(s.rhs_rel, s.rhs_attrs);
  }
  return Schema(std::move(rels));
}

}  // namespace kdep
