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

// Positive commutative monoids used as annotation domains.
//
// A Monoid is an immutable value describing one carrier together with its
// addition, its zero and its natural order (a <= b iff a + c = b for some c).
// Elements are plain values; they only make sense relative to the monoid that
// produced them, and every operation checks membership first.

#ifndef KDEP_MONOID_HPP
#define KDEP_MONOID_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kdep {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of the two-phase monoid `ab_naturals`: either `a_count` copies of
/// the generator a, or `b_count` >= 1 copies of b (which swallow every a).
struct AbValue {
  Natural a_count;
  Natural b_count;

  friend bool operator==(const AbValue& x, const AbValue& y) {
    return x.a_count == y.a_count && x.b_count == y.b_count;
  }
  friend bool operator<(const AbValue& x, const AbValue& y) {
    if (x.b_count != y.b_count) return x.b_count < y.b_count;
    return x.a_count < y.a_count;
  }
};

class Element {
 public:
  using Value = std::variant<Natural, Rational, AbValue>;

  Element() : value_(Natural(0)) {}
  explicit Element(Natural n) : value_(std::move(n)) {}
  explicit Element(Rational q) : value_(std::move(q)) {}
  explicit Element(AbValue v) : value_(std::move(v)) {}
  static Element from_int(std::uint64_t n) { return Element(Natural(n)); }

  const Value& value() const { return value_; }
  bool holds_natural() const { return std::holds_alternative<Natural>(value_); }
  bool holds_rational() const { return std::holds_alternative<Rational>(value_); }
  bool holds_ab() const { return std::holds_alternative<AbValue>(value_); }
  const Natural& natural() const { return std::get<Natural>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const AbValue& ab() const { return std::get<AbValue>(value_); }

  friend bool operator==(const Element& x, const Element& y) { return x.value_ == y.value_; }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }
  friend bool operator<(const Element& x, const Element& y) { return x.value_ < y.value_; }

 private:
  Value value_;
};

enum class MonoidKind {
  Boolean,
  Naturals,
  NonnegRationals,
  MaxNaturals,
  Monogenic,
  FiniteTable,
  AbNaturals,
};

enum class ReportProvenance { Declared, Computed };

struct PropertyReport {
  bool positive = true;
  bool weakly_cancellative = false;
  bool weakly_absorptive = false;
  bool self_absorptive = false;
  /// Largest k with k-absorptivity established; nullopt means unbounded.
  std::optional<std::uint64_t> k_absorptive_max;
  bool countably_absorptive = false;
  bool natural_order_total = false;
  bool natural_order_antisymmetric = false;
  ReportProvenance provenance = ReportProvenance::Declared;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

inline constexpr std::size_t kDefaultMaxTableElements = 64;
inline constexpr std::uint64_t kDefaultKBound = 8;

/// Operation table keyed by unordered element-name pairs; either orientation
/// may be supplied.
using TableEntries = std::map<std::pair<std::string, std::string>, std::string>;

class Monoid {
 public:
  static Monoid boolean();
  static Monoid naturals();
  static Monoid nonneg_rationals();
  static Monoid max_naturals();
  static Monoid ab_naturals();
  /// {0, ..., index + period - 1} generated by 1 with index == index + period.
  static Monoid monogenic(std::uint64_t index, std::uint64_t period);
  /// Validates associativity, identity and positivity exhaustively; raises
  /// InvalidMonoidTable naming the first failing instance.
  static Monoid finite_table(std::vector<std::string> elements, const std::string& zero,
                             const TableEntries& op,
                             std::size_t max_elements = kDefaultMaxTableElements);

  MonoidKind kind() const { return kind_; }
  /// Canonical selector string, e.g. "monogenic:2,3"; finite tables print as "table".
  std::string name() const;

  std::uint64_t monogenic_index() const { return index_; }
  std::uint64_t monogenic_period() const { return period_; }

  Element zero() const;
  bool is_zero(const Element& e) const { return e == zero(); }
  bool contains(const Element& e) const;

  Element add(const Element& a, const Element& b) const;
  bool leq(const Element& a, const Element& b) const;
  /// The unique c with b + c = a; needs a total weakly cancellative order.
  Element monus(const Element& a, const Element& b) const;
  bool supports_monus() const;

  bool has_finite_carrier() const;
  /// Carrier in canonical order (zero first). Finite carriers only.
  std::vector<Element> elements() const;

  Element parse(std::string_view text) const;
  std::string format(const Element& e) const;

  /// Builtins ship a declared report; computed kinds return nullopt.
  std::optional<PropertyReport> declared_report() const;

  /// Element names of a finite table, in declaration order.
  const std::vector<std::string>& table_elements() const;
  const std::string& table_zero() const;

  friend bool operator==(const Monoid& x, const Monoid& y);

 private:
  struct Table;

  Monoid(MonoidKind kind, std::uint64_t index, std::uint64_t period,
         std::shared_ptr<const Table> table)
      : kind_(kind), index_(index), period_(period), table_(std::move(table)) {}

  void require(const Element& e) const;
  std::size_t table_index(const Element& e) const;

  MonoidKind kind_;
  std::uint64_t index_ = 0;
  std::uint64_t period_ = 0;
  std::shared_ptr<const Table> table_;
};

/// Accepts `boolean | naturals | nonneg_rationals | max_naturals |
/// ab_naturals | monogenic:m0,l`.
Monoid monoid_from_name(std::string_view name);

Element add(const Monoid& m, const Element& a, const Element& b);
bool natural_leq(const Monoid& m, const Element& a, const Element& b);
Element monus(const Monoid& m, const Element& a, const Element& b);

PropertyReport classify(const Monoid& m, std::uint64_t k_bound = kDefaultKBound);

/// Nonzero (a, b) with a + b = b and b + c != c for every c.
std::optional<std::pair<Element, Element>> find_wa_pair(const Monoid& m);

struct EventualPeriod {
  std::uint64_t index;
  std::uint64_t period;
  friend bool operator==(const EventualPeriod&, const EventualPeriod&) = default;
};

/// Least index >= 1 and period >= 1 with index*b == (index+period)*b.
EventualPeriod find_eventual_period(const Monoid& m, const Element& b);

/// n*b, the n-fold sum of b (0*b is zero).
Element embed_naturals(const Monoid& m, const Element& b, const Natural& n);

/// A nonzero b with b + b = b, if one exists (declared for builtins).
std::optional<Element> find_idempotent(const Monoid& m);

}  // namespace kdep

#endif  // KDEP_MONOID_HPP
