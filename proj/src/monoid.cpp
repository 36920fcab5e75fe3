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

#include "kdep/monoid.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "kdep/error.hpp"

namespace kdep {

struct Monoid::Table {
  std::vector<std::string> names;
  std::size_t zero = 0;
  std::vector<std::size_t> op;  // row-major n*n
  std::vector<bool> leq;        // row-major n*n, natural order

  std::size_t size() const { return names.size(); }
  std::size_t sum(std::size_t a, std::size_t b) const { return op[a * size() + b]; }
};

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Natural parse_natural(std::string_view s) {
  if (!all_digits(s)) {
    throw Error(ErrorCode::InvalidElement, "not a natural number: '" + std::string(s) + "'");
  }
  return Natural(std::string(s));
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::InvalidInput, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Monoid Monoid::boolean() { return Monoid(MonoidKind::Boolean, 0, 0, nullptr); }
Monoid Monoid::naturals() { return Monoid(MonoidKind::Naturals, 0, 0, nullptr); }
Monoid Monoid::nonneg_rationals() { return Monoid(MonoidKind::NonnegRationals, 0, 0, nullptr); }
Monoid Monoid::max_naturals() { return Monoid(MonoidKind::MaxNaturals, 0, 0, nullptr); }
Monoid Monoid::ab_naturals() { return Monoid(MonoidKind::AbNaturals, 0, 0, nullptr); }

Monoid Monoid::monogenic(std::uint64_t index, std::uint64_t period) {
  if (index < 1 || period < 1) {
    throw Error(ErrorCode::InvalidInput, "monogenic monoid needs index >= 1 and period >= 1");
  }
  if (index > (1ULL << 40) || period > (1ULL << 40)) {
    throw Error(ErrorCode::InvalidInput, "monogenic parameters too large");
  }
  return Monoid(MonoidKind::Monogenic, index, period, nullptr);
}

Monoid Monoid::finite_table(std::vector<std::string> elements, const std::string& zero,
                            const TableEntries& op, std::size_t max_elements) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidMonoidTable, msg); };
  if (elements.empty()) fail("table has no elements");
  if (elements.size() > max_elements) {
    fail("table has " + std::to_string(elements.size()) + " elements, limit is " +
         std::to_string(max_elements));
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& n = elements[i];
    if (n.empty() || n.find(',') != std::string::npos || n != trim(n)) {
      fail("invalid element name '" + n + "'");
    }
    if (!index.emplace(n, i).second) fail("duplicate element '" + n + "'");
  }
  auto zit = index.find(zero);
  if (zit == index.end()) fail("zero '" + zero + "' is not an element");

  auto t = std::make_shared<Table>();
  t->names = std::move(elements);
  t->zero = zit->second;
  const std::size_t n = t->size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  t->op.assign(n * n, kUnset);

  for (const auto& [key, result] : op) {
    auto xi = index.find(key.first);
    auto yi = index.find(key.second);
    auto ri = index.find(result);
    if (xi == index.end() || yi == index.end()) {
      fail("entry '" + key.first + "," + key.second + "' names an unknown element");
    }
    if (ri == index.end()) {
      fail("entry '" + key.first + "," + key.second + "' yields unknown element '" + result + "'");
    }
    for (auto [x, y] : {std::pair{xi->second, yi->second}, std::pair{yi->second, xi->second}}) {
      auto& slot = t->op[x * n + y];
      if (slot != kUnset && slot != ri->second) {
        fail("commutativity fails: " + key.first + "+" + key.second + " has two values '" +
             t->names[slot] + "' and '" + result + "'");
      }
      slot = ri->second;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& slot = t->op[x * n + y];
      if (x == t->zero || y == t->zero) {
        std::size_t expect = x == t->zero ? y : x;
        if (slot != kUnset && slot != expect) {
          fail("identity fails: " + t->names[x] + "+" + t->names[y] + " = " + t->names[slot] +
               ", expected " + t->names[expect]);
        }
        slot = expect;
      } else if (slot == kUnset) {
        fail("missing entry '" + t->names[x] + "," + t->names[y] + "'");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t left = t->sum(t->sum(a, b), c);
        std::size_t right = t->sum(a, t->sum(b, c));
        if (left != right) {
          fail("associativity fails: (" + t->names[a] + "+" + t->names[b] + ")+" + t->names[c] +
               " = " + t->names[left] + " but " + t->names[a] + "+(" + t->names[b] + "+" +
               t->names[c] + ") = " + t->names[right]);
        }
      }
      if (t->sum(a, b) == t->zero && (a != t->zero || b != t->zero)) {
        fail("positivity fails: " + t->names[a] + "+" + t->names[b] + " = " + t->names[t->zero]);
      }
    }
  }
  t->leq.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) t->leq[a * n + t->sum(a, c)] = true;
  }
  return Monoid(MonoidKind::FiniteTable, 0, 0, std::move(t));
}

std::string Monoid::name() const {
  switch (kind_) {
    case MonoidKind::Boolean: return "boolean";
    case MonoidKind::Naturals: return "naturals";
    case MonoidKind::NonnegRationals: return "nonneg_rationals";
    case MonoidKind::MaxNaturals: return "max_naturals";
    case MonoidKind::AbNaturals: return "ab_naturals";
    case MonoidKind::Monogenic:
      return "monogenic:" + std::to_string(index_) + "," + std::to_string(period_);
    case MonoidKind::FiniteTable: return "table";
  }
  return "unknown";
}

Element Monoid::zero() const {
  switch (kind_) {
    case MonoidKind::NonnegRationals: return Element(Rational(0));
    case MonoidKind::AbNaturals: return Element(AbValue{0, 0});
    case MonoidKind::FiniteTable: return Element::from_int(table_->zero);
    default: return Element(Natural(0));
  }
}

bool Monoid::contains(const Element& e) const {
  switch (kind_) {
    case MonoidKind::Boolean: return e.holds_natural() && e.natural() <= 1;
    case MonoidKind::Naturals:
    case MonoidKind::MaxNaturals: return e.holds_natural() && e.natural() >= 0;
    case MonoidKind::NonnegRationals: return e.holds_rational() && e.rational() >= 0;
    case MonoidKind::Monogenic:
      return e.holds_natural() && e.natural() >= 0 && e.natural() < Natural(index_ + period_);
    case MonoidKind::FiniteTable:
      return e.holds_natural() && e.natural() >= 0 && e.natural() < Natural(table_->size());
    case MonoidKind::AbNaturals:
      return e.holds_ab() && e.ab().a_count >= 0 && e.ab().b_count >= 0 &&
             (e.ab().b_count == 0 || e.ab().a_count == 0);
  }
  return false;
}

void Monoid::require(const Element& e) const {
  if (!contains(e)) {
    throw Error(ErrorCode::InvalidElement, "element is not in the carrier of " + name());
  }
}

std::size_t Monoid::table_index(const Element& e) const {
  return static_cast<std::size_t>(e.natural());
}

Element Monoid::add(const Element& a, const Element& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case MonoidKind::Boolean: return Element(Natural(a.natural() == 1 || b.natural() == 1 ? 1 : 0));
    case MonoidKind::Naturals: return Element(Natural(a.natural() + b.natural()));
    case MonoidKind::NonnegRationals: return Element(Rational(a.rational() + b.rational()));
    case MonoidKind::MaxNaturals: return Element(std::max(a.natural(), b.natural()));
    case MonoidKind::Monogenic: {
      Natural s = a.natural() + b.natural();
      Natural m0(index_);
      if (s >= m0) s = (s - m0) % Natural(period_) + m0;
      return Element(std::move(s));
    }
    case MonoidKind::FiniteTable:
      return Element::from_int(table_->sum(table_index(a), table_index(b)));
    case MonoidKind::AbNaturals: {
      Natural bs = a.ab().b_count + b.ab().b_count;
      if (bs > 0) return Element(AbValue{0, std::move(bs)});
      return Element(AbValue{a.ab().a_count + b.ab().a_count, 0});
    }
  }
  throw Error(ErrorCode::UnsupportedMonoid, "unknown monoid kind");
}

bool Monoid::leq(const Element& a, const Element& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case MonoidKind::Boolean:
    case MonoidKind::Naturals:
    case MonoidKind::MaxNaturals: return a.natural() <= b.natural();
    case MonoidKind::NonnegRationals: return a.rational() <= b.rational();
    case MonoidKind::Monogenic: {
      // Adding to a pre-period element walks upward; inside the cycle every
      // cycle element is reachable and nothing below it is.
      Natural m0(index_);
      return a.natural() < m0 ? b.natural() >= a.natural() : b.natural() >= m0;
    }
    case MonoidKind::FiniteTable:
      return table_->leq[table_index(a) * table_->size() + table_index(b)];
    case MonoidKind::AbNaturals: {
      const auto& x = a.ab();
      const auto& y = b.ab();
      if (x.b_count == 0 && y.b_count == 0) return x.a_count <= y.a_count;
      if (x.b_count == 0) return true;
      if (y.b_count == 0) return false;
      return x.b_count <= y.b_count;
    }
  }
  return false;
}

bool Monoid::supports_monus() const {
  switch (kind_) {
    case MonoidKind::Naturals:
    case MonoidKind::NonnegRationals: return true;
    case MonoidKind::FiniteTable: {
      auto r = classify(*this);
      return r.weakly_cancellative && r.natural_order_total;
    }
    default: return false;
  }
}

Element Monoid::monus(const Element& a, const Element& b) const {
  require(a);
  require(b);
  if (!supports_monus()) {
    throw Error(ErrorCode::UnsupportedMonoid,
                name() + " has no total weakly cancellative natural order");
  }
  if (!leq(b, a)) {
    throw Error(ErrorCode::NotSubtractable, format(b) + " is not below " + format(a));
  }
  switch (kind_) {
    case MonoidKind::Naturals: return Element(Natural(a.natural() - b.natural()));
    case MonoidKind::NonnegRationals: return Element(Rational(a.rational() - b.rational()));
    default: {
      for (const auto& c : elements()) {
        if (add(b, c) == a) return c;
      }
      throw Error(ErrorCode::NotSubtractable, "no difference found");
    }
  }
}

bool Monoid::has_finite_carrier() const {
  return kind_ == MonoidKind::Boolean || kind_ == MonoidKind::Monogenic ||
         kind_ == MonoidKind::FiniteTable;
}

std::vector<Element> Monoid::elements() const {
  std::vector<Element> out;
  switch (kind_) {
    case MonoidKind::Boolean:
      out = {Element::from_int(0), Element::from_int(1)};
      break;
    case MonoidKind::Monogenic:
      if (index_ + period_ > (1ULL << 20)) {
        throw Error(ErrorCode::UnsupportedMonoid, "carrier of " + name() + " is too large to list");
      }
      for (std::uint64_t i = 0; i < index_ + period_; ++i) out.push_back(Element::from_int(i));
      break;
    case MonoidKind::FiniteTable:
      out.push_back(Element::from_int(table_->zero));
      for (std::size_t i = 0; i < table_->size(); ++i) {
        if (i != table_->zero) out.push_back(Element::from_int(i));
      }
      break;
    default:
      throw Error(ErrorCode::UnsupportedMonoid, name() + " has an infinite carrier");
  }
  return out;
}

Element Monoid::parse(std::string_view raw) const {
  std::string text = trim(raw);
  auto bad = [&]() -> Element {
    throw Error(ErrorCode::InvalidElement, "'" + text + "' is not an element of " + name());
  };
  switch (kind_) {
    case MonoidKind::Boolean:
      if (text == "0" || text == "false") return Element::from_int(0);
      if (text == "1" || text == "true") return Element::from_int(1);
      return bad();
    case MonoidKind::Naturals:
    case MonoidKind::MaxNaturals:
      return Element(parse_natural(text));
    case MonoidKind::NonnegRationals: {
      auto slash = text.find('/');
      if (slash == std::string::npos) return Element(Rational(parse_natural(text)));
      Natural num = parse_natural(std::string_view(text).substr(0, slash));
      Natural den = parse_natural(std::string_view(text).substr(slash + 1));
      if (den == 0) return bad();
      return Element(Rational(num, den));
    }
    case MonoidKind::Monogenic: {
      Element e(parse_natural(text));
      if (!contains(e)) return bad();
      return e;
    }
    case MonoidKind::FiniteTable: {
      for (std::size_t i = 0; i < table_->size(); ++i) {
        if (table_->names[i] == text) return Element::from_int(i);
      }
      return bad();
    }
    case MonoidKind::AbNaturals: {
      if (text == "0") return zero();
      if (text.empty()) return bad();
      char unit = text.back();
      std::string_view count = std::string_view(text).substr(0, text.size() - 1);
      Natural k = count.empty() ? Natural(1) : parse_natural(count);
      if (k == 0) return zero();
      if (unit == 'a') return Element(AbValue{k, 0});
      if (unit == 'b') return Element(AbValue{0, k});
      return bad();
    }
  }
  return bad();
}

std::string Monoid::format(const Element& e) const {
  require(e);
  switch (kind_) {
    case MonoidKind::NonnegRationals: {
      const auto& q = e.rational();
      if (denominator(q) == 1) return numerator(q).str();
      return numerator(q).str() + "/" + denominator(q).str();
    }
    case MonoidKind::FiniteTable: return table_->names[table_index(e)];
    case MonoidKind::AbNaturals: {
      const auto& v = e.ab();
      if (v.b_count > 0) return (v.b_count == 1 ? std::string() : v.b_count.str()) + "b";
      if (v.a_count > 0) return (v.a_count == 1 ? std::string() : v.a_count.str()) + "a";
      return "0";
    }
    default: return e.natural().str();
  }
}

std::optional<PropertyReport> Monoid::declared_report() const {
  PropertyReport r;
  r.provenance = ReportProvenance::Declared;
  r.positive = true;
  r.natural_order_total = true;
  r.natural_order_antisymmetric = true;
  switch (kind_) {
    case MonoidKind::Boolean:
    case MonoidKind::MaxNaturals:
      r.weakly_absorptive = true;
      r.self_absorptive = true;
      r.countably_absorptive = true;
      r.k_absorptive_max = std::nullopt;
      return r;
    case MonoidKind::Naturals:
    case MonoidKind::NonnegRationals:
      r.weakly_cancellative = true;
      r.k_absorptive_max = 0;
      return r;
    case MonoidKind::AbNaturals:
      // a + b = b, but nothing absorbs b, so chains stop after one step.
      r.weakly_absorptive = true;
      r.k_absorptive_max = 1;
      return r;
    default: return std::nullopt;
  }
}

const std::vector<std::string>& Monoid::table_elements() const {
  if (kind_ != MonoidKind::FiniteTable) {
    throw Error(ErrorCode::UnsupportedMonoid, name() + " is not a finite table");
  }
  return table_->names;
}

const std::string& Monoid::table_zero() const { return table_elements()[table_->zero]; }

bool operator==(const Monoid& x, const Monoid& y) {
  if (x.kind_ != y.kind_) return false;
  if (x.kind_ == MonoidKind::Monogenic) return x.index_ == y.index_ && x.period_ == y.period_;
  if (x.kind_ == MonoidKind::FiniteTable) {
    return x.table_ == y.table_ ||
           (x.table_->names == y.table_->names && x.table_->zero == y.table_->zero &&
            x.table_->op == y.table_->op);
  }
  return true;
}

Monoid monoid_from_name(std::string_view raw) {
  std::string name = trim(raw);
  if (name == "boolean") return Monoid::boolean();
  if (name == "naturals") return Monoid::naturals();
  if (name == "nonneg_rationals") return Monoid::nonneg_rationals();
  if (name == "max_naturals") return Monoid::max_naturals();
  if (name == "ab_naturals") return Monoid::ab_naturals();
  constexpr std::string_view kMono = "monogenic:";
  if (name.rfind(kMono, 0) == 0) {
    std::string_view rest = std::string_view(name).substr(kMono.size());
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::InvalidInput, "expected monogenic:m0,l but got '" + name + "'");
    }
    return Monoid::monogenic(parse_u64(trim(rest.substr(0, comma)), "monogenic index"),
                             parse_u64(trim(rest.substr(comma + 1)), "monogenic period"));
  }
  throw Error(ErrorCode::InvalidInput, "unknown monoid '" + name + "'");
}

Element add(const Monoid& m, const Element& a, const Element& b) { return m.add(a, b); }
bool natural_leq(const Monoid& m, const Element& a, const Element& b) { return m.leq(a, b); }
Element monus(const Monoid& m, const Element& a, const Element& b) { return m.monus(a, b); }

PropertyReport classify(const Monoid& m, std::uint64_t k_bound) {
  if (auto declared = m.declared_report()) return *declared;
  if (!m.has_finite_carrier()) {
    throw Error(ErrorCode::UnsupportedMonoid, "cannot classify " + m.name());
  }
  const auto elems = m.elements();
  const Element zero = m.zero();
  std::vector<Element> nonzero(elems.begin() + 1, elems.end());

  PropertyReport r;
  r.provenance = ReportProvenance::Computed;
  r.positive = true;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      if (m.add(a, b) == zero && (a != zero || b != zero)) r.positive = false;
    }
  }
  r.weakly_absorptive = false;
  for (const auto& a : nonzero) {
    for (const auto& b : nonzero) {
      if (m.add(a, b) == b) r.weakly_absorptive = true;
    }
  }
  r.weakly_cancellative = !r.weakly_absorptive;
  r.self_absorptive = std::any_of(nonzero.begin(), nonzero.end(),
                                  [&](const Element& b) { return m.add(b, b) == b; });
  // Finite carrier: a nonzero idempotent exists iff an infinite chain does.
  r.countably_absorptive = r.self_absorptive;

  if (r.self_absorptive) {
    r.k_absorptive_max = std::nullopt;
  } else {
    // reach[j] = elements that can sit at position j of an absorbing chain.
    std::set<Element> reach(nonzero.begin(), nonzero.end());
    std::uint64_t k = 0;
    while (k < k_bound) {
      std::set<Element> next;
      for (const auto& x : reach) {
        for (const auto& y : elems) {
          if (m.add(x, y) == y) next.insert(y);
        }
      }
      if (next.empty()) break;
      reach = std::move(next);
      ++k;
    }
    r.k_absorptive_max = k;
  }

  r.natural_order_total = true;
  r.natural_order_antisymmetric = true;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      bool ab = m.leq(a, b);
      bool ba = m.leq(b, a);
      if (!ab && !ba) r.natural_order_total = false;
      if (ab && ba && a != b) r.natural_order_antisymmetric = false;
    }
  }
  return r;
}

std::optional<std::pair<Element, Element>> find_wa_pair(const Monoid& m) {
  if (m.kind() == MonoidKind::AbNaturals) {
    return std::pair{m.parse("a"), m.parse("b")};
  }
  if (!m.has_finite_carrier()) {
    throw Error(ErrorCode::UnsupportedMonoid, "no effective pair search for " + m.name());
  }
  const auto elems = m.elements();
  for (std::size_t bi = 1; bi < elems.size(); ++bi) {
    const auto& b = elems[bi];
    bool absorbs_nothing = std::none_of(elems.begin(), elems.end(),
                                        [&](const Element& c) { return m.add(b, c) == c; });
    if (!absorbs_nothing) continue;
    for (std::size_t ai = 1; ai < elems.size(); ++ai) {
      if (m.add(elems[ai], b) == b) return std::pair{elems[ai], b};
    }
  }
  return std::nullopt;
}

EventualPeriod find_eventual_period(const Monoid& m, const Element& b) {
  if (!m.contains(b) || m.is_zero(b)) {
    throw Error(ErrorCode::InvalidElement, "generator must be a nonzero element");
  }
  switch (m.kind()) {
    case MonoidKind::Naturals:
    case MonoidKind::NonnegRationals:
    case MonoidKind::AbNaturals:
      throw Error(ErrorCode::UnsupportedMonoid,
                  "multiples of " + m.format(b) + " never repeat in " + m.name());
    default: break;
  }
  // Bounded by the carrier size; max_naturals repeats at once.
  const std::uint64_t limit =
      m.has_finite_carrier() ? static_cast<std::uint64_t>(m.elements().size()) + 1 : 2;
  std::map<Element, std::uint64_t> seen;
  Element power = b;
  for (std::uint64_t i = 1; i <= limit + 1; ++i) {
    auto [it, fresh] = seen.emplace(power, i);
    if (!fresh) return EventualPeriod{it->second, i - it->second};
    power = m.add(power, b);
  }
  throw Error(ErrorCode::UnsupportedMonoid, "no repetition found for " + m.format(b));
}

Element embed_naturals(const Monoid& m, const Element& b, const Natural& n) {
  if (!m.contains(b)) throw Error(ErrorCode::InvalidElement, "generator not in carrier");
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative multiplier");
  switch (m.kind()) {
    case MonoidKind::Naturals: return Element(Natural(b.natural() * n));
    case MonoidKind::NonnegRationals: return Element(Rational(b.rational() * Rational(n)));
    default: break;
  }
  Element result = m.zero();
  Element base = b;
  Natural k = n;
  while (k > 0) {
    if (bit_test(k, 0)) result = m.add(result, base);
    k >>= 1;
    if (k > 0) base = m.add(base, base);
  }
  return result;
}

std::optional<Element> find_idempotent(const Monoid& m) {
  switch (m.kind()) {
    case MonoidKind::Boolean:
    case MonoidKind::MaxNaturals: return Element::from_int(1);
    case MonoidKind::Naturals:
    case MonoidKind::NonnegRationals:
    case MonoidKind::AbNaturals: return std::nullopt;
    default: break;
  }
  for (const auto& b : m.elements()) {
    if (!m.is_zero(b) && m.add(b, b) == b) return b;
  }
  return std::nullopt;
}

}  // namespace kdep
