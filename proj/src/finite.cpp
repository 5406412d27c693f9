#include "slate/finite.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <variant>

namespace slate {

struct Value::Rep {
  std::variant<Integer, std::string, std::pair<Value, Value>, FiniteSet> data;
};

Value::Value(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

Value::Value(int n) : Value(Integer(n)) {}

Value::Value(Integer n) : rep_(std::make_shared<Rep>(Rep{std::move(n)})) {}

Value::Value(std::string symbol) : rep_(std::make_shared<Rep>(Rep{std::move(symbol)})) {}

Value::Value(const char* symbol) : Value(std::string(symbol)) {}

Value Value::pair(Value first, Value second) {
  return Value(std::make_shared<Rep>(Rep{std::make_pair(std::move(first), std::move(second))}));
}

Value Value::set(FiniteSet elements) {
  return Value(std::make_shared<Rep>(Rep{std::move(elements)}));
}

Value::Kind Value::kind() const { return static_cast<Kind>(rep_->data.index()); }

const Integer& Value::as_int() const {
  if (kind() != Kind::Int) throw std::logic_error("value is not an integer");
  return std::get<Integer>(rep_->data);
}

const std::string& Value::as_symbol() const {
  if (kind() != Kind::Symbol) throw std::logic_error("value is not a symbol");
  return std::get<std::string>(rep_->data);
}

const Value& Value::first() const {
  if (kind() != Kind::Pair) throw std::logic_error("value is not a pair");
  return std::get<std::pair<Value, Value>>(rep_->data).first;
}

const Value& Value::second() const {
  if (kind() != Kind::Pair) throw std::logic_error("value is not a pair");
  return std::get<std::pair<Value, Value>>(rep_->data).second;
}

const FiniteSet& Value::as_set() const {
  if (kind() != Kind::Set) throw std::logic_error("value is not a set");
  return std::get<FiniteSet>(rep_->data);
}

std::string Value::str() const {
  switch (kind()) {
    case Kind::Int:
      return as_int().get_str();
    case Kind::Symbol:
      return as_symbol();
    case Kind::Pair:
      return "(" + first().str() + ", " + second().str() + ")";
    case Kind::Set:
      return as_set().str();
  }
  throw std::logic_error("unreachable value kind");
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Value::Kind::Int: {
      int c = cmp(a.as_int(), b.as_int());
      return c <=> 0;
    }
    case Value::Kind::Symbol:
      return a.as_symbol() <=> b.as_symbol();
    case Value::Kind::Pair: {
      if (auto c = a.first() <=> b.first(); c != 0) return c;
      return a.second() <=> b.second();
    }
    case Value::Kind::Set:
      return a.as_set() <=> b.as_set();
  }
  throw std::logic_error("unreachable value kind");
}

FiniteSet::FiniteSet(std::initializer_list<Value> elements)
    : FiniteSet(std::vector<Value>(elements)) {}

FiniteSet::FiniteSet(std::vector<Value> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteSet::contains(const Value& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string FiniteSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ", ";
    out += elements_[i].str();
  }
  out += "}";
  return out;
}

std::strong_ordering operator<=>(const FiniteSet& a, const FiniteSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a.elements()[i] <=> b.elements()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Value> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return FiniteSet(std::move(merged));
}

FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Value> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return FiniteSet(std::move(common));
}

FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Value> rest;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(rest));
  return FiniteSet(std::move(rest));
}

bool is_subset(const FiniteSet& a, const FiniteSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FiniteSet set_product(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Value> pairs;
  pairs.reserve(a.size() * b.size());
  for (const Value& x : a) {
    for (const Value& y : b) pairs.push_back(Value::pair(x, y));
  }
  return FiniteSet(std::move(pairs));
}

FiniteSet powerset(const FiniteSet& a) {
  if (a.size() > 20) throw std::domain_error("powerset limited to 20 elements");
  const std::size_t n = a.size();
  std::vector<Value> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Value> members;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) members.push_back(a.elements()[i]);
    }
    subsets.push_back(Value::set(FiniteSet(std::move(members))));
  }
  return FiniteSet(std::move(subsets));
}

}  // namespace slate
