#pragma once

/**
 * @file finite.hpp
 * @brief Finite sets over a totally ordered universe of values.
 *
 * The element universe admits integers, symbols (strings), ordered pairs,
 * and sets, so products, powersets, and quotients close over it. The
 * total order compares kind first (int < symbol < pair < set), then
 * within a kind: integers numerically, symbols lexicographically, pairs
 * componentwise, and sets by size then lexicographically by element.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "slate/rational.hpp"

namespace slate {

class FiniteSet;

class Value {
 public:
  enum class Kind { Int, Symbol, Pair, Set };

  Value(int n);
  Value(Integer n);
  Value(std::string symbol);
  Value(const char* symbol);
  static Value pair(Value first, Value second);
  static Value set(FiniteSet elements);

  Kind kind() const;
  const Integer& as_int() const;
  const std::string& as_symbol() const;
  const Value& first() const;
  const Value& second() const;
  const FiniteSet& as_set() const;

  std::string str() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  struct Rep;
  explicit Value(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> rep_;
};

/// Strictly increasing, duplicate-free element sequence.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<Value> elements);
  explicit FiniteSet(std::vector<Value> elements);  // sorts and dedups

  const std::vector<Value>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Value& v) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::string str() const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) = default;
  friend std::strong_ordering operator<=>(const FiniteSet& a, const FiniteSet& b);

 private:
  std::vector<Value> elements_;
};

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b);
bool is_subset(const FiniteSet& a, const FiniteSet& b);

/// Cartesian product as a set of ordered pairs.
FiniteSet set_product(const FiniteSet& a, const FiniteSet& b);

/// All 2^|a| subsets as set-valued elements, which the element order
/// lists by size and then lexicographically. Guarded to |a| <= 20.
FiniteSet powerset(const FiniteSet& a);

}  // namespace slate
