#include "slate/relation.hpp"

#include <stdexcept>
#include <utility>

namespace slate {

namespace {

void check_pairs(const FiniteSet& domain, const FiniteSet& pairs) {
  for (const Value& p : pairs) {
    if (p.kind() != Value::Kind::Pair) {
      throw std::domain_error("relation element is not a pair: " + p.str());
    }
    if (!domain.contains(p.first()) || !domain.contains(p.second())) {
      throw std::domain_error("relation pair outside domain: " + p.str());
    }
  }
}

}  // namespace

Relation::Relation(FiniteSet domain, FiniteSet pairs)
    : domain_(std::move(domain)), pairs_(std::move(pairs)) {
  check_pairs(domain_, pairs_);
}

Relation::Relation(FiniteSet domain, const std::vector<std::pair<Value, Value>>& pairs)
    : domain_(std::move(domain)) {
  std::vector<Value> elements;
  elements.reserve(pairs.size());
  for (const auto& [a, b] : pairs) elements.push_back(Value::pair(a, b));
  pairs_ = FiniteSet(std::move(elements));
  check_pairs(domain_, pairs_);
}

bool Relation::contains(const Value& a, const Value& b) const {
  return pairs_.contains(Value::pair(a, b));
}

RelationProperties relation_properties(const Relation& r) {
  RelationProperties props{};

  props.reflexive = true;
  props.irreflexive = true;
  for (const Value& x : r.domain()) {
    if (!r.contains(x, x)) props.reflexive = false;
    if (r.contains(x, x)) props.irreflexive = false;
  }

  props.symmetric = true;
  props.antisymmetric = true;
  props.transitive = true;
  for (const Value& p : r.pairs()) {
    const Value& a = p.first();
    const Value& b = p.second();
    if (!r.contains(b, a)) props.symmetric = false;
    if (!(a == b) && r.contains(b, a)) props.antisymmetric = false;
    for (const Value& q : r.pairs()) {
      if (q.first() == b && !r.contains(a, q.second())) props.transitive = false;
    }
  }

  props.equivalence = props.reflexive && props.symmetric && props.transitive;
  return props;
}

Relation reflexive_closure(const Relation& r) {
  std::vector<Value> pairs(r.pairs().begin(), r.pairs().end());
  for (const Value& x : r.domain()) pairs.push_back(Value::pair(x, x));
  return Relation(r.domain(), FiniteSet(std::move(pairs)));
}

Relation symmetric_closure(const Relation& r) {
  std::vector<Value> pairs(r.pairs().begin(), r.pairs().end());
  for (const Value& p : r.pairs()) pairs.push_back(Value::pair(p.second(), p.first()));
  return Relation(r.domain(), FiniteSet(std::move(pairs)));
}

namespace {

/// Pairs (a, c) with (a, b) in r and (b, c) in s for some b.
FiniteSet compose_pairs(const FiniteSet& r, const FiniteSet& s) {
  std::vector<Value> result;
  for (const Value& p : r) {
    for (const Value& q : s) {
      if (p.second() == q.first()) result.push_back(Value::pair(p.first(), q.second()));
    }
  }
  return FiniteSet(std::move(result));
}

}  // namespace

Relation transitive_closure(const Relation& r) {
  FiniteSet closed = r.pairs();
  for (;;) {
    FiniteSet extended = set_union(closed, compose_pairs(closed, closed));
    if (extended == closed) return Relation(r.domain(), std::move(closed));
    closed = std::move(extended);
  }
}

FiniteSet quotient(const Relation& r) {
  RelationProperties props = relation_properties(r);
  if (!props.reflexive) throw std::domain_error("quotient requires an equivalence relation: not reflexive");
  if (!props.symmetric) throw std::domain_error("quotient requires an equivalence relation: not symmetric");
  if (!props.transitive) throw std::domain_error("quotient requires an equivalence relation: not transitive");

  std::vector<Value> classes;
  for (const Value& x : r.domain()) {
    std::vector<Value> members;
    for (const Value& y : r.domain()) {
      if (r.contains(x, y)) members.push_back(y);
    }
    classes.push_back(Value::set(FiniteSet(std::move(members))));
  }
  return FiniteSet(std::move(classes));
}

}  // namespace slate
