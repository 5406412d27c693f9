#pragma once

/**
 * @file relation.hpp
 * @brief Binary relations on a declared finite domain: property checks,
 *        closures, and quotients by equivalence relations.
 *
 * A relation carries its domain explicitly; reflexivity cannot be decided
 * from the pairs alone.
 */

#include "slate/finite.hpp"

namespace slate {

class Relation {
 public:
  /// Pairs are (a, b) values with both components in the domain; anything
  /// else is rejected.
  Relation(FiniteSet domain, FiniteSet pairs);
  Relation(FiniteSet domain, const std::vector<std::pair<Value, Value>>& pairs);

  const FiniteSet& domain() const { return domain_; }
  const FiniteSet& pairs() const { return pairs_; }
  bool contains(const Value& a, const Value& b) const;

  friend bool operator==(const Relation& a, const Relation& b) = default;

 private:
  FiniteSet domain_;
  FiniteSet pairs_;
};

struct RelationProperties {
  bool reflexive;
  bool irreflexive;
  bool symmetric;
  bool antisymmetric;
  bool transitive;
  bool equivalence;  // reflexive && symmetric && transitive
};

RelationProperties relation_properties(const Relation& r);

/// Smallest supersets of r with the named property, on the same domain.
Relation reflexive_closure(const Relation& r);
Relation symmetric_closure(const Relation& r);
/// Iterates compose-and-union until a fixpoint.
Relation transitive_closure(const Relation& r);

/// Equivalence classes of an equivalence relation; a non-equivalence
/// input is a domain error naming the property that failed.
FiniteSet quotient(const Relation& r);

}  // namespace slate
