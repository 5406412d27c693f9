#pragma once

/**
 * @file function.hpp
 * @brief Functions between finite sets as explicit tables, with
 *        injectivity/surjectivity checks, composition, and inverses.
 */

#include <map>

#include "slate/finite.hpp"

namespace slate {

class FiniteFunction {
 public:
  /// The table must assign exactly one codomain member to each domain
  /// member; totality and codomain membership are enforced.
  FiniteFunction(FiniteSet domain, FiniteSet codomain, std::map<Value, Value> table);

  const FiniteSet& domain() const { return domain_; }
  const FiniteSet& codomain() const { return codomain_; }
  const std::map<Value, Value>& table() const { return table_; }

  /// f(x); x outside the domain is a domain error.
  const Value& operator()(const Value& x) const;

  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) = default;

 private:
  FiniteSet domain_;
  FiniteSet codomain_;
  std::map<Value, Value> table_;
};

FiniteFunction identity_on(const FiniteSet& s);

bool is_injective(const FiniteFunction& f);
bool is_surjective(const FiniteFunction& f);
bool is_bijective(const FiniteFunction& f);

/// { f(x) : x in domain }.
FiniteSet image(const FiniteFunction& f);

/// x |-> g(f(x)) on f's domain; requires codomain(f) to be a subset of
/// domain(g).
FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f);

/// Inverse table of a bijection; anything else is a domain error.
FiniteFunction invert(const FiniteFunction& f);

/// True iff g(f(x)) = x for every x in f's domain.
bool is_left_inverse(const FiniteFunction& g, const FiniteFunction& f);

}  // namespace slate
