#include "slate/function.hpp"

#include <stdexcept>
#include <utility>

namespace slate {

FiniteFunction::FiniteFunction(FiniteSet domain, FiniteSet codomain, std::map<Value, Value> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size()) {
    throw std::domain_error("function table must cover the domain exactly");
  }
  for (const auto& [x, y] : table_) {
    if (!domain_.contains(x)) throw std::domain_error("table key outside domain: " + x.str());
    if (!codomain_.contains(y)) throw std::domain_error("table value outside codomain: " + y.str());
  }
}

const Value& FiniteFunction::operator()(const Value& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw std::domain_error("argument outside domain: " + x.str());
  return it->second;
}

FiniteFunction identity_on(const FiniteSet& s) {
  std::map<Value, Value> table;
  for (const Value& x : s) table.emplace(x, x);
  return FiniteFunction(s, s, std::move(table));
}

bool is_injective(const FiniteFunction& f) {
  FiniteSet seen = image(f);
  return seen.size() == f.domain().size();
}

bool is_surjective(const FiniteFunction& f) { return image(f) == f.codomain(); }

bool is_bijective(const FiniteFunction& f) { return is_injective(f) && is_surjective(f); }

FiniteSet image(const FiniteFunction& f) {
  std::vector<Value> values;
  values.reserve(f.table().size());
  for (const auto& [x, y] : f.table()) values.push_back(y);
  return FiniteSet(std::move(values));
}

FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f) {
  if (!is_subset(f.codomain(), g.domain())) {
    throw std::domain_error("compose: codomain of f is not contained in domain of g");
  }
  std::map<Value, Value> table;
  for (const Value& x : f.domain()) table.emplace(x, g(f(x)));
  return FiniteFunction(f.domain(), g.codomain(), std::move(table));
}

FiniteFunction invert(const FiniteFunction& f) {
  if (!is_bijective(f)) throw std::domain_error("invert requires a bijection");
  std::map<Value, Value> table;
  for (const auto& [x, y] : f.table()) table.emplace(y, x);
  return FiniteFunction(f.codomain(), f.domain(), std::move(table));
}

bool is_left_inverse(const FiniteFunction& g, const FiniteFunction& f) {
  for (const Value& x : f.domain()) {
    if (!(g(f(x)) == x)) return false;
  }
  return true;
}

}  // namespace slate
