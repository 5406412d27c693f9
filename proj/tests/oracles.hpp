#pragma once

// Independent reference implementations and deterministic random input
// generators used to cross-check the library. Everything here is coded
// against the public interfaces only and deliberately takes a different
// algorithmic route than the library under test.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slate/finite.hpp"
#include "slate/formula.hpp"
#include "slate/function.hpp"
#include "slate/numbers.hpp"
#include "slate/polynomial.hpp"
#include "slate/rational.hpp"
#include "slate/relation.hpp"

namespace oracle {

// -------------------------------------------------------------- numbers

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Primes up to and including `limit`, by sieve of Eratosthenes.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (composite[n]) continue;
    primes.push_back(n);
    for (std::uint64_t m = n * n; m <= limit; m += n) composite[m] = true;
  }
  return primes;
}

/// Nondecreasing prime factors by repeatedly peeling the smallest divisor.
inline std::vector<std::uint64_t> trial_division_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  std::uint64_t d = 2;
  while (n > 1) {
    while (n % d == 0) {
      factors.push_back(d);
      n /= d;
    }
    ++d;
  }
  return factors;
}

// ---------------------------------------------------------- polynomials

/// Row n of Pascal's triangle, built purely by addition.
inline std::vector<slate::Integer> pascal_row(std::size_t n) {
  std::vector<slate::Integer> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<slate::Integer> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = std::move(next);
  }
  return row;
}

/// Index-wise difference sequence, loop-coded.
inline slate::Sequence indexwise_difs(const slate::Sequence& s) {
  slate::Sequence out;
  for (std::size_t i = 1; i < s.size(); ++i) out.push_back(s[i] - s[i - 1]);
  return out;
}

using Matrix = std::vector<std::vector<slate::Rational>>;

/// Cofactor expansion along the first row.
inline slate::Rational determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return slate::Rational(1);
  if (n == 1) return m[0][0];
  slate::Rational det(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<slate::Rational> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    slate::Rational term = m[0][j] * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Cramer's rule; requires a nonsingular square matrix.
inline std::vector<slate::Rational> cramer_solve(
    const Matrix& m, const std::vector<slate::Rational>& rhs) {
  slate::Rational det = determinant(m);
  if (det.is_zero()) throw std::domain_error("cramer_solve: singular matrix");
  std::vector<slate::Rational> solution;
  for (std::size_t j = 0; j < m.size(); ++j) {
    Matrix replaced = m;
    for (std::size_t r = 0; r < m.size(); ++r) replaced[r][j] = rhs[r];
    solution.push_back(determinant(replaced) / det);
  }
  return solution;
}

// ---------------------------------------------------------------- logic

inline void collect_atoms(const slate::Formula& f, std::set<std::string>& into) {
  using Kind = slate::Formula::Kind;
  switch (f.kind()) {
    case Kind::Atom:
      into.insert(f.name());
      break;
    case Kind::Constant:
      break;
    case Kind::Not:
      collect_atoms(f.child(), into);
      break;
    default:
      collect_atoms(f.lhs(), into);
      collect_atoms(f.rhs(), into);
      break;
  }
}

inline bool eval_formula(const slate::Formula& f,
                         const std::map<std::string, bool>& env) {
  using Kind = slate::Formula::Kind;
  switch (f.kind()) {
    case Kind::Atom:
      return env.at(f.name());
    case Kind::Constant:
      return f.value();
    case Kind::Not:
      return !eval_formula(f.child(), env);
    case Kind::And:
      return eval_formula(f.lhs(), env) && eval_formula(f.rhs(), env);
    case Kind::Or:
      return eval_formula(f.lhs(), env) || eval_formula(f.rhs(), env);
    case Kind::Implies:
      return !eval_formula(f.lhs(), env) || eval_formula(f.rhs(), env);
    case Kind::Iff:
      return eval_formula(f.lhs(), env) == eval_formula(f.rhs(), env);
  }
  throw std::logic_error("unreachable");
}

/// Runs `visit` on every assignment over `names`, odometer style;
/// returns false as soon as `visit` does.
template <typename Visit>
bool for_all_valuations(const std::set<std::string>& names, Visit visit) {
  std::vector<std::string> order(names.begin(), names.end());
  std::map<std::string, bool> env;
  for (const auto& name : order) env[name] = false;
  while (true) {
    if (!visit(env)) return false;
    std::size_t i = 0;
    for (; i < order.size(); ++i) {
      if (!env[order[i]]) {
        env[order[i]] = true;
        break;
      }
      env[order[i]] = false;
    }
    if (i == order.size()) return true;
  }
}

inline bool valid(const slate::Formula& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  return for_all_valuations(
      names, [&](const std::map<std::string, bool>& env) { return eval_formula(f, env); });
}

inline bool satisfiable(const slate::Formula& f) {
  std::set<std::string> names;
  collect_atoms(f, names);
  return !for_all_valuations(names, [&](const std::map<std::string, bool>& env) {
    return !eval_formula(f, env);
  });
}

inline bool equivalent(const slate::Formula& f, const slate::Formula& g) {
  std::set<std::string> names;
  collect_atoms(f, names);
  collect_atoms(g, names);
  return for_all_valuations(names, [&](const std::map<std::string, bool>& env) {
    return eval_formula(f, env) == eval_formula(g, env);
  });
}

// ---------------------------------------------------- finite structures

/// Transitive closure as pairwise reachability: (a, b) is in the closure
/// iff some path of length >= 1 leads from a to b.
inline slate::Relation reachability_closure(const slate::Relation& r) {
  std::vector<std::pair<slate::Value, slate::Value>> closure;
  for (const auto& start : r.domain()) {
    std::set<slate::Value> reached;
    std::vector<slate::Value> frontier{start};
    while (!frontier.empty()) {
      slate::Value current = frontier.back();
      frontier.pop_back();
      for (const auto& next : r.domain()) {
        if (r.contains(current, next) && reached.insert(next).second) {
          frontier.push_back(next);
        }
      }
    }
    for (const auto& end : reached) closure.emplace_back(start, end);
  }
  return slate::Relation(r.domain(), closure);
}

inline bool injective(const slate::FiniteFunction& f) {
  const auto& elems = f.domain().elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (f(elems[i]) == f(elems[j])) return false;
    }
  }
  return true;
}

/// True iff `classes` is a partition of `domain`: nonempty set-valued
/// elements, pairwise disjoint, union exactly the domain.
inline bool is_partition(const slate::FiniteSet& classes,
                         const slate::FiniteSet& domain) {
  std::set<slate::Value> seen;
  for (const auto& cls : classes) {
    if (cls.kind() != slate::Value::Kind::Set) return false;
    if (cls.as_set().empty()) return false;
    for (const auto& member : cls.as_set()) {
      if (!seen.insert(member).second) return false;  // overlap
    }
  }
  if (seen.size() != domain.size()) return false;
  for (const auto& member : domain) {
    if (!seen.contains(member)) return false;
  }
  return true;
}

// ----------------------------------------------------------- generators

inline slate::Rational random_rational(std::mt19937_64& rng, int num_bound,
                                       int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return slate::Rational(num(rng), den(rng));
}

inline slate::Polynomial random_polynomial(std::mt19937_64& rng,
                                           std::size_t max_degree,
                                           int num_bound, int den_bound) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<slate::Rational> coeffs(deg(rng) + 1, slate::Rational(0));
  for (auto& c : coeffs) c = random_rational(rng, num_bound, den_bound);
  return slate::Polynomial(coeffs);
}

inline slate::Sequence random_sequence(std::mt19937_64& rng, std::size_t length,
                                       int num_bound, int den_bound) {
  slate::Sequence s;
  for (std::size_t i = 0; i < length; ++i) {
    s.push_back(random_rational(rng, num_bound, den_bound));
  }
  return s;
}

/// Formula over atoms {p, q, r, s} with the given maximum depth.
inline slate::Formula random_formula(std::mt19937_64& rng, int max_depth) {
  static const std::vector<std::string> kAtoms{"p", "q", "r", "s"};
  std::uniform_int_distribution<int> shape(0, max_depth <= 0 ? 1 : 7);
  std::uniform_int_distribution<std::size_t> atom(0, kAtoms.size() - 1);
  switch (shape(rng)) {
    case 0:
      return slate::Formula::atom(kAtoms[atom(rng)]);
    case 1: {
      std::uniform_int_distribution<int> coin(0, 9);
      // Constants are rare so random formulas stay atom-driven.
      if (coin(rng) == 0) return slate::Formula::constant(coin(rng) % 2 == 0);
      return slate::Formula::atom(kAtoms[atom(rng)]);
    }
    case 2:
      return slate::Formula::negation(random_formula(rng, max_depth - 1));
    case 3:
      return slate::Formula::conjunction(random_formula(rng, max_depth - 1),
                                         random_formula(rng, max_depth - 1));
    case 4:
      return slate::Formula::disjunction(random_formula(rng, max_depth - 1),
                                         random_formula(rng, max_depth - 1));
    case 5:
      return slate::Formula::implication(random_formula(rng, max_depth - 1),
                                         random_formula(rng, max_depth - 1));
    default:
      return slate::Formula::equivalence(random_formula(rng, max_depth - 1),
                                         random_formula(rng, max_depth - 1));
  }
}

/// Relation on {0, ..., size-1} with each pair present with probability 1/3.
inline slate::Relation random_relation(std::mt19937_64& rng, int size) {
  std::vector<slate::Value> members;
  for (int i = 0; i < size; ++i) members.push_back(slate::Value(i));
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::pair<slate::Value, slate::Value>> pairs;
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (coin(rng) == 0) pairs.emplace_back(a, b);
    }
  }
  return slate::Relation(slate::FiniteSet(members), pairs);
}

/// Random equivalence relation on {0, ..., size-1}: assign members to
/// blocks, then relate members of the same block.
inline slate::Relation random_equivalence(std::mt19937_64& rng, int size) {
  std::uniform_int_distribution<int> block(0, std::max(1, size / 2));
  std::vector<int> label(static_cast<std::size_t>(size));
  for (auto& l : label) l = block(rng);
  std::vector<slate::Value> members;
  for (int i = 0; i < size; ++i) members.push_back(slate::Value(i));
  std::vector<std::pair<slate::Value, slate::Value>> pairs;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (label[i] == label[j]) pairs.emplace_back(members[i], members[j]);
    }
  }
  return slate::Relation(slate::FiniteSet(members), pairs);
}

/// Random function from {0..domain_size-1} to symbols a..{codomain_size}.
inline slate::FiniteFunction random_function(std::mt19937_64& rng,
                                             int domain_size,
                                             int codomain_size) {
  std::vector<slate::Value> dom, cod;
  for (int i = 0; i < domain_size; ++i) dom.push_back(slate::Value(i));
  for (int i = 0; i < codomain_size; ++i) {
    cod.push_back(slate::Value(std::string(1, static_cast<char>('a' + i))));
  }
  std::uniform_int_distribution<int> pick(0, codomain_size - 1);
  std::map<slate::Value, slate::Value> table;
  for (const auto& x : dom) table.emplace(x, cod[pick(rng)]);
  return slate::FiniteFunction(slate::FiniteSet(dom), slate::FiniteSet(cod),
                               std::move(table));
}

/// Random bijection on {0..size-1} via a shuffled image list.
inline slate::FiniteFunction random_bijection(std::mt19937_64& rng, int size) {
  std::vector<slate::Value> dom;
  for (int i = 0; i < size; ++i) dom.push_back(slate::Value(i));
  std::vector<slate::Value> img = dom;
  std::shuffle(img.begin(), img.end(), rng);
  std::map<slate::Value, slate::Value> table;
  for (int i = 0; i < size; ++i) table.emplace(dom[i], img[i]);
  return slate::FiniteFunction(slate::FiniteSet(dom), slate::FiniteSet(dom),
                               std::move(table));
}

/// Invertible rational matrix with small integer entries; retries until
/// the cofactor determinant is nonzero.
inline Matrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-9, 9);
  while (true) {
    Matrix m(n, std::vector<slate::Rational>(n, slate::Rational(0)));
    for (auto& row : m) {
      for (auto& cell : row) cell = slate::Rational(entry(rng));
    }
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace oracle
