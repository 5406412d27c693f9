#pragma once

/**
 * @file numbers.hpp
 * @brief Primality testing, factorization, and unbounded number generators.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "slate/rational.hpp"

namespace slate {

/// True iff n >= 2 and n has no divisor d with 2 <= d <= sqrt(n).
/// Trial division; n < 2 simply returns false.
bool is_prime(const Integer& n);

/// Nondecreasing list of primes whose product is n, with multiplicity.
/// Requires n >= 2.
std::vector<Integer> factorize(Integer n);

/// Yields 2, 3, 5, 7, ... by incremental trial division against the
/// primes already produced. One driver thread per stream.
class PrimeStream {
 public:
  Integer next();
  std::vector<Integer> take(std::size_t k);

 private:
  std::vector<Integer> found_;
  Integer candidate_ = 2;
};

/// Walks the rationals so that every one appears exactly once: 0 first,
/// then along diagonals p+q = 2, 3, 4, ... with p running 1..p+q-1; each
/// reduced p/q contributes +p/q immediately followed by -p/q.
class RationalEnumerator {
 public:
  Rational next();
  std::vector<Rational> take(std::size_t k);

 private:
  bool zero_emitted_ = false;
  std::optional<Rational> pending_negative_;
  Integer diagonal_ = 2;  // current p+q
  Integer p_ = 0;         // last numerator tried on this diagonal
};

}  // namespace slate
