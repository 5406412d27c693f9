#include "slate/numbers.hpp"

#include <stdexcept>
#include <utility>

namespace slate {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n == 2) return true;
  if (n % 2 == 0) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Integer> factorize(Integer n) {
  if (n < 2) throw std::domain_error("factorize requires n >= 2");
  std::vector<Integer> factors;
  Integer d = 2;
  while (d * d <= n) {
    while (n % d == 0) {
      factors.push_back(d);
      n /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) factors.push_back(std::move(n));
  return factors;
}

Integer PrimeStream::next() {
  for (;;) {
    bool divisible = false;
    for (const Integer& p : found_) {
      if (p * p > candidate_) break;
      if (candidate_ % p == 0) {
        divisible = true;
        break;
      }
    }
    if (!divisible) {
      found_.push_back(candidate_);
      Integer prime = candidate_;
      candidate_ += (candidate_ == 2) ? 1 : 2;
      return prime;
    }
    candidate_ += 2;
  }
}

std::vector<Integer> PrimeStream::take(std::size_t k) {
  std::vector<Integer> primes;
  primes.reserve(k);
  for (std::size_t i = 0; i < k; ++i) primes.push_back(next());
  return primes;
}

Rational RationalEnumerator::next() {
  if (!zero_emitted_) {
    zero_emitted_ = true;
    return Rational(0);
  }
  if (pending_negative_) {
    Rational r = *pending_negative_;
    pending_negative_.reset();
    return r;
  }
  for (;;) {
    p_ += 1;
    if (p_ >= diagonal_) {
      diagonal_ += 1;
      p_ = 1;
    }
    Integer q = diagonal_ - p_;
    if (gcd(p_, q) == 1) {
      Rational positive(p_, q);
      pending_negative_ = -positive;
      return positive;
    }
  }
}

std::vector<Rational> RationalEnumerator::take(std::size_t k) {
  std::vector<Rational> values;
  values.reserve(k);
  for (std::size_t i = 0; i < k; ++i) values.push_back(next());
  return values;
}

}  // namespace slate
