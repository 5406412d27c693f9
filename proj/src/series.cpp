#include "slate/series.hpp"

#include <stdexcept>

namespace slate {

PowerSeries PowerSeries::from_rule(Rule rule) {
  auto state = std::make_shared<State>();
  state->rule = std::move(rule);
  return PowerSeries(std::move(state));
}

PowerSeries PowerSeries::from_poly(const Polynomial& p) {
  return from_rule([p](std::size_t n, auto) { return p.coeff(n); });
}

PowerSeries PowerSeries::constant(const Rational& c) {
  return from_rule([c](std::size_t n, auto) { return n == 0 ? c : Rational(0); });
}

PowerSeries PowerSeries::zero() { return constant(Rational(0)); }

PowerSeries PowerSeries::one() { return constant(Rational(1)); }

Rational PowerSeries::at(std::size_t n) const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto& cache = state_->cache;
  while (cache.size() <= n) {
    // The rule may pull on other series but never re-enters this one;
    // its own lower coefficients arrive through the prefix span.
    Rational next = state_->rule(cache.size(), std::span<const Rational>(cache));
    cache.push_back(std::move(next));
  }
  return cache[n];
}

std::vector<Rational> PowerSeries::take(std::size_t n) const {
  std::vector<Rational> prefix;
  prefix.reserve(n);
  for (std::size_t i = 0; i < n; ++i) prefix.push_back(at(i));
  return prefix;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  return PowerSeries::from_rule([a, b](std::size_t n, auto) { return a.at(n) + b.at(n); });
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  return PowerSeries::from_rule([a, b](std::size_t n, auto) {
    Rational acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += a.at(k) * b.at(n - k);
    return acc;
  });
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  // Locate the leading nonzero coefficient of the divisor.
  std::size_t shift = 0;
  while (shift < PowerSeries::kDivisionProbe && b.at(shift).is_zero()) ++shift;
  if (shift == PowerSeries::kDivisionProbe) {
    throw std::domain_error("series division: divisor has no nonzero coefficient within probe bound");
  }
  for (std::size_t i = 0; i < shift; ++i) {
    if (!a.at(i).is_zero()) {
      throw std::domain_error("series division: divisor vanishes at z = 0 but dividend does not");
    }
  }
  const Rational lead = b.at(shift);
  return PowerSeries::from_rule([a, b, shift, lead](std::size_t n, std::span<const Rational> q) {
    Rational acc = a.at(n + shift);
    for (std::size_t k = 1; k <= n; ++k) acc -= b.at(k + shift) * q[n - k];
    return acc / lead;
  });
}

PowerSeries derivative(const PowerSeries& s) {
  return PowerSeries::from_rule([s](std::size_t n, auto) {
    return Rational(Integer(static_cast<long>(n + 1))) * s.at(n + 1);
  });
}

PowerSeries integral(const PowerSeries& s, const Rational& c) {
  return PowerSeries::from_rule([s, c](std::size_t n, auto) {
    if (n == 0) return c;
    return s.at(n - 1) / Rational(Integer(static_cast<long>(n)));
  });
}

}  // namespace slate
