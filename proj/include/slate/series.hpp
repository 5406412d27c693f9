#pragma once

/**
 * @file series.hpp
 * @brief Formal power series as demand-driven coefficient streams.
 *
 * A series owns a generating rule plus a memoized prefix of coefficients.
 * The rule is invoked once per index, in increasing order, and receives
 * the coefficients already produced for this series, so self-referential
 * recurrences (division, unfolds) stay linear. Coefficients never change
 * once observed. Copies share the cache; extension is serialized by a
 * per-series mutex.
 */

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "slate/polynomial.hpp"
#include "slate/rational.hpp"

namespace slate {

class PowerSeries {
 public:
  /// Produces coefficient `index`; `prefix` holds this series' coefficients
  /// 0..index-1. Called once per index, in order. The span is only valid
  /// for the duration of the call.
  using Rule = std::function<Rational(std::size_t index, std::span<const Rational> prefix)>;

  static PowerSeries from_rule(Rule rule);

  /// Coefficients of p followed by zeros.
  static PowerSeries from_poly(const Polynomial& p);

  static PowerSeries constant(const Rational& c);
  static PowerSeries zero();
  static PowerSeries one();

  /// Coefficient of z^n (memoized).
  Rational at(std::size_t n) const;

  /// First n coefficients; prefix-consistent across calls.
  std::vector<Rational> take(std::size_t n) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);

  /// Cauchy product: coefficient n is sum_{k=0..n} a_k * b_{n-k}.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  /// Long division: q_n = (a_n - sum_{k=1..n} b_k q_{n-k}) / b_0. When b
  /// has leading zeros, a must begin with at least as many: the common
  /// z^k factor cancels. Probes at most `kDivisionProbe` coefficients
  /// of b looking for a nonzero one before giving up.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

  static constexpr std::size_t kDivisionProbe = 64;

 private:
  struct State {
    Rule rule;
    std::vector<Rational> cache;
    std::mutex mutex;
  };
  explicit PowerSeries(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// Coefficient n of the result is (n+1) * s_{n+1}.
PowerSeries derivative(const PowerSeries& s);

/// Coefficient 0 is the integration constant c; coefficient n is s_{n-1}/n.
PowerSeries integral(const PowerSeries& s, const Rational& c = Rational(0));

/// Corecursion: coefficient n is the value produced by the n-th step,
/// with the step function threading its own state.
template <typename State, typename Step>
PowerSeries unfold(State seed, Step step) {
  return PowerSeries::from_rule(
      [state = std::move(seed), step = std::move(step)](std::size_t, auto) mutable {
        auto [value, next] = step(state);
        state = std::move(next);
        return value;
      });
}

/// Deterministic state machine driven by a stream of integer decisions:
/// each step maps (state, decision) to (action, next state).
template <typename State>
struct Process {
  State initial;
  std::function<std::pair<Integer, State>(const State&, const Integer&)> step;
};

/// Actions produced by feeding the decisions through the process, one
/// action per decision. Pure: same decisions, same actions.
template <typename State>
std::vector<Integer> run_process(const Process<State>& p, std::span<const Integer> decisions) {
  std::vector<Integer> actions;
  actions.reserve(decisions.size());
  State state = p.initial;
  for (const Integer& decision : decisions) {
    auto [action, next] = p.step(state, decision);
    actions.push_back(std::move(action));
    state = std::move(next);
  }
  return actions;
}

}  // namespace slate
