#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense polynomials over Rational, difference sequences, and the
 *        difference method for recovering closed forms of sequences.
 *
 * A polynomial is its ascending coefficient list: index i holds the
 * coefficient of x^i. The list is canonical -- the last entry is nonzero
 * and the zero polynomial is the empty list, so the degree of a nonzero
 * polynomial is length - 1 and the zero polynomial has no degree.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "slate/rational.hpp"

namespace slate {

class Polynomial {
 public:
  /// The zero polynomial.
  Polynomial() = default;

  /// From ascending coefficients; trailing zeros are stripped.
  explicit Polynomial(std::vector<Rational> ascending_coefficients);

  static Polynomial constant(Rational c);
  static Polynomial variable();  // x

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;

  /// Coefficient of x^i, zero beyond the stored length.
  Rational coeff(std::size_t i) const;

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficients of outer(inner(x)).
Polynomial compose(const Polynomial& outer, const Polynomial& inner);

/// Formal derivative.
Polynomial derivative(const Polynomial& p);

/// C(n, k); zero outside 0 <= k <= n. Requires n >= 0.
Integer binomial(const Integer& n, const Integer& k);

/// Coefficients of (x+1)^n: entry k is C(n, k). Requires n >= 0.
Polynomial binomial_power(const Integer& n);

/// A finite run of samples f(0), f(1), ..., f(n).
using Sequence = std::vector<Rational>;

/// Consecutive differences; empty and singleton inputs give the empty
/// sequence, otherwise the result is one element shorter.
Sequence difs(const Sequence& s);

/// Smallest d >= 0 such that d applications of difs leave a constant
/// sequence of length >= 2, or nullopt if the sequence runs out before
/// constancy is witnessed. Requires |s| >= 2.
std::optional<std::size_t> degree_by_differences(const Sequence& s);

struct LinearSystem {
  std::vector<std::vector<Rational>> matrix;  // rows x cols, rectangular
  std::vector<Rational> rhs;                  // length = rows
};

/// Exact Gaussian elimination with back-substitution; the pivot is the
/// first row with a nonzero entry in the pivot column. Requires a square
/// system; a singular matrix is a domain error.
std::vector<Rational> solve_linear_system(LinearSystem sys);

/// Babbage's difference method: find the degree d by difference analysis,
/// solve the (d+1)x(d+1) system f(i) = s_i for i = 0..d, and check the
/// result against every given sample. Requires |s| >= 2.
Polynomial closed_form(const Sequence& s);

}  // namespace slate
