#include "slate/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace slate {

namespace {

void strip_trailing_zeros(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
  strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const Rational& c : coeffs_) coeffs.push_back(-c);
  return Polynomial(std::move(coeffs));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> coeffs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(coeffs));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.coeffs_.size());
  for (const Rational& pc : p.coeffs_) coeffs.push_back(c * pc);
  return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
  // Horner on polynomials: ((c_n * q + c_{n-1}) * q + ...) * q + c_0.
  Polynomial acc;
  const auto& coeffs = outer.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * inner + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const auto& coeffs = p.coefficients();
  if (coeffs.size() <= 1) return Polynomial();
  std::vector<Rational> result(coeffs.size() - 1, Rational(0));
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    result[i - 1] = Rational(Integer(static_cast<long>(i))) * coeffs[i];
  }
  return Polynomial(std::move(result));
}

Integer binomial(const Integer& n, const Integer& k) {
  if (n < 0) throw std::domain_error("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  // C(n, k) = prod_{i=1..k} (n-k+i)/i; each partial product divides exactly.
  Integer result = 1;
  for (Integer i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Polynomial binomial_power(const Integer& n) {
  if (n < 0) throw std::domain_error("binomial_power requires n >= 0");
  std::vector<Rational> coeffs;
  for (Integer k = 0; k <= n; ++k) coeffs.push_back(Rational(binomial(n, k)));
  return Polynomial(std::move(coeffs));
}

Sequence difs(const Sequence& s) {
  if (s.size() < 2) return {};
  Sequence result;
  result.reserve(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i) result.push_back(s[i] - s[i - 1]);
  return result;
}

namespace {

bool is_constant_run(const Sequence& s) {
  if (s.size() < 2) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != s[0]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::size_t> degree_by_differences(const Sequence& s) {
  if (s.size() < 2) throw std::domain_error("insufficient data");
  Sequence current = s;
  std::size_t depth = 0;
  while (current.size() >= 2) {
    if (is_constant_run(current)) return depth;
    current = difs(current);
    ++depth;
  }
  return std::nullopt;
}

std::vector<Rational> solve_linear_system(LinearSystem sys) {
  const std::size_t n = sys.matrix.size();
  if (sys.rhs.size() != n) throw std::invalid_argument("rhs length must equal row count");
  for (const auto& row : sys.matrix) {
    if (row.size() != n) throw std::invalid_argument("system must be square");
  }

  auto& m = sys.matrix;
  auto& b = sys.rhs;

  for (std::size_t col = 0; col < n; ++col) {
    // First row at or below the diagonal with a nonzero pivot entry.
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("singular system");
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);

    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
      b[row] -= factor * b[col];
    }
  }

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  return x;
}

Polynomial closed_form(const Sequence& s) {
  std::optional<std::size_t> degree = degree_by_differences(s);
  if (!degree) throw std::domain_error("sequence too short or not polynomial");

  // Vandermonde system on the sample points 0..d: row i is 1, i, i^2, ...
  const std::size_t d = *degree;
  LinearSystem sys;
  sys.matrix.resize(d + 1);
  sys.rhs.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    Rational point(Integer(static_cast<long>(i)));
    Rational power(1);
    sys.matrix[i].resize(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
      sys.matrix[i][j] = power;
      power *= point;
    }
    sys.rhs[i] = s[i];
  }

  Polynomial f(solve_linear_system(std::move(sys)));

  for (std::size_t i = 0; i < s.size(); ++i) {
    if (f(Rational(Integer(static_cast<long>(i)))) != s[i]) {
      throw std::logic_error("closed form failed verification against its samples");
    }
  }
  return f;
}

}  // namespace slate
