#pragma once

/**
 * @file text.hpp
 * @brief Text forms for the library's values: rational literals, sample
 *        sequences, polynomial expressions, and set/relation literals.
 */

#include <string>
#include <string_view>

#include "slate/finite.hpp"
#include "slate/polynomial.hpp"
#include "slate/rational.hpp"
#include "slate/relation.hpp"

namespace slate {

/// "p/q" with optional leading '-', or a bare integer meaning p/1.
Rational parse_rational(std::string_view text);

/// Comma- or whitespace-separated rational literals.
Sequence parse_sequence(std::string_view text);

/// Signed terms `c`, `c*x`, `c*x^k`, `x`, `x^k` joined by '+'/'-';
/// duplicate powers are summed. `z` is accepted as an alias for `x`.
Polynomial parse_poly(std::string_view text);

/// Set literal: `{1, 2, 3}`. Elements are integers, symbols
/// ([a-z][a-zA-Z0-9]*), pairs `(a, b)`, or nested set literals.
FiniteSet parse_set(std::string_view text);

/// Relation literal: `{(1,2), (2,3)} on {1,2,3}`.
Relation parse_relation(std::string_view text);

/// Human order, highest power first: `3*x^2 - 1/2*x + 4`; the zero
/// polynomial renders as `0`. parse_poly inverts this rendering.
std::string render_poly(const Polynomial& p);

/// Comma-separated rational literals: `1, 3, 5, 7`.
std::string render_sequence(const Sequence& s);

}  // namespace slate
