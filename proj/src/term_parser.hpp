#pragma once

#include <functional>
#include <string_view>

#include "milnor_hodge/rational.hpp"

namespace milnor_hodge::detail {

/// Parses a signed sum of terms "c*v^e" in one variable v. Coefficients are
/// rationals "a" or "a/b"; exponents are "k", "-k" or parenthesized "(a/b)".
/// A bare coefficient is a term with exponent 0; a bare "v" has exponent 1.
/// Calls on_term once per term. Throws ParseError.
void parse_term_sum(std::string_view text, char variable,
                    const std::function<void(const Rational& coeff, const Rational& exponent)>& on_term);

}  // namespace milnor_hodge::detail
