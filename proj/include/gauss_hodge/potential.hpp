#pragma once

// Polynomial potentials on C^n written as text, e.g. "z*conj(z)",
// "z1^2*conj(z2) + (1/2)*i*z2".  Symbols: z (n = 1 only), z1..zn, zbar,
// zbar1..zbarn, conj(...), i, rational or decimal numbers, + - * ^ and
// parentheses.

#include <string_view>

#include "gauss_hodge/calculus.hpp"

namespace gauss_hodge {

// Throws std::invalid_argument on a syntax error and DegreeOverflow when the
// polynomial exceeds `capacity`.
template <class R>
ComplexField<R> parse_potential(std::string_view text, int n, int capacity);

}  // namespace gauss_hodge
