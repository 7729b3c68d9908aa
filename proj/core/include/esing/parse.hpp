#pragma once

#include <string>

#include "esing/poly_jet.hpp"

namespace esing {

/// Parsed germ expression together with its source and declared order.
struct GermExpr {
    std::string source;
    unsigned order;
    PolyJet jet;
};

/// Reads a polynomial germ. Grammar: variables x1, x2 (aliases x, y),
/// integer and fraction literals a/b, operators + - * ^ (nonnegative
/// integer exponents), parentheses, no implicit multiplication, whitespace
/// insignificant. Terms whose written degree exceeds `order` are rejected
/// with a diagnostic rather than truncated. Requires order >= 5.
GermExpr parse_germ(const std::string& text, unsigned order);

}  // namespace esing
