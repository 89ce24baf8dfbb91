#pragma once

#include "towerlab/poly.hpp"

#include <map>
#include <string>
#include <utility>

namespace towerlab {

/// Exponent map (e1, e2) -> coefficient for an expression in up to two
/// named variables over K. Grammar: sums of terms, terms are '*'-joined
/// factors, factors are integers, the field generator symbol "w" (with an
/// optional power), a variable (with an optional power), or a
/// parenthesized subexpression. Variables are case-sensitive.
std::map<std::pair<int, int>, FieldElement> parse_poly_expr(const FieldPtr& K,
                                                            const std::string& text,
                                                            const std::string& var1,
                                                            const std::string& var2);

/// Univariate convenience wrapper; rejects any second variable.
Polynomial parse_polynomial(const FieldPtr& K, const std::string& text,
                            const std::string& var = "x");

}  // namespace towerlab
