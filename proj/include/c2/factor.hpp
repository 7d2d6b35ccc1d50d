#pragma once

#include "c2/polynomial.hpp"

#include <optional>
#include <utility>

namespace c2 {

// Rational gcd scaled to primitive integer form, positive leading coefficient
// under the canonical term order. gcd(f, 0) is the normalized f.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

// Integer gcd including numeric content: gcd_full(6*a1, 4) = 2.
Polynomial gcd_full(const Polynomial& f, const Polynomial& g);

// Exact square root over the integers, if one exists.
std::optional<Polynomial> poly_sqrt(const Polynomial& f);

// Factorization of f (deg_x f <= 2) into two factors of degree <= 1 in x.
// For deg_x f <= 1 the trivial split (f, 1) is returned. Result is
// order-normalized. Throws on deg_x f > 2.
std::optional<std::pair<Polynomial, Polynomial>> split_quadratic(const Polynomial& f, int x);

// Limited search for h = f^2 * g with deg f >= 1.
std::optional<std::pair<Polynomial, Polynomial>> square_split(const Polynomial& h);

} // namespace c2
