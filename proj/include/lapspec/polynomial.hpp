#pragma once

#include <string>
#include <vector>

#include "lapspec/rational.hpp"

namespace lapspec {

// Exact-rational polynomial, coefficients ascending by degree. The zero polynomial is
// the empty list; otherwise the leading (last) coefficient is nonzero.
struct Polynomial {
    std::vector<Rational> c;

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial from_coeffs(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }
    const Rational& lead() const;
    Rational coeff(int k) const { return k < static_cast<int>(c.size()) ? c[k] : Rational(0); }

    Rational operator()(const Rational& x) const;  // Horner

    bool operator==(const Polynomial& other) const { return c == other.c; }
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, const Polynomial& p);

Polynomial derivative(const Polynomial& p);

// P / X; requires the constant coefficient to be exactly zero (XNotARootError otherwise).
Polynomial divide_by_x(const Polynomial& p);

// Human-readable descending form, e.g. "X^3 - 4*X^2 + 3*X".
std::string to_string(const Polynomial& p);

}  // namespace lapspec
