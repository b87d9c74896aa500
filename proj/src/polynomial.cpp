#include "lapspec/polynomial.hpp"

#include "lapspec/errors.hpp"

namespace lapspec {

Polynomial Polynomial::from_coeffs(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return Polynomial{std::move(coeffs)};
}

const Rational& Polynomial::lead() const {
    if (is_zero()) throw ZeroPolynomialError("lead coefficient of the zero polynomial");
    return c.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t k = 0; k < a.c.size(); ++k) out[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) out[k] += b.c[k];
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t k = 0; k < a.c.size(); ++k) out[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) out[k] -= b.c[k];
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<Rational> out(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return Polynomial::zero();
    std::vector<Rational> out = p.c;
    for (auto& v : out) v *= s;
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return Polynomial::zero();
    std::vector<Rational> out(p.c.size() - 1);
    for (size_t k = 1; k < p.c.size(); ++k) out[k - 1] = Rational(static_cast<long>(k)) * p.c[k];
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial divide_by_x(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("divide_by_x: zero polynomial");
    if (p.c[0] != 0) throw XNotARootError("divide_by_x: constant coefficient is nonzero");
    return Polynomial::from_coeffs(std::vector<Rational>(p.c.begin() + 1, p.c.end()));
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& a = p.c[k];
        if (a == 0) continue;
        const bool negative = a < 0;
        const Rational mag = negative ? Rational(-a) : a;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = (mag == 1) && k > 0;
        if (!unit) out += to_string(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += "X";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace lapspec
