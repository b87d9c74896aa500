#include "lapspec/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace lapspec {

double to_double(const Rational& r) { return r.convert_to<double>(); }

WeightedGraph to_double(const RationalGraph& g) {
    WeightedGraph out;
    out.n = g.n;
    for (const auto& e : g.edges) out.edges.push_back({e.i, e.j, to_double(e.w)});
    return out;
}

Digraph to_double(const RationalDigraph& dg) {
    Digraph out;
    out.n = dg.n;
    for (const auto& a : dg.arcs) out.arcs.push_back({a.from, a.to, to_double(a.w)});
    return out;
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_weight(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad rational literal '" + text + "'");
        BigInt q(den);
        if (q == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rational(BigInt(num), q);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw ParseError("bad decimal literal '" + text + "'");
        BigInt scale = 1;
        for (size_t k = 0; k < frac.size(); ++k) scale *= 10;
        BigInt units = whole.empty() ? BigInt(0) : BigInt(whole);
        value = Rational(units * scale + BigInt(frac), scale);
    } else {
        if (!all_digits(s)) throw ParseError("bad weight literal '" + text + "'");
        value = Rational(BigInt(s));
    }
    return negative ? -value : value;
}

Rational rationalize(double x, long max_den) {
    if (!std::isfinite(x)) throw InvalidArgumentError("rationalize: non-finite input");
    if (max_den < 1) throw InvalidArgumentError("rationalize: max_den must be >= 1");
    const bool neg = x < 0;
    double v = std::fabs(x);
    // Continued-fraction convergents p/q; stop before the denominator bound, then take
    // the best semiconvergent still within the bound.
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double aint = std::floor(frac);
        if (aint > 1e18) break;
        long a = static_cast<long>(aint);
        if (q0 + a * q1 > max_den || (p1 > 0 && q1 > 0 && a > (1e18 - p0) / std::max(1L, p1))) {
            // Largest admissible partial step (semiconvergent).
            long amax = (max_den - q0) / std::max(1L, q1);
            if (amax >= 1) {
                long pn = p0 + amax * p1, qn = q0 + amax * q1;
                // Keep the semiconvergent only if it is actually closer.
                double cur = q1 ? std::fabs(v - double(p1) / double(q1)) : 1e300;
                if (std::fabs(v - double(pn) / double(qn)) < cur) {
                    p1 = pn;
                    q1 = qn;
                }
            }
            break;
        }
        long pn = p0 + a * p1, qn = q0 + a * q1;
        p0 = p1;
        q0 = q1;
        p1 = pn;
        q1 = qn;
        double rem = frac - aint;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? -r : r;
}

RationalGraph rationalize(const WeightedGraph& g, long max_den) {
    RationalGraph out;
    out.n = g.n;
    for (const auto& e : g.edges) {
        Rational w = rationalize(e.w, max_den);
        if (!(w > 0))
            throw InvalidArgumentError("rationalize: weight on edge (" + std::to_string(e.i) + "," +
                                       std::to_string(e.j) + ") rounded to a nonpositive value");
        out.edges.push_back({e.i, e.j, w});
    }
    return out;
}

RationalDigraph rationalize(const Digraph& dg, long max_den) {
    RationalDigraph out;
    out.n = dg.n;
    for (const auto& a : dg.arcs) {
        Rational w = rationalize(a.w, max_den);
        if (!(w > 0))
            throw InvalidArgumentError("rationalize: weight on arc " + std::to_string(a.from) + "->" +
                                       std::to_string(a.to) + " rounded to a nonpositive value");
        out.arcs.push_back({a.from, a.to, w});
    }
    return out;
}

}  // namespace lapspec
