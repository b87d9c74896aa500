#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>
#include <string>

#include "lapspec/graph.hpp"

namespace lapspec {

// Exact scalar mode. Conversion Rational -> double is explicit (to_double);
// double -> Rational never happens implicitly: weights enter the rational world either
// from exact file literals (parse_weight) or through the documented rounding step
// (rationalize), both below.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RationalGraph = WeightedGraphT<Rational>;
using RationalDigraph = DigraphT<Rational>;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using BigIntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

double to_double(const Rational& r);

WeightedGraph to_double(const RationalGraph& g);
Digraph to_double(const RationalDigraph& dg);

// "p/q" when q != 1, plain integer otherwise.
std::string to_string(const Rational& r);

// Parses an exact weight literal: "p/q", an integer, or a plain decimal like "0.125"
// (converted exactly, 125/1000 reduced). Scientific notation is not accepted.
// Throws ParseError on anything else.
Rational parse_weight(const std::string& text);

// Best rational approximation with denominator <= max_den (continued-fraction /
// Stern-Brocot walk). Exact for inputs that already are such rationals.
Rational rationalize(double x, long max_den = 1000000);

// Round every weight; support and positivity are preserved for positive inputs.
RationalGraph rationalize(const WeightedGraph& g, long max_den = 1000000);
RationalDigraph rationalize(const Digraph& dg, long max_den = 1000000);

}  // namespace lapspec
