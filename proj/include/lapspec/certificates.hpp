#pragma once

#include <string>

#include "lapspec/polynomial.hpp"
#include "lapspec/rational.hpp"

namespace lapspec {

// Outcome of an exact decision procedure. `value` is the algebraic witness (a
// discriminant or a resultant) and `verdict` the sign test on it; `context` restates
// the decision for reports. No floating point is involved anywhere downstream of a
// RationalMatrix, so a verdict is a proof, not an estimate.
struct Certificate {
    std::string kind;  // "simple-spectrum" or "subgraph-spectra-disjoint"
    Rational value{0};
    bool verdict = false;
    std::string context;
};

// Characteristic polynomial det(X*I - M), exact. Runs Faddeev-LeVerrier on the
// denominator-cleared integer matrix (all interior divisions are exact over the
// integers) and unscales the coefficients at the end.
Polynomial char_poly(const RationalMatrix& M);

// Determinant of the Sylvester matrix of P and Q: a (degP+degQ)-square matrix holding
// degQ shifted rows of P's coefficients (descending) above degP shifted rows of Q's.
// Constants give Res(c, Q) = c^degQ; zero polynomials are rejected.
Rational sylvester_resultant(const Polynomial& P, const Polynomial& Q);

// (-1)^(d(d-1)/2) * Res(P, P') / lead(P) for d = deg P >= 1. Zero exactly when P has a
// repeated root (over the algebraic closure).
Rational discriminant(const Polynomial& P);

// Simple spectrum iff the characteristic polynomial is squarefree iff its discriminant
// is nonzero.
Certificate simplicity_certificate(const RationalMatrix& L);

// Laplacian of the induced subgraph on every node except drop_node (1-based); labels
// above the dropped one shift down by one. Requires a symmetric Laplacian.
RationalMatrix drop_node_laplacian(const RationalMatrix& L, int drop_node);

// Compares spec(L) against spec(L_H), H = the graph minus drop_node, after dividing
// the structurally forced eigenvalue 0 out of both characteristic polynomials once.
// verdict = true means the remaining spectra share no eigenvalue (resultant nonzero).
// drop_node <= 0 selects the last node.
Certificate subgraph_disjoint_certificate(const RationalMatrix& L, int drop_node = 0);

}  // namespace lapspec
