#include "lapspec/certificates.hpp"

#include <utility>

#include "lapspec/errors.hpp"
#include "lapspec/laplacian.hpp"

namespace lapspec {

namespace {

BigInt int_pow(BigInt base, int e) {
    BigInt out(1);
    for (; e > 0; e >>= 1, base *= base)
        if (e & 1) out *= base;
    return out;
}

Rational rational_pow(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    return Rational(int_pow(numerator(base), e), int_pow(denominator(base), e));
}

// Exact determinant: clear each row to integers (tracking the factor product), then
// Bareiss fraction-free elimination, where every interior division is exact.
Rational det_exact(RationalMatrix S) {
    const int n = static_cast<int>(S.rows());
    if (n == 0) return Rational(1);
    BigIntMatrix B(n, n);
    BigInt row_factors(1);
    for (int r = 0; r < n; ++r) {
        BigInt d(1);
        for (int c = 0; c < n; ++c) d = lcm(d, denominator(S(r, c)));
        for (int c = 0; c < n; ++c) B(r, c) = numerator(S(r, c)) * (d / denominator(S(r, c)));
        row_factors *= d;
    }
    int sign = 1;
    BigInt prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (B(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (B(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Rational(0);
            B.row(k).swap(B.row(piv));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) B(i, j) = (B(k, k) * B(i, j) - B(i, k) * B(k, j)) / prev;
            B(i, k) = 0;
        }
        prev = B(k, k);
    }
    return Rational(sign * B(n - 1, n - 1), row_factors);
}

}  // namespace

Polynomial char_poly(const RationalMatrix& M) {
    if (M.rows() != M.cols()) throw InvalidArgumentError("char_poly: matrix must be square");
    const int n = static_cast<int>(M.rows());
    if (n == 0) return Polynomial::from_coeffs({Rational(1)});

    BigInt D(1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) D = lcm(D, denominator(M(r, c)));
    BigIntMatrix A(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) A(r, c) = numerator(M(r, c)) * (D / denominator(M(r, c)));

    // Faddeev-LeVerrier on A = D*M: c_n = 1, N_0 = I, then for k = 1..n
    //   c_{n-k} = -tr(A N_{k-1}) / k  (the division has no remainder),
    //   N_k     = A N_{k-1} + c_{n-k} I.
    std::vector<BigInt> chat(static_cast<size_t>(n) + 1);
    chat[n] = 1;
    BigIntMatrix N = BigIntMatrix::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        BigIntMatrix AN = A * N;
        BigInt tr(0);
        for (int i = 0; i < n; ++i) tr += AN(i, i);
        if (tr % k != 0) throw Error("char_poly: inexact interior division, matrix arithmetic is corrupt");
        chat[n - k] = -tr / k;
        if (k < n) {
            N = std::move(AN);
            for (int i = 0; i < n; ++i) N(i, i) += chat[n - k];
        }
    }

    // Eigenvalues of A are D times those of M, so the X^k coefficient unscales by D^(n-k).
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    BigInt pw(1);
    for (int k = n; k >= 0; --k) {
        coeffs[k] = Rational(chat[k], pw);
        pw *= D;
    }
    return Polynomial::from_coeffs(std::move(coeffs));
}

Rational sylvester_resultant(const Polynomial& P, const Polynomial& Q) {
    if (P.is_zero() || Q.is_zero())
        throw ZeroPolynomialError("sylvester_resultant: resultant with the zero polynomial");
    const int m = P.degree(), n = Q.degree();
    if (m == 0) return rational_pow(P.c[0], n);
    if (n == 0) return rational_pow(Q.c[0], m);

    RationalMatrix S = RationalMatrix::Zero(m + n, m + n);
    for (int r = 0; r < n; ++r)  // n shifted rows of P, coefficients descending
        for (int t = 0; t <= m; ++t) S(r, r + t) = P.c[m - t];
    for (int r = 0; r < m; ++r)  // m shifted rows of Q below them
        for (int t = 0; t <= n; ++t) S(n + r, r + t) = Q.c[n - t];
    return det_exact(std::move(S));
}

Rational discriminant(const Polynomial& P) {
    const int d = P.degree();
    if (d < 1) throw ZeroPolynomialError("discriminant: defined for degree >= 1 only");
    const Rational res = sylvester_resultant(P, derivative(P));
    const Rational signed_res = (d * (d - 1) / 2) % 2 == 0 ? res : Rational(-res);
    return signed_res / P.lead();
}

Certificate simplicity_certificate(const RationalMatrix& L) {
    Certificate cert;
    cert.kind = "simple-spectrum";
    cert.value = discriminant(char_poly(L));
    cert.verdict = cert.value != 0;
    cert.context = cert.verdict
                       ? "discriminant of the characteristic polynomial is nonzero, so every "
                         "eigenvalue is simple"
                       : "discriminant of the characteristic polynomial vanishes, so some "
                         "eigenvalue is repeated";
    return cert;
}

RationalMatrix drop_node_laplacian(const RationalMatrix& L, int drop_node) {
    const RationalGraph g = graph_from_laplacian(L);
    if (drop_node <= 0) drop_node = g.n;
    if (drop_node > g.n) throw InvalidArgumentError("drop_node_laplacian: node out of range");
    if (g.n < 2) throw InvalidArgumentError("drop_node_laplacian: nothing left after the drop");
    RationalGraph h;
    h.n = g.n - 1;
    for (const auto& e : g.edges) {
        if (e.i == drop_node || e.j == drop_node) continue;
        h.edges.push_back({e.i > drop_node ? e.i - 1 : e.i, e.j > drop_node ? e.j - 1 : e.j, e.w});
    }
    return laplacian(h);
}

Certificate subgraph_disjoint_certificate(const RationalMatrix& L, int drop_node) {
    if (L.rows() != L.cols() || L.rows() < 2)
        throw InvalidArgumentError("subgraph_disjoint_certificate: need a square Laplacian, n >= 2");
    if (drop_node <= 0) drop_node = static_cast<int>(L.rows());
    const RationalMatrix Lh = drop_node_laplacian(L, drop_node);

    // Both matrices are Laplacians, so 0 is a root of both characteristic polynomials by
    // construction. One forced copy is divided out of each side; whatever 0s remain
    // (extra components) participate in the comparison like any other eigenvalue.
    const Polynomial qG = divide_by_x(char_poly(L));
    const Polynomial qH = divide_by_x(char_poly(Lh));

    Certificate cert;
    cert.kind = "subgraph-spectra-disjoint";
    cert.value = sylvester_resultant(qG, qH);
    cert.verdict = cert.value != 0;
    cert.context = std::string("resultant of the 0-quotient characteristic polynomials of the graph "
                               "and of the subgraph without node ") +
                   std::to_string(drop_node) +
                   (cert.verdict ? " is nonzero: the spectra share only the forced eigenvalue 0"
                                 : " vanishes: the spectra share a further eigenvalue");
    return cert;
}

}  // namespace lapspec
