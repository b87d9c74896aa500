#pragma once

#include <Eigen/Dense>
#include <tuple>
#include <vector>

#include "lapspec/graph.hpp"

namespace lapspec {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Sparse same-support increment, keyed by support pairs: (i, j, eps) with i < j for
// undirected graphs, (from, to, eps) for digraphs. Off-support pairs are rejected when
// the tuple is applied, never stored.
template <typename Scalar>
struct PerturbationTupleT {
    int n = 0;
    bool directed = false;
    std::vector<std::tuple<int, int, Scalar>> entries;
};

using PerturbationTuple = PerturbationTupleT<double>;

// L = D - W: off-diagonal -w on every edge, diagonal = incident weight sum.
template <typename Scalar>
DenseMatrix<Scalar> laplacian(const WeightedGraphT<Scalar>& g) {
    DenseMatrix<Scalar> L = DenseMatrix<Scalar>::Zero(g.n, g.n);
    for (const auto& e : g.edges) {
        const int a = e.i - 1, b = e.j - 1;
        L(a, b) -= e.w;
        L(b, a) -= e.w;
        L(a, a) += e.w;
        L(b, b) += e.w;
    }
    return L;
}

// Digraph Laplacian, consensus convention: row i collects the in-arcs of node i, so an
// arc u->v contributes L[v][u] = -w and L[v][v] += w. Rows sum to zero; 0 is a simple
// eigenvalue exactly when the digraph has a diverging spanning tree, and the Laplacian
// of a diverging tree is triangular in topological order with the arc weights on the
// diagonal.
template <typename Scalar>
DenseMatrix<Scalar> digraph_laplacian(const DigraphT<Scalar>& dg) {
    DenseMatrix<Scalar> L = DenseMatrix<Scalar>::Zero(dg.n, dg.n);
    for (const auto& a : dg.arcs) {
        const int u = a.from - 1, v = a.to - 1;
        L(v, u) -= a.w;
        L(v, v) += a.w;
    }
    return L;
}

namespace detail {

template <typename Scalar>
Scalar abs_of(const Scalar& x) {
    using std::abs;
    return abs(x);
}

}  // namespace detail

// Max-absolute-entry norm; the fixed norm for every epsilon_0 budget comparison.
template <typename Scalar>
Scalar matrix_norm(const DenseMatrix<Scalar>& M) {
    Scalar best(0);
    for (Eigen::Index c = 0; c < M.cols(); ++c)
        for (Eigen::Index r = 0; r < M.rows(); ++r)
            if (detail::abs_of(M(r, c)) > best) best = detail::abs_of(M(r, c));
    return best;
}

// L(eps): off-diagonal -eps exactly on the named support pairs, diagonal forced by zero
// row sums, everything off the support exactly zero.
template <typename Scalar>
DenseMatrix<Scalar> structural_perturbation(const WeightedGraphT<Scalar>& g,
                                            const PerturbationTupleT<Scalar>& e) {
    if (e.directed) throw SupportViolationError("structural_perturbation: directed tuple on undirected graph");
    if (e.n != g.n) throw SupportViolationError("structural_perturbation: size mismatch");
    DenseMatrix<Scalar> M = DenseMatrix<Scalar>::Zero(g.n, g.n);
    for (const auto& [i, j, eps] : e.entries) {
        if (!edge_weight(g, i, j))
            throw SupportViolationError("structural_perturbation: pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is outside the support");
        const int a = i - 1, b = j - 1;
        M(a, b) -= eps;
        M(b, a) -= eps;
        M(a, a) += eps;
        M(b, b) += eps;
    }
    return M;
}

template <typename Scalar>
DenseMatrix<Scalar> directed_structural_perturbation(const DigraphT<Scalar>& dg,
                                                     const PerturbationTupleT<Scalar>& e) {
    if (!e.directed) throw SupportViolationError("directed_structural_perturbation: undirected tuple");
    if (e.n != dg.n) throw SupportViolationError("directed_structural_perturbation: size mismatch");
    DenseMatrix<Scalar> M = DenseMatrix<Scalar>::Zero(dg.n, dg.n);
    for (const auto& [from, to, eps] : e.entries) {
        if (!arc_weight(dg, from, to))
            throw SupportViolationError("directed_structural_perturbation: arc " + std::to_string(from) +
                                        "->" + std::to_string(to) + " is outside the support");
        M(to - 1, from - 1) -= eps;
        M(to - 1, to - 1) += eps;
    }
    return M;
}

// L + L(eps), validating the tuple against L's own support.
template <typename Scalar>
DenseMatrix<Scalar> apply_perturbation(const DenseMatrix<Scalar>& L, const PerturbationTupleT<Scalar>& e) {
    if (e.n != L.rows()) throw SupportViolationError("apply_perturbation: size mismatch");
    DenseMatrix<Scalar> M = L;
    for (const auto& [i, j, eps] : e.entries) {
        const int a = (e.directed ? j : i) - 1;  // row holding the off-diagonal entry
        const int b = (e.directed ? i : j) - 1;
        if (L(a, b) == Scalar(0))
            throw SupportViolationError("apply_perturbation: pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is outside the support");
        M(a, b) -= eps;
        M(a, a) += eps;
        if (!e.directed) {
            M(b, a) -= eps;
            M(b, b) += eps;
        }
    }
    return M;
}

// Perturbed graph: weights w + eps on the named edges. The caller decides whether a
// nonpositive resulting weight is an error (validate()).
template <typename Scalar>
WeightedGraphT<Scalar> apply_to_graph(const WeightedGraphT<Scalar>& g, const PerturbationTupleT<Scalar>& e) {
    if (e.directed || e.n != g.n) throw SupportViolationError("apply_to_graph: tuple does not match graph");
    WeightedGraphT<Scalar> out = g;
    for (const auto& [i, j, eps] : e.entries) {
        bool found = false;
        for (auto& edge : out.edges)
            if (edge.i == i && edge.j == j) {
                edge.w += eps;
                found = true;
                break;
            }
        if (!found)
            throw SupportViolationError("apply_to_graph: pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is outside the support");
    }
    return out;
}

template <typename Scalar>
DigraphT<Scalar> apply_to_digraph(const DigraphT<Scalar>& dg, const PerturbationTupleT<Scalar>& e) {
    if (!e.directed || e.n != dg.n) throw SupportViolationError("apply_to_digraph: tuple does not match digraph");
    DigraphT<Scalar> out = dg;
    for (const auto& [from, to, eps] : e.entries) {
        bool found = false;
        for (auto& arc : out.arcs)
            if (arc.from == from && arc.to == to) {
                arc.w += eps;
                found = true;
                break;
            }
        if (!found)
            throw SupportViolationError("apply_to_digraph: arc " + std::to_string(from) + "->" +
                                        std::to_string(to) + " is outside the support");
    }
    return out;
}

// Exact comparison of nonzero off-diagonal patterns.
template <typename Scalar>
bool support_equal(const DenseMatrix<Scalar>& A, const DenseMatrix<Scalar>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (Eigen::Index r = 0; r < A.rows(); ++r)
        for (Eigen::Index c = 0; c < A.cols(); ++c)
            if (r != c && (A(r, c) != Scalar(0)) != (B(r, c) != Scalar(0))) return false;
    return true;
}

// Validity check per the Laplacian invariants: zero row sums (exact for rationals,
// relative tolerance for reals), nonpositive off-diagonals, symmetry unless directed.
template <typename Scalar>
bool is_valid_laplacian(const DenseMatrix<Scalar>& M, bool directed = false, double tol = 1e-12) {
    const Scalar scale = std::max<Scalar>(Scalar(1), matrix_norm(M));
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        Scalar sum(0);
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            sum += M(r, c);
            if (r != c && M(r, c) > Scalar(0)) return false;
            if (!directed && M(r, c) != M(c, r)) {
                if constexpr (std::is_same_v<Scalar, double>) {
                    if (detail::abs_of(M(r, c) - M(c, r)) > tol * scale) return false;
                } else {
                    return false;
                }
            }
        }
        if constexpr (std::is_same_v<Scalar, double>) {
            if (detail::abs_of(sum) > tol * scale) return false;
        } else {
            if (sum != Scalar(0)) return false;
        }
    }
    return true;
}

// Recover the weighted graph from a symmetric Laplacian's off-diagonal support.
template <typename Scalar>
WeightedGraphT<Scalar> graph_from_laplacian(const DenseMatrix<Scalar>& L) {
    WeightedGraphT<Scalar> g;
    g.n = static_cast<int>(L.rows());
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (L(i, j) != Scalar(0)) {
                if (L(i, j) > Scalar(0))
                    throw InvalidGraphError("graph_from_laplacian: positive off-diagonal entry");
                g.edges.push_back({i + 1, j + 1, -L(i, j)});
            }
    return g;
}

template <typename Scalar>
DigraphT<Scalar> digraph_from_laplacian(const DenseMatrix<Scalar>& L) {
    DigraphT<Scalar> dg;
    dg.n = static_cast<int>(L.rows());
    for (int r = 0; r < dg.n; ++r)
        for (int c = 0; c < dg.n; ++c)
            if (r != c && L(r, c) != Scalar(0)) {
                if (L(r, c) > Scalar(0))
                    throw InvalidGraphError("digraph_from_laplacian: positive off-diagonal entry");
                dg.arcs.push_back({c + 1, r + 1, -L(r, c)});  // row r holds in-arcs of r+1
            }
    return dg;
}

}  // namespace lapspec
