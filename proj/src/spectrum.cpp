#include "lapspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lapspec/errors.hpp"

namespace lapspec {

namespace {

void require_symmetric(const Eigen::MatrixXd& L) {
    const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
    for (Eigen::Index r = 0; r < L.rows(); ++r)
        for (Eigen::Index c = r + 1; c < L.cols(); ++c)
            if (std::abs(L(r, c) - L(c, r)) > 1e-12 * scale)
                throw InvalidArgumentError("sym_spectrum: matrix is not symmetric");
}

}  // namespace

SpectralDecomposition sym_spectrum(const Eigen::MatrixXd& L, double residual_tol) {
    if (L.rows() != L.cols() || L.rows() == 0)
        throw InvalidArgumentError("sym_spectrum: matrix must be square and nonempty");
    require_symmetric(L);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailureError("sym_spectrum: eigensolver did not converge (n=" +
                                      std::to_string(L.rows()) + ")");

    SpectralDecomposition d;
    d.eigenvalues = solver.eigenvalues();
    d.eigenvectors = solver.eigenvectors();
    d.scale = std::max(1.0, d.eigenvalues.cwiseAbs().maxCoeff());

    const double mnorm = std::max(1.0, L.cwiseAbs().maxCoeff());
    d.residuals.resize(L.rows());
    for (Eigen::Index k = 0; k < L.rows(); ++k)
        d.residuals(k) = (L * d.eigenvectors.col(k) - d.eigenvalues(k) * d.eigenvectors.col(k)).norm() / mnorm;
    d.max_residual = d.residuals.maxCoeff();
    if (d.max_residual > residual_tol)
        throw ConvergenceFailureError("sym_spectrum: residual " + std::to_string(d.max_residual) +
                                      " exceeds contract " + std::to_string(residual_tol));

    // The all-ones direction carries the structural zero; pin it in the report.
    if (std::abs(d.eigenvalues(0)) <= residual_tol * d.scale) d.eigenvalues(0) = 0.0;
    return d;
}

ComplexSpectralDecomposition general_spectrum(const Eigen::MatrixXd& L, double residual_tol) {
    if (L.rows() != L.cols() || L.rows() == 0)
        throw InvalidArgumentError("general_spectrum: matrix must be square and nonempty");

    Eigen::EigenSolver<Eigen::MatrixXd> solver(L);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailureError("general_spectrum: eigensolver did not converge (n=" +
                                      std::to_string(L.rows()) + ")");

    const Eigen::Index n = L.rows();
    std::vector<int> order(n);
    for (Eigen::Index k = 0; k < n; ++k) order[k] = static_cast<int>(k);
    const auto& vals = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
        return vals(a).imag() < vals(b).imag();
    });

    ComplexSpectralDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        d.eigenvalues(k) = vals(order[k]);
        d.eigenvectors.col(k) = solver.eigenvectors().col(order[k]);
    }
    d.scale = std::max(1.0, d.eigenvalues.cwiseAbs().maxCoeff());

    const double mnorm = std::max(1.0, L.cwiseAbs().maxCoeff());
    d.residuals.resize(n);
    for (Eigen::Index k = 0; k < n; ++k)
        d.residuals(k) =
            (L * d.eigenvectors.col(k) - d.eigenvalues(k) * d.eigenvectors.col(k)).norm() / mnorm;
    d.max_residual = d.residuals.maxCoeff();
    if (d.max_residual > residual_tol)
        throw ConvergenceFailureError("general_spectrum: residual " + std::to_string(d.max_residual) +
                                      " exceeds contract " + std::to_string(residual_tol));
    return d;
}

GapReport gap_report(const SpectralDecomposition& s, double tau_gap) {
    GapReport r;
    r.scale = s.scale;
    r.tau_gap = tau_gap;
    const Eigen::Index n = s.eigenvalues.size();
    r.min_gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k + 1 < n; ++k)
        r.min_gap = std::min(r.min_gap, s.eigenvalues(k + 1) - s.eigenvalues(k));
    r.simple = r.min_gap > tau_gap * r.scale;
    return r;
}

GapReport gap_report(const ComplexSpectralDecomposition& s, double tau_gap) {
    GapReport r;
    r.scale = s.scale;
    r.tau_gap = tau_gap;
    const Eigen::Index n = s.eigenvalues.size();
    r.min_gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = a + 1; b < n; ++b)
            r.min_gap = std::min(r.min_gap, std::abs(s.eigenvalues(a) - s.eigenvalues(b)));
    r.simple = r.min_gap > tau_gap * r.scale;
    return r;
}

FiedlerResult fiedler(const Eigen::MatrixXd& L, double tau_gap, double tau_v) {
    const auto d = sym_spectrum(L);
    if (L.rows() < 2) throw InvalidArgumentError("fiedler: need at least two nodes");
    if (d.eigenvalues(1) <= tau_gap * d.scale)
        throw NotConnectedError("fiedler: lambda_2 is zero at tolerance (disconnected graph)");

    FiedlerResult f;
    f.lambda2 = d.eigenvalues(1);
    f.vector = d.eigenvectors.col(1);
    if (L.rows() > 2)
        f.degenerate_lambda2 = (d.eigenvalues(2) - d.eigenvalues(1)) <= tau_gap * d.scale;

    for (Eigen::Index k = 0; k < f.vector.size(); ++k) {
        if (std::abs(f.vector(k)) > tau_v) {
            if (f.vector(k) < 0) f.vector = -f.vector;
            break;
        }
    }
    return f;
}

std::pair<double, int> min_abs_entry(const Eigen::VectorXd& v) {
    if (v.size() == 0) throw InvalidArgumentError("min_abs_entry: empty vector");
    int arg = 0;
    double best = std::abs(v(0));
    for (Eigen::Index k = 1; k < v.size(); ++k)
        if (std::abs(v(k)) < best) {
            best = std::abs(v(k));
            arg = static_cast<int>(k);
        }
    return {best, arg + 1};
}

Eigen::VectorXd path_closed_form_eigenvalues(int p) {
    if (p < 2) throw InvalidArgumentError("path_closed_form: p must be >= 2");
    Eigen::VectorXd vals(p);
    for (int k = 0; k < p; ++k) vals(k) = 2.0 - 2.0 * std::cos(k * std::numbers::pi / p);
    return vals;
}

Eigen::MatrixXd path_closed_form_eigenvectors(int p) {
    if (p < 2) throw InvalidArgumentError("path_closed_form: p must be >= 2");
    Eigen::MatrixXd vecs(p, p);
    for (int k = 1; k <= p; ++k)
        for (int i = 1; i <= p; ++i)
            vecs(i - 1, k - 1) =
                std::cos(std::numbers::pi * (k - 1) * i / p - std::numbers::pi * (k - 1) / (2.0 * p));
    return vecs;
}

double eigenvalue_weight_derivative(const Eigen::MatrixXd& L, int k, int i, int j, double tau_gap) {
    const Eigen::Index n = L.rows();
    if (k < 1 || k > n) throw InvalidArgumentError("eigenvalue_weight_derivative: bad eigen-index");
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw InvalidArgumentError("eigenvalue_weight_derivative: bad node pair");
    if (L(i - 1, j - 1) == 0.0)
        throw InvalidArgumentError("eigenvalue_weight_derivative: pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") is outside the support");

    const auto d = sym_spectrum(L);
    const double lam = d.eigenvalues(k - 1);
    const double lo_gap = (k >= 2) ? lam - d.eigenvalues(k - 2) : std::numeric_limits<double>::infinity();
    const double hi_gap = (k < n) ? d.eigenvalues(k) - lam : std::numeric_limits<double>::infinity();
    if (std::min(lo_gap, hi_gap) <= tau_gap * d.scale)
        throw DegenerateEigenvalueError("eigenvalue_weight_derivative: lambda_" + std::to_string(k) +
                                        " is not simple at tolerance");

    const double vi = d.eigenvectors(i - 1, k - 1);
    const double vj = d.eigenvectors(j - 1, k - 1);
    return (vi - vj) * (vi - vj);
}

}  // namespace lapspec
