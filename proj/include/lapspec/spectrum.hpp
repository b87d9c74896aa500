#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "lapspec/laplacian.hpp"

namespace lapspec {

inline constexpr double kDefaultTauGap = 1e-8;
inline constexpr double kDefaultTauV = 1e-8;
inline constexpr double kResidualTol = 1e-10;

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending; the zero of the all-ones direction pinned to 0
    Eigen::MatrixXd eigenvectors;  // orthonormal columns aligned with eigenvalues
    Eigen::VectorXd residuals;     // per pair ||Lv - lambda v||_2 / max(1, ||L||)
    double scale = 1.0;            // max(1, spectral radius)
    double max_residual = 0.0;
};

struct ComplexSpectralDecomposition {
    Eigen::VectorXcd eigenvalues;  // sorted by (real, imag)
    Eigen::MatrixXcd eigenvectors;
    Eigen::VectorXd residuals;
    double scale = 1.0;
    double max_residual = 0.0;
};

struct GapReport {
    double min_gap = 0.0;  // consecutive spacing (real) or min pairwise distance (complex)
    double scale = 1.0;
    double tau_gap = kDefaultTauGap;
    bool simple = false;  // min_gap > tau_gap * scale
};

struct FiedlerResult {
    double lambda2 = 0.0;
    Eigen::VectorXd vector;           // unit; first entry above tau_v made positive
    bool degenerate_lambda2 = false;  // lambda_2 not simple at tolerance: vector non-canonical
};

// Full symmetric eigendecomposition with the residual contract enforced.
SpectralDecomposition sym_spectrum(const Eigen::MatrixXd& L, double residual_tol = kResidualTol);

// Dense nonsymmetric (directed) spectrum, complex eigenvalues sorted by (re, im).
ComplexSpectralDecomposition general_spectrum(const Eigen::MatrixXd& L,
                                              double residual_tol = kResidualTol);

GapReport gap_report(const SpectralDecomposition& s, double tau_gap = kDefaultTauGap);
GapReport gap_report(const ComplexSpectralDecomposition& s, double tau_gap = kDefaultTauGap);

// lambda_2 and its unit eigenvector for a connected graph Laplacian.
// Throws NotConnectedError when lambda_2 is zero at tolerance; a degenerate (non-simple)
// lambda_2 is reported through the flag, not an exception.
FiedlerResult fiedler(const Eigen::MatrixXd& L, double tau_gap = kDefaultTauGap,
                      double tau_v = kDefaultTauV);

// Smallest |entry| and its first 1-based index.
std::pair<double, int> min_abs_entry(const Eigen::VectorXd& v);

// Unit-weight path closed forms: eigenvalues 2 - 2cos(k pi / p) for k = 0..p-1, and
// eigenvector entries X_k(i) = cos(pi (k-1) i / p - pi (k-1) / (2p)) for k, i = 1..p
// (column k-1 of the returned matrix, not normalized).
Eigen::VectorXd path_closed_form_eigenvalues(int p);
Eigen::MatrixXd path_closed_form_eigenvectors(int p);

// First-order derivative of lambda_k with respect to the weight on support pair (i, j):
// (v_i - v_j)^2 for the unit eigenvector v. k is 1-based ascending; requires lambda_k
// simple at tolerance (DegenerateEigenvalueError otherwise).
double eigenvalue_weight_derivative(const Eigen::MatrixXd& L, int k, int i, int j,
                                    double tau_gap = kDefaultTauGap);

}  // namespace lapspec
