#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lapspec/certificates.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/laplacian.hpp"
#include "lapspec/spectrum.hpp"

namespace lapspec {

// Weight level for branch attachments; non-tree support edges land at rho^2.
inline constexpr double kDefaultRho = 1e-2;
inline constexpr int kMaxStageRetries = 50;      // shrink-by-10 retries per attachment
inline constexpr int kMaxLineSearchHalvings = 60;
inline constexpr int kMaxNondegenerateRounds = 50;

// One audited step of a construction or search. Field use by stage:
//   "path-edge" / "branch-edge" / "nontree-edge" (and the -arc variants): u, v are the
//       endpoints (from, to for arcs), weight the assigned weight, min_gap the verified
//       stage gap, components the component count (undirected) or forced-zero count
//       (directed) after the step, retries the shrink retries consumed.
//   "line-search": weight = step size t, min_gap = candidate gap, retries = halving
//       index, u = 1 when the candidate carried jitter.
//   "fiedler-round" / "basis-round": weight = round budget, retries = round index.
//   "derivative": u, v an edge, weight = (v_u - v_v)^2 for the current eigenvector
//       (the first-order eigenvalue response to that weight), min_gap = min |v_i| over
//       ||v||_inf, eigen_index = which eigenvector, retries = round index.
struct TraceStep {
    std::string stage;
    int u = 0, v = 0;
    double weight = 0.0;
    double min_gap = 0.0;
    int components = 0;
    int retries = 0;
    int eigen_index = 0;
};

struct ConstructionTrace {
    std::vector<TraceStep> steps;
};

struct BuildResult {
    Eigen::MatrixXd laplacian;
    ConstructionTrace trace;
};

struct PerturbationResult {
    PerturbationTuple perturbation;  // same-support increments actually applied
    Eigen::MatrixXd result;          // the perturbed Laplacian
    double achieved_norm = 0.0;      // max-abs-entry norm of the increment matrix
    GapReport gap;                   // of the result (complex flavor for digraphs)
    double min_fiedler_entry = std::numeric_limits<double>::quiet_NaN();  // NaN for digraphs
    int attempts = 0;                // candidate evaluations / rounds consumed
    std::optional<Certificate> certified;  // exact, on the rationalized result, when asked
    ConstructionTrace trace;
};

// Reference Laplacian with exactly g's support and a numerically simple spectrum:
// spanning tree, diameter path weighted 1..p-1, branch edges attached breadth-first at
// a small decreasing level, non-tree support edges smaller still, each placement
// verified (component-aware gap above tau_gap * scale) with shrink-by-10 retries.
BuildResult build_simple_support_laplacian(const WeightedGraph& g, double tau_gap = kDefaultTauGap,
                                           std::uint64_t seed = 0, double rho = kDefaultRho);

// Directed counterpart on the diverging spanning tree: the root-to-deepest-leaf path
// weighted 1..p-1 keeps the tree Laplacian triangular with its spectrum on the
// diagonal; remaining tree arcs then non-tree support arcs at decreasing levels, each
// verified through the complex pairwise gap.
BuildResult build_simple_support_laplacian_directed(const Digraph& dg,
                                                    double tau_gap = kDefaultTauGap,
                                                    std::uint64_t seed = 0,
                                                    double rho = kDefaultRho);

// Same-support perturbation below eps0 making the spectrum simple; zero perturbation
// when the input already is. Line search over L + t * L_ref with halving t, a jittered
// retry at each step, and a gap verdict per candidate.
PerturbationResult perturb_to_simple(const Eigen::MatrixXd& L, double eps0,
                                     double tau_gap = kDefaultTauGap, std::uint64_t seed = 0,
                                     bool certify = false);

// Digraph version; requires weak connectivity and a diverging rooted spanning tree
// (NoDivergingTree otherwise: with such digraphs the zero eigenvalue is structurally
// multiple and no same-support perturbation can help).
PerturbationResult perturb_to_simple_directed(const Eigen::MatrixXd& L, double eps0,
                                              double tau_gap = kDefaultTauGap,
                                              std::uint64_t seed = 0, bool certify = false);

// Makes every Fiedler coordinate nonzero (above tau_v * ||v||_inf): first secures a
// simple spectrum on half the budget, then adds seeded positive same-support noise in
// halving rounds until the vector clears the threshold.
PerturbationResult perturb_fiedler_nonzero(const Eigen::MatrixXd& L, double eps0,
                                           double tau_v = kDefaultTauV,
                                           double tau_gap = kDefaultTauGap,
                                           std::uint64_t seed = 0, bool certify = false);

// As perturb_fiedler_nonzero, with the acceptance predicate ranging over every
// eigenvector k = 2..n (the 0-eigenvector stays all-ones and is exempt).
PerturbationResult perturb_basis_nonzero(const Eigen::MatrixXd& L, double eps0,
                                         double tau_v = kDefaultTauV,
                                         double tau_gap = kDefaultTauGap, std::uint64_t seed = 0,
                                         bool certify = false);

struct CutResult {
    std::vector<int> positive;  // 1-based node ids, ascending
    std::vector<int> negative;
    std::vector<std::pair<int, int>> cut_edges;  // support pairs (i < j) crossing signs
    bool parts_connected = false;                // both induced sides verified connected
    double lambda2 = 0.0;
    Eigen::VectorXd fiedler_vector;
};

// Sign cut along the Fiedler vector. Refuses degenerate inputs: DegenerateLambda2 when
// lambda_2 is not simple at tolerance, DegenerateFiedler when some coordinate sits
// below tau_v * ||v||_inf (perturb_fiedler_nonzero is the fix for both).
CutResult fiedler_cut(const Eigen::MatrixXd& L, double tau_gap = kDefaultTauGap,
                      double tau_v = kDefaultTauV);

}  // namespace lapspec
