#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "lapspec/graph.hpp"
#include "lapspec/rational.hpp"
#include "lapspec/spectrum.hpp"

namespace lapspec {

enum class Experiment { Simplicity, FiedlerZero, FiedlerDistinct, SubgraphDisjoint };

enum class EpsDistribution {
    PositiveUniform,  // eps in (0, eps0] per support edge
    WeightRelative    // eps in (-w/2, eps0]: perturbed weights stay above w/2 > 0
};

// Histogram layout: 18 decades, bucket b collects values with floor(log10 x) = b - 16
// (so exponents -16..+1); out-of-range values clamp to the end buckets, and exact
// zeros fall into bucket 0.
inline constexpr int kHistogramBuckets = 18;
inline constexpr int kHistogramLowExponent = -16;

struct TrialConfig {
    WeightedGraph graph;
    // Exact-mode base weights. When absent, graph weights are snapped to the 1/10^6
    // lattice (arbitrary best-approximation denominators would blow up the certificate
    // integer sizes; the probe label records the lattice nature anyway).
    std::optional<RationalGraph> rational_graph;
    long trials = 1;
    double eps0 = 1e-2;  // 0 switches perturbation off (the unperturbed verdict per trial)
    EpsDistribution dist = EpsDistribution::WeightRelative;
    double tau_gap = kDefaultTauGap;
    double tau_v = kDefaultTauV;
    std::uint64_t seed = 0;
    bool exact_mode = false;
    int drop_node = 0;  // subgraph experiment; <= 0 selects the last node
    int threads = 1;
    std::string csv_path;  // optional per-trial (rel_gap, rel_entry) dump
};

struct TrialReport {
    // config echo
    Experiment experiment = Experiment::Simplicity;
    long trials = 0;
    double eps0 = 0.0;
    EpsDistribution dist = EpsDistribution::WeightRelative;
    double tau_gap = kDefaultTauGap;
    double tau_v = kDefaultTauV;
    std::uint64_t seed = 0;
    bool exact_mode = false;
    int drop_node = 0;  // resolved node for the subgraph experiment, 0 otherwise
    int nodes = 0;
    long edges = 0;
    std::string probe_label;  // "continuum probe" or "rational lattice probe"

    // hit counters; a trial can hit at most one of the floating/exact pairs each
    long degenerate_hits = 0;         // min_gap <= tau_gap * scale
    long exact_degenerate_hits = 0;   // discriminant exactly zero (exact mode)
    long fiedler_zero_hits = 0;       // min |v_i| <= tau_v * ||v||_inf
    long repeated_coordinate_hits = 0;
    long intersection_hits = 0;       // cross-spectra distance <= tau_gap * scale
    long exact_intersection_hits = 0; // resultant exactly zero (exact mode)
    long degenerate_lambda2_skips = 0;

    // statistics, relative to the hit tests' own scales (min over measured trials;
    // infinity when the experiment never measures the quantity)
    double min_rel_gap = std::numeric_limits<double>::infinity();
    double min_rel_entry = std::numeric_limits<double>::infinity();
    std::array<long, kHistogramBuckets> gap_histogram{};
    std::array<long, kHistogramBuckets> entry_histogram{};

    double wall_seconds = 0.0;  // measured, deliberately left out of the canonical JSON
};

// Degenerate-spectrum frequency under random structural perturbation: floating hits at
// tau_gap, plus exact discriminant-zero hits in exact mode.
TrialReport mc_simplicity(const TrialConfig& cfg);

// Vanishing Fiedler coordinates; trials with a degenerate lambda_2 are skipped and
// counted apart (the vector is ill-defined there).
TrialReport mc_fiedler_zero(const TrialConfig& cfg);

// Tied Fiedler coordinates (conjecture probe, labeled as such in the report). A
// degenerate lambda_2 counts as a hit: the eigenspace then contains vectors with tied
// coordinates, so the conjectured genericity fails at that point.
TrialReport mc_fiedler_distinct(const TrialConfig& cfg);

// Shared eigenvalues between the graph and the graph minus drop_node, beyond the
// structurally forced 0: floating proximity hits, plus exact resultant-zero hits in
// exact mode.
TrialReport mc_subgraph_disjoint(const TrialConfig& cfg);

TrialReport run_experiment(Experiment ex, const TrialConfig& cfg);

// Canonical key-sorted JSON, byte-stable for fixed (config, seed). Wall time is
// excluded so reruns compare equal.
std::string report_serialize(const TrialReport& r);

const char* experiment_name(Experiment ex);
const char* distribution_name(EpsDistribution d);

}  // namespace lapspec
