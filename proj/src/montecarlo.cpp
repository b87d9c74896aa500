#include "lapspec/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <thread>
#include <vector>

#include "json.hpp"

#include "lapspec/certificates.hpp"
#include "lapspec/errors.hpp"
#include "lapspec/io.hpp"
#include "lapspec/laplacian.hpp"
#include "lapspec/rng.hpp"

namespace lapspec {

const char* experiment_name(Experiment ex) {
    switch (ex) {
        case Experiment::Simplicity: return "simplicity";
        case Experiment::FiedlerZero: return "fiedler-zero";
        case Experiment::FiedlerDistinct: return "fiedler-distinct";
        case Experiment::SubgraphDisjoint: return "subgraph-disjoint";
    }
    return "unknown";
}

const char* distribution_name(EpsDistribution d) {
    return d == EpsDistribution::PositiveUniform ? "positive-uniform" : "weight-relative";
}

namespace {

constexpr long long kLatticeDen = 1000000;

int bucket_of(double x) {
    if (!std::isfinite(x) || x <= 0.0) return 0;
    const int e = static_cast<int>(std::floor(std::log10(x)));
    return std::clamp(e - kHistogramLowExponent, 0, kHistogramBuckets - 1);
}

// Verdicts of one trial plus the quantity it measured (infinity = not measured,
// e.g. on skipped trials).
struct TrialOutcome {
    bool degenerate = false;
    bool exact_degenerate = false;
    bool fiedler_zero = false;
    bool repeated_coordinate = false;
    bool intersection = false;
    bool exact_intersection = false;
    bool lambda2_skip = false;
    double rel_gap = std::numeric_limits<double>::infinity();
    double rel_entry = std::numeric_limits<double>::infinity();
};

// Per-chunk accumulator. Chunks cover contiguous trial ranges, and merging is
// in chunk order, so the totals (and the CSV row order) never depend on the
// thread count.
struct Accumulator {
    bool keep_rows = false;
    long degenerate_hits = 0;
    long exact_degenerate_hits = 0;
    long fiedler_zero_hits = 0;
    long repeated_coordinate_hits = 0;
    long intersection_hits = 0;
    long exact_intersection_hits = 0;
    long degenerate_lambda2_skips = 0;
    double min_rel_gap = std::numeric_limits<double>::infinity();
    double min_rel_entry = std::numeric_limits<double>::infinity();
    std::array<long, kHistogramBuckets> gap_histogram{};
    std::array<long, kHistogramBuckets> entry_histogram{};
    std::vector<std::array<double, 2>> rows;

    void add(const TrialOutcome& o) {
        degenerate_hits += o.degenerate;
        exact_degenerate_hits += o.exact_degenerate;
        fiedler_zero_hits += o.fiedler_zero;
        repeated_coordinate_hits += o.repeated_coordinate;
        intersection_hits += o.intersection;
        exact_intersection_hits += o.exact_intersection;
        degenerate_lambda2_skips += o.lambda2_skip;
        if (std::isfinite(o.rel_gap)) {
            min_rel_gap = std::min(min_rel_gap, o.rel_gap);
            ++gap_histogram[bucket_of(o.rel_gap)];
        }
        if (std::isfinite(o.rel_entry)) {
            min_rel_entry = std::min(min_rel_entry, o.rel_entry);
            ++entry_histogram[bucket_of(o.rel_entry)];
        }
        if (keep_rows) rows.push_back({o.rel_gap, o.rel_entry});
    }

    void merge(const Accumulator& o) {
        degenerate_hits += o.degenerate_hits;
        exact_degenerate_hits += o.exact_degenerate_hits;
        fiedler_zero_hits += o.fiedler_zero_hits;
        repeated_coordinate_hits += o.repeated_coordinate_hits;
        intersection_hits += o.intersection_hits;
        exact_intersection_hits += o.exact_intersection_hits;
        degenerate_lambda2_skips += o.degenerate_lambda2_skips;
        min_rel_gap = std::min(min_rel_gap, o.min_rel_gap);
        min_rel_entry = std::min(min_rel_entry, o.min_rel_entry);
        for (int b = 0; b < kHistogramBuckets; ++b) {
            gap_histogram[b] += o.gap_histogram[b];
            entry_histogram[b] += o.entry_histogram[b];
        }
        rows.insert(rows.end(), o.rows.begin(), o.rows.end());
    }
};

struct CampaignContext {
    const TrialConfig& cfg;
    Experiment ex;
    WeightedGraph float_base;
    RationalGraph exact_base;  // populated only in exact mode
    int resolved_drop = 0;     // subgraph experiment only
};

// Smallest lattice numerator k with k/10^6 > -w/2, computed exactly. The
// double seed is only a starting guess; the two loops pin the boundary.
long long lattice_floor(const Rational& w) {
    long long k = static_cast<long long>(std::ceil(-to_double(w) * 5e5));
    while (Rational(k, kLatticeDen) * 2 <= -w) ++k;
    while (Rational(k - 1, kLatticeDen) * 2 > -w) --k;
    return k;
}

TrialOutcome run_trial(const CampaignContext& ctx, long trial) {
    const TrialConfig& cfg = ctx.cfg;
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(trial)));

    WeightedGraph g;
    RationalGraph gq;
    if (cfg.exact_mode) {
        gq = ctx.exact_base;
        if (cfg.eps0 > 0.0) {
            const long long k_max = static_cast<long long>(std::floor(cfg.eps0 * 1e6));
            for (auto& e : gq.edges) {
                const long long k_min =
                    cfg.dist == EpsDistribution::PositiveUniform ? 1 : lattice_floor(e.w);
                e.w += Rational(rng.integer_in(k_min, k_max), kLatticeDen);
            }
        }
        g = to_double(gq);
    } else {
        g = ctx.float_base;
        if (cfg.eps0 > 0.0) {
            for (auto& e : g.edges) {
                const double lo =
                    cfg.dist == EpsDistribution::PositiveUniform ? 0.0 : -e.w / 2.0;
                e.w += rng.open_closed(lo, cfg.eps0);
            }
        }
    }

    TrialOutcome out;
    const Eigen::MatrixXd L = laplacian(g);

    switch (ctx.ex) {
        case Experiment::Simplicity: {
            const GapReport rep = gap_report(sym_spectrum(L), cfg.tau_gap);
            out.degenerate = !rep.simple;
            if (rep.scale > 0.0 && std::isfinite(rep.min_gap)) {
                out.rel_gap = rep.min_gap / rep.scale;
            }
            break;
        }
        case Experiment::FiedlerZero: {
            try {
                const FiedlerResult fr = fiedler(L, cfg.tau_gap, cfg.tau_v);
                if (fr.degenerate_lambda2) {
                    out.lambda2_skip = true;
                } else {
                    const double vinf = fr.vector.cwiseAbs().maxCoeff();
                    const double mn = min_abs_entry(fr.vector).first;
                    if (vinf > 0.0) {
                        out.rel_entry = mn / vinf;
                        out.fiedler_zero = mn <= cfg.tau_v * vinf;
                    }
                }
            } catch (const NotConnectedError&) {
                // lambda_2 collapsed onto 0 at tolerance: the vector is as
                // ill-defined as in any other lambda_2 tie, so skip likewise.
                out.lambda2_skip = true;
            }
            break;
        }
        case Experiment::FiedlerDistinct: {
            try {
                const FiedlerResult fr = fiedler(L, cfg.tau_gap, cfg.tau_v);
                if (fr.degenerate_lambda2) {
                    // The lambda_2 eigenspace has dimension >= 2 and therefore
                    // contains vectors with tied coordinates: a hit.
                    out.repeated_coordinate = true;
                } else {
                    const double vinf = fr.vector.cwiseAbs().maxCoeff();
                    double mind = std::numeric_limits<double>::infinity();
                    for (Eigen::Index i = 0; i < fr.vector.size(); ++i) {
                        for (Eigen::Index j = i + 1; j < fr.vector.size(); ++j) {
                            mind = std::min(mind, std::abs(fr.vector(i) - fr.vector(j)));
                        }
                    }
                    if (vinf > 0.0 && std::isfinite(mind)) {
                        out.rel_entry = mind / vinf;
                        out.repeated_coordinate = mind <= cfg.tau_v * vinf;
                    }
                }
            } catch (const NotConnectedError&) {
                out.repeated_coordinate = true;
            }
            break;
        }
        case Experiment::SubgraphDisjoint: {
            const int d = ctx.resolved_drop;
            WeightedGraph h;
            h.n = g.n - 1;
            for (const auto& e : g.edges) {
                if (e.i == d || e.j == d) continue;
                h.edges.push_back({e.i > d ? e.i - 1 : e.i, e.j > d ? e.j - 1 : e.j, e.w});
            }
            const SpectralDecomposition sg = sym_spectrum(L);
            const SpectralDecomposition sh = sym_spectrum(laplacian(h));
            // Both spectra contain a structurally forced 0 (ascending order
            // puts it first); the interesting distances exclude that pair.
            double mind = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 1; i < sg.eigenvalues.size(); ++i) {
                for (Eigen::Index j = 1; j < sh.eigenvalues.size(); ++j) {
                    mind = std::min(mind, std::abs(sg.eigenvalues(i) - sh.eigenvalues(j)));
                }
            }
            const double scale = std::max(sg.scale, sh.scale);
            if (scale > 0.0 && std::isfinite(mind)) {
                out.rel_gap = mind / scale;
                out.intersection = mind <= cfg.tau_gap * scale;
            }
            break;
        }
    }

    if (cfg.exact_mode) {
        const RationalMatrix Lq = laplacian(gq);
        if (ctx.ex == Experiment::SubgraphDisjoint) {
            out.exact_intersection =
                !subgraph_disjoint_certificate(Lq, ctx.resolved_drop).verdict;
        } else {
            // Exact counterpart for all spectrum-shaped experiments: a zero
            // discriminant pins any degeneracy the floating check could hit.
            out.exact_degenerate = !simplicity_certificate(Lq).verdict;
        }
    }
    return out;
}

TrialReport run_campaign(Experiment ex, const TrialConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();

    if (cfg.trials < 1) throw InvalidArgumentError("monte carlo: trials must be at least 1");
    if (cfg.threads < 1) throw InvalidArgumentError("monte carlo: threads must be at least 1");
    if (!(cfg.eps0 >= 0.0)) throw InvalidArgumentError("monte carlo: eps0 must be nonnegative");
    if (!(cfg.tau_gap > 0.0) || !(cfg.tau_v > 0.0)) {
        throw InvalidArgumentError("monte carlo: tolerances must be positive");
    }
    if (cfg.exact_mode && cfg.eps0 != 0.0 && cfg.eps0 < 1e-6) {
        throw InvalidArgumentError(
            "monte carlo: exact mode samples the 1/1000000 lattice, need eps0 = 0 or >= 1e-6");
    }

    CampaignContext ctx{cfg, ex, {}, {}, 0};
    if (cfg.exact_mode) {
        if (cfg.rational_graph) {
            ctx.exact_base = *cfg.rational_graph;
        } else {
            // Best-approximation denominators of arbitrary doubles make the
            // certificate integers explode; snapping to the sampling lattice
            // keeps them bounded and is recorded by the probe label.
            ctx.exact_base.n = cfg.graph.n;
            for (const auto& e : cfg.graph.edges) {
                const long long num = std::llround(e.w * 1e6);
                if (num <= 0) {
                    throw InvalidArgumentError(
                        "monte carlo: weight rounds to a nonpositive 1/1000000 lattice point");
                }
                ctx.exact_base.edges.push_back({e.i, e.j, Rational(num, kLatticeDen)});
            }
        }
        validate(ctx.exact_base);
        ctx.float_base = to_double(ctx.exact_base);
    } else {
        ctx.float_base = cfg.graph;
    }
    validate(ctx.float_base);
    if (!is_connected(ctx.float_base)) {
        throw NotConnectedError("monte carlo: input graph must be connected");
    }

    const int n = ctx.float_base.n;
    if ((ex == Experiment::FiedlerZero || ex == Experiment::FiedlerDistinct) && n < 2) {
        throw InvalidArgumentError("monte carlo: Fiedler experiments need at least two nodes");
    }
    if (ex == Experiment::SubgraphDisjoint) {
        if (n < 2) throw InvalidArgumentError("monte carlo: node removal needs at least two nodes");
        if (cfg.drop_node > n) {
            throw InvalidArgumentError("monte carlo: drop_node out of range 1.." + std::to_string(n));
        }
        ctx.resolved_drop = cfg.drop_node <= 0 ? n : cfg.drop_node;
    }

    const bool want_csv = !cfg.csv_path.empty();
    Accumulator total;
    total.keep_rows = want_csv;

    if (cfg.threads == 1) {
        for (long t = 0; t < cfg.trials; ++t) total.add(run_trial(ctx, t));
    } else {
        const long chunk = (cfg.trials + cfg.threads - 1) / cfg.threads;
        const int nchunks = static_cast<int>((cfg.trials + chunk - 1) / chunk);
        std::vector<Accumulator> parts(nchunks);
        std::vector<std::exception_ptr> errors(nchunks);
        std::vector<std::thread> pool;
        for (int c = 0; c < nchunks; ++c) {
            const long lo = c * chunk;
            const long hi = std::min(cfg.trials, lo + chunk);
            parts[c].keep_rows = want_csv;
            pool.emplace_back([&ctx, &parts, &errors, c, lo, hi] {
                try {
                    for (long t = lo; t < hi; ++t) parts[c].add(run_trial(ctx, t));
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& err : errors) {
            if (err) std::rethrow_exception(err);
        }
        for (const auto& part : parts) total.merge(part);
    }

    if (want_csv) {
        std::ofstream csv(cfg.csv_path);
        if (!csv) throw InvalidArgumentError("monte carlo: cannot open csv path: " + cfg.csv_path);
        csv << "trial,rel_gap,rel_entry\n";
        for (size_t t = 0; t < total.rows.size(); ++t) {
            csv << t;
            for (double x : total.rows[t]) {
                csv << ',';
                if (std::isfinite(x)) csv << format_double(x);
            }
            csv << '\n';
        }
    }

    TrialReport r;
    r.experiment = ex;
    r.trials = cfg.trials;
    r.eps0 = cfg.eps0;
    r.dist = cfg.dist;
    r.tau_gap = cfg.tau_gap;
    r.tau_v = cfg.tau_v;
    r.seed = cfg.seed;
    r.exact_mode = cfg.exact_mode;
    r.drop_node = ctx.resolved_drop;
    r.nodes = n;
    r.edges = static_cast<long>(ctx.float_base.edges.size());
    r.probe_label = cfg.exact_mode ? "rational lattice probe" : "continuum probe";
    r.degenerate_hits = total.degenerate_hits;
    r.exact_degenerate_hits = total.exact_degenerate_hits;
    r.fiedler_zero_hits = total.fiedler_zero_hits;
    r.repeated_coordinate_hits = total.repeated_coordinate_hits;
    r.intersection_hits = total.intersection_hits;
    r.exact_intersection_hits = total.exact_intersection_hits;
    r.degenerate_lambda2_skips = total.degenerate_lambda2_skips;
    r.min_rel_gap = total.min_rel_gap;
    r.min_rel_entry = total.min_rel_entry;
    r.gap_histogram = total.gap_histogram;
    r.entry_histogram = total.entry_histogram;
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

TrialReport mc_simplicity(const TrialConfig& cfg) {
    return run_campaign(Experiment::Simplicity, cfg);
}

TrialReport mc_fiedler_zero(const TrialConfig& cfg) {
    return run_campaign(Experiment::FiedlerZero, cfg);
}

TrialReport mc_fiedler_distinct(const TrialConfig& cfg) {
    return run_campaign(Experiment::FiedlerDistinct, cfg);
}

TrialReport mc_subgraph_disjoint(const TrialConfig& cfg) {
    return run_campaign(Experiment::SubgraphDisjoint, cfg);
}

TrialReport run_experiment(Experiment ex, const TrialConfig& cfg) {
    return run_campaign(ex, cfg);
}

std::string report_serialize(const TrialReport& r) {
    nlohmann::json j{
        {"config",
         {{"dist", distribution_name(r.dist)},
          {"drop_node", r.drop_node},
          {"edges", r.edges},
          {"eps0", r.eps0},
          {"exact_mode", r.exact_mode},
          {"experiment", experiment_name(r.experiment)},
          {"nodes", r.nodes},
          {"probe", r.probe_label},
          {"seed", r.seed},
          {"tau_gap", r.tau_gap},
          {"tau_v", r.tau_v},
          {"trials", r.trials}}},
        {"counts",
         {{"degenerate_hits", r.degenerate_hits},
          {"degenerate_lambda2_skips", r.degenerate_lambda2_skips},
          {"exact_degenerate_hits", r.exact_degenerate_hits},
          {"exact_intersection_hits", r.exact_intersection_hits},
          {"fiedler_zero_hits", r.fiedler_zero_hits},
          {"intersection_hits", r.intersection_hits},
          {"repeated_coordinate_hits", r.repeated_coordinate_hits}}},
        {"histograms",
         {{"rel_entry_log10", r.entry_histogram}, {"rel_gap_log10", r.gap_histogram}}},
        {"stats", {{"min_rel_entry", r.min_rel_entry}, {"min_rel_gap", r.min_rel_gap}}},
    };
    return canonical_dump(j);
}

}  // namespace lapspec
