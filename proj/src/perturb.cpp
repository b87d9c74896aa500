#include "lapspec/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>

#include "lapspec/errors.hpp"
#include "lapspec/rational.hpp"
#include "lapspec/rng.hpp"

namespace lapspec {

namespace {

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// Low-discrepancy multipliers in (0.5, 1.5): same-level weights stay pairwise distinct
// without random draws, so the construction is reproducible even across retries.
double golden_multiplier(int k) {
    constexpr double inv_phi = 0.6180339887498949;
    return 0.5 + std::fmod((k + 1) * inv_phi, 1.0);
}

struct StageCheck {
    double gap = 0.0;
    bool ok = false;
};

// Gap of a partial Laplacian whose kernel is structurally `components`-dimensional:
// the smallest eigenvalues must sit at zero (tolerance), and the verified gap is their
// distance to the rest plus the spacing inside the rest.
StageCheck stage_check_sym(const Eigen::MatrixXd& L, int components, double tau_gap) {
    const SpectralDecomposition s = sym_spectrum(L);
    const int n = static_cast<int>(s.eigenvalues.size());
    StageCheck out;
    for (int k = 0; k < components; ++k)
        if (std::abs(s.eigenvalues[k]) > tau_gap * s.scale) return out;
    if (components >= n) {
        out.gap = std::numeric_limits<double>::infinity();
        out.ok = true;
        return out;
    }
    double gap = s.eigenvalues[components];
    for (int k = components + 1; k < n; ++k)
        gap = std::min(gap, s.eigenvalues[k] - s.eigenvalues[k - 1]);
    out.gap = gap;
    out.ok = gap > tau_gap * s.scale;
    return out;
}

// Directed analog: `zeros` structurally forced zero eigenvalues, pairwise complex
// distance on the rest.
StageCheck stage_check_cplx(const Eigen::MatrixXd& L, int zeros, double tau_gap) {
    const ComplexSpectralDecomposition s = general_spectrum(L);
    const int n = static_cast<int>(s.eigenvalues.size());
    std::vector<int> order(n);
    for (int k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto &x = s.eigenvalues[a], &y = s.eigenvalues[b];
        return std::tuple(std::abs(x), x.real(), x.imag()) < std::tuple(std::abs(y), y.real(), y.imag());
    });
    StageCheck out;
    for (int k = 0; k < zeros; ++k)
        if (std::abs(s.eigenvalues[order[k]]) > tau_gap * s.scale) return out;
    if (zeros >= n) {
        out.gap = std::numeric_limits<double>::infinity();
        out.ok = true;
        return out;
    }
    double gap = std::numeric_limits<double>::infinity();
    for (int a = zeros; a < n; ++a) {
        gap = std::min(gap, std::abs(s.eigenvalues[order[a]]));  // distance to the zero cluster
        for (int b = a + 1; b < n; ++b)
            gap = std::min(gap, std::abs(s.eigenvalues[order[a]] - s.eigenvalues[order[b]]));
    }
    out.gap = gap;
    out.ok = gap > tau_gap * s.scale;
    return out;
}

// Places one undirected edge, shrinking its weight by 10 (with a seeded nudge) until
// the stage gap verifies. max_retries = 0 pins the weight (path stage).
void place_edge(WeightedGraph& cur, int u, int v, double base_weight, int expected_components,
                double tau_gap, Rng& rng, const char* stage, int max_retries,
                ConstructionTrace& trace) {
    const int i = std::min(u, v), j = std::max(u, v);
    cur.edges.push_back({i, j, base_weight});
    if (component_count(cur) != expected_components)
        throw Error("construction: component bookkeeping diverged from the support");
    double last_gap = 0.0;
    for (int r = 0; r <= max_retries; ++r) {
        double w = base_weight * std::pow(10.0, -r);
        if (r > 0) w *= 0.75 + 0.5 * rng.unit();
        cur.edges.back().w = w;
        const StageCheck chk = stage_check_sym(laplacian(cur), expected_components, tau_gap);
        last_gap = chk.gap;
        if (chk.ok) {
            trace.steps.push_back({stage, i, j, w, chk.gap, expected_components, r, 0});
            return;
        }
    }
    throw ScheduleExhaustedError(std::string(stage) + " (" + std::to_string(i) + "," + std::to_string(j) +
                                 "): no admissible weight after " + std::to_string(max_retries) +
                                 " shrinks, last gap " + sci(last_gap));
}

// Directed twin of place_edge.
void place_arc(Digraph& cur, int from, int to, double base_weight, int expected_zeros, double tau_gap,
               Rng& rng, const char* stage, int max_retries, ConstructionTrace& trace) {
    cur.arcs.push_back({from, to, base_weight});
    double last_gap = 0.0;
    for (int r = 0; r <= max_retries; ++r) {
        double w = base_weight * std::pow(10.0, -r);
        if (r > 0) w *= 0.75 + 0.5 * rng.unit();
        cur.arcs.back().w = w;
        const StageCheck chk = stage_check_cplx(digraph_laplacian(cur), expected_zeros, tau_gap);
        last_gap = chk.gap;
        if (chk.ok) {
            trace.steps.push_back({stage, from, to, w, chk.gap, expected_zeros, r, 0});
            return;
        }
    }
    throw ScheduleExhaustedError(std::string(stage) + " (" + std::to_string(from) + "->" +
                                 std::to_string(to) + "): no admissible weight after " +
                                 std::to_string(max_retries) + " shrinks, last gap " + sci(last_gap));
}

bool induced_connected(const WeightedGraph& g, const std::vector<int>& nodes) {
    if (nodes.empty()) return false;
    std::vector<int> newid(g.n + 1, 0);
    int m = 0;
    for (int v : nodes) newid[v] = ++m;
    WeightedGraph h;
    h.n = m;
    for (const auto& e : g.edges)
        if (newid[e.i] && newid[e.j])
            h.edges.push_back({std::min(newid[e.i], newid[e.j]), std::max(newid[e.i], newid[e.j]), e.w});
    return is_connected(h);
}

void merge_into(PerturbationTuple& acc, const PerturbationTuple& extra) {
    for (const auto& [i, j, eps] : extra.entries) {
        bool found = false;
        for (auto& entry : acc.entries)
            if (std::get<0>(entry) == i && std::get<1>(entry) == j) {
                std::get<2>(entry) += eps;
                found = true;
                break;
            }
        if (!found) acc.entries.emplace_back(i, j, eps);
    }
}

void attach_certificate(PerturbationResult& out, const WeightedGraph& g) {
    out.certified = simplicity_certificate(laplacian(rationalize(apply_to_graph(g, out.perturbation))));
}

void attach_certificate_directed(PerturbationResult& out, const Digraph& dg) {
    out.certified =
        simplicity_certificate(digraph_laplacian(rationalize(apply_to_digraph(dg, out.perturbation))));
}

}  // namespace

BuildResult build_simple_support_laplacian(const WeightedGraph& g, double tau_gap, std::uint64_t seed,
                                           double rho) {
    validate(g);
    if (!(tau_gap > 0) || !(rho > 0) || rho >= 1)
        throw InvalidArgumentError("build_simple_support_laplacian: need tau_gap > 0 and rho in (0,1)");
    if (!is_connected(g)) throw NotConnectedError("build_simple_support_laplacian: graph is disconnected");

    const WeightedGraph tree = spanning_tree(g);
    const TreePath path = longest_path(tree);
    const auto schedule = branch_schedule(tree, path);

    BuildResult out;
    Rng rng(derive_seed(seed, 1));
    WeightedGraph cur;
    cur.n = g.n;
    int components = g.n;

    for (size_t k = 0; k + 1 < path.size(); ++k)
        place_edge(cur, path[k], path[k + 1], static_cast<double>(k + 1), --components, tau_gap, rng,
                   "path-edge", 0, out.trace);

    int level = 0;
    for (const auto& st : schedule)
        place_edge(cur, st.edge.i, st.edge.j, rho * golden_multiplier(level++), --components, tau_gap,
                   rng, "branch-edge", kMaxStageRetries, out.trace);

    std::vector<Edge> nontree;
    for (const auto& e : g.edges)
        if (!edge_weight(tree, e.i, e.j)) nontree.push_back(e);
    std::sort(nontree.begin(), nontree.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    for (const auto& e : nontree)
        place_edge(cur, e.i, e.j, rho * rho * golden_multiplier(level++), components, tau_gap, rng,
                   "nontree-edge", kMaxStageRetries, out.trace);

    out.laplacian = laplacian(cur);
    return out;
}

BuildResult build_simple_support_laplacian_directed(const Digraph& dg, double tau_gap,
                                                    std::uint64_t seed, double rho) {
    validate(dg);
    if (!(tau_gap > 0) || !(rho > 0) || rho >= 1)
        throw InvalidArgumentError(
            "build_simple_support_laplacian_directed: need tau_gap > 0 and rho in (0,1)");
    if (!is_weakly_connected(dg))
        throw NotConnectedError("build_simple_support_laplacian_directed: digraph is not weakly connected");
    const auto dt = diverging_spanning_tree(dg);
    if (!dt)
        throw NoDivergingTreeError(
            "build_simple_support_laplacian_directed: no diverging rooted spanning tree, the zero "
            "eigenvalue is structurally multiple and stays so under same-support perturbation");

    // Deepest node of the tree (smallest id on ties); the root-to-it path plays the
    // diameter path's role and keeps the partial Laplacian triangular.
    const auto adj = out_adjacency(dt->tree);
    std::vector<int> parent(dg.n + 1, 0), depth(dg.n + 1, -1);
    std::queue<int> q;
    q.push(dt->root);
    depth[dt->root] = 0;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (depth[v] < 0) {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                q.push(v);
            }
    }
    int deepest = dt->root;
    for (int v = 1; v <= dg.n; ++v)
        if (depth[v] > depth[deepest]) deepest = v;
    std::vector<int> path;
    for (int v = deepest; v != 0; v = parent[v]) {
        path.push_back(v);
        if (v == dt->root) break;
    }
    std::reverse(path.begin(), path.end());

    BuildResult out;
    Rng rng(derive_seed(seed, 1));
    Digraph cur;
    cur.n = dg.n;
    int zeros = dg.n;  // rows still all-zero: unattached nodes plus the root, forever

    for (size_t k = 0; k + 1 < path.size(); ++k)
        place_arc(cur, path[k], path[k + 1], static_cast<double>(k + 1), --zeros, tau_gap, rng,
                  "path-arc", 0, out.trace);

    std::vector<bool> covered(dg.n + 1, false);
    std::queue<int> bq;
    for (int v : path) {
        covered[v] = true;
        bq.push(v);
    }
    int level = 0;
    while (!bq.empty()) {
        const int u = bq.front();
        bq.pop();
        for (int v : adj[u])
            if (!covered[v]) {
                covered[v] = true;
                place_arc(cur, u, v, rho * golden_multiplier(level++), --zeros, tau_gap, rng,
                          "branch-arc", kMaxStageRetries, out.trace);
                bq.push(v);
            }
    }

    std::vector<Arc> nontree;
    for (const auto& a : dg.arcs)
        if (!arc_weight(dt->tree, a.from, a.to)) nontree.push_back(a);
    std::sort(nontree.begin(), nontree.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    for (const auto& a : nontree)
        place_arc(cur, a.from, a.to, rho * rho * golden_multiplier(level++), zeros, tau_gap, rng,
                  "nontree-arc", kMaxStageRetries, out.trace);

    out.laplacian = digraph_laplacian(cur);
    return out;
}

PerturbationResult perturb_to_simple(const Eigen::MatrixXd& L, double eps0, double tau_gap,
                                     std::uint64_t seed, bool certify) {
    if (!(eps0 > 0)) throw InvalidArgumentError("perturb_to_simple: eps0 must be positive");
    if (!is_valid_laplacian(L)) throw InvalidGraphError("perturb_to_simple: input is not a symmetric Laplacian");
    const WeightedGraph g = graph_from_laplacian(L);
    if (!is_connected(g)) throw NotConnectedError("perturb_to_simple: graph is disconnected");

    PerturbationResult out;
    out.perturbation.n = g.n;

    const GapReport rep0 = gap_report(sym_spectrum(L), tau_gap);
    if (rep0.simple) {
        out.result = L;
        out.gap = rep0;
        if (g.n >= 2) out.min_fiedler_entry = min_abs_entry(fiedler(L, tau_gap).vector).first;
        if (certify) attach_certificate(out, g);
        return out;
    }

    BuildResult ref = build_simple_support_laplacian(g, tau_gap, derive_seed(seed, 1));
    out.trace = std::move(ref.trace);
    const WeightedGraph ref_g = graph_from_laplacian(ref.laplacian);
    const double ref_norm = matrix_norm(ref.laplacian);

    Rng rng(derive_seed(seed, 2));
    double best_gap = 0.0;
    for (int m = 1; m <= kMaxLineSearchHalvings; ++m) {
        const double t = eps0 / ref_norm / std::pow(2.0, m);
        for (int jittered = 0; jittered <= 1; ++jittered) {
            PerturbationTuple tup;
            tup.n = g.n;
            for (const auto& e : ref_g.edges) {
                double eps = t * e.w;
                if (jittered) eps += rng.open_closed(0.0, t * 1e-3);
                tup.entries.emplace_back(e.i, e.j, eps);
            }
            // assembled through apply_perturbation so the returned tuple replays
            // into the returned matrix bit-exactly
            const Eigen::MatrixXd delta = structural_perturbation(g, tup);
            const Eigen::MatrixXd cand = apply_perturbation(L, tup);
            ++out.attempts;
            const GapReport rep = gap_report(sym_spectrum(cand), tau_gap);
            best_gap = std::max(best_gap, rep.min_gap);
            out.trace.steps.push_back({"line-search", jittered, 0, t, rep.min_gap, 0, m, 0});
            if (rep.simple) {
                out.perturbation = std::move(tup);
                out.result = cand;
                out.achieved_norm = matrix_norm(delta);
                out.gap = rep;
                if (g.n >= 2) out.min_fiedler_entry = min_abs_entry(fiedler(cand, tau_gap).vector).first;
                if (certify) attach_certificate(out, g);
                return out;
            }
        }
    }
    throw BudgetExhaustedError("perturb_to_simple: no simple candidate within " +
                               std::to_string(kMaxLineSearchHalvings) + " halvings (best gap " +
                               sci(best_gap) + ")");
}

PerturbationResult perturb_to_simple_directed(const Eigen::MatrixXd& L, double eps0, double tau_gap,
                                              std::uint64_t seed, bool certify) {
    if (!(eps0 > 0)) throw InvalidArgumentError("perturb_to_simple_directed: eps0 must be positive");
    if (!is_valid_laplacian(L, true))
        throw InvalidGraphError("perturb_to_simple_directed: input is not a digraph Laplacian");
    const Digraph dg = digraph_from_laplacian(L);
    if (!is_weakly_connected(dg))
        throw NotConnectedError("perturb_to_simple_directed: digraph is not weakly connected");
    if (!diverging_spanning_tree(dg))
        throw NoDivergingTreeError(
            "perturb_to_simple_directed: no diverging rooted spanning tree, the zero eigenvalue is "
            "structurally multiple and stays so under same-support perturbation");

    PerturbationResult out;
    out.perturbation.n = dg.n;
    out.perturbation.directed = true;

    // A defective eigenvalue pair of a nonsymmetric matrix splits under QR iteration by
    // roughly sqrt(machine epsilon), right at the default tolerance, so a gap barely
    // above tau_gap is no evidence of simplicity. The zero-perturbation early-out
    // demands two orders of margin; anything closer gets perturbed.
    const GapReport rep0 = gap_report(general_spectrum(L), tau_gap);
    if (rep0.min_gap > 100.0 * tau_gap * rep0.scale) {
        out.result = L;
        out.gap = rep0;
        if (certify) attach_certificate_directed(out, dg);
        return out;
    }

    BuildResult ref = build_simple_support_laplacian_directed(dg, tau_gap, derive_seed(seed, 1));
    out.trace = std::move(ref.trace);
    const Digraph ref_dg = digraph_from_laplacian(ref.laplacian);
    const double ref_norm = matrix_norm(ref.laplacian);

    Rng rng(derive_seed(seed, 2));
    double best_gap = 0.0;
    for (int m = 1; m <= kMaxLineSearchHalvings; ++m) {
        const double t = eps0 / ref_norm / std::pow(2.0, m);
        for (int jittered = 0; jittered <= 1; ++jittered) {
            PerturbationTuple tup;
            tup.n = dg.n;
            tup.directed = true;
            for (const auto& a : ref_dg.arcs) {
                double eps = t * a.w;
                if (jittered) eps += rng.open_closed(0.0, t * 1e-3);
                tup.entries.emplace_back(a.from, a.to, eps);
            }
            const Eigen::MatrixXd delta = directed_structural_perturbation(dg, tup);
            const Eigen::MatrixXd cand = apply_perturbation(L, tup);
            ++out.attempts;
            const GapReport rep = gap_report(general_spectrum(cand), tau_gap);
            best_gap = std::max(best_gap, rep.min_gap);
            out.trace.steps.push_back({"line-search", jittered, 0, t, rep.min_gap, 0, m, 0});
            if (rep.simple) {
                out.perturbation = std::move(tup);
                out.result = cand;
                out.achieved_norm = matrix_norm(delta);
                out.gap = rep;
                if (certify) attach_certificate_directed(out, dg);
                return out;
            }
        }
    }
    throw BudgetExhaustedError("perturb_to_simple_directed: no simple candidate within " +
                               std::to_string(kMaxLineSearchHalvings) + " halvings (best gap " +
                               sci(best_gap) + ")");
}

namespace {

// Shared driver for the nondegenerate-eigenvector searches. whole_basis widens the
// acceptance predicate from the Fiedler vector to every eigenvector k = 2..n.
PerturbationResult nondegenerate_search(const Eigen::MatrixXd& L, double eps0, double tau_v,
                                        double tau_gap, std::uint64_t seed, bool certify,
                                        bool whole_basis) {
    const char* me = whole_basis ? "perturb_basis_nonzero" : "perturb_fiedler_nonzero";
    if (!(eps0 > 0)) throw InvalidArgumentError(std::string(me) + ": eps0 must be positive");
    if (!(tau_v > 0)) throw InvalidArgumentError(std::string(me) + ": tau_v must be positive");
    if (L.rows() < 2) throw InvalidArgumentError(std::string(me) + ": no Fiedler vector below n = 2");

    PerturbationResult out = perturb_to_simple(L, eps0 / 2, tau_gap, derive_seed(seed, 1), false);
    const WeightedGraph g = graph_from_laplacian(L);

    int deg_max = 1;
    {
        std::vector<int> deg(g.n + 1, 0);
        for (const auto& e : g.edges) {
            deg_max = std::max(deg_max, ++deg[e.i]);
            deg_max = std::max(deg_max, ++deg[e.j]);
        }
    }
    const double c0 = eps0 / (4.0 * deg_max);
    Eigen::MatrixXd cur = out.result;
    Rng rng(derive_seed(seed, 2));
    const char* round_stage = whole_basis ? "basis-round" : "fiedler-round";

    for (int round = 0; round <= kMaxNondegenerateRounds; ++round) {
        bool ok = true;
        double min_entry = std::numeric_limits<double>::infinity();
        double min_ratio = std::numeric_limits<double>::infinity();
        Eigen::VectorXd probe;
        int probe_index = 2;
        if (whole_basis) {
            const SpectralDecomposition s = sym_spectrum(cur);
            ok = gap_report(s, tau_gap).simple;
            probe = s.eigenvectors.col(1);
            for (int k = 2; k <= g.n; ++k) {
                const Eigen::VectorXd col = s.eigenvectors.col(k - 1);
                const double mn = min_abs_entry(col).first;
                const double vinf = col.cwiseAbs().maxCoeff();
                if (mn <= tau_v * vinf && ok) {
                    ok = false;
                    probe = col;
                    probe_index = k;
                }
                min_entry = std::min(min_entry, mn);
                min_ratio = std::min(min_ratio, mn / vinf);
            }
        } else {
            const FiedlerResult f = fiedler(cur, tau_gap, tau_v);
            min_entry = min_abs_entry(f.vector).first;
            const double vinf = f.vector.cwiseAbs().maxCoeff();
            min_ratio = min_entry / vinf;
            ok = !f.degenerate_lambda2 && min_entry > tau_v * vinf;
            probe = f.vector;
        }
        for (const auto& e : g.edges) {
            const double d = probe[e.i - 1] - probe[e.j - 1];
            out.trace.steps.push_back({"derivative", e.i, e.j, d * d, min_ratio, 0, round, probe_index});
        }
        if (ok) {
            out.result = cur;
            out.gap = gap_report(sym_spectrum(cur), tau_gap);
            out.achieved_norm =
                out.perturbation.entries.empty() ? 0.0 : matrix_norm(structural_perturbation(g, out.perturbation));
            out.min_fiedler_entry = min_entry;
            if (certify) attach_certificate(out, g);
            return out;
        }
        if (round == kMaxNondegenerateRounds) break;
        const double cm = c0 / std::pow(2.0, round);
        PerturbationTuple tup;
        tup.n = g.n;
        for (const auto& e : g.edges) tup.entries.emplace_back(e.i, e.j, rng.open_closed(0.0, cm));
        merge_into(out.perturbation, tup);
        // reassemble from the merged tuple so it replays into the result bit-exactly
        cur = apply_perturbation(L, out.perturbation);
        ++out.attempts;
        out.trace.steps.push_back({round_stage, 0, 0, cm, 0.0, 0, round, 0});
    }
    throw BudgetExhaustedError(std::string(me) + ": eigenvector coordinates still degenerate after " +
                               std::to_string(kMaxNondegenerateRounds) + " noise rounds");
}

}  // namespace

PerturbationResult perturb_fiedler_nonzero(const Eigen::MatrixXd& L, double eps0, double tau_v,
                                           double tau_gap, std::uint64_t seed, bool certify) {
    return nondegenerate_search(L, eps0, tau_v, tau_gap, seed, certify, false);
}

PerturbationResult perturb_basis_nonzero(const Eigen::MatrixXd& L, double eps0, double tau_v,
                                         double tau_gap, std::uint64_t seed, bool certify) {
    return nondegenerate_search(L, eps0, tau_v, tau_gap, seed, certify, true);
}

CutResult fiedler_cut(const Eigen::MatrixXd& L, double tau_gap, double tau_v) {
    if (!is_valid_laplacian(L)) throw InvalidGraphError("fiedler_cut: input is not a symmetric Laplacian");
    const WeightedGraph g = graph_from_laplacian(L);
    if (!is_connected(g)) throw NotConnectedError("fiedler_cut: graph is disconnected");

    const FiedlerResult f = fiedler(L, tau_gap, tau_v);
    if (f.degenerate_lambda2)
        throw DegenerateLambda2Error(
            "fiedler_cut: lambda_2 is not simple at tolerance; run perturb_to_simple first");
    const auto [mn, idx] = min_abs_entry(f.vector);
    const double vinf = f.vector.cwiseAbs().maxCoeff();
    if (mn <= tau_v * vinf)
        throw DegenerateFiedlerError("fiedler_cut: Fiedler coordinate " + std::to_string(idx) +
                                     " vanishes at tolerance; run perturb_fiedler_nonzero first");

    CutResult cut;
    cut.lambda2 = f.lambda2;
    cut.fiedler_vector = f.vector;
    for (int i = 1; i <= g.n; ++i) (f.vector[i - 1] > 0 ? cut.positive : cut.negative).push_back(i);
    for (const auto& e : g.edges)
        if (f.vector[e.i - 1] * f.vector[e.j - 1] < 0) cut.cut_edges.emplace_back(e.i, e.j);
    cut.parts_connected = induced_connected(g, cut.positive) && induced_connected(g, cut.negative);
    return cut;
}

}  // namespace lapspec
