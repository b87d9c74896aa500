// Acceptance suite: one self-contained check per shipping requirement, one
// PASS/FAIL line each, exit code = number of failed checks. Everything is
// seeded, so a failure reproduces by rerunning the binary.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lapspec/certificates.hpp"
#include "lapspec/errors.hpp"
#include "lapspec/io.hpp"
#include "lapspec/laplacian.hpp"
#include "lapspec/montecarlo.hpp"
#include "lapspec/perturb.hpp"
#include "lapspec/polynomial.hpp"
#include "lapspec/rational.hpp"
#include "lapspec/rng.hpp"
#include "lapspec/spectrum.hpp"

#include "oracles.hpp"

namespace {

using namespace lapspec;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Checker {
    std::vector<std::string> failures;
    long checks = 0;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 6) failures.push_back(what);
    }
};

int g_failed = 0;

void run_criterion(int id, const std::string& label, const std::function<void(Checker&)>& body) {
    Checker c;
    std::string aborted;
    try {
        body(c);
    } catch (const std::exception& e) {
        aborted = std::string("aborted: ") + e.what();
    }
    if (aborted.empty() && c.failures.empty()) {
        std::printf("PASS criterion %d: %s (%ld checks)\n", id, label.c_str(), c.checks);
        std::fflush(stdout);
        return;
    }
    ++g_failed;
    std::printf("FAIL criterion %d: %s\n", id, label.c_str());
    if (!aborted.empty()) std::printf("       %s\n", aborted.c_str());
    for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

RationalGraph exact_complete(int n) {
    RationalGraph g;
    g.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.edges.push_back({i, j, Rational(1)});
    return g;
}

// Random connected graph in the style used throughout: a uniform random tree
// plus a few extra edges, weights uniform in [0.5, 1.5).
WeightedGraph random_corpus_graph(int n, int extra, Rng& rng) {
    auto g = random_connected(n, extra, rng);
    randomize_weights(g, rng);
    return g;
}

// Random digraph that owns a diverging spanning tree by construction: a random
// tree oriented away from node 1, plus extra arcs.
Digraph random_diverging_digraph(int n, Rng& rng) {
    const auto tree = random_tree(n, rng);
    const auto adj = adjacency(tree);
    Digraph dg;
    dg.n = n;
    std::set<std::pair<int, int>> used;
    std::vector<bool> seen(n + 1, false);
    std::vector<int> queue{1};
    seen[1] = true;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                dg.arcs.push_back({u, v, rng.halfopen(0.5, 1.5)});
                used.insert({u, v});
                queue.push_back(v);
            }
    }
    const int extra = static_cast<int>(rng.integer_in(0, 3));
    for (int k = 0; k < extra && n >= 2; ++k) {
        const int a = static_cast<int>(rng.integer_in(1, n));
        const int b = static_cast<int>(rng.integer_in(1, n));
        if (a == b || !used.insert({a, b}).second) continue;
        dg.arcs.push_back({a, b, rng.halfopen(0.5, 1.5)});
    }
    return dg;
}

bool induced_connected_oracle(const WeightedGraph& g, const std::vector<int>& nodes) {
    if (nodes.empty()) return false;
    std::vector<int> newid(g.n + 1, 0);
    int m = 0;
    for (int v : nodes) newid[v] = ++m;
    WeightedGraph h;
    h.n = m;
    for (const auto& e : g.edges)
        if (newid[e.i] && newid[e.j])
            h.edges.push_back({std::min(newid[e.i], newid[e.j]),
                               std::max(newid[e.i], newid[e.j]), e.w});
    return oracles::components_by_union_find(h) == 1;
}

// ---- criterion bodies ------------------------------------------------------

void crit1_path_closed_forms(Checker& c) {
    const auto t0 = Clock::now();
    for (int p = 2; p <= 200; ++p) {
        const auto s = sym_spectrum(laplacian(make_path<double>(p)));
        for (int k = 0; k < p; ++k) {
            const double expect = 2.0 - 2.0 * std::cos(k * std::numbers::pi / p);
            if (std::abs(s.eigenvalues[k] - expect) > 1e-9) {
                c.require(false, "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                     " off by " + fmt(std::abs(s.eigenvalues[k] - expect)));
                return;
            }
            ++c.checks;
        }
    }
    const double dt = seconds_since(t0);
    c.require(dt < 10.0, "runtime " + fmt(dt) + " s exceeds 10 s");
}

void crit2_interior_zero(Checker& c) {
    const auto s = sym_spectrum(laplacian(make_path<double>(10)));
    c.require(std::abs(s.eigenvectors(2, 2)) < 1e-10,
              "third eigenvector entry 3 is " + fmt(s.eigenvectors(2, 2)));

    const auto X = path_closed_form_eigenvectors(10);
    for (int k = 0; k < 10; ++k) {
        const Eigen::VectorXd ref = X.col(k) / X.col(k).norm();
        const Eigen::VectorXd got = s.eigenvectors.col(k);
        const double dist = std::min((got - ref).cwiseAbs().maxCoeff(),
                                     (got + ref).cwiseAbs().maxCoeff());
        c.require(dist <= 1e-8,
                  "eigenvector " + std::to_string(k + 1) + " deviates by " + fmt(dist));
    }
}

void crit3_simple_spectrum_perturbation(Checker& c) {
    const auto t0 = Clock::now();
    Rng rng(2026);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.integer_in(3, 40));
        const auto g = random_corpus_graph(n, static_cast<int>(rng.integer_in(0, 5)), rng);
        const auto L = laplacian(g);
        const auto r = perturb_to_simple(L, 1e-2, 1e-8, 4000 + trial);
        c.require(support_equal(L, r.result), "trial " + std::to_string(trial) + ": support changed");
        c.require(r.achieved_norm < 1e-2,
                  "trial " + std::to_string(trial) + ": norm " + fmt(r.achieved_norm));
        c.require(r.gap.min_gap > 1e-8 * r.gap.scale,
                  "trial " + std::to_string(trial) + ": gap " + fmt(r.gap.min_gap));
    }
    const double dt = seconds_since(t0);
    c.require(dt < 60.0, "runtime " + fmt(dt) + " s exceeds 60 s");
}

void crit4_exact_certificates(Checker& c) {
    for (int n = 3; n <= 6; ++n) {
        const Rational before = discriminant(char_poly(laplacian(exact_complete(n))));
        c.require(before == 0, "K" + std::to_string(n) + ": discriminant not exactly zero");

        const auto r = perturb_to_simple(laplacian(make_complete<double>(n)), 1e-2, 1e-8,
                                         static_cast<std::uint64_t>(n));
        const RationalGraph pq = rationalize(graph_from_laplacian(r.result));
        const Rational after = discriminant(char_poly(laplacian(pq)));
        c.require(after != 0,
                  "K" + std::to_string(n) + ": perturbed+rationalized discriminant is zero");
    }

    Rng rng(404);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = static_cast<int>(rng.integer_in(2, 6));
        RationalMatrix M(n, n);
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                M(r, col) = Rational(rng.integer_in(-9, 9), rng.integer_in(1, 7));
        c.require(char_poly(M) == oracles::char_poly_by_permutations(M),
                  "char_poly mismatch vs permutation oracle, rep " + std::to_string(rep));
    }
}

void crit5_nondegenerate_eigenvectors(Checker& c) {
    auto check_fiedler = [&c](const Eigen::MatrixXd& L, double norm, const std::string& tag) {
        const auto f = fiedler(L, 1e-8, 1e-8);
        const double vinf = f.vector.cwiseAbs().maxCoeff();
        c.require(min_abs_entry(f.vector).first > 1e-8 * vinf, tag + ": Fiedler entry at zero");
        c.require(norm < 1e-2, tag + ": norm " + fmt(norm));
    };

    const auto p3 = perturb_fiedler_nonzero(laplacian(make_path<double>(3)), 1e-2, 1e-8, 1e-8, 1);
    check_fiedler(p3.result, p3.achieved_norm, "P3");

    Rng rng(505);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_corpus_graph(static_cast<int>(rng.integer_in(3, 20)),
                                           static_cast<int>(rng.integer_in(0, 4)), rng);
        const auto L = laplacian(g);
        const auto r = perturb_fiedler_nonzero(L, 1e-2, 1e-8, 1e-8, 5000 + trial);
        c.require(support_equal(L, r.result), "trial " + std::to_string(trial) + ": support changed");
        check_fiedler(r.result, r.achieved_norm, "trial " + std::to_string(trial));
    }

    // every eigenvector of the ten-node unit path, including the one with the
    // interior zero, must clear the threshold after the basis pass
    const auto rb = perturb_basis_nonzero(laplacian(make_path<double>(10)), 1e-2, 1e-8, 1e-8, 2);
    const auto s = sym_spectrum(rb.result);
    c.require(gap_report(s, 1e-8).simple, "P10 basis: spectrum not simple");
    for (int k = 2; k <= 10; ++k) {
        const Eigen::VectorXd col = s.eigenvectors.col(k - 1);
        c.require(min_abs_entry(col).first > 1e-8 * col.cwiseAbs().maxCoeff(),
                  "P10 basis: eigenvector " + std::to_string(k) + " still has a zero entry");
    }
    c.require(rb.achieved_norm < 1e-2, "P10 basis: norm " + fmt(rb.achieved_norm));
}

void crit6_directed(Checker& c) {
    Rng rng(606);
    for (int trial = 0; trial < 50; ++trial) {
        const auto dg = random_diverging_digraph(static_cast<int>(rng.integer_in(2, 20)), rng);
        const auto L = digraph_laplacian(dg);
        const auto r = perturb_to_simple_directed(L, 1e-2, 1e-8, 6000 + trial);
        const auto s = general_spectrum(r.result);
        double mind = std::numeric_limits<double>::infinity();
        for (Eigen::Index a = 0; a < s.eigenvalues.size(); ++a)
            for (Eigen::Index b = a + 1; b < s.eigenvalues.size(); ++b)
                mind = std::min(mind, std::abs(s.eigenvalues[a] - s.eigenvalues[b]));
        c.require(mind > 1e-8 * s.scale,
                  "trial " + std::to_string(trial) + ": pairwise distance " + fmt(mind));
        c.require(support_equal(L, r.result), "trial " + std::to_string(trial) + ": support changed");
    }

    // two-source digraphs: rejected, and the unperturbed zero eigenvalue is double
    Digraph g1;
    g1.n = 4;
    g1.arcs = {{1, 2, 1.0}, {4, 2, 1.0}, {1, 3, 1.0}, {4, 3, 1.0}};
    Digraph g2 = g1;
    g2.n = 5;
    g2.arcs.push_back({3, 5, 1.0});

    int which = 0;
    for (const Digraph& base : {g1, g2}) {
        ++which;
        const std::string tag = "two-source digraph " + std::to_string(which);
        for (int rep = 0; rep < 10; ++rep) {
            Digraph dg = base;
            for (auto& a : dg.arcs) a.w = rng.halfopen(0.5, 1.5);
            const auto L = digraph_laplacian(dg);
            bool rejected = false;
            try {
                perturb_to_simple_directed(L, 1e-2, 1e-8, rep);
            } catch (const NoDivergingTreeError&) {
                rejected = true;
            }
            c.require(rejected, tag + ": perturbation was not rejected");

            const auto s = general_spectrum(L);
            int zeros = 0;
            for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k)
                if (std::abs(s.eigenvalues[k]) <= 1e-8 * s.scale) ++zeros;
            c.require(zeros == 2, tag + ": zero multiplicity " + std::to_string(zeros));
        }
    }
}

void crit7_measure_zero_probes(Checker& c) {
    const auto t0 = Clock::now();

    // The random corpus member must itself sit visibly off the degenerate sets,
    // otherwise the 1e-10 proximity counters measure the input, not the trials.
    // Screen seeded draws for a clear spectral gap and a clear distance between
    // the spectrum and the dropped-node (grounded) spectrum before probing.
    Rng seed_rng(707);
    WeightedGraph random12;
    for (int draw = 0;; ++draw) {
        if (draw > 50) throw std::runtime_error("no well-separated 12-node instance in 50 draws");
        random12 = random_corpus_graph(12, 4, seed_rng);
        const Eigen::MatrixXd L = laplacian(random12);
        const auto s = sym_spectrum(L);
        const auto rep = gap_report(s);
        if (rep.min_gap <= 1e-4 * rep.scale) continue;
        const Eigen::MatrixXd grounded = L.topLeftCorner(11, 11);
        const auto sub = sym_spectrum(grounded);
        double cross = std::numeric_limits<double>::infinity();
        for (Eigen::Index a = 0; a < s.eigenvalues.size(); ++a)
            for (Eigen::Index b = 0; b < sub.eigenvalues.size(); ++b)
                cross = std::min(cross, std::abs(s.eigenvalues[a] - sub.eigenvalues[b]));
        if (cross > 1e-4 * std::max(rep.scale, sub.scale)) break;
    }

    struct Probe {
        const char* name;
        WeightedGraph graph;
    };
    const std::vector<Probe> corpus = {{"K3", make_complete<double>(3)},
                                       {"P3", make_path<double>(3)},
                                       {"S5", make_star<double>(5)},
                                       {"random12", random12}};

    std::uint64_t seed = 70000;
    for (const auto& probe : corpus) {
        TrialConfig cfg;
        cfg.graph = probe.graph;
        cfg.trials = 10000;
        cfg.eps0 = 1e-2;
        cfg.tau_gap = 1e-10;
        cfg.tau_v = 1e-10;
        cfg.exact_mode = true;
        cfg.seed = ++seed;

        const auto simp = mc_simplicity(cfg);
        c.require(simp.degenerate_hits == 0,
                  std::string(probe.name) + ": " + std::to_string(simp.degenerate_hits) +
                      " floating degenerate hits");
        c.require(simp.exact_degenerate_hits == 0,
                  std::string(probe.name) + ": " + std::to_string(simp.exact_degenerate_hits) +
                      " exact degenerate hits");

        cfg.seed = ++seed;
        const auto fz = mc_fiedler_zero(cfg);
        c.require(fz.fiedler_zero_hits == 0,
                  std::string(probe.name) + ": " + std::to_string(fz.fiedler_zero_hits) +
                      " Fiedler zero hits");
        c.require(fz.exact_degenerate_hits == 0,
                  std::string(probe.name) + ": " + std::to_string(fz.exact_degenerate_hits) +
                      " exact degenerate hits (Fiedler campaign)");

        cfg.trials = 1000;
        cfg.seed = ++seed;
        const auto sub = mc_subgraph_disjoint(cfg);
        c.require(sub.intersection_hits == 0,
                  std::string(probe.name) + ": " + std::to_string(sub.intersection_hits) +
                      " spectra intersection hits");
        c.require(sub.exact_intersection_hits == 0,
                  std::string(probe.name) + ": " + std::to_string(sub.exact_intersection_hits) +
                      " exact intersection hits");
    }
    const double dt = seconds_since(t0);
    c.require(dt < 300.0, "runtime " + fmt(dt) + " s exceeds 300 s");
}

void crit8_forest_zero_count(Checker& c) {
    Rng rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.integer_in(1, 30));
        const int parts = static_cast<int>(rng.integer_in(1, std::min(4, n)));

        // split n nodes into `parts` nonempty blocks, a random tree in each
        std::vector<int> sizes(parts, 1);
        for (int left = n - parts; left > 0; --left) ++sizes[rng.integer_in(0, parts - 1)];
        WeightedGraph forest;
        forest.n = n;
        int offset = 0;
        for (int b = 0; b < parts; ++b) {
            const auto t = random_tree(sizes[b], rng);
            for (const auto& e : t.edges)
                forest.edges.push_back({e.i + offset, e.j + offset, e.w});
            offset += sizes[b];
        }
        randomize_weights(forest, rng);

        const auto s = sym_spectrum(laplacian(forest));
        int zeros = 0;
        for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k)
            if (s.eigenvalues[k] < 1e-8 * s.scale) ++zeros;
        c.require(zeros == parts, "trial " + std::to_string(trial) + ": " + std::to_string(zeros) +
                                      " near-zero eigenvalues for " + std::to_string(parts) +
                                      " components");
        c.require(oracles::components_by_union_find(forest) == parts,
                  "trial " + std::to_string(trial) + ": forest construction broke");
    }
}

void crit9_derivative_vs_fd(Checker& c) {
    Rng rng(909);
    int graphs_done = 0;
    while (graphs_done < 50) {
        const auto g = random_corpus_graph(static_cast<int>(rng.integer_in(3, 14)),
                                           static_cast<int>(rng.integer_in(0, 3)), rng);
        const auto L = laplacian(g);
        const auto rep = gap_report(sym_spectrum(L));
        if (rep.min_gap <= 1e-4 * rep.scale) continue;  // the formula needs simple eigenvalues
        ++graphs_done;

        int pairs = 0;
        for (int attempt = 0; attempt < 40 && pairs < 3; ++attempt) {
            const int k = static_cast<int>(rng.integer_in(2, g.n));
            const auto& e =
                g.edges[static_cast<size_t>(rng.integer_in(0, static_cast<long long>(g.edges.size()) - 1))];
            const double analytic = eigenvalue_weight_derivative(L, k, e.i, e.j);
            if (std::abs(analytic) < 1e-3) continue;  // FD noise drowns near-flat directions
            const double numeric = oracles::eigenvalue_fd(g, e.i, e.j, k, 1e-6);
            const double rel = std::abs(analytic - numeric) / std::max(std::abs(analytic), std::abs(numeric));
            c.require(rel < 1e-5, "graph " + std::to_string(graphs_done) + " edge (" +
                                      std::to_string(e.i) + "," + std::to_string(e.j) + ") k=" +
                                      std::to_string(k) + ": rel err " + fmt(rel));
            ++pairs;
        }
        c.require(pairs >= 1, "graph " + std::to_string(graphs_done) + ": no well-scaled derivative");
    }
}

void crit10_cut_contract(Checker& c) {
    Rng rng(1010);
    std::vector<WeightedGraph> corpus;
    for (int p = 4; p <= 10; ++p) corpus.push_back(make_path<double>(p));
    corpus.push_back(make_cycle<double>(5));
    corpus.push_back(make_cycle<double>(8));
    for (int trial = 0; trial < 60; ++trial)
        corpus.push_back(random_corpus_graph(static_cast<int>(rng.integer_in(3, 18)),
                                             static_cast<int>(rng.integer_in(0, 4)), rng));

    int accepted = 0;
    for (const auto& g : corpus) {
        CutResult cut;
        try {
            cut = fiedler_cut(laplacian(g));
        } catch (const Error&) {
            continue;  // the cut may refuse degenerate inputs; accepted cuts are under test
        }
        ++accepted;
        c.require(!cut.positive.empty() && !cut.negative.empty(), "empty side in an accepted cut");
        c.require(induced_connected_oracle(g, cut.positive), "positive side disconnected");
        c.require(induced_connected_oracle(g, cut.negative), "negative side disconnected");
        c.require(cut.parts_connected, "cut reported disconnected parts yet was accepted");

        std::set<std::pair<int, int>> expected;
        for (const auto& e : g.edges)
            if (cut.fiedler_vector[e.i - 1] * cut.fiedler_vector[e.j - 1] < 0)
                expected.insert({e.i, e.j});
        const std::set<std::pair<int, int>> got(cut.cut_edges.begin(), cut.cut_edges.end());
        c.require(got == expected, "cut edges are not exactly the sign-crossing pairs");
    }
    c.require(accepted >= 20, "only " + std::to_string(accepted) + " corpus graphs accepted");
}

// ---- criterion 11: CLI byte-level reproducibility --------------------------

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& command) {
    CliRun r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

void crit11_reproducibility(Checker& c) {
    const char* bin = std::getenv("LAPSPEC_BIN");
    if (!bin || !*bin) {
        c.require(false, "LAPSPEC_BIN is not set; cannot exercise the CLI");
        return;
    }
    const std::string exe(bin);

    const std::string und = "acceptance_cli_undirected.txt";
    const std::string dir = "acceptance_cli_directed.txt";
    {
        std::ofstream f(und);
        f << "6 6\n1 2 1\n2 3 5/4\n3 4 1\n4 5 7/8\n5 6 1\n2 5 1/3\n";
        std::ofstream d(dir);
        d << "5 5 directed\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n2 5 1/2\n";
    }

    const std::vector<std::string> commands = {
        exe + " gen path 6 random --seed 4",
        exe + " gen gnp 8 unit --p 0.5 --seed 11",
        exe + " spectrum " + und + " --json",
        exe + " spectrum " + und + " --json --exact",
        exe + " spectrum " + dir + " --json",
        exe + " perturb " + und + " --mode simple --eps 1e-2 --seed 5 --certify",
        exe + " perturb " + und + " --mode fiedler --eps 1e-2 --seed 6",
        exe + " perturb " + dir + " --mode directed-simple --eps 1e-2 --seed 2",
        exe + " partition " + und + " --auto-perturb --seed 3",
        exe + " mc " + und + " --experiment simplicity --trials 50 --eps 1e-2 --seed 9",
        exe + " mc " + und + " --experiment subgraph-disjoint --trials 25 --eps 1e-2 --seed 10 --exact",
        exe + " export " + und + " --format matrix-market",
    };

    for (const auto& cmd : commands) {
        const auto first = run_cli(cmd);
        const auto second = run_cli(cmd);
        const std::string tag = cmd.substr(exe.size() + 1, 30);
        c.require(first.exit_code == 0, tag + ": exit code " + std::to_string(first.exit_code));
        c.require(!first.output.empty(), tag + ": empty output");
        c.require(first.output == second.output, tag + ": rerun output differs");
    }

    std::remove(und.c_str());
    std::remove(dir.c_str());
}

}  // namespace

int main() {
    run_criterion(1, "unit path spectra match the closed form for p = 2..200", crit1_path_closed_forms);
    run_criterion(2, "ten-node path: interior eigenvector zero and closed-form columns", crit2_interior_zero);
    run_criterion(3, "same-support perturbation reaches a simple spectrum on 100 random graphs",
                  crit3_simple_spectrum_perturbation);
    run_criterion(4, "exact discriminant certificates before and after perturbation",
                  crit4_exact_certificates);
    run_criterion(5, "Fiedler and full-basis eigenvector coordinates pushed off zero",
                  crit5_nondegenerate_eigenvectors);
    run_criterion(6, "directed perturbation: diverging trees succeed, two-source digraphs refuse",
                  crit6_directed);
    run_criterion(7, "Monte Carlo probes never hit the degenerate sets", crit7_measure_zero_probes);
    run_criterion(8, "forest zero-eigenvalue count equals the component count", crit8_forest_zero_count);
    run_criterion(9, "eigenvalue weight derivatives match central finite differences",
                  crit9_derivative_vs_fd);
    run_criterion(10, "accepted Fiedler cuts split into two connected sign classes", crit10_cut_contract);
    run_criterion(11, "CLI reruns are byte-identical for fixed flags and seed", crit11_reproducibility);

    if (g_failed == 0) {
        std::printf("acceptance: all 11 criteria hold\n");
    } else {
        std::printf("acceptance: %d criteria failed\n", g_failed);
    }
    return g_failed;
}
