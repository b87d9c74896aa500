// Command-line front end: spectrum reports, guaranteed perturbations, Fiedler
// partitions, Monte Carlo campaigns, graph generation, and matrix export, all
// over the line-oriented graph-file format. Every JSON output embeds a run
// manifest (command line, seed, input hash, version) and is canonically
// serialized, so a rerun with the same flags and seed is byte-identical.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lapspec/certificates.hpp"
#include "lapspec/errors.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/io.hpp"
#include "lapspec/laplacian.hpp"
#include "lapspec/montecarlo.hpp"
#include "lapspec/perturb.hpp"
#include "lapspec/rational.hpp"
#include "lapspec/rng.hpp"
#include "lapspec/spectrum.hpp"

namespace {

using namespace lapspec;

constexpr long long kLatticeDen = 1000000;

struct LoadedInput {
    GraphFile file;
    std::string hash;
};

// Read the file once: the same bytes feed the parser and the manifest hash.
LoadedInput load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    std::istringstream stream(bytes);
    return {parse_graph_file(stream, path), hex64(fnv1a64(bytes))};
}

RunManifest make_manifest(const std::string& command, const std::vector<std::string>& argv,
                          std::uint64_t seed, const std::string& input_hash) {
    RunManifest m;
    m.command = command;
    m.argv = argv;
    m.seed = seed;
    m.input_hash = input_hash;
    return m;
}

void emit(const nlohmann::json& doc) { std::cout << canonical_dump(doc); }

// %.12g for human-readable text lines (JSON keeps the full 17 digits).
std::string short_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

nlohmann::json vector_json(const Eigen::VectorXd& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v(k));
    return a;
}

nlohmann::json complex_vector_json(const Eigen::VectorXcd& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        a.push_back(nlohmann::json::array({v(k).real(), v(k).imag()}));
    }
    return a;
}

nlohmann::json gap_json(const GapReport& g) {
    return {{"min_gap", g.min_gap}, {"scale", g.scale}, {"simple", g.simple},
            {"tau_gap", g.tau_gap}};
}

nlohmann::json tuple_json(const PerturbationTuple& t) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [x, y, eps] : t.entries) {
        if (t.directed) {
            a.push_back({{"eps", eps}, {"from", x}, {"to", y}});
        } else {
            a.push_back({{"eps", eps}, {"i", x}, {"j", y}});
        }
    }
    return a;
}

nlohmann::json trace_json(const ConstructionTrace& t) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& s : t.steps) {
        a.push_back({{"components", s.components},
                     {"eigen_index", s.eigen_index},
                     {"min_gap", s.min_gap},
                     {"retries", s.retries},
                     {"stage", s.stage},
                     {"u", s.u},
                     {"v", s.v},
                     {"weight", s.weight}});
    }
    return a;
}

nlohmann::json certificate_json(const Certificate& c) {
    return {{"context", c.context},
            {"kind", c.kind},
            {"value", to_string(c.value)},
            {"verdict", c.verdict}};
}

nlohmann::json cut_json(const CutResult& c) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : c.cut_edges) edges.push_back(nlohmann::json::array({i, j}));
    return {{"cut_edges", edges},
            {"fiedler_vector", vector_json(c.fiedler_vector)},
            {"lambda2", c.lambda2},
            {"negative", c.negative},
            {"parts_connected", c.parts_connected},
            {"positive", c.positive}};
}

template <typename GraphLike>
std::string graph_file_string(const GraphLike& g) {
    std::ostringstream out;
    write_graph_file(out, g);
    return out.str();
}

void write_text_output(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidArgumentError("cannot open output file: " + path);
    out << text;
}

// Nearest point of the exact sampling lattice, computed in exact arithmetic so
// weights that already live on the lattice pass through unchanged.
Rational snap_to_lattice(const Rational& w) {
    const Rational scaled = w * kLatticeDen + Rational(1, 2);
    const BigInt k = numerator(scaled) / denominator(scaled);  // scaled > 0: floor
    if (k <= 0) {
        throw InvalidArgumentError("exact mode: weight " + to_string(w) +
                                   " rounds to a nonpositive 1/1000000 lattice point");
    }
    return Rational(k, kLatticeDen);
}

// ---- spectrum ----------------------------------------------------------

int cmd_spectrum(const std::vector<std::string>& argv, const std::string& path, bool exact,
                 bool json_out, double tau_gap) {
    const LoadedInput input = load_input(path);
    const GraphFile& gf = input.file;
    nlohmann::json body;
    std::ostringstream text;

    if (gf.directed) {
        const Eigen::MatrixXd L = digraph_laplacian(gf.digraph);
        const ComplexSpectralDecomposition dec = general_spectrum(L);
        const GapReport rep = gap_report(dec, tau_gap);
        int zero_mult = 0;
        for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k) {
            if (std::abs(dec.eigenvalues(k)) <= tau_gap * dec.scale) ++zero_mult;
        }
        body["directed"] = true;
        body["eigenvalues"] = complex_vector_json(dec.eigenvalues);
        body["gap"] = gap_json(rep);
        body["max_residual"] = dec.max_residual;
        body["zero_multiplicity"] = zero_mult;
        text << "digraph: " << gf.digraph.n << " nodes, " << gf.digraph.arcs.size() << " arcs\n";
        text << "eigenvalues:";
        for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k) {
            char buf[80];
            std::snprintf(buf, sizeof(buf), " %.12g%+.12gi", dec.eigenvalues(k).real(),
                          dec.eigenvalues(k).imag());
            text << buf;
        }
        text << "\nmin gap " << short_double(rep.min_gap) << "  scale "
             << short_double(rep.scale) << "  simple: " << (rep.simple ? "yes" : "no") << '\n';
        text << "zero eigenvalue multiplicity at tolerance: " << zero_mult << '\n';
        if (exact) {
            const Certificate cert = simplicity_certificate(digraph_laplacian(gf.rational_digraph));
            body["certificate"] = certificate_json(cert);
            if (cert.verdict) {
                text << "certificate: simple spectrum (Discr = " << to_string(cert.value)
                     << " != 0)\n";
            } else {
                text << "certificate: DEGENERATE (Discr = 0)\n";
            }
        }
    } else {
        const Eigen::MatrixXd L = laplacian(gf.graph);
        const SpectralDecomposition dec = sym_spectrum(L);
        const GapReport rep = gap_report(dec, tau_gap);
        const int comps = component_count(gf.graph);
        body["directed"] = false;
        body["eigenvalues"] = vector_json(dec.eigenvalues);
        body["gap"] = gap_json(rep);
        body["max_residual"] = dec.max_residual;
        body["components"] = comps;
        body["connected"] = comps == 1;
        text << "graph: " << gf.graph.n << " nodes, " << gf.graph.edges.size() << " edges\n";
        text << "eigenvalues:";
        for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), " %.12g", dec.eigenvalues(k));
            text << buf;
        }
        text << "\nmin gap " << short_double(rep.min_gap) << "  scale "
             << short_double(rep.scale) << "  simple: " << (rep.simple ? "yes" : "no") << '\n';
        if (comps != 1) {
            // Zero's multiplicity equals the component count; the report is
            // still valid, so warn instead of refusing.
            text << "warning: graph is disconnected (" << comps
                 << " components); eigenvalue 0 has multiplicity " << comps << '\n';
        } else if (gf.graph.n >= 2) {
            const FiedlerResult fr = fiedler(L, tau_gap);
            body["fiedler"] = {{"degenerate_lambda2", fr.degenerate_lambda2},
                               {"lambda2", fr.lambda2},
                               {"vector", vector_json(fr.vector)}};
            text << "lambda2 " << short_double(fr.lambda2) << "  fiedler:";
            for (Eigen::Index k = 0; k < fr.vector.size(); ++k) {
                char buf[48];
                std::snprintf(buf, sizeof(buf), " %.12g", fr.vector(k));
                text << buf;
            }
            text << '\n';
            if (fr.degenerate_lambda2) text << "warning: lambda_2 is not simple at tolerance\n";
        }
        if (exact) {
            const Certificate cert = simplicity_certificate(laplacian(gf.rational_graph));
            body["certificate"] = certificate_json(cert);
            if (cert.verdict) {
                text << "certificate: simple spectrum (Discr = " << to_string(cert.value)
                     << " != 0)\n";
            } else {
                text << "certificate: DEGENERATE (Discr = 0)\n";
            }
        }
    }

    if (json_out) {
        emit({{"manifest", manifest_json(make_manifest("spectrum", argv, 0, input.hash))},
              {"spectrum", body}});
    } else {
        std::cout << text.str();
    }
    return 0;
}

// ---- perturb -----------------------------------------------------------

int cmd_perturb(const std::vector<std::string>& argv, const std::string& path,
                const std::string& mode, double eps, double tau_gap, double tau_v,
                std::uint64_t seed, const std::string& out_path, bool certify) {
    const LoadedInput input = load_input(path);
    const GraphFile& gf = input.file;

    if ((mode == "directed-simple") != gf.directed) {
        throw InvalidArgumentError(gf.directed
                                       ? "perturb: directed input needs --mode directed-simple"
                                       : "perturb: mode directed-simple needs a directed input");
    }

    PerturbationResult res;
    std::string graph_text;
    if (gf.directed) {
        res = perturb_to_simple_directed(digraph_laplacian(gf.digraph), eps, tau_gap, seed,
                                         certify);
        graph_text = graph_file_string(apply_to_digraph(gf.digraph, res.perturbation));
    } else {
        const Eigen::MatrixXd L = laplacian(gf.graph);
        if (mode == "simple") {
            res = perturb_to_simple(L, eps, tau_gap, seed, certify);
        } else if (mode == "fiedler") {
            res = perturb_fiedler_nonzero(L, eps, tau_v, tau_gap, seed, certify);
        } else if (mode == "basis") {
            res = perturb_basis_nonzero(L, eps, tau_v, tau_gap, seed, certify);
        } else {
            throw InvalidArgumentError("perturb: unknown mode " + mode);
        }
        graph_text = graph_file_string(apply_to_graph(gf.graph, res.perturbation));
    }

    if (!out_path.empty()) write_text_output(out_path, graph_text);

    nlohmann::json body{{"achieved_norm", res.achieved_norm},
                        {"attempts", res.attempts},
                        {"entries", tuple_json(res.perturbation)},
                        {"gap", gap_json(res.gap)},
                        {"graph_file", graph_text},
                        {"min_fiedler_entry", res.min_fiedler_entry},
                        {"mode", mode},
                        {"trace", trace_json(res.trace)}};
    if (res.certified) body["certificate"] = certificate_json(*res.certified);
    emit({{"manifest", manifest_json(make_manifest("perturb", argv, seed, input.hash))},
          {"perturbation", body}});
    return 0;
}

// ---- partition ---------------------------------------------------------

int cmd_partition(const std::vector<std::string>& argv, const std::string& path,
                  bool auto_perturb, double eps, double tau_gap, double tau_v,
                  std::uint64_t seed) {
    const LoadedInput input = load_input(path);
    const GraphFile& gf = input.file;
    if (gf.directed) throw InvalidArgumentError("partition: directed inputs are not supported");

    const Eigen::MatrixXd L = laplacian(gf.graph);
    nlohmann::json body;
    CutResult cut;
    try {
        cut = fiedler_cut(L, tau_gap, tau_v);
        body["auto_perturbed"] = false;
    } catch (const DegenerateLambda2Error&) {
        if (!auto_perturb) throw;
        const PerturbationResult fix = perturb_fiedler_nonzero(L, eps, tau_v, tau_gap, seed);
        cut = fiedler_cut(fix.result, tau_gap, tau_v);
        body["auto_perturbed"] = true;
        body["auto_perturbation"] = {{"achieved_norm", fix.achieved_norm},
                                     {"attempts", fix.attempts},
                                     {"entries", tuple_json(fix.perturbation)},
                                     {"graph_file",
                                      graph_file_string(apply_to_graph(gf.graph, fix.perturbation))}};
    } catch (const DegenerateFiedlerError&) {
        if (!auto_perturb) throw;
        const PerturbationResult fix = perturb_fiedler_nonzero(L, eps, tau_v, tau_gap, seed);
        cut = fiedler_cut(fix.result, tau_gap, tau_v);
        body["auto_perturbed"] = true;
        body["auto_perturbation"] = {{"achieved_norm", fix.achieved_norm},
                                     {"attempts", fix.attempts},
                                     {"entries", tuple_json(fix.perturbation)},
                                     {"graph_file",
                                      graph_file_string(apply_to_graph(gf.graph, fix.perturbation))}};
    }
    body["cut"] = cut_json(cut);
    emit({{"manifest", manifest_json(make_manifest("partition", argv, seed, input.hash))},
          {"partition", body}});
    return 0;
}

// ---- mc ----------------------------------------------------------------

int cmd_mc(const std::vector<std::string>& argv, const std::string& path,
           const std::string& experiment, long trials, double eps0, const std::string& dist,
           bool exact, std::uint64_t seed, int threads, int drop_node, const std::string& csv,
           double tau_gap, double tau_v) {
    const LoadedInput input = load_input(path);
    const GraphFile& gf = input.file;
    if (gf.directed) throw InvalidArgumentError("mc: directed inputs are not supported");

    static const std::map<std::string, Experiment> kExperiments = {
        {"simplicity", Experiment::Simplicity},
        {"fiedler-zero", Experiment::FiedlerZero},
        {"fiedler-distinct", Experiment::FiedlerDistinct},
        {"subgraph-disjoint", Experiment::SubgraphDisjoint},
    };
    const auto ex = kExperiments.find(experiment);
    if (ex == kExperiments.end()) {
        throw InvalidArgumentError("mc: unknown experiment " + experiment);
    }

    TrialConfig cfg;
    cfg.graph = gf.graph;
    cfg.trials = trials;
    cfg.eps0 = eps0;
    if (dist == "positive-uniform") {
        cfg.dist = EpsDistribution::PositiveUniform;
    } else if (dist == "weight-relative") {
        cfg.dist = EpsDistribution::WeightRelative;
    } else {
        throw InvalidArgumentError("mc: unknown distribution " + dist);
    }
    cfg.tau_gap = tau_gap;
    cfg.tau_v = tau_v;
    cfg.seed = seed;
    cfg.exact_mode = exact;
    cfg.drop_node = drop_node;
    cfg.threads = threads;
    cfg.csv_path = csv;
    if (exact) {
        // Snap the file's exact weights to the sampling lattice up front (in
        // exact arithmetic); on-lattice weights pass through unchanged.
        RationalGraph snapped;
        snapped.n = gf.rational_graph.n;
        for (const auto& e : gf.rational_graph.edges) {
            snapped.edges.push_back({e.i, e.j, snap_to_lattice(e.w)});
        }
        cfg.rational_graph = std::move(snapped);
    }

    const TrialReport report = run_experiment(ex->second, cfg);
    nlohmann::json doc = nlohmann::json::parse(report_serialize(report));
    doc["manifest"] = manifest_json(make_manifest("mc", argv, seed, input.hash));
    emit(doc);
    return 0;
}

// ---- gen ---------------------------------------------------------------

int cmd_gen(const std::string& family, int n, const std::string& weights, double p,
            std::uint64_t seed, const std::string& out_path) {
    if (n < 1) throw InvalidArgumentError("gen: n must be at least 1");
    if (weights != "unit" && weights != "random") {
        throw InvalidArgumentError("gen: weights must be unit or random");
    }

    Rng rng(seed);
    WeightedGraph g;
    if (family == "path") {
        g = make_path<double>(n);
    } else if (family == "cycle") {
        if (n < 3) throw InvalidArgumentError("gen: cycle needs n >= 3");
        g = make_cycle<double>(n);
    } else if (family == "star") {
        g = make_star<double>(n);
    } else if (family == "complete") {
        g = make_complete<double>(n);
    } else if (family == "random-tree") {
        g = random_tree(n, rng);
    } else if (family == "gnp") {
        if (!(p > 0.0 && p <= 1.0)) throw InvalidArgumentError("gen: gnp needs --p in (0, 1]");
        g = gnp(n, p, rng);
    } else {
        throw InvalidArgumentError("gen: unknown family " + family);
    }
    if (weights == "random") randomize_weights(g, rng);

    const std::string text = graph_file_string(g);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_output(out_path, text);
    }
    return 0;
}

// ---- export ------------------------------------------------------------

int cmd_export(const std::string& path, const std::string& format, const std::string& out_path) {
    if (format != "matrix-market") {
        throw InvalidArgumentError("export: unknown format " + format);
    }
    const LoadedInput input = load_input(path);
    const GraphFile& gf = input.file;
    std::ostringstream text;
    if (gf.directed) {
        write_matrix_market(text, digraph_laplacian(gf.digraph), false);
    } else {
        write_matrix_market(text, laplacian(gf.graph), true);
    }
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        write_text_output(out_path, text.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> raw_argv(argv, argv + argc);

    CLI::App app{"Laplacian spectrum toolkit: structural perturbation to a simple spectrum and a "
                 "fully nonzero Fiedler vector, exact rational certificates, Fiedler partitions, "
                 "and seeded Monte Carlo degeneracy probes"};
    app.require_subcommand(1);

    // spectrum
    std::string sp_path;
    bool sp_exact = false, sp_json = false;
    double sp_tau_gap = kDefaultTauGap;
    CLI::App* sp = app.add_subcommand("spectrum", "Eigenvalues, gap report, Fiedler vector");
    sp->add_option("file", sp_path, "graph file")->required();
    sp->add_flag("--exact", sp_exact, "exact simplicity certificate from the file's rational weights");
    sp->add_flag("--json", sp_json, "canonical JSON instead of text");
    sp->add_option("--tau-gap", sp_tau_gap, "relative gap tolerance");

    // perturb
    std::string pe_path, pe_mode = "simple", pe_out;
    double pe_eps = 1e-2, pe_tol = -1.0, pe_tau_gap = kDefaultTauGap, pe_tau_v = kDefaultTauV;
    std::uint64_t pe_seed = 0;
    bool pe_certify = false;
    CLI::App* pe = app.add_subcommand("perturb", "Same-support perturbation with verified outcome");
    pe->add_option("file", pe_path, "graph file")->required();
    pe->add_option("--mode", pe_mode, "simple | fiedler | basis | directed-simple");
    pe->add_option("--eps", pe_eps, "perturbation budget (max-abs-entry norm)");
    pe->add_option("--tol", pe_tol, "sets both tolerances at once");
    pe->add_option("--tau-gap", pe_tau_gap, "relative gap tolerance");
    pe->add_option("--tau-v", pe_tau_v, "relative Fiedler entry tolerance");
    pe->add_option("--seed", pe_seed, "RNG seed");
    pe->add_option("--out", pe_out, "write the perturbed graph file here");
    pe->add_flag("--certify", pe_certify, "attach the exact certificate of the rationalized result");

    // partition
    std::string pa_path;
    bool pa_auto = false;
    double pa_eps = 1e-2, pa_tau_gap = kDefaultTauGap, pa_tau_v = kDefaultTauV;
    std::uint64_t pa_seed = 0;
    CLI::App* pa = app.add_subcommand("partition", "Fiedler sign cut with connectivity check");
    pa->add_option("file", pa_path, "graph file")->required();
    pa->add_flag("--auto-perturb", pa_auto, "route degenerate inputs through the Fiedler fix first");
    pa->add_option("--eps", pa_eps, "budget for --auto-perturb");
    pa->add_option("--tau-gap", pa_tau_gap, "relative gap tolerance");
    pa->add_option("--tau-v", pa_tau_v, "relative Fiedler entry tolerance");
    pa->add_option("--seed", pa_seed, "RNG seed for --auto-perturb");

    // mc
    std::string mc_path, mc_experiment, mc_dist = "weight-relative", mc_csv;
    long mc_trials = 1000;
    double mc_eps = 1e-2, mc_tau_gap = kDefaultTauGap, mc_tau_v = kDefaultTauV;
    bool mc_exact = false;
    std::uint64_t mc_seed = 0;
    int mc_threads = 1, mc_drop = 0;
    CLI::App* mc = app.add_subcommand("mc", "Seeded Monte Carlo degeneracy campaign");
    mc->add_option("file", mc_path, "graph file")->required();
    mc->add_option("--experiment", mc_experiment,
                   "simplicity | fiedler-zero | fiedler-distinct | subgraph-disjoint")
        ->required();
    mc->add_option("--trials", mc_trials, "number of trials");
    mc->add_option("--eps", mc_eps, "perturbation bound per edge (0 = unperturbed)");
    mc->add_option("--dist", mc_dist, "positive-uniform | weight-relative");
    mc->add_flag("--exact", mc_exact, "exact certificates per trial on the 1/1000000 lattice");
    mc->add_option("--seed", mc_seed, "campaign seed (per-trial seeds derive from it)");
    mc->add_option("--threads", mc_threads, "worker threads");
    mc->add_option("--drop-node", mc_drop, "node removed in subgraph-disjoint (default: last)");
    mc->add_option("--csv", mc_csv, "per-trial measurement dump");
    mc->add_option("--tau-gap", mc_tau_gap, "relative gap tolerance");
    mc->add_option("--tau-v", mc_tau_v, "relative entry tolerance");

    // gen
    std::string ge_family, ge_weights = "unit", ge_out;
    int ge_n = 0;
    double ge_p = 0.0;
    std::uint64_t ge_seed = 0;
    CLI::App* ge = app.add_subcommand("gen", "Deterministic graph file generator");
    ge->add_option("family", ge_family, "path | cycle | star | complete | random-tree | gnp")
        ->required();
    ge->add_option("n", ge_n, "node count")->required();
    ge->add_option("weights", ge_weights, "unit | random (default unit)");
    ge->add_option("--p", ge_p, "edge probability for gnp");
    ge->add_option("--seed", ge_seed, "RNG seed");
    ge->add_option("--out", ge_out, "output file (default stdout)");

    // export
    std::string ex_path, ex_format = "matrix-market", ex_out;
    CLI::App* ex = app.add_subcommand("export", "Laplacian in Matrix Market coordinate format");
    ex->add_option("file", ex_path, "graph file")->required();
    ex->add_option("--format", ex_format, "matrix-market");
    ex->add_option("--out", ex_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sp) return cmd_spectrum(raw_argv, sp_path, sp_exact, sp_json, sp_tau_gap);
        if (*pe) {
            if (pe_tol > 0.0) {
                pe_tau_gap = pe_tol;
                pe_tau_v = pe_tol;
            }
            return cmd_perturb(raw_argv, pe_path, pe_mode, pe_eps, pe_tau_gap, pe_tau_v, pe_seed,
                               pe_out, pe_certify);
        }
        if (*pa) return cmd_partition(raw_argv, pa_path, pa_auto, pa_eps, pa_tau_gap, pa_tau_v,
                                      pa_seed);
        if (*mc) return cmd_mc(raw_argv, mc_path, mc_experiment, mc_trials, mc_eps, mc_dist,
                               mc_exact, mc_seed, mc_threads, mc_drop, mc_csv, mc_tau_gap,
                               mc_tau_v);
        if (*ge) return cmd_gen(ge_family, ge_n, ge_weights, ge_p, ge_seed, ge_out);
        if (*ex) return cmd_export(ex_path, ex_format, ex_out);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidGraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ScheduleExhaustedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const GenerationFailedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const NotConnectedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const NoDivergingTreeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const NotATreeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const DegenerateLambda2Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const DegenerateEigenvalueError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const DegenerateFiedlerError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
