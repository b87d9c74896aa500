#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "lapspec/graph.hpp"
#include "lapspec/rational.hpp"

namespace lapspec {

inline constexpr const char* kToolVersion = "lapspec 1.0.0";

// Parsed graph file. The format is line oriented:
//
//   n m            (or "n m directed")
//   i j w          (m edge lines, 1-based endpoints)
//
// Weights are positive and written either as decimal literals or exact
// fractions "p/q". Both images are kept: the exact weights as written and
// their double rounding, so exact-mode pipelines never pass through floating
// point. Blank lines and lines starting with '#' are ignored.
struct GraphFile {
    bool directed = false;
    WeightedGraph graph;               // empty when directed
    RationalGraph rational_graph;      // empty when directed
    Digraph digraph;                   // empty when undirected
    RationalDigraph rational_digraph;  // empty when undirected
};

GraphFile parse_graph_file(std::istream& in, const std::string& origin = "<stream>");
GraphFile load_graph_file(const std::string& path);

// Writers emit the round-trippable form: rational weights as "p/q" (integers
// without the slash), double weights with 17 significant digits.
void write_graph_file(std::ostream& out, const RationalGraph& g);
void write_graph_file(std::ostream& out, const RationalDigraph& dg);
void write_graph_file(std::ostream& out, const WeightedGraph& g);
void write_graph_file(std::ostream& out, const Digraph& dg);

// Matrix Market coordinate export of a Laplacian: "symmetric" storage (lower
// triangle) for undirected inputs, "general" for digraphs.
void write_matrix_market(std::ostream& out, const Eigen::MatrixXd& L, bool symmetric);

// Provenance block embedded in every JSON report so a run can be reproduced
// from its output alone.
struct RunManifest {
    std::string command;             // subcommand name
    std::vector<std::string> argv;   // full command line as invoked
    std::uint64_t seed = 0;
    std::string version = kToolVersion;
    std::string input_hash;          // FNV-1a 64-bit hex of the input file bytes, "-" if none
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

nlohmann::json manifest_json(const RunManifest& m);

// Canonical JSON rendering: object keys sorted, two-space indent, floats with
// 17 significant digits (%.17g), NaN and infinities mapped to null. Identical
// documents serialize to identical bytes, which the golden-file tests rely on.
std::string canonical_dump(const nlohmann::json& j);

// %.17g rendering of one double, shared by the JSON writer and CSV dumps.
std::string format_double(double x);

}  // namespace lapspec
