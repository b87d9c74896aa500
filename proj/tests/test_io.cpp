#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "lapspec/errors.hpp"
#include "lapspec/io.hpp"
#include "lapspec/laplacian.hpp"

using namespace lapspec;

namespace {

GraphFile parse_text(const std::string& text, const std::string& origin = "test") {
    std::istringstream in(text);
    return parse_graph_file(in, origin);
}

std::string error_of(const std::string& text) {
    try {
        parse_text(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse_graph_file keeps exact rational weights next to their double image") {
    const auto gf = parse_text("3 2\n1 2 1/3\n2 3 0.25\n");
    CHECK_FALSE(gf.directed);
    REQUIRE(gf.rational_graph.edges.size() == 2);
    CHECK(gf.rational_graph.edges[0].w == Rational(1, 3));
    CHECK(gf.rational_graph.edges[1].w == Rational(1, 4));
    CHECK(gf.graph.edges[0].w == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(gf.graph.edges[1].w == 0.25);
    CHECK(gf.graph.n == 3);
    CHECK(gf.digraph.n == 0);  // the unused side stays empty
}

TEST_CASE("edges are normalized to i < j on undirected input") {
    const auto gf = parse_text("3 1\n3 1 2\n");
    CHECK(gf.rational_graph.edges[0].i == 1);
    CHECK(gf.rational_graph.edges[0].j == 3);
    CHECK(gf.rational_graph.edges[0].w == Rational(2));
}

TEST_CASE("comments and blank lines are skipped but keep line numbers physical") {
    const auto gf = parse_text("# weighted path\n\n3 2\n1 2 1\n# interior note\n2 3 1\n\n");
    CHECK(gf.graph.edges.size() == 2);

    // the duplicate sits on physical line 6
    const auto msg = error_of("# comment\n\n3 2\n1 2 1\n\n2 1 5\n");
    CHECK(msg.find("test:6:") != std::string::npos);
    CHECK(msg.find("duplicate") != std::string::npos);
}

TEST_CASE("directed header routes arcs to the digraph side") {
    const auto gf = parse_text("3 3 directed\n1 2 1\n2 1 1/2\n2 3 1\n");
    CHECK(gf.directed);
    CHECK(gf.graph.n == 0);
    REQUIRE(gf.rational_digraph.arcs.size() == 3);
    CHECK(gf.rational_digraph.arcs[1].from == 2);
    CHECK(gf.rational_digraph.arcs[1].to == 1);
    CHECK(gf.rational_digraph.arcs[1].w == Rational(1, 2));
    // antiparallel arcs are distinct, unlike undirected duplicates
    CHECK(gf.digraph.arcs.size() == 3);
}

TEST_CASE("parse errors carry origin and 1-based line numbers") {
    CHECK(error_of("").find("test:1:") != std::string::npos);
    CHECK(error_of("nonsense\n").find("expected header") != std::string::npos);
    CHECK(error_of("0 0\n").find("node count") != std::string::npos);
    CHECK(error_of("3 -1\n").find("edge count") != std::string::npos);
    CHECK(error_of("3 1 weird\n").find("unknown header tag") != std::string::npos);
    CHECK(error_of("3 1 directed extra\n").find("trailing text") != std::string::npos);

    CHECK(error_of("3 1\n1 2\n").find("test:2:") != std::string::npos);
    CHECK(error_of("3 1\n1 2 1 junk\n").find("trailing text") != std::string::npos);
    CHECK(error_of("3 1\n1 4 1\n").find("out of range") != std::string::npos);
    CHECK(error_of("3 1\n2 2 1\n").find("self-loop") != std::string::npos);
    CHECK(error_of("3 1\n1 2 0\n").find("positive") != std::string::npos);
    CHECK(error_of("3 1\n1 2 -3\n").find("positive") != std::string::npos);
    CHECK(error_of("3 1\n1 2 1/0\n").find("test:2:") != std::string::npos);
    CHECK(error_of("3 1\n1 2 abc\n").find("test:2:") != std::string::npos);

    CHECK(error_of("3 2\n1 2 1\n").find("expected 2 edge lines") != std::string::npos);
    CHECK(error_of("3 1\n1 2 1\n2 3 1\n").find("unexpected extra line") != std::string::npos);
    CHECK(error_of("3 2\n1 2 1\n1 2 2\n").find("duplicate") != std::string::npos);
}

TEST_CASE("write_graph_file round-trips exact rationals byte for byte") {
    RationalGraph g;
    g.n = 4;
    g.edges = {{1, 2, Rational(1, 3)}, {2, 3, Rational(7)}, {3, 4, Rational(22, 7)}};

    std::ostringstream out;
    write_graph_file(out, g);
    CHECK(out.str() == "4 3\n1 2 1/3\n2 3 7\n3 4 22/7\n");

    const auto back = parse_text(out.str());
    REQUIRE(back.rational_graph.edges.size() == 3);
    for (size_t k = 0; k < 3; ++k) {
        CHECK(back.rational_graph.edges[k].i == g.edges[k].i);
        CHECK(back.rational_graph.edges[k].j == g.edges[k].j);
        CHECK(back.rational_graph.edges[k].w == g.edges[k].w);
    }
}

TEST_CASE("write_graph_file round-trips doubles through 17 significant digits") {
    WeightedGraph g;
    g.n = 2;
    g.edges = {{1, 2, 0.1}};
    std::ostringstream out;
    write_graph_file(out, g);
    CHECK(out.str() == "2 1\n1 2 0.10000000000000001\n");
    CHECK(parse_text(out.str()).graph.edges[0].w == 0.1);

    RationalDigraph dg;
    dg.n = 3;
    dg.arcs = {{2, 1, Rational(5, 2)}, {1, 3, Rational(1)}};
    std::ostringstream dout;
    write_graph_file(dout, dg);
    CHECK(dout.str() == "3 2 directed\n2 1 5/2\n1 3 1\n");
    const auto back = parse_text(dout.str());
    CHECK(back.directed);
    CHECK(back.rational_digraph.arcs[0].w == Rational(5, 2));
}

TEST_CASE("matrix market export: symmetric lower triangle for graphs") {
    const auto L = laplacian(make_path<double>(3));
    std::ostringstream out;
    write_matrix_market(out, L, /*symmetric=*/true);
    CHECK(out.str() ==
          "%%MatrixMarket matrix coordinate real symmetric\n"
          "3 3 5\n"
          "1 1 1\n"
          "2 1 -1\n"
          "2 2 2\n"
          "3 2 -1\n"
          "3 3 1\n");
}

TEST_CASE("matrix market export: general storage for digraphs") {
    Digraph dg;
    dg.n = 2;
    dg.arcs = {{1, 2, 2.0}};
    std::ostringstream out;
    write_matrix_market(out, digraph_laplacian(dg), /*symmetric=*/false);
    CHECK(out.str() ==
          "%%MatrixMarket matrix coordinate real general\n"
          "2 2 2\n"
          "2 1 -2\n"
          "2 2 2\n");
}

TEST_CASE("fnv1a64 matches the published test vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(hex64(0xcbf29ce484222325ULL) == "cbf29ce484222325");
    CHECK(hex64(0) == "0000000000000000");
}

TEST_CASE("format_double: shortest 17-digit form, non-finite to null") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "null");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "null");
}

TEST_CASE("canonical_dump: sorted keys, stable floats, null for non-finite") {
    nlohmann::json j;
    j["zeta"] = 1;
    j["alpha"] = 0.1;
    j["mid"] = nlohmann::json::array({1, 2});
    j["bad"] = std::numeric_limits<double>::quiet_NaN();
    CHECK(canonical_dump(j) ==
          "{\n"
          "  \"alpha\": 0.10000000000000001,\n"
          "  \"bad\": null,\n"
          "  \"mid\": [\n"
          "    1,\n"
          "    2\n"
          "  ],\n"
          "  \"zeta\": 1\n"
          "}\n");

    CHECK(canonical_dump(nlohmann::json::object()) == "{}\n");
    CHECK(canonical_dump(nlohmann::json::array()) == "[]\n");
    CHECK(canonical_dump(nlohmann::json("x\"y")) == "\"x\\\"y\"\n");
    CHECK(canonical_dump(nlohmann::json(true)) == "true\n");
    CHECK(canonical_dump(nlohmann::json(nullptr)) == "null\n");

    // nested objects inherit the two-space indent and the key order
    nlohmann::json nested{{"outer", {{"b", 2}, {"a", 1}}}};
    CHECK(canonical_dump(nested) ==
          "{\n"
          "  \"outer\": {\n"
          "    \"a\": 1,\n"
          "    \"b\": 2\n"
          "  }\n"
          "}\n");
}

TEST_CASE("manifest_json embeds the reproduction record") {
    RunManifest m;
    m.command = "spectrum";
    m.argv = {"lapspec", "spectrum", "g.txt"};
    m.seed = 42;
    m.input_hash = hex64(fnv1a64("3 2\n1 2 1\n2 3 1\n"));

    const auto j = manifest_json(m);
    CHECK(j["command"] == "spectrum");
    CHECK(j["argv"].size() == 3);
    CHECK(j["argv"][0] == "lapspec");
    CHECK(j["seed"] == 42);
    CHECK(j["version"] == std::string(kToolVersion));
    CHECK(j["input_hash"].get<std::string>().size() == 16);

    RunManifest bare;
    bare.command = "gen";
    CHECK(manifest_json(bare)["input_hash"] == "-");
}

TEST_CASE("load_graph_file reports the path in errors") {
    CHECK_THROWS_WITH_AS(load_graph_file("definitely_missing_file.graph"),
                         doctest::Contains("definitely_missing_file.graph"), ParseError);
}
