#include "lapspec/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "lapspec/errors.hpp"

namespace lapspec {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void parse_fail(const std::string& origin, int line_no, const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line_no) + ": " + what);
}

// Pulls the next meaningful line, counting physical lines so error messages
// point at the real file position.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!blank_or_comment(line)) return true;
    }
    return false;
}

}  // namespace

GraphFile parse_graph_file(std::istream& in, const std::string& origin) {
    GraphFile out;
    std::string line;
    int line_no = 0;

    if (!next_line(in, line, line_no)) {
        parse_fail(origin, 1, "empty file, expected header \"n m [directed]\"");
    }

    int n = 0;
    long m = 0;
    {
        std::istringstream header(line);
        std::string tag, extra;
        if (!(header >> n >> m)) {
            parse_fail(origin, line_no, "expected header \"n m [directed]\"");
        }
        if (header >> tag) {
            if (tag != "directed") {
                parse_fail(origin, line_no, "unknown header tag \"" + tag + "\"");
            }
            out.directed = true;
        }
        if (header >> extra) {
            parse_fail(origin, line_no, "trailing text after header");
        }
        if (n < 1) parse_fail(origin, line_no, "node count must be at least 1");
        if (m < 0) parse_fail(origin, line_no, "edge count must be nonnegative");
    }

    out.rational_graph.n = n;
    out.rational_digraph.n = n;

    std::set<std::pair<int, int>> seen;
    for (long k = 0; k < m; ++k) {
        if (!next_line(in, line, line_no)) {
            parse_fail(origin, line_no + 1,
                       "expected " + std::to_string(m) + " edge lines, got " + std::to_string(k));
        }
        std::istringstream row(line);
        int i = 0, j = 0;
        std::string weight_text, extra;
        if (!(row >> i >> j >> weight_text)) {
            parse_fail(origin, line_no, "expected edge line \"i j w\"");
        }
        if (row >> extra) {
            parse_fail(origin, line_no, "trailing text after edge line");
        }
        if (i < 1 || i > n || j < 1 || j > n) {
            parse_fail(origin, line_no, "endpoint out of range 1.." + std::to_string(n));
        }
        if (i == j) parse_fail(origin, line_no, "self-loops are not allowed");

        Rational w;
        try {
            w = parse_weight(weight_text);
        } catch (const ParseError& e) {
            parse_fail(origin, line_no, e.what());
        }
        if (w <= 0) parse_fail(origin, line_no, "weight must be positive");

        std::pair<int, int> key{i, j};
        if (!out.directed && key.first > key.second) std::swap(key.first, key.second);
        if (!seen.insert(key).second) {
            parse_fail(origin, line_no, "duplicate edge (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
        }

        if (out.directed) {
            out.rational_digraph.arcs.push_back({i, j, w});
        } else {
            out.rational_graph.edges.push_back({key.first, key.second, w});
        }
    }

    if (next_line(in, line, line_no)) {
        parse_fail(origin, line_no, "unexpected extra line after " + std::to_string(m) + " edges");
    }

    if (out.directed) {
        validate(out.rational_digraph);
        out.digraph = to_double(out.rational_digraph);
        out.rational_graph.n = 0;
    } else {
        validate(out.rational_graph);
        out.graph = to_double(out.rational_graph);
        out.rational_digraph.n = 0;
    }
    return out;
}

GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_graph_file(in, path);
}

void write_graph_file(std::ostream& out, const RationalGraph& g) {
    out << g.n << ' ' << g.edges.size() << '\n';
    for (const auto& e : g.edges) {
        out << e.i << ' ' << e.j << ' ' << to_string(e.w) << '\n';
    }
}

void write_graph_file(std::ostream& out, const RationalDigraph& dg) {
    out << dg.n << ' ' << dg.arcs.size() << " directed\n";
    for (const auto& a : dg.arcs) {
        out << a.from << ' ' << a.to << ' ' << to_string(a.w) << '\n';
    }
}

void write_graph_file(std::ostream& out, const WeightedGraph& g) {
    out << g.n << ' ' << g.edges.size() << '\n';
    for (const auto& e : g.edges) {
        out << e.i << ' ' << e.j << ' ' << format_double(e.w) << '\n';
    }
}

void write_graph_file(std::ostream& out, const Digraph& dg) {
    out << dg.n << ' ' << dg.arcs.size() << " directed\n";
    for (const auto& a : dg.arcs) {
        out << a.from << ' ' << a.to << ' ' << format_double(a.w) << '\n';
    }
}

void write_matrix_market(std::ostream& out, const Eigen::MatrixXd& L, bool symmetric) {
    const auto n = L.rows();
    long nnz = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = symmetric ? j : 0; i < n; ++i) {
            if (L(i, j) != 0.0) ++nnz;
        }
    }
    out << "%%MatrixMarket matrix coordinate real "
        << (symmetric ? "symmetric" : "general") << '\n';
    out << n << ' ' << n << ' ' << nnz << '\n';
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = symmetric ? j : 0; i < n; ++i) {
            if (L(i, j) != 0.0) {
                out << (i + 1) << ' ' << (j + 1) << ' ' << format_double(L(i, j)) << '\n';
            }
        }
    }
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

nlohmann::json manifest_json(const RunManifest& m) {
    return nlohmann::json{
        {"argv", m.argv},
        {"command", m.command},
        {"input_hash", m.input_hash.empty() ? "-" : m.input_hash},
        {"seed", m.seed},
        {"version", m.version},
    };
}

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

void dump_rec(const nlohmann::json& j, std::string& out, int depth) {
    using value_t = nlohmann::json::value_t;
    switch (j.type()) {
        case value_t::null:
            out += "null";
            break;
        case value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case value_t::number_float:
            // Non-finite values have no JSON spelling; null keeps documents valid.
            out += format_double(j.get<double>());
            break;
        case value_t::string:
            // Reuse the library's escaping (control characters, quotes, backslashes).
            out += nlohmann::json(j.get<std::string>()).dump();
            break;
        case value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ",\n";
                first = false;
                out.append(static_cast<size_t>(depth + 1) * 2, ' ');
                dump_rec(item, out, depth + 1);
            }
            out += '\n';
            out.append(static_cast<size_t>(depth) * 2, ' ');
            out += ']';
            break;
        }
        case value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            // nlohmann's default object storage is a std::map, so iteration
            // order is already the sorted key order the goldens expect.
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out.append(static_cast<size_t>(depth + 1) * 2, ' ');
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, depth + 1);
            }
            out += '\n';
            out.append(static_cast<size_t>(depth) * 2, ' ');
            out += '}';
            break;
        }
        default:
            out += "null";
            break;
    }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += '\n';
    return out;
}

}  // namespace lapspec
