#include "circlecanon/io.hpp"

#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace circlecanon {

namespace {

std::string next_token(std::istream& in, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument(std::string("unexpected end of input, expected ") + what);
    return tok;
}

long long parse_int(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer for " + std::string(what) + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw std::invalid_argument("expected an integer for " + std::string(what) + ", got '" + tok + "'");
    return value;
}

int next_count(std::istream& in, const char* what) {
    long long v = parse_int(next_token(in, what), what);
    if (v < 0 || v > std::numeric_limits<int>::max())
        throw std::invalid_argument(std::string(what) + " out of range");
    return static_cast<int>(v);
}

ColoredGraph read_graph_body(std::istream& in) {
    int n = next_count(in, "the vertex count");
    int m = next_count(in, "the edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = next_count(in, "an edge endpoint");
        int v = next_count(in, "an edge endpoint");
        edges.emplace_back(u, v);
    }
    ColoredGraph g(n, std::move(edges));
    validate_graph(g);
    return g;
}

CircleRep read_rep_body(std::istream& in) {
    int n = next_count(in, "the chord count");
    std::vector<int> tokens;
    tokens.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) tokens.push_back(next_count(in, "an endpoint label"));
    return parse_rep(tokens).rep;
}

}  // namespace

ColoredGraph read_graph(std::istream& in) {
    std::string head = next_token(in, "the 'graph' header");
    if (head != "graph") throw std::invalid_argument("expected a 'graph' header, got '" + head + "'");
    return read_graph_body(in);
}

CircleRep read_rep(std::istream& in) {
    std::string head = next_token(in, "the 'rep' header");
    if (head != "rep") throw std::invalid_argument("expected a 'rep' header, got '" + head + "'");
    return read_rep_body(in);
}

std::variant<ColoredGraph, CircleRep> read_graph_or_rep(std::istream& in) {
    std::string head = next_token(in, "a 'graph' or 'rep' header");
    if (head == "graph") return read_graph_body(in);
    if (head == "rep") return read_rep_body(in);
    throw std::invalid_argument("unknown header '" + head + "', expected 'graph' or 'rep'");
}

Encoding read_encoding(std::istream& in) {
    Encoding e;
    std::string tok;
    while (in >> tok) {
        long long v = parse_int(tok, "an encoding value");
        if (v < 0 || v > std::numeric_limits<int>::max())
            throw std::invalid_argument("encoding value out of range");
        e.push_back(static_cast<int>(v));
    }
    if (e.empty()) throw std::invalid_argument("empty encoding");
    return e;
}

std::string format_graph(const ColoredGraph& g) {
    std::ostringstream out;
    out << "graph " << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::string format_rep(const CircleRep& r) {
    std::ostringstream out;
    out << "rep " << r.n << '\n';
    for (std::size_t i = 0; i < r.word.size(); ++i) out << (i ? " " : "") << r.word[i];
    out << '\n';
    return out.str();
}

std::string format_encoding(const Encoding& e) {
    std::ostringstream out;
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
    return out.str();
}

std::string to_dot(const GraphLabeledTree& t) {
    std::ostringstream out;
    out << "graph split_tree {\n";
    for (int i : t.alive_nodes()) {
        const TreeNode& nd = t.nodes[static_cast<std::size_t>(i)];
        const char* kind = nd.kind == NodeKind::Complete ? "complete"
                           : nd.kind == NodeKind::Star   ? "star"
                                                         : "prime";
        out << "  subgraph cluster_" << i << " {\n";
        out << "    label=\"node " << i << " (" << kind << ")\";\n";
        for (int v : nd.verts) {
            const TreeVertex& tv = t.verts[static_cast<std::size_t>(v)];
            if (tv.original >= 0)
                out << "    v" << v << " [label=\"" << tv.original << "\"];\n";
            else
                out << "    v" << v << " [label=\"m" << v << "\", shape=doublecircle];\n";
        }
        for (auto [u, v] : nd.edges) out << "    v" << u << " -- v" << v << ";\n";
        out << "  }\n";
    }
    for (auto [u, v] : t.tree_edges()) out << "  v" << u << " -- v" << v << " [style=dashed];\n";
    out << "}\n";
    return out.str();
}

}  // namespace circlecanon
