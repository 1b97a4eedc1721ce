// Command-line front end: canonical encodings of circle graphs, isomorphism
// checks, split trees, diagram generation, and decoding.
//
// Exit codes: 0 success (iso: isomorphic), 1 negative result (iso:
// non-isomorphic; recognize: not a circle graph), 2 any error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "circlecanon/io.hpp"
#include "circlecanon/oracle.hpp"
#include "circlecanon/pipeline.hpp"
#include "circlecanon/split.hpp"
#include "circlecanon/treecanon.hpp"

namespace {

using namespace circlecanon;

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

CanonInput input_from_file(const std::string& path) {
    std::ifstream in = open_file(path);
    auto parsed = read_graph_or_rep(in);
    if (std::holds_alternative<ColoredGraph>(parsed))
        return CanonInput::from_graph(std::get<ColoredGraph>(std::move(parsed)));
    return CanonInput::from_rep(std::get<CircleRep>(std::move(parsed)));
}

ColoredGraph graph_from_file(const std::string& path) {
    std::ifstream in = open_file(path);
    auto parsed = read_graph_or_rep(in);
    if (std::holds_alternative<ColoredGraph>(parsed)) return std::get<ColoredGraph>(std::move(parsed));
    return interleaving_graph(std::get<CircleRep>(parsed));
}

int run_canon(const std::string& path) {
    std::cout << format_encoding(canon_graph(input_from_file(path)));
    return 0;
}

int run_iso(const std::string& path1, const std::string& path2) {
    bool same = isomorphic(input_from_file(path1), input_from_file(path2));
    std::cout << (same ? "isomorphic" : "non-isomorphic") << "\n";
    return same ? 0 : 1;
}

// Split trees are per connected component: one DOT graph per component,
// vertex labels kept as input ids.
int run_tree(const std::string& path) {
    ColoredGraph g = graph_from_file(path);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    int ncomp = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> members(static_cast<std::size_t>(ncomp));
    for (int v = 0; v < g.n; ++v)
        members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<int> local(static_cast<std::size_t>(g.n), -1);
    for (int ci = 0; ci < ncomp; ++ci) {
        const std::vector<int>& vs = members[static_cast<std::size_t>(ci)];
        for (std::size_t i = 0; i < vs.size(); ++i)
            local[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges)
            if (comp[static_cast<std::size_t>(u)] == ci)
                edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
        GraphLabeledTree t = decompose(ColoredGraph(static_cast<int>(vs.size()), std::move(edges)));
        minimalize(t);
        for (TreeVertex& tv : t.verts)
            if (tv.original >= 0) tv.original = vs[static_cast<std::size_t>(tv.original)];
        std::cout << to_dot(t);
    }
    return 0;
}

int run_gen(int n, std::uint64_t seed) {
    std::cout << format_rep(random_rep(n, seed));
    return 0;
}

// Inverts the framing canon emits: [k] followed by k length-prefixed
// component encodings.  Each component decodes to a split tree whose joined
// graph lands at a fresh vertex offset.
int run_decode(const std::string& path) {
    std::ifstream in = open_file(path);
    Encoding e = read_encoding(in);
    std::size_t pos = 0;
    auto next = [&] {
        if (pos >= e.size()) throw std::invalid_argument("truncated encoding");
        return e[pos++];
    };
    int k = next();
    if (k < 0) throw std::invalid_argument("negative component count");
    int total_n = 0;
    std::vector<std::pair<int, int>> edges;
    for (int comp = 0; comp < k; ++comp) {
        int len = next();
        if (len < 0 || static_cast<std::size_t>(len) > e.size() - pos)
            throw std::invalid_argument("component length overruns the encoding");
        Encoding ce(e.begin() + static_cast<std::ptrdiff_t>(pos),
                    e.begin() + static_cast<std::ptrdiff_t>(pos) + len);
        pos += static_cast<std::size_t>(len);
        ColoredGraph g = join_all(decode(ce));
        for (auto [u, v] : g.edges) edges.emplace_back(u + total_n, v + total_n);
        total_n += g.n;
    }
    if (pos != e.size()) throw std::invalid_argument("trailing data after encoding");
    std::cout << format_graph(ColoredGraph(total_n, std::move(edges)));
    return 0;
}

int run_recognize(const std::string& path) {
    std::ifstream in = open_file(path);
    ColoredGraph g = read_graph(in);
    if (g.n > kRecognitionLimit)
        throw std::invalid_argument("recognize handles at most " + std::to_string(kRecognitionLimit) +
                                    " vertices");
    auto rep = brute_find_rep(g);
    if (!rep) {
        std::cout << "not a circle graph\n";
        return 1;
    }
    std::cout << format_rep(*rep);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical encodings of circle graphs via split decomposition"};
    app.require_subcommand(1);

    std::string file1, file2;
    int gen_n = 0;
    std::uint64_t seed = 0;

    CLI::App* canon = app.add_subcommand("canon", "print the canonical encoding of a graph or rep file");
    canon->add_option("file", file1, "graph or rep file")->required();

    CLI::App* iso = app.add_subcommand("iso", "test two graph or rep files for isomorphism");
    iso->add_option("file1", file1, "first graph or rep file")->required();
    iso->add_option("file2", file2, "second graph or rep file")->required();

    CLI::App* tree = app.add_subcommand("tree", "print the minimal split tree as DOT");
    tree->add_option("file", file1, "graph or rep file")->required();

    CLI::App* gen = app.add_subcommand("gen", "print a pseudorandom chord diagram");
    gen->add_option("n", gen_n, "number of chords")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "RNG seed")->default_val(0);

    CLI::App* dec = app.add_subcommand("decode", "rebuild the graph behind a canonical encoding");
    dec->add_option("file", file1, "encoding file")->required();

    CLI::App* rec = app.add_subcommand("recognize", "search a chord diagram for a small graph");
    rec->add_option("file", file1, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (canon->parsed()) return run_canon(file1);
        if (iso->parsed()) return run_iso(file1, file2);
        if (tree->parsed()) return run_tree(file1);
        if (gen->parsed()) return run_gen(gen_n, seed);
        if (dec->parsed()) return run_decode(file1);
        if (rec->parsed()) return run_recognize(file1);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: a subcommand is required
}
