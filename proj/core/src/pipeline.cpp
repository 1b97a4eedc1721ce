#include "circlecanon/pipeline.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "circlecanon/oracle.hpp"
#include "circlecanon/split.hpp"
#include "circlecanon/treecanon.hpp"

namespace circlecanon {

CanonInput CanonInput::from_graph(ColoredGraph g) {
    CanonInput in;
    in.graph = std::move(g);
    return in;
}

CanonInput CanonInput::from_rep(CircleRep r) {
    CanonInput in;
    in.rep = std::move(r);
    return in;
}

CanonInput CanonInput::from_both(ColoredGraph g, CircleRep r) {
    CanonInput in;
    in.graph = std::move(g);
    in.rep = std::move(r);
    return in;
}

namespace {

// The uncolored graph being canonized; when both inputs are present the rep
// must realize the graph vertex-for-vertex.
ColoredGraph resolve_graph(const CanonInput& input) {
    if (input.graph) {
        validate_graph(*input.graph);
        ColoredGraph g(input.graph->n, input.graph->edges);
        if (input.rep) {
            ColoredGraph from_rep = interleaving_graph(*input.rep);
            if (from_rep.n != g.n || from_rep.edges != g.edges)
                throw std::invalid_argument("representation does not realize the graph");
        }
        return g;
    }
    if (input.rep) return interleaving_graph(*input.rep);
    throw std::invalid_argument("canonization input is empty");
}

}  // namespace

Encoding canon_connected(const CanonInput& input, const std::vector<int>* seed_order) {
    ColoredGraph g = resolve_graph(input);
    if (g.n == 0) throw std::invalid_argument("canon_connected requires a non-empty graph");
    if (!is_connected(g)) throw std::invalid_argument("canon_connected requires a connected graph");
    if (g.n == 1) return {0};
    if (g.n == 2) return {0, 0};

    GraphLabeledTree t = seed_order ? decompose(g, *seed_order) : decompose(g);
    minimalize(t);
    RootedTree rt = center_root(t);

    std::map<int, CircleRep> reps;
    for (int node : rt.tree.alive_nodes()) {
        if (rt.tree.nodes[static_cast<std::size_t>(node)].kind != NodeKind::Prime) continue;
        if (input.rep) {
            reps.emplace(node, derive_node_representation(rt, node, *input.rep));
            continue;
        }
        std::vector<int> l2g;
        ColoredGraph ng = rt.tree.node_graph(node, &l2g);
        if (ng.n > kRecognitionLimit)
            throw std::invalid_argument("prime node with " + std::to_string(ng.n) +
                                        " vertices needs an input representation");
        auto rep = brute_find_rep(ng);
        if (!rep)
            throw std::invalid_argument("not a circle graph (prime node with " + std::to_string(ng.n) +
                                        " vertices has no chord diagram)");
        reps.emplace(node, std::move(*rep));
    }
    return canon_tree(rt, reps, true);
}

Encoding canon_graph(const CanonInput& input, const std::vector<int>* seed_order) {
    ColoredGraph g = resolve_graph(input);

    // Connected components, discovered in ascending vertex order.
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    int ncomp = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        std::deque<int> queue{v};
        comp[static_cast<std::size_t>(v)] = ncomp;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    queue.push_back(w);
                }
        }
        ++ncomp;
    }

    if (seed_order) {
        if (static_cast<int>(seed_order->size()) != g.n)
            throw std::invalid_argument("seed order size does not match the vertex count");
    }

    std::vector<std::vector<int>> members(static_cast<std::size_t>(ncomp));
    for (int v = 0; v < g.n; ++v) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<Encoding> encodings;
    encodings.reserve(static_cast<std::size_t>(ncomp));
    std::vector<int> local(static_cast<std::size_t>(g.n), -1);
    for (int ci = 0; ci < ncomp; ++ci) {
        const std::vector<int>& vs = members[static_cast<std::size_t>(ci)];
        for (int i = 0; i < static_cast<int>(vs.size()); ++i)
            local[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])] = i;
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges)
            if (comp[static_cast<std::size_t>(u)] == ci)
                edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
        ColoredGraph sub(static_cast<int>(vs.size()), std::move(edges));

        CanonInput ci_in;
        if (input.rep) {
            // Restrict the diagram: delete every endpoint of a foreign chord.
            std::vector<int> word;
            for (int label : input.rep->word)
                if (comp[static_cast<std::size_t>(label)] == ci)
                    word.push_back(local[static_cast<std::size_t>(label)]);
            CircleRep sub_rep{static_cast<int>(vs.size()), std::move(word)};
            ci_in = input.graph ? CanonInput::from_both(sub, std::move(sub_rep))
                                : CanonInput::from_rep(std::move(sub_rep));
        } else {
            ci_in = CanonInput::from_graph(sub);
        }

        if (seed_order) {
            std::vector<int> sub_order;
            sub_order.reserve(vs.size());
            for (int v : *seed_order) {
                if (v < 0 || v >= g.n) throw std::invalid_argument("seed order entry out of range");
                if (comp[static_cast<std::size_t>(v)] == ci) sub_order.push_back(local[static_cast<std::size_t>(v)]);
            }
            encodings.push_back(canon_connected(ci_in, &sub_order));
        } else {
            encodings.push_back(canon_connected(ci_in));
        }
    }

    std::sort(encodings.begin(), encodings.end());
    Encoding out;
    out.push_back(ncomp);
    for (const Encoding& e : encodings) {
        out.push_back(static_cast<int>(e.size()));
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

bool isomorphic(const CanonInput& a, const CanonInput& b) { return canon_graph(a) == canon_graph(b); }

}  // namespace circlecanon
