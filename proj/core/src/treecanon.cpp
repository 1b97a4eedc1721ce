#include "circlecanon/treecanon.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace circlecanon {

namespace {

struct Link {
    int node = -1;       // the node on the other end
    int my_marker = -1;  // marker inside the node this link belongs to
    int far_marker = -1; // its peer inside `node`
};

std::vector<std::vector<Link>> node_adjacency(const GraphLabeledTree& t) {
    std::vector<std::vector<Link>> adj(t.nodes.size());
    for (auto [m1, m2] : t.tree_edges()) {
        int a = t.verts[static_cast<std::size_t>(m1)].node;
        int b = t.verts[static_cast<std::size_t>(m2)].node;
        adj[static_cast<std::size_t>(a)].push_back({b, m1, m2});
        adj[static_cast<std::size_t>(b)].push_back({a, m2, m1});
    }
    return adj;
}

}  // namespace

RootedTree center_root(const GraphLabeledTree& t_in) {
    RootedTree rt;
    rt.tree = t_in;
    GraphLabeledTree& t = rt.tree;
    auto alive = t.alive_nodes();
    if (alive.empty()) throw std::invalid_argument("center_root requires a non-empty tree");

    auto adj = node_adjacency(t);

    // Peel leaves layer by layer until one or two central nodes remain.
    std::vector<int> deg(t.nodes.size(), 0);
    std::vector<char> removed(t.nodes.size(), 0);
    for (int i : alive) deg[static_cast<std::size_t>(i)] = static_cast<int>(adj[static_cast<std::size_t>(i)].size());
    int remaining = static_cast<int>(alive.size());
    std::vector<int> frontier;
    for (int i : alive)
        if (deg[static_cast<std::size_t>(i)] <= 1) frontier.push_back(i);
    while (remaining > 2) {
        std::vector<int> next;
        for (int u : frontier) {
            removed[static_cast<std::size_t>(u)] = 1;
            --remaining;
            for (const Link& l : adj[static_cast<std::size_t>(u)])
                if (!removed[static_cast<std::size_t>(l.node)] && --deg[static_cast<std::size_t>(l.node)] == 1)
                    next.push_back(l.node);
        }
        frontier = std::move(next);
    }
    std::vector<int> centers;
    for (int i : alive)
        if (!removed[static_cast<std::size_t>(i)]) centers.push_back(i);

    if (centers.size() == 1) {
        rt.root = centers.front();
    } else {
        // Subdivide the central tree edge with a synthetic 2-vertex complete
        // node so the tree has a unique center.
        int u = centers[0], v = centers[1];
        const Link* uv = nullptr;
        for (const Link& l : adj[static_cast<std::size_t>(u)])
            if (l.node == v) uv = &l;
        if (!uv) throw std::logic_error("two centers without a joining tree edge");
        int mu = uv->my_marker, mv = uv->far_marker;
        int zu = static_cast<int>(t.verts.size());
        int zv = zu + 1;
        int znode = static_cast<int>(t.nodes.size());
        TreeVertex tzu, tzv;
        tzu.node = znode;
        tzu.peer = mu;
        tzv.node = znode;
        tzv.peer = mv;
        t.verts[static_cast<std::size_t>(mu)].peer = zu;
        t.verts[static_cast<std::size_t>(mv)].peer = zv;
        t.verts.push_back(tzu);
        t.verts.push_back(tzv);
        TreeNode zn;
        zn.verts = {zu, zv};
        zn.edges = {{zu, zv}};
        zn.kind = NodeKind::Complete;
        t.nodes.push_back(std::move(zn));
        rt.root = znode;
    }

    // Parent structure by BFS from the root (adjacency rebuilt in case a
    // synthetic node was inserted).
    adj = node_adjacency(t);
    rt.parent.assign(t.nodes.size(), -1);
    rt.up_marker.assign(t.nodes.size(), -1);
    rt.parent_marker.assign(t.nodes.size(), -1);
    rt.depth.assign(t.nodes.size(), -1);
    rt.depth[static_cast<std::size_t>(rt.root)] = 0;
    std::deque<int> queue{rt.root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Link& l : adj[static_cast<std::size_t>(u)]) {
            if (rt.depth[static_cast<std::size_t>(l.node)] >= 0) continue;
            rt.parent[static_cast<std::size_t>(l.node)] = u;
            rt.up_marker[static_cast<std::size_t>(l.node)] = l.far_marker;
            rt.parent_marker[static_cast<std::size_t>(l.node)] = l.my_marker;
            rt.depth[static_cast<std::size_t>(l.node)] = rt.depth[static_cast<std::size_t>(u)] + 1;
            queue.push_back(l.node);
        }
    }

    // Initial coloring: markers 0, originals 1.
    for (TreeVertex& tv : t.verts)
        if (tv.alive) tv.color = tv.original < 0 ? 0 : 1;
    return rt;
}

std::pair<PhiMap, std::vector<int>> renumber_colors(const std::vector<int>& colors) {
    int mx = -1;
    for (int c : colors) {
        if (c < 0) throw std::invalid_argument("negative color");
        mx = std::max(mx, c);
    }
    PhiMap pm;
    std::vector<int> renum(colors.size());
    if (mx >= 0 && static_cast<std::size_t>(mx) <= 4 * colors.size()) {
        // Dense color range (the layer algorithm's usual shape): two
        // counting passes instead of a sort.
        std::vector<int> rank(static_cast<std::size_t>(mx) + 1, -1);
        for (int c : colors) rank[static_cast<std::size_t>(c)] = 0;
        for (int v = 0; v <= mx; ++v)
            if (rank[static_cast<std::size_t>(v)] == 0) {
                rank[static_cast<std::size_t>(v)] = static_cast<int>(pm.phi.size());
                pm.phi.push_back(v);
            }
        for (std::size_t i = 0; i < colors.size(); ++i)
            renum[i] = rank[static_cast<std::size_t>(colors[i])];
        return {std::move(pm), std::move(renum)};
    }
    pm.phi = colors;
    std::sort(pm.phi.begin(), pm.phi.end());
    pm.phi.erase(std::unique(pm.phi.begin(), pm.phi.end()), pm.phi.end());
    for (std::size_t i = 0; i < colors.size(); ++i)
        renum[i] = static_cast<int>(std::lower_bound(pm.phi.begin(), pm.phi.end(), colors[i]) - pm.phi.begin());
    return {std::move(pm), std::move(renum)};
}

namespace {

// Appends the node encoding to out; rep may be null for degenerate nodes and
// node_graph may be null unless validate is set (only validation reads the
// edges).
void canon_node_append(Encoding& out, int n, const ColoredGraph* node_graph,
                       const std::vector<int>& colors, const NodeClass& klass, const CircleRep* rep,
                       bool validate) {
    if (validate && node_graph == nullptr) throw std::logic_error("canon_node: validation needs the node graph");
    if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("canon_node: color count mismatch");
    for (int c : colors)
        if (c < 0 || c >= n) throw std::invalid_argument("canon_node: colors must be renumbered to 0..n-1");

    switch (klass.kind) {
        case NodeKind::Complete: {
            if (validate &&
                static_cast<long long>(node_graph->edges.size()) != static_cast<long long>(n) * (n - 1) / 2)
                throw std::invalid_argument("canon_node: node is not complete");
            out.push_back(0);
            std::vector<int> sorted = colors;
            std::sort(sorted.begin(), sorted.end());
            out.insert(out.end(), sorted.begin(), sorted.end());
            break;
        }
        case NodeKind::Star: {
            int center = klass.center;
            if (center < 0 || center >= n) throw std::invalid_argument("canon_node: star center out of range");
            if (validate) {
                if (static_cast<int>(node_graph->edges.size()) != n - 1)
                    throw std::invalid_argument("canon_node: node is not a star");
                for (auto [u, v] : node_graph->edges)
                    if (u != center && v != center)
                        throw std::invalid_argument("canon_node: node is not a star at the given center");
            }
            out.push_back(1);
            out.push_back(colors[static_cast<std::size_t>(center)]);
            std::vector<int> leaves;
            leaves.reserve(static_cast<std::size_t>(n) - 1);
            for (int v = 0; v < n; ++v)
                if (v != center) leaves.push_back(colors[static_cast<std::size_t>(v)]);
            std::sort(leaves.begin(), leaves.end());
            out.insert(out.end(), leaves.begin(), leaves.end());
            break;
        }
        case NodeKind::Prime: {
            if (!rep) throw std::invalid_argument("canon_node: prime node needs a representation");
            if (rep->n != n) throw std::invalid_argument("canon_node: representation size mismatch");
            if (validate && interleaving_graph(*rep).edges != node_graph->edges)
                throw std::invalid_argument("canon_node: representation does not realize the node graph");
            // Compare the two orientations' minimal rotations and
            // materialize only the winner.  Reversal sends position i to
            // 2n-1-i and complements gaps to 2n-2 (word reversal keeps
            // labels), so the reversed gap word is read straight out of the
            // forward one instead of being built; the gap words dominate
            // the node's memory traffic at large n.
            std::vector<int> fwd = lambda_encoding(*rep, colors).values;
            const int npos = n * 2;
            const int len = static_cast<int>(fwd.size());
            auto at_f = [&](int t) { return fwd[static_cast<std::size_t>(t >= len ? t - len : t)]; };
            auto at_b = [&](int t) {
                if (t >= len) t -= len;
                int src = 2 * (npos - 1 - (t >> 1));
                return (t & 1) ? fwd[static_cast<std::size_t>(src + 1)]
                               : npos - 2 - fwd[static_cast<std::size_t>(src)];
            };
            int sf = min_rotation_start_fn(len, at_f);
            int sb = min_rotation_start_fn(len, at_b);
            bool backward = false;
            for (int t2 = 0; t2 < len; ++t2) {
                int a = at_f(sf + t2), b = at_b(sb + t2);
                if (a == b) continue;
                backward = b < a;
                break;
            }
            out.reserve(out.size() + 1 + static_cast<std::size_t>(len));
            out.push_back(2);
            if (backward)
                for (int t2 = 0; t2 < len; ++t2) out.push_back(at_b(sb + t2));
            else
                for (int t2 = 0; t2 < len; ++t2) out.push_back(at_f(sf + t2));
            break;
        }
    }
}

}  // namespace

Encoding canon_node(const ColoredGraph& node_graph, const std::vector<int>& colors,
                    const NodeClass& klass, const std::optional<CircleRep>& rep, bool validate) {
    Encoding out;
    canon_node_append(out, node_graph.n, &node_graph, colors, klass, rep ? &*rep : nullptr, validate);
    return out;
}

Encoding canon_tree(const RootedTree& rt, const std::map<int, CircleRep>& node_reps, bool validate) {
    const GraphLabeledTree& t = rt.tree;
    auto alive = t.alive_nodes();
    if (alive.empty()) throw std::invalid_argument("canon_tree requires a non-empty tree");
    if (rt.root < 0 || rt.root >= static_cast<int>(t.nodes.size()) ||
        !t.nodes[static_cast<std::size_t>(rt.root)].alive ||
        rt.depth.size() != t.nodes.size())
        throw std::invalid_argument("canon_tree requires a rooted tree");

    // Working colors: markers 0, originals 1; parent markers are recolored
    // as their children are processed.
    std::vector<int> col(t.verts.size(), 0);
    for (std::size_t v = 0; v < t.verts.size(); ++v)
        if (t.verts[v].alive) col[v] = t.verts[v].original < 0 ? 0 : 1;

    int maxd = 0;
    for (int i : alive) {
        if (rt.depth[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("node unreachable from the root");
        maxd = std::max(maxd, rt.depth[static_cast<std::size_t>(i)]);
    }
    std::vector<std::vector<int>> layers(static_cast<std::size_t>(maxd) + 1);
    for (int i : alive) layers[static_cast<std::size_t>(rt.depth[static_cast<std::size_t>(i)])].push_back(i);

    std::vector<Encoding> stored;  // stored[i] holds the encoding of color i+2
    int used_colors = 2;           // colors 0 and 1 are predefined
    int layer_colors = 0;          // colors assigned to the previous layer
    int root_color = -1;

    for (int d = maxd; d >= 0; --d) {
        const std::vector<int>& layer = layers[static_cast<std::size_t>(d)];
        std::vector<Encoding> keyed(layer.size());
        for (std::size_t i = 0; i < layer.size(); ++i) {
            int node = layer[i];
            const TreeNode& nd = t.nodes[static_cast<std::size_t>(node)];
            const std::vector<int>& l2g = nd.verts;
            const int nv = static_cast<int>(l2g.size());
            ColoredGraph ng;  // built only when validating; the edges are not read otherwise
            if (validate) ng = t.node_graph(node);
            std::vector<int> node_colors(static_cast<std::size_t>(nv));
            int zeros = 0;
            for (int v = 0; v < nv; ++v) {
                node_colors[static_cast<std::size_t>(v)] = col[static_cast<std::size_t>(l2g[static_cast<std::size_t>(v)])];
                if (node_colors[static_cast<std::size_t>(v)] == 0) ++zeros;
            }
            // By the time a node is processed every child marker has been
            // recolored, so only the marker toward the parent keeps color 0.
            if (node == rt.root ? zeros != 0 : zeros != 1)
                throw std::logic_error("unexpected color-0 vertex count during layer processing");

            auto [phi, renum] = renumber_colors(node_colors);
            NodeClass klass{nd.kind, -1};
            if (nd.kind == NodeKind::Star) {
                for (int v = 0; v < nv; ++v)
                    if (l2g[static_cast<std::size_t>(v)] == nd.star_center) klass.center = v;
                if (klass.center < 0) throw std::invalid_argument("star center is not a vertex of its node");
            }
            const CircleRep* rep = nullptr;
            if (nd.kind == NodeKind::Prime) {
                auto it = node_reps.find(node);
                if (it == node_reps.end())
                    throw std::invalid_argument("prime node " + std::to_string(node) + " has no representation");
                rep = &it->second;
            }
            Encoding& key = keyed[i];
            key.push_back(static_cast<int>(phi.phi.size()));
            key.insert(key.end(), phi.phi.begin(), phi.phi.end());
            canon_node_append(key, nv, validate ? &ng : nullptr, renum, klass, rep, validate);
        }

        LexSortResult ranked = lex_sort_sequences(keyed);
        int distinct = 0;
        for (int r : ranked.ranks) distinct = std::max(distinct, r + 1);
        int base = used_colors + layer_colors;
        for (std::size_t i = 0; i < layer.size(); ++i) {
            int color = base + ranked.ranks[i];
            int slot = color - 2;
            if (static_cast<int>(stored.size()) <= slot) stored.resize(static_cast<std::size_t>(slot) + 1);
            if (stored[static_cast<std::size_t>(slot)].empty())
                stored[static_cast<std::size_t>(slot)] = std::move(keyed[i]);
            int node = layer[i];
            if (node == rt.root)
                root_color = color;
            else
                col[static_cast<std::size_t>(rt.parent_marker[static_cast<std::size_t>(node)])] = color;
        }
        used_colors = base;
        layer_colors = distinct;
    }

    if (root_color < 0) throw std::logic_error("root was never colored");
    std::size_t total = 1;
    for (const Encoding& e : stored) total += 1 + e.size();
    Encoding out;
    out.reserve(total);
    out.push_back(root_color - 1);
    for (int color = 2; color <= root_color; ++color) {
        const Encoding& e = stored[static_cast<std::size_t>(color - 2)];
        if (e.empty()) throw std::logic_error("gap in the color table");
        out.push_back(static_cast<int>(e.size()));
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

namespace {

// State shared by the recursive decoder.
struct Decoder {
    const std::vector<Encoding>& table;  // table[color] for color in 2..c
    GraphLabeledTree& t;
    std::vector<char>& used;
    int next_original = 0;

    // Builds the node stored under `color`; returns the global index of its
    // unique color-0 vertex (the marker toward the parent), or -1 for the
    // root.  Child colors are strictly smaller, so recursion terminates.
    int build(int color, bool is_root) {
        used[static_cast<std::size_t>(color)] = 1;
        const Encoding& e = table[static_cast<std::size_t>(color)];
        std::size_t q = 0;
        auto need = [&](std::size_t k) {
            if (q + k > e.size()) throw std::invalid_argument("truncated node encoding");
        };

        need(1);
        int phi_size = e[q++];
        if (phi_size < 1) throw std::invalid_argument("empty color map");
        need(static_cast<std::size_t>(phi_size));
        std::vector<int> phi(e.begin() + static_cast<std::ptrdiff_t>(q),
                             e.begin() + static_cast<std::ptrdiff_t>(q) + phi_size);
        q += static_cast<std::size_t>(phi_size);
        for (int i = 0; i < phi_size; ++i) {
            if (phi[static_cast<std::size_t>(i)] < 0 ||
                (i > 0 && phi[static_cast<std::size_t>(i)] <= phi[static_cast<std::size_t>(i - 1)]))
                throw std::invalid_argument("color map is not strictly increasing");
            int c = phi[static_cast<std::size_t>(i)];
            if (c >= 2 && c >= color) throw std::invalid_argument("dangling color reference");
        }

        need(1);
        int tag = e[q++];
        std::vector<int> renum;                   // per local vertex, index into phi
        std::vector<std::pair<int, int>> edges;   // local edges
        NodeKind kind = NodeKind::Prime;
        int center = -1;  // local star center
        if (tag == 0 || tag == 1) {
            kind = tag == 0 ? NodeKind::Complete : NodeKind::Star;
            renum.assign(e.begin() + static_cast<std::ptrdiff_t>(q), e.end());
            q = e.size();
            const int nv = static_cast<int>(renum.size());
            if (nv < 1) throw std::invalid_argument("node without vertices");
            int sorted_from = 0;
            if (tag == 0) {
                for (int u = 0; u < nv; ++u)
                    for (int v = u + 1; v < nv; ++v) edges.emplace_back(u, v);
            } else {
                if (nv < 3) throw std::invalid_argument("star with fewer than three vertices");
                center = 0;  // layout: center first, then sorted leaves
                for (int v = 1; v < nv; ++v) edges.emplace_back(0, v);
                sorted_from = 1;
            }
            for (int v = sorted_from + 1; v < nv; ++v)
                if (renum[static_cast<std::size_t>(v)] < renum[static_cast<std::size_t>(v - 1)])
                    throw std::invalid_argument("node colors out of order");
        } else if (tag == 2) {
            std::vector<int> rest(e.begin() + static_cast<std::ptrdiff_t>(q), e.end());
            q = e.size();
            if (rest.empty() || rest.size() % 4 != 0) throw std::invalid_argument("bad gap-word length");
            const int nv = static_cast<int>(rest.size() / 4);
            const int len = 2 * nv;
            std::vector<int> gap(static_cast<std::size_t>(len)), ccol(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) {
                gap[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(2 * i)];
                int shifted = rest[static_cast<std::size_t>(2 * i + 1)];
                if (gap[static_cast<std::size_t>(i)] < 0 || gap[static_cast<std::size_t>(i)] > len - 2)
                    throw std::invalid_argument("gap out of range");
                if (shifted < len - 1 || shifted > len - 1 + nv - 1)
                    throw std::invalid_argument("shifted color out of range");
                ccol[static_cast<std::size_t>(i)] = shifted - (len - 1);
            }
            // Partner of endpoint i sits gap+1 steps clockwise; the pairing
            // must be an involution with matching colors on both endpoints.
            std::vector<int> partner(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i)
                partner[static_cast<std::size_t>(i)] = (i + gap[static_cast<std::size_t>(i)] + 1) % len;
            std::vector<int> word(static_cast<std::size_t>(len), -1);
            renum.clear();
            for (int i = 0; i < len; ++i) {
                int j = partner[static_cast<std::size_t>(i)];
                if (j == i || partner[static_cast<std::size_t>(j)] != i ||
                    ccol[static_cast<std::size_t>(j)] != ccol[static_cast<std::size_t>(i)])
                    throw std::invalid_argument("inconsistent gap word");
                if (j > i) {
                    word[static_cast<std::size_t>(i)] = word[static_cast<std::size_t>(j)] =
                        static_cast<int>(renum.size());
                    renum.push_back(ccol[static_cast<std::size_t>(i)]);
                }
            }
            edges = interleaving_graph(CircleRep{nv, word}).edges;
        } else {
            throw std::invalid_argument("unknown node tag " + std::to_string(tag));
        }

        // Every phi slot must be referenced and all indices must be valid.
        const int nv = static_cast<int>(renum.size());
        std::vector<char> seen(static_cast<std::size_t>(phi_size), 0);
        for (int r : renum) {
            if (r < 0 || r >= phi_size) throw std::invalid_argument("color index out of range");
            seen[static_cast<std::size_t>(r)] = 1;
        }
        for (char s : seen)
            if (!s) throw std::invalid_argument("unused entry in the color map");

        std::vector<int> vcolor(static_cast<std::size_t>(nv));
        int zeros = 0;
        for (int v = 0; v < nv; ++v) {
            vcolor[static_cast<std::size_t>(v)] = phi[static_cast<std::size_t>(renum[static_cast<std::size_t>(v)])];
            if (vcolor[static_cast<std::size_t>(v)] == 0) ++zeros;
        }
        if (is_root ? zeros != 0 : zeros != 1)
            throw std::invalid_argument("wrong number of parent markers in a node");

        // Materialize the node.
        const int node_idx = static_cast<int>(t.nodes.size());
        t.nodes.emplace_back();
        std::vector<int> global(static_cast<std::size_t>(nv));
        {
            TreeNode& nd = t.nodes[static_cast<std::size_t>(node_idx)];
            nd.kind = kind;
            for (int v = 0; v < nv; ++v) {
                int gv = static_cast<int>(t.verts.size());
                global[static_cast<std::size_t>(v)] = gv;
                TreeVertex tv;
                tv.node = node_idx;
                tv.color = vcolor[static_cast<std::size_t>(v)];
                if (tv.color == 1) tv.original = next_original++;
                t.verts.push_back(tv);
                nd.verts.push_back(gv);
            }
            for (auto [u, v] : edges)
                nd.edges.emplace_back(global[static_cast<std::size_t>(u)], global[static_cast<std::size_t>(v)]);
            if (center >= 0) nd.star_center = global[static_cast<std::size_t>(center)];
        }

        int up = -1;
        for (int v = 0; v < nv; ++v) {
            int c = vcolor[static_cast<std::size_t>(v)];
            if (c == 0) up = global[static_cast<std::size_t>(v)];
            if (c < 2) continue;
            // A stored color spawns a child; its unique color-0 vertex is
            // the far end of the new tree edge.  (Vector growth may move
            // t.verts, so re-index after the recursive call.)
            int child_up = build(c, false);
            t.verts[static_cast<std::size_t>(global[static_cast<std::size_t>(v)])].peer = child_up;
            t.verts[static_cast<std::size_t>(child_up)].peer = global[static_cast<std::size_t>(v)];
        }
        return up;
    }
};

}  // namespace

GraphLabeledTree decode(const Encoding& e) {
    if (e.empty()) throw std::invalid_argument("empty encoding");
    if (e == Encoding{0}) {  // K1 sentinel
        GraphLabeledTree t = single_node_tree(ColoredGraph(1, {}));
        t.nodes[0].kind = NodeKind::Complete;
        return t;
    }
    if (e == Encoding{0, 0}) {  // K2 sentinel
        GraphLabeledTree t = single_node_tree(ColoredGraph(2, {{0, 1}}));
        t.nodes[0].kind = NodeKind::Complete;
        return t;
    }

    std::size_t p = 0;
    auto need = [&](std::size_t k) {
        if (p + k > e.size()) throw std::invalid_argument("truncated encoding");
    };
    need(1);
    if (e[0] < 1) throw std::invalid_argument("bad color count");
    const int c = e[0] + 1;
    p = 1;
    std::vector<Encoding> table(static_cast<std::size_t>(c) + 1);
    for (int color = 2; color <= c; ++color) {
        need(1);
        int len = e[p++];
        if (len < 1) throw std::invalid_argument("empty table entry");
        need(static_cast<std::size_t>(len));
        table[static_cast<std::size_t>(color)].assign(e.begin() + static_cast<std::ptrdiff_t>(p),
                                                      e.begin() + static_cast<std::ptrdiff_t>(p + len));
        p += static_cast<std::size_t>(len);
    }
    if (p != e.size()) throw std::invalid_argument("trailing data after the color table");

    GraphLabeledTree t;
    std::vector<char> used(static_cast<std::size_t>(c) + 1, 0);
    Decoder dec{table, t, used};
    dec.build(c, true);
    for (int color = 2; color <= c; ++color)
        if (!used[static_cast<std::size_t>(color)]) throw std::invalid_argument("unreferenced table entry");
    return t;
}

CircleRep derive_node_representation(const RootedTree& rt, int node, const CircleRep& global_rep) {
    const GraphLabeledTree& t = rt.tree;
    std::vector<int> l2g;
    ColoredGraph ng = t.node_graph(node, &l2g);
    const int k = ng.n;
    const int n = global_rep.n;
    const int len = 2 * n;
    if (static_cast<int>(global_rep.word.size()) != len)
        throw std::invalid_argument("malformed representation");

    // Label every original vertex of the input graph with a local index:
    // originals inside the node map to themselves; everything else maps to
    // the node marker whose subtree contains it.
    std::vector<int> label_of(static_cast<std::size_t>(n), -1);
    std::vector<char> is_marker(static_cast<std::size_t>(k), 0);
    std::vector<char> node_seen(t.nodes.size(), 0);
    node_seen[static_cast<std::size_t>(node)] = 1;
    auto adj = std::vector<std::vector<int>>();  // node -> adjacent nodes
    adj.resize(t.nodes.size());
    for (auto [m1, m2] : t.tree_edges()) {
        int a = t.verts[static_cast<std::size_t>(m1)].node;
        int b = t.verts[static_cast<std::size_t>(m2)].node;
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    auto claim = [&](int original, int local) {
        if (original < 0 || original >= n || label_of[static_cast<std::size_t>(original)] != -1)
            throw std::runtime_error("representation does not match the tree's vertices");
        label_of[static_cast<std::size_t>(original)] = local;
    };
    for (int v = 0; v < k; ++v) {
        const TreeVertex& tv = t.verts[static_cast<std::size_t>(l2g[static_cast<std::size_t>(v)])];
        if (tv.original >= 0) {
            claim(tv.original, v);
            continue;
        }
        is_marker[static_cast<std::size_t>(v)] = 1;
        // Everything reachable through this marker belongs to its scope.
        std::deque<int> queue{t.verts[static_cast<std::size_t>(tv.peer)].node};
        node_seen[static_cast<std::size_t>(queue.front())] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int gv : t.nodes[static_cast<std::size_t>(u)].verts) {
                int orig = t.verts[static_cast<std::size_t>(gv)].original;
                if (orig >= 0) claim(orig, v);
            }
            for (int w : adj[static_cast<std::size_t>(u)])
                if (!node_seen[static_cast<std::size_t>(w)]) {
                    node_seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
    }
    for (int orig = 0; orig < n; ++orig)
        if (label_of[static_cast<std::size_t>(orig)] == -1)
            throw std::runtime_error("representation has vertices outside the tree");

    std::vector<int> mapped(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        int label = global_rep.word[static_cast<std::size_t>(i)];
        if (label < 0 || label >= n) throw std::invalid_argument("malformed representation");
        mapped[static_cast<std::size_t>(i)] = label_of[static_cast<std::size_t>(label)];
    }

    // Start at a run boundary so no circular run is split, then collapse
    // each maximal run of a marker label to a single endpoint.
    int start = 0;
    bool boundary = false;
    for (int i = 0; i < len; ++i) {
        if (mapped[static_cast<std::size_t>(i)] != mapped[static_cast<std::size_t>((i + len - 1) % len)]) {
            start = i;
            boundary = true;
            break;
        }
    }
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(2 * k));
    for (int idx = 0; idx < len; ++idx) {
        int l = mapped[static_cast<std::size_t>((start + idx) % len)];
        if (boundary && !word.empty() && word.back() == l && is_marker[static_cast<std::size_t>(l)]) continue;
        word.push_back(l);
    }
    std::vector<int> times(static_cast<std::size_t>(k), 0);
    for (int l : word) ++times[static_cast<std::size_t>(l)];
    for (int v = 0; v < k; ++v)
        if (times[static_cast<std::size_t>(v)] != 2)
            throw std::runtime_error("a label does not collapse to exactly two runs");
    return CircleRep{k, std::move(word)};
}

}  // namespace circlecanon
