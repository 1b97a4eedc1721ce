#include "circlecanon/split.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circlecanon {

namespace {

constexpr int kWordBits = 64;

// Row-major adjacency bit matrix.
struct BitMatrix {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitMatrix(const ColoredGraph& g)
        : n(g.n),
          words((g.n + kWordBits - 1) / kWordBits),
          bits(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(words), 0) {
        for (auto [u, v] : g.edges) {
            set(u, v);
            set(v, u);
        }
    }
    void set(int u, int v) {
        bits[static_cast<std::size_t>(u) * static_cast<std::size_t>(words) + static_cast<std::size_t>(v / kWordBits)] |=
            1ull << (v % kWordBits);
    }
    const std::uint64_t* row(int v) const {
        return bits.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(words);
    }
    bool test(int u, int v) const { return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1ull; }
};

struct ClosureResult {
    std::vector<std::uint64_t> in_set;  // the fixpoint X as a bitset
    int size = 0;
};

// Least fixpoint of two absorption rules for seed {a, s} and outside anchor
// bstar (a vertex never allowed into X):
//   - an outside neighbor of X missing an edge to some X-vertex adjacent to
//     bstar joins X (that X-vertex sits on the cut, and the cut must reach
//     every outside neighbor of X completely);
//   - the whole neighborhood of any X-vertex non-adjacent to bstar joins X
//     (such a vertex can never sit on the cut, because the outside always
//     keeps bstar).
// Every superset of the seeds avoiding bstar whose cut is complete bipartite
// is closed under both rules, and the fixpoint itself induces a complete
// bipartite cut, so the fixpoint is the unique minimum of that family.
// Growth is monotone, so once the size exceeds max_size the fixpoint is
// oversize as well; we abort and report an empty result (size 0).
ClosureResult anchored_closure(const BitMatrix& adj, int a, int s, int bstar, int max_size) {
    const int words = adj.words;
    ClosureResult res;
    res.in_set.assign(static_cast<std::size_t>(words), 0);
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(words), 0);
    std::vector<std::uint64_t> cut_cap(static_cast<std::size_t>(words), ~0ull);
    std::vector<std::uint64_t> forced(static_cast<std::size_t>(words), 0);
    const std::uint64_t* bstar_row = adj.row(bstar);

    auto absorb = [&](int v) {
        res.in_set[static_cast<std::size_t>(v / kWordBits)] |= 1ull << (v % kWordBits);
        ++res.size;
        const std::uint64_t* r = adj.row(v);
        bool sees_bstar = (bstar_row[v / kWordBits] >> (v % kWordBits)) & 1ull;
        for (int k = 0; k < words; ++k) {
            reach[static_cast<std::size_t>(k)] |= r[k];
            if (sees_bstar)
                cut_cap[static_cast<std::size_t>(k)] &= r[k];
            else
                forced[static_cast<std::size_t>(k)] |= r[k];
        }
    };
    absorb(a);
    absorb(s);

    while (res.size <= max_size) {
        bool grew = false;
        for (int k = 0; k < words; ++k) {
            std::uint64_t add = ((reach[static_cast<std::size_t>(k)] & ~cut_cap[static_cast<std::size_t>(k)]) |
                                 forced[static_cast<std::size_t>(k)]) &
                                ~res.in_set[static_cast<std::size_t>(k)];
            while (add) {
                int b = std::countr_zero(add);
                add &= add - 1;
                absorb(k * kWordBits + b);
                grew = true;
            }
            // absorb may have extended reach/forced within words already
            // scanned this round; the outer loop re-scans until quiet.
        }
        if (!grew) return res;
    }
    res.in_set.clear();
    res.size = 0;
    return res;
}

std::vector<int> bitset_vertices(const std::vector<std::uint64_t>& set, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((set[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1ull) out.push_back(v);
    return out;
}

Split assemble_split(const BitMatrix& adj, const std::vector<std::uint64_t>& x, int n) {
    Split out;
    for (int v = 0; v < n; ++v) {
        bool inside = (x[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1ull;
        const std::uint64_t* r = adj.row(v);
        bool on_cut = false;
        for (int k = 0; k < adj.words && !on_cut; ++k) {
            std::uint64_t across = inside ? (r[k] & ~x[static_cast<std::size_t>(k)]) : (r[k] & x[static_cast<std::size_t>(k)]);
            on_cut = across != 0;
        }
        (inside ? (on_cut ? out.A : out.A_prime) : (on_cut ? out.B : out.B_prime)).push_back(v);
    }
    return out;
}

void require_connected(const ColoredGraph& g, const char* who) {
    if (!is_connected(g)) throw std::invalid_argument(std::string(who) + " requires a connected graph");
}

void require_permutation(const std::vector<int>& order, int n, const char* who) {
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument(std::string(who) + ": seed order size does not match the vertex count");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument(std::string(who) + ": seed order is not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

// Complete / Star detection without any split search.
std::optional<NodeClass> degenerate_class(const ColoredGraph& g) {
    const int n = g.n;
    const long long m = static_cast<long long>(g.edges.size());
    if (m == static_cast<long long>(n) * (n - 1) / 2) return NodeClass{NodeKind::Complete, -1};
    if (m == n - 1) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : g.edges) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        int center = -1;
        bool leaves_ok = true;
        for (int v = 0; v < n; ++v) {
            if (deg[static_cast<std::size_t>(v)] == n - 1)
                center = v;
            else if (deg[static_cast<std::size_t>(v)] != 1)
                leaves_ok = false;
        }
        if (center >= 0 && leaves_ok) return NodeClass{NodeKind::Star, center};
    }
    return std::nullopt;
}

}  // namespace

std::vector<int> GraphLabeledTree::alive_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[static_cast<std::size_t>(i)].alive) out.push_back(i);
    return out;
}

std::vector<std::pair<int, int>> GraphLabeledTree::tree_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        const TreeVertex& tv = verts[static_cast<std::size_t>(v)];
        if (tv.alive && tv.original < 0 && tv.peer > v) out.emplace_back(v, tv.peer);
    }
    return out;
}

ColoredGraph GraphLabeledTree::node_graph(int node, std::vector<int>* local_to_global) const {
    if (node < 0 || node >= static_cast<int>(nodes.size()) || !nodes[static_cast<std::size_t>(node)].alive)
        throw std::invalid_argument("no such node: " + std::to_string(node));
    const TreeNode& nd = nodes[static_cast<std::size_t>(node)];
    std::vector<int> local(verts.size(), -1);
    std::vector<int> colors;
    colors.reserve(nd.verts.size());
    for (int i = 0; i < static_cast<int>(nd.verts.size()); ++i) {
        local[static_cast<std::size_t>(nd.verts[static_cast<std::size_t>(i)])] = i;
        colors.push_back(verts[static_cast<std::size_t>(nd.verts[static_cast<std::size_t>(i)])].color);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(nd.edges.size());
    for (auto [u, v] : nd.edges)
        edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    if (local_to_global) *local_to_global = nd.verts;
    return ColoredGraph(static_cast<int>(nd.verts.size()), std::move(edges), std::move(colors));
}

std::size_t GraphLabeledTree::stored_size() const {
    std::size_t total = 0;
    for (const TreeNode& nd : nodes)
        if (nd.alive) total += nd.verts.size() + nd.edges.size();
    return total;
}

void GraphLabeledTree::validate() const {
    const int nv = static_cast<int>(verts.size());
    std::vector<int> owner(static_cast<std::size_t>(nv), -1);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        const TreeNode& nd = nodes[static_cast<std::size_t>(i)];
        if (!nd.alive) continue;
        if (nd.verts.empty()) throw std::logic_error("empty node");
        for (int v : nd.verts) {
            if (v < 0 || v >= nv) throw std::logic_error("node vertex out of range");
            const TreeVertex& tv = verts[static_cast<std::size_t>(v)];
            if (!tv.alive) throw std::logic_error("dead vertex listed in a node");
            if (tv.node != i) throw std::logic_error("vertex/node ownership mismatch");
            if (owner[static_cast<std::size_t>(v)] != -1) throw std::logic_error("vertex listed twice");
            owner[static_cast<std::size_t>(v)] = i;
        }
    }
    for (int v = 0; v < nv; ++v)
        if (verts[static_cast<std::size_t>(v)].alive && owner[static_cast<std::size_t>(v)] == -1)
            throw std::logic_error("alive vertex not listed in any node");

    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        const TreeNode& nd = nodes[static_cast<std::size_t>(i)];
        if (!nd.alive) continue;
        auto sorted_edges = nd.edges;
        for (auto& [u, v] : sorted_edges) {
            if (u == v) throw std::logic_error("self-loop in a node");
            if (owner[static_cast<std::size_t>(u)] != i || owner[static_cast<std::size_t>(v)] != i)
                throw std::logic_error("edge leaves its node");
            if (u > v) std::swap(u, v);
        }
        std::sort(sorted_edges.begin(), sorted_edges.end());
        if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end())
            throw std::logic_error("duplicate edge in a node");
        // Each node must be connected through its normal edges.
        std::vector<int> local(verts.size(), -1);
        for (int k = 0; k < static_cast<int>(nd.verts.size()); ++k)
            local[static_cast<std::size_t>(nd.verts[static_cast<std::size_t>(k)])] = k;
        std::vector<std::vector<int>> adj(nd.verts.size());
        for (auto [u, v] : nd.edges) {
            adj[static_cast<std::size_t>(local[static_cast<std::size_t>(u)])].push_back(local[static_cast<std::size_t>(v)]);
            adj[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])].push_back(local[static_cast<std::size_t>(u)]);
        }
        std::vector<char> seen(nd.verts.size(), 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        int reached = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    queue.push_back(w);
                }
        }
        if (reached != static_cast<int>(nd.verts.size())) throw std::logic_error("node graph is disconnected");
    }

    // Markers pair up across distinct nodes; originals carry no tree edge.
    int marker_count = 0;
    for (int v = 0; v < nv; ++v) {
        const TreeVertex& tv = verts[static_cast<std::size_t>(v)];
        if (!tv.alive) continue;
        if (tv.original >= 0) {
            if (tv.peer != -1) throw std::logic_error("original vertex with a tree edge");
            continue;
        }
        ++marker_count;
        if (tv.peer < 0 || tv.peer >= nv) throw std::logic_error("marker with no peer");
        const TreeVertex& other = verts[static_cast<std::size_t>(tv.peer)];
        if (!other.alive || other.original >= 0 || other.peer != v)
            throw std::logic_error("broken marker pairing");
        if (other.node == tv.node) throw std::logic_error("tree edge inside one node");
    }

    // The node-incidence graph must be a tree.
    auto alive = alive_nodes();
    auto tedges = tree_edges();
    if (marker_count != 2 * static_cast<int>(tedges.size())) throw std::logic_error("unpaired marker");
    if (static_cast<int>(tedges.size()) != static_cast<int>(alive.size()) - 1)
        throw std::logic_error("tree edge count does not match node count");
    std::vector<std::vector<int>> nadj(nodes.size());
    for (auto [m1, m2] : tedges) {
        nadj[static_cast<std::size_t>(verts[static_cast<std::size_t>(m1)].node)].push_back(
            verts[static_cast<std::size_t>(m2)].node);
        nadj[static_cast<std::size_t>(verts[static_cast<std::size_t>(m2)].node)].push_back(
            verts[static_cast<std::size_t>(m1)].node);
    }
    std::vector<char> seen(nodes.size(), 0);
    std::deque<int> queue{alive.front()};
    seen[static_cast<std::size_t>(alive.front())] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : nadj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    if (reached != static_cast<int>(alive.size())) throw std::logic_error("node-incidence graph is disconnected");
}

GraphLabeledTree single_node_tree(const ColoredGraph& g) {
    validate_graph(g);
    GraphLabeledTree t;
    t.verts.resize(static_cast<std::size_t>(g.n));
    TreeNode node;
    node.verts.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        t.verts[static_cast<std::size_t>(v)].original = v;
        t.verts[static_cast<std::size_t>(v)].node = 0;
        node.verts[static_cast<std::size_t>(v)] = v;
    }
    node.edges = g.edges;
    t.nodes.push_back(std::move(node));
    return t;
}

GraphLabeledTree single_prime_tree(int n) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    GraphLabeledTree t = single_node_tree(ColoredGraph(n, {}));
    t.nodes[0].kind = NodeKind::Prime;
    return t;
}

std::vector<int> split_closure(const ColoredGraph& g, std::pair<int, int> seed) {
    validate_graph(g);
    require_connected(g, "split_closure");
    if (g.n < 4) throw std::invalid_argument("split_closure requires at least 4 vertices");
    auto [a, s] = seed;
    if (a < 0 || a >= g.n || s < 0 || s >= g.n || a == s)
        throw std::invalid_argument("seed must be two distinct vertices");
    BitMatrix adj(g);
    ClosureResult best;
    for (int b = 0; b < g.n; ++b) {
        if (b == a || b == s) continue;
        if (!adj.test(a, b) && !adj.test(s, b)) continue;
        ClosureResult r = anchored_closure(adj, a, s, b, g.n);
        if (best.size == 0 || r.size < best.size) best = std::move(r);
    }
    if (best.size == 0) throw std::logic_error("connected seed has no outside anchor");
    return bitset_vertices(best.in_set, g.n);
}

std::optional<Split> find_split(const ColoredGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    return find_split(g, order);
}

std::optional<Split> find_split(const ColoredGraph& g, const std::vector<int>& seed_order) {
    validate_graph(g);
    require_connected(g, "find_split");
    const int n = g.n;
    require_permutation(seed_order, n, "find_split");
    if (n <= 3) return std::nullopt;
    BitMatrix adj(g);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int a = seed_order[static_cast<std::size_t>(i)];
            int s = seed_order[static_cast<std::size_t>(j)];
            for (int k = 0; k < n; ++k) {
                int b = seed_order[static_cast<std::size_t>(k)];
                if (b == a || b == s) continue;
                if (!adj.test(a, b) && !adj.test(s, b)) continue;
                ClosureResult r = anchored_closure(adj, a, s, b, n - 2);
                if (r.size == 0) continue;  // fixpoint oversize, aborted
                return assemble_split(adj, r.in_set, n);
            }
        }
    }
    return std::nullopt;
}

void apply_split(GraphLabeledTree& t, int node, const Split& s) {
    std::vector<int> l2g;
    ColoredGraph ng = t.node_graph(node, &l2g);
    const int k = ng.n;

    // Side and cut membership per local vertex: 0 = A side, 1 = B side.
    std::vector<int> side(static_cast<std::size_t>(k), -1);
    std::vector<char> on_cut(static_cast<std::size_t>(k), 0);
    auto mark = [&](const std::vector<int>& vs, int which, bool cut) {
        for (int v : vs) {
            if (v < 0 || v >= k) throw std::invalid_argument("split vertex out of range");
            if (side[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("split sets overlap");
            side[static_cast<std::size_t>(v)] = which;
            on_cut[static_cast<std::size_t>(v)] = cut ? 1 : 0;
        }
    };
    mark(s.A, 0, true);
    mark(s.A_prime, 0, false);
    mark(s.B, 1, true);
    mark(s.B_prime, 1, false);
    for (int v = 0; v < k; ++v)
        if (side[static_cast<std::size_t>(v)] == -1) throw std::invalid_argument("split does not cover the node");
    const long long asz = static_cast<long long>(s.A.size()) + static_cast<long long>(s.A_prime.size());
    const long long bsz = static_cast<long long>(s.B.size()) + static_cast<long long>(s.B_prime.size());
    if (asz < 2 || bsz < 2) throw std::invalid_argument("both split sides need at least two vertices");
    if (s.A.empty() || s.B.empty()) throw std::invalid_argument("split has an empty cut");

    // Partition the edges; cross edges must form exactly A x B.
    std::vector<std::pair<int, int>> a_edges, b_edges;
    long long cross = 0;
    for (auto [u, v] : ng.edges) {
        int su = side[static_cast<std::size_t>(u)], sv = side[static_cast<std::size_t>(v)];
        if (su == sv) {
            (su == 0 ? a_edges : b_edges).emplace_back(u, v);
        } else {
            if (!on_cut[static_cast<std::size_t>(u)] || !on_cut[static_cast<std::size_t>(v)])
                throw std::invalid_argument("cut edge touches a split-off vertex");
            ++cross;
        }
    }
    if (cross != static_cast<long long>(s.A.size()) * static_cast<long long>(s.B.size()))
        throw std::invalid_argument("cut is not complete bipartite");

    // New markers and nodes.
    const int m_a = static_cast<int>(t.verts.size());
    const int m_b = m_a + 1;
    const int node_a = static_cast<int>(t.nodes.size());
    const int node_b = node_a + 1;

    TreeVertex va;
    va.node = node_a;
    va.peer = m_b;
    TreeVertex vb;
    vb.node = node_b;
    vb.peer = m_a;
    t.verts.push_back(va);
    t.verts.push_back(vb);

    TreeNode na, nb;
    for (int v = 0; v < k; ++v) {
        int g = l2g[static_cast<std::size_t>(v)];
        if (side[static_cast<std::size_t>(v)] == 0) {
            na.verts.push_back(g);
            t.verts[static_cast<std::size_t>(g)].node = node_a;
        } else {
            nb.verts.push_back(g);
            t.verts[static_cast<std::size_t>(g)].node = node_b;
        }
    }
    na.verts.push_back(m_a);
    nb.verts.push_back(m_b);
    for (auto [u, v] : a_edges)
        na.edges.emplace_back(l2g[static_cast<std::size_t>(u)], l2g[static_cast<std::size_t>(v)]);
    for (auto [u, v] : b_edges)
        nb.edges.emplace_back(l2g[static_cast<std::size_t>(u)], l2g[static_cast<std::size_t>(v)]);
    for (int v : s.A) na.edges.emplace_back(m_a, l2g[static_cast<std::size_t>(v)]);
    for (int v : s.B) nb.edges.emplace_back(m_b, l2g[static_cast<std::size_t>(v)]);

    t.nodes[static_cast<std::size_t>(node)].alive = false;
    t.nodes.push_back(std::move(na));
    t.nodes.push_back(std::move(nb));
}

std::optional<NodeClass> classify_node(const ColoredGraph& node_graph) {
    validate_graph(node_graph);
    if (node_graph.n < 2) throw std::invalid_argument("classify_node requires at least 2 vertices");
    if (auto d = degenerate_class(node_graph)) return d;
    if (find_split(node_graph)) return std::nullopt;
    return NodeClass{NodeKind::Prime, -1};
}

GraphLabeledTree decompose(const ColoredGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    return decompose(g, order);
}

GraphLabeledTree decompose(const ColoredGraph& g, const std::vector<int>& seed_order) {
    validate_graph(g);
    require_connected(g, "decompose");
    require_permutation(seed_order, g.n, "decompose");
    std::vector<int> pos_of(static_cast<std::size_t>(g.n), 0);
    for (int i = 0; i < g.n; ++i) pos_of[static_cast<std::size_t>(seed_order[static_cast<std::size_t>(i)])] = i;

    GraphLabeledTree t = single_node_tree(g);
    std::deque<int> work{0};
    while (!work.empty()) {
        int idx = work.front();
        work.pop_front();
        std::vector<int> l2g;
        ColoredGraph ng = t.node_graph(idx, &l2g);
        TreeNode& nd = t.nodes[static_cast<std::size_t>(idx)];
        if (ng.n < 2) {  // single-vertex input graph
            nd.kind = NodeKind::Complete;
            nd.star_center = -1;
            continue;
        }
        if (auto d = degenerate_class(ng)) {
            nd.kind = d->kind;
            nd.star_center = d->kind == NodeKind::Star ? l2g[static_cast<std::size_t>(d->center)] : -1;
            continue;
        }
        // Seed order within the node: originals by their position in the
        // given order, then markers by global index (creation order).
        std::vector<int> local(static_cast<std::size_t>(ng.n));
        std::iota(local.begin(), local.end(), 0);
        std::sort(local.begin(), local.end(), [&](int x, int y) {
            const TreeVertex& vx = t.verts[static_cast<std::size_t>(l2g[static_cast<std::size_t>(x)])];
            const TreeVertex& vy = t.verts[static_cast<std::size_t>(l2g[static_cast<std::size_t>(y)])];
            long long kx = vx.original >= 0 ? pos_of[static_cast<std::size_t>(vx.original)]
                                            : static_cast<long long>(g.n) + l2g[static_cast<std::size_t>(x)];
            long long ky = vy.original >= 0 ? pos_of[static_cast<std::size_t>(vy.original)]
                                            : static_cast<long long>(g.n) + l2g[static_cast<std::size_t>(y)];
            return kx < ky;
        });
        auto split = find_split(ng, local);
        if (!split) {
            nd.kind = NodeKind::Prime;
            nd.star_center = -1;
            continue;
        }
        apply_split(t, idx, *split);
        work.push_back(static_cast<int>(t.nodes.size()) - 2);
        work.push_back(static_cast<int>(t.nodes.size()) - 1);
    }
    return t;
}

namespace {

// Validates that the pair is a tree edge and returns the incident nodes.
std::pair<int, int> edge_nodes(const GraphLabeledTree& t, std::pair<int, int> e) {
    auto [m1, m2] = e;
    const int nv = static_cast<int>(t.verts.size());
    if (m1 < 0 || m1 >= nv || m2 < 0 || m2 >= nv) throw std::invalid_argument("tree edge endpoint out of range");
    const TreeVertex& v1 = t.verts[static_cast<std::size_t>(m1)];
    const TreeVertex& v2 = t.verts[static_cast<std::size_t>(m2)];
    if (!v1.alive || !v2.alive || v1.original >= 0 || v2.original >= 0 || v1.peer != m2 || v2.peer != m1)
        throw std::invalid_argument("not a tree edge");
    return {v1.node, v2.node};
}

}  // namespace

bool joinable_pair(const GraphLabeledTree& t, std::pair<int, int> tree_edge) {
    auto [n1, n2] = edge_nodes(t, tree_edge);
    const TreeNode& a = t.nodes[static_cast<std::size_t>(n1)];
    const TreeNode& b = t.nodes[static_cast<std::size_t>(n2)];
    if (a.kind == NodeKind::Complete && b.kind == NodeKind::Complete) return true;
    if (a.kind == NodeKind::Star && b.kind == NodeKind::Star) {
        bool at_a = a.star_center == tree_edge.first;
        bool at_b = b.star_center == tree_edge.second;
        return at_a != at_b;
    }
    return false;
}

bool has_joinable_pair(const GraphLabeledTree& t) {
    for (auto e : t.tree_edges())
        if (joinable_pair(t, e)) return true;
    return false;
}

void join_edge(GraphLabeledTree& t, std::pair<int, int> tree_edge) {
    auto [n1, n2] = edge_nodes(t, tree_edge);
    if (n1 == n2) throw std::invalid_argument("tree edge inside one node");
    auto [m1, m2] = tree_edge;

    const TreeNode& a = t.nodes[static_cast<std::size_t>(n1)];
    const TreeNode& b = t.nodes[static_cast<std::size_t>(n2)];
    std::vector<int> na, nb;  // neighbors of the two markers
    TreeNode merged;
    for (int v : a.verts)
        if (v != m1) merged.verts.push_back(v);
    for (int v : b.verts)
        if (v != m2) merged.verts.push_back(v);
    for (auto [u, v] : a.edges) {
        if (u == m1)
            na.push_back(v);
        else if (v == m1)
            na.push_back(u);
        else
            merged.edges.emplace_back(u, v);
    }
    for (auto [u, v] : b.edges) {
        if (u == m2)
            nb.push_back(v);
        else if (v == m2)
            nb.push_back(u);
        else
            merged.edges.emplace_back(u, v);
    }
    for (int u : na)
        for (int v : nb) merged.edges.emplace_back(u, v);

    const int idx = static_cast<int>(t.nodes.size());
    for (int v : merged.verts) t.verts[static_cast<std::size_t>(v)].node = idx;
    t.verts[static_cast<std::size_t>(m1)].alive = false;
    t.verts[static_cast<std::size_t>(m2)].alive = false;
    t.nodes[static_cast<std::size_t>(n1)].alive = false;
    t.nodes[static_cast<std::size_t>(n2)].alive = false;
    t.nodes.push_back(std::move(merged));

    // Degenerate kinds survive joining and are cheap to re-detect; anything
    // else is marked Prime only as "not degenerate" (minimalize never joins
    // through such nodes, and join_all ignores kinds).
    TreeNode& out = t.nodes[static_cast<std::size_t>(idx)];
    std::vector<int> l2g;
    ColoredGraph ng = t.node_graph(idx, &l2g);
    if (auto d = degenerate_class(ng)) {
        out.kind = d->kind;
        out.star_center = d->kind == NodeKind::Star ? l2g[static_cast<std::size_t>(d->center)] : -1;
    } else {
        out.kind = NodeKind::Prime;
        out.star_center = -1;
    }
}

void minimalize(GraphLabeledTree& t) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto e : t.tree_edges()) {
            if (joinable_pair(t, e)) {
                join_edge(t, e);
                changed = true;
                break;
            }
        }
    }
}

ColoredGraph join_all(GraphLabeledTree t) {
    while (true) {
        auto edges = t.tree_edges();
        if (edges.empty()) break;
        join_edge(t, edges.front());
    }
    auto alive = t.alive_nodes();
    if (alive.size() != 1) throw std::invalid_argument("join_all requires a connected tree");
    const TreeNode& nd = t.nodes[static_cast<std::size_t>(alive.front())];
    std::vector<std::pair<int, int>> order;  // (original id, global index)
    order.reserve(nd.verts.size());
    for (int v : nd.verts) {
        int orig = t.verts[static_cast<std::size_t>(v)].original;
        if (orig < 0) throw std::logic_error("marker left after joining all tree edges");
        order.emplace_back(orig, v);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> newid(t.verts.size(), -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        newid[static_cast<std::size_t>(order[static_cast<std::size_t>(i)].second)] = i;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(nd.edges.size());
    for (auto [u, v] : nd.edges)
        edges.emplace_back(newid[static_cast<std::size_t>(u)], newid[static_cast<std::size_t>(v)]);
    return ColoredGraph(static_cast<int>(order.size()), std::move(edges));
}

}  // namespace circlecanon
