#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circlecanon/graph.hpp"

namespace circlecanon {

// A split partitions the vertices into (A, B, A', B') such that every a in A
// is adjacent to every b in B, A' sees nothing outside A u A', B' sees
// nothing outside B u B', and both sides have at least two vertices.
struct Split {
    std::vector<int> A, B, A_prime, B_prime;
};

enum class NodeKind { Complete, Star, Prime };

struct NodeClass {
    NodeKind kind = NodeKind::Complete;
    int center = -1;  // star center (local index) when kind == Star
};

// One vertex of a graph-labeled tree.  Markers (original == -1) are created
// by splits; each is paired with the marker on the far side of its tree edge.
struct TreeVertex {
    int original = -1;  // original vertex id, or -1 for a marker
    int node = -1;      // owning node index
    int peer = -1;      // paired marker (global index) across the tree edge
    int color = 0;      // used by the layer canonization
    bool alive = true;
};

// A node is a connected component of normal edges.
struct TreeNode {
    std::vector<int> verts;                  // global vertex indices
    std::vector<std::pair<int, int>> edges;  // normal edges, global indices
    NodeKind kind = NodeKind::Prime;         // maintained by decompose/minimalize
    int star_center = -1;                    // global index when kind == Star
    bool alive = true;
};

struct GraphLabeledTree {
    std::vector<TreeVertex> verts;
    std::vector<TreeNode> nodes;

    std::vector<int> alive_nodes() const;
    // Tree edges as marker pairs (smaller global index first), sorted.
    std::vector<std::pair<int, int>> tree_edges() const;
    // The node's graph with local indices following TreeNode::verts order;
    // optionally reports the local -> global map.
    ColoredGraph node_graph(int node, std::vector<int>* local_to_global = nullptr) const;
    // Total vertices plus normal edges over alive nodes (the O(n+m) measure).
    std::size_t stored_size() const;
    // Structural invariants; throws std::logic_error on violation.
    void validate() const;
};

GraphLabeledTree single_node_tree(const ColoredGraph& g);

// A single Prime node over the diagram's chords with no materialized edge
// list: the representation alone drives canonization.  For use when the
// diagram is known (or trusted) to be prime.
GraphLabeledTree single_prime_tree(int n);

// Minimal vertex set X containing both seed vertices whose cut (X, V-X) is
// complete bipartite, minimized per outside anchor and returned for the best
// anchor (possibly nearly all of V).  g connected, n >= 4.
std::vector<int> split_closure(const ColoredGraph& g, std::pair<int, int> seed);

// First seed pair (in the given vertex order, lexicographic by default)
// whose closure lands in 2..n-2 vertices; none iff g is prime or n <= 3.
std::optional<Split> find_split(const ColoredGraph& g);
std::optional<Split> find_split(const ColoredGraph& g, const std::vector<int>& seed_order);

// Replaces the node by G_A (A u A' plus marker m_A) and G_B (B u B' plus
// m_B), joined by a new tree edge m_A-m_B.  The split uses local indices of
// the node's graph.
void apply_split(GraphLabeledTree& t, int node, const Split& s);

// Complete / Star(center) when degenerate; Prime when find_split returns
// none; nullopt when the node is splittable (decompose keeps going).
std::optional<NodeClass> classify_node(const ColoredGraph& node_graph);

// Splits every node until all are prime or degenerate.  g connected.
GraphLabeledTree decompose(const ColoredGraph& g);
GraphLabeledTree decompose(const ColoredGraph& g, const std::vector<int>& seed_order);

// Two neighboring nodes may be joined when both are complete, or both are
// stars with the tree edge incident to exactly one center.
bool joinable_pair(const GraphLabeledTree& t, std::pair<int, int> tree_edge);
bool has_joinable_pair(const GraphLabeledTree& t);

// Inverse of apply_split: removes the two markers and connects their
// neighborhoods completely.
void join_edge(GraphLabeledTree& t, std::pair<int, int> tree_edge);

// Joins neighboring degenerate nodes until no joinable pair remains; the
// result is the unique minimal split tree.
void minimalize(GraphLabeledTree& t);

// Joins every tree edge; returns the single remaining node as an uncolored
// graph whose vertices are ordered by original id.
ColoredGraph join_all(GraphLabeledTree t);

}  // namespace circlecanon
