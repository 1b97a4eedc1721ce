#pragma once

#include <map>
#include <optional>
#include <vector>

#include "circlecanon/chord.hpp"
#include "circlecanon/graph.hpp"
#include "circlecanon/split.hpp"

namespace circlecanon {

// A graph-labeled tree rooted at its center, with parent links and the
// initial coloring (markers 0, everything else 1).
struct RootedTree {
    GraphLabeledTree tree;  // owned; center_root may insert a synthetic node
    int root = -1;
    std::vector<int> parent;         // per node; -1 for the root
    std::vector<int> up_marker;      // node's own marker toward the parent
    std::vector<int> parent_marker;  // paired marker inside the parent node
    std::vector<int> depth;          // distance from the root
};

// Roots at the center of the node-incidence tree.  A central tree edge is
// subdivided by a synthetic 2-vertex complete node (two markers joined by a
// normal edge) so every vertex keeps at most one tree edge.
RootedTree center_root(const GraphLabeledTree& t);

// Sorted list of the distinct colors used in one node; renumbering replaces
// each color by its index.
struct PhiMap {
    std::vector<int> phi;
};

std::pair<PhiMap, std::vector<int>> renumber_colors(const std::vector<int>& colors);

// Node encoding: Complete -> [0] ++ sorted colors; Star -> [1, center color]
// ++ sorted leaf colors; Prime -> [2] ++ min over both orientations of the
// diagram's canonical rotation.  Colors must already be renumbered to
// 0..n-1.  When validate is set, a Prime rep is checked against the node
// graph's edges.
Encoding canon_node(const ColoredGraph& node_graph, const std::vector<int>& colors,
                    const NodeClass& klass, const std::optional<CircleRep>& rep,
                    bool validate = true);

// The layer algorithm: processes nodes bottom-up, renumbering colors,
// canonizing each node, ranking the layer lexicographically, assigning fresh
// colors, and recoloring parent markers.  node_reps maps node index -> the
// node's diagram (labels follow TreeNode::verts order); required for every
// Prime node.  Output: [c-1] then, for each color 2..c, the length-prefixed
// stored encoding of that color.
Encoding canon_tree(const RootedTree& rt, const std::map<int, CircleRep>& node_reps,
                    bool validate = true);

// Rebuilds a graph-labeled tree isomorphic to the encoded one.  Throws
// std::invalid_argument on malformed input (bad table, dangling color, tag
// outside 0..2, inconsistent gap word).
GraphLabeledTree decode(const Encoding& e);

// Restriction of a global representation to one Prime node: endpoints of
// foreign vertices are relabeled by the marker whose subtree contains them,
// and maximal circular runs of each marker collapse to one endpoint.
// Resulting labels follow TreeNode::verts order.  Throws std::runtime_error
// when the rep and tree are inconsistent.
CircleRep derive_node_representation(const RootedTree& rt, int node,
                                     const CircleRep& global_rep);

}  // namespace circlecanon
