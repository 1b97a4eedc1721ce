#pragma once

#include <utility>
#include <vector>

namespace circlecanon {

// Linear encodings are sequences of non-negative integers.  Two graphs are
// isomorphic exactly when their canonical encodings compare equal.
using Encoding = std::vector<int>;

// Simple vertex-colored graph.  Edges are stored with u < v; the constructor
// normalizes endpoint order but deliberately keeps duplicates and self-loops
// so validate_graph can report them.
struct ColoredGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors;  // one per vertex; empty input means all zero

    ColoredGraph() = default;
    ColoredGraph(int n_, std::vector<std::pair<int, int>> edges_,
                 std::vector<int> colors_ = {});

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    // Sorted neighbor lists.
    std::vector<std::vector<int>> adjacency() const;
};

// Throws std::invalid_argument on the first violated invariant:
// out-of-range endpoint, self-loop, duplicate edge, color count mismatch.
void validate_graph(const ColoredGraph& g);

bool is_connected(const ColoredGraph& g);

struct LexSortResult {
    std::vector<int> order;  // indices in non-decreasing lexicographic order
    std::vector<int> ranks;  // dense ranks; equal sequences share a rank
};

// Lexicographically sorts variable-length sequences of non-negative integers
// in time linear in the total length (plus the compacted alphabet size).
// Shorter sequences sort before their extensions.
LexSortResult lex_sort_sequences(const std::vector<Encoding>& seqs);

}  // namespace circlecanon
