#pragma once

#include <optional>
#include <vector>

#include "circlecanon/chord.hpp"
#include "circlecanon/graph.hpp"

namespace circlecanon {

// Canonization input: a graph, a circle representation, or both (in which
// case the rep must realize the graph under identity labeling).  Input
// colors are ignored; the colored machinery is internal to the algorithm.
struct CanonInput {
    std::optional<ColoredGraph> graph;
    std::optional<CircleRep> rep;

    static CanonInput from_graph(ColoredGraph g);
    static CanonInput from_rep(CircleRep r);
    static CanonInput from_both(ColoredGraph g, CircleRep r);
};

// Maximum size of a rep-less prime node that brute-force recognition will
// handle; larger prime nodes require a representation in the input.
inline constexpr int kRecognitionLimit = 10;

// Canonical encoding of a connected graph: decompose, minimalize, root at
// the center, obtain prime representations (restriction of the input rep,
// or brute-force search up to kRecognitionLimit), and run the layer
// canonization.  K1 and K2 use the fixed sentinels [0] and [0,0].
// seed_order, when given, permutes the split-seed iteration (the result
// must not depend on it; tests rely on that).
Encoding canon_connected(const CanonInput& input,
                         const std::vector<int>* seed_order = nullptr);

// Any graph: connected components are canonized independently, sorted
// lexicographically, and emitted as [k] followed by length-prefixed
// component encodings.
Encoding canon_graph(const CanonInput& input,
                     const std::vector<int>* seed_order = nullptr);

// canon_graph(a) == canon_graph(b).
bool isomorphic(const CanonInput& a, const CanonInput& b);

}  // namespace circlecanon
