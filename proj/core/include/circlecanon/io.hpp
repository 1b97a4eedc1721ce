#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "circlecanon/chord.hpp"
#include "circlecanon/graph.hpp"
#include "circlecanon/split.hpp"

namespace circlecanon {

// Text formats.  Graph files: "graph <n> <m>" then m lines "u v" with
// 0-based ids.  Rep files: "rep <n>" then 2n whitespace-separated labels
// (arbitrary non-negative integers; normalized on parse).  Encodings: one
// line of space-separated decimal integers.  All parse errors throw
// std::invalid_argument.

ColoredGraph read_graph(std::istream& in);
CircleRep read_rep(std::istream& in);

// Dispatches on the leading header word ("graph" or "rep").
std::variant<ColoredGraph, CircleRep> read_graph_or_rep(std::istream& in);

Encoding read_encoding(std::istream& in);

std::string format_graph(const ColoredGraph& g);
std::string format_rep(const CircleRep& r);
std::string format_encoding(const Encoding& e);

// DOT rendering of a graph-labeled tree: one cluster per node, solid normal
// edges, dashed tree edges, markers as doublecircle shapes.
std::string to_dot(const GraphLabeledTree& t);

}  // namespace circlecanon
