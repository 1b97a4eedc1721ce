#pragma once

#include <optional>
#include <vector>

#include "circlecanon/chord.hpp"
#include "circlecanon/graph.hpp"
#include "circlecanon/split.hpp"

namespace circlecanon {

// Brute-force reference implementations, written independently of the fast
// paths so they can serve as genuine cross-checks at small scale.

// Color-preserving isomorphism test by pruned permutation search; n <= 9.
bool brute_iso(const ColoredGraph& g, const ColoredGraph& h);

// Minimum over all rotations by direct comparison.
std::vector<int> brute_min_rotation(const std::vector<int>& w);

// Every subset X with 2 <= |X| <= n-2 whose cut is complete bipartite,
// assembled into Splits; n <= 7.
std::vector<Split> brute_splits(const ColoredGraph& g);

// Searches chord diagrams (perfect matchings of 2n positions with
// interleaving-consistency pruning) for one realizing g under identity
// labeling; n <= 10.  Colors are ignored.
std::optional<CircleRep> brute_find_rep(const ColoredGraph& g);

}  // namespace circlecanon
