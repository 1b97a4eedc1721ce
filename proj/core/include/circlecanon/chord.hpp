#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "circlecanon/graph.hpp"

namespace circlecanon {

// Chord diagram: a circular word of 2n endpoint labels in 0..n-1, each chord
// label appearing exactly twice, read clockwise.
struct CircleRep {
    int n = 0;
    std::vector<int> word;
};

// Rotation-invariant encoding of a colored diagram: for each endpoint, the
// clockwise gap to its partner and the chord color shifted by 2n-1.  Gaps
// live in 0..2n-2 and shifted colors in 2n-1..3n-2, so the ranges never mix.
struct LambdaWord {
    std::vector<int> values;  // g_1, c_1, g_2, c_2, ..., g_2n, c_2n
};

struct ParsedRep {
    CircleRep rep;
    std::map<int, int> label_map;  // input label -> normalized label
};

// Normalizes arbitrary non-negative labels to 0..n-1 by first occurrence.
// Throws std::invalid_argument for odd length or a label count != 2.
ParsedRep parse_rep(const std::vector<int>& tokens);

// Graph on the chords; edge uv iff the endpoints alternate u,v,u,v
// circularly.  All colors zero.
ColoredGraph interleaving_graph(const CircleRep& r);

// The same circular word read counterclockwise.
CircleRep reverse_rep(const CircleRep& r);

// Number of crossing chord pairs, without materializing the graph.
long long count_crossings(const CircleRep& r);

// Colors must lie in 0..n-1.
LambdaWord lambda_encoding(const CircleRep& r, const std::vector<int>& colors);

struct Rotation {
    int start = 0;            // least index achieving the minimal rotation
    std::vector<int> word;    // the lexicographically least rotation
};

// Least index starting the lexicographically minimal rotation of the
// length-len word read through at (which must accept indices 0..2*len-1).
// Two-candidate duel: i and j race along the word, k counting agreed
// positions.  A mismatch at offset k eliminates the loser together with the
// k starts behind it (each is strictly beaten by the corresponding start on
// the winner's side).  The least minimal start is never strictly beaten, so
// it survives as min(i, j).  Linear time, no scratch memory.
template <class At>
int min_rotation_start_fn(int len, At at) {
    int i = 0, j = 1, k = 0;
    while (i < len && j < len && k < len) {
        int a = at(i + k), b = at(j + k);
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return i < j ? i : j;
}

// min_rotation_start_fn over a materialized word.  Throws on empty input.
int min_rotation_start(const std::vector<int>& w);

// min_rotation_start plus the materialized rotation.
Rotation min_rotation(const std::vector<int>& w);

// min_rotation(lambda_encoding(r, colors)): equal for two colored diagrams
// exactly when they are isomorphic as colored diagrams (up to rotation).
Encoding canon_rep(const CircleRep& r, const std::vector<int>& colors);

// Uniformly random perfect matching of 2n endpoints; deterministic per seed.
CircleRep random_rep(int n, std::uint64_t seed);

}  // namespace circlecanon
