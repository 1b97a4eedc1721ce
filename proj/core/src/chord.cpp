#include "circlecanon/chord.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace circlecanon {

namespace {

// Positions of the two endpoints of each chord, first occurrence first.
std::vector<std::pair<int, int>> endpoint_positions(const CircleRep& r) {
    std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(r.n), {-1, -1});
    for (int i = 0; i < 2 * r.n; ++i) {
        int label = r.word[static_cast<std::size_t>(i)];
        if (label < 0 || label >= r.n)
            throw std::invalid_argument("chord label out of range: " + std::to_string(label));
        auto& p = pos[static_cast<std::size_t>(label)];
        if (p.first < 0)
            p.first = i;
        else if (p.second < 0)
            p.second = i;
        else
            throw std::invalid_argument("label occurs more than twice: " + std::to_string(label));
    }
    for (const auto& p : pos)
        if (p.second < 0) throw std::invalid_argument("label missing an endpoint");
    return pos;
}

}  // namespace

ParsedRep parse_rep(const std::vector<int>& tokens) {
    if (tokens.size() % 2 != 0)
        throw std::invalid_argument("representation has odd length");
    ParsedRep out;
    out.rep.n = static_cast<int>(tokens.size() / 2);
    out.rep.word.reserve(tokens.size());
    std::map<int, int> counts;
    for (int t : tokens) {
        if (t < 0) throw std::invalid_argument("negative chord label");
        ++counts[t];
    }
    for (const auto& [label, cnt] : counts)
        if (cnt != 2)
            throw std::invalid_argument("label " + std::to_string(label) + " occurs " +
                                        std::to_string(cnt) + " times (expected 2)");
    int next = 0;
    for (int t : tokens) {
        auto it = out.label_map.find(t);
        if (it == out.label_map.end()) it = out.label_map.emplace(t, next++).first;
        out.rep.word.push_back(it->second);
    }
    return out;
}

ColoredGraph interleaving_graph(const CircleRep& r) {
    auto pos = endpoint_positions(r);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < r.n; ++u) {
        for (int v = u + 1; v < r.n; ++v) {
            auto [a1, a2] = pos[static_cast<std::size_t>(u)];
            auto [b1, b2] = pos[static_cast<std::size_t>(v)];
            // Chords cross iff exactly one endpoint of v lies between the
            // endpoints of u along the word.
            bool inside1 = a1 < b1 && b1 < a2;
            bool inside2 = a1 < b2 && b2 < a2;
            if (inside1 != inside2) edges.emplace_back(u, v);
        }
    }
    return ColoredGraph(r.n, std::move(edges));
}

CircleRep reverse_rep(const CircleRep& r) {
    CircleRep out;
    out.n = r.n;
    out.word.assign(r.word.rbegin(), r.word.rend());
    return out;
}

long long count_crossings(const CircleRep& r) {
    auto pos = endpoint_positions(r);
    // Fenwick tree over word positions; chords are intervals [first, second],
    // and two intervals cross iff they properly overlap.
    std::vector<int> fen(static_cast<std::size_t>(2 * r.n) + 1, 0);
    auto add = [&](int i, int d) {
        for (++i; i <= 2 * r.n; i += i & -i) fen[static_cast<std::size_t>(i)] += d;
    };
    auto query = [&](int i) {  // sum over [0, i]
        int s = 0;
        for (++i; i > 0; i -= i & -i) s += fen[static_cast<std::size_t>(i)];
        return s;
    };
    std::vector<int> opener(static_cast<std::size_t>(2 * r.n), -1);
    for (int v = 0; v < r.n; ++v) opener[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)].second)] = v;
    long long crossings = 0;
    for (int i = 0; i < 2 * r.n; ++i) {
        int closing = opener[static_cast<std::size_t>(i)];
        if (closing < 0) {
            add(i, 1);  // first endpoint: mark open
        } else {
            int a1 = pos[static_cast<std::size_t>(closing)].first;
            // Chords still open that started strictly inside (a1, i).
            crossings += query(i - 1) - query(a1);
            add(a1, -1);
        }
    }
    return crossings;
}

LambdaWord lambda_encoding(const CircleRep& r, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != r.n)
        throw std::invalid_argument("color count does not match chord count");
    for (int c : colors)
        if (c < 0 || c >= r.n)
            throw std::invalid_argument("color out of range 0..n-1: " + std::to_string(c));
    auto pos = endpoint_positions(r);
    const int len = 2 * r.n;
    LambdaWord out;
    out.values.reserve(static_cast<std::size_t>(2 * len));
    for (int i = 0; i < len; ++i) {
        int label = r.word[static_cast<std::size_t>(i)];
        auto [p1, p2] = pos[static_cast<std::size_t>(label)];
        int partner = (i == p1) ? p2 : p1;
        int gap = (partner - i - 1 + len) % len;
        out.values.push_back(gap);
        out.values.push_back(colors[static_cast<std::size_t>(label)] + 2 * r.n - 1);
    }
    return out;
}

int min_rotation_start(const std::vector<int>& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    const int n = static_cast<int>(w.size());
    return min_rotation_start_fn(n, [&](int i) { return w[static_cast<std::size_t>(i >= n ? i - n : i)]; });
}

Rotation min_rotation(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    Rotation out;
    out.start = min_rotation_start(w);
    out.word.reserve(w.size());
    for (int i = 0; i < n; ++i)
        out.word.push_back(w[static_cast<std::size_t>(out.start + i >= n ? out.start + i - n : out.start + i)]);
    return out;
}

Encoding canon_rep(const CircleRep& r, const std::vector<int>& colors) {
    return min_rotation(lambda_encoding(r, colors).values).word;
}

CircleRep random_rep(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one chord");
    std::vector<int> word(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) word[static_cast<std::size_t>(i)] = i / 2;
    std::mt19937_64 rng(seed);
    std::shuffle(word.begin(), word.end(), rng);
    // Renormalize by first occurrence so equal matchings give equal words.
    return parse_rep(word).rep;
}

}  // namespace circlecanon
