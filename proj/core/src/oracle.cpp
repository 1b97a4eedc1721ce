#include "circlecanon/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace circlecanon {

namespace {

// Adjacency rows as bitmasks; independent of ColoredGraph::has_edge.
std::vector<std::uint16_t> adjacency_rows(const ColoredGraph& g) {
    std::vector<std::uint16_t> rows(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
        rows[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        rows[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    }
    return rows;
}

std::vector<int> mask_to_vertices(unsigned mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

}  // namespace

bool brute_iso(const ColoredGraph& g, const ColoredGraph& h) {
    if (g.n > 9 || h.n > 9)
        throw std::invalid_argument("brute_iso handles at most 9 vertices");
    if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
    const int n = g.n;
    auto mg = adjacency_rows(g);
    auto mh = adjacency_rows(h);
    std::vector<int> dg(static_cast<std::size_t>(n)), dh(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        dg[static_cast<std::size_t>(v)] = std::popcount(mg[static_cast<std::size_t>(v)]);
        dh[static_cast<std::size_t>(v)] = std::popcount(mh[static_cast<std::size_t>(v)]);
    }
    // Quick reject on the (degree, color) multisets.
    std::vector<std::pair<int, int>> pg, ph;
    for (int v = 0; v < n; ++v) {
        pg.emplace_back(dg[static_cast<std::size_t>(v)], g.colors[static_cast<std::size_t>(v)]);
        ph.emplace_back(dh[static_cast<std::size_t>(v)], h.colors[static_cast<std::size_t>(v)]);
    }
    std::sort(pg.begin(), pg.end());
    std::sort(ph.begin(), ph.end());
    if (pg != ph) return false;

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> place = [&](int u) -> bool {
        if (u == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (g.colors[static_cast<std::size_t>(u)] != h.colors[static_cast<std::size_t>(v)]) continue;
            if (dg[static_cast<std::size_t>(u)] != dh[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int w = 0; w < u; ++w) {
                bool eg = (mg[static_cast<std::size_t>(u)] >> w) & 1u;
                bool eh = (mh[static_cast<std::size_t>(v)] >> image[static_cast<std::size_t>(w)]) & 1u;
                if (eg != eh) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[static_cast<std::size_t>(v)] = true;
            image[static_cast<std::size_t>(u)] = v;
            if (place(u + 1)) return true;
            used[static_cast<std::size_t>(v)] = false;
            image[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    };
    return place(0);
}

std::vector<int> brute_min_rotation(const std::vector<int>& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    const int n = static_cast<int>(w.size());
    std::vector<int> best;
    std::vector<int> rot(w.size());
    for (int s = 0; s < n; ++s) {
        for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>((s + i) % n)];
        if (s == 0 || rot < best) best = rot;
    }
    return best;
}

std::vector<Split> brute_splits(const ColoredGraph& g) {
    if (g.n > 7) throw std::invalid_argument("brute_splits handles at most 7 vertices");
    const int n = g.n;
    auto rows = adjacency_rows(g);
    const unsigned all = (1u << n) - 1u;
    std::vector<Split> out;
    for (unsigned mask = 0; mask <= all; ++mask) {
        int size = std::popcount(mask);
        if (size < 2 || size > n - 2) continue;
        unsigned comp = all & ~mask;
        unsigned nb_in = 0, nb_out = 0;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) nb_in |= rows[static_cast<std::size_t>(v)];
            if (comp & (1u << v)) nb_out |= rows[static_cast<std::size_t>(v)];
        }
        unsigned a = mask & nb_out;   // inside vertices seen from outside
        unsigned b = comp & nb_in;    // outside vertices seen from inside
        if (!a || !b) continue;       // no cut edges at all
        bool complete = true;
        for (int v = 0; v < n && complete; ++v)
            if (a & (1u << v))
                complete = (rows[static_cast<std::size_t>(v)] & b) == b;
        if (!complete) continue;
        Split s;
        s.A = mask_to_vertices(a);
        s.B = mask_to_vertices(b);
        s.A_prime = mask_to_vertices(mask & ~a);
        s.B_prime = mask_to_vertices(comp & ~b);
        out.push_back(std::move(s));
    }
    return out;
}

std::optional<CircleRep> brute_find_rep(const ColoredGraph& g) {
    if (g.n > 10) throw std::invalid_argument("brute_find_rep handles at most 10 vertices");
    const int n = g.n;
    if (n == 0) return CircleRep{0, {}};
    auto rows = adjacency_rows(g);
    const int len = 2 * n;
    std::vector<int> word(static_cast<std::size_t>(len), -1);
    std::vector<int> open_pos(static_cast<std::size_t>(n), -1);
    std::vector<int> open_stack;  // chords currently open, in opening order
    unsigned opened = 0, closed = 0;

    // A pair is decided at the earlier close (when both lifetimes overlap)
    // or at the later open (when they do not); each check below covers one
    // of those two moments, so every chord pair is tested exactly once.
    std::function<bool(int)> extend = [&](int pos) -> bool {
        if (pos == len) return true;
        if (static_cast<int>(open_stack.size()) > len - pos) return false;
        // Close one of the open chords.
        for (std::size_t k = 0; k < open_stack.size(); ++k) {
            int y = open_stack[k];
            bool ok = true;
            for (int z : open_stack) {
                if (z == y) continue;
                bool adjacent = (rows[static_cast<std::size_t>(y)] >> z) & 1u;
                bool opened_after = open_pos[static_cast<std::size_t>(z)] > open_pos[static_cast<std::size_t>(y)];
                if (adjacent != opened_after) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            word[static_cast<std::size_t>(pos)] = y;
            open_stack.erase(open_stack.begin() + static_cast<std::ptrdiff_t>(k));
            closed |= 1u << y;
            if (extend(pos + 1)) return true;
            closed &= ~(1u << y);
            open_stack.insert(open_stack.begin() + static_cast<std::ptrdiff_t>(k), y);
            word[static_cast<std::size_t>(pos)] = -1;
        }
        // Open a new chord; a fully closed chord can no longer be crossed.
        // Rotating any diagram puts an endpoint of chord 0 first, so
        // position 0 always opens chord 0.
        const int last = (pos == 0) ? 0 : n - 1;
        for (int u = 0; u <= last; ++u) {
            if (opened & (1u << u)) continue;
            if (rows[static_cast<std::size_t>(u)] & closed) continue;
            word[static_cast<std::size_t>(pos)] = u;
            open_pos[static_cast<std::size_t>(u)] = pos;
            open_stack.push_back(u);
            opened |= 1u << u;
            if (extend(pos + 1)) return true;
            opened &= ~(1u << u);
            open_stack.pop_back();
            open_pos[static_cast<std::size_t>(u)] = -1;
            word[static_cast<std::size_t>(pos)] = -1;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    CircleRep r;
    r.n = n;
    r.word = word;
    return r;
}

}  // namespace circlecanon
