#include "circlecanon/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace circlecanon {

ColoredGraph::ColoredGraph(int n_, std::vector<std::pair<int, int>> edges_,
                           std::vector<int> colors_)
    : n(n_), edges(std::move(edges_)), colors(std::move(colors_)) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (colors.empty()) colors.assign(static_cast<std::size_t>(std::max(n, 0)), 0);
}

bool ColoredGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> ColoredGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

void validate_graph(const ColoredGraph& g) {
    if (g.n < 0) throw std::invalid_argument("vertex count is negative");
    for (const auto& [u, v] : g.edges) {
        if (u < 0 || u >= g.n || v < 0 || v >= g.n)
            throw std::invalid_argument("edge endpoint out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    for (std::size_t i = 1; i < g.edges.size(); ++i) {
        if (g.edges[i] == g.edges[i - 1])
            throw std::invalid_argument("duplicate edge " + std::to_string(g.edges[i].first) +
                                        " " + std::to_string(g.edges[i].second));
    }
    if (static_cast<int>(g.colors.size()) != g.n)
        throw std::invalid_argument("color count does not match vertex count");
    for (int c : g.colors) {
        if (c < 0) throw std::invalid_argument("negative color");
    }
}

bool is_connected(const ColoredGraph& g) {
    if (g.n <= 1) return true;
    auto adj = g.adjacency();
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == g.n;
}

namespace {

// Radix sort of non-negative 32-bit values, two 16-bit passes.
void radix_sort_values(std::vector<int>& vals) {
    if (vals.size() <= 1) return;
    const std::size_t kBuckets = 1u << 16;
    std::vector<int> tmp(vals.size());
    std::vector<std::uint32_t> count(kBuckets);
    for (int shift : {0, 16}) {
        if (shift == 16) {
            // Skip the high pass when every value fits in the low 16 bits.
            bool needed = false;
            for (int v : vals)
                if (static_cast<std::uint32_t>(v) >> 16) { needed = true; break; }
            if (!needed) break;
        }
        std::fill(count.begin(), count.end(), 0);
        for (int v : vals) ++count[(static_cast<std::uint32_t>(v) >> shift) & 0xffffu];
        std::uint32_t sum = 0;
        for (auto& c : count) {
            std::uint32_t here = c;
            c = sum;
            sum += here;
        }
        for (int v : vals) tmp[count[(static_cast<std::uint32_t>(v) >> shift) & 0xffffu]++] = v;
        vals.swap(tmp);
    }
}

}  // namespace

LexSortResult lex_sort_sequences(const std::vector<Encoding>& seqs) {
    const int nseq = static_cast<int>(seqs.size());
    LexSortResult out;
    out.ranks.assign(static_cast<std::size_t>(nseq), 0);
    if (nseq == 0) return out;
    if (nseq == 1) {  // one sequence ranks itself
        for (int v : seqs[0])
            if (v < 0) throw std::invalid_argument("negative value in sequence");
        out.order.push_back(0);
        return out;
    }

    std::size_t total = 0, maxlen = 0;
    for (const auto& s : seqs) {
        total += s.size();
        maxlen = std::max(maxlen, s.size());
        for (int v : s)
            if (v < 0) throw std::invalid_argument("negative value in sequence");
    }

    // Alphabet compaction: dense-rank every occurring value.  The inputs use
    // a small two-interval alphabet, but dense ranking handles any gaps.
    std::vector<int> all;
    all.reserve(total);
    for (const auto& s : seqs) all.insert(all.end(), s.begin(), s.end());
    radix_sort_values(all);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    const int alpha = static_cast<int>(all.size());

    // Flat per-sequence compacted symbols (one lookup per occurrence).
    std::vector<std::size_t> offset(static_cast<std::size_t>(nseq) + 1, 0);
    for (int i = 0; i < nseq; ++i)
        offset[static_cast<std::size_t>(i) + 1] =
            offset[static_cast<std::size_t>(i)] + seqs[static_cast<std::size_t>(i)].size();
    std::vector<int> sym_flat(total);
    for (int i = 0; i < nseq; ++i) {
        const auto& s = seqs[static_cast<std::size_t>(i)];
        for (std::size_t p = 0; p < s.size(); ++p)
            sym_flat[offset[static_cast<std::size_t>(i)] + p] = static_cast<int>(
                std::lower_bound(all.begin(), all.end(), s[p]) - all.begin());
    }
    auto sym_at = [&](int i, std::size_t p) {
        return sym_flat[offset[static_cast<std::size_t>(i)] + p];
    };

    // For each position, the symbols present there in ascending order
    // (NONEMPTY of the classic algorithm): one stable bucket sort of all
    // (position, symbol) occurrence pairs by symbol.
    std::vector<std::vector<int>> nonempty(maxlen);
    {
        std::vector<std::size_t> by_sym(total);
        std::vector<std::size_t> count(static_cast<std::size_t>(alpha) + 1, 0);
        for (std::size_t i = 0; i < total; ++i) ++count[static_cast<std::size_t>(sym_flat[i]) + 1];
        for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
        for (std::size_t i = 0; i < total; ++i)
            by_sym[count[static_cast<std::size_t>(sym_flat[i])]++] = i;
        std::vector<std::size_t> pos_of(total);
        for (int i = 0; i < nseq; ++i)
            for (std::size_t p = 0; p < seqs[static_cast<std::size_t>(i)].size(); ++p)
                pos_of[offset[static_cast<std::size_t>(i)] + p] = p;
        for (std::size_t idx : by_sym) {
            auto& row = nonempty[pos_of[idx]];
            int sym = sym_flat[idx];
            if (row.empty() || row.back() != sym) row.push_back(sym);
        }
    }

    // Sequences grouped by length; each joins the working list when the scan
    // reaches its last position (shorter sequences sort before extensions).
    std::vector<std::vector<int>> by_len(maxlen + 1);
    for (int i = 0; i < nseq; ++i)
        by_len[seqs[static_cast<std::size_t>(i)].size()].push_back(i);

    std::vector<int> cur, merged;
    cur.reserve(static_cast<std::size_t>(nseq));
    merged.reserve(static_cast<std::size_t>(nseq));
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(alpha));
    for (std::size_t pp = maxlen; pp-- > 0;) {
        const auto& entering = by_len[pp + 1];
        merged.clear();
        merged.insert(merged.end(), entering.begin(), entering.end());
        merged.insert(merged.end(), cur.begin(), cur.end());
        // Stable bucket sort by the symbol at position pp.
        for (int i : merged)
            buckets[static_cast<std::size_t>(sym_at(i, pp))].push_back(i);
        cur.clear();
        for (int sym : nonempty[pp]) {
            auto& b = buckets[static_cast<std::size_t>(sym)];
            cur.insert(cur.end(), b.begin(), b.end());
            b.clear();
        }
    }

    out.order.reserve(static_cast<std::size_t>(nseq));
    out.order.insert(out.order.end(), by_len[0].begin(), by_len[0].end());
    out.order.insert(out.order.end(), cur.begin(), cur.end());

    int rank = 0;
    for (std::size_t i = 0; i < out.order.size(); ++i) {
        if (i > 0 && seqs[static_cast<std::size_t>(out.order[i])] !=
                         seqs[static_cast<std::size_t>(out.order[i - 1])])
            ++rank;
        out.ranks[static_cast<std::size_t>(out.order[i])] = rank;
    }
    return out;
}

}  // namespace circlecanon
