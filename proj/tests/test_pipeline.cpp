#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "circlecanon/chord.hpp"
#include "circlecanon/oracle.hpp"
#include "circlecanon/pipeline.hpp"
#include "circlecanon/split.hpp"
#include "circlecanon/treecanon.hpp"
#include "doctest.h"

using namespace circlecanon;

namespace {

ColoredGraph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return ColoredGraph(n, std::move(e));
}

ColoredGraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return ColoredGraph(n, std::move(e));
}

ColoredGraph star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return ColoredGraph(n, std::move(e));
}

// A chord diagram of the n-cycle: chord i occupies positions 2i and
// (2i + 3) mod 2n, so consecutive chords interleave.
CircleRep cycle_rep(int n) {
    std::vector<int> word(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        word[static_cast<std::size_t>(2 * i)] = i;
        word[static_cast<std::size_t>((2 * i + 3) % (2 * n))] = i;
    }
    return CircleRep{n, std::move(word)};
}

CircleRep relabeled(const CircleRep& r, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(r.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CircleRep out{r.n, r.word};
    for (int& l : out.word) l = perm[static_cast<std::size_t>(l)];
    return out;
}

CircleRep rotated(const CircleRep& r, int shift) {
    CircleRep out{r.n, {}};
    out.word.assign(r.word.begin() + shift, r.word.end());
    out.word.insert(out.word.end(), r.word.begin(), r.word.begin() + shift);
    return out;
}

}  // namespace

TEST_CASE("sentinel encodings for K1 and K2") {
    CHECK(canon_connected(CanonInput::from_graph(ColoredGraph(1, {}))) == Encoding{0});
    CHECK(canon_connected(CanonInput::from_graph(ColoredGraph(2, {{0, 1}}))) == Encoding{0, 0});
    CHECK(canon_connected(CanonInput::from_rep(CircleRep{1, {0, 0}})) == Encoding{0});
    CHECK(canon_graph(CanonInput::from_graph(ColoredGraph(0, {}))) == Encoding{0});
}

TEST_CASE("canon_connected frozen anchor: P4") {
    Encoding e = canon_connected(CanonInput::from_graph(path(4)));
    CHECK(e == Encoding{2, 7, 2, 0, 1, 1, 1, 0, 1, 5, 1, 2, 0, 0, 0});
    // The graph-level wrapper length-prefixes the single component.
    Encoding g = canon_graph(CanonInput::from_graph(path(4)));
    Encoding expect{1, static_cast<int>(e.size())};
    expect.insert(expect.end(), e.begin(), e.end());
    CHECK(g == expect);
}

TEST_CASE("canon_connected errors") {
    CHECK_THROWS_AS(canon_connected(CanonInput::from_graph(ColoredGraph(0, {}))), std::invalid_argument);
    CHECK_THROWS_AS(canon_connected(CanonInput::from_graph(ColoredGraph(4, {{0, 1}, {2, 3}}))),
                    std::invalid_argument);
    CHECK_THROWS_AS(canon_connected(CanonInput{}), std::invalid_argument);
    // Graph and rep must agree when both are given.
    CHECK_THROWS_AS(canon_connected(CanonInput::from_both(path(4), cycle_rep(4))), std::invalid_argument);
}

TEST_CASE("graph-only canonization recognizes small primes") {
    // C5..C10 are prime and within the recognition limit.
    for (int n = 5; n <= 10; ++n) {
        Encoding from_graph = canon_connected(CanonInput::from_graph(cycle(n)));
        Encoding from_rep = canon_connected(CanonInput::from_rep(cycle_rep(n)));
        CHECK(from_graph == from_rep);
    }
}

TEST_CASE("large rep-less prime nodes are rejected with their size") {
    try {
        canon_connected(CanonInput::from_graph(cycle(12)));
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("12") != std::string::npos);
    }
    // The same graph with a representation sails through.
    Encoding e = canon_connected(CanonInput::from_both(cycle(12), cycle_rep(12)));
    CHECK(e == canon_connected(CanonInput::from_rep(cycle_rep(12))));
}

TEST_CASE("isomorphic worked examples") {
    CHECK(isomorphic(CanonInput::from_rep(parse_rep({0, 1, 0, 1}).rep),
                     CanonInput::from_rep(parse_rep({5, 9, 5, 9}).rep)));
    CHECK_FALSE(isomorphic(CanonInput::from_graph(path(4)), CanonInput::from_graph(star(4))));
    // Relabeled P4.
    CHECK(isomorphic(CanonInput::from_graph(path(4)),
                     CanonInput::from_graph(ColoredGraph(4, {{2, 0}, {0, 3}, {3, 1}}))));
}

TEST_CASE("encodings are invariant under diagram symmetries") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + static_cast<int>(rng() % 10);
        CircleRep r = random_rep(n, rng());
        Encoding base = canon_graph(CanonInput::from_rep(r));
        CHECK(canon_graph(CanonInput::from_rep(rotated(r, 1 + static_cast<int>(rng() % (2 * n - 1))))) ==
              base);
        CHECK(canon_graph(CanonInput::from_rep(reverse_rep(r))) == base);
        CHECK(canon_graph(CanonInput::from_rep(relabeled(r, rng))) == base);
    }
}

TEST_CASE("component multiset determines the encoding") {
    // Two components in either vertex order.
    ColoredGraph a(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}});  // K3 then P4
    ColoredGraph b(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 4}});  // P4 then K3
    Encoding ea = canon_graph(CanonInput::from_graph(a));
    CHECK(ea == canon_graph(CanonInput::from_graph(b)));
    CHECK(ea[0] == 2);

    // Multiplicity matters.
    CHECK_FALSE(isomorphic(CanonInput::from_graph(ColoredGraph(1, {})),
                           CanonInput::from_graph(ColoredGraph(2, {}))));

    // A disconnected diagram splits into per-component diagrams.
    CircleRep two{4, {0, 1, 0, 1, 2, 3, 2, 3}};
    CHECK(canon_graph(CanonInput::from_rep(two))[0] == 2);
    CHECK(isomorphic(CanonInput::from_rep(two),
                     CanonInput::from_graph(ColoredGraph(4, {{0, 1}, {2, 3}}))));
}

TEST_CASE("seed order does not change the encoding") {
    std::mt19937_64 rng(18);
    for (int it = 0; it < 15; ++it) {
        int n = 4 + static_cast<int>(rng() % 8);
        CircleRep r = random_rep(n, rng());
        CanonInput in = CanonInput::from_rep(r);
        Encoding base = canon_graph(in);
        for (int round = 0; round < 3; ++round) {
            std::vector<int> order(static_cast<std::size_t>(n));
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(canon_graph(in, &order) == base);
        }
    }
}

TEST_CASE("canonization round-trips through decode") {
    std::mt19937_64 rng(19);
    int done = 0;
    for (int it = 0; it < 200 && done < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        CircleRep r = random_rep(n, rng());
        ColoredGraph g = interleaving_graph(r);
        if (!is_connected(g)) continue;
        ++done;
        Encoding e = canon_connected(CanonInput::from_rep(r));
        ColoredGraph back = join_all(decode(e));
        REQUIRE(back.n == g.n);
        CHECK(brute_iso(back, g));
        // Re-canonizing the rebuilt graph is a fixed point.
        CHECK(canon_connected(CanonInput::from_graph(back)) == e);
    }
    REQUIRE(done >= 40);
}

TEST_CASE("agreement with the brute-force oracle on small diagrams") {
    std::mt19937_64 rng(20);
    std::vector<std::pair<CircleRep, ColoredGraph>> pool;
    for (int it = 0; it < 30; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        CircleRep r = random_rep(n, rng());
        ColoredGraph g = interleaving_graph(r);
        if (is_connected(g)) pool.emplace_back(std::move(r), std::move(g));
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (pool[i].second.n != pool[j].second.n) continue;
            bool fast = isomorphic(CanonInput::from_rep(pool[i].first),
                                   CanonInput::from_rep(pool[j].first));
            CHECK(fast == brute_iso(pool[i].second, pool[j].second));
        }
}
