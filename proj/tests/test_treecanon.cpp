#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "circlecanon/chord.hpp"
#include "circlecanon/oracle.hpp"
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

ColoredGraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return ColoredGraph(n, std::move(e));
}

GraphLabeledTree minimal_tree(const ColoredGraph& g) {
    GraphLabeledTree t = decompose(g);
    minimalize(t);
    return t;
}

}  // namespace

TEST_CASE("center_root roots a single node at itself") {
    RootedTree rt = center_root(minimal_tree(cycle(5)));
    CHECK(rt.tree.alive_nodes().size() == 1);
    CHECK(rt.root == rt.tree.alive_nodes()[0]);
    CHECK(rt.depth[static_cast<std::size_t>(rt.root)] == 0);
    CHECK(rt.parent[static_cast<std::size_t>(rt.root)] == -1);
}

TEST_CASE("center_root picks the middle of a three-node path") {
    // P5 decomposes into a path of three stars centered at 1, 2, 3.
    RootedTree rt = center_root(minimal_tree(path(5)));
    auto alive = rt.tree.alive_nodes();
    REQUIRE(alive.size() == 3);
    // The root is the star whose center is the middle vertex 2.
    const TreeNode& root = rt.tree.nodes[static_cast<std::size_t>(rt.root)];
    CHECK(rt.tree.verts[static_cast<std::size_t>(root.star_center)].original == 2);
    for (int i : alive)
        CHECK(rt.depth[static_cast<std::size_t>(i)] == (i == rt.root ? 0 : 1));
}

TEST_CASE("center_root subdivides a central edge") {
    // P4's tree is a path of two stars; a synthetic complete node becomes
    // the root and both stars its children.
    GraphLabeledTree t = minimal_tree(path(4));
    REQUIRE(t.alive_nodes().size() == 2);
    RootedTree rt = center_root(t);
    auto alive = rt.tree.alive_nodes();
    REQUIRE(alive.size() == 3);
    const TreeNode& root = rt.tree.nodes[static_cast<std::size_t>(rt.root)];
    CHECK(root.kind == NodeKind::Complete);
    CHECK(root.verts.size() == 2);
    CHECK(root.edges.size() == 1);
    for (int v : root.verts) CHECK(rt.tree.verts[static_cast<std::size_t>(v)].original == -1);
    int children = 0;
    for (int i : alive)
        if (i != rt.root) {
            CHECK(rt.parent[static_cast<std::size_t>(i)] == rt.root);
            CHECK(rt.depth[static_cast<std::size_t>(i)] == 1);
            // up_marker sits in the child, parent_marker in the root.
            CHECK(rt.tree.verts[static_cast<std::size_t>(rt.up_marker[static_cast<std::size_t>(i)])].node == i);
            CHECK(rt.tree.verts[static_cast<std::size_t>(rt.parent_marker[static_cast<std::size_t>(i)])].node ==
                  rt.root);
            ++children;
        }
    CHECK(children == 2);
    rt.tree.validate();
}

TEST_CASE("renumber_colors worked examples") {
    {
        auto [phi, renum] = renumber_colors({1, 1, 1});
        CHECK(phi.phi == std::vector<int>{1});
        CHECK(renum == std::vector<int>{0, 0, 0});
    }
    {
        auto [phi, renum] = renumber_colors({0, 1, 7, 7});
        CHECK(phi.phi == std::vector<int>{0, 1, 7});
        CHECK(renum == std::vector<int>{0, 1, 2, 2});
    }
    {
        auto [phi, renum] = renumber_colors({9, 3});
        CHECK(phi.phi == std::vector<int>{3, 9});
        CHECK(renum == std::vector<int>{1, 0});
    }
    CHECK_THROWS_AS(renumber_colors({-1}), std::invalid_argument);
}

TEST_CASE("canon_node worked examples") {
    CHECK(canon_node(complete(3), {2, 0, 1}, {NodeKind::Complete, -1}, std::nullopt) ==
          Encoding{0, 0, 1, 2});
    ColoredGraph p3(3, {{0, 1}, {0, 2}});
    CHECK(canon_node(p3, {1, 0, 2}, {NodeKind::Star, 0}, std::nullopt) == Encoding{1, 1, 0, 2});
    CHECK_THROWS_AS(canon_node(p3, {1, 0, 2}, {NodeKind::Complete, -1}, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(canon_node(p3, {1, 0, 2}, {NodeKind::Star, 1}, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("canon_node prime orientation invariance") {
    auto rep = brute_find_rep(cycle(5));
    REQUIRE(rep.has_value());
    std::vector<int> colors{0, 1, 2, 3, 4};
    Encoding fwd = canon_node(cycle(5), colors, {NodeKind::Prime, -1}, rep);
    Encoding bwd = canon_node(cycle(5), colors, {NodeKind::Prime, -1}, reverse_rep(*rep));
    CHECK(fwd == bwd);
    CHECK(fwd[0] == 2);

    CHECK_THROWS_AS(canon_node(cycle(5), colors, {NodeKind::Prime, -1}, std::nullopt),
                    std::invalid_argument);
    // validate=true rejects a representation of the wrong graph.
    auto p5rep = brute_find_rep(path(5));
    REQUIRE(p5rep.has_value());
    CHECK_THROWS_AS(canon_node(cycle(5), colors, {NodeKind::Prime, -1}, p5rep), std::invalid_argument);
    CHECK_THROWS_AS(canon_node(cycle(5), {0, 1, 2, 3, 9}, {NodeKind::Prime, -1}, rep),
                    std::invalid_argument);
}

TEST_CASE("canon_tree frozen anchor: K3") {
    RootedTree rt = center_root(minimal_tree(complete(3)));
    CHECK(canon_tree(rt, {}) == Encoding{1, 6, 1, 1, 0, 0, 0, 0});
}

TEST_CASE("canon_tree frozen anchor: P4") {
    RootedTree rt = center_root(minimal_tree(path(4)));
    CHECK(canon_tree(rt, {}) ==
          Encoding{2, 7, 2, 0, 1, 1, 1, 0, 1, 5, 1, 2, 0, 0, 0});
}

TEST_CASE("canon_tree requires a representation for prime nodes") {
    RootedTree rt = center_root(single_prime_tree(5));
    CHECK_THROWS_AS(canon_tree(rt, {}), std::invalid_argument);
    std::map<int, CircleRep> reps{{rt.root, CircleRep{5, {0, 1, 0, 2, 1, 3, 2, 4, 3, 4}}}};
    // validate=false skips the edge comparison (the trusted-tree path).
    Encoding e = canon_tree(rt, reps, false);
    CHECK(e.size() == 2 + 1 + 1 + 1 + 20u);  // header + phi + tag + 4n gap word
}

TEST_CASE("decode sentinels") {
    {
        GraphLabeledTree t = decode({0});
        ColoredGraph g = join_all(t);
        CHECK(g.n == 1);
        CHECK(g.edges.empty());
    }
    {
        GraphLabeledTree t = decode({0, 0});
        ColoredGraph g = join_all(t);
        CHECK(g.n == 2);
        CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});
    }
}

TEST_CASE("decode inverts canon_tree") {
    {
        GraphLabeledTree t = decode(Encoding{1, 6, 1, 1, 0, 0, 0, 0});
        t.validate();
        auto alive = t.alive_nodes();
        REQUIRE(alive.size() == 1);
        CHECK(t.nodes[static_cast<std::size_t>(alive[0])].kind == NodeKind::Complete);
        CHECK(join_all(t).edges == complete(3).edges);
    }
    {
        GraphLabeledTree t = decode(Encoding{2, 7, 2, 0, 1, 1, 1, 0, 1, 5, 1, 2, 0, 0, 0});
        t.validate();
        REQUIRE(t.alive_nodes().size() == 3);  // synthetic root plus two stars
        CHECK(brute_iso(join_all(t), path(4)));
    }
}

TEST_CASE("decode rejects malformed encodings") {
    CHECK_THROWS_AS(decode({}), std::invalid_argument);
    CHECK_THROWS_AS(decode({1}), std::invalid_argument);
    CHECK_THROWS_AS(decode({1, 2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(decode({1, 4, 1, 1, 3, 0}), std::invalid_argument);  // tag 3
    CHECK_THROWS_AS(decode({1, 6, 1, 1, 0, 0, 0, 0, 9}), std::invalid_argument);  // trailing
    // Root references a color above the table.
    CHECK_THROWS_AS(decode({2, 6, 1, 1, 0, 0, 0, 0, 6, 2, 1, 4, 0, 0, 1}), std::invalid_argument);
    // Color 2 stored but never referenced.
    CHECK_THROWS_AS(decode({2, 6, 1, 1, 0, 0, 0, 0, 6, 1, 1, 0, 0, 0, 0}), std::invalid_argument);
    // Gap out of range.
    CHECK_THROWS_AS(decode({1, 7, 1, 1, 2, 0, 1, 1, 1}), std::invalid_argument);
    // Chord endpoints with mismatched colors.
    CHECK_THROWS_AS(decode({1, 12, 2, 0, 1, 2, 1, 3, 1, 3, 1, 4, 1, 4}), std::invalid_argument);
}

TEST_CASE("derive_node_representation on a single prime node") {
    CircleRep rep{5, {0, 1, 0, 2, 1, 3, 2, 4, 3, 4}};
    RootedTree rt = center_root(single_prime_tree(5));
    CircleRep derived = derive_node_representation(rt, rt.root, rep);
    CHECK(derived.n == 5);
    CHECK(interleaving_graph(derived).edges == interleaving_graph(rep).edges);
}

TEST_CASE("derive_node_representation collapses marker runs") {
    // P4 with diagram [0,1,0,2,1,3,2,3]; the node holding {2,3} sees the
    // subtree {0,1} through one marker.
    RootedTree rt = center_root(minimal_tree(path(4)));
    int node = -1;
    for (int i : rt.tree.alive_nodes())
        for (int v : rt.tree.nodes[static_cast<std::size_t>(i)].verts)
            if (rt.tree.verts[static_cast<std::size_t>(v)].original == 2) node = i;
    REQUIRE(node >= 0);
    CircleRep derived = derive_node_representation(rt, node, CircleRep{4, {0, 1, 0, 2, 1, 3, 2, 3}});
    CHECK(derived.n == 3);
    CHECK(derived.word == std::vector<int>{2, 0, 2, 1, 0, 1});
    std::vector<int> l2g;
    ColoredGraph ng = rt.tree.node_graph(node, &l2g);
    CHECK(interleaving_graph(derived).edges == ng.edges);
}

TEST_CASE("derive_node_representation rejects inconsistent diagrams") {
    RootedTree rt = center_root(minimal_tree(path(4)));
    int node = rt.tree.alive_nodes()[0] == rt.root ? rt.tree.alive_nodes()[1] : rt.tree.alive_nodes()[0];
    // Diagram of a different 4-vertex graph: marker runs collapse to one.
    CHECK_THROWS_AS(derive_node_representation(rt, node, CircleRep{4, {0, 1, 0, 1, 2, 2, 3, 3}}),
                    std::runtime_error);
}
