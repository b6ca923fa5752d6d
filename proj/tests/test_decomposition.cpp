#include <random>
#include <set>

#include "doctest.h"
#include "symrig/decomposition.hpp"
#include "symrig/enumeration.hpp"
#include "symrig/rng.hpp"
#include "test_helpers.hpp"

using namespace symrig;
using namespace symrig::testing;

TEST_CASE("nice decomposition of the tree-plus-loops graph") {
    const auto g = ref_graph(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    const auto nd = nice_decompose(g);
    CHECK(nd.tree_edges == std::vector<int>{0});
    REQUIRE(nd.map_parts.size() == 2);
    CHECK(nd.map_parts[0].base_vertex == 0);
    CHECK(nd.map_parts[1].base_vertex == 1);
    CHECK(nd.map_parts[0].cycle_gain == 1);
    CHECK(equivalent_colorings(g, nd.recolored));

    // partition covers every edge exactly once
    std::set<int> seen(nd.tree_edges.begin(), nd.tree_edges.end());
    for (const auto& mc : nd.map_parts) seen.insert(mc.edges.begin(), mc.edges.end());
    CHECK(seen.size() == static_cast<std::size_t>(g.edge_count()));
}

TEST_CASE("nice decomposition of the lone loop has an empty tree") {
    const auto g = ref_graph(1, {{0, 0, 1}});
    const auto nd = nice_decompose(g);
    CHECK(nd.tree_edges.empty());
    REQUIRE(nd.map_parts.size() == 1);
    CHECK(nd.map_parts[0].base_vertex == 0);
}

TEST_CASE("nice decomposition rejects the wrong class") {
    CHECK_THROWS_AS(nice_decompose(rot_graph(1, 2, {{0, 0, 1}, {0, 0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("cone decomposition splits into two spanning map graphs") {
    const auto g2 = rot_graph(1, 2, {{0, 0, 1}, {0, 0, 1}});
    const auto cd2 = cone_decompose(g2);
    REQUIRE(cd2.x_parts.size() == 1);
    REQUIRE(cd2.y_parts.size() == 1);
    CHECK(cd2.x_parts[0].base_vertex == 0);
    CHECK(cd2.y_parts[0].base_vertex == 0);

    const auto g3 = rot_graph(1, 3, {{0, 0, 1}, {0, 0, 2}});
    const auto cd3 = cone_decompose(g3);
    CHECK(cd3.x_parts.size() == 1);
    CHECK(cd3.y_parts.size() == 1);

    const auto k4 = rot_graph(4, 2,
                              {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}, {2, 3, 0}});
    ColoredGraph padded = k4;
    padded.add_edge(0, 1, 0);
    padded.add_edge(2, 3, 0);
    CHECK_THROWS_AS(cone_decompose(padded), std::invalid_argument);
}

TEST_CASE("overlap graph of one vertex with two loops is a two-cycle") {
    const auto g = rot_graph(1, 2, {{0, 0, 1}, {0, 0, 1}});
    const auto og = overlap_graph(g, cone_decompose(g));
    REQUIRE(og.nodes.size() == 2);
    CHECK(og.in_source[0] == 1);
    CHECK(og.in_source[1] == 0);
    REQUIRE(og.cycles.size() == 1);
    CHECK(og.cycles[0].size() == 2);
}

TEST_CASE("overlap graph of a disjoint union has one cycle per component") {
    // two vertices, two loops each; nothing joins them
    const auto g = rot_graph(2, 2, {{0, 0, 1}, {0, 0, 1}, {1, 1, 1}, {1, 1, 1}});
    const auto cd = cone_decompose(g);
    const auto og = overlap_graph(g, cd);
    CHECK(og.nodes.size() == 4);
    CHECK(og.cycles.size() == 2);
    for (const auto& cycle : og.cycles) CHECK(cycle.size() == 2);
}

TEST_CASE("overlap graph invariants on random cone-(2,2) graphs") {
    std::mt19937_64 rng(211);
    int found = 0;
    for (int trial = 0; trial < 300 && found < 30; ++trial) {
        const int n = 1 + static_cast<int>(uniform_int(rng, 0, 3));
        const int k = 2 + static_cast<int>(uniform_int(rng, 0, 3));
        const auto g = random_class_member(rng, SparsityClass::Cone22, n, k, GroupKind::Rotation, 100);
        if (!g) continue;
        ++found;
        const auto cd = cone_decompose(*g);
        const auto og = overlap_graph(*g, cd);
        // in-degree exactly one, paths reach every node from a cycle
        std::vector<int> indeg(og.nodes.size(), 0);
        for (const auto& [from, to] : og.edges) {
            (void)from;
            indeg[to] += 1;
        }
        for (int d : indeg) CHECK(d == 1);
        for (std::size_t node = 0; node < og.nodes.size(); ++node) {
            const auto& path = og.path_from_cycle[node];
            REQUIRE_FALSE(path.empty());
            CHECK(path.back() == static_cast<int>(node));
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                CHECK(og.in_source[path[i + 1]] == path[i]);
        }
        CHECK_FALSE(og.cycles.empty());
    }
    CHECK(found > 0);
}

TEST_CASE("map components carry a closed cycle walk with the right gain") {
    const auto g = ref_graph(2, {{0, 1, 0}, {0, 1, 1}});
    const auto comps = map_components(g, all_edge_ids(g));
    REQUIRE(comps.size() == 1);
    const auto cg = make_cycle_gain(g, comps[0].cycle_edges, comps[0].cycle_signs);
    CHECK(cg.gain == comps[0].cycle_gain);
    CHECK(cg.gain == 1);
}

TEST_CASE("nice decomposition verifies lift structure on random members") {
    std::mt19937_64 rng(223);
    int found = 0;
    for (int trial = 0; trial < 300 && found < 30; ++trial) {
        const int n = 1 + static_cast<int>(uniform_int(rng, 0, 4));
        const auto g =
            random_class_member(rng, SparsityClass::Reflection22, n, 2, GroupKind::Reflection, 100);
        if (!g) continue;
        ++found;
        const auto nd = nice_decompose(*g);  // throws when the lift claims fail
        for (int e : nd.tree_edges) CHECK(nd.recolored.edges[e].color == 0);
        for (const auto& mc : nd.map_parts) {
            CHECK(mc.cycle_gain != 0);
            bool base_on_cycle = false;
            for (int e : mc.cycle_edges) {
                const auto& ed = nd.recolored.edges[e];
                if (ed.tail == mc.base_vertex || ed.head == mc.base_vertex) base_on_cycle = true;
            }
            CHECK(base_on_cycle);
        }
    }
    CHECK(found > 0);
}
